//! Skew braces built from regular subgroups.

use std::hash::{Hash, Hasher};

use rustc_hash::FxHasher;

use crate::aut::AutGroup;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement, GroupInvariants};
use crate::hom::{search_maps, Presentation};
use crate::perm::Perm;
use crate::regular::LambdaFunction;

/// A set with two group structures `+` (`add`) and `∘` (`circ`) sharing the
/// identity 0 and satisfying `a∘(b+c) = (a∘b) - a + (a∘c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBrace {
    pub add: FiniteGroup,
    /// Row-major `n × n` table of `∘`.
    pub circ: Vec<u32>,
    /// Hash of the lambda function the brace was built from.
    pub lambda_hash: Option<u64>,
}

impl SkewBrace {
    /// Wraps tables without checking the brace axiom.
    pub fn from_tables(add: FiniteGroup, circ: Vec<u32>) -> Result<Self> {
        let n = add.order();
        if circ.len() != n * n || circ.iter().any(|&x| x as usize >= n) {
            return Err(Error::NotSquare);
        }
        Ok(SkewBrace {
            add,
            circ,
            lambda_hash: None,
        })
    }

    /// `∘ = +`.
    pub fn trivial(add: FiniteGroup) -> Self {
        let circ = add.table().to_vec();
        SkewBrace {
            add,
            circ,
            lambda_hash: None,
        }
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn add_group_id(&self) -> &str {
        self.add.id_label()
    }

    #[inline]
    pub fn plus(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        self.add.mul(a, b)
    }

    #[inline]
    pub fn circ(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        self.circ[a as usize * self.order() + b as usize]
    }

    pub fn is_trivial(&self) -> bool {
        self.circ == self.add.table()
    }
}

fn lambda_hash(lam: &LambdaFunction) -> u64 {
    let mut h = FxHasher::default();
    lam.hash(&mut h);
    h.finish()
}

/// `a ∘ b = a + λ_a(b)`.
pub fn brace_from_transversal(aut: &AutGroup, lam: &LambdaFunction) -> Result<SkewBrace> {
    lam.check_closure(aut)?;
    let g = aut.group();
    let n = g.order();
    let mut circ = Vec::with_capacity(n * n);
    for a in g.elements() {
        let la = lam.at(a);
        circ.extend(g.elements().map(|b| g.mul(a, aut.apply(la, b))));
    }
    Ok(SkewBrace {
        add: g.clone(),
        circ,
        lambda_hash: Some(lambda_hash(lam)),
    })
}

/// Transport of the subgroup structure through `χ: G → 𝒢`, where `χ(g)` is
/// the element of `𝒢 = {(λ_a, a)}` sending `g` to 0.
///
/// Elements of `𝒢` are multiplied as permutations of `G`, composing left to
/// right, and `χ⁻¹(π) = π⁻¹(0)`.
pub fn brace_via_chi(aut: &AutGroup, lam: &LambdaFunction) -> Result<SkewBrace> {
    lam.check_closure(aut)?;
    let g = aut.group();
    let n = g.order();
    let chi = chi_perms(aut, lam);
    let mut circ = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let p = chi[a].compose(&chi[b]);
            circ.push(p.inverse().image(0));
        }
    }
    Ok(SkewBrace {
        add: g.clone(),
        circ,
        lambda_hash: Some(lambda_hash(lam)),
    })
}

/// `χ(g)` for every `g`, as permutations of `G`.
pub fn chi_perms(aut: &AutGroup, lam: &LambdaFunction) -> Vec<Perm> {
    let g = aut.group();
    let mut out: Vec<Option<Perm>> = vec![None; g.order()];
    for a in g.elements() {
        let la = lam.at(a);
        let p = Perm::from_images(g.elements().map(|x| g.mul(a, aut.apply(la, x))).collect());
        // (λ_a, a) sends x to 0 exactly when x = λ_a⁻¹(a⁻¹).
        let x = p.inverse().image(0);
        out[x as usize] = Some(p);
    }
    out.into_iter().map(|p| p.expect("regular subgroup")).collect()
}

fn is_group_with_identity_zero(table: &[u32], n: usize) -> bool {
    if table.len() != n * n || table.iter().any(|&x| x as usize >= n) {
        return false;
    }
    let at = |a: usize, b: usize| table[a * n + b] as usize;
    if (0..n).any(|a| at(0, a) != a || at(a, 0) != a) {
        return false;
    }
    if (0..n).any(|a| !(0..n).any(|b| at(a, b) == 0 && at(b, a) == 0)) {
        return false;
    }
    for a in 0..n {
        for b in 0..n {
            let ab = at(a, b);
            for c in 0..n {
                if at(ab, c) != at(a, at(b, c)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Both tables are groups with identity 0 and the brace axiom holds on all
/// triples.
pub fn verify_skew_brace(b: &SkewBrace) -> bool {
    let n = b.order();
    if !is_group_with_identity_zero(b.add.table(), n) || !is_group_with_identity_zero(&b.circ, n) {
        return false;
    }
    for x in 0..n as u32 {
        let minus_x = b.add.inv(x);
        for y in 0..n as u32 {
            let xy = b.circ(x, y);
            for z in 0..n as u32 {
                let lhs = b.circ(x, b.plus(y, z));
                let rhs = b.plus(b.plus(xy, minus_x), b.circ(x, z));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_left_brace(b: &SkewBrace) -> bool {
    b.add.is_abelian()
}

pub fn multiplicative_group(b: &SkewBrace) -> FiniteGroup {
    FiniteGroup::from_trusted(b.order(), b.circ.clone(), format!("{}/circ", b.add_group_id()))
}

/// Whether some bijection preserves both operations.
pub fn brace_isomorphic(b1: &SkewBrace, b2: &SkewBrace) -> bool {
    find_brace_isomorphism(b1, b2).is_some()
}

/// An image array of a brace isomorphism `b1 → b2`, if one exists.
pub fn find_brace_isomorphism(b1: &SkewBrace, b2: &SkewBrace) -> Option<Vec<u32>> {
    if b1.order() != b2.order() {
        return None;
    }
    if GroupInvariants::of(&b1.add) != GroupInvariants::of(&b2.add) {
        return None;
    }
    let m1 = multiplicative_group(b1);
    let m2 = multiplicative_group(b2);
    if GroupInvariants::of(&m1) != GroupInvariants::of(&m2) {
        return None;
    }
    let n = b1.order() as u32;
    let pres = Presentation::new(&b1.add);
    let mut found = None;
    search_maps(&b1.add, &pres, &b2.add, true, &mut |phi| {
        let ok =
            (0..n).all(|x| (0..n).all(|y| phi[b1.circ(x, y) as usize] == b2.circ(phi[x as usize], phi[y as usize])));
        if ok {
            found = Some(phi.to_vec());
        }
        !ok
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::automorphism_group;
    use crate::group::{direct_product, isomorphic, validate_group_table};
    use crate::holomorph::{HolElement, Holomorph};
    use crate::regular::{aut_orbit_classes, enumerate_transversals};

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n)
    }

    fn s3() -> FiniteGroup {
        validate_group_table(&crate::testutil::s3_rows(), "s3").unwrap()
    }

    fn order_le_8() -> Vec<FiniteGroup> {
        vec![
            z(1),
            z(2),
            z(3),
            z(4),
            direct_product(&z(2), &z(2)),
            z(5),
            z(6),
            s3(),
            z(7),
            z(8),
            direct_product(&z(2), &z(4)),
            direct_product(&z(2), &direct_product(&z(2), &z(2))),
        ]
    }

    #[test]
    fn trivial_brace() {
        let a = automorphism_group(&z(5)).unwrap();
        let b = brace_from_transversal(&a, &LambdaFunction::trivial(5)).unwrap();
        assert!(b.is_trivial());
        assert!(verify_skew_brace(&b));
        assert!(is_left_brace(&b));
        assert!(isomorphic(&multiplicative_group(&b), &b.add));
    }

    #[test]
    fn z4_inversion_on_odd_elements() {
        let a = automorphism_group(&z(4)).unwrap();
        let inv = a.index_of(&Perm::from_images(vec![0, 3, 2, 1])).unwrap();
        let lam = LambdaFunction(vec![0, inv, 0, inv]);
        assert!(enumerate_transversals(&a).contains(&lam));
        let b = brace_from_transversal(&a, &lam).unwrap();
        assert!(!b.is_trivial());
        assert!(verify_skew_brace(&b));
    }

    #[test]
    fn z6_has_brace_with_nonabelian_circle_group() {
        let a = automorphism_group(&z(6)).unwrap();
        let found = enumerate_transversals(&a)
            .iter()
            .map(|l| multiplicative_group(&brace_from_transversal(&a, l).unwrap()))
            .any(|m| isomorphic(&m, &s3()));
        assert!(found);
    }

    #[test]
    fn left_brace_flag() {
        assert!(is_left_brace(&SkewBrace::trivial(z(6))));
        assert!(!is_left_brace(&SkewBrace::trivial(s3())));
    }

    #[test]
    fn corruption_is_detected() {
        let a = automorphism_group(&z(4)).unwrap();
        let inv = a.index_of(&Perm::from_images(vec![0, 3, 2, 1])).unwrap();
        let mut b = brace_from_transversal(&a, &LambdaFunction(vec![0, inv, 0, inv])).unwrap();
        b.circ[5] = (b.circ[5] + 1) % 4;
        assert!(!verify_skew_brace(&b));
    }

    #[test]
    fn bad_lambda_is_rejected() {
        let a = automorphism_group(&z(4)).unwrap();
        let inv = a.index_of(&Perm::from_images(vec![0, 3, 2, 1])).unwrap();
        assert!(brace_from_transversal(&a, &LambdaFunction(vec![0, inv, 0, 0])).is_err());
        assert!(brace_via_chi(&a, &LambdaFunction(vec![0, inv, 0, 0])).is_err());
    }

    #[test]
    fn every_enumerated_brace_satisfies_the_axiom() {
        for g in order_le_8() {
            let a = automorphism_group(&g).unwrap();
            for lam in enumerate_transversals(&a) {
                let b = brace_from_transversal(&a, &lam).unwrap();
                assert!(verify_skew_brace(&b));
                let m = multiplicative_group(&b);
                assert_eq!(m.order(), g.order());
            }
        }
    }

    #[test]
    fn chi_transport_matches_transversal_table() {
        for g in order_le_8() {
            let a = automorphism_group(&g).unwrap();
            for lam in enumerate_transversals(&a) {
                let b1 = brace_from_transversal(&a, &lam).unwrap();
                let b2 = brace_via_chi(&a, &lam).unwrap();
                assert!(verify_skew_brace(&b2));
                assert!(brace_isomorphic(&b1, &b2));
                assert_eq!(b1.circ, b2.circ);
            }
        }
    }

    #[test]
    fn pair_product_transport_gives_the_opposite_operation() {
        // Multiplying χ(a)χ(b) with the pair product yields b ∘ a.
        let g = s3();
        let a = automorphism_group(&g).unwrap();
        let hol = Holomorph::new(&a);
        for lam in enumerate_transversals(&a) {
            let b = brace_from_transversal(&a, &lam).unwrap();
            let chi: Vec<HolElement> = g
                .elements()
                .map(|x| lam.subgroup().into_iter().find(|&e| hol.act(e, x) == 0).unwrap())
                .collect();
            for x in g.elements() {
                for y in g.elements() {
                    let p = hol.product(chi[x as usize], chi[y as usize]);
                    let back = g.elements().find(|&w| hol.act(p, w) == 0).unwrap();
                    assert_eq!(back, b.circ(y, x));
                }
            }
        }
    }

    #[test]
    fn orbits_match_isomorphism_classes() {
        for g in order_le_8() {
            let a = automorphism_group(&g).unwrap();
            let all = enumerate_transversals(&a);
            let classes = aut_orbit_classes(&a, &all);
            let reps: Vec<SkewBrace> = classes
                .iter()
                .map(|c| brace_from_transversal(&a, &c.rep).unwrap())
                .collect();
            for i in 0..reps.len() {
                for j in 0..reps.len() {
                    assert_eq!(brace_isomorphic(&reps[i], &reps[j]), i == j);
                }
            }
            for lam in &all {
                let b = brace_from_transversal(&a, lam).unwrap();
                assert_eq!(reps.iter().filter(|r| brace_isomorphic(&b, r)).count(), 1);
            }
        }
    }

    #[test]
    fn different_additive_groups_are_not_isomorphic() {
        let b1 = SkewBrace::trivial(z(4));
        let b2 = SkewBrace::trivial(direct_product(&z(2), &z(2)));
        assert!(!brace_isomorphic(&b1, &b2));
        assert!(brace_isomorphic(&b1, &b1));
    }
}
