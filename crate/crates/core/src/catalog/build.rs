//! Construction of group lists from abelian groups, dicyclic groups and
//! semidirect products of smaller groups.

use std::collections::BTreeMap;

use crate::aut::automorphism_group;
use crate::error::{Error, Result};
use crate::group::{abelian_groups_of_order, isomorphic, FiniteGroup, GroupInvariants};
use crate::hom::homomorphisms;

use super::known_group_count;

/// `N ⋊ K` with `(a, k)(b, l) = (a·φ_k(b), kl)`, encoded as `a·|K| + k`.
/// `action[k]` is the image array of `φ_k`.
pub fn semidirect_product(n: &FiniteGroup, k: &FiniteGroup, action: &[Vec<u32>], label: &str) -> FiniteGroup {
    let (sn, sk) = (n.order(), k.order());
    let order = sn * sk;
    let mut table = vec![0u32; order * order];
    for a in 0..sn {
        for (x, phi) in action.iter().enumerate().take(sk) {
            let row = (a * sk + x) * order;
            for b in 0..sn {
                let ab = n.mul(a as u32, phi[b]) as usize;
                for y in 0..sk {
                    table[row + b * sk + y] = (ab * sk + k.mul(x as u32, y as u32) as usize) as u32;
                }
            }
        }
    }
    FiniteGroup::from_trusted(order, table, label)
}

/// The dicyclic group of order `4m`, `<x, y | x^{2m}, y² = x^m, y⁻¹xy = x⁻¹>`.
/// `x^i y^j` is encoded as `2m·j + i`.
pub fn dicyclic(m: usize) -> FiniteGroup {
    assert!(m >= 1);
    let c = 2 * m;
    let order = 2 * c;
    let mut table = vec![0u32; order * order];
    for p in 0..order {
        let (j, i) = (p / c, p % c);
        for q in 0..order {
            let (l, k) = (q / c, q % c);
            let (e, t) = if j == 0 {
                (i + k, l)
            } else if l == 0 {
                (i + c - k, 1)
            } else {
                (i + c - k + m, 0)
            };
            table[p * order + q] = (t * c + e % c) as u32;
        }
    }
    FiniteGroup::from_trusted(order, table, format!("{order}/Dic{m}"))
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub group: FiniteGroup,
    pub description: String,
}

/// Memoized constructor of one representative per isomorphism type.
///
/// Candidates of order `n` are the abelian groups, the dicyclic group when
/// `4 | n`, and `N ⋊ K` for every factorization `n = |N|·|K|`, every `N`, `K`
/// already built and every homomorphism `K → Aut(N)`. The result is checked
/// against [`known_group_count`] where available.
#[derive(Debug, Default)]
pub struct CatalogBuilder {
    memo: BTreeMap<usize, Vec<Construction>>,
}

impl CatalogBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn groups(&mut self, n: usize) -> Result<&[Construction]> {
        if !self.memo.contains_key(&n) {
            for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
                self.groups(d)?;
            }
            let built = self.build(n)?;
            self.memo.insert(n, built);
        }
        Ok(&self.memo[&n])
    }

    fn build(&self, n: usize) -> Result<Vec<Construction>> {
        let mut found: Vec<(GroupInvariants, Construction)> = Vec::new();
        let mut offer = |g: FiniteGroup, description: String| {
            let inv = GroupInvariants::of(&g);
            if !found.iter().any(|(i, c)| *i == inv && isomorphic(&c.group, &g)) {
                found.push((inv, Construction { group: g, description }));
            }
        };
        for g in abelian_groups_of_order(n) {
            let desc = g.id_label().split('/').nth(1).unwrap_or("C1").replace('x', " x ");
            offer(g, desc);
        }
        if n.is_multiple_of(4) && n >= 8 {
            offer(dicyclic(n / 4), format!("dicyclic of order {n}"));
        }
        for dn in (2..n).filter(|d| n.is_multiple_of(*d)) {
            let dk = n / dn;
            for nc in &self.memo[&dn] {
                let aut = automorphism_group(&nc.group)?;
                let m = aut.order();
                let mut aut_table = Vec::with_capacity(m * m);
                for a in 0..m as u32 {
                    for b in 0..m as u32 {
                        aut_table.push(aut.mul(a, b));
                    }
                }
                let aut_as_group = FiniteGroup::from_trusted(m, aut_table, "aut");
                for kc in &self.memo[&dk] {
                    for hom in homomorphisms(&kc.group, &aut_as_group) {
                        let trivial = hom.iter().all(|&h| h == aut.identity());
                        if trivial && nc.group.is_abelian() && kc.group.is_abelian() {
                            continue;
                        }
                        let action: Vec<Vec<u32>> = hom.iter().map(|&h| aut.element(h).images().to_vec()).collect();
                        let g = semidirect_product(&nc.group, &kc.group, &action, "");
                        let desc = if trivial {
                            format!("{} x {}", nc.group.id_label(), kc.group.id_label())
                        } else {
                            let kernel = hom.iter().filter(|&&h| h == aut.identity()).count();
                            format!(
                                "{} : {}, action kernel of order {kernel}",
                                nc.group.id_label(),
                                kc.group.id_label()
                            )
                        };
                        offer(g, desc);
                    }
                }
            }
        }
        let mut abelian = Vec::new();
        let mut rest = Vec::new();
        for (_, c) in found {
            if c.group.is_abelian() {
                abelian.push(c);
            } else {
                rest.push(c);
            }
        }
        for (k, c) in rest.iter_mut().enumerate() {
            c.group = c.group.clone().with_label(format!("{n}/x{}", k + 1));
        }
        abelian.extend(rest);
        if let Some(k) = known_group_count(n) {
            if abelian.len() != k {
                return Err(Error::IncompleteCatalog(n));
            }
        }
        Ok(abelian)
    }
}
