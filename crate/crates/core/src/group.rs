//! Finite groups stored as Cayley tables over the carrier `0..n`.
//!
//! The identity is always element `0`. Tables are validated on construction
//! and immutable afterwards, so a [`FiniteGroup`] can be shared freely.

use std::fmt;

use crate::error::{Error, Result};
use crate::hom::{self, Presentation};

/// Index of an element in the carrier `0..n` of a [`FiniteGroup`].
pub type GroupElement = u32;

/// A finite group given by its multiplication table, identity at index 0.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    id_label: String,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("id_label", &self.id_label)
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a flat row-major table already known to be valid
    /// with identity 0.
    pub(crate) fn from_trusted(order: usize, table: Vec<u32>, id_label: impl Into<String>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inv = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inv[a] = row.iter().position(|&x| x == 0).expect("row without identity") as u32;
        }
        FiniteGroup {
            order,
            table,
            inv,
            id_label: id_label.into(),
        }
    }

    /// Validates a square table and returns the group it describes.
    ///
    /// If the identity is not at index 0 the carrier is relabeled by swapping
    /// the identity with 0.
    pub fn from_table(table: &[Vec<usize>], id_label: &str) -> Result<Self> {
        validate_group_table(table, id_label)
    }

    /// The cyclic group `Z/n` with `a * b = (a + b) mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(((a + b) % n) as u32);
            }
        }
        FiniteGroup::from_trusted(n, table, format!("{n}/C{n}"))
    }

    pub fn trivial() -> Self {
        FiniteGroup::cyclic(1)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn id_label(&self) -> &str {
        &self.id_label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.id_label = label.into();
        self
    }

    #[inline]
    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: GroupElement) -> GroupElement {
        self.inv[a as usize]
    }

    /// Row-major flat Cayley table.
    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> {
        0..self.order as u32
    }

    pub fn is_abelian(&self) -> bool {
        is_abelian(self)
    }

    pub fn element_order(&self, a: GroupElement) -> usize {
        element_order(self, a)
    }

    /// Orders of all elements, indexed by element.
    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|a| self.element_order(a)).collect()
    }

    /// Sorted list of `(element order, multiplicity)`.
    pub fn order_histogram(&self) -> Vec<(usize, usize)> {
        let mut orders = self.element_orders();
        orders.sort_unstable();
        let mut hist: Vec<(usize, usize)> = Vec::new();
        for o in orders {
            match hist.last_mut() {
                Some((k, c)) if *k == o => *c += 1,
                _ => hist.push((o, 1)),
            }
        }
        hist
    }

    pub fn center_size(&self) -> usize {
        self.elements()
            .filter(|&a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
            .count()
    }

    pub fn exponent(&self) -> usize {
        self.element_orders().into_iter().fold(1, lcm)
    }

    /// The subgroup generated by `gens`, as a sorted element list.
    pub fn subgroup_generated(&self, gens: &[GroupElement]) -> Vec<GroupElement> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut out = vec![0u32];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// A small generating set, picked greedily by largest element order.
    pub fn generators(&self) -> Vec<GroupElement> {
        hom::greedy_generators(self)
    }
}

/// Checks every group axiom and returns the normalized group.
pub fn validate_group_table(table: &[Vec<usize>], id_label: &str) -> Result<FiniteGroup> {
    let n = table.len();
    if n == 0 || table.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare);
    }
    for (a, row) in table.iter().enumerate() {
        for (b, &x) in row.iter().enumerate() {
            if x >= n {
                return Err(Error::NotClosed(a, b, x));
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or(Error::NoIdentity)?;

    // Swap labels e <-> 0 so the identity sits at index 0.
    let relabel = |x: usize| {
        if x == e {
            0
        } else if x == 0 {
            e
        } else {
            x
        }
    };
    let mut flat = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            flat[relabel(a) * n + relabel(b)] = relabel(table[a][b]) as u32;
        }
    }
    let at = |a: usize, b: usize| flat[a * n + b] as usize;

    for a in 0..n {
        if !(0..n).any(|b| at(a, b) == 0 && at(b, a) == 0) {
            return Err(Error::NoInverse(relabel(a)));
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = at(a, b);
            for c in 0..n {
                if at(ab, c) != at(a, at(b, c)) {
                    return Err(Error::NotAssociative(relabel(a), relabel(b), relabel(c)));
                }
            }
        }
    }
    Ok(FiniteGroup::from_trusted(n, flat, id_label))
}

pub fn is_abelian(g: &FiniteGroup) -> bool {
    let n = g.order as u32;
    (0..n).all(|a| (a + 1..n).all(|b| g.mul(a, b) == g.mul(b, a)))
}

pub fn element_order(g: &FiniteGroup, a: GroupElement) -> usize {
    let mut x = a;
    let mut k = 1;
    while x != 0 {
        x = g.mul(x, a);
        k += 1;
    }
    k
}

/// `G x H` with the pair `(a, h)` encoded as `a * |H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (m, k) = (g.order, h.order);
    let n = m * k;
    let mut table = vec![0u32; n * n];
    for a in 0..m {
        for x in 0..k {
            let p = a * k + x;
            for b in 0..m {
                let ab = g.table[a * m + b] as usize;
                for y in 0..k {
                    let xy = h.table[x * k + y] as usize;
                    table[p * n + b * k + y] = (ab * k + xy) as u32;
                }
            }
        }
    }
    FiniteGroup::from_trusted(n, table, format!("{}x{}", g.id_label, h.id_label))
}

/// One representative per isomorphism type of abelian group of order `n`.
///
/// Types are indexed by one partition of each prime exponent; partitions run
/// in lexicographically descending order with the smallest prime varying
/// slowest. Each group is built in invariant-factor form.
pub fn abelian_groups_of_order(n: usize) -> Vec<FiniteGroup> {
    assert!(n >= 1);
    let factors = factorize(n as u64);
    let per_prime: Vec<Vec<Vec<u32>>> = factors.iter().map(|&(_, e)| partitions(e)).collect();

    let mut out = Vec::new();
    let mut choice = vec![0usize; factors.len()];
    loop {
        // Invariant factors: the i-th largest prime-power parts multiply together.
        let width = choice
            .iter()
            .enumerate()
            .map(|(i, &c)| per_prime[i][c].len())
            .max()
            .unwrap_or(0);
        let mut inv_factors = vec![1usize; width];
        for (i, &c) in choice.iter().enumerate() {
            let p = factors[i].0 as usize;
            for (j, &e) in per_prime[i][c].iter().enumerate() {
                inv_factors[width - 1 - j] *= p.pow(e);
            }
        }
        let inv_factors: Vec<usize> = if inv_factors.is_empty() { vec![1] } else { inv_factors };
        let mut grp = FiniteGroup::cyclic(inv_factors[0]);
        for &f in &inv_factors[1..] {
            grp = direct_product(&grp, &FiniteGroup::cyclic(f));
        }
        let name: Vec<String> = inv_factors.iter().map(|f| format!("C{f}")).collect();
        out.push(grp.with_label(format!("{n}/{}", name.join("x"))));

        // Odometer over the partition choices, last prime fastest.
        let mut i = choice.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < per_prime[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Partitions of `e` as non-increasing part lists, in lexicographically
/// descending order.
pub fn partitions(e: u32) -> Vec<Vec<u32>> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            rec(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(e, e, &mut Vec::new(), &mut out);
    out
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Cheap isomorphism invariants used for screening.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupInvariants {
    pub order: usize,
    pub abelian: bool,
    pub order_histogram: Vec<(usize, usize)>,
    pub center_size: usize,
}

impl GroupInvariants {
    pub fn of(g: &FiniteGroup) -> Self {
        GroupInvariants {
            order: g.order(),
            abelian: g.is_abelian(),
            order_histogram: g.order_histogram(),
            center_size: g.center_size(),
        }
    }
}

/// Whether `g` and `h` are isomorphic.
///
/// Screens by [`GroupInvariants`] and then backtracks over images of a
/// generating set of `g`.
pub fn isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    if g.order() != h.order() {
        return false;
    }
    if GroupInvariants::of(g) != GroupInvariants::of(h) {
        return false;
    }
    find_isomorphism(g, h).is_some()
}

/// Some isomorphism `g -> h` as an image array, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<u32>> {
    if g.order() != h.order() {
        return None;
    }
    let pres = Presentation::new(g);
    let mut found = None;
    hom::search_maps(g, &pres, h, true, &mut |phi| {
        found = Some(phi.to_vec());
        false
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::s3_rows;

    #[test]
    fn z3_validates() {
        let t: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let g = validate_group_table(&t, "3/1").unwrap();
        assert!(g.is_abelian());
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn missing_inverse_is_rejected() {
        let err = validate_group_table(&[vec![0, 1], vec![1, 1]], "bad").unwrap_err();
        assert_eq!(err, Error::NoInverse(1));
    }

    #[test]
    fn s3_validates_and_is_nonabelian() {
        let rows = s3_rows();
        // brute-force associativity over all 216 triples
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    assert_eq!(rows[rows[a][b]][c], rows[a][rows[b][c]]);
                }
            }
        }
        let g = validate_group_table(&rows, "6/1").unwrap();
        assert!(!g.is_abelian());
        assert_eq!(g.element_order(1), 2);
        assert_eq!(g.element_order(4), 3);
    }

    #[test]
    fn identity_is_relabeled_to_zero() {
        // Z/3 with the identity stored at index 2.
        let t = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = validate_group_table(&t, "3/1").unwrap();
        for b in 0..3 {
            assert_eq!(g.mul(0, b), b);
        }
    }

    #[test]
    fn nonassociative_table_is_rejected() {
        // A Latin square with identity 0 that is not a group (order 5 loop).
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(validate_group_table(&t, "x"), Err(Error::NotAssociative(..))));
    }

    #[test]
    fn out_of_range_entry() {
        assert_eq!(
            validate_group_table(&[vec![0, 1], vec![1, 2]], "x").unwrap_err(),
            Error::NotClosed(1, 1, 2)
        );
    }

    #[test]
    fn orders() {
        let z6 = FiniteGroup::cyclic(6);
        assert_eq!(z6.element_order(0), 1);
        assert_eq!(z6.element_order(1), 6);
        let p = direct_product(&FiniteGroup::cyclic(4), &FiniteGroup::cyclic(2));
        assert_eq!(p.order(), 8);
        assert!(p.is_abelian());
        let orders = p.element_orders();
        assert!(orders.contains(&4));
        assert!(!orders.contains(&8));
    }

    #[test]
    fn klein_four() {
        let v = direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert_eq!(v.exponent(), 2);
        assert!(isomorphic(
            &direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3)),
            &FiniteGroup::cyclic(6)
        ));
        assert!(!isomorphic(&FiniteGroup::cyclic(4), &v));
    }

    #[test]
    fn abelian_counts() {
        assert_eq!(abelian_groups_of_order(4).len(), 2);
        assert_eq!(abelian_groups_of_order(36).len(), 4);
        let g175 = abelian_groups_of_order(175);
        assert_eq!(g175.len(), 2);
        assert_eq!(g175[0].id_label(), "175/C175");
        assert_eq!(g175[1].id_label(), "175/C5xC35");
        assert_eq!(abelian_groups_of_order(1).len(), 1);
        // partition function products
        assert_eq!(abelian_groups_of_order(16).len(), 5);
        assert_eq!(abelian_groups_of_order(72).len(), 6);
        for g in abelian_groups_of_order(24) {
            assert_eq!(g.order(), 24);
            assert!(g.is_abelian());
        }
    }

    #[test]
    fn partitions_descending() {
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(6).len(), 11);
    }

    #[test]
    fn s3_not_abelian_product() {
        assert!(!is_abelian(&validate_group_table(&s3_rows(), "s3").unwrap()));
        assert!(is_abelian(&direct_product(
            &FiniteGroup::cyclic(2),
            &FiniteGroup::cyclic(3)
        )));
    }
}
