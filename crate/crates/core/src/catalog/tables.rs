//! Groups of tiny order by direct Cayley-table search.
//!
//! Every group with an element `g` of order `m` can be labelled so that
//! `g = 1` and right multiplication by `g` cycles the blocks
//! `{km, ..., km + m - 1}`: label the left cosets of `<g>` and number each
//! coset along powers of `g`. Then `x·succ(y) = succ(x·y)`, so each row is
//! fixed by its values on the block starts, and only those are searched.

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::group::{factorize, isomorphic, FiniteGroup, GroupInvariants};

pub const MAX_ENUMERATED_ORDER: usize = 12;

const UNSET: u32 = u32::MAX;

struct BlockSearch {
    n: usize,
    m: usize,
    t: Vec<u32>,
    /// Per row, bitmask of blocks already covered.
    row_blocks: Vec<u32>,
    /// Per column, bitmask of values already used.
    col_vals: Vec<u32>,
}

impl BlockSearch {
    fn new(n: usize, m: usize) -> Self {
        let mut s = BlockSearch {
            n,
            m,
            t: vec![UNSET; n * n],
            row_blocks: vec![0; n],
            col_vals: vec![0; n],
        };
        for i in 0..(n / m) as u32 {
            assert!(s.place(0, i, i * m as u32));
        }
        for x in 1..n as u32 {
            assert!(s.place(x, 0, x));
        }
        s
    }

    #[inline]
    fn succ(&self, x: u32) -> u32 {
        let m = self.m as u32;
        x - x % m + (x % m + 1) % m
    }

    /// Sets row `x` on block `i` so that `x·(i·m) = y`.
    fn place(&mut self, x: u32, i: u32, y: u32) -> bool {
        let (n, m) = (self.n, self.m);
        if self.t[x as usize * n + i as usize * m] != UNSET {
            return self.t[x as usize * n + i as usize * m] == y;
        }
        let blk = y / m as u32;
        if self.row_blocks[x as usize] & (1 << blk) != 0 {
            return false;
        }
        let mut v = y;
        for j in 0..m {
            let c = i as usize * m + j;
            if self.col_vals[c] & (1 << v) != 0 {
                // roll back
                let mut w = y;
                for jj in 0..j {
                    let cc = i as usize * m + jj;
                    self.col_vals[cc] &= !(1 << w);
                    self.t[x as usize * n + cc] = UNSET;
                    w = self.succ(w);
                }
                return false;
            }
            self.col_vals[c] |= 1 << v;
            self.t[x as usize * n + c] = v;
            v = self.succ(v);
        }
        self.row_blocks[x as usize] |= 1 << blk;
        true
    }

    fn unplace(&mut self, x: u32, i: u32) {
        let (n, m) = (self.n, self.m);
        let y = self.t[x as usize * n + i as usize * m];
        let mut v = y;
        for j in 0..m {
            let c = i as usize * m + j;
            self.col_vals[c] &= !(1 << v);
            self.t[x as usize * n + c] = UNSET;
            v = self.succ(v);
        }
        self.row_blocks[x as usize] &= !(1 << (y / m as u32));
    }

    fn associative_so_far(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.t[a * n + b];
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    let bc = self.t[b * n + c];
                    if bc == UNSET {
                        continue;
                    }
                    let l = self.t[ab as usize * n + c];
                    let r = self.t[a * n + bc as usize];
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, cell: usize, visit: &mut dyn FnMut(&[u32])) {
        let blocks = self.n / self.m;
        let cells = (self.n - 1) * (blocks - 1);
        if cell == cells {
            visit(&self.t);
            return;
        }
        let x = (cell / (blocks - 1) + 1) as u32;
        let i = (cell % (blocks - 1) + 1) as u32;
        for y in 0..self.n as u32 {
            if self.place(x, i, y) {
                if self.associative_so_far() {
                    self.run(cell + 1, visit);
                }
                self.unplace(x, i);
            }
        }
    }
}

/// One representative per isomorphism type of group of order `n ≤ 12`.
pub fn enumerate_groups_of_order(n: usize) -> Result<Vec<FiniteGroup>> {
    if n > MAX_ENUMERATED_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    if n <= 1 {
        return Ok(vec![FiniteGroup::trivial().with_label("1/e1")]);
    }
    // Each group is found with m its largest element order, which is at
    // least the largest prime divisor of n.
    let largest_prime = factorize(n as u64).last().map_or(1, |&(p, _)| p as usize);
    let mut reps: Vec<(GroupInvariants, FiniteGroup)> = Vec::new();
    for m in (largest_prime..=n).rev().filter(|m| n.is_multiple_of(*m)) {
        let mut s = BlockSearch::new(n, m);
        if m == n {
            // Row x is fixed entirely by x·0 = x.
            reps_add(&mut reps, s.t.clone(), n);
            continue;
        }
        s.run(0, &mut |t| reps_add(&mut reps, t.to_vec(), n));
    }
    Ok(reps
        .into_iter()
        .enumerate()
        .map(|(k, (_, g))| g.with_label(format!("{n}/e{}", k + 1)))
        .collect())
}

fn reps_add(reps: &mut Vec<(GroupInvariants, FiniteGroup)>, t: Vec<u32>, n: usize) {
    let g = FiniteGroup::from_trusted(n, t, "");
    let inv = GroupInvariants::of(&g);
    if !reps.iter().any(|(i, h)| *i == inv && isomorphic(h, &g)) {
        reps.push((inv, g));
    }
}

/// Advances to the next lexicographic permutation; `false` after the last.
fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every group table on `{0, ..., n-1}` with identity 0, as distinct
/// relabellings of the representatives of each isomorphism type.
pub fn all_group_tables(n: usize) -> Result<Vec<Vec<u32>>> {
    let reps = enumerate_groups_of_order(n)?;
    let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
    for g in &reps {
        let mut perm: Vec<u32> = (0..n as u32).collect();
        loop {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[perm[a] as usize * n + perm[b] as usize] = perm[g.mul(a as u32, b as u32) as usize];
                }
            }
            seen.insert(t);
            if !next_permutation(&mut perm[1..]) {
                break;
            }
        }
    }
    let mut out: Vec<Vec<u32>> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_up_to_12() {
        let expected = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5];
        for n in 1..=12 {
            assert_eq!(
                enumerate_groups_of_order(n).unwrap().len(),
                expected[n - 1],
                "order {n}"
            );
        }
        assert_eq!(enumerate_groups_of_order(13), Err(Error::OrderTooLarge(13)));
    }

    #[test]
    fn labelled_tables() {
        // Σ (n-1)! / |Aut(G)| over isomorphism types.
        assert_eq!(all_group_tables(1).unwrap().len(), 1);
        assert_eq!(all_group_tables(2).unwrap().len(), 1);
        assert_eq!(all_group_tables(3).unwrap().len(), 1);
        assert_eq!(all_group_tables(4).unwrap().len(), 4);
        assert_eq!(all_group_tables(6).unwrap().len(), 120 / 2 + 120 / 6);
        assert_eq!(all_group_tables(8).unwrap().len(), 2760);
    }
}
