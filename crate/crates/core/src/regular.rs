//! Regular subgroups of `Hol(G)` and their classification.
//!
//! A regular subgroup contains exactly one element with each second
//! coordinate, so it is `{(λ_a, a) : a ∈ G}` for a unique map
//! `λ: G → Aut(G)`. Closure under the holomorph product is the identity
//!
//! ```text
//! λ_a ∘ λ_b = λ_{a·λ_a(b)}        for all a, b
//! ```
//!
//! The search fills cells `λ_a` in ascending order of `a`. Each choice adds a
//! generator `(α, a)` to the subgroup built so far; closing it either fills
//! further cells or hits a cell that already holds a different automorphism,
//! which kills the branch. A completed table is a regular subgroup.
//!
//! `Aut(G)` acts on lambda functions through conjugation by `(β, 1)`:
//! `(β, 1)⁻¹ (λ_a, a) (β, 1) = (β⁻¹λ_aβ, β⁻¹(a))`, so the conjugate has
//! `λ'_x = β⁻¹ λ_{β(x)} β`.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};

use crate::aut::{AutGroup, AutIndex};
use crate::error::{Error, Result};
use crate::group::{factorize, GroupElement};
use crate::holomorph::{action_perm, hol_as_perm_group, HolElement, Holomorph};
use crate::perm::{sylow_subgroup, Perm};

const UNSET: AutIndex = AutIndex::MAX;

/// `lam[a]` is the index of `λ_a` in the canonical automorphism list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaFunction(pub Vec<AutIndex>);

impl LambdaFunction {
    /// The translation subgroup `{(id, g)}`.
    pub fn trivial(n: usize) -> Self {
        LambdaFunction(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn at(&self, a: GroupElement) -> AutIndex {
        self.0[a as usize]
    }

    /// The subgroup `{(λ_a, a)}`, ordered by `a`.
    pub fn subgroup(&self) -> Vec<HolElement> {
        self.0
            .iter()
            .enumerate()
            .map(|(a, &l)| HolElement::new(l, a as GroupElement))
            .collect()
    }

    /// Checks `λ_0 = id` and `λ_a λ_b = λ_{a·λ_a(b)}` for every pair.
    pub fn check_closure(&self, aut: &AutGroup) -> Result<()> {
        let g = aut.group();
        if self.len() != g.order() || self.0.iter().any(|&l| l as usize >= aut.order()) {
            return Err(Error::ClosureViolated(0, 0));
        }
        if self.0[0] != aut.identity() {
            return Err(Error::ClosureViolated(0, 0));
        }
        for a in g.elements() {
            let la = self.at(a);
            for b in g.elements() {
                let c = g.mul(a, aut.apply(la, b));
                if aut.mul(la, self.at(b)) != self.at(c) {
                    return Err(Error::ClosureViolated(a as usize, b as usize));
                }
            }
        }
        Ok(())
    }

    /// `β · λ`, the lambda function of the conjugate subgroup
    /// `{(λ_a, a)}^{(β, 1)}`.
    pub fn act(&self, aut: &AutGroup, beta: AutIndex) -> LambdaFunction {
        let mut out = vec![0; self.len()];
        act_into(aut, beta, &self.0, &mut out);
        LambdaFunction(out)
    }
}

#[inline]
fn act_into(aut: &AutGroup, beta: AutIndex, lam: &[AutIndex], out: &mut [AutIndex]) {
    for (x, slot) in out.iter_mut().enumerate() {
        let bx = aut.apply(beta, x as GroupElement);
        *slot = aut.conjugate(lam[bx as usize], beta);
    }
}

/// The lambda function of a regular subgroup given as a set of elements.
pub fn lambda_of_subgroup(n: usize, sub: &[HolElement]) -> Option<LambdaFunction> {
    let mut lam = vec![UNSET; n];
    for x in sub {
        if std::mem::replace(&mut lam[x.g as usize], x.aut) != UNSET {
            return None;
        }
    }
    lam.iter().all(|&l| l != UNSET).then_some(LambdaFunction(lam))
}

/// One `Aut(G)`-orbit of regular subgroups.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RegularClass {
    /// Lexicographically smallest lambda function in the orbit.
    pub rep: LambdaFunction,
    pub orbit_size: usize,
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Worker threads; 0 uses the ambient rayon pool.
    pub threads: usize,
    /// Upper bound on `|G|` times the number of stored lambda functions.
    pub max_stored_cells: usize,
}

pub const DEFAULT_MAX_STORED_CELLS: usize = 100_000_000;

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            threads: 0,
            max_stored_cells: DEFAULT_MAX_STORED_CELLS,
        }
    }
}

/// Every regular subgroup of `Hol(G)` as a lambda function, sorted.
pub fn enumerate_transversals(aut: &AutGroup) -> Vec<LambdaFunction> {
    let opts = SearchOptions {
        max_stored_cells: usize::MAX,
        ..SearchOptions::default()
    };
    enumerate_restricted(aut, None, &opts).expect("unbounded search")
}

/// As [`enumerate_transversals`], failing with `SearchTooLarge` once the
/// output exceeds the configured budget.
pub fn enumerate_transversals_with(aut: &AutGroup, opts: &SearchOptions) -> Result<Vec<LambdaFunction>> {
    enumerate_restricted(aut, None, opts)
}

/// Runs `f` on a pool with the requested number of threads.
pub(crate) fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
        .install(f)
}

/// Search over lambda functions whose cell `a` may only hold automorphisms
/// `α` with `allowed(a, α)`.
fn enumerate_restricted(
    aut: &AutGroup,
    allowed: Option<&dyn Fn(GroupElement, AutIndex) -> bool>,
    opts: &SearchOptions,
) -> Result<Vec<LambdaFunction>> {
    let g = aut.group();
    let n = g.order();
    let m = aut.order();

    // A cell may hold α only if <(α, a)> acts semiregularly on G.
    let mut domain: Vec<Vec<AutIndex>> = vec![Vec::new(); n];
    let mut mask = vec![false; n * m];
    let mut stamp = vec![0u32; n];
    let mut epoch = 0u32;
    for a in g.elements() {
        for alpha in 0..m as AutIndex {
            if let Some(f) = allowed {
                if !f(a, alpha) {
                    continue;
                }
            }
            epoch += 1;
            let x = HolElement::new(alpha, a);
            let mut cycle_len = None;
            let mut ok = true;
            for start in g.elements() {
                if stamp[start as usize] == epoch {
                    continue;
                }
                let mut len = 0;
                let mut p = start;
                while stamp[p as usize] != epoch {
                    stamp[p as usize] = epoch;
                    len += 1;
                    p = g.mul(x.g, aut.apply(x.aut, p));
                }
                match cycle_len {
                    None => cycle_len = Some(len),
                    Some(l) if l != len => {
                        ok = false;
                        break;
                    }
                    _ => {}
                }
            }
            if ok {
                domain[a as usize].push(alpha);
                mask[a as usize * m + alpha as usize] = true;
            }
        }
    }
    if !mask[0] {
        return Ok(Vec::new());
    }
    let limit = (opts.max_stored_cells / n).max(1);
    let stored = AtomicUsize::new(0);

    let mut root = Search {
        hol: Holomorph::new(aut),
        mask: &mask,
        n,
        m,
        lam: vec![UNSET; n],
        cells: Vec::with_capacity(n),
        gens: Vec::new(),
        stored: &stored,
        limit,
    };
    root.lam[0] = aut.identity();
    root.cells.push(0);

    if n == 1 {
        return Ok(vec![LambdaFunction(vec![aut.identity()])]);
    }
    // Split at cell 1 into independent subtrees.
    let first = &domain[1];
    let mut out: Vec<LambdaFunction> = with_threads(opts.threads, || {
        first
            .par_iter()
            .map(|&alpha| {
                let mut s = root.clone();
                let mut found = Vec::new();
                if s.add_generator(HolElement::new(alpha, 1)) {
                    s.dfs(&domain, &mut found);
                }
                found
            })
            .flatten()
            .collect()
    });
    if stored.load(Ordering::Relaxed) > limit {
        return Err(Error::SearchTooLarge { limit });
    }
    out.sort_unstable();
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    Ok(out)
}

#[derive(Clone)]
struct Search<'a> {
    hol: Holomorph<'a>,
    mask: &'a [bool],
    n: usize,
    m: usize,
    lam: Vec<AutIndex>,
    /// Assigned cells; they are exactly the second coordinates of the
    /// subgroup generated so far.
    cells: Vec<GroupElement>,
    gens: Vec<HolElement>,
    /// Lambda functions found across all workers.
    stored: &'a AtomicUsize,
    limit: usize,
}

impl Search<'_> {
    fn dfs(&mut self, domain: &[Vec<AutIndex>], out: &mut Vec<LambdaFunction>) {
        if self.stored.load(Ordering::Relaxed) > self.limit {
            return;
        }
        let Some(a) = (1..self.n).find(|&a| self.lam[a] == UNSET) else {
            if self.stored.fetch_add(1, Ordering::Relaxed) < self.limit {
                out.push(LambdaFunction(self.lam.clone()));
            }
            return;
        };
        for &alpha in &domain[a] {
            let mark = self.cells.len();
            if self.add_generator(HolElement::new(alpha, a as GroupElement)) {
                self.dfs(domain, out);
            }
            for &c in &self.cells[mark..] {
                self.lam[c as usize] = UNSET;
            }
            self.cells.truncate(mark);
            self.gens.pop();
        }
    }

    #[inline]
    fn element(&self, c: GroupElement) -> HolElement {
        HolElement::new(self.lam[c as usize], c)
    }

    /// Appends the right coset `H·r` of the current subgroup `H`
    /// (`cells[..h_len]`). Any collision means the closure is not semiregular.
    fn add_coset(&mut self, h_len: usize, r: HolElement) -> bool {
        for k in 0..h_len {
            let e = self.hol.product(self.element(self.cells[k]), r);
            if self.lam[e.g as usize] != UNSET || !self.mask[e.g as usize * self.m + e.aut as usize] {
                return false;
            }
            self.lam[e.g as usize] = e.aut;
            self.cells.push(e.g);
        }
        true
    }

    /// Dimino-style closure of `<H, x>`. On failure the caller undoes the
    /// partial assignment.
    fn add_generator(&mut self, x: HolElement) -> bool {
        let h_len = self.cells.len();
        self.gens.push(x);
        if !self.add_coset(h_len, x) {
            return false;
        }
        let mut reps = vec![x];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            for gi in 0..self.gens.len() {
                let e = self.hol.product(r, self.gens[gi]);
                match self.lam[e.g as usize] {
                    UNSET => {
                        if !self.add_coset(h_len, e) {
                            return false;
                        }
                        reps.push(e);
                    }
                    v if v == e.aut => {}
                    _ => return false,
                }
            }
            i += 1;
        }
        true
    }
}

/// Whether `sub` is a regular subgroup: closed, transitive on `G`, and free.
pub fn is_regular(aut: &AutGroup, sub: &[HolElement]) -> Result<bool> {
    let hol = Holomorph::new(aut);
    let n = aut.group().order();
    let set: FxHashSet<HolElement> = sub.iter().copied().collect();
    if !set.contains(&HolElement::identity()) {
        return Err(Error::NotASubgroup);
    }
    for &x in &set {
        for &y in &set {
            if !set.contains(&hol.product(x, y)) {
                return Err(Error::NotASubgroup);
            }
        }
    }
    let mut reached = vec![false; n];
    for &x in &set {
        reached[hol.act(x, 0) as usize] = true;
    }
    let transitive = reached.iter().all(|&r| r);
    let free = set
        .iter()
        .filter(|&&x| x != HolElement::identity())
        .all(|&x| aut.group().elements().all(|g| hol.act(x, g) != g));
    Ok(transitive && free)
}

/// `sub^y = {y⁻¹ x y : x ∈ sub}`, sorted.
pub fn conjugate_subgroup(hol: &Holomorph<'_>, sub: &[HolElement], y: HolElement) -> Vec<HolElement> {
    let mut out: Vec<HolElement> = sub.iter().map(|&x| hol.conjugate(x, y)).collect();
    out.sort_unstable();
    out
}

/// Partitions a complete, sorted list of lambda functions into `Aut(G)`-orbits.
///
/// Panics if an orbit leaves `all`, which means the input was not the full
/// output of [`enumerate_transversals`].
pub fn aut_orbit_classes(aut: &AutGroup, all: &[LambdaFunction]) -> Vec<RegularClass> {
    let index: FxHashMap<&[AutIndex], usize> = all.iter().enumerate().map(|(i, l)| (l.0.as_slice(), i)).collect();
    let mut visited = vec![false; all.len()];
    let mut buf = vec![0; aut.group().order()];
    let mut classes = Vec::new();
    for (i, lam) in all.iter().enumerate() {
        if visited[i] {
            continue;
        }
        let mut size = 0;
        let mut rep = i;
        for beta in 0..aut.order() as AutIndex {
            act_into(aut, beta, &lam.0, &mut buf);
            let j = *index.get(buf.as_slice()).expect("orbit leaves the enumerated set");
            if !visited[j] {
                visited[j] = true;
                size += 1;
                rep = rep.min(j);
            }
        }
        classes.push(RegularClass {
            rep: all[rep].clone(),
            orbit_size: size,
        });
    }
    classes.sort();
    classes
}

/// The full `Aut(G)`-orbit of one lambda function.
pub fn aut_orbit(aut: &AutGroup, lam: &LambdaFunction) -> Vec<LambdaFunction> {
    let mut seen: FxHashSet<Vec<AutIndex>> = FxHashSet::default();
    let mut buf = vec![0; lam.len()];
    for beta in 0..aut.order() as AutIndex {
        act_into(aut, beta, &lam.0, &mut buf);
        if !seen.contains(buf.as_slice()) {
            seen.insert(buf.clone());
        }
    }
    let mut out: Vec<LambdaFunction> = seen.into_iter().map(LambdaFunction).collect();
    out.sort_unstable();
    out
}

/// Output of the Sylow-restricted search.
#[derive(Debug, Clone)]
pub struct SylowEnumeration {
    pub prime: u64,
    pub sylow_order: usize,
    /// Regular subgroups contained in the chosen Sylow subgroup.
    pub inside: Vec<LambdaFunction>,
    pub classes: Vec<RegularClass>,
}

/// Classes of regular subgroups for a `p`-group `G`, searching only inside a
/// Sylow `p`-subgroup `S` of `Hol(G)` and classifying by full `Aut(G)`-orbits.
pub fn enumerate_via_sylow(aut: &AutGroup, opts: &SearchOptions) -> Result<SylowEnumeration> {
    let g = aut.group();
    let n = g.order();
    let f = factorize(n as u64);
    if n == 1 {
        let lam = LambdaFunction::trivial(1);
        return Ok(SylowEnumeration {
            prime: 1,
            sylow_order: 1,
            inside: vec![lam.clone()],
            classes: vec![RegularClass {
                rep: lam,
                orbit_size: 1,
            }],
        });
    }
    if f.len() != 1 {
        return Err(Error::NotAPGroup(n));
    }
    let p = f[0].0;
    let hol_perms = hol_as_perm_group(g, aut);
    let sylow = sylow_subgroup(&hol_perms, p)?;
    let chain = sylow.stab_chain();
    let member = |a: GroupElement, alpha: AutIndex| chain.contains(&action_perm(g, aut, HolElement::new(alpha, a)));
    let inside = enumerate_restricted(aut, Some(&member), opts)?;

    let index: FxHashMap<&[AutIndex], usize> = inside.iter().enumerate().map(|(i, l)| (l.0.as_slice(), i)).collect();
    let mut visited = vec![false; inside.len()];
    let mut classes = Vec::new();
    for (i, lam) in inside.iter().enumerate() {
        if visited[i] {
            continue;
        }
        let orbit = aut_orbit(aut, lam);
        for l in &orbit {
            if let Some(&j) = index.get(l.0.as_slice()) {
                visited[j] = true;
            }
        }
        classes.push(RegularClass {
            orbit_size: orbit.len(),
            rep: orbit.into_iter().next().unwrap(),
        });
    }
    classes.sort();
    Ok(SylowEnumeration {
        prime: p,
        sylow_order: chain.order(),
        inside,
        classes,
    })
}

pub const DEFAULT_NAIVE_CAP: usize = 5000;

/// Classes by brute force: every order-`|G|` subgroup of `Hol(G)` (as a
/// permutation group), filtered by regularity, grouped by explicit
/// `Hol(G)`-conjugation.
pub fn classes_via_subgroup_conjugacy(aut: &AutGroup, cap: usize) -> Result<Vec<RegularClass>> {
    let g = aut.group();
    let n = g.order();
    let hol = Holomorph::new(aut);
    let order = hol.order();
    if order > cap {
        return Err(Error::HolTooLarge { order, cap });
    }
    let perms = hol_as_perm_group(g, aut).stab_chain().elements();
    let mut elems: Vec<HolElement> = perms
        .iter()
        .map(|p| hol.element_of_perm(p).expect("holomorph element"))
        .collect();
    elems.sort_unstable();
    let idx = |x: HolElement| x.index(n);
    let mul = |a: usize, b: usize| idx(hol.product(HolElement::from_index(a, n), HolElement::from_index(b, n)));

    let elem_order = |e: usize| {
        let mut k = 1;
        let mut x = e;
        while x != 0 {
            x = mul(x, e);
            k += 1;
        }
        k
    };
    let candidates: Vec<usize> = elems
        .iter()
        .map(|&x| idx(x))
        .filter(|&e| e != 0 && n.is_multiple_of(elem_order(e)))
        .collect();

    // Subgroups of order dividing n, grown one generator at a time.
    let mut seen: FxHashSet<Vec<usize>> = FxHashSet::default();
    let mut frontier: Vec<(Vec<usize>, Vec<usize>)> = vec![(vec![0], Vec::new())];
    let mut full: Vec<Vec<usize>> = Vec::new();
    if n == 1 {
        full.push(vec![0]);
    }
    let mut in_sub = vec![false; order];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (sub, gens) in &frontier {
            for &s in sub {
                in_sub[s] = true;
            }
            for &e in &candidates {
                if in_sub[e] {
                    continue;
                }
                let mut all_gens = gens.clone();
                all_gens.push(e);
                if let Some(k) = closure(&all_gens, n, &mul) {
                    if n.is_multiple_of(k.len()) && seen.insert(k.clone()) {
                        if k.len() == n {
                            full.push(k);
                        } else {
                            next.push((k, all_gens));
                        }
                    }
                }
            }
            for &s in sub {
                in_sub[s] = false;
            }
        }
        frontier = next;
    }

    let to_hol = |s: &[usize]| -> Vec<HolElement> { s.iter().map(|&i| HolElement::from_index(i, n)).collect() };
    let mut regular: Vec<Vec<HolElement>> = Vec::new();
    for s in &full {
        let sub = to_hol(s);
        if is_regular(aut, &sub)? {
            let mut sub = sub;
            sub.sort_unstable();
            regular.push(sub);
        }
    }
    regular.sort();

    // Union by explicit conjugation.
    let position: BTreeMap<Vec<HolElement>, usize> = regular.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let mut class_of = vec![usize::MAX; regular.len()];
    let mut classes = Vec::new();
    for i in 0..regular.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let mut members = Vec::new();
        for &y in &elems {
            let c = conjugate_subgroup(&hol, &regular[i], y);
            let j = position[&c];
            if class_of[j] == usize::MAX {
                class_of[j] = i;
                members.push(j);
            }
        }
        let mut lams: Vec<LambdaFunction> = members
            .iter()
            .map(|&j| lambda_of_subgroup(n, &regular[j]).expect("regular subgroup has a transversal"))
            .collect();
        lams.sort_unstable();
        classes.push(RegularClass {
            orbit_size: lams.len(),
            rep: lams.swap_remove(0),
        });
    }
    classes.sort();
    Ok(classes)
}

/// `<gens>` as a sorted index list, or `None` once it exceeds `limit`.
fn closure(gens: &[usize], limit: usize, mul: &dyn Fn(usize, usize) -> usize) -> Option<Vec<usize>> {
    let mut out = vec![0usize];
    let mut seen = FxHashSet::default();
    seen.insert(0usize);
    let mut i = 0;
    while i < out.len() {
        for &s in gens {
            let y = mul(out[i], s);
            if seen.insert(y) {
                out.push(y);
                if out.len() > limit {
                    return None;
                }
            }
        }
        i += 1;
    }
    out.sort_unstable();
    Some(out)
}

/// The stabilizer order of a lambda function under `Aut(G)`; equals the
/// order of the automorphism group of the corresponding brace.
pub fn stabilizer_order(aut: &AutGroup, lam: &LambdaFunction) -> usize {
    let mut buf = vec![0; lam.len()];
    (0..aut.order() as AutIndex)
        .filter(|&b| {
            act_into(aut, b, &lam.0, &mut buf);
            buf == lam.0
        })
        .count()
}

/// Permutation of `G` induced by `(λ_a, a)`.
pub fn element_perm(aut: &AutGroup, lam: &LambdaFunction, a: GroupElement) -> Perm {
    action_perm(aut.group(), aut, HolElement::new(lam.at(a), a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::automorphism_group;
    use crate::group::{direct_product, validate_group_table, FiniteGroup};

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n)
    }

    fn s3() -> FiniteGroup {
        validate_group_table(&crate::testutil::s3_rows(), "s3").unwrap()
    }

    fn classes(g: &FiniteGroup) -> Vec<RegularClass> {
        let a = automorphism_group(g).unwrap();
        aut_orbit_classes(&a, &enumerate_transversals(&a))
    }

    #[test]
    fn small_counts() {
        assert_eq!(classes(&z(1)).len(), 1);
        assert_eq!(classes(&z(2)).len(), 1);
        let a = automorphism_group(&z(3)).unwrap();
        assert_eq!(enumerate_transversals(&a), vec![LambdaFunction::trivial(3)]);
        assert_eq!(classes(&z(4)).len() + classes(&direct_product(&z(2), &z(2))).len(), 4);
        assert_eq!(classes(&z(9)).len() + classes(&direct_product(&z(3), &z(3))).len(), 4);
        assert_eq!(classes(&z(6)).len(), 2);
        assert_eq!(classes(&s3()).len(), 4);
        assert_eq!(classes(&z(5)).len(), 1);
    }

    #[test]
    fn outputs_are_closed_and_regular() {
        for g in [z(4), z(6), z(8), s3(), direct_product(&z(2), &z(4))] {
            let a = automorphism_group(&g).unwrap();
            let all = enumerate_transversals(&a);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            for lam in &all {
                lam.check_closure(&a).unwrap();
                assert!(is_regular(&a, &lam.subgroup()).unwrap());
            }
            let total: usize = aut_orbit_classes(&a, &all).iter().map(|c| c.orbit_size).sum();
            assert_eq!(total, all.len());
        }
    }

    #[test]
    fn closure_rejects_bad_tables() {
        let a = automorphism_group(&z(4)).unwrap();
        let inv = a.index_of(&Perm::from_images(vec![0, 3, 2, 1])).unwrap();
        assert!(LambdaFunction(vec![0, inv, 0, 0]).check_closure(&a).is_err());
        assert!(LambdaFunction(vec![0, inv, 0, inv]).check_closure(&a).is_ok());
    }

    #[test]
    fn non_subgroup_is_rejected() {
        let a = automorphism_group(&z(4)).unwrap();
        let bad = vec![HolElement::identity(), HolElement::new(0, 1)];
        assert_eq!(is_regular(&a, &bad), Err(Error::NotASubgroup));
    }

    #[test]
    fn orbit_of_transversal_is_conjugacy_class() {
        // Conjugating by any holomorph element stays in the Aut(G)-orbit.
        for g in [z(8), s3(), direct_product(&z(2), &z(4))] {
            let a = automorphism_group(&g).unwrap();
            let hol = Holomorph::new(&a);
            let all = enumerate_transversals(&a);
            let cls = aut_orbit_classes(&a, &all);
            let class_of = |l: &LambdaFunction| cls.iter().position(|c| aut_orbit(&a, &c.rep).contains(l)).unwrap();
            for lam in &all {
                let sub = lam.subgroup();
                let k = class_of(lam);
                for y in hol.elements() {
                    let conj = conjugate_subgroup(&hol, &sub, y);
                    let l2 = lambda_of_subgroup(g.order(), &conj).unwrap();
                    assert_eq!(class_of(&l2), k);
                }
            }
        }
    }

    #[test]
    fn naive_strategy_agrees() {
        for g in [
            z(4),
            direct_product(&z(2), &z(2)),
            z(6),
            s3(),
            z(8),
            direct_product(&z(2), &z(4)),
        ] {
            let a = automorphism_group(&g).unwrap();
            let fast = aut_orbit_classes(&a, &enumerate_transversals(&a));
            assert_eq!(classes_via_subgroup_conjugacy(&a, DEFAULT_NAIVE_CAP).unwrap(), fast);
        }
    }

    #[test]
    fn naive_cap() {
        let g = direct_product(&z(2), &direct_product(&z(2), &z(2)));
        let a = automorphism_group(&g).unwrap();
        assert!(matches!(
            classes_via_subgroup_conjugacy(&a, 100),
            Err(Error::HolTooLarge { order: 1344, cap: 100 })
        ));
    }

    #[test]
    fn sylow_route_agrees() {
        for g in [
            z(4),
            direct_product(&z(2), &z(2)),
            z(8),
            z(9),
            direct_product(&z(3), &z(3)),
        ] {
            let a = automorphism_group(&g).unwrap();
            let all = enumerate_transversals(&a);
            let full = aut_orbit_classes(&a, &all);
            let s = enumerate_via_sylow(&a, &SearchOptions::default()).unwrap();
            assert_eq!(s.classes, full);
            assert!(s.inside.iter().all(|l| all.binary_search(l).is_ok()));
            assert!(s.inside.len() <= all.len());
        }
        let a = automorphism_group(&z(6)).unwrap();
        assert!(matches!(
            enumerate_via_sylow(&a, &SearchOptions::default()),
            Err(Error::NotAPGroup(6))
        ));
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let g = direct_product(&z(2), &z(4));
        let a = automorphism_group(&g).unwrap();
        let with = |threads| {
            enumerate_transversals_with(
                &a,
                &SearchOptions {
                    threads,
                    ..SearchOptions::default()
                },
            )
            .unwrap()
        };
        let one = with(1);
        let four = with(4);
        assert_eq!(one, four);
        assert_eq!(one, enumerate_transversals(&a));
    }

    #[test]
    fn budget_is_enforced() {
        let g = direct_product(&z(2), &z(4));
        let a = automorphism_group(&g).unwrap();
        let opts = SearchOptions {
            max_stored_cells: 8 * 10,
            ..SearchOptions::default()
        };
        assert_eq!(
            enumerate_transversals_with(&a, &opts),
            Err(Error::SearchTooLarge { limit: 10 })
        );
        let opts = SearchOptions {
            max_stored_cells: 8 * 28,
            ..SearchOptions::default()
        };
        assert_eq!(enumerate_transversals_with(&a, &opts).unwrap().len(), 28);
    }

    #[test]
    fn stabilizer_times_orbit_is_aut_order() {
        let a = automorphism_group(&s3()).unwrap();
        for c in classes(&s3()) {
            assert_eq!(stabilizer_order(&a, &c.rep) * c.orbit_size, a.order());
        }
    }
}
