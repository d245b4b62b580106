//! Permutation groups on `0..d`.
//!
//! Composition is left to right throughout: `p.compose(&q)` applies `p`
//! first, then `q`, so `(p.compose(&q)).image(i) == q.image(p.image(i))`.
//! Point images are written `i^p`.

use std::collections::VecDeque;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::{factorize, lcm};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Wraps an image array. Panics if it is not a bijection.
    pub fn from_images(images: Vec<u32>) -> Self {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(!std::mem::replace(&mut seen[x as usize], true), "not a bijection");
        }
        Perm { images }
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Perm { images }
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Self {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                images[x as usize] = c[(i + 1) % c.len()];
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, i: u32) -> u32 {
        self.images[i as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn try_compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn pow(&self, mut k: usize) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    /// `g^-1 self g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.inverse().compose(self).compose(g)
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start as u32 {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start as u32;
            while !seen[x as usize] {
                seen[x as usize] = true;
                c.push(x);
                x = self.images[x as usize];
            }
            out.push(c);
        }
        out
    }

    /// Cycle lengths including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            out.push(len);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, lcm)
    }

    /// True if every cycle has the same length, i.e. `<self>` acts semiregularly.
    pub fn is_semiregular(&self) -> bool {
        let ct = self.cycle_type();
        ct.iter().all(|&l| l == ct[0])
    }

    fn first_moved(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
    }
}

/// A group given by generating permutations of a common degree.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        Ok(PermGroup { degree, generators })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
        }
    }

    /// The symmetric group on `degree` points.
    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree > 1 {
            let cycle: Vec<u32> = (0..degree as u32).collect();
            gens.push(Perm::from_cycles(degree, &[&cycle]));
            gens.push(Perm::from_cycles(degree, &[&[0, 1]]));
        }
        PermGroup::new(degree, gens).unwrap()
    }

    /// The alternating group on `degree >= 3` points, generated by 3-cycles.
    pub fn alternating(degree: usize) -> Self {
        let gens = (2..degree as u32)
            .map(|k| Perm::from_cycles(degree, &[&[0, 1, k]]))
            .collect();
        PermGroup::new(degree, gens).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn stab_chain(&self) -> StabChain {
        build_stab_chain(self)
    }

    pub fn order(&self) -> usize {
        self.stab_chain().order()
    }

    /// Brute-force closure; only for small groups.
    pub fn elements_by_closure(&self) -> Vec<Perm> {
        let id = Perm::identity(self.degree);
        let mut seen = std::collections::HashSet::new();
        seen.insert(id.clone());
        let mut out = vec![id];
        let mut i = 0;
        while i < out.len() {
            for g in &self.generators {
                let y = out[i].compose(g);
                if seen.insert(y.clone()) {
                    out.push(y);
                }
            }
            i += 1;
        }
        out
    }
}

/// The `<gens>`-orbit of `x`, in breadth-first discovery order.
pub fn orbit(gens: &[Perm], x: u32) -> Vec<u32> {
    let degree = gens.first().map_or(x as usize + 1, |g| g.degree());
    let mut seen = vec![false; degree];
    seen[x as usize] = true;
    let mut out = vec![x];
    let mut queue = VecDeque::from([x]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.image(p);
            if !seen[q as usize] {
                seen[q as usize] = true;
                out.push(q);
                queue.push_back(q);
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
struct Level {
    base: u32,
    /// Strong generators fixing all earlier base points.
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    /// `transversal[b]` maps the base point to `b`; `inverse[b]` is its inverse.
    transversal: Vec<Option<Perm>>,
    inverse: Vec<Option<Perm>>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut inverse = vec![None; degree];
        transversal[base as usize] = Some(Perm::identity(degree));
        inverse[base as usize] = Some(Perm::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
            inverse,
        }
    }

    fn rebuild_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for s in &self.gens {
                let q = s.image(p);
                if self.transversal[q as usize].is_none() {
                    let u = self.transversal[p as usize].as_ref().unwrap().compose(s);
                    self.inverse[q as usize] = Some(u.inverse());
                    self.transversal[q as usize] = Some(u);
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
    }
}

/// Base and strong generating set, with explicit transversals.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

/// Deterministic Schreier–Sims. Base points are the smallest points moved by
/// the residues that require a new level.
pub fn build_stab_chain(group: &PermGroup) -> StabChain {
    let degree = group.degree;
    let mut chain = StabChain {
        degree,
        levels: Vec::new(),
    };
    for g in &group.generators {
        if g.is_identity() {
            continue;
        }
        let (residue, depth) = chain.strip(g);
        if !residue.is_identity() {
            chain.insert(residue, depth);
        }
    }
    chain.complete();
    chain
}

impl StabChain {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> usize {
        self.levels.iter().map(|l| l.orbit.len()).product()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        self.levels.first().map_or_else(Vec::new, |l| l.gens.clone())
    }

    /// Sifts `g`; returns the residue and the level at which sifting stopped
    /// (`levels.len()` if it passed every level).
    fn strip(&self, g: &Perm) -> (Perm, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate() {
            let b = h.image(level.base);
            match &level.inverse[b as usize] {
                Some(uinv) => h = h.compose(uinv),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (h, depth) = self.strip(p);
        depth == self.levels.len() && h.is_identity()
    }

    /// Adds `g` as a strong generator on levels `0..=depth`, creating a new
    /// level when `g` fixes every current base point.
    fn insert(&mut self, g: Perm, depth: usize) {
        if depth == self.levels.len() {
            let b = g.first_moved().expect("identity residue");
            self.levels.push(Level::new(b, self.degree));
        }
        for level in &mut self.levels[..=depth] {
            level.gens.push(g.clone());
            level.rebuild_orbit();
        }
    }

    /// Runs the Schreier generator test bottom-up until every level is closed.
    fn complete(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let lvl = i - 1;
            let mut restart = None;
            'outer: for oi in 0..self.levels[lvl].orbit.len() {
                let b = self.levels[lvl].orbit[oi];
                for si in 0..self.levels[lvl].gens.len() {
                    let level = &self.levels[lvl];
                    let s = &level.gens[si];
                    let bs = s.image(b);
                    let h = level.transversal[b as usize]
                        .as_ref()
                        .unwrap()
                        .compose(s)
                        .compose(level.inverse[bs as usize].as_ref().unwrap());
                    if h.is_identity() {
                        continue;
                    }
                    // Sift through the levels below `lvl`.
                    let mut r = h;
                    let mut depth = self.levels.len();
                    for (j, l) in self.levels.iter().enumerate().skip(lvl + 1) {
                        let x = r.image(l.base);
                        match &l.inverse[x as usize] {
                            Some(uinv) => r = r.compose(uinv),
                            None => {
                                depth = j;
                                break;
                            }
                        }
                    }
                    if depth < self.levels.len() || !r.is_identity() {
                        for level in &mut self.levels[lvl + 1..depth] {
                            level.gens.push(r.clone());
                        }
                        if depth == self.levels.len() {
                            let b = r.first_moved().unwrap();
                            let mut l = Level::new(b, self.degree);
                            l.gens.push(r.clone());
                            self.levels.push(l);
                        } else {
                            self.levels[depth].gens.push(r.clone());
                        }
                        for level in &mut self.levels[lvl + 1..] {
                            level.rebuild_orbit();
                        }
                        restart = Some(depth + 1);
                        break 'outer;
                    }
                }
            }
            match restart {
                Some(j) => i = j,
                None => i -= 1,
            }
        }
    }

    /// Every element, as products of transversal elements (deepest level first).
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for h in &out {
                for &b in &level.orbit {
                    next.push(h.compose(level.transversal[b as usize].as_ref().unwrap()));
                }
            }
            out = next;
        }
        out
    }

    /// A uniformly random element.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Perm {
        let mut g = Perm::identity(self.degree);
        for level in self.levels.iter().rev() {
            let b = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = g.compose(level.transversal[b as usize].as_ref().unwrap());
        }
        g
    }
}

const SYLOW_SEED: u64 = 0x5EED_5170;

fn p_part(n: usize, p: usize) -> usize {
    let mut q = 1;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        q *= p;
    }
    q
}

fn is_power_of(n: usize, p: usize) -> bool {
    p_part(n, p) == n
}

/// A Sylow `p`-subgroup of `group`.
///
/// Grows a `p`-subgroup `P` one `p`-element at a time: each new element must
/// normalize `P`, so `<P, x>` stays a `p`-group. Candidates come first from
/// seeded random sampling, then from a full scan of the group, which always
/// succeeds because `N(P)/P` has order divisible by `p` while `P` is not Sylow.
pub fn sylow_subgroup(group: &PermGroup, p: u64) -> Result<PermGroup> {
    let chain = group.stab_chain();
    let order = chain.order();
    let p = p as usize;
    if factorize(p as u64) != vec![(p as u64, 1)] || !order.is_multiple_of(p) {
        return Err(Error::PrimeNotDividing(p as u64));
    }
    let target = p_part(order, p);
    if target == order {
        return Ok(group.clone());
    }

    let degree = group.degree;
    let mut gens: Vec<Perm> = Vec::new();
    let mut sub = PermGroup::trivial(degree).stab_chain();
    let mut rng = ChaCha8Rng::seed_from_u64(SYLOW_SEED);

    let try_extend = |x: &Perm, gens: &Vec<Perm>, sub: &StabChain| -> Option<StabChain> {
        if x.is_identity() || sub.contains(x) {
            return None;
        }
        let xinv = x.inverse();
        if !gens.iter().all(|g| sub.contains(&xinv.compose(g).compose(x))) {
            return None;
        }
        let mut all = gens.clone();
        all.push(x.clone());
        let chain = PermGroup::new(degree, all).unwrap().stab_chain();
        debug_assert!(is_power_of(chain.order(), p));
        Some(chain)
    };

    let p_element = |g: &Perm| -> Perm {
        let o = g.order();
        g.pow(o / p_part(o, p))
    };

    let mut scan: Option<Vec<Perm>> = None;
    while sub.order() < target {
        let mut extended = false;
        for _ in 0..64 {
            let x = p_element(&chain.random_element(&mut rng));
            if let Some(c) = try_extend(&x, &gens, &sub) {
                gens.push(x);
                sub = c;
                extended = true;
                break;
            }
        }
        if extended {
            continue;
        }
        let all = scan.get_or_insert_with(|| chain.elements());
        let mut found = None;
        for g in all.iter() {
            let o = g.order();
            if o == 1 || !is_power_of(o, p) {
                continue;
            }
            if let Some(c) = try_extend(g, &gens, &sub) {
                found = Some((g.clone(), c));
                break;
            }
        }
        let (x, c) = found.expect("a p-subgroup below Sylow order has a proper p-overgroup in its normalizer");
        gens.push(x);
        sub = c;
    }
    PermGroup::new(degree, gens)
}
