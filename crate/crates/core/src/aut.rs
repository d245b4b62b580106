//! Automorphism groups of Cayley-table groups.
//!
//! Every automorphism is listed explicitly, sorted lexicographically by its
//! image array. The position in that list is the automorphism's index, used
//! everywhere downstream (lambda functions, holomorph elements, orbit keys).
//! Index 0 is always the identity.

use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement};
use crate::hom::{self, Presentation};
use crate::perm::{Perm, PermGroup};

/// Index into [`AutGroup::elements`].
pub type AutIndex = u32;

#[derive(Debug, Clone, Copy)]
pub struct AutConfig {
    pub max_group_order: usize,
    pub max_aut_order: usize,
}

impl Default for AutConfig {
    fn default() -> Self {
        AutConfig {
            max_group_order: 256,
            max_aut_order: 100_000,
        }
    }
}

const DENSE_LIMIT: usize = 2048;

#[derive(Debug, Clone)]
pub struct AutGroup {
    group: Arc<FiniteGroup>,
    /// Generators of `G`; an automorphism is keyed by their images.
    gens: Vec<GroupElement>,
    elements: Vec<Perm>,
    index: FxHashMap<u128, AutIndex>,
    inverse: Vec<AutIndex>,
    perms: PermGroup,
    /// Row-major `mul` table, present for small automorphism groups.
    dense: Option<Vec<AutIndex>>,
}

/// Whether `p` preserves the Cayley table of `g`.
pub fn is_automorphism(g: &FiniteGroup, p: &Perm) -> bool {
    if p.degree() != g.order() {
        return false;
    }
    g.elements().all(|a| {
        g.elements()
            .all(|b| p.image(g.mul(a, b)) == g.mul(p.image(a), p.image(b)))
    })
}

/// Computes `Aut(G)` with the default caps.
pub fn automorphism_group(g: &FiniteGroup) -> Result<AutGroup> {
    AutGroup::new(Arc::new(g.clone()), AutConfig::default())
}

impl AutGroup {
    pub fn new(group: Arc<FiniteGroup>, config: AutConfig) -> Result<Self> {
        let n = group.order();
        if n > config.max_group_order || n > u16::MAX as usize {
            return Err(Error::OrderTooLarge(n));
        }
        let pres = Presentation::new(&group);
        assert!(pres.rank() <= 8, "generating set too large for key packing");
        let images = hom::automorphisms(&group, &pres, config.max_aut_order).ok_or(Error::AutTooLarge {
            cap: config.max_aut_order,
        })?;
        let mut elements: Vec<Perm> = images.into_iter().map(Perm::from_images_unchecked).collect();
        elements.sort_unstable();
        Ok(Self::from_sorted(group, pres.gens, elements))
    }

    fn from_sorted(group: Arc<FiniteGroup>, gens: Vec<GroupElement>, elements: Vec<Perm>) -> Self {
        let n = group.order();
        let mut index = FxHashMap::default();
        index.reserve(elements.len());
        for (i, e) in elements.iter().enumerate() {
            index.insert(pack(gens.iter().map(|&s| e.image(s))), i as AutIndex);
        }
        let mut aut = AutGroup {
            group,
            gens,
            elements,
            index,
            inverse: Vec::new(),
            perms: PermGroup::trivial(n),
            dense: None,
        };
        aut.inverse = (0..aut.order() as AutIndex)
            .map(|i| {
                let e = &aut.elements[i as usize];
                // a^-1 maps e(s) back to s, so look for the element sending s -> e^-1(s).
                let einv = e.inverse();
                aut.lookup(aut.gens.iter().map(|&s| einv.image(s)))
            })
            .collect();
        if aut.order() <= DENSE_LIMIT {
            let m = aut.order();
            let mut table = Vec::with_capacity(m * m);
            for i in 0..m as AutIndex {
                for j in 0..m as AutIndex {
                    table.push(aut.mul_slow(i, j));
                }
            }
            aut.dense = Some(table);
        }
        aut.perms = aut.pick_generators();
        aut
    }

    fn pick_generators(&self) -> PermGroup {
        let n = self.group.order();
        let mut gens: Vec<Perm> = Vec::new();
        let mut chain = PermGroup::trivial(n).stab_chain();
        for e in &self.elements {
            if chain.order() == self.order() {
                break;
            }
            if !chain.contains(e) {
                gens.push(e.clone());
                chain = PermGroup::new(n, gens.clone()).unwrap().stab_chain();
            }
        }
        PermGroup::new(n, gens).unwrap()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: AutIndex) -> &Perm {
        &self.elements[i as usize]
    }

    /// The automorphisms as a permutation group on the carrier.
    pub fn perms(&self) -> &PermGroup {
        &self.perms
    }

    /// Indices of the generators of [`AutGroup::perms`].
    pub fn generator_indices(&self) -> Vec<AutIndex> {
        self.perms
            .generators()
            .iter()
            .map(|p| self.index_of(p).unwrap())
            .collect()
    }

    pub fn identity(&self) -> AutIndex {
        0
    }

    #[inline]
    pub fn apply(&self, a: AutIndex, x: GroupElement) -> GroupElement {
        self.elements[a as usize].image(x)
    }

    pub fn index_of(&self, p: &Perm) -> Option<AutIndex> {
        if p.degree() != self.group.order() {
            return None;
        }
        let i = *self.index.get(&pack(self.gens.iter().map(|&s| p.image(s))))?;
        (self.elements[i as usize] == *p).then_some(i)
    }

    #[inline]
    fn lookup(&self, images: impl Iterator<Item = GroupElement>) -> AutIndex {
        self.index[&pack(images)]
    }

    /// Index of the automorphism with the given images of the generators of
    /// `G`, if it is one.
    pub(crate) fn index_from_generator_images(&self, images: impl Iterator<Item = GroupElement>) -> Option<AutIndex> {
        self.index.get(&pack(images)).copied()
    }

    pub(crate) fn group_generators(&self) -> &[GroupElement] {
        &self.gens
    }

    fn mul_slow(&self, a: AutIndex, b: AutIndex) -> AutIndex {
        let (ea, eb) = (&self.elements[a as usize], &self.elements[b as usize]);
        self.lookup(self.gens.iter().map(|&s| ea.image(eb.image(s))))
    }

    /// Function composition `a ∘ b`: apply `b` first, then `a`.
    #[inline]
    pub fn mul(&self, a: AutIndex, b: AutIndex) -> AutIndex {
        match &self.dense {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => self.mul_slow(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: AutIndex) -> AutIndex {
        self.inverse[a as usize]
    }

    /// `b^-1 ∘ a ∘ b`.
    #[inline]
    pub fn conjugate(&self, a: AutIndex, b: AutIndex) -> AutIndex {
        match &self.dense {
            Some(_) => self.mul(self.inv(b), self.mul(a, b)),
            None => {
                let (ea, eb) = (&self.elements[a as usize], &self.elements[b as usize]);
                let ebinv = &self.elements[self.inverse[b as usize] as usize];
                self.lookup(self.gens.iter().map(|&s| ebinv.image(ea.image(eb.image(s)))))
            }
        }
    }
}

fn pack(images: impl Iterator<Item = GroupElement>) -> u128 {
    images.fold(0u128, |acc, x| (acc << 16) | x as u128)
}
