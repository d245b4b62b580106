//! The holomorph `Hol(G) = Aut(G) ⋉ G`.
//!
//! Elements are pairs `(α, g)` with product `(α, g)(β, h) = (αβ, g·α(h))`,
//! where `αβ` is function composition (β first). `Hol(G)` acts on `G` by
//! `(α, h) · g = h·α(g)`. Under this product the action satisfies
//! `(xy)·g = x·(y·g)`, so it is a left action. Conjugation is
//! `x^y = y⁻¹ x y`.

use crate::aut::{AutGroup, AutIndex};
use crate::group::{FiniteGroup, GroupElement};
use crate::perm::{Perm, PermGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HolElement {
    pub aut: AutIndex,
    pub g: GroupElement,
}

impl HolElement {
    pub fn new(aut: AutIndex, g: GroupElement) -> Self {
        HolElement { aut, g }
    }

    pub fn identity() -> Self {
        HolElement { aut: 0, g: 0 }
    }

    /// Dense index `aut * |G| + g`.
    pub fn index(self, n: usize) -> usize {
        self.aut as usize * n + self.g as usize
    }

    pub fn from_index(i: usize, n: usize) -> Self {
        HolElement {
            aut: (i / n) as AutIndex,
            g: (i % n) as GroupElement,
        }
    }
}

/// Borrowed view of `Hol(G)` for a group and its automorphism group.
#[derive(Clone, Copy)]
pub struct Holomorph<'a> {
    pub group: &'a FiniteGroup,
    pub aut: &'a AutGroup,
}

impl<'a> Holomorph<'a> {
    pub fn new(aut: &'a AutGroup) -> Self {
        Holomorph {
            group: aut.group(),
            aut,
        }
    }

    pub fn order(&self) -> usize {
        self.group.order() * self.aut.order()
    }

    #[inline]
    pub fn product(&self, x: HolElement, y: HolElement) -> HolElement {
        hol_product(self.group, self.aut, x, y)
    }

    #[inline]
    pub fn inverse(&self, x: HolElement) -> HolElement {
        hol_inverse(self.group, self.aut, x)
    }

    #[inline]
    pub fn act(&self, x: HolElement, g: GroupElement) -> GroupElement {
        hol_action(self.group, self.aut, x, g)
    }

    /// `y⁻¹ x y`.
    pub fn conjugate(&self, x: HolElement, y: HolElement) -> HolElement {
        self.product(self.inverse(y), self.product(x, y))
    }

    pub fn action_perm(&self, x: HolElement) -> Perm {
        action_perm(self.group, self.aut, x)
    }

    /// Recovers the pair from its action on the carrier.
    pub fn element_of_perm(&self, p: &Perm) -> Option<HolElement> {
        let h = p.image(0);
        let hinv = self.group.inv(h);
        let gens = self.aut.group_generators();
        let aut = self
            .aut
            .index_from_generator_images(gens.iter().map(|&s| self.group.mul(hinv, p.image(s))))?;
        let x = HolElement::new(aut, h);
        (self.action_perm(x) == *p).then_some(x)
    }

    pub fn elements(&self) -> impl Iterator<Item = HolElement> + '_ {
        let n = self.group.order();
        (0..self.order()).map(move |i| HolElement::from_index(i, n))
    }
}

/// `(α, g)(β, h) = (αβ, g·α(h))`.
#[inline]
pub fn hol_product(g: &FiniteGroup, a: &AutGroup, x: HolElement, y: HolElement) -> HolElement {
    HolElement {
        aut: a.mul(x.aut, y.aut),
        g: g.mul(x.g, a.apply(x.aut, y.g)),
    }
}

/// `(α, g)⁻¹ = (α⁻¹, α⁻¹(g⁻¹))`.
#[inline]
pub fn hol_inverse(g: &FiniteGroup, a: &AutGroup, x: HolElement) -> HolElement {
    let ainv = a.inv(x.aut);
    HolElement {
        aut: ainv,
        g: a.apply(ainv, g.inv(x.g)),
    }
}

/// `(α, h) · g = h·α(g)`.
#[inline]
pub fn hol_action(g: &FiniteGroup, a: &AutGroup, x: HolElement, elem: GroupElement) -> GroupElement {
    g.mul(x.g, a.apply(x.aut, elem))
}

pub fn action_perm(g: &FiniteGroup, a: &AutGroup, x: HolElement) -> Perm {
    Perm::from_images_unchecked(g.elements().map(|e| hol_action(g, a, x, e)).collect())
}

/// `Hol(G)` as a permutation group of degree `|G|`, generated by the
/// translations by generators of `G` and the generators of `Aut(G)`.
pub fn hol_as_perm_group(g: &FiniteGroup, a: &AutGroup) -> PermGroup {
    let mut gens: Vec<Perm> = g
        .generators()
        .into_iter()
        .map(|s| action_perm(g, a, HolElement::new(0, s)))
        .collect();
    gens.extend(
        a.generator_indices()
            .into_iter()
            .map(|i| action_perm(g, a, HolElement::new(i, 0))),
    );
    PermGroup::new(g.order(), gens).expect("degrees agree")
}
