//! Backtracking over images of a generating set.
//!
//! A homomorphism out of a group is fixed by the images of its generators.
//! [`search_maps`] assigns those images one at a time and checks, after each
//! assignment, that the partial map on the subgroup generated so far is a
//! well-defined (and, if requested, injective) homomorphism.

use crate::group::{FiniteGroup, GroupElement};

/// Greedy generating set: repeatedly add the element of largest order not in
/// the subgroup generated so far (ties broken by smallest index).
pub(crate) fn greedy_generators(g: &FiniteGroup) -> Vec<GroupElement> {
    let orders = g.element_orders();
    let mut by_order: Vec<GroupElement> = g.elements().collect();
    by_order.sort_by_key(|&a| (std::cmp::Reverse(orders[a as usize]), a));
    let mut gens = Vec::new();
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    for a in by_order {
        if inside[a as usize] {
            continue;
        }
        gens.push(a);
        for x in g.subgroup_generated(&gens) {
            inside[x as usize] = true;
        }
        if inside.iter().all(|&b| b) {
            break;
        }
    }
    gens
}

/// Breadth-first words for each prefix subgroup `<g_0, ..., g_i>`.
#[derive(Debug, Clone)]
pub(crate) struct Presentation {
    pub gens: Vec<GroupElement>,
    /// `layers[i]` lists `(element, parent, generator)` with
    /// `element = parent * gens[generator]`, identity first with a dummy parent.
    layers: Vec<Vec<(u32, u32, u8)>>,
    orders: Vec<usize>,
}

impl Presentation {
    pub fn new(g: &FiniteGroup) -> Self {
        Self::with_generators(g, greedy_generators(g))
    }

    pub fn with_generators(g: &FiniteGroup, gens: Vec<GroupElement>) -> Self {
        let mut layers = Vec::with_capacity(gens.len());
        for i in 0..gens.len() {
            let mut seen = vec![false; g.order()];
            seen[0] = true;
            let mut layer = vec![(0u32, 0u32, 0u8)];
            let mut k = 0;
            while k < layer.len() {
                let x = layer[k].0;
                for (j, &s) in gens[..=i].iter().enumerate() {
                    let y = g.mul(x, s);
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        layer.push((y, x, j as u8));
                    }
                }
                k += 1;
            }
            layers.push(layer);
        }
        let orders = gens.iter().map(|&s| g.element_order(s)).collect();
        Presentation { gens, layers, orders }
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }
}

/// Enumerates homomorphisms `src -> dst` via generator images, calling
/// `visit` with the full image array of each. `visit` returns `false` to stop.
///
/// With `injective` set, images must have the same order as their generator
/// and the map must be injective; when `|src| = |dst|` this enumerates
/// isomorphisms.
pub(crate) fn search_maps(
    src: &FiniteGroup,
    pres: &Presentation,
    dst: &FiniteGroup,
    injective: bool,
    visit: &mut dyn FnMut(&[u32]) -> bool,
) {
    if injective && src.order() > dst.order() {
        return;
    }
    if pres.rank() == 0 {
        visit(&[0]);
        return;
    }
    let dst_orders = dst.element_orders();
    let candidates: Vec<Vec<u32>> = pres
        .orders
        .iter()
        .map(|&o| {
            dst.elements()
                .filter(|&b| {
                    let ob = dst_orders[b as usize];
                    if injective {
                        ob == o
                    } else {
                        o % ob == 0
                    }
                })
                .collect()
        })
        .collect();

    let mut st = State {
        src,
        dst,
        pres,
        injective,
        images: vec![0; pres.rank()],
        phi: vec![0; src.order()],
        used: vec![false; dst.order()],
    };
    st.recurse(0, &candidates, visit);
}

struct State<'a> {
    src: &'a FiniteGroup,
    dst: &'a FiniteGroup,
    pres: &'a Presentation,
    injective: bool,
    images: Vec<u32>,
    phi: Vec<u32>,
    used: Vec<bool>,
}

impl State<'_> {
    fn recurse(&mut self, i: usize, cands: &[Vec<u32>], visit: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        for &c in &cands[i] {
            self.images[i] = c;
            if !self.consistent(i) {
                continue;
            }
            let keep_going = if i + 1 == self.pres.rank() {
                visit(&self.phi)
            } else {
                self.recurse(i + 1, cands, visit)
            };
            if !keep_going {
                return false;
            }
        }
        true
    }

    /// Defines phi on `<g_0..g_i>` along the BFS words and verifies every
    /// relation `phi(x g_j) = phi(x) img_j` inside that subgroup.
    fn consistent(&mut self, i: usize) -> bool {
        let layer = &self.pres.layers[i];
        if self.injective {
            self.used.iter_mut().for_each(|u| *u = false);
            self.used[0] = true;
        }
        self.phi[0] = 0;
        for &(e, parent, j) in &layer[1..] {
            let v = self.dst.mul(self.phi[parent as usize], self.images[j as usize]);
            if self.injective {
                if self.used[v as usize] {
                    return false;
                }
                self.used[v as usize] = true;
            }
            self.phi[e as usize] = v;
        }
        for &(e, _, _) in layer.iter() {
            let pe = self.phi[e as usize];
            for j in 0..=i {
                let lhs = self.phi[self.src.mul(e, self.pres.gens[j]) as usize];
                if lhs != self.dst.mul(pe, self.images[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// All automorphism image arrays of `g`, or `None` once more than `cap` are found.
pub(crate) fn automorphisms(g: &FiniteGroup, pres: &Presentation, cap: usize) -> Option<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    let mut over = false;
    search_maps(g, pres, g, true, &mut |phi| {
        if out.len() >= cap {
            over = true;
            return false;
        }
        out.push(phi.to_vec());
        true
    });
    if over {
        None
    } else {
        Some(out)
    }
}

/// All homomorphisms `src -> dst` as full image arrays.
pub(crate) fn homomorphisms(src: &FiniteGroup, dst: &FiniteGroup) -> Vec<Vec<u32>> {
    let pres = Presentation::new(src);
    let mut out = Vec::new();
    search_maps(src, &pres, dst, false, &mut |phi| {
        out.push(phi.to_vec());
        true
    });
    out
}
