//! Enumeration and classification of skew left braces of small order.
//!
//! A skew brace with additive group `G` corresponds to a regular subgroup of
//! the holomorph `Hol(G)`, and isomorphism classes of braces correspond to
//! `Aut(G)`-orbits of regular subgroups. The pipeline is:
//!
//! 1. [`aut::automorphism_group`] lists `Aut(G)`;
//! 2. [`regular::enumerate_transversals`] finds every regular subgroup as a
//!    lambda function `a ↦ λ_a` with subgroup `{(λ_a, a)}`;
//! 3. [`regular::aut_orbit_classes`] groups them into `Aut(G)`-orbits;
//! 4. [`brace::brace_from_transversal`] turns a representative into the
//!    multiplication table of a brace.
//!
//! [`count::count_braces`] runs this over every group of an order taken from
//! [`catalog`], giving the number of left braces `b(n)` and skew braces
//! `s(n)`.

pub mod aut;
pub mod bench;
pub mod brace;
pub mod catalog;
pub mod conjecture;
pub mod count;
pub mod error;
pub mod export;
pub mod group;
pub mod holomorph;
pub(crate) mod hom;
pub mod perm;
pub mod regular;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
