//! Brace counts over all additive groups of one order.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::aut::{AutConfig, AutGroup};
use crate::brace::{brace_from_transversal, SkewBrace};
use crate::catalog::{groups_of_order, CatalogSource, GroupMode};
use crate::error::{Error, Result};
use crate::group::{factorize, FiniteGroup};
use crate::regular::{
    aut_orbit_classes, classes_via_subgroup_conjugacy, enumerate_transversals_with, enumerate_via_sylow, with_threads,
    RegularClass, SearchOptions, DEFAULT_MAX_STORED_CELLS, DEFAULT_NAIVE_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Lambda-transversal search followed by `Aut(G)`-orbits.
    #[default]
    Lambda,
    /// Explicit subgroup search and `Hol(G)`-conjugation.
    Conjugacy,
}

#[derive(Debug, Clone)]
pub struct CountOptions {
    pub abelian_only: bool,
    /// Use the Sylow-restricted search when the order is a prime power.
    pub sylow: bool,
    pub strategy: Strategy,
    /// 0 uses the ambient thread pool.
    pub threads: usize,
    pub aut: AutConfig,
    pub naive_cap: usize,
    /// Search budget, see [`SearchOptions::max_stored_cells`].
    pub max_stored_cells: usize,
    /// Keep one brace per class in the report.
    pub collect_braces: bool,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            abelian_only: false,
            sylow: false,
            strategy: Strategy::Lambda,
            threads: 0,
            aut: AutConfig::default(),
            naive_cap: DEFAULT_NAIVE_CAP,
            max_stored_cells: DEFAULT_MAX_STORED_CELLS,
            collect_braces: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GroupCount {
    pub id_label: String,
    pub abelian: bool,
    /// `|Reg(G)|`.
    pub regular_count: usize,
    pub class_count: usize,
    pub aut_order: usize,
    pub classes: Vec<RegularClass>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct Skipped {
    pub id_label: String,
    pub abelian: bool,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub struct CountReport {
    pub order: usize,
    pub per_group: Vec<GroupCount>,
    pub skipped: Vec<Skipped>,
    /// Left braces; `None` if an abelian group was skipped.
    pub b: Option<usize>,
    /// All skew braces; `None` unless every group of the order was counted.
    pub s: Option<usize>,
    pub braces: Vec<SkewBrace>,
}

impl CountReport {
    pub fn complete(&self) -> bool {
        self.b.is_some() && self.s.is_some()
    }
}

/// Classes of regular subgroups for one additive group.
pub fn classes_for_group(aut: &AutGroup, opts: &CountOptions) -> Result<Vec<RegularClass>> {
    let n = aut.group().order();
    let search = SearchOptions {
        threads: 0,
        max_stored_cells: opts.max_stored_cells,
    };
    match opts.strategy {
        Strategy::Conjugacy => classes_via_subgroup_conjugacy(aut, opts.naive_cap),
        Strategy::Lambda if opts.sylow && factorize(n as u64).len() <= 1 => {
            Ok(enumerate_via_sylow(aut, &search)?.classes)
        }
        Strategy::Lambda => Ok(aut_orbit_classes(aut, &enumerate_transversals_with(aut, &search)?)),
    }
}

fn count_one(g: &FiniteGroup, opts: &CountOptions) -> Result<(GroupCount, Vec<SkewBrace>)> {
    let start = Instant::now();
    let aut = AutGroup::new(Arc::new(g.clone()), opts.aut)?;
    let classes = classes_for_group(&aut, opts)?;
    let braces = if opts.collect_braces {
        classes
            .iter()
            .map(|c| brace_from_transversal(&aut, &c.rep))
            .collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    Ok((
        GroupCount {
            id_label: g.id_label().to_string(),
            abelian: g.is_abelian(),
            regular_count: classes.iter().map(|c| c.orbit_size).sum(),
            class_count: classes.len(),
            aut_order: aut.order(),
            classes,
            elapsed: start.elapsed(),
        },
        braces,
    ))
}

/// Counts braces of order `n` over every additive group from `source`.
///
/// Groups whose automorphism group or holomorph exceed the configured caps
/// are skipped and reported; any skip leaves the affected total unset.
pub fn count_braces(n: usize, source: &CatalogSource, opts: &CountOptions) -> Result<CountReport> {
    let mode = if opts.abelian_only {
        GroupMode::Abelian
    } else {
        GroupMode::All
    };
    let groups = groups_of_order(n, source, mode)?;
    let results: Vec<Result<(GroupCount, Vec<SkewBrace>)>> =
        with_threads(opts.threads, || groups.par_iter().map(|g| count_one(g, opts)).collect());

    let mut report = CountReport {
        order: n,
        per_group: Vec::new(),
        skipped: Vec::new(),
        b: None,
        s: None,
        braces: Vec::new(),
    };
    for (g, r) in groups.iter().zip(results) {
        match r {
            Ok((count, braces)) => {
                report.per_group.push(count);
                report.braces.extend(braces);
            }
            Err(e @ (Error::AutTooLarge { .. } | Error::HolTooLarge { .. } | Error::SearchTooLarge { .. })) => {
                report.skipped.push(Skipped {
                    id_label: g.id_label().to_string(),
                    abelian: g.is_abelian(),
                    reason: e.to_string(),
                })
            }
            Err(e) => return Err(e),
        }
    }
    let abelian_skipped = report.skipped.iter().any(|s| s.abelian);
    if !abelian_skipped {
        report.b = Some(
            report
                .per_group
                .iter()
                .filter(|c| c.abelian)
                .map(|c| c.class_count)
                .sum(),
        );
    }
    if !opts.abelian_only && report.skipped.is_empty() {
        report.s = Some(report.per_group.iter().map(|c| c.class_count).sum());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(n: usize, opts: &CountOptions) -> (Option<usize>, Option<usize>) {
        let r = count_braces(n, &CatalogSource::bundled(), opts).unwrap();
        (r.b, r.s)
    }

    #[test]
    fn small_orders() {
        let d = CountOptions::default();
        assert_eq!(bs(1, &d), (Some(1), Some(1)));
        assert_eq!(bs(6, &d), (Some(2), Some(6)));
        assert_eq!(bs(8, &d), (Some(27), Some(47)));
        assert_eq!(bs(9, &d), (Some(4), Some(4)));
        assert_eq!(bs(12, &d), (Some(10), Some(38)));
        assert_eq!(bs(13, &d), (Some(1), Some(1)));
        assert_eq!(bs(21, &d), (Some(2), Some(8)));
    }

    #[test]
    fn abelian_only_matches_subtotal() {
        let full = count_braces(12, &CatalogSource::bundled(), &CountOptions::default()).unwrap();
        let ab = count_braces(
            12,
            &CatalogSource::bundled(),
            &CountOptions {
                abelian_only: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(ab.b, full.b);
        assert_eq!(ab.s, None);
        assert!(!ab.complete());
    }

    #[test]
    fn strategies_agree() {
        for n in [4, 8, 9] {
            let d = bs(n, &CountOptions::default());
            let sy = bs(
                n,
                &CountOptions {
                    sylow: true,
                    ..Default::default()
                },
            );
            let cj = bs(
                n,
                &CountOptions {
                    strategy: Strategy::Conjugacy,
                    ..Default::default()
                },
            );
            assert_eq!(d, sy);
            assert_eq!(d, cj);
        }
    }

    #[test]
    fn caps_produce_skips() {
        let opts = CountOptions {
            aut: AutConfig {
                max_aut_order: 10,
                ..AutConfig::default()
            },
            ..Default::default()
        };
        let r = count_braces(8, &CatalogSource::bundled(), &opts).unwrap();
        assert!(!r.skipped.is_empty());
        assert_eq!(r.b, None);
        assert_eq!(r.s, None);
    }

    #[test]
    fn collected_braces_are_one_per_class() {
        let opts = CountOptions {
            collect_braces: true,
            ..Default::default()
        };
        let r = count_braces(6, &CatalogSource::bundled(), &opts).unwrap();
        assert_eq!(r.braces.len(), 6);
        assert!(r.braces.iter().all(crate::brace::verify_skew_brace));
    }
}
