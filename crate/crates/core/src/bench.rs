//! Timing comparison of the two classification strategies.

use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::aut::{AutConfig, AutGroup};
use crate::catalog::{groups_of_order, CatalogSource, GroupMode};
use crate::error::Result;
use crate::regular::{aut_orbit_classes, classes_via_subgroup_conjugacy, enumerate_transversals, DEFAULT_NAIVE_CAP};

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub order: usize,
    pub group_id: String,
    pub lambda_classes: usize,
    pub lambda_time: Duration,
    /// `None` when the holomorph exceeds the cap.
    pub conjugacy: Option<(usize, Duration)>,
    pub skip_reason: Option<String>,
}

impl BenchRow {
    pub fn agree(&self) -> bool {
        self.conjugacy.is_none_or(|(c, _)| c == self.lambda_classes)
    }

    /// Conjugacy time over lambda time.
    pub fn ratio(&self) -> Option<f64> {
        self.conjugacy
            .map(|(_, t)| t.as_secs_f64() / self.lambda_time.as_secs_f64().max(1e-9))
    }
}

impl fmt::Display for BenchRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:>5} {:<14} lambda: {:>4} classes {:>10.3} ms",
            self.order,
            self.group_id,
            self.lambda_classes,
            self.lambda_time.as_secs_f64() * 1e3
        )?;
        match (&self.conjugacy, &self.skip_reason) {
            (Some((c, t)), _) => write!(
                f,
                " | conjugacy: {:>4} classes {:>10.3} ms | ratio {:>8.2}{}",
                c,
                t.as_secs_f64() * 1e3,
                self.ratio().unwrap_or(0.0),
                if self.agree() { "" } else { " MISMATCH" }
            ),
            (None, Some(r)) => write!(f, " | conjugacy: skipped ({r})"),
            (None, None) => Ok(()),
        }
    }
}

/// Runs both strategies on every group of each order.
pub fn run_benchmark(orders: &[usize], source: &CatalogSource) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &n in orders {
        for g in groups_of_order(n, source, GroupMode::All)? {
            let aut = AutGroup::new(Arc::new(g.clone()), AutConfig::default())?;
            let t = Instant::now();
            let lambda_classes = aut_orbit_classes(&aut, &enumerate_transversals(&aut)).len();
            let lambda_time = t.elapsed();
            let t = Instant::now();
            let (conjugacy, skip_reason) = match classes_via_subgroup_conjugacy(&aut, DEFAULT_NAIVE_CAP) {
                Ok(c) => (Some((c.len(), t.elapsed())), None),
                Err(e) => (None, Some(e.to_string())),
            };
            rows.push(BenchRow {
                order: n,
                group_id: g.id_label().to_string(),
                lambda_classes,
                lambda_time,
                conjugacy,
                skip_reason,
            });
        }
    }
    Ok(rows)
}
