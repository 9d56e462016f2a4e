//! Switch-point counts on seeded random module pairs.

use std::fmt::Write as _;

use crate::persistence::{critical_points, random_rect_module, CritSet, ModuleError};
use crate::rng::derive_seed;
use crate::switch::{all_switch_points, theoretical_bound};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentRow {
    pub n_rects: usize,
    pub n_critical: usize,
    pub raw: usize,
    pub unique: usize,
    pub bound: u128,
    /// Row seed; `M` uses sub-stream 0 of it and `N` sub-stream 1.
    pub seed: u64,
}

/// Seed of the `run`-th row for the `size_index`-th size.
pub fn row_seed(seed: u64, size_index: usize, runs: usize, run: usize) -> u64 {
    derive_seed(seed, (size_index * runs + run) as u64)
}

pub fn experiment_row(n_rects: usize, seed: u64, coord_max: i64) -> Result<ExperimentRow, ModuleError> {
    let m = random_rect_module(n_rects, derive_seed(seed, 0), coord_max)?;
    let n = random_rect_module(n_rects, derive_seed(seed, 1), coord_max)?;
    let crit = CritSet::from_sources(&critical_points(&m), &critical_points(&n));
    let run = all_switch_points(&crit);
    Ok(ExperimentRow {
        n_rects,
        n_critical: crit.len(),
        raw: run.raw_count(),
        unique: run.unique().len(),
        bound: theoretical_bound(crit.len() as u64),
        seed,
    })
}

/// `runs` rows for every size, sizes in the given order.
pub fn experiment_counts(
    sizes: &[usize],
    runs: usize,
    seed: u64,
    coord_max: i64,
) -> Result<Vec<ExperimentRow>, ModuleError> {
    let mut rows = Vec::with_capacity(sizes.len() * runs);
    for (i, &n_rects) in sizes.iter().enumerate() {
        for run in 0..runs {
            rows.push(experiment_row(n_rects, row_seed(seed, i, runs, run), coord_max)?);
        }
    }
    Ok(rows)
}

pub const EXPERIMENT_CSV_HEADER: &str = "n_rects,n_critical,raw,unique,bound,seed";

pub fn experiment_csv(rows: &[ExperimentRow]) -> String {
    let mut out = String::from(EXPERIMENT_CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(out, "{},{},{},{},{},{}", r.n_rects, r.n_critical, r.raw, r.unique, r.bound, r.seed);
    }
    out
}
