//! Benchmarks for the matching-distance pipeline; see `benches/`.

use matchdist_core::persistence::{critical_points, random_rect_module};
use matchdist_core::rng::derive_seed;
use matchdist_core::{CritSet, RectModule};

/// Seeded random module pair with `n_rects` rectangles each in `[0, 10]²`.
pub fn module_pair(n_rects: usize, seed: u64) -> (RectModule, RectModule) {
    let m = random_rect_module(n_rects, derive_seed(seed, 0), 10).expect("valid range");
    let n = random_rect_module(n_rects, derive_seed(seed, 1), 10).expect("valid range");
    (m, n)
}

pub fn crit_pair(n_rects: usize, seed: u64) -> CritSet {
    let (m, n) = module_pair(n_rects, seed);
    CritSet::from_sources(&critical_points(&m), &critical_points(&n))
}
