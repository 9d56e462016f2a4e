//! Seeded audits of the exact algorithms against the brute-force oracles.

use clap::ValueEnum;

use matchdist_core::bottleneck::bottleneck_distance;
use matchdist_core::distance::matching_distance;
use matchdist_core::oracles::{
    brute_bottleneck, sampled_matching_lower_bound, separability_sampling, verify_emission,
    Constraint, LineSample,
};
use matchdist_core::persistence::random_rect_module;
use matchdist_core::rng::{derive_seed, SplitMix64};
use matchdist_core::switch::{
    all_emissions, check_omega_2u2u, separable_3vs1, separable_split, Configuration, Quadruple,
    Side, XDirection,
};
use matchdist_core::{Bar, CritSet, Point, Rat};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Suite {
    /// Every emitted switch point has zero cost gap on sampled lines through it.
    ZeroGap,
    /// Sampled separating lines never contradict the separability filters.
    Separability,
    /// Exact bottleneck distance equals exhaustive search.
    Bottleneck,
    /// Sampled lines never beat the computed matching distance.
    LowerBound,
}

pub struct Report {
    pub failures: usize,
    pub summary: String,
}

fn points(rng: &mut SplitMix64, count: usize, hi: i64) -> Vec<Point> {
    (0..count).map(|_| Point::int(rng.range_i64(0, hi), rng.range_i64(0, hi))).collect()
}

pub fn run(suite: Suite, seed: u64, trials: usize) -> Report {
    match suite {
        Suite::ZeroGap => zero_gap(seed, trials),
        Suite::Separability => separability(seed, trials),
        Suite::Bottleneck => bottleneck(seed, trials),
        Suite::LowerBound => lower_bound(seed, trials),
    }
}

fn zero_gap(seed: u64, trials: usize) -> Report {
    let mut rng = SplitMix64::new(seed);
    let (mut checked, mut failures) = (0, 0);
    for t in 0..trials as u64 {
        let (cm, cn) = (1 + rng.below(8) as usize, 1 + rng.below(8) as usize);
        let m = points(&mut rng, cm, 20);
        let n = points(&mut rng, cn, 20);
        for (k, e) in all_emissions(&CritSet::from_sources(&m, &n)).iter().enumerate() {
            checked += 1;
            if !verify_emission(e, 50, derive_seed(derive_seed(seed, t), k as u64)) {
                failures += 1;
            }
        }
    }
    Report { failures, summary: format!("zero-gap: {trials} pairs, {checked} switch points, {failures} failures") }
}

fn separability(seed: u64, trials: usize) -> Report {
    let mut rng = SplitMix64::new(seed);
    let split = Configuration { x: Side::Below, u: Side::Above, v: Side::Below, w: Side::Above };
    let (mut witnessed, mut failures) = (0, 0);
    for t in 0..trials as u64 {
        let p = points(&mut rng, 5, 6);
        let quad = Quadruple::new(p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone());
        let Quadruple { x, u, v, w } = &quad;
        let (constraint, predicate) = match t % 4 {
            0 | 1 => {
                let dir = if t % 4 == 0 { XDirection::XPushesUp } else { XDirection::XPushesRight };
                (Constraint { sides: dir.configuration(), pivot: None }, separable_3vs1(u, v, w, x, dir))
            }
            2 => (Constraint { sides: split, pivot: None }, separable_split((v, x), (u, w))),
            _ => (Constraint { sides: split, pivot: Some(p[4].clone()) }, check_omega_2u2u(&p[4], x, v, u, w)),
        };
        if separability_sampling(&quad, &constraint, 200, derive_seed(seed, t)) {
            witnessed += 1;
            if !predicate {
                failures += 1;
            }
        }
    }
    Report {
        failures,
        summary: format!("separability: {trials} configurations, {witnessed} witnessed, {failures} contradictions"),
    }
}

fn barcode(rng: &mut SplitMix64, count: usize) -> Vec<Bar> {
    (0..count)
        .map(|_| {
            let birth = Rat::new(rng.range_i64(0, 40), 4);
            let death = &birth + &Rat::new(rng.range_i64(1, 24), 4);
            Bar::new(birth, death).expect("positive length")
        })
        .collect()
}

fn bottleneck(seed: u64, trials: usize) -> Report {
    let mut rng = SplitMix64::new(seed);
    let mut failures = 0;
    for _ in 0..trials {
        let total = rng.below(7) as usize;
        let left = rng.below(total as u64 + 1) as usize;
        let a = barcode(&mut rng, left);
        let b = barcode(&mut rng, total - left);
        if Ok(bottleneck_distance(&a, &b)) != brute_bottleneck(&a, &b) {
            failures += 1;
        }
    }
    Report { failures, summary: format!("bottleneck: {trials} instances, {failures} mismatches") }
}

fn lower_bound(seed: u64, trials: usize) -> Report {
    let mut failures = 0;
    for t in 0..trials as u64 {
        let s = derive_seed(seed, t);
        let mut rng = SplitMix64::new(s);
        let (nm, nn) = (1 + rng.below(3) as usize, 1 + rng.below(3) as usize);
        let m = random_rect_module(nm, derive_seed(s, 0), 10).expect("valid range");
        let n = random_rect_module(nn, derive_seed(s, 1), 10).expect("valid range");
        let sample = LineSample {
            count: 1000,
            seed: derive_seed(s, 2),
            slope_range: (Rat::new(1, 10), Rat::from_int(10)),
            intercept_range: (Rat::from_int(-100), Rat::from_int(10)),
        };
        if sampled_matching_lower_bound(&m, &n, &sample) > matching_distance(&m, &n).distance {
            failures += 1;
        }
    }
    Report { failures, summary: format!("lower-bound: {trials} module pairs, {failures} exceedances") }
}
