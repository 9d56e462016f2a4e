//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::time::{Duration, Instant};

use matchdist_core::bottleneck::bottleneck_distance;
use matchdist_core::distance::matching_distance;
use matchdist_core::experiment::{experiment_counts, experiment_csv};
use matchdist_core::formats::switch_points_csv;
use matchdist_core::oracles::{
    brute_bottleneck, line_value_f64, sampled_matching_lower_bound, separability_sampling,
    verify_emission, Constraint, LineSample,
};
use matchdist_core::persistence::{critical_points, random_rect_module};
use matchdist_core::rng::{derive_seed, SplitMix64};
use matchdist_core::switch::{
    all_emissions, all_switch_points, check_omega_2u2u, separable_3vs1, separable_split,
    theoretical_bound, Configuration, Quadruple, Side, XDirection,
};
use matchdist_core::{Bar, CritSet, Point, Rat, RectModule, Rectangle};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn within(limit_s: u64, start: Instant) -> (bool, String) {
    let took = start.elapsed();
    (took <= Duration::from_secs(limit_s), format!("{:.1}s of {limit_s}s", took.as_secs_f64()))
}

fn random_points(rng: &mut SplitMix64, count: usize, hi: i64) -> Vec<Point> {
    (0..count).map(|_| Point::int(rng.range_i64(0, hi), rng.range_i64(0, hi))).collect()
}

fn zero_gap_soundness() -> Outcome {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0xC1);
    let (mut emissions, mut failures) = (0usize, 0usize);
    for pair in 0..50u64 {
        let (cm, cn) = (1 + rng.below(8) as usize, 1 + rng.below(8) as usize);
        let m = random_points(&mut rng, cm, 20);
        let n = random_points(&mut rng, cn, 20);
        for (k, e) in all_emissions(&CritSet::from_sources(&m, &n)).iter().enumerate() {
            emissions += 1;
            if !verify_emission(e, 50, derive_seed(pair, k as u64)) {
                failures += 1;
                if failures <= 3 {
                    eprintln!("zero-gap failure: {e:?}");
                }
            }
        }
    }
    let (fast, time) = within(60, start);
    outcome(
        failures == 0 && fast && emissions > 0,
        format!("50 pairs, {emissions} switch points, {failures} failures, {time}"),
    )
}

fn filter_soundness() -> Outcome {
    let mut rng = SplitMix64::new(0xC2);
    let split = Configuration { x: Side::Below, u: Side::Above, v: Side::Below, w: Side::Above };
    let (mut witnessed, mut violations) = (0usize, 0usize);
    for trial in 0..12_000u64 {
        let pts = random_points(&mut rng, 5, 6);
        let [x, u, v, w, pivot] = [&pts[0], &pts[1], &pts[2], &pts[3], &pts[4]];
        let quad = Quadruple::new(x.clone(), u.clone(), v.clone(), w.clone());
        let (constraint, predicate) = match trial % 4 {
            0 | 1 => {
                let dir = if trial % 4 == 0 { XDirection::XPushesUp } else { XDirection::XPushesRight };
                (Constraint { sides: dir.configuration(), pivot: None }, separable_3vs1(u, v, w, x, dir))
            }
            2 => (Constraint { sides: split, pivot: None }, separable_split((v, x), (u, w))),
            _ => (
                Constraint { sides: split, pivot: Some(pivot.clone()) },
                check_omega_2u2u(pivot, x, v, u, w),
            ),
        };
        if separability_sampling(&quad, &constraint, 200, trial) {
            witnessed += 1;
            if !predicate {
                violations += 1;
                if violations <= 3 {
                    eprintln!("filter violation: trial {trial} {quad:?} {constraint:?}");
                }
            }
        }
    }
    outcome(violations == 0, format!("12000 configurations, {witnessed} witnessed separable, {violations} violations"))
}

fn random_barcode(rng: &mut SplitMix64, count: usize) -> Vec<Bar> {
    (0..count)
        .map(|_| {
            let b = Rat::new(rng.range_i64(0, 40), 4);
            let len = Rat::new(rng.range_i64(1, 24), 4);
            Bar::new(b.clone(), &b + &len).unwrap()
        })
        .collect()
}

fn bottleneck_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0xC3);
    let mut mismatches = 0;
    for _ in 0..600 {
        let total = rng.below(7) as usize;
        let left = rng.below(total as u64 + 1) as usize;
        let a = random_barcode(&mut rng, left);
        let b = random_barcode(&mut rng, total - left);
        if bottleneck_distance(&a, &b) != brute_bottleneck(&a, &b).unwrap() {
            mismatches += 1;
        }
    }
    let (fast, time) = within(10, start);
    outcome(mismatches == 0 && fast, format!("600 instances, {mismatches} mismatches, {time}"))
}

fn small_pair(seed: u64, max_rects: u64, coord_max: i64) -> (RectModule, RectModule) {
    let mut rng = SplitMix64::new(seed);
    let nm = 1 + rng.below(max_rects) as usize;
    let nn = 1 + rng.below(max_rects) as usize;
    (
        random_rect_module(nm, derive_seed(seed, 0), coord_max).unwrap(),
        random_rect_module(nn, derive_seed(seed, 1), coord_max).unwrap(),
    )
}

fn maximality_falsification() -> Outcome {
    let start = Instant::now();
    let (mut violations, mut worst_excess) = (0usize, f64::NEG_INFINITY);
    for pair in 0..20u64 {
        let (m, n) = small_pair(derive_seed(0xC4, pair), 3, 10);
        let best = matching_distance(&m, &n).distance.to_f64();
        let mut rng = SplitMix64::new(derive_seed(0xC4 ^ 0xFF, pair));
        for _ in 0..100_000 {
            let slope = (rng.unit_f64() * std::f64::consts::FRAC_PI_2).tan();
            if !(slope > 0.0 && slope.is_finite()) {
                continue;
            }
            // intercepts that can reach [0,10]²
            let intercept = -10.0 * slope - 1.0 + rng.unit_f64() * (12.0 + 10.0 * slope);
            let value = line_value_f64(&m, &n, slope, intercept);
            worst_excess = worst_excess.max(value - best);
            if value > best + 1e-9 {
                violations += 1;
            }
        }
    }
    let (fast, time) = within(300, start);
    outcome(
        violations == 0 && fast,
        format!("20 pairs x 1e5 lines, {violations} violations, max excess {worst_excess:.3e}, {time}"),
    )
}

fn square(lo: i64, hi: i64) -> RectModule {
    RectModule::new(vec![Rectangle::int(lo, lo, hi, hi)])
}

fn desk_values() -> Outcome {
    let sample = LineSample {
        count: 10_000,
        seed: 5,
        slope_range: (Rat::new(9, 10), Rat::new(10, 9)),
        intercept_range: (Rat::new(-1, 10), Rat::new(1, 10)),
    };
    let close = |m: &RectModule, n: &RectModule, exact: &Rat| {
        let lb = sampled_matching_lower_bound(m, n, &sample);
        lb <= *exact && (exact - &lb) < Rat::new(1, 100)
    };
    let (a, b, empty) = (square(0, 4), square(1, 5), RectModule::empty());
    let alone = matching_distance(&a, &empty);
    let checks = [
        alone.distance == Rat::from_int(2) && *alone.witness.slope() == Rat::one(),
        close(&a, &empty, &Rat::from_int(2)),
        matching_distance(&a, &a).distance.is_zero() && close(&a, &a, &Rat::zero()),
        matching_distance(&a, &b).distance == Rat::one() && close(&a, &b, &Rat::one()),
    ];
    outcome(checks.iter().all(|&c| c), format!("checks {checks:?}"))
}

fn bound_formula() -> Outcome {
    let values = (theoretical_bound(4), theoretical_bound(3));
    outcome(values == (120_960, 18_144), format!("bound(4), bound(3) = {values:?}"))
}

fn count_ratio() -> Outcome {
    let rows = experiment_counts(&[5, 6], 3, 0xC7, 10).unwrap();
    let bad: Vec<_> = rows
        .iter()
        .filter(|r| !(r.unique <= r.raw && (r.raw as f64) < 1e-2 * r.bound as f64))
        .collect();
    let worst = rows.iter().map(|r| r.raw as f64 / r.bound as f64).fold(0.0, f64::max);
    outcome(bad.is_empty(), format!("{} runs, max raw/bound {worst:.2e}, {} outside envelope", rows.len(), bad.len()))
}

fn metric_properties() -> Outcome {
    let mut asymmetric = 0;
    for pair in 0..20u64 {
        let (m, n) = small_pair(derive_seed(0xC8, pair), 2, 10);
        if matching_distance(&m, &n).distance != matching_distance(&n, &m).distance {
            asymmetric += 1;
        }
    }
    let mut triangle = 0;
    for t in 0..10u64 {
        let seed = derive_seed(0xC9, t);
        let mods: Vec<RectModule> =
            (0..3).map(|i| random_rect_module(1 + (i % 2), derive_seed(seed, i as u64), 10).unwrap()).collect();
        let d = |i: usize, j: usize| matching_distance(&mods[i], &mods[j]).distance;
        if d(0, 2) > d(0, 1) + d(1, 2) {
            triangle += 1;
        }
    }
    outcome(
        asymmetric == 0 && triangle == 0,
        format!("20 pairs symmetric ({asymmetric} failures), 10 triples ({triangle} triangle failures)"),
    )
}

fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(f)
}

fn determinism() -> Outcome {
    let run = || {
        let mut out = Vec::new();
        for pair in 0..4u64 {
            let (m, n) = small_pair(derive_seed(0xCA, pair), 3, 10);
            let crit = CritSet::from_sources(&critical_points(&m), &critical_points(&n));
            let sp = all_switch_points(&crit);
            let raw: Vec<_> = sp.raw().cloned().collect();
            let r = matching_distance(&m, &n);
            out.push(format!("{}|{}|{:?}|{}", switch_points_csv(&raw), r.distance, r.witness, switch_points_csv(&sp.unique())));
        }
        out.push(experiment_csv(&experiment_counts(&[2, 3], 2, 0xCB, 10).unwrap()));
        out
    };
    let single = with_threads(1, run);
    let many = with_threads(4, run);
    outcome(single == many, format!("1 vs 4 threads, {} artifacts compared", single.len()))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("zero-gap soundness", zero_gap_soundness),
        ("filter soundness", filter_soundness),
        ("bottleneck oracle equivalence", bottleneck_equivalence),
        ("maximality falsification", maximality_falsification),
        ("desk-scale exact values", desk_values),
        ("bound formula", bound_formula),
        ("count-ratio sanity", count_ratio),
        ("metric properties", metric_properties),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!("criterion {}: {} {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if failed > 0 {
        println!("{failed} of 9 criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
