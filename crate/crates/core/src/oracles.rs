//! Brute-force verifiers, written independently of the algorithms they check.
//!
//! Everything here recomputes its own pushes, sides and costs from the line
//! equation instead of calling into [`crate::geometry`] or [`crate::switch`].

use thiserror::Error;

use crate::geometry::{Point, PosLine};
use crate::persistence::RectModule;
use crate::rat::Rat;
use crate::restriction::{restrict, Bar};
use crate::rng::SplitMix64;
use crate::switch::{Configuration, Emission, PairWeights, Quadruple, Side, SwitchPoint};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("brute-force bottleneck limited to {limit} bars, got {got}")]
    TooManyBars { limit: usize, got: usize },
}

pub const BRUTE_LIMIT: usize = 8;

/// Minimum over all partial matchings of the largest edge cost, by exhaustive
/// search. Unmatched bars pay half their length.
pub fn brute_bottleneck(a: &[Bar], b: &[Bar]) -> Result<Rat, OracleError> {
    let got = a.len() + b.len();
    if got > BRUTE_LIMIT {
        return Err(OracleError::TooManyBars { limit: BRUTE_LIMIT, got });
    }
    let pa: Vec<(Rat, Rat)> = a.iter().map(|x| (x.birth.clone(), x.death.clone())).collect();
    let pb: Vec<(Rat, Rat)> = b.iter().map(|x| (x.birth.clone(), x.death.clone())).collect();
    let cost = |x: &(Rat, Rat), y: &(Rat, Rat)| {
        Rat::max_of(&(&x.0 - &y.0).abs(), &(&x.1 - &y.1).abs())
    };
    let half = |x: &(Rat, Rat)| (&x.1 - &x.0) / Rat::from_int(2);
    Ok(exhaustive(&pa, &pb, &cost, &half, Rat::zero()))
}

/// Float counterpart of [`brute_bottleneck`] on `(birth, death)` pairs.
pub fn brute_bottleneck_f64(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let cost = |x: &(f64, f64), y: &(f64, f64)| (x.0 - y.0).abs().max((x.1 - y.1).abs());
    let half = |x: &(f64, f64)| (x.1 - x.0) / 2.0;
    exhaustive(a, b, &cost, &half, 0.0)
}

fn exhaustive<B, C: Clone + PartialOrd>(
    a: &[B],
    b: &[B],
    cost: &dyn Fn(&B, &B) -> C,
    half: &dyn Fn(&B) -> C,
    zero: C,
) -> C {
    struct Search<'a, B, C> {
        a: &'a [B],
        b: &'a [B],
        cost: &'a dyn Fn(&B, &B) -> C,
        half: &'a dyn Fn(&B) -> C,
        used: Vec<bool>,
        best: Option<C>,
    }

    fn bigger<C: PartialOrd>(p: C, q: C) -> C {
        if p >= q {
            p
        } else {
            q
        }
    }

    impl<B, C: Clone + PartialOrd> Search<'_, B, C> {
        fn go(&mut self, i: usize, worst: C) {
            if i == self.a.len() {
                let mut total = worst;
                for (j, y) in self.b.iter().enumerate() {
                    if !self.used[j] {
                        total = bigger(total, (self.half)(y));
                    }
                }
                if self.best.as_ref().is_none_or(|b| total < *b) {
                    self.best = Some(total);
                }
                return;
            }
            let alone = bigger(worst.clone(), (self.half)(&self.a[i]));
            self.go(i + 1, alone);
            for j in 0..self.b.len() {
                if !self.used[j] {
                    self.used[j] = true;
                    let paired = bigger(worst.clone(), (self.cost)(&self.a[i], &self.b[j]));
                    self.go(i + 1, paired);
                    self.used[j] = false;
                }
            }
        }
    }

    let mut search = Search { a, b, cost, half, used: vec![false; b.len()], best: None };
    search.go(0, zero.clone());
    search.best.unwrap_or(zero)
}

/// Where `a` sits relative to `y = m·x + q`: `Less` below, `Greater` above.
fn side_of(m: &Rat, q: &Rat, a: &Point) -> std::cmp::Ordering {
    a.y.cmp(&(&(m * &a.x) + q))
}

fn satisfies(m: &Rat, q: &Rat, a: &Point, side: Side) -> bool {
    use std::cmp::Ordering::*;
    match (side, side_of(m, q, a)) {
        (Side::Below, o) => o == Less,
        (Side::Above, o) => o == Greater,
        (Side::NotBelow, o) => o != Less,
        (Side::NotAbove, o) => o != Greater,
    }
}

fn realizes(m: &Rat, q: &Rat, quad: &Quadruple, sides: &Configuration) -> bool {
    satisfies(m, q, &quad.x, sides.x)
        && satisfies(m, q, &quad.u, sides.u)
        && satisfies(m, q, &quad.v, sides.v)
        && satisfies(m, q, &quad.w, sides.w)
}

/// Weighted position of the push of `a` onto `y = m·x + q`: points below move
/// up and keep their `x`, points above move right to `x = (a₂ − q)/m`.
fn pushed_position(m: &Rat, q: &Rat, a: &Point) -> Rat {
    let x = match side_of(m, q, a) {
        std::cmp::Ordering::Greater => (&a.y - q) / m,
        _ => a.x.clone(),
    };
    let weight = if *m < Rat::one() { m.clone() } else { Rat::one() };
    weight * x
}

fn gap(m: &Rat, q: &Rat, quad: &Quadruple, weights: PairWeights) -> Rat {
    let p = |a: &Point| pushed_position(m, q, a);
    let first = (p(&quad.u) - p(&quad.v)).abs() / Rat::from_int(weights.delta() as i64);
    let second = (p(&quad.x) - p(&quad.w)).abs() / Rat::from_int(weights.eta() as i64);
    first - second
}

/// Random rational strictly inside `(lo, hi)`, where a missing end is infinite.
fn inside(lo: Option<&Rat>, hi: Option<&Rat>, rng: &mut SplitMix64) -> Rat {
    const STEPS: i64 = 1024;
    let k = 1 + rng.below(STEPS as u64 - 1) as i64;
    match (lo, hi) {
        (Some(l), Some(h)) => l + &((h - l) * Rat::new(k, STEPS)),
        (Some(l), None) => l + &Rat::new(k, STEPS - k),
        (None, Some(h)) => h - &Rat::new(k, STEPS - k),
        (None, None) => Rat::new(k - STEPS / 2, 16),
    }
}

/// Parameter values at which some point changes side, sorted. For a pencil
/// through a proper point these are slopes (only positive ones matter); for a
/// fixed slope they are intercepts.
fn breakpoints(pencil: &SwitchPoint, pts: &[&Point]) -> Vec<Rat> {
    let mut out: Vec<Rat> = match pencil {
        SwitchPoint::Finite(o) => pts
            .iter()
            .filter(|p| p.x != o.x)
            .map(|p| (&p.y - &o.y) / (&p.x - &o.x))
            .filter(Rat::is_positive)
            .collect(),
        SwitchPoint::AtInfinity(m) => pts.iter().map(|p| &p.y - &(m * &p.x)).collect(),
    };
    out.sort();
    out.dedup();
    out
}

/// Lines of a pencil: each open cell between breakpoints and each breakpoint
/// once, then uniformly chosen cells for the remaining trials.
fn pencil_lines(pencil: &SwitchPoint, pts: &[&Point], trials: usize, seed: u64) -> Vec<(Rat, Rat)> {
    let cuts = breakpoints(pencil, pts);
    let finite = matches!(pencil, SwitchPoint::Finite(_));
    // cell i lies between cuts[i-1] and cuts[i]; for slopes the first cell
    // starts at 0
    let zero = Rat::zero();
    let cells = cuts.len() + 1;
    let strata = cells + cuts.len();
    let mut rng = SplitMix64::new(seed);
    let mut params = Vec::with_capacity(trials);
    for t in 0..trials {
        let s = if t < strata { t } else { rng.below(strata as u64) as usize };
        let value = if s < cells {
            let lo = if s == 0 { finite.then_some(&zero) } else { Some(&cuts[s - 1]) };
            inside(lo, cuts.get(s), &mut rng)
        } else {
            cuts[s - cells].clone()
        };
        params.push(value);
    }
    params
        .into_iter()
        .map(|value| match pencil {
            SwitchPoint::Finite(o) => {
                let q = &o.y - &(&value * &o.x);
                (value, q)
            }
            SwitchPoint::AtInfinity(m) => (m.clone(), value),
        })
        .collect()
}

fn quad_points(quad: &Quadruple) -> [&Point; 4] {
    [&quad.x, &quad.u, &quad.v, &quad.w]
}

/// Samples `trials` lines through `omega`, keeps those realizing `config`,
/// and reports whether the cost gap is exactly zero on all of them. No kept
/// line counts as failure.
pub fn zero_gap_verify(
    quad: &Quadruple,
    weights: PairWeights,
    omega: &SwitchPoint,
    config: &Configuration,
    trials: usize,
    seed: u64,
) -> bool {
    let mut kept = 0;
    for (m, q) in pencil_lines(omega, &quad_points(quad), trials, seed) {
        if !realizes(&m, &q, quad, config) {
            continue;
        }
        kept += 1;
        if !gap(&m, &q, quad, weights).is_zero() {
            return false;
        }
    }
    kept > 0
}

pub fn verify_emission(e: &Emission, trials: usize, seed: u64) -> bool {
    zero_gap_verify(&e.quad, e.weights, &e.omega, &e.config, trials, seed)
}

/// Sides required of `(x, u, v, w)`, optionally for lines through a fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub sides: Configuration,
    pub pivot: Option<Point>,
}

/// Searches random positive-slope lines for one realizing `constraint`.
/// `true` is a certificate; `false` proves nothing.
pub fn separability_sampling(quad: &Quadruple, constraint: &Constraint, trials: usize, seed: u64) -> bool {
    let pts = quad_points(quad);
    if let Some(p) = &constraint.pivot {
        let pencil = SwitchPoint::Finite(p.clone());
        return pencil_lines(&pencil, &pts, trials, seed)
            .iter()
            .any(|(m, q)| realizes(m, q, quad, &constraint.sides));
    }
    let lo_x = pts.iter().map(|p| p.x.to_f64()).fold(f64::INFINITY, f64::min) - 1.0;
    let hi_x = pts.iter().map(|p| p.x.to_f64()).fold(f64::NEG_INFINITY, f64::max) + 1.0;
    let lo_y = pts.iter().map(|p| p.y.to_f64()).fold(f64::INFINITY, f64::min) - 1.0;
    let hi_y = pts.iter().map(|p| p.y.to_f64()).fold(f64::NEG_INFINITY, f64::max) + 1.0;
    let mut rng = SplitMix64::new(seed);
    for _ in 0..trials {
        let angle = rng.unit_f64() * std::f64::consts::FRAC_PI_2;
        let ax = lo_x + rng.unit_f64() * (hi_x - lo_x);
        let ay = lo_y + rng.unit_f64() * (hi_y - lo_y);
        let (Some(m), Some(x0), Some(y0)) = (
            Rat::approximate(angle.tan(), 4096),
            Rat::approximate(ax, 4096),
            Rat::approximate(ay, 4096),
        ) else {
            continue;
        };
        if !m.is_positive() {
            continue;
        }
        let q = y0 - &m * &x0;
        if realizes(&m, &q, quad, &constraint.sides) {
            return true;
        }
    }
    false
}

/// Parameters of a deterministic stream of random lines: slopes log-uniform
/// and intercepts uniform in the given closed ranges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineSample {
    pub count: usize,
    pub seed: u64,
    pub slope_range: (Rat, Rat),
    pub intercept_range: (Rat, Rat),
}

impl LineSample {
    pub fn lines(&self) -> Vec<PosLine> {
        let (s0, s1) = (self.slope_range.0.to_f64().ln(), self.slope_range.1.to_f64().ln());
        let (q0, q1) = (self.intercept_range.0.to_f64(), self.intercept_range.1.to_f64());
        let mut rng = SplitMix64::new(self.seed);
        (0..self.count)
            .filter_map(|_| {
                let m = (s0 + rng.unit_f64() * (s1 - s0)).exp();
                let q = q0 + rng.unit_f64() * (q1 - q0);
                PosLine::new(Rat::approximate(m, 1 << 20)?, Rat::approximate(q, 1 << 20)?)
            })
            .collect()
    }
}

/// Largest weighted bottleneck distance over the sampled lines. Never exceeds
/// the matching distance.
pub fn sampled_matching_lower_bound(m: &RectModule, n: &RectModule, sample: &LineSample) -> Rat {
    sample
        .lines()
        .iter()
        .map(|l| line_value(m, n, l))
        .max()
        .unwrap_or_else(Rat::zero)
}

fn line_value(m: &RectModule, n: &RectModule, line: &PosLine) -> Rat {
    let a = restrict(m, line);
    let b = restrict(n, line);
    if a.len() + b.len() <= BRUTE_LIMIT {
        brute_bottleneck(&a, &b).expect("within limit")
    } else {
        crate::bottleneck::bottleneck_distance(&a, &b)
    }
}

/// Restriction to `y = m·x + q` evaluated in floating point.
pub fn restrict_f64(module: &RectModule, m: f64, q: f64) -> Vec<(f64, f64)> {
    let weight = m.min(1.0);
    let mut bars = Vec::new();
    for r in module.rectangles() {
        let (c1, c2) = (r.lower().x.to_f64(), r.lower().y.to_f64());
        let (d1, d2) = (r.upper().x.to_f64(), r.upper().y.to_f64());
        let birth = weight * c1.max((c2 - q) / m);
        let death = weight * d1.min((d2 - q) / m);
        if birth < death {
            for _ in 0..r.multiplicity() {
                bars.push((birth, death));
            }
        }
    }
    bars
}

/// Weighted bottleneck distance on one float line, by exhaustive matching.
pub fn line_value_f64(m: &RectModule, n: &RectModule, slope: f64, intercept: f64) -> f64 {
    brute_bottleneck_f64(&restrict_f64(m, slope, intercept), &restrict_f64(n, slope, intercept))
}
