//! The line splits both pairs: `u, w` strictly above, `v, x` strictly below.

use std::collections::BTreeSet;

use super::{
    difference_signs, indexed, par_collect, slope_separates, weight_combinations, Algorithm,
    Configuration, Emission, PairWeights, Quadruple, Side, SwitchPoint,
};
use crate::geometry::Point;
use crate::persistence::CritSet;
use crate::rat::Rat;

use super::paired::separable_split;

/// Candidate switch point for the split-pairs configuration.
///
/// With `same_sign` (the differences `p(u) − p(v)` and `p(w) − p(x)` agree in
/// sign) and `δ = η`, the balancing lines share the slope
/// `(u₂ − w₂)/(v₁ − x₁)`; with `δ ≠ η` they share the point
/// `((ηv₁ − δx₁)/(η − δ), (ηu₂ − δw₂)/(η − δ))`. With opposite signs they share
/// `((ηv₁ + δx₁)/(η + δ), (ηu₂ + δw₂)/(η + δ))`.
pub fn omega_2u2u(
    x: &Point,
    v: &Point,
    u: &Point,
    w: &Point,
    weights: PairWeights,
    same_sign: bool,
) -> Option<SwitchPoint> {
    let (d, e) = (weights.delta_rat(), weights.eta_rat());
    if same_sign {
        if weights.delta() == weights.eta() {
            let run = &v.x - &x.x;
            let rise = &u.y - &w.y;
            if run.is_zero() || rise.is_zero() {
                return None;
            }
            return SwitchPoint::at_infinity(rise / run);
        }
        let denom = &e - &d;
        let px = (&(&e * &v.x) - &(&d * &x.x)) / &denom;
        let py = (&(&e * &u.y) - &(&d * &w.y)) / &denom;
        Some(SwitchPoint::Finite(Point::new(px, py)))
    } else {
        let denom = &e + &d;
        let px = (&(&e * &v.x) + &(&d * &x.x)) / &denom;
        let py = (&(&e * &u.y) + &(&d * &w.y)) / &denom;
        Some(SwitchPoint::Finite(Point::new(px, py)))
    }
}

/// Is there a positive-slope line through the proper point `omega` with
/// `x, v` strictly below and `u, w` strictly above?
///
/// Points weakly lower-right of `omega` are below every such line and points
/// weakly upper-left are above it; points in the open upper-right or
/// lower-left quadrants each bound the slope from one side.
pub fn check_omega_2u2u(omega: &Point, x: &Point, v: &Point, u: &Point, w: &Point) -> bool {
    if [x, v, u, w].contains(&omega) {
        return false;
    }
    let upper_left = |p: &Point| p.x <= omega.x && p.y >= omega.y;
    let lower_right = |p: &Point| p.x >= omega.x && p.y <= omega.y;
    if upper_left(x) || upper_left(v) || lower_right(u) || lower_right(w) {
        return false;
    }
    // Remaining points are strictly upper-right or strictly lower-left of ω.
    let mut lower: Option<Rat> = None;
    let mut upper: Option<Rat> = None;
    let below = [x, v].map(|p| (p, true));
    let above = [u, w].map(|p| (p, false));
    for (c, must_be_below) in below.into_iter().chain(above) {
        if lower_right(c) || upper_left(c) {
            continue;
        }
        let slope = (&c.y - &omega.y) / (&c.x - &omega.x);
        let upper_right = c.x > omega.x;
        // below & upper-right or above & lower-left: the line must be steeper
        if upper_right == must_be_below {
            lower = Some(match lower {
                Some(l) if l >= slope => l,
                _ => slope,
            });
        } else {
            upper = Some(match upper {
                Some(u) if u <= slope => u,
                _ => slope,
            });
        }
    }
    match (lower, upper) {
        (_, None) => true,
        (None, Some(u)) => u.is_positive(),
        (Some(l), Some(u)) => l < u,
    }
}

pub fn alg_2unpaired(crit: &CritSet) -> Vec<SwitchPoint> {
    alg_2unpaired_traced(crit).into_iter().map(|e| e.omega).collect()
}

const CONFIG: Configuration =
    Configuration { x: Side::Below, u: Side::Above, v: Side::Below, w: Side::Above };

/// Enumerates pairs `(u, v)` and `(w, x)` with `u, w` above and `v, x` below.
/// Swapping the two pairs (together with `δ ↔ η`) describes the same
/// configuration, so only `(u, v) < (w, x)` in index order is visited.
pub fn alg_2unpaired_traced(crit: &CritSet) -> Vec<Emission> {
    let pts = indexed(crit);
    let n = pts.len();
    if n < 3 {
        return Vec::new();
    }
    par_collect(n, |ui, out| {
        for vi in 0..n {
            if vi == ui {
                continue;
            }
            for wi in ui..n {
                for xi in 0..n {
                    if xi == wi || xi == ui || vi == wi || (wi == ui && xi <= vi) {
                        continue;
                    }
                    emit(&pts, [xi, ui, vi, wi], out);
                }
            }
        }
    })
}

fn emit(pts: &[(Point, crate::persistence::Parents)], idx: [usize; 4], out: &mut Vec<Emission>) {
    let [(x, tx), (u, tu), (v, tv), (w, tw)] = idx.map(|i| &pts[i]);
    if !separable_split((v, x), (u, w)) {
        return;
    }
    let sign_cases: BTreeSet<bool> = difference_signs(u, v)
        .iter()
        .flat_map(|s1| difference_signs(w, x).iter().map(move |s2| s1 == s2))
        .collect();
    let quad = Quadruple::new(x.clone(), u.clone(), v.clone(), w.clone());
    for weights in weight_combinations(*tu, *tv, *tx, *tw) {
        for &same_sign in &sign_cases {
            let Some(omega) = omega_2u2u(x, v, u, w, weights, same_sign) else {
                continue;
            };
            let keep = match &omega {
                SwitchPoint::Finite(p) => check_omega_2u2u(p, x, v, u, w),
                SwitchPoint::AtInfinity(m) => slope_separates(m, &[v, x], &[u, w]),
            };
            if keep {
                out.push(Emission {
                    algorithm: Algorithm::TwoUnpaired,
                    quad: quad.clone(),
                    weights,
                    config: CONFIG,
                    omega,
                });
            }
        }
    }
}
