//! Each pair strictly on its own side of the line.

use super::{
    indexed, par_collect, weight_combinations, Algorithm, Configuration, Emission, PairWeights,
    Quadruple, Side, SwitchError, SwitchPoint,
};
use crate::geometry::{segment_shadow_contains, Point, Quadrant};
use crate::persistence::CritSet;
use crate::rat::Rat;

/// Is there a positive-slope line with both `up` points strictly below and
/// both `right` points strictly above?
///
/// Infeasible exactly when an `up` point lies in the upper-left shadow of the
/// `right` segment, or a `right` point in the lower-right shadow of the `up`
/// segment.
pub fn separable_split(up: (&Point, &Point), right: (&Point, &Point)) -> bool {
    let up_blocked = [up.0, up.1]
        .into_iter()
        .any(|p| segment_shadow_contains(p, right.0, right.1, Quadrant::UpperLeft));
    let right_blocked = [right.0, right.1]
        .into_iter()
        .any(|p| segment_shadow_contains(p, up.0, up.1, Quadrant::LowerRight));
    !(up_blocked || right_blocked)
}

/// Slope `η(u₂ − v₂) / (δ(w₁ − x₁))` of the lines balancing the pairs, with
/// `x, w` below (`w₁ ≥ x₁`) and `u, v` above (`u₂ ≥ v₂`).
///
/// `None` when `w₁ = x₁` or `u₂ = v₂`: one pair then has zero cost on every
/// admissible line while the other does not.
pub fn omega_2p2p(
    x: &Point,
    w: &Point,
    u: &Point,
    v: &Point,
    weights: PairWeights,
) -> Result<Option<SwitchPoint>, SwitchError> {
    let distinct = [x, w, u, v].into_iter().collect::<std::collections::BTreeSet<_>>().len();
    if distinct != 4 {
        return Err(SwitchError::NotDistinct);
    }
    if w.x < x.x {
        return Err(SwitchError::Labeling("w must not precede x horizontally"));
    }
    if u.y < v.y {
        return Err(SwitchError::Labeling("u must not precede v vertically"));
    }
    let dx = &w.x - &x.x;
    let dy = &u.y - &v.y;
    if dx.is_zero() || dy.is_zero() {
        return Ok(None);
    }
    let slope = (weights.eta_rat() * dy) / (weights.delta_rat() * dx);
    Ok(SwitchPoint::at_infinity(slope))
}

/// Can a line of slope `m` put all of `up` strictly below and all of `right`
/// strictly above? Compares intercepts `y − m·x`.
pub fn slope_separates(m: &Rat, up: &[&Point], right: &[&Point]) -> bool {
    let intercept = |p: &&Point| &p.y - &(m * &p.x);
    let below = up.iter().map(intercept).max();
    let above = right.iter().map(intercept).min();
    match (below, above) {
        (Some(b), Some(a)) => b < a,
        _ => true,
    }
}

pub fn alg_2paired(crit: &CritSet) -> Vec<SwitchPoint> {
    alg_2paired_traced(crit).into_iter().map(|e| e.omega).collect()
}

const CONFIG: Configuration =
    Configuration { x: Side::Below, u: Side::Above, v: Side::Above, w: Side::Below };

/// Enumerates four distinct points, each split into an ordered
/// (below-pair, above-pair), with the unique labeling inside each pair.
pub fn alg_2paired_traced(crit: &CritSet) -> Vec<Emission> {
    let pts = indexed(crit);
    let n = pts.len();
    if n < 4 {
        return Vec::new();
    }
    par_collect(n, |a, out| {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    let splits = [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))];
                    for (p1, p2) in splits {
                        for (below, above) in [(p1, p2), (p2, p1)] {
                            emit_split(&pts, below, above, out);
                        }
                    }
                }
            }
        }
    })
}

fn emit_split(
    pts: &[(Point, crate::persistence::Parents)],
    below: (usize, usize),
    above: (usize, usize),
    out: &mut Vec<Emission>,
) {
    let (mut xi, mut wi) = below;
    if pts[wi].0.x < pts[xi].0.x {
        std::mem::swap(&mut xi, &mut wi);
    }
    let (mut ui, mut vi) = above;
    if pts[ui].0.y < pts[vi].0.y {
        std::mem::swap(&mut ui, &mut vi);
    }
    let ((x, tx), (w, tw), (u, tu), (v, tv)) = (&pts[xi], &pts[wi], &pts[ui], &pts[vi]);
    if x.x == w.x || u.y == v.y || !separable_split((x, w), (u, v)) {
        return;
    }
    for weights in weight_combinations(*tu, *tv, *tx, *tw) {
        let Ok(Some(omega)) = omega_2p2p(x, w, u, v, weights) else {
            continue;
        };
        let slope = omega.as_slope().expect("2p2p points lie at infinity");
        if slope_separates(slope, &[x, w], &[u, v]) {
            out.push(Emission {
                algorithm: Algorithm::TwoPaired,
                quad: Quadruple::new(x.clone(), u.clone(), v.clone(), w.clone()),
                weights,
                config: CONFIG,
                omega,
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::int(x, y)
    }

    #[test]
    fn separable_split_examples() {
        let (u, v) = (p(1, 4), p(2, 1));
        assert!(separable_split((&p(4, 0), &p(6, 3)), (&u, &v)));
        assert!(!separable_split((&p(0, 5), &p(6, 3)), (&u, &v)));
        assert!(!separable_split((&u, &v), (&u, &v)));
    }

    #[test]
    fn omega_examples() {
        let (u, v, w, x) = (p(1, 4), p(2, 1), p(6, 3), p(4, 0));
        assert_eq!(
            omega_2p2p(&x, &w, &u, &v, PairWeights::new(1, 1)),
            Ok(Some(SwitchPoint::AtInfinity(Rat::new(3, 2))))
        );
        assert_eq!(
            omega_2p2p(&x, &w, &u, &v, PairWeights::new(2, 1)),
            Ok(Some(SwitchPoint::AtInfinity(Rat::new(3, 4))))
        );
        assert_eq!(omega_2p2p(&p(4, 0), &p(4, 3), &u, &v, PairWeights::new(1, 1)), Ok(None));
        assert!(matches!(
            omega_2p2p(&w, &x, &u, &v, PairWeights::new(1, 1)),
            Err(SwitchError::Labeling(_))
        ));
        assert_eq!(omega_2p2p(&x, &w, &u, &u, PairWeights::new(1, 1)), Err(SwitchError::NotDistinct));
    }

    #[test]
    fn slope_separates_examples() {
        let up = [&p(4, 0), &p(6, 3)];
        let right = [&p(1, 4), &p(2, 1)];
        assert!(slope_separates(&Rat::new(3, 2), &up, &right));
        assert!(!slope_separates(&Rat::new(1, 100), &up, &right));
        assert!(slope_separates(&Rat::from_int(10), &up, &right));
    }

    #[test]
    fn alg_examples() {
        let m = vec![p(1, 4), p(2, 1)];
        let n = vec![p(6, 3), p(4, 0)];
        let out = alg_2paired(&CritSet::from_sources(&m, &n));
        assert!(out.contains(&SwitchPoint::AtInfinity(Rat::new(3, 2))));

        let three = vec![p(0, 0), p(1, 2), p(3, 1)];
        assert!(alg_2paired(&CritSet::from_sources(&three, &three)).is_empty());

        let vertical: Vec<Point> = (0..4).map(|y| p(2, y)).collect();
        assert!(alg_2paired(&CritSet::from_sources(&vertical[..2], &vertical[2..])).is_empty());
    }
}
