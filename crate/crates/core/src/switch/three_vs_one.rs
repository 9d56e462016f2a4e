//! One point on one side of the line, three on the other (not strictly).

use super::{
    difference_signs, indexed, par_collect, weight_combinations, Algorithm, Configuration,
    Emission, OmegaVerdict, PairWeights, Quadruple, Side, Sign, SwitchError, SwitchPoint,
};
use crate::geometry::{hull_meets_quadrant, Point, Quadrant};
use crate::persistence::CritSet;

/// Which way the lone point `x` is pushed; `u, v, w` are pushed the other way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum XDirection {
    /// `x` strictly below the line, `u, v, w` on or above it.
    XPushesUp,
    /// `x` strictly above the line, `u, v, w` on or below it.
    XPushesRight,
}

impl XDirection {
    // A hull point in this quadrant of x lands on x's side of every candidate line.
    fn blocking_quadrant(self) -> Quadrant {
        match self {
            XDirection::XPushesUp => Quadrant::LowerRight,
            XDirection::XPushesRight => Quadrant::UpperLeft,
        }
    }

    /// Side requirements on `(x, u, v, w)`.
    pub fn configuration(self) -> Configuration {
        match self {
            XDirection::XPushesUp => Configuration {
                x: Side::Below,
                u: Side::NotBelow,
                v: Side::NotBelow,
                w: Side::NotBelow,
            },
            XDirection::XPushesRight => Configuration {
                x: Side::Above,
                u: Side::NotAbove,
                v: Side::NotAbove,
                w: Side::NotAbove,
            },
        }
    }
}

/// Is there a positive-slope line putting `x` strictly on its side and
/// `u, v, w` weakly on the other?
pub fn separable_3vs1(u: &Point, v: &Point, w: &Point, x: &Point, dir: XDirection) -> bool {
    !hull_meets_quadrant(u, v, w, x, dir.blocking_quadrant(), false)
}

/// Candidate switch point where the two pair costs agree.
///
/// `XPushesUp`: `(x₁, w₂ ± (η/δ)|u₂ − v₂|)`; `XPushesRight`:
/// `(w₁ ± (η/δ)|u₁ − v₁|, x₂)`. The sign is that of `p(x) − p(w)`.
pub fn omega_3vs1(quad: &Quadruple, weights: PairWeights, sign: Sign, dir: XDirection) -> SwitchPoint {
    let ratio = weights.eta_rat() / weights.delta_rat();
    let Quadruple { x, u, v, w } = quad;
    let point = match dir {
        XDirection::XPushesUp => {
            let shift = sign.factor() * ratio * (&u.y - &v.y).abs();
            Point::new(x.x.clone(), &w.y + &shift)
        }
        XDirection::XPushesRight => {
            let shift = sign.factor() * ratio * (&u.x - &v.x).abs();
            Point::new(&w.x + &shift, x.y.clone())
        }
    };
    SwitchPoint::Finite(point)
}

/// Decide whether lines through `omega` realize the configuration with
/// equal pair costs. A candidate whose only obstruction is that it sits on the
/// boundary of `conv{u,v,w}` is superfluous: the zero-gap line then passes
/// through two critical points and is enumerated anyway.
pub fn check_omega_3vs1(
    omega: &Point,
    u: &Point,
    v: &Point,
    w: &Point,
    x: &Point,
    dir: XDirection,
) -> Result<OmegaVerdict, SwitchError> {
    if x == u || x == v || x == w {
        return Err(SwitchError::XNotDistinct(x.clone()));
    }
    let strictly_beyond_x = match dir {
        XDirection::XPushesUp => omega.y > x.y,
        XDirection::XPushesRight => omega.x > x.x,
    };
    if !strictly_beyond_x {
        return Ok(OmegaVerdict::RejectInfeasible);
    }
    let quadrant = dir.blocking_quadrant();
    if !hull_meets_quadrant(u, v, w, omega, quadrant, false) {
        Ok(OmegaVerdict::Accept)
    } else if !hull_meets_quadrant(u, v, w, omega, quadrant, true) {
        Ok(OmegaVerdict::RejectSuperfluous)
    } else {
        Ok(OmegaVerdict::RejectInfeasible)
    }
}

pub fn alg_3vs1(crit: &CritSet) -> Vec<SwitchPoint> {
    alg_3vs1_traced(crit).into_iter().map(|e| e.omega).collect()
}

/// Enumerates `x ≠ w`, an unordered pair `{u, v}` avoiding `x`, with
/// `u, v, w` not all equal, both directions, every `(δ, η)` and every sign
/// allowed by the order relation of `w` and `x`.
pub fn alg_3vs1_traced(crit: &CritSet) -> Vec<Emission> {
    let pts = indexed(crit);
    let n = pts.len();
    if n < 3 {
        return Vec::new();
    }
    par_collect(n, |xi, out| {
        let (x, tx) = &pts[xi];
        for (wi, (w, tw)) in pts.iter().enumerate() {
            if wi == xi {
                continue;
            }
            let signs = difference_signs(x, w);
            for ai in 0..n {
                for bi in ai..n {
                    if ai == xi || bi == xi || (ai == bi && ai == wi) {
                        continue;
                    }
                    for dir in [XDirection::XPushesUp, XDirection::XPushesRight] {
                        let (a, b) = (&pts[ai], &pts[bi]);
                        // label so that p(u) ≥ p(v) on every admissible line
                        let u_first = match dir {
                            XDirection::XPushesUp => a.0.y >= b.0.y,
                            XDirection::XPushesRight => a.0.x >= b.0.x,
                        };
                        let ((u, tu), (v, tv)) = if u_first { (a, b) } else { (b, a) };
                        if !separable_3vs1(u, v, w, x, dir) {
                            continue;
                        }
                        let quad = Quadruple::new(x.clone(), u.clone(), v.clone(), w.clone());
                        for weights in weight_combinations(*tu, *tv, *tx, *tw) {
                            for &sign in signs {
                                let omega = omega_3vs1(&quad, weights, sign, dir);
                                let point = omega.as_finite().expect("3vs1 points are finite");
                                if check_omega_3vs1(point, u, v, w, x, dir) == Ok(OmegaVerdict::Accept) {
                                    out.push(Emission {
                                        algorithm: Algorithm::ThreeVsOne,
                                        quad: quad.clone(),
                                        weights,
                                        config: dir.configuration(),
                                        omega,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    })
}
