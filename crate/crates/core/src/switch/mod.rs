//! Switch points: enumeration of critical-value quadruples and the three
//! generating configurations, with their feasibility and superfluity filters.
//!
//! Every quadruple is read with the pairing `(u, v)` and `(x, w)`. The two
//! pair costs on a line `L` are `|p̂(u) − p̂(v)| / δ` and `|p̂(x) − p̂(w)| / η`,
//! where a pair drawn from a single module is matched to the diagonal and
//! therefore costs half its parameter gap (`δ` or `η` equal to 2). A switch
//! point is where some family of admissible lines equalizes the two costs.

mod paired;
mod three_vs_one;
mod unpaired;

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::geometry::{lub, weighted_param, Point, PosLine};
use crate::persistence::{CritSet, Parents};
use crate::rat::Rat;

pub use paired::{alg_2paired, alg_2paired_traced, omega_2p2p, separable_split, slope_separates};
pub use three_vs_one::{
    alg_3vs1, alg_3vs1_traced, check_omega_3vs1, omega_3vs1, separable_3vs1, XDirection,
};
pub use unpaired::{alg_2unpaired, alg_2unpaired_traced, check_omega_2u2u, omega_2u2u};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SwitchError {
    #[error("lub relation needs two distinct points, got {0} twice")]
    CoincidentPoints(Point),
    #[error("x = {0} coincides with one of u, v, w")]
    XNotDistinct(Point),
    #[error("points must be pairwise distinct")]
    NotDistinct,
    #[error("labeling precondition violated: {0}")]
    Labeling(&'static str),
}

/// An element of Ω: a proper point, or a point at infinity identified by the
/// (positive, reduced) slope of the lines through it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SwitchPoint {
    Finite(Point),
    AtInfinity(Rat),
}

impl SwitchPoint {
    /// `None` unless the slope is strictly positive.
    pub fn at_infinity(slope: Rat) -> Option<Self> {
        slope.is_positive().then_some(SwitchPoint::AtInfinity(slope))
    }

    pub fn as_finite(&self) -> Option<&Point> {
        match self {
            SwitchPoint::Finite(p) => Some(p),
            SwitchPoint::AtInfinity(_) => None,
        }
    }

    pub fn as_slope(&self) -> Option<&Rat> {
        match self {
            SwitchPoint::Finite(_) => None,
            SwitchPoint::AtInfinity(m) => Some(m),
        }
    }
}

impl fmt::Debug for SwitchPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SwitchPoint::Finite(p) => write!(f, "{p:?}"),
            SwitchPoint::AtInfinity(m) => write!(f, "[0:1:{m}]"),
        }
    }
}

/// Pair weights: 2 when both members of a pair come from the same module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairWeights {
    delta: u8,
    eta: u8,
}

impl PairWeights {
    pub fn new(delta: u8, eta: u8) -> Self {
        assert!(matches!(delta, 1 | 2) && matches!(eta, 1 | 2), "pair weights are 1 or 2");
        PairWeights { delta, eta }
    }

    /// `δ` for the `(u, v)` pair.
    pub fn delta(self) -> u8 {
        self.delta
    }

    /// `η` for the `(x, w)` pair.
    pub fn eta(self) -> u8 {
        self.eta
    }

    pub(crate) fn delta_rat(self) -> Rat {
        Rat::from_int(self.delta as i64)
    }

    pub(crate) fn eta_rat(self) -> Rat {
        Rat::from_int(self.eta as i64)
    }
}

/// Weights a pair can take over every parent assignment of its members.
pub fn pair_weight_options(a: Parents, b: Parents) -> BTreeSet<u8> {
    a.sources()
        .flat_map(|sa| b.sources().map(move |sb| if sa == sb { 2 } else { 1 }))
        .collect()
}

/// All `(δ, η)` combinations for the pairs `(u, v)` and `(x, w)`.
pub fn weight_combinations(u: Parents, v: Parents, x: Parents, w: Parents) -> Vec<PairWeights> {
    let deltas = pair_weight_options(u, v);
    let etas = pair_weight_options(x, w);
    deltas
        .iter()
        .flat_map(|&d| etas.iter().map(move |&e| PairWeights::new(d, e)))
        .collect()
}

/// Four labeled points, paired as `(u, v)` and `(x, w)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quadruple {
    pub x: Point,
    pub u: Point,
    pub v: Point,
    pub w: Point,
}

impl Quadruple {
    pub fn new(x: Point, u: Point, v: Point, w: Point) -> Self {
        Quadruple { x, u, v, w }
    }

    pub fn distinct_count(&self) -> usize {
        [&self.x, &self.u, &self.v, &self.w].into_iter().collect::<BTreeSet<_>>().len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OmegaVerdict {
    Accept,
    RejectInfeasible,
    RejectSuperfluous,
}

/// Order relation between `w` and `x` in the poset, which fixes the possible
/// signs of `p(x) − p(w)` on lines separating them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LubRelation {
    /// `lub(w, x) = x`, so `p(x) ≥ p(w)`.
    XGeq,
    /// `lub(w, x) = w`, so `p(x) ≤ p(w)`.
    WGeq,
    /// Incomparable: either sign occurs.
    Both,
}

pub fn lub_relation(w: &Point, x: &Point) -> Result<LubRelation, SwitchError> {
    if w == x {
        return Err(SwitchError::CoincidentPoints(w.clone()));
    }
    let j = lub(w, x);
    Ok(if &j == x {
        LubRelation::XGeq
    } else if &j == w {
        LubRelation::WGeq
    } else {
        LubRelation::Both
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> Rat {
        match self {
            Sign::Plus => Rat::one(),
            Sign::Minus => Rat::from_int(-1),
        }
    }
}

/// Possible signs of `p(a) − p(b)` for distinct `a`, `b`.
pub(crate) fn difference_signs(a: &Point, b: &Point) -> &'static [Sign] {
    match lub_relation(b, a) {
        Ok(LubRelation::XGeq) => &[Sign::Plus],
        Ok(LubRelation::WGeq) => &[Sign::Minus],
        _ => &[Sign::Plus, Sign::Minus],
    }
}

/// Cost gap `|p̂(u) − p̂(v)|/δ − |p̂(x) − p̂(w)|/η` on a line.
pub fn delta_gap(line: &PosLine, quad: &Quadruple, weights: PairWeights) -> Rat {
    let p = |a: &Point| weighted_param(line, a);
    let first = (&p(&quad.u) - &p(&quad.v)).abs() / weights.delta_rat();
    let second = (&p(&quad.x) - &p(&quad.w)).abs() / weights.eta_rat();
    first - second
}

/// Required position of a labeled point relative to a generating line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Strictly below: pushes up.
    Below,
    /// Strictly above: pushes right.
    Above,
    /// Above or on the line.
    NotBelow,
    /// Below or on the line.
    NotAbove,
}

/// Side requirements for `(x, u, v, w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub x: Side,
    pub u: Side,
    pub v: Side,
    pub w: Side,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    ThreeVsOne,
    TwoPaired,
    TwoUnpaired,
}

/// A switch point together with everything that generated it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Emission {
    pub algorithm: Algorithm,
    pub quad: Quadruple,
    pub weights: PairWeights,
    pub config: Configuration,
    pub omega: SwitchPoint,
}

/// Canonical set of switch points.
pub fn dedup<I: IntoIterator<Item = SwitchPoint>>(raw: I) -> BTreeSet<SwitchPoint> {
    raw.into_iter().collect()
}

/// Worst-case count `1008 · n(n−1)(n−2)(2n−3)` for `n` distinct critical values.
///
/// 144 labelings per point choice times at most 4 + 1 + 2 outputs per labeling.
pub fn theoretical_bound(n: u64) -> u128 {
    if n < 3 {
        return 0;
    }
    let n = n as u128;
    1008 * n * (n - 1) * (n - 2) * (2 * n - 3)
}

/// Raw outputs of the three algorithms, concatenated in algorithm order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SwitchPointRun {
    pub three_vs_one: Vec<SwitchPoint>,
    pub two_paired: Vec<SwitchPoint>,
    pub two_unpaired: Vec<SwitchPoint>,
}

impl SwitchPointRun {
    pub fn raw(&self) -> impl Iterator<Item = &SwitchPoint> {
        self.three_vs_one.iter().chain(&self.two_paired).chain(&self.two_unpaired)
    }

    pub fn raw_count(&self) -> usize {
        self.three_vs_one.len() + self.two_paired.len() + self.two_unpaired.len()
    }

    pub fn unique(&self) -> BTreeSet<SwitchPoint> {
        dedup(self.raw().cloned())
    }
}

/// Runs all three algorithms on the merged critical set.
pub fn all_switch_points(crit: &CritSet) -> SwitchPointRun {
    SwitchPointRun {
        three_vs_one: alg_3vs1(crit),
        two_paired: alg_2paired(crit),
        two_unpaired: alg_2unpaired(crit),
    }
}

/// Emissions of all three algorithms.
pub fn all_emissions(crit: &CritSet) -> Vec<Emission> {
    let mut out = alg_3vs1_traced(crit);
    out.extend(alg_2paired_traced(crit));
    out.extend(alg_2unpaired_traced(crit));
    out
}

/// Distinct points and their tags, indexable for quadruple enumeration.
pub(crate) fn indexed(crit: &CritSet) -> Vec<(Point, Parents)> {
    crit.iter().map(|(p, t)| (p.clone(), t)).collect()
}

/// Runs `body` for every first index in parallel and concatenates the
/// per-index outputs in index order.
pub(crate) fn par_collect<F>(n: usize, body: F) -> Vec<Emission>
where
    F: Fn(usize, &mut Vec<Emission>) + Sync + Send,
{
    (0..n)
        .into_par_iter()
        .map(|i| {
            let mut out = Vec::new();
            body(i, &mut out);
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}
