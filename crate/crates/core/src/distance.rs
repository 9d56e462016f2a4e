//! Matching distance as a maximum over a finite set of candidate lines.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::bottleneck::bottleneck_distance;
use crate::geometry::{Point, PosLine};
use crate::persistence::{critical_points, lub_closure, CritSet, RectModule};
use crate::rat::Rat;
use crate::restriction::restrict;
use crate::switch::{all_switch_points, SwitchPoint};

pub type LineSet = BTreeSet<PosLine>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchResult {
    pub distance: Rat,
    pub witness: PosLine,
    /// Every candidate line with its weighted bottleneck value, in line order.
    pub per_line: Option<Vec<(PosLine, Rat)>>,
}

/// Lines through pairs of points, lines of each given slope through each
/// point, and the slope-1 line through each point.
pub fn candidate_lines(points: &BTreeSet<Point>, slopes: &BTreeSet<Rat>) -> LineSet {
    let pts: Vec<&Point> = points.iter().collect();
    let pair_lines: Vec<Vec<PosLine>> = (0..pts.len())
        .into_par_iter()
        .map(|i| pts[i + 1..].iter().filter_map(|b| PosLine::through_points(pts[i], b)).collect())
        .collect();
    let mut lines: LineSet = pair_lines.into_iter().flatten().collect();
    let one = Rat::one();
    for p in &pts {
        for m in slopes.iter().chain(std::iter::once(&one)) {
            if let Some(l) = PosLine::through(m.clone(), p) {
                lines.insert(l);
            }
        }
    }
    lines
}

/// Weighted bottleneck distance between the restrictions to one line.
pub fn line_distance(m: &RectModule, n: &RectModule, line: &PosLine) -> Rat {
    bottleneck_distance(&restrict(m, line), &restrict(n, line))
}

/// Candidate points and slopes for a pair of modules: both closed critical
/// sets plus the proper switch points, and the slopes of switch points at
/// infinity.
pub fn candidate_geometry(m: &RectModule, n: &RectModule) -> (BTreeSet<Point>, BTreeSet<Rat>) {
    let cm = critical_points(m);
    let cn = critical_points(n);
    let switch = all_switch_points(&CritSet::from_sources(&cm, &cn)).unique();
    let mut points = lub_closure(&cm);
    points.extend(lub_closure(&cn));
    let mut slopes = BTreeSet::new();
    for s in switch {
        match s {
            SwitchPoint::Finite(p) => {
                points.insert(p);
            }
            SwitchPoint::AtInfinity(m) => {
                slopes.insert(m);
            }
        }
    }
    (points, slopes)
}

pub fn matching_distance(m: &RectModule, n: &RectModule) -> MatchResult {
    evaluate(m, n, false)
}

/// Like [`matching_distance`] but keeps the value of every candidate line.
pub fn matching_distance_table(m: &RectModule, n: &RectModule) -> MatchResult {
    evaluate(m, n, true)
}

fn evaluate(m: &RectModule, n: &RectModule, keep_table: bool) -> MatchResult {
    let (points, slopes) = candidate_geometry(m, n);
    let lines: Vec<PosLine> = candidate_lines(&points, &slopes).into_iter().collect();
    if lines.is_empty() {
        let witness = PosLine::diagonal();
        let distance = line_distance(m, n, &witness);
        let per_line = keep_table.then(|| vec![(witness.clone(), distance.clone())]);
        return MatchResult { distance, witness, per_line };
    }
    let values: Vec<Rat> = lines.par_iter().map(|l| line_distance(m, n, l)).collect();
    // lines are ascending, so the first maximum is the lexicographically smallest
    let mut best = 0;
    for (i, v) in values.iter().enumerate() {
        if *v > values[best] {
            best = i;
        }
    }
    MatchResult {
        distance: values[best].clone(),
        witness: lines[best].clone(),
        per_line: keep_table.then(|| lines.into_iter().zip(values).collect()),
    }
}
