//! Rectangle-decomposable bi-persistence modules and their critical values.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::geometry::{lub, Point};
use crate::rat::Rat;
use crate::rng::SplitMix64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModuleError {
    #[error("degenerate rectangle: lower {lower} must be strictly below upper {upper} in both coordinates")]
    DegenerateRectangle { lower: Point, upper: Point },
    #[error("rectangle multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("coord_max must be at least 2, got {0}")]
    CoordRange(i64),
}

/// The half-open rectangle `[lower.x, upper.x) × [lower.y, upper.y)` with a
/// positive multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rectangle {
    lower: Point,
    upper: Point,
    multiplicity: u32,
}

impl Rectangle {
    pub fn new(lower: Point, upper: Point, multiplicity: u32) -> Result<Self, ModuleError> {
        if !(lower.x < upper.x && lower.y < upper.y) {
            return Err(ModuleError::DegenerateRectangle { lower, upper });
        }
        if multiplicity == 0 {
            return Err(ModuleError::ZeroMultiplicity);
        }
        Ok(Rectangle { lower, upper, multiplicity })
    }

    /// Integer-cornered rectangle with multiplicity 1. Panics when degenerate.
    pub fn int(lx: i64, ly: i64, ux: i64, uy: i64) -> Self {
        Rectangle::new(Point::int(lx, ly), Point::int(ux, uy), 1).expect("degenerate rectangle")
    }

    pub fn lower(&self) -> &Point {
        &self.lower
    }

    pub fn upper(&self) -> &Point {
        &self.upper
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Half-open membership test.
    pub fn contains(&self, p: &Point) -> bool {
        self.lower.x <= p.x && p.x < self.upper.x && self.lower.y <= p.y && p.y < self.upper.y
    }

    /// Generator corner followed by the two relation corners.
    pub fn corners(&self) -> [Point; 3] {
        [
            self.lower.clone(),
            Point::new(self.upper.x.clone(), self.lower.y.clone()),
            Point::new(self.lower.x.clone(), self.upper.y.clone()),
        ]
    }

    pub fn translated(&self, dx: &Rat, dy: &Rat) -> Rectangle {
        let shift = |p: &Point| Point::new(&p.x + dx, &p.y + dy);
        Rectangle { lower: shift(&self.lower), upper: shift(&self.upper), multiplicity: self.multiplicity }
    }
}

/// A finite direct sum of rectangle modules. May be empty.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RectModule {
    rectangles: Vec<Rectangle>,
}

impl RectModule {
    pub fn new(rectangles: Vec<Rectangle>) -> Self {
        RectModule { rectangles }
    }

    pub fn empty() -> Self {
        RectModule::default()
    }

    pub fn rectangles(&self) -> &[Rectangle] {
        &self.rectangles
    }

    pub fn is_empty(&self) -> bool {
        self.rectangles.is_empty()
    }

    /// Multiset union.
    pub fn direct_sum(&self, other: &RectModule) -> RectModule {
        let mut rectangles = self.rectangles.clone();
        rectangles.extend(other.rectangles.iter().cloned());
        RectModule { rectangles }
    }

    pub fn translated(&self, dx: &Rat, dy: &Rat) -> RectModule {
        RectModule { rectangles: self.rectangles.iter().map(|r| r.translated(dx, dy)).collect() }
    }
}

/// Which module a critical value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    M,
    N,
}

/// Non-empty subset of `{M, N}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Parents {
    m: bool,
    n: bool,
}

impl Parents {
    pub const M: Parents = Parents { m: true, n: false };
    pub const N: Parents = Parents { m: false, n: true };
    pub const BOTH: Parents = Parents { m: true, n: true };

    pub fn of(source: Source) -> Self {
        match source {
            Source::M => Parents::M,
            Source::N => Parents::N,
        }
    }

    pub fn union(self, other: Parents) -> Parents {
        Parents { m: self.m || other.m, n: self.n || other.n }
    }

    pub fn contains(self, source: Source) -> bool {
        match source {
            Source::M => self.m,
            Source::N => self.n,
        }
    }

    pub fn sources(self) -> impl Iterator<Item = Source> {
        [(self.m, Source::M), (self.n, Source::N)].into_iter().filter(|(b, _)| *b).map(|(_, s)| s)
    }
}

/// Critical values of `M` and `N` merged, each tagged with its parents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CritSet {
    points: BTreeMap<Point, Parents>,
}

impl CritSet {
    pub fn from_sources<'a>(
        m: impl IntoIterator<Item = &'a Point>,
        n: impl IntoIterator<Item = &'a Point>,
    ) -> Self {
        let mut set = CritSet::default();
        for p in m {
            set.insert(p.clone(), Source::M);
        }
        for p in n {
            set.insert(p.clone(), Source::N);
        }
        set
    }

    pub fn insert(&mut self, p: Point, source: Source) {
        let tag = Parents::of(source);
        self.points.entry(p).and_modify(|t| *t = t.union(tag)).or_insert(tag);
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn parents(&self, p: &Point) -> Option<Parents> {
        self.points.get(p).copied()
    }

    /// Distinct points in ascending order with their parent tags.
    pub fn iter(&self) -> impl Iterator<Item = (&Point, Parents)> {
        self.points.iter().map(|(p, t)| (p, *t))
    }

    pub fn points_from(&self, source: Source) -> BTreeSet<Point> {
        self.iter().filter(|(_, t)| t.contains(source)).map(|(p, _)| p.clone()).collect()
    }
}

/// Generator corner and both relation corners of every rectangle, deduplicated.
pub fn critical_points(module: &RectModule) -> BTreeSet<Point> {
    module.rectangles().iter().flat_map(Rectangle::corners).collect()
}

/// Smallest superset closed under pairwise least upper bounds.
pub fn lub_closure(points: &BTreeSet<Point>) -> BTreeSet<Point> {
    let mut closed = points.clone();
    let mut frontier: Vec<Point> = points.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for a in &frontier {
            for b in closed.iter() {
                let j = lub(a, b);
                if !closed.contains(&j) && !fresh.contains(&j) {
                    fresh.push(j);
                }
            }
        }
        for p in &fresh {
            closed.insert(p.clone());
        }
        frontier = fresh;
    }
    closed
}

/// Seeded random module with integer corners in `[0, coord_max]`.
///
/// Per rectangle, four draws from [`SplitMix64`] in this order: `lower.x` and
/// `lower.y` uniform in `[0, coord_max − 1]`, then `Δx` uniform in
/// `[0, coord_max − lower.x − 1]` and `Δy` likewise; `upper = lower + (1+Δx, 1+Δy)`.
pub fn random_rect_module(n_rects: usize, seed: u64, coord_max: i64) -> Result<RectModule, ModuleError> {
    if coord_max < 2 {
        return Err(ModuleError::CoordRange(coord_max));
    }
    let mut rng = SplitMix64::new(seed);
    let rectangles = (0..n_rects)
        .map(|_| {
            let lx = rng.range_i64(0, coord_max - 1);
            let ly = rng.range_i64(0, coord_max - 1);
            let dx = rng.range_i64(0, coord_max - lx - 1);
            let dy = rng.range_i64(0, coord_max - ly - 1);
            Rectangle::int(lx, ly, lx + 1 + dx, ly + 1 + dy)
        })
        .collect();
    Ok(RectModule::new(rectangles))
}
