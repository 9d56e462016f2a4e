//! Restriction of a rectangle module to a positive-slope line.

use std::fmt;

use crate::geometry::PosLine;
use crate::persistence::{RectModule, Rectangle};
use crate::rat::Rat;

/// Half-open interval `[birth, death)` in the weighted line parameter.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bar {
    pub birth: Rat,
    pub death: Rat,
}

impl Bar {
    /// `None` unless `birth < death`.
    pub fn new(birth: Rat, death: Rat) -> Option<Self> {
        (birth < death).then_some(Bar { birth, death })
    }

    pub fn length(&self) -> Rat {
        &self.death - &self.birth
    }
}

impl fmt::Debug for Bar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.birth, self.death)
    }
}

pub type Barcode = Vec<Bar>;

/// The bar a single rectangle leaves on a line, if the line meets it.
///
/// On `y = m·x + q` the rectangle `[c₁,d₁) × [c₂,d₂)` is crossed for
/// `x ∈ [max(c₁, (c₂−q)/m), min(d₁, (d₂−q)/m))`; both ends are scaled by the
/// weight `min(1, m)`.
pub fn restrict_rectangle(rect: &Rectangle, line: &PosLine) -> Option<Bar> {
    let enter = Rat::max_of(&rect.lower().x, &line.x_at(&rect.lower().y));
    let exit = Rat::min_of(&rect.upper().x, &line.x_at(&rect.upper().y));
    let weight = line.weight();
    Bar::new(&weight * &enter, &weight * &exit)
}

pub fn restrict(module: &RectModule, line: &PosLine) -> Barcode {
    let mut bars = Vec::new();
    for rect in module.rectangles() {
        if let Some(bar) = restrict_rectangle(rect, line) {
            for _ in 1..rect.multiplicity() {
                bars.push(bar.clone());
            }
            bars.push(bar);
        }
    }
    bars
}
