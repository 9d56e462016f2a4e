//! Exact computation of switch points and of the matching distance between
//! rectangle-decomposable 2-parameter persistence modules.
//!
//! The pipeline: critical values of both modules ([`persistence`]) feed the
//! three switch-point algorithms ([`switch`]); lub-closed critical values plus
//! the switch points span a finite set of positive-slope lines
//! ([`distance::candidate_lines`]); on each line both modules restrict to
//! barcodes ([`restriction`]) whose bottleneck distance ([`bottleneck`]) is
//! computed exactly. The matching distance is the maximum over that set.
//!
//! All arithmetic is exact ([`Rat`]).

pub mod bottleneck;
pub mod distance;
pub mod experiment;
pub mod formats;
pub mod geometry;
mod matching;
pub mod oracles;
pub mod persistence;
pub mod rat;
pub mod restriction;
pub mod rng;
pub mod switch;

pub use bottleneck::{bar_cost, bottleneck_distance};
pub use distance::{candidate_lines, matching_distance, MatchResult};
pub use geometry::{Point, PosLine, PushDir, Quadrant};
pub use persistence::{CritSet, RectModule, Rectangle, Source};
pub use rat::Rat;
pub use restriction::{restrict, Bar, Barcode};
pub use switch::{SwitchPoint, SwitchPointRun};
