//! JSON input files and CSV/JSON switch-point output.
//!
//! Rationals are JSON integers or strings `"p/q"` in lowest terms.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::distance::MatchResult;
use crate::geometry::Point;
use crate::persistence::{critical_points, ModuleError, RectModule, Rectangle};
use crate::rat::Rat;
use crate::switch::SwitchPoint;

pub const MODULE_TAG: &str = "rectmod-v1";
pub const CRIT_TAG: &str = "critset-v1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Malformed(#[source] serde_json::Error),
    #[error("wrong format tag: expected one of {expected:?}, found {found:?}")]
    WrongTag { expected: &'static [&'static str], found: Option<String> },
    #[error("unexpected file structure: {0}")]
    Schema(#[source] serde_json::Error),
    #[error("bad number {0:?}: expected an integer or \"p/q\" in lowest terms")]
    Number(String),
    #[error("degenerate rectangle: lower {lower} is not strictly below upper {upper}")]
    DegenerateRectangle { lower: Point, upper: Point },
    #[error("multiplicity must be at least 1, got {0}")]
    Multiplicity(i64),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    fn of(r: &Rat) -> Num {
        match (r.is_integer(), r.numer().to_i64()) {
            (true, Some(n)) => Num::Int(n),
            _ => Num::Text(r.to_string()),
        }
    }

    fn to_rat(&self) -> Result<Rat, FormatError> {
        match self {
            Num::Int(n) => Ok(Rat::from_int(*n)),
            Num::Text(s) => {
                let bad = || FormatError::Number(s.clone());
                let r: Rat = s.parse().map_err(|_| bad())?;
                // the written denominator must already be the reduced one
                let written = match s.split_once('/') {
                    Some((_, d)) => d.trim().parse().map_err(|_| bad())?,
                    None => num_bigint::BigInt::one(),
                };
                if written != r.denom() {
                    return Err(bad());
                }
                Ok(r)
            }
        }
    }
}

fn point_of(pair: &[Num; 2]) -> Result<Point, FormatError> {
    Ok(Point::new(pair[0].to_rat()?, pair[1].to_rat()?))
}

fn pair_of(p: &Point) -> [Num; 2] {
    [Num::of(&p.x), Num::of(&p.y)]
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RectEntry {
    lower: [Num; 2],
    upper: [Num; 2],
    multiplicity: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleFile {
    format: String,
    rectangles: Vec<RectEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CritFile {
    format: String,
    points: Vec<[Num; 2]>,
}

/// Which kind of input file a document is, after checking the tag.
pub enum InputFile {
    Module(RectModule),
    Points(BTreeSet<Point>),
}

fn tagged(bytes: &[u8], expected: &'static [&'static str]) -> Result<(Value, String), FormatError> {
    let value: Value = serde_json::from_slice(bytes).map_err(FormatError::Malformed)?;
    let found = value.get("format").and_then(Value::as_str).map(str::to_string);
    match found {
        Some(tag) if expected.contains(&tag.as_str()) => Ok((value, tag)),
        found => Err(FormatError::WrongTag { expected, found }),
    }
}

fn module_from_value(value: Value) -> Result<RectModule, FormatError> {
    let file: ModuleFile = serde_json::from_value(value).map_err(FormatError::Schema)?;
    let mut rects = Vec::with_capacity(file.rectangles.len());
    for entry in &file.rectangles {
        let lower = point_of(&entry.lower)?;
        let upper = point_of(&entry.upper)?;
        let multiplicity = u32::try_from(entry.multiplicity)
            .ok()
            .filter(|&k| k >= 1)
            .ok_or(FormatError::Multiplicity(entry.multiplicity))?;
        let rect = Rectangle::new(lower, upper, multiplicity).map_err(|e| match e {
            ModuleError::DegenerateRectangle { lower, upper } => {
                FormatError::DegenerateRectangle { lower, upper }
            }
            _ => FormatError::Multiplicity(entry.multiplicity),
        })?;
        rects.push(rect);
    }
    Ok(RectModule::new(rects))
}

fn points_from_value(value: Value) -> Result<BTreeSet<Point>, FormatError> {
    let file: CritFile = serde_json::from_value(value).map_err(FormatError::Schema)?;
    file.points.iter().map(point_of).collect()
}

pub fn parse_module_file(bytes: &[u8]) -> Result<RectModule, FormatError> {
    let (value, _) = tagged(bytes, &[MODULE_TAG])?;
    module_from_value(value)
}

/// Points of a critical-value file, deduplicated.
pub fn parse_crit_file(bytes: &[u8]) -> Result<BTreeSet<Point>, FormatError> {
    let (value, _) = tagged(bytes, &[CRIT_TAG])?;
    points_from_value(value)
}

pub fn parse_input_file(bytes: &[u8]) -> Result<InputFile, FormatError> {
    let (value, tag) = tagged(bytes, &[MODULE_TAG, CRIT_TAG])?;
    if tag == MODULE_TAG {
        module_from_value(value).map(InputFile::Module)
    } else {
        points_from_value(value).map(InputFile::Points)
    }
}

impl InputFile {
    /// Critical values: the file's points, or the corners of the module.
    pub fn critical_points(&self) -> BTreeSet<Point> {
        match self {
            InputFile::Module(m) => critical_points(m),
            InputFile::Points(p) => p.clone(),
        }
    }
}

pub fn module_to_json(module: &RectModule) -> String {
    let file = ModuleFile {
        format: MODULE_TAG.to_string(),
        rectangles: module
            .rectangles()
            .iter()
            .map(|r| RectEntry {
                lower: pair_of(r.lower()),
                upper: pair_of(r.upper()),
                multiplicity: r.multiplicity() as i64,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("plain data serializes")
}

pub fn crit_to_json(points: &BTreeSet<Point>) -> String {
    let file = CritFile { format: CRIT_TAG.to_string(), points: points.iter().map(pair_of).collect() };
    serde_json::to_string_pretty(&file).expect("plain data serializes")
}

pub const SWITCH_CSV_HEADER: &str = "kind,x_num,x_den,y_num,y_den,m_num,m_den";

/// One row per switch point; unused columns stay empty.
pub fn switch_points_csv<'a>(points: impl IntoIterator<Item = &'a SwitchPoint>) -> String {
    let mut out = String::from(SWITCH_CSV_HEADER);
    out.push('\n');
    for s in points {
        match s {
            SwitchPoint::Finite(p) => {
                let _ = writeln!(out, "finite,{},{},{},{},,", p.x.numer(), p.x.denom(), p.y.numer(), p.y.denom());
            }
            SwitchPoint::AtInfinity(m) => {
                let _ = writeln!(out, "slope,,,,,{},{}", m.numer(), m.denom());
            }
        }
    }
    out
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum SwitchEntry {
    Finite { x: Num, y: Num },
    Slope { m: Num },
}

pub fn switch_points_json<'a>(points: impl IntoIterator<Item = &'a SwitchPoint>) -> String {
    let entries: Vec<SwitchEntry> = points
        .into_iter()
        .map(|s| match s {
            SwitchPoint::Finite(p) => SwitchEntry::Finite { x: Num::of(&p.x), y: Num::of(&p.y) },
            SwitchPoint::AtInfinity(m) => SwitchEntry::Slope { m: Num::of(m) },
        })
        .collect();
    serde_json::to_string_pretty(&entries).expect("plain data serializes")
}

#[derive(Serialize)]
struct LineEntry {
    slope: Num,
    intercept: Num,
}

#[derive(Serialize)]
struct LineValue {
    slope: Num,
    intercept: Num,
    value: Num,
}

#[derive(Serialize)]
struct DistanceReport {
    distance: Num,
    witness: LineEntry,
    #[serde(skip_serializing_if = "Option::is_none")]
    per_line: Option<Vec<LineValue>>,
}

pub fn match_result_json(result: &MatchResult) -> String {
    let report = DistanceReport {
        distance: Num::of(&result.distance),
        witness: LineEntry {
            slope: Num::of(result.witness.slope()),
            intercept: Num::of(result.witness.intercept()),
        },
        per_line: result.per_line.as_ref().map(|rows| {
            rows.iter()
                .map(|(l, v)| LineValue {
                    slope: Num::of(l.slope()),
                    intercept: Num::of(l.intercept()),
                    value: Num::of(v),
                })
                .collect()
        }),
    };
    serde_json::to_string_pretty(&report).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let one = br#"{"format":"rectmod-v1","rectangles":[{"lower":[0,0],"upper":[4,4],"multiplicity":1}]}"#;
        let m = parse_module_file(one).unwrap();
        assert_eq!(m.rectangles(), &[Rectangle::int(0, 0, 4, 4)]);
        let empty = br#"{"format":"rectmod-v1","rectangles":[]}"#;
        assert!(parse_module_file(empty).unwrap().is_empty());
        let frac = br#"{"format":"rectmod-v1","rectangles":[{"lower":["1/2",0],"upper":[4,"-7/3"],"multiplicity":2}]}"#;
        assert!(matches!(parse_module_file(frac), Err(FormatError::DegenerateRectangle { .. })));
    }

    #[test]
    fn distinct_diagnostics() {
        let degenerate = br#"{"format":"rectmod-v1","rectangles":[{"lower":[1,1],"upper":[1,3],"multiplicity":1}]}"#;
        let err = parse_module_file(degenerate).unwrap_err();
        assert!(err.to_string().starts_with("degenerate rectangle"));
        let zero = br#"{"format":"rectmod-v1","rectangles":[{"lower":[0,0],"upper":[1,3],"multiplicity":0}]}"#;
        assert!(matches!(parse_module_file(zero), Err(FormatError::Multiplicity(0))));
        assert!(matches!(parse_module_file(b"{not json"), Err(FormatError::Malformed(_))));
        let tag = br#"{"format":"critset-v1","points":[]}"#;
        assert!(matches!(parse_module_file(tag), Err(FormatError::WrongTag { .. })));
        let shape = br#"{"format":"rectmod-v1","rects":[]}"#;
        assert!(matches!(parse_module_file(shape), Err(FormatError::Schema(_))));
        let unreduced = br#"{"format":"critset-v1","points":[["2/4",1]]}"#;
        assert!(matches!(parse_crit_file(unreduced), Err(FormatError::Number(_))));
    }

    #[test]
    fn crit_file_dedups() {
        let doc = br#"{"format":"critset-v1","points":[[1,2],[1,2],["3/2",0]]}"#;
        let pts = parse_crit_file(doc).unwrap();
        assert_eq!(pts.len(), 2);
        assert!(pts.contains(&Point::new(Rat::new(3, 2), Rat::zero())));
    }

    #[test]
    fn input_file_dispatch() {
        let doc = br#"{"format":"rectmod-v1","rectangles":[{"lower":[0,0],"upper":[4,4],"multiplicity":1}]}"#;
        assert_eq!(parse_input_file(doc).unwrap().critical_points().len(), 3);
    }

    #[test]
    fn switch_csv_layout() {
        let pts = [SwitchPoint::Finite(Point::new(Rat::new(-3, 2), Rat::from_int(4))), SwitchPoint::AtInfinity(Rat::new(2, 3))];
        let csv = switch_points_csv(&pts);
        assert_eq!(csv, "kind,x_num,x_den,y_num,y_den,m_num,m_den\nfinite,-3,2,4,1,,\nslope,,,,,2,3\n");
        let json = switch_points_json(&pts);
        assert!(json.contains("\"kind\": \"slope\"") && json.contains("\"-3/2\""));
    }

    #[test]
    fn match_result_layout() {
        let square = RectModule::new(vec![Rectangle::int(0, 0, 4, 4)]);
        let r = crate::distance::matching_distance(&square, &RectModule::empty());
        let v: Value = serde_json::from_str(&match_result_json(&r)).unwrap();
        assert_eq!(v["distance"], 2);
        assert_eq!(v["witness"]["slope"], 1);
        assert!(v.get("per_line").is_none());
    }

    fn rat() -> impl Strategy<Value = Rat> {
        (-50i64..50, 1i64..12).prop_map(|(n, d)| Rat::new(n, d))
    }

    proptest! {
        #[test]
        fn module_round_trip(seed in any::<u64>(), n in 0usize..5) {
            let m = crate::persistence::random_rect_module(n, seed, 12).unwrap();
            prop_assert_eq!(parse_module_file(module_to_json(&m).as_bytes()).unwrap(), m);
        }

        #[test]
        fn crit_round_trip(pts in proptest::collection::btree_set((rat(), rat()).prop_map(|(x, y)| Point::new(x, y)), 0..8)) {
            prop_assert_eq!(parse_crit_file(crit_to_json(&pts).as_bytes()).unwrap(), pts);
        }
    }
}
