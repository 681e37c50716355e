//! Parameter scans over the three families and the verification suites.

mod verify;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{int, square_class, SquareClass};
use crate::error::{Error, Result};
use crate::invariants::{t1_invariant, t1_pipeline, t2_det_class, t3_delta, t3_discriminant_class, T1Invariant};

pub use verify::{verify, CheckResult, Counterexample, Suite, VerifyReport};

pub const TOOL_VERSION: &str = concat!("quotring ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    T1,
    T2,
    T3,
}

impl Family {
    pub fn parameter_names(self) -> &'static [&'static str] {
        match self {
            Family::T1 => &["b1", "c1"],
            Family::T2 => &["a0", "a1"],
            Family::T3 => &["a", "b", "c"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::T1 => "t1",
            Family::T2 => "t2",
            Family::T3 => "t3",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t1" => Ok(Family::T1),
            "t2" => Ok(Family::T2),
            "t3" => Ok(Family::T3),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// How scan rows are evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ScanMode {
    /// Closed-form invariants.
    #[default]
    ClosedForm,
    /// The full computation from the ring for t1 and t2 and the exact
    /// reduction for t3.
    Pipeline,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub parameters: Vec<i64>,
    /// Canonical invariant string; absent for flagged rows.
    pub invariant: Option<String>,
    /// Why the row carries no invariant.
    pub flag: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanReport {
    pub family: Family,
    pub rows: Vec<ScanRow>,
    pub distinct_count: usize,
    pub search_radius: i64,
    pub tool_version: String,
}

impl ScanReport {
    pub fn distinct_invariants(&self) -> BTreeSet<&str> {
        self.rows.iter().filter_map(|r| r.invariant.as_deref()).collect()
    }

    pub fn flagged(&self) -> impl Iterator<Item = &ScanRow> {
        self.rows.iter().filter(|r| r.flag.is_some())
    }

    pub fn row(&self, parameters: &[i64]) -> Option<&ScanRow> {
        self.rows
            .binary_search_by(|r| r.parameters.as_slice().cmp(parameters))
            .ok()
            .map(|i| &self.rows[i])
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// One line per row: the parameters, the invariant and the flag.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header: Vec<&str> = self.family.parameter_names().to_vec();
        header.extend(["invariant", "flag"]);
        w.write_record(&header).map_err(csv_error)?;
        for r in &self.rows {
            let mut rec: Vec<String> = r.parameters.iter().map(ToString::to_string).collect();
            rec.push(r.invariant.clone().unwrap_or_default());
            rec.push(r.flag.clone().unwrap_or_default());
            w.write_record(&rec).map_err(csv_error)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    /// Every invariant string parses back to itself.
    pub fn check_round_trip(&self) -> Result<()> {
        for inv in self.distinct_invariants() {
            let back = match self.family {
                Family::T1 => inv.parse::<T1Invariant>()?.to_string(),
                Family::T2 | Family::T3 => inv.parse::<SquareClass>()?.to_string(),
            };
            if back != inv {
                return Err(Error::Parse(format!("{inv:?} reserializes as {back:?}")));
            }
        }
        Ok(())
    }
}

fn csv_error(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

fn grid(dim: usize, radius: i64, allow_zero: bool) -> Vec<Vec<i64>> {
    let axis: Vec<i64> = (-radius..=radius).filter(|&x| allow_zero || x != 0).collect();
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p| {
                axis.iter().map(move |&x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

fn evaluate(family: Family, p: &[i64], mode: ScanMode) -> Result<String> {
    Ok(match (family, mode) {
        (Family::T1, ScanMode::ClosedForm) => t1_invariant(p[0], p[1])?.to_string(),
        (Family::T1, ScanMode::Pipeline) => t1_pipeline(p[0], p[1])?.invariant.to_string(),
        (Family::T2, ScanMode::ClosedForm) => square_class(&-(int(p[0]) * int(p[1])))?.to_string(),
        (Family::T2, ScanMode::Pipeline) => t2_det_class(&int(p[0]), &int(p[1]))?.to_string(),
        (Family::T3, ScanMode::ClosedForm) => {
            let d = t3_delta(&int(p[0]), &int(p[1]), &int(p[2]))?;
            if num_traits::Zero::is_zero(&d) {
                return Err(Error::Degenerate(format!("discriminant vanishes at ({}, {}, {})", p[0], p[1], p[2])));
            }
            square_class(&d)?.to_string()
        }
        (Family::T3, ScanMode::Pipeline) => t3_discriminant_class(&int(p[0]), &int(p[1]), &int(p[2]))?.to_string(),
    })
}

/// Scans the integer grid of radius `radius`, rows in lexicographic order
/// of parameters; t3 rows with vanishing discriminant are flagged and not
/// counted.
pub fn scan(family: Family, radius: i64, mode: ScanMode) -> Result<ScanReport> {
    if radius < 1 {
        return Err(Error::InvalidArgument(format!("radius {radius} must be at least 1")));
    }
    let points = match family {
        Family::T1 => grid(2, radius, true).into_iter().filter(|p| p != &[0, 0]).collect(),
        Family::T2 => grid(2, radius, false),
        Family::T3 => grid(3, radius, false),
    };
    let rows = points
        .into_par_iter()
        .map(|p| {
            let (invariant, flag) = match evaluate(family, &p, mode) {
                Ok(s) => (Some(s), None),
                Err(Error::Degenerate(why)) => (None, Some(why)),
                Err(e) => return Err(e),
            };
            Ok(ScanRow { parameters: p, invariant, flag })
        })
        .collect::<Result<Vec<_>>>()?;
    let distinct_count = rows.iter().filter_map(|r| r.invariant.as_deref()).collect::<BTreeSet<_>>().len();
    Ok(ScanReport { family, rows, distinct_count, search_radius: radius, tool_version: TOOL_VERSION.into() })
}

pub fn scan_t1(radius: i64) -> Result<ScanReport> {
    scan(Family::T1, radius, ScanMode::ClosedForm)
}

pub fn scan_t2(radius: i64) -> Result<ScanReport> {
    scan(Family::T2, radius, ScanMode::ClosedForm)
}

pub fn scan_t3(radius: i64) -> Result<ScanReport> {
    scan(Family::T3, radius, ScanMode::ClosedForm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_scans() {
        let r = scan_t1(1).unwrap();
        assert_eq!(r.rows.len(), 8);
        assert!(r.distinct_count >= 1);
        assert_eq!(r.row(&[6, 8]), None);
        let r = scan_t1(8).unwrap();
        assert_eq!(r.row(&[6, 8]).unwrap().invariant.as_deref(), Some("[5:1];[5:2]"));
        r.check_round_trip().unwrap();
        assert!(r.rows.windows(2).all(|w| w[0].parameters < w[1].parameters));
    }

    #[test]
    fn t3_flags_degenerate_rows() {
        let r = scan_t3(2).unwrap();
        let flagged = r.row(&[2, 1, 1]).unwrap();
        assert!(flagged.invariant.is_none() && flagged.flag.is_some());
        assert_eq!(r.row(&[1, 1, 1]).unwrap().invariant.as_deref(), Some("-1"));
    }

    #[test]
    fn modes_agree_on_small_grid() {
        for f in [Family::T1, Family::T2, Family::T3] {
            assert_eq!(scan(f, 2, ScanMode::ClosedForm).unwrap(), scan(f, 2, ScanMode::Pipeline).unwrap(), "{f}");
        }
    }

    #[test]
    fn json_and_csv() {
        let r = scan_t2(2).unwrap();
        assert_eq!(ScanReport::from_json(&r.to_json()).unwrap(), r);
        let csv = r.to_csv().unwrap();
        assert!(csv.starts_with("a0,a1,invariant,flag\n-2,-2,-1,\n"));
        assert!(scan_t2(0).is_err());
        assert!("t4".parse::<Family>().is_err());
    }
}
