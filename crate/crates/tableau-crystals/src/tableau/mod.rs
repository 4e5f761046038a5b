//! The five tableau families plus the flagged and interval targets of the bijections.

use std::fmt::Debug;
use std::hash::Hash;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::partition::Partition;
use crate::weight::WeightVector;

mod flagged;
mod hvt;
mod interval;
mod mvt;
mod ssyt;
mod svt;
mod vst;

pub use flagged::{FlagKind, FlaggedTableau};
pub use hvt::{HookCell, HookValuedTableau};
pub use interval::{CellOrder, IntervalSkewTableau, IntervalTarget};
pub use mvt::MultisetValuedTableau;
pub use ssyt::Ssyt;
pub use svt::SetValuedTableau;
pub use vst::{Group, ValuedSetTableau};

pub type Letter = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Ssyt,
    Svt,
    Mvt,
    Hvt,
    Vst,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Ssyt => "ssyt",
            Family::Svt => "svt",
            Family::Mvt => "mvt",
            Family::Hvt => "hvt",
            Family::Vst => "vst",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s.to_ascii_lowercase().as_str() {
            "ssyt" => Some(Family::Ssyt),
            "svt" => Some(Family::Svt),
            "mvt" => Some(Family::Mvt),
            "hvt" => Some(Family::Hvt),
            "vst" => Some(Family::Vst),
            _ => None,
        }
    }
}

/// Behaviour shared by every tableau family.
pub trait Tableau: Clone + Debug + Eq + Hash + Ord + Serialize + DeserializeOwned {
    const FAMILY: Family;

    fn shape(&self) -> &Partition;

    /// `Ok(())` iff every family invariant holds; the error names the first violation.
    fn check(&self) -> Result<()>;

    /// Letters counted by the weight (with multiplicity).
    fn weight_letters(&self) -> Vec<Letter>;

    fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    fn max_entry(&self) -> Letter {
        self.weight_letters().into_iter().max().unwrap_or(0)
    }

    fn weight(&self, n: usize) -> Result<WeightVector> {
        let mut w = WeightVector::zero(n);
        for a in self.weight_letters() {
            if a as usize > n {
                return Err(Error::BoundViolation { entry: a, n });
            }
            w.bump(a);
        }
        Ok(w)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableaux serialize")
    }

    fn from_json(s: &str) -> Result<Self> {
        let t: Self = serde_json::from_str(s)?;
        t.check()?;
        Ok(t)
    }
}

/// A tableau of any family, as handed over by the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyTableau {
    Ssyt(Ssyt),
    Svt(SetValuedTableau),
    Mvt(MultisetValuedTableau),
    Hvt(HookValuedTableau),
    Vst(ValuedSetTableau),
}

impl AnyTableau {
    pub fn from_json(family: Family, s: &str) -> Result<Self> {
        Ok(match family {
            Family::Ssyt => AnyTableau::Ssyt(Ssyt::from_json(s)?),
            Family::Svt => AnyTableau::Svt(SetValuedTableau::from_json(s)?),
            Family::Mvt => AnyTableau::Mvt(MultisetValuedTableau::from_json(s)?),
            Family::Hvt => AnyTableau::Hvt(HookValuedTableau::from_json(s)?),
            Family::Vst => AnyTableau::Vst(ValuedSetTableau::from_json(s)?),
        })
    }

    pub fn family(&self) -> Family {
        match self {
            AnyTableau::Ssyt(_) => Family::Ssyt,
            AnyTableau::Svt(_) => Family::Svt,
            AnyTableau::Mvt(_) => Family::Mvt,
            AnyTableau::Hvt(_) => Family::Hvt,
            AnyTableau::Vst(_) => Family::Vst,
        }
    }

    pub fn validate(&self) -> bool {
        match self {
            AnyTableau::Ssyt(t) => t.is_valid(),
            AnyTableau::Svt(t) => t.is_valid(),
            AnyTableau::Mvt(t) => t.is_valid(),
            AnyTableau::Hvt(t) => t.is_valid(),
            AnyTableau::Vst(t) => t.is_valid(),
        }
    }

    pub fn weight(&self, n: usize) -> Result<WeightVector> {
        match self {
            AnyTableau::Ssyt(t) => t.weight(n),
            AnyTableau::Svt(t) => t.weight(n),
            AnyTableau::Mvt(t) => t.weight(n),
            AnyTableau::Hvt(t) => t.weight(n),
            AnyTableau::Vst(t) => t.weight(n),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            AnyTableau::Ssyt(t) => t.to_json(),
            AnyTableau::Svt(t) => t.to_json(),
            AnyTableau::Mvt(t) => t.to_json(),
            AnyTableau::Hvt(t) => t.to_json(),
            AnyTableau::Vst(t) => t.to_json(),
        }
    }
}

/// Shape of a ragged array of rows, rejecting empty or increasing rows.
pub(crate) fn shape_of<T>(family: &'static str, rows: &[Vec<T>]) -> Result<Partition> {
    if rows.iter().any(|r| r.is_empty()) {
        return invalid(family, "empty row");
    }
    Partition::new(rows.iter().map(|r| r.len()).collect())
        .map_err(|_| Error::Invalid { family, reason: "row lengths are not weakly decreasing".into() })
}

/// Row-weak / column-strict comparison of cells through their min and max.
pub(crate) fn check_cell_order<C>(
    family: &'static str,
    rows: &[Vec<C>],
    min: impl Fn(&C) -> Letter,
    max: impl Fn(&C) -> Letter,
) -> Result<()> {
    for (r, row) in rows.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            if c + 1 < row.len() && max(cell) > min(&row[c + 1]) {
                return invalid(family, format!("row {} weakly increasing fails between columns {} and {}", r + 1, c + 1, c + 2));
            }
            if let Some(below) = rows.get(r + 1).and_then(|b| b.get(c)) {
                if max(cell) >= min(below) {
                    return invalid(family, format!("column {} strictly increasing fails between rows {} and {}", c + 1, r + 1, r + 2));
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn check_declared_shape(family: &'static str, declared: &Partition, actual: &Partition) -> Result<()> {
    if declared != actual {
        return invalid(family, format!("declared shape {declared} differs from row lengths {actual}"));
    }
    Ok(())
}

/// Sort tableaux by canonical serialization, the enumeration order used everywhere.
pub fn sort_canonical<T: Tableau>(v: &mut Vec<T>) {
    let mut keyed: Vec<(String, T)> = v.drain(..).map(|t| (t.to_json(), t)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    v.extend(keyed.into_iter().map(|(_, t)| t));
}
