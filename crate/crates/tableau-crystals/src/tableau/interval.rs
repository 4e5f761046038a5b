use serde::{Deserialize, Serialize};

use super::flagged::fill_skew;
use super::Letter;
use crate::error::{invalid, Error, Result};
use crate::partition::{Partition, SkewShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CellOrder {
    /// Rows weak, columns strict.
    Semistandard,
    /// Rows and columns weak.
    ReversePlanePartition,
    /// Rows strict, columns weak.
    ConjugateSemistandard,
}

/// Skew filling with a closed interval of allowed values per row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "IntervalRepr", into = "IntervalRepr")]
pub struct IntervalSkewTableau {
    shape: SkewShape,
    order: CellOrder,
    intervals: Vec<(Letter, Letter)>,
    rows: Vec<Vec<Letter>>,
}

#[derive(Serialize, Deserialize)]
struct IntervalRepr {
    outer: Partition,
    inner: Partition,
    order: CellOrder,
    intervals: Vec<(Letter, Letter)>,
    rows: Vec<Vec<Letter>>,
}

impl TryFrom<IntervalRepr> for IntervalSkewTableau {
    type Error = Error;
    fn try_from(r: IntervalRepr) -> Result<Self> {
        Ok(IntervalSkewTableau { shape: SkewShape::new(r.outer, r.inner)?, order: r.order, intervals: r.intervals, rows: r.rows })
    }
}

impl From<IntervalSkewTableau> for IntervalRepr {
    fn from(t: IntervalSkewTableau) -> Self {
        IntervalRepr {
            outer: t.shape.outer().clone(),
            inner: t.shape.inner().clone(),
            order: t.order,
            intervals: t.intervals,
            rows: t.rows,
        }
    }
}

impl IntervalSkewTableau {
    pub fn new(shape: SkewShape, order: CellOrder, intervals: Vec<(Letter, Letter)>, mut rows: Vec<Vec<Letter>>) -> Result<Self> {
        rows.resize(shape.outer().len(), Vec::new());
        let t = IntervalSkewTableau { shape, order, intervals, rows };
        t.check()?;
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn order(&self) -> CellOrder {
        self.order
    }

    pub fn intervals(&self) -> &[(Letter, Letter)] {
        &self.intervals
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> Option<Letter> {
        let start = self.shape.inner().get(r);
        if c < start {
            return None;
        }
        self.rows.get(r).and_then(|row| row.get(c - start)).copied()
    }

    pub fn check(&self) -> Result<()> {
        let family = "interval tableau";
        if self.rows.len() != self.shape.outer().len() || self.intervals.len() < self.shape.outer().len() {
            return invalid(family, "row data does not match the shape");
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() != self.shape.row_len(r) {
                return invalid(family, format!("row {} has the wrong length", r + 1));
            }
        }
        for (r, c) in self.shape.cells() {
            let a = self.get(r, c).unwrap();
            let (lo, hi) = self.intervals[r];
            if a < lo || a > hi {
                return invalid(family, format!("entry {a} of row {} outside [{lo}, {hi}]", r + 1));
            }
            if let Some(right) = self.get(r, c + 1) {
                let ok = match self.order {
                    CellOrder::ConjugateSemistandard => a < right,
                    _ => a <= right,
                };
                if !ok {
                    return invalid(family, format!("row {} order fails", r + 1));
                }
            }
            if let Some(below) = self.get(r + 1, c) {
                let ok = match self.order {
                    CellOrder::Semistandard => a < below,
                    _ => a <= below,
                };
                if !ok {
                    return invalid(family, format!("column {} order fails", c + 1));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("interval tableaux serialize")
    }

    /// Every filling of `shape` respecting `order` and the row intervals, in canonical order.
    pub fn enumerate(shape: &SkewShape, order: CellOrder, intervals: &[(Letter, Letter)]) -> Vec<IntervalSkewTableau> {
        let fills = fill_skew(shape, |r, c, get| {
            let (mut lo, hi) = intervals[r];
            if let Some(left) = get(r, c.wrapping_sub(1)) {
                lo = lo.max(if order == CellOrder::ConjugateSemistandard { left + 1 } else { left });
            }
            if let Some(above) = r.checked_sub(1).and_then(|ra| get(ra, c)) {
                lo = lo.max(if order == CellOrder::Semistandard { above + 1 } else { above });
            }
            (lo, hi)
        });
        let mut out: Vec<_> = fills
            .into_iter()
            .map(|rows| IntervalSkewTableau { shape: shape.clone(), order, intervals: intervals.to_vec(), rows })
            .collect();
        out.sort_by_cached_key(|t| t.to_json());
        out
    }
}

/// The three target sets of the counting corollaries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalTarget {
    /// Semistandard fillings of `μ/λ` with row `i` in `[λ_1 + 1 - λ_i, λ_1]`.
    MvtHighestWeights,
    /// Conjugate semistandard fillings of `(μ_i - 1)` with row `i` below `λ_i`.
    VstGroupPositions,
    /// Reverse plane partitions of `λ/μ` with row `i` in `[μ_1 + 1 - μ_i, μ_1]`.
    VstNonBuoys,
}

impl IntervalSkewTableau {
    /// Members of a corollary's target set for the pair `(λ, μ)`; `None` when the data is malformed.
    pub fn enumerate_target(target: IntervalTarget, lambda: &Partition, mu: &Partition) -> Option<Vec<IntervalSkewTableau>> {
        match target {
            IntervalTarget::MvtHighestWeights => {
                let shape = SkewShape::new(mu.clone(), lambda.clone()).ok()?;
                let l1 = lambda.first() as Letter;
                let intervals = (0..mu.len()).map(|i| (l1 + 1 - lambda.get(i) as Letter, l1)).collect::<Vec<_>>();
                Some(Self::enumerate(&shape, CellOrder::Semistandard, &intervals))
            }
            IntervalTarget::VstGroupPositions => {
                if mu.len() != lambda.len() || mu.parts().contains(&0) {
                    return None;
                }
                let outer = Partition::from_trimmed(mu.parts().iter().map(|&m| m - 1).collect());
                let shape = SkewShape::new(outer.clone(), Partition::empty()).ok()?;
                let intervals = (0..outer.len())
                    .map(|i| (1, (lambda.get(i) as Letter).saturating_sub(1)))
                    .collect::<Vec<_>>();
                Some(Self::enumerate(&shape, CellOrder::ConjugateSemistandard, &intervals))
            }
            IntervalTarget::VstNonBuoys => {
                let shape = SkewShape::new(lambda.clone(), mu.clone()).ok()?;
                if mu.len() != lambda.len() {
                    return None;
                }
                let m1 = mu.first() as Letter;
                let intervals = (0..lambda.len()).map(|i| (m1 + 1 - mu.get(i) as Letter, m1)).collect::<Vec<_>>();
                Some(Self::enumerate(&shape, CellOrder::ReversePlanePartition, &intervals))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rectangle_target() {
        let v = IntervalSkewTableau::enumerate_target(IntervalTarget::MvtHighestWeights, &p(&[3, 3]), &p(&[5, 4])).unwrap();
        assert_eq!(v.len(), 8);
    }

    #[test]
    fn rpp_of_empty_skew() {
        let v = IntervalSkewTableau::enumerate_target(IntervalTarget::VstNonBuoys, &p(&[3, 3]), &p(&[3, 3])).unwrap();
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn rejects_out_of_interval() {
        let shape = SkewShape::new(p(&[1]), p(&[])).unwrap();
        assert!(IntervalSkewTableau::new(shape, CellOrder::Semistandard, vec![(2, 3)], vec![vec![1]]).is_err());
    }
}
