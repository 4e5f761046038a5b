use serde::{Deserialize, Serialize};

use super::Letter;
use crate::error::{invalid, Error, Result};
use crate::partition::{Partition, SkewShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FlagKind {
    /// Rows and columns strictly increasing.
    Fc,
    /// Rows strictly, columns weakly increasing.
    Fcs,
}

/// Skew filling whose entries in column `i` are strictly less than `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FlaggedRepr", into = "FlaggedRepr")]
pub struct FlaggedTableau {
    shape: SkewShape,
    kind: FlagKind,
    rows: Vec<Vec<Letter>>,
}

#[derive(Serialize, Deserialize)]
struct FlaggedRepr {
    outer: Partition,
    inner: Partition,
    kind: FlagKind,
    rows: Vec<Vec<Letter>>,
}

impl TryFrom<FlaggedRepr> for FlaggedTableau {
    type Error = Error;
    fn try_from(r: FlaggedRepr) -> Result<Self> {
        let shape = SkewShape::new(r.outer, r.inner)?;
        let mut rows = r.rows;
        rows.resize(shape.outer().len(), Vec::new());
        Ok(FlaggedTableau { shape, kind: r.kind, rows })
    }
}

impl From<FlaggedTableau> for FlaggedRepr {
    fn from(f: FlaggedTableau) -> Self {
        FlaggedRepr { outer: f.shape.outer().clone(), inner: f.shape.inner().clone(), kind: f.kind, rows: f.rows }
    }
}

impl FlaggedTableau {
    /// `rows[r]` lists the skew cells of row `r` from left to right.
    pub fn new(shape: SkewShape, kind: FlagKind, mut rows: Vec<Vec<Letter>>) -> Result<Self> {
        rows.resize(shape.outer().len(), Vec::new());
        let f = FlaggedTableau { shape, kind, rows };
        f.check()?;
        Ok(f)
    }

    pub(crate) fn from_parts_unchecked(shape: SkewShape, kind: FlagKind, mut rows: Vec<Vec<Letter>>) -> Self {
        rows.resize(shape.outer().len(), Vec::new());
        FlaggedTableau { shape, kind, rows }
    }

    pub fn empty(shape: Partition, kind: FlagKind) -> Self {
        let rows = vec![Vec::new(); shape.len()];
        FlaggedTableau { shape: SkewShape::new(shape.clone(), shape).unwrap(), kind, rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn kind(&self) -> FlagKind {
        self.kind
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    /// Entry at absolute 0-based cell `(r, c)` if it is a skew cell.
    pub fn get(&self, r: usize, c: usize) -> Option<Letter> {
        let start = self.shape.inner().get(r);
        if c < start {
            return None;
        }
        self.rows.get(r).and_then(|row| row.get(c - start)).copied()
    }

    pub fn check(&self) -> Result<()> {
        let family = "flagged tableau";
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() != self.shape.row_len(r) {
                return invalid(family, format!("row {} has {} entries for {} skew cells", r + 1, row.len(), self.shape.row_len(r)));
            }
        }
        if self.rows.len() != self.shape.outer().len() {
            return invalid(family, "row count differs from the outer shape");
        }
        for (r, c) in self.shape.cells() {
            let a = self.get(r, c).unwrap();
            if a == 0 || a as usize > c {
                return invalid(family, format!("entry {a} in column {} breaks the flag 1 <= a < {}", c + 1, c + 1));
            }
            if let Some(right) = self.get(r, c + 1) {
                if a >= right {
                    return invalid(family, format!("row {} is not strictly increasing", r + 1));
                }
            }
            if let Some(below) = self.get(r + 1, c) {
                let ok = match self.kind {
                    FlagKind::Fc => a < below,
                    FlagKind::Fcs => a <= below,
                };
                if !ok {
                    return invalid(family, format!("column {} order fails between rows {} and {}", c + 1, r + 1, r + 2));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("flagged tableaux serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: Self = serde_json::from_str(s)?;
        f.check()?;
        Ok(f)
    }

    /// All tableaux of the kind on `shape`, in canonical order.
    pub fn enumerate(kind: FlagKind, shape: &SkewShape) -> Vec<FlaggedTableau> {
        let fills = fill_skew(shape, |r, c, get| {
            let mut lo = 1;
            if let Some(left) = get(r, c.wrapping_sub(1)) {
                lo = lo.max(left + 1);
            }
            if let Some(above) = r.checked_sub(1).and_then(|ra| get(ra, c)) {
                lo = lo.max(match kind {
                    FlagKind::Fc => above + 1,
                    FlagKind::Fcs => above,
                });
            }
            (lo, c as Letter)
        });
        let mut out: Vec<_> = fills.into_iter().map(|rows| FlaggedTableau::from_parts_unchecked(shape.clone(), kind, rows)).collect();
        out.sort_by_cached_key(|f| f.to_json());
        out
    }

    pub fn count(kind: FlagKind, shape: &SkewShape) -> usize {
        Self::enumerate(kind, shape).len()
    }
}

/// Backtracking over skew cells in row-major order.
///
/// `range(r, c, get)` returns the inclusive value range for cell `(r, c)`, where `get` looks up
/// already filled skew cells by absolute coordinates.
pub(crate) fn fill_skew<F>(shape: &SkewShape, range: F) -> Vec<Vec<Vec<Letter>>>
where
    F: Fn(usize, usize, &dyn Fn(usize, usize) -> Option<Letter>) -> (Letter, Letter),
{
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); shape.outer().len()];
    let mut out = Vec::new();

    fn go<F>(
        k: usize,
        cells: &[(usize, usize)],
        shape: &SkewShape,
        rows: &mut Vec<Vec<Letter>>,
        range: &F,
        out: &mut Vec<Vec<Vec<Letter>>>,
    ) where
        F: Fn(usize, usize, &dyn Fn(usize, usize) -> Option<Letter>) -> (Letter, Letter),
    {
        if k == cells.len() {
            out.push(rows.clone());
            return;
        }
        let (r, c) = cells[k];
        let (lo, hi) = {
            let snapshot: &Vec<Vec<Letter>> = rows;
            let get = |rr: usize, cc: usize| -> Option<Letter> {
                let start = shape.inner().get(rr);
                if cc < start {
                    return None;
                }
                snapshot.get(rr).and_then(|row| row.get(cc - start)).copied()
            };
            range(r, c, &get)
        };
        for a in lo..=hi {
            rows[r].push(a);
            go(k + 1, cells, shape, rows, range, out);
            rows[r].pop();
        }
    }

    go(0, &cells, shape, &mut rows, &range, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn skew(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(Partition::new(outer.to_vec()).unwrap(), Partition::new(inner.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn rectangle_remark_count() {
        assert_eq!(FlaggedTableau::count(FlagKind::Fc, &skew(&[5, 4], &[3, 3])), 8);
    }

    #[test]
    fn empty_skew_has_one_filling() {
        assert_eq!(FlaggedTableau::count(FlagKind::Fc, &skew(&[2, 1], &[2, 1])), 1);
        assert_eq!(FlaggedTableau::count(FlagKind::Fcs, &skew(&[3, 3], &[3, 3])), 1);
    }

    #[test]
    fn first_column_is_never_fillable() {
        assert_eq!(FlaggedTableau::count(FlagKind::Fc, &skew(&[1, 1], &[1])), 0);
    }

    #[test]
    fn json_lists_skew_cells_only() {
        let f = FlaggedTableau::new(skew(&[2, 2], &[1, 1]), FlagKind::Fcs, vec![vec![1], vec![1]]).unwrap();
        assert_eq!(f.to_json(), r#"{"outer":[2,2],"inner":[1,1],"kind":"Fcs","rows":[[1],[1]]}"#);
        assert_eq!(FlaggedTableau::from_json(&f.to_json()).unwrap(), f);
        assert!(FlaggedTableau::new(skew(&[2, 2], &[1, 1]), FlagKind::Fc, vec![vec![1], vec![1]]).is_err());
    }
}
