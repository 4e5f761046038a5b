use serde::{Deserialize, Serialize};

use super::{check_cell_order, check_declared_shape, shape_of, Family, Letter, Tableau};
use crate::error::{invalid, Result};
use crate::partition::Partition;

/// Semistandard Young tableau in English notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ssyt {
    shape: Partition,
    rows: Vec<Vec<Letter>>,
}

impl Ssyt {
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        let t = Self::from_rows_unchecked(rows)?;
        t.check()?;
        Ok(t)
    }

    /// Builds the value without checking semistandardness (the shape must still be a partition).
    pub fn from_rows_unchecked(rows: Vec<Vec<Letter>>) -> Result<Self> {
        let shape = shape_of("ssyt", &rows)?;
        Ok(Ssyt { shape, rows })
    }

    pub fn empty() -> Self {
        Ssyt { shape: Partition::empty(), rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> Option<Letter> {
        self.rows.get(r).and_then(|row| row.get(c)).copied()
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Rows from bottom to top, each left to right.
    pub fn row_word(&self) -> Vec<Letter> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Columns from left to right, each bottom to top.
    pub fn column_word(&self) -> Vec<Letter> {
        let mut w = Vec::with_capacity(self.size());
        for c in 0..self.shape.first() {
            for r in (0..self.rows.len()).rev() {
                if let Some(a) = self.get(r, c) {
                    w.push(a);
                }
            }
        }
        w
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<Letter>> {
        &mut self.rows
    }
}

impl Tableau for Ssyt {
    const FAMILY: Family = Family::Ssyt;

    fn shape(&self) -> &Partition {
        &self.shape
    }

    fn check(&self) -> Result<()> {
        check_declared_shape("ssyt", &self.shape, &shape_of("ssyt", &self.rows)?)?;
        if self.rows.iter().flatten().any(|&a| a == 0) {
            return invalid("ssyt", "entries must be positive");
        }
        check_cell_order("ssyt", &self.rows, |&a| a, |&a| a)
    }

    fn weight_letters(&self) -> Vec<Letter> {
        self.rows.iter().flatten().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates() {
        assert!(Ssyt::new(vec![vec![1, 1], vec![2]]).is_ok());
        assert!(Ssyt::new(vec![vec![1, 1], vec![1]]).is_err());
        assert!(Ssyt::new(vec![vec![2, 1]]).is_err());
    }

    #[test]
    fn words() {
        let t = Ssyt::new(vec![vec![1, 1, 2], vec![2, 3]]).unwrap();
        assert_eq!(t.row_word(), vec![2, 3, 1, 1, 2]);
        assert_eq!(t.column_word(), vec![2, 1, 3, 1, 2]);
    }

    #[test]
    fn json_shape() {
        let t = Ssyt::new(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(t.to_json(), r#"{"shape":[2,1],"rows":[[1,2],[3]]}"#);
        assert_eq!(Ssyt::from_json(&t.to_json()).unwrap(), t);
        assert!(Ssyt::from_json(r#"{"shape":[2],"rows":[[1,2],[3]]}"#).is_err());
    }
}
