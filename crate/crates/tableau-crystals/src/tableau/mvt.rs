use serde::{Deserialize, Serialize};

use super::{check_cell_order, check_declared_shape, shape_of, Family, Letter, Ssyt, Tableau};
use crate::error::{invalid, Result};
use crate::partition::Partition;

/// Tableau whose cells hold nonempty multisets, stored as weakly increasing vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultisetValuedTableau {
    shape: Partition,
    cells: Vec<Vec<Vec<Letter>>>,
}

impl MultisetValuedTableau {
    pub fn new(cells: Vec<Vec<Vec<Letter>>>) -> Result<Self> {
        let t = Self::from_cells_unchecked(cells)?;
        t.check()?;
        Ok(t)
    }

    pub fn from_cells_unchecked(cells: Vec<Vec<Vec<Letter>>>) -> Result<Self> {
        let shape = shape_of("mvt", &cells)?;
        Ok(MultisetValuedTableau { shape, cells })
    }

    pub fn from_ssyt(t: &Ssyt) -> Self {
        let cells = t.rows().iter().map(|row| row.iter().map(|&a| vec![a]).collect()).collect();
        MultisetValuedTableau { shape: t.shape().clone(), cells }
    }

    /// The semistandard tableau when every cell is a singleton.
    pub fn to_ssyt(&self) -> Option<Ssyt> {
        if self.excess() != 0 {
            return None;
        }
        Ssyt::new(self.cells.iter().map(|row| row.iter().map(|c| c[0]).collect()).collect()).ok()
    }

    pub fn cells(&self) -> &[Vec<Vec<Letter>>] {
        &self.cells
    }

    pub fn cell(&self, r: usize, c: usize) -> Option<&Vec<Letter>> {
        self.cells.get(r).and_then(|row| row.get(c))
    }

    pub(crate) fn cell_mut(&mut self, r: usize, c: usize) -> &mut Vec<Letter> {
        &mut self.cells[r][c]
    }

    pub fn excess(&self) -> usize {
        self.cells.iter().flatten().map(Vec::len).sum::<usize>() - self.shape.size()
    }

    /// Column `c` (0-based) as a list of cells from top to bottom.
    pub fn column(&self, c: usize) -> Vec<&Vec<Letter>> {
        self.cells.iter().filter_map(|row| row.get(c)).collect()
    }
}

impl Tableau for MultisetValuedTableau {
    const FAMILY: Family = Family::Mvt;

    fn shape(&self) -> &Partition {
        &self.shape
    }

    fn check(&self) -> Result<()> {
        check_declared_shape("mvt", &self.shape, &shape_of("mvt", &self.cells)?)?;
        for cell in self.cells.iter().flatten() {
            if cell.is_empty() || cell[0] == 0 {
                return invalid("mvt", "cells must be nonempty multisets of positive integers");
            }
            if cell.windows(2).any(|w| w[0] > w[1]) {
                return invalid("mvt", format!("cell {cell:?} is not sorted"));
            }
        }
        check_cell_order("mvt", &self.cells, |c| c[0], |c| *c.last().unwrap())
    }

    fn weight_letters(&self) -> Vec<Letter> {
        self.cells.iter().flatten().flatten().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crystal_figure_element_is_valid() {
        let t = MultisetValuedTableau::new(vec![vec![vec![1, 1], vec![1]], vec![vec![2], vec![2, 2]]]).unwrap();
        assert_eq!(t.excess(), 2);
    }

    #[test]
    fn singleton_weight() {
        let t = MultisetValuedTableau::new(vec![vec![vec![1]], vec![vec![2]]]).unwrap();
        assert_eq!(t.weight(2).unwrap().exponents(), &[1, 1]);
        assert_eq!(t.to_ssyt().unwrap().rows(), &[vec![1], vec![2]]);
    }

    #[test]
    fn bound_violation() {
        let t = MultisetValuedTableau::new(vec![vec![vec![1, 3]]]).unwrap();
        assert!(t.weight(2).is_err());
    }
}
