use serde::{Deserialize, Serialize};

use super::{check_cell_order, check_declared_shape, shape_of, Family, Letter, Tableau};
use crate::error::{invalid, Result};
use crate::partition::Partition;

/// Tableau whose cells hold nonempty sets, stored as strictly increasing vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetValuedTableau {
    shape: Partition,
    cells: Vec<Vec<Vec<Letter>>>,
}

impl SetValuedTableau {
    pub fn new(cells: Vec<Vec<Vec<Letter>>>) -> Result<Self> {
        let t = Self::from_cells_unchecked(cells)?;
        t.check()?;
        Ok(t)
    }

    pub fn from_cells_unchecked(cells: Vec<Vec<Vec<Letter>>>) -> Result<Self> {
        let shape = shape_of("svt", &cells)?;
        Ok(SetValuedTableau { shape, cells })
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
}

impl Tableau for SetValuedTableau {
    const FAMILY: Family = Family::Svt;

    fn shape(&self) -> &Partition {
        &self.shape
    }

    fn check(&self) -> Result<()> {
        check_declared_shape("svt", &self.shape, &shape_of("svt", &self.cells)?)?;
        for cell in self.cells.iter().flatten() {
            if cell.is_empty() || cell[0] == 0 {
                return invalid("svt", "cells must be nonempty sets of positive integers");
            }
            if cell.windows(2).any(|w| w[0] >= w[1]) {
                return invalid("svt", format!("cell {cell:?} is not a strictly increasing set"));
            }
        }
        check_cell_order("svt", &self.cells, |c| c[0], |c| *c.last().unwrap())
    }

    fn weight_letters(&self) -> Vec<Letter> {
        self.cells.iter().flatten().flatten().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_one_isolated_vertex_is_valid() {
        let t = SetValuedTableau::new(vec![vec![vec![1], vec![1, 2]], vec![vec![2, 3], vec![3]]]).unwrap();
        assert_eq!(t.excess(), 2);
        assert_eq!(t.weight(3).unwrap().exponents(), &[2, 2, 2]);
    }

    #[test]
    fn rejects_repeated_letters() {
        assert!(SetValuedTableau::new(vec![vec![vec![1, 1]]]).is_err());
    }

    #[test]
    fn rejects_column_tie() {
        assert!(SetValuedTableau::new(vec![vec![vec![1, 2]], vec![vec![2]]]).is_err());
    }
}
