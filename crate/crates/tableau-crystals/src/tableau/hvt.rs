use serde::{Deserialize, Serialize};

use super::{check_cell_order, check_declared_shape, shape_of, Family, Letter, Tableau};
use crate::error::{invalid, Result};
use crate::partition::Partition;

/// One cell of a hook-valued tableau: hook entry, weakly increasing arm, strictly increasing leg.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HookCell {
    pub hook: Letter,
    pub arm: Vec<Letter>,
    pub leg: Vec<Letter>,
}

impl HookCell {
    pub fn single(h: Letter) -> Self {
        HookCell { hook: h, arm: Vec::new(), leg: Vec::new() }
    }

    pub fn new(hook: Letter, arm: Vec<Letter>, leg: Vec<Letter>) -> Self {
        HookCell { hook, arm, leg }
    }

    /// Rebuild from an extended leg (any order, distinct) and an arm; the hook is the least leg entry.
    pub(crate) fn from_extended(mut ext: Vec<Letter>, mut arm: Vec<Letter>) -> Self {
        ext.sort_unstable();
        arm.sort_unstable();
        let hook = ext[0];
        HookCell { hook, arm, leg: ext[1..].to_vec() }
    }

    /// `{h} ∪ leg`, ascending.
    pub fn extended_leg(&self) -> Vec<Letter> {
        let mut v = Vec::with_capacity(self.leg.len() + 1);
        v.push(self.hook);
        v.extend_from_slice(&self.leg);
        v
    }

    pub fn smallest(&self) -> Letter {
        self.hook
    }

    pub fn largest(&self) -> Letter {
        let a = self.arm.last().copied().unwrap_or(0);
        let l = self.leg.last().copied().unwrap_or(0);
        self.hook.max(a).max(l)
    }

    pub fn contains(&self, a: Letter) -> bool {
        self.hook == a || self.arm.contains(&a) || self.leg.contains(&a)
    }

    pub fn check(&self) -> Result<()> {
        if self.hook == 0 {
            return invalid("hvt", "hook entry must be positive");
        }
        if self.arm.windows(2).any(|w| w[0] > w[1]) || self.arm.first().is_some_and(|&a| a < self.hook) {
            return invalid("hvt", format!("arm {:?} must be weakly increasing and at least the hook {}", self.arm, self.hook));
        }
        if self.leg.windows(2).any(|w| w[0] >= w[1]) || self.leg.first().is_some_and(|&a| a <= self.hook) {
            return invalid("hvt", format!("leg {:?} must be strictly increasing and above the hook {}", self.leg, self.hook));
        }
        Ok(())
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        std::iter::once(self.hook).chain(self.arm.iter().copied()).chain(self.leg.iter().copied())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HookValuedTableau {
    shape: Partition,
    cells: Vec<Vec<HookCell>>,
}

impl HookValuedTableau {
    pub fn new(cells: Vec<Vec<HookCell>>) -> Result<Self> {
        let t = Self::from_cells_unchecked(cells)?;
        t.check()?;
        Ok(t)
    }

    pub fn from_cells_unchecked(cells: Vec<Vec<HookCell>>) -> Result<Self> {
        let shape = shape_of("hvt", &cells)?;
        Ok(HookValuedTableau { shape, cells })
    }

    pub fn cells(&self) -> &[Vec<HookCell>] {
        &self.cells
    }

    pub fn cell(&self, r: usize, c: usize) -> Option<&HookCell> {
        self.cells.get(r).and_then(|row| row.get(c))
    }

    pub(crate) fn cell_mut(&mut self, r: usize, c: usize) -> &mut HookCell {
        &mut self.cells[r][c]
    }

    pub fn arm_excess(&self) -> usize {
        self.cells.iter().flatten().map(|c| c.arm.len()).sum()
    }

    pub fn leg_excess(&self) -> usize {
        self.cells.iter().flatten().map(|c| c.leg.len()).sum()
    }
}

impl Tableau for HookValuedTableau {
    const FAMILY: Family = Family::Hvt;

    fn shape(&self) -> &Partition {
        &self.shape
    }

    fn check(&self) -> Result<()> {
        check_declared_shape("hvt", &self.shape, &shape_of("hvt", &self.cells)?)?;
        for cell in self.cells.iter().flatten() {
            cell.check()?;
        }
        check_cell_order("hvt", &self.cells, HookCell::smallest, HookCell::largest)
    }

    fn weight_letters(&self) -> Vec<Letter> {
        self.cells.iter().flatten().flat_map(|c| c.letters()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn not_semistandard_row() {
        let t = HookValuedTableau::from_cells_unchecked(vec![vec![
            HookCell::new(1, vec![1, 1], vec![2]),
            HookCell::single(1),
        ]])
        .unwrap();
        assert!(!t.is_valid());
    }

    #[test]
    fn single_cell_weight() {
        let t = HookValuedTableau::new(vec![vec![HookCell::new(1, vec![1], vec![2])]]).unwrap();
        assert_eq!(t.weight(3).unwrap().exponents(), &[2, 1, 0]);
        assert_eq!((t.arm_excess(), t.leg_excess()), (1, 1));
    }

    #[test]
    fn cell_json() {
        let c = HookCell::new(1, vec![1], vec![2]);
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"hook":1,"arm":[1],"leg":[2]}"#);
    }

    #[test]
    fn max_uses_arm_and_leg() {
        assert_eq!(HookCell::new(2, vec![5], vec![3]).largest(), 5);
        assert_eq!(HookCell::new(2, vec![2], vec![3]).largest(), 3);
    }
}
