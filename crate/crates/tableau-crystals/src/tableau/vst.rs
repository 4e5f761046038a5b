use serde::{Deserialize, Serialize};

use super::{Family, Letter, Ssyt, Tableau};
use crate::error::{invalid, Error, Result};
use crate::partition::Partition;

/// A maximal run of cells between consecutive dividers of one row (0-based, inclusive bounds).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Group {
    pub row: usize,
    pub start: usize,
    pub end: usize,
    pub value: Letter,
}

impl Group {
    pub fn buoy(&self) -> usize {
        self.start
    }

    pub fn anchor(&self) -> usize {
        self.end
    }

    pub fn cells(&self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }
}

/// A semistandard tableau whose rows are cut into constant groups by dividers.
///
/// `dividers[r]` holds the 1-based `j` of every divider between columns `j` and `j + 1` of row `r + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "VstRepr", into = "VstRepr")]
pub struct ValuedSetTableau {
    base: Ssyt,
    dividers: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct VstRepr {
    entries: Vec<Vec<Letter>>,
    dividers: Vec<Vec<usize>>,
}

impl TryFrom<VstRepr> for ValuedSetTableau {
    type Error = Error;
    fn try_from(r: VstRepr) -> Result<Self> {
        Ok(ValuedSetTableau { base: Ssyt::from_rows_unchecked(r.entries)?, dividers: r.dividers })
    }
}

impl From<ValuedSetTableau> for VstRepr {
    fn from(v: ValuedSetTableau) -> Self {
        VstRepr { entries: v.base.rows().to_vec(), dividers: v.dividers }
    }
}

impl ValuedSetTableau {
    pub fn new(entries: Vec<Vec<Letter>>, dividers: Vec<Vec<usize>>) -> Result<Self> {
        let t = ValuedSetTableau { base: Ssyt::from_rows_unchecked(entries)?, dividers };
        t.check()?;
        Ok(t)
    }

    /// Every cell its own group.
    pub fn fully_divided(base: Ssyt) -> Self {
        let dividers = base.rows().iter().map(|row| (1..row.len()).collect()).collect();
        ValuedSetTableau { base, dividers }
    }

    /// Only the dividers forced between unequal neighbours.
    pub fn minimally_divided(base: Ssyt) -> Self {
        let dividers = base
            .rows()
            .iter()
            .map(|row| (1..row.len()).filter(|&j| row[j - 1] != row[j]).collect())
            .collect();
        ValuedSetTableau { base, dividers }
    }

    pub fn base(&self) -> &Ssyt {
        &self.base
    }

    pub fn entries(&self) -> &[Vec<Letter>] {
        self.base.rows()
    }

    pub fn dividers(&self) -> &[Vec<usize>] {
        &self.dividers
    }

    pub fn get(&self, r: usize, c: usize) -> Option<Letter> {
        self.base.get(r, c)
    }

    pub fn has_divider(&self, r: usize, j: usize) -> bool {
        self.dividers.get(r).is_some_and(|d| d.binary_search(&j).is_ok())
    }

    pub fn groups_in_row(&self, r: usize) -> Vec<Group> {
        let row = &self.base.rows()[r];
        let mut out = Vec::new();
        let mut start = 0;
        for &j in &self.dividers[r] {
            out.push(Group { row: r, start, end: j - 1, value: row[start] });
            start = j;
        }
        out.push(Group { row: r, start, end: row.len() - 1, value: row[start] });
        out
    }

    pub fn groups(&self) -> Vec<Group> {
        (0..self.base.rows().len()).flat_map(|r| self.groups_in_row(r)).collect()
    }

    /// The group of row `r` containing column `c`.
    pub fn group_at(&self, r: usize, c: usize) -> Group {
        self.groups_in_row(r).into_iter().find(|g| g.start <= c && c <= g.end).expect("cell inside the tableau")
    }

    pub fn num_groups(&self) -> usize {
        self.dividers.iter().map(Vec::len).sum::<usize>() + self.base.rows().len()
    }

    pub fn excess(&self) -> usize {
        self.base.size() - self.num_groups()
    }

    pub(crate) fn set_group(&mut self, g: Group, value: Letter) {
        for c in g.start..=g.end {
            self.base.rows_mut()[g.row][c] = value;
        }
    }

    /// Move divider `j` from row `from` to row `to`; false when either end is impossible.
    pub(crate) fn move_divider(&mut self, j: usize, from: usize, to: usize) -> bool {
        let Some(pos) = self.dividers[from].iter().position(|&d| d == j) else { return false };
        if to >= self.dividers.len() || j >= self.base.rows()[to].len() || self.has_divider(to, j) {
            return false;
        }
        self.dividers[from].remove(pos);
        let at = self.dividers[to].partition_point(|&d| d < j);
        self.dividers[to].insert(at, j);
        true
    }
}

impl Tableau for ValuedSetTableau {
    const FAMILY: Family = Family::Vst;

    fn shape(&self) -> &Partition {
        self.base.shape()
    }

    fn check(&self) -> Result<()> {
        self.base.check().map_err(|e| match e {
            Error::Invalid { reason, .. } => Error::Invalid { family: "vst", reason },
            other => other,
        })?;
        let rows = self.base.rows();
        if self.dividers.len() != rows.len() {
            return invalid("vst", format!("{} divider rows for {} tableau rows", self.dividers.len(), rows.len()));
        }
        for (r, (row, divs)) in rows.iter().zip(&self.dividers).enumerate() {
            if divs.windows(2).any(|w| w[0] >= w[1]) {
                return invalid("vst", format!("dividers of row {} are not strictly increasing", r + 1));
            }
            if divs.iter().any(|&j| j == 0 || j >= row.len()) {
                return invalid("vst", format!("divider outside row {}", r + 1));
            }
            for j in 1..row.len() {
                if row[j - 1] != row[j] && divs.binary_search(&j).is_err() {
                    return invalid("vst", format!("group in row {} spanning columns {} and {} is not constant", r + 1, j, j + 1));
                }
            }
        }
        Ok(())
    }

    /// One letter per group.
    fn weight_letters(&self) -> Vec<Letter> {
        self.groups().into_iter().map(|g| g.value).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_tableau() -> ValuedSetTableau {
        ValuedSetTableau::new(
            vec![
                vec![1, 1, 1, 1, 1, 1, 2, 4, 4, 6],
                vec![2, 2, 2, 3, 3, 4, 5, 5, 5],
                vec![3, 4, 5, 5, 5],
                vec![5, 5, 8],
                vec![7, 7],
            ],
            vec![vec![2, 6, 7, 9], vec![3, 5, 6, 8], vec![1, 2, 3], vec![2], vec![]],
        )
        .unwrap()
    }

    #[test]
    fn example_weight() {
        let t = example_tableau();
        assert_eq!(t.weight(8).unwrap().exponents(), &[2, 2, 2, 3, 5, 1, 1, 1]);
        assert_eq!(t.excess(), 29 - 17);
    }

    #[test]
    fn unequal_neighbours_need_a_divider() {
        assert!(ValuedSetTableau::new(vec![vec![1, 2]], vec![vec![]]).is_err());
        assert!(ValuedSetTableau::new(vec![vec![1, 2]], vec![vec![1]]).is_ok());
    }

    #[test]
    fn json_layout() {
        let t = ValuedSetTableau::new(vec![vec![1, 1]], vec![vec![1]]).unwrap();
        assert_eq!(t.to_json(), r#"{"entries":[[1,1]],"dividers":[[1]]}"#);
        assert_eq!(ValuedSetTableau::from_json(&t.to_json()).unwrap(), t);
    }
}
