use super::Crystal;
use crate::error::Result;
use crate::tableau::{Letter, SetValuedTableau, Tableau};
use crate::weight::WeightVector;
use crate::word::Signature;

fn row_holding(t: &SetValuedTableau, c: usize, a: Letter) -> Option<usize> {
    t.cells().iter().position(|row| row.get(c).is_some_and(|cell| cell.contains(&a)))
}

/// Columnwise signs: `+` for a column holding `i` but not `i + 1`, `-` for the reverse.
pub fn svt_signature(t: &SetValuedTableau, i: Letter) -> Signature {
    let width = t.shape().first();
    Signature::from_signs((0..width).filter_map(|c| {
        match (row_holding(t, c, i).is_some(), row_holding(t, c, i + 1).is_some()) {
            (true, false) => Some((c, true)),
            (false, true) => Some((c, false)),
            _ => None,
        }
    }))
}

fn insert_sorted(cell: &mut Vec<Letter>, a: Letter) {
    let at = cell.partition_point(|&x| x < a);
    cell.insert(at, a);
}

fn remove_one(cell: &mut Vec<Letter>, a: Letter) {
    let at = cell.iter().position(|&x| x == a).expect("letter present");
    cell.remove(at);
}

pub fn f_svt(t: &SetValuedTableau, i: Letter) -> Option<SetValuedTableau> {
    let c = svt_signature(t, i).rightmost_plus()?;
    let r = row_holding(t, c, i)?;
    let mut out = t.clone();
    if t.cell(r, c + 1).is_some_and(|right| right.contains(&i)) {
        remove_one(out.cell_mut(r, c + 1), i);
        insert_sorted(out.cell_mut(r, c), i + 1);
    } else {
        let cell = out.cell_mut(r, c);
        remove_one(cell, i);
        insert_sorted(cell, i + 1);
    }
    Some(out)
}

pub fn e_svt(t: &SetValuedTableau, i: Letter) -> Option<SetValuedTableau> {
    let c = svt_signature(t, i).leftmost_minus()?;
    let r = row_holding(t, c, i + 1)?;
    let mut out = t.clone();
    if c > 0 && t.cell(r, c - 1).is_some_and(|left| left.contains(&(i + 1))) {
        remove_one(out.cell_mut(r, c - 1), i + 1);
        insert_sorted(out.cell_mut(r, c), i);
    } else {
        let cell = out.cell_mut(r, c);
        remove_one(cell, i + 1);
        insert_sorted(cell, i);
    }
    Some(out)
}

impl Crystal for SetValuedTableau {
    fn signature(&self, i: Letter) -> Signature {
        svt_signature(self, i)
    }

    fn f(&self, i: Letter) -> Option<Self> {
        f_svt(self, i)
    }

    fn e(&self, i: Letter) -> Option<Self> {
        e_svt(self, i)
    }

    fn weight(&self, n: usize) -> Result<WeightVector> {
        Tableau::weight(self, n)
    }

    fn key(&self) -> String {
        self.to_json()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn svt(rows: Vec<Vec<Vec<Letter>>>) -> SetValuedTableau {
        SetValuedTableau::new(rows).unwrap()
    }

    #[test]
    fn merge_from_the_right() {
        let t = svt(vec![vec![vec![1], vec![1]], vec![vec![2], vec![2, 3]]]);
        let want = svt(vec![vec![vec![1], vec![1]], vec![vec![2, 3], vec![3]]]);
        assert_eq!(f_svt(&t, 2), Some(want.clone()));
        assert_eq!(e_svt(&want, 2), Some(t));
    }

    #[test]
    fn isolated_vertex() {
        let t = svt(vec![vec![vec![1], vec![1, 2]], vec![vec![2, 3], vec![3]]]);
        for i in 1..3 {
            assert_eq!(f_svt(&t, i), None);
            assert_eq!(e_svt(&t, i), None);
        }
    }

    #[test]
    fn highest_weight_has_no_raise() {
        let t = svt(vec![vec![vec![1], vec![1]], vec![vec![2], vec![2]]]);
        assert_eq!(e_svt(&t, 1), None);
    }
}
