use super::Crystal;
use crate::error::Result;
use crate::tableau::{Letter, MultisetValuedTableau, Tableau};
use crate::weight::WeightVector;
use crate::word::Signature;

/// Whether a reading-word letter is the minimum of its cell or one of the extra entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MvtSlot {
    Min,
    Extra,
}

/// Reading word with the source `(row, col, slot)` of each letter.
pub fn mvt_reading(t: &MultisetValuedTableau) -> Vec<(Letter, (usize, usize, MvtSlot))> {
    let mut out = Vec::new();
    for c in 0..t.shape().first() {
        let height = t.column(c).len();
        for r in (0..height).rev() {
            out.push((t.cell(r, c).unwrap()[0], (r, c, MvtSlot::Min)));
        }
        for r in 0..height {
            for &a in &t.cell(r, c).unwrap()[1..] {
                out.push((a, (r, c, MvtSlot::Extra)));
            }
        }
    }
    out
}

fn signature(t: &MultisetValuedTableau, i: Letter) -> (Signature, Vec<(usize, usize, MvtSlot)>) {
    let (word, pos): (Vec<Letter>, Vec<_>) = mvt_reading(t).into_iter().unzip();
    (Signature::of_word(&word, i), pos)
}

fn replace_one(cell: &mut Vec<Letter>, from: Letter, to: Letter) {
    let at = cell.iter().position(|&x| x == from).expect("letter present");
    cell.remove(at);
    let at = cell.partition_point(|&x| x < to);
    cell.insert(at, to);
}

fn move_one(t: &mut MultisetValuedTableau, from: (usize, usize), to: (usize, usize), a: Letter, b: Letter) {
    let src = t.cell_mut(from.0, from.1);
    let at = src.iter().position(|&x| x == a).expect("letter present");
    src.remove(at);
    let dst = t.cell_mut(to.0, to.1);
    let at = dst.partition_point(|&x| x < b);
    dst.insert(at, b);
}

pub fn f_mvt(t: &MultisetValuedTableau, i: Letter) -> Option<MultisetValuedTableau> {
    let (sig, pos) = signature(t, i);
    let (r, c, _) = pos[sig.rightmost_plus()?];
    let mut out = t.clone();
    if t.cell(r + 1, c).is_some_and(|below| below.contains(&(i + 1))) {
        move_one(&mut out, (r, c), (r + 1, c), i, i + 1);
    } else {
        replace_one(out.cell_mut(r, c), i, i + 1);
    }
    Some(out)
}

pub fn e_mvt(t: &MultisetValuedTableau, i: Letter) -> Option<MultisetValuedTableau> {
    let (sig, pos) = signature(t, i);
    let (r, c, _) = pos[sig.leftmost_minus()?];
    let mut out = t.clone();
    if r > 0 && t.cell(r - 1, c).is_some_and(|above| above.contains(&i)) {
        move_one(&mut out, (r, c), (r - 1, c), i + 1, i);
    } else {
        replace_one(out.cell_mut(r, c), i + 1, i);
    }
    Some(out)
}

impl Crystal for MultisetValuedTableau {
    fn signature(&self, i: Letter) -> Signature {
        signature(self, i).0
    }

    fn f(&self, i: Letter) -> Option<Self> {
        f_mvt(self, i)
    }

    fn e(&self, i: Letter) -> Option<Self> {
        e_mvt(self, i)
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

    fn mvt(rows: Vec<Vec<Vec<Letter>>>) -> MultisetValuedTableau {
        MultisetValuedTableau::new(rows).unwrap()
    }

    #[test]
    fn column_reading() {
        let t = mvt(vec![vec![vec![1, 1, 3]], vec![vec![4, 4, 4, 5]], vec![vec![6]], vec![vec![7, 8, 9, 9]]]);
        let w: Vec<Letter> = mvt_reading(&t).into_iter().map(|(a, _)| a).collect();
        assert_eq!(w, vec![7, 6, 4, 1, 1, 3, 4, 4, 5, 8, 9, 9]);
    }

    #[test]
    fn move_then_replace() {
        let hw = mvt(vec![vec![vec![1, 1]], vec![vec![2]]]);
        let s1 = mvt(vec![vec![vec![1]], vec![vec![2, 2]]]);
        let s21 = mvt(vec![vec![vec![1]], vec![vec![2, 3]]]);
        assert_eq!(f_mvt(&hw, 1), Some(s1.clone()));
        assert_eq!(f_mvt(&s1, 2), Some(s21.clone()));
        assert_eq!(e_mvt(&s21, 2), Some(s1.clone()));
        assert_eq!(e_mvt(&s1, 1), Some(hw));
    }
}
