//! Raising and lowering operators on words and on every tableau family.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::tableau::{AnyTableau, Letter, Ssyt, Tableau};
use crate::weight::WeightVector;
use crate::word::{e_word, f_word, Signature, Word};

mod hvt;
mod mvt;
mod svt;
mod vst;

pub use hvt::{e_hvt, e_hvt_traced, f_hvt, f_hvt_traced, hvt_reading, HvtCase, HvtSlot, HvtStep};
pub use mvt::{e_mvt, f_mvt, mvt_reading, MvtSlot};
pub use svt::{e_svt, f_svt, svt_signature};
pub use vst::{e_vst, e_vst_anchor, f_vst, f_vst_anchor, vst_reading, AnchorVst, ReadingConvention};

/// An element of a finite `gl_n` crystal.
pub trait Crystal: Clone + Debug + Eq + Hash + Ord {
    fn signature(&self, i: Letter) -> Signature;

    /// `None` encodes the crystal's zero.
    fn f(&self, i: Letter) -> Option<Self>;

    fn e(&self, i: Letter) -> Option<Self>;

    fn weight(&self, n: usize) -> Result<WeightVector>;

    /// Canonical serialization; graphs are keyed and ordered by it.
    fn key(&self) -> String;

    fn epsilon(&self, i: Letter) -> usize {
        self.signature(i).epsilon()
    }

    fn phi(&self, i: Letter) -> usize {
        self.signature(i).phi()
    }

    fn is_highest_weight(&self, n: usize) -> bool {
        (1..n as Letter).all(|i| self.e(i).is_none())
    }
}

impl Crystal for Word {
    fn signature(&self, i: Letter) -> Signature {
        Signature::of_word(self, i)
    }

    fn f(&self, i: Letter) -> Option<Self> {
        f_word(self, i)
    }

    fn e(&self, i: Letter) -> Option<Self> {
        e_word(self, i)
    }

    fn weight(&self, n: usize) -> Result<WeightVector> {
        let mut w = WeightVector::zero(n);
        for &a in self {
            if a == 0 || a as usize > n {
                return Err(Error::BoundViolation { entry: a, n });
            }
            w.bump(a);
        }
        Ok(w)
    }

    fn key(&self) -> String {
        serde_json::to_string(self).expect("words serialize")
    }
}

/// Cells in column-reading order: columns left to right, each bottom to top.
pub(crate) fn column_positions(t: &Ssyt) -> Vec<(usize, usize)> {
    let rows = t.rows();
    let width = rows.first().map_or(0, Vec::len);
    (0..width).flat_map(|c| (0..rows.len()).rev().filter(move |&r| c < rows[r].len()).map(move |r| (r, c))).collect()
}

fn ssyt_step(t: &Ssyt, i: Letter, raise: bool) -> Option<Ssyt> {
    let w = t.column_word();
    let sig = Signature::of_word(&w, i);
    let p = if raise { sig.leftmost_minus()? } else { sig.rightmost_plus()? };
    let (r, c) = column_positions(t)[p];
    let mut rows = t.rows().to_vec();
    rows[r][c] = if raise { i } else { i + 1 };
    Some(Ssyt::from_rows_unchecked(rows).expect("shape unchanged"))
}

impl Crystal for Ssyt {
    fn signature(&self, i: Letter) -> Signature {
        Signature::of_word(&self.column_word(), i)
    }

    fn f(&self, i: Letter) -> Option<Self> {
        ssyt_step(self, i, false)
    }

    fn e(&self, i: Letter) -> Option<Self> {
        ssyt_step(self, i, true)
    }

    fn weight(&self, n: usize) -> Result<WeightVector> {
        Tableau::weight(self, n)
    }

    fn key(&self) -> String {
        self.to_json()
    }
}

/// Reading word of any family that has one.
pub fn reading_word(t: &AnyTableau) -> Result<Word> {
    Ok(match t {
        AnyTableau::Ssyt(t) => t.column_word(),
        AnyTableau::Svt(_) => return Err(Error::UnsupportedFamily("svt")),
        AnyTableau::Mvt(t) => mvt_reading(t).into_iter().map(|(a, _)| a).collect(),
        AnyTableau::Hvt(t) => hvt_reading(t).into_iter().map(|(a, _)| a).collect(),
        AnyTableau::Vst(t) => vst_reading(t, ReadingConvention::Buoy).into_iter().map(|(a, _)| a).collect(),
    })
}

/// Apply `f_i` (`raise == false`) or `e_i` to a tableau of any family.
pub fn apply(t: &AnyTableau, i: Letter, raise: bool) -> Option<AnyTableau> {
    fn step<T: Crystal>(t: &T, i: Letter, raise: bool) -> Option<T> {
        if raise {
            t.e(i)
        } else {
            t.f(i)
        }
    }
    Some(match t {
        AnyTableau::Ssyt(t) => AnyTableau::Ssyt(step(t, i, raise)?),
        AnyTableau::Svt(t) => AnyTableau::Svt(step(t, i, raise)?),
        AnyTableau::Mvt(t) => AnyTableau::Mvt(step(t, i, raise)?),
        AnyTableau::Hvt(t) => AnyTableau::Hvt(step(t, i, raise)?),
        AnyTableau::Vst(t) => AnyTableau::Vst(step(t, i, raise)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    #[test]
    fn ssyt_operators() {
        let t = Ssyt::new(vec![vec![1, 1], vec![2]]).unwrap();
        assert_eq!(t.e(1), None);
        assert_eq!(t.f(1), Some(Ssyt::new(vec![vec![1, 2], vec![2]]).unwrap()));
        assert_eq!(t.f(2), Some(Ssyt::new(vec![vec![1, 1], vec![3]]).unwrap()));
        assert!(t.is_highest_weight(3));
    }

    #[test]
    fn word_weight_identity() {
        let w = parse_word("2121121").unwrap();
        let wt = Crystal::weight(&w, 2).unwrap();
        assert_eq!(w.phi(1) as i64 - w.epsilon(1) as i64, wt.get(1) as i64 - wt.get(2) as i64);
    }

    #[test]
    fn svt_has_no_reading_word() {
        let t = AnyTableau::Svt(crate::tableau::SetValuedTableau::new(vec![vec![vec![1, 2]]]).unwrap());
        assert!(matches!(reading_word(&t), Err(Error::UnsupportedFamily(_))));
    }
}
