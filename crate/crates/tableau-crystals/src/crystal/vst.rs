use serde::{Deserialize, Serialize};

use super::Crystal;
use crate::error::Result;
use crate::tableau::{Group, Letter, Tableau, ValuedSetTableau};
use crate::weight::WeightVector;
use crate::word::Signature;

/// Which cell of a group stands for it in the reading word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReadingConvention {
    /// Leftmost cell.
    Buoy,
    /// Rightmost cell.
    Anchor,
}

/// Columns left to right, each bottom to top, one letter per group at its representative cell.
pub fn vst_reading(t: &ValuedSetTableau, conv: ReadingConvention) -> Vec<(Letter, Group)> {
    let groups = t.groups();
    let mut reps: Vec<(usize, std::cmp::Reverse<usize>, Group)> = groups
        .into_iter()
        .map(|g| {
            let c = match conv {
                ReadingConvention::Buoy => g.buoy(),
                ReadingConvention::Anchor => g.anchor(),
            };
            (c, std::cmp::Reverse(g.row), g)
        })
        .collect();
    reps.sort_by_key(|&(c, r, _)| (c, r));
    reps.into_iter().map(|(_, _, g)| (g.value, g)).collect()
}

fn signature(t: &ValuedSetTableau, i: Letter, conv: ReadingConvention) -> (Signature, Vec<Group>) {
    let (word, groups): (Vec<Letter>, Vec<Group>) = vst_reading(t, conv).into_iter().unzip();
    (Signature::of_word(&word, i), groups)
}

fn moved(mut t: ValuedSetTableau, j: usize, from: usize, to: usize) -> ValuedSetTableau {
    let ok = t.move_divider(j, from, to);
    assert!(ok, "divider {j} cannot move from row {} to row {}", from + 1, to + 1);
    t
}

fn rewritten(mut t: ValuedSetTableau, g: Group, value: Letter) -> ValuedSetTableau {
    t.set_group(g, value);
    t
}

fn f_with(t: &ValuedSetTableau, i: Letter, conv: ReadingConvention) -> Option<ValuedSetTableau> {
    let (sig, groups) = signature(t, i, conv);
    let g = groups[sig.rightmost_plus()?];
    Some(if t.get(g.row + 1, g.start) == Some(i + 1) {
        moved(t.clone(), g.start, g.row, g.row + 1)
    } else {
        rewritten(t.clone(), g, i + 1)
    })
}

fn e_with(t: &ValuedSetTableau, i: Letter, conv: ReadingConvention) -> Option<ValuedSetTableau> {
    let (sig, groups) = signature(t, i, conv);
    let g = groups[sig.leftmost_minus()?];
    Some(if g.row > 0 && t.get(g.row - 1, g.end) == Some(i) {
        moved(t.clone(), g.start, g.row, g.row - 1)
    } else {
        rewritten(t.clone(), g, i)
    })
}

pub fn f_vst(t: &ValuedSetTableau, i: Letter) -> Option<ValuedSetTableau> {
    f_with(t, i, ReadingConvention::Buoy)
}

pub fn e_vst(t: &ValuedSetTableau, i: Letter) -> Option<ValuedSetTableau> {
    e_with(t, i, ReadingConvention::Buoy)
}

/// Anchor reading: the divider on the right of the acting group moves, provided the group in the
/// neighbouring row spans that column boundary.
pub fn f_vst_anchor(t: &ValuedSetTableau, i: Letter) -> Option<ValuedSetTableau> {
    let (sig, groups) = signature(t, i, ReadingConvention::Anchor);
    let g = groups[sig.rightmost_plus()?];
    let j = g.end + 1;
    Some(if t.get(g.row + 1, j) == Some(i + 1) && !t.has_divider(g.row + 1, j) {
        moved(t.clone(), j, g.row, g.row + 1)
    } else {
        rewritten(t.clone(), g, i + 1)
    })
}

pub fn e_vst_anchor(t: &ValuedSetTableau, i: Letter) -> Option<ValuedSetTableau> {
    let (sig, groups) = signature(t, i, ReadingConvention::Anchor);
    let g = groups[sig.leftmost_minus()?];
    let j = g.end + 1;
    Some(if g.row > 0 && t.get(g.row - 1, j) == Some(i) && !t.has_divider(g.row - 1, j) {
        moved(t.clone(), j, g.row, g.row - 1)
    } else {
        rewritten(t.clone(), g, i)
    })
}

impl Crystal for ValuedSetTableau {
    fn signature(&self, i: Letter) -> Signature {
        signature(self, i, ReadingConvention::Buoy).0
    }

    fn f(&self, i: Letter) -> Option<Self> {
        f_vst(self, i)
    }

    fn e(&self, i: Letter) -> Option<Self> {
        e_vst(self, i)
    }

    fn weight(&self, n: usize) -> Result<WeightVector> {
        Tableau::weight(self, n)
    }

    fn key(&self) -> String {
        self.to_json()
    }
}

/// A valued-set tableau read through its anchors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnchorVst(pub ValuedSetTableau);

impl Crystal for AnchorVst {
    fn signature(&self, i: Letter) -> Signature {
        signature(&self.0, i, ReadingConvention::Anchor).0
    }

    fn f(&self, i: Letter) -> Option<Self> {
        f_vst_anchor(&self.0, i).map(AnchorVst)
    }

    fn e(&self, i: Letter) -> Option<Self> {
        e_vst_anchor(&self.0, i).map(AnchorVst)
    }

    fn weight(&self, n: usize) -> Result<WeightVector> {
        Tableau::weight(&self.0, n)
    }

    fn key(&self) -> String {
        self.0.to_json()
    }
}
