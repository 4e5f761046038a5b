use super::Crystal;
use crate::error::Result;
use crate::tableau::{HookCell, HookValuedTableau, Letter, Tableau};
use crate::weight::WeightVector;
use crate::word::Signature;

/// Which part of a cell a reading-word letter came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HvtSlot {
    /// Hook entry or leg.
    ExtendedLeg,
    Arm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HvtCase {
    /// Vertical move between arms.
    M,
    /// Horizontal move through the extended legs.
    S,
    /// In place.
    N,
}

/// How an operator acted: the case fired and the slot of the acting letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HvtStep {
    pub case: HvtCase,
    pub slot: HvtSlot,
    pub cell: (usize, usize),
}

/// Per column: extended legs read downward in value from the bottom cell up, then arms ascending from the top cell down.
pub fn hvt_reading(t: &HookValuedTableau) -> Vec<(Letter, (usize, usize, HvtSlot))> {
    let mut out = Vec::new();
    for c in 0..t.shape().first() {
        let height = t.shape().conjugate().get(c);
        for r in (0..height).rev() {
            for a in t.cell(r, c).unwrap().extended_leg().into_iter().rev() {
                out.push((a, (r, c, HvtSlot::ExtendedLeg)));
            }
        }
        for r in 0..height {
            for &a in &t.cell(r, c).unwrap().arm {
                out.push((a, (r, c, HvtSlot::Arm)));
            }
        }
    }
    out
}

fn signature(t: &HookValuedTableau, i: Letter) -> (Signature, Vec<(usize, usize, HvtSlot)>) {
    let (word, pos): (Vec<Letter>, Vec<_>) = hvt_reading(t).into_iter().unzip();
    (Signature::of_word(&word, i), pos)
}

fn without(v: &[Letter], a: Letter) -> Vec<Letter> {
    let mut v = v.to_vec();
    let at = v.iter().position(|&x| x == a).expect("letter present");
    v.remove(at);
    v
}

fn with(v: &[Letter], a: Letter) -> Vec<Letter> {
    let mut v = v.to_vec();
    v.push(a);
    v
}

fn arm_remove(cell: &HookCell, a: Letter) -> HookCell {
    HookCell::from_extended(cell.extended_leg(), without(&cell.arm, a))
}

fn arm_add(cell: &HookCell, a: Letter) -> HookCell {
    HookCell::from_extended(cell.extended_leg(), with(&cell.arm, a))
}

fn leg_remove(cell: &HookCell, a: Letter) -> HookCell {
    HookCell::from_extended(without(&cell.extended_leg(), a), cell.arm.clone())
}

fn leg_add(cell: &HookCell, a: Letter) -> HookCell {
    HookCell::from_extended(with(&cell.extended_leg(), a), cell.arm.clone())
}

/// Replace one `a` by `b` inside the given slot.
fn slot_replace(cell: &HookCell, slot: HvtSlot, a: Letter, b: Letter) -> HookCell {
    match slot {
        HvtSlot::Arm => HookCell::from_extended(cell.extended_leg(), with(&without(&cell.arm, a), b)),
        HvtSlot::ExtendedLeg => HookCell::from_extended(with(&without(&cell.extended_leg(), a), b), cell.arm.clone()),
    }
}

/// The vertical move takes its letter from the arm when the arm has one.
fn take_for_move(cell: &HookCell, a: Letter) -> HookCell {
    if cell.arm.contains(&a) {
        arm_remove(cell, a)
    } else {
        leg_remove(cell, a)
    }
}

pub fn f_hvt_traced(t: &HookValuedTableau, i: Letter) -> Option<(HookValuedTableau, HvtStep)> {
    let (sig, pos) = signature(t, i);
    let (r, c, slot) = pos[sig.rightmost_plus()?];
    let b = t.cell(r, c).unwrap();
    let mut out = t.clone();
    let case = if t.cell(r + 1, c).is_some_and(|below| below.contains(i + 1)) {
        *out.cell_mut(r, c) = take_for_move(b, i);
        *out.cell_mut(r + 1, c) = arm_add(t.cell(r + 1, c).unwrap(), i + 1);
        HvtCase::M
    } else if let Some(right) = t.cell(r, c + 1).filter(|right| right.extended_leg().contains(&i)) {
        *out.cell_mut(r, c + 1) = leg_remove(right, i);
        *out.cell_mut(r, c) = leg_add(b, i + 1);
        HvtCase::S
    } else {
        *out.cell_mut(r, c) = slot_replace(b, slot, i, i + 1);
        HvtCase::N
    };
    Some((out, HvtStep { case, slot, cell: (r, c) }))
}

pub fn e_hvt_traced(t: &HookValuedTableau, i: Letter) -> Option<(HookValuedTableau, HvtStep)> {
    let (sig, pos) = signature(t, i);
    let (r, c, slot) = pos[sig.leftmost_minus()?];
    let b = t.cell(r, c).unwrap();
    let mut out = t.clone();
    let above = r.checked_sub(1).and_then(|ra| t.cell(ra, c));
    let left = c.checked_sub(1).and_then(|cl| t.cell(r, cl));
    let case = if let Some(above) = above.filter(|above| above.contains(i)) {
        *out.cell_mut(r, c) = take_for_move(b, i + 1);
        *out.cell_mut(r - 1, c) = arm_add(above, i);
        HvtCase::M
    } else if let Some(left) = left.filter(|left| left.leg.contains(&(i + 1))) {
        *out.cell_mut(r, c - 1) = leg_remove(left, i + 1);
        *out.cell_mut(r, c) = leg_add(b, i);
        HvtCase::S
    } else {
        *out.cell_mut(r, c) = slot_replace(b, slot, i + 1, i);
        HvtCase::N
    };
    Some((out, HvtStep { case, slot, cell: (r, c) }))
}

pub fn f_hvt(t: &HookValuedTableau, i: Letter) -> Option<HookValuedTableau> {
    f_hvt_traced(t, i).map(|(t, _)| t)
}

pub fn e_hvt(t: &HookValuedTableau, i: Letter) -> Option<HookValuedTableau> {
    e_hvt_traced(t, i).map(|(t, _)| t)
}

impl Crystal for HookValuedTableau {
    fn signature(&self, i: Letter) -> Signature {
        signature(self, i).0
    }

    fn f(&self, i: Letter) -> Option<Self> {
        f_hvt(self, i)
    }

    fn e(&self, i: Letter) -> Option<Self> {
        e_hvt(self, i)
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

    fn h(hook: Letter, arm: &[Letter], leg: &[Letter]) -> HookCell {
        HookCell::new(hook, arm.to_vec(), leg.to_vec())
    }

    fn hvt(rows: Vec<Vec<HookCell>>) -> HookValuedTableau {
        HookValuedTableau::new(rows).unwrap()
    }

    #[test]
    fn reading_example() {
        let t = hvt(vec![
            vec![h(1, &[1], &[3]), h(4, &[], &[5])],
            vec![h(4, &[4, 7], &[5, 6]), h(7, &[7, 7, 9], &[])],
            vec![h(8, &[9, 9], &[9])],
        ]);
        let w: Vec<Letter> = hvt_reading(&t).into_iter().map(|(a, _)| a).collect();
        assert_eq!(w, crate::word::parse_word("9865431 1 47 99 754 779").unwrap());
    }

    #[test]
    fn local_example() {
        let t = hvt(vec![vec![h(1, &[1], &[2]), h(2, &[], &[3])]]);
        let read = |t: &HookValuedTableau| hvt_reading(t).into_iter().map(|(a, _)| a).collect::<Vec<_>>();
        assert_eq!(read(&t), vec![2, 1, 1, 3, 2]);
        let f1 = f_hvt(&t, 1).unwrap();
        assert_eq!(f1, hvt(vec![vec![h(1, &[2], &[2]), h(2, &[], &[3])]]));
        assert_eq!(read(&f1), vec![2, 1, 2, 3, 2]);
        let f2 = f_hvt(&t, 2).unwrap();
        assert_eq!(f2, hvt(vec![vec![h(1, &[1], &[2, 3]), h(3, &[], &[])]]));
        assert_eq!(read(&f2), vec![3, 2, 1, 1, 3]);
    }

    #[test]
    fn case_s_edge() {
        let t = hvt(vec![vec![h(1, &[1], &[]), h(1, &[], &[2])]]);
        let (out, step) = f_hvt_traced(&t, 1).unwrap();
        assert_eq!(out, hvt(vec![vec![h(1, &[1], &[2]), h(2, &[], &[])]]));
        assert_eq!(step.case, HvtCase::S);
        assert_eq!(e_hvt(&out, 1), Some(t));
    }

    #[test]
    fn leg_in_place() {
        let t = hvt(vec![vec![h(1, &[], &[]), h(1, &[1], &[2])]]);
        assert_eq!(f_hvt(&t, 2), Some(hvt(vec![vec![h(1, &[], &[]), h(1, &[1], &[3])]])));
        assert_eq!(e_hvt(&t, 1), None);
    }
}
