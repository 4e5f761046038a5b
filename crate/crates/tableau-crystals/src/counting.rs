//! Explicit bijections behind the multiplicity formulas.

use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};
use crate::tableau::{
    CellOrder, FlagKind, FlaggedTableau, IntervalSkewTableau, Letter, MultisetValuedTableau, Ssyt, Tableau,
    ValuedSetTableau,
};

/// Single column with extras to a semistandard tableau of hook-plus-column shape with the same reading word.
pub fn psi_column(t: &MultisetValuedTableau) -> Result<Ssyt> {
    t.check()?;
    if t.shape().first() > 1 {
        return Err(Error::ShapeMismatch(format!("{} is not a single column", t.shape())));
    }
    let mut rows: Vec<Vec<Letter>> = t.cells().iter().map(|row| vec![row[0][0]]).collect();
    if let Some(first) = rows.first_mut() {
        first.extend(t.cells().iter().flat_map(|row| row[0][1..].iter().copied()));
    }
    Ssyt::new(rows)
}

fn mvt_target_intervals(lambda: &Partition, rows: usize) -> Vec<(Letter, Letter)> {
    let l1 = lambda.first() as Letter;
    (0..rows).map(|i| (l1 + 1 - lambda.get(i) as Letter, l1)).collect()
}

fn violation(e: Error) -> Error {
    Error::BijectionViolation(e.to_string())
}

/// Column flagged increasing tableau to the interval-bounded skew tableau: column `c` gains `λ_1 + 1 - c`.
pub fn phi_flagged(f: &FlaggedTableau) -> Result<IntervalSkewTableau> {
    f.check()?;
    if f.kind() != FlagKind::Fc {
        return Err(Error::ShapeMismatch("expected a column flagged increasing tableau".into()));
    }
    let lambda = f.shape().inner();
    let l1 = lambda.first() as Letter;
    let rows = (0..f.shape().outer().len())
        .map(|r| {
            (lambda.get(r)..f.shape().outer().get(r)).map(|c| f.get(r, c).unwrap() + l1 - c as Letter).collect()
        })
        .collect();
    let intervals = mvt_target_intervals(lambda, f.shape().outer().len());
    IntervalSkewTableau::new(f.shape().clone(), CellOrder::Semistandard, intervals, rows).map_err(violation)
}

pub fn phi_flagged_inverse(t: &IntervalSkewTableau) -> Result<FlaggedTableau> {
    t.check()?;
    let lambda = t.shape().inner();
    let l1 = lambda.first() as Letter;
    if t.order() != CellOrder::Semistandard || t.intervals() != mvt_target_intervals(lambda, t.shape().outer().len()) {
        return Err(Error::ShapeMismatch("not a member of the multiset-valued highest weight target".into()));
    }
    let rows = t
        .shape()
        .cells()
        .fold(vec![Vec::new(); t.shape().outer().len()], |mut rows, (r, c)| {
            rows[r].push((t.get(r, c).unwrap() + c as Letter).wrapping_sub(l1));
            rows
        });
    FlaggedTableau::new(t.shape().clone(), FlagKind::Fc, rows).map_err(violation)
}

fn require_highest_weight<T: Crystal + Tableau>(t: &T) -> Result<()> {
    t.check()?;
    let n = Tableau::max_entry(t) as usize + 1;
    let rows_ok = Crystal::weight(t, n)?.to_partition().is_some_and(|mu| mu.len() == t.shape().len());
    if !t.is_highest_weight(n) || !rows_ok {
        return Err(Error::NotHighestWeight(t.key()));
    }
    Ok(())
}

/// Highest weight multiset-valued tableau to a skew tableau of `μ/λ`: an extra in column `c` of row `j`
/// becomes the entry `λ_1 + 1 - c` in row `j`.
pub fn hw_mvt_to_skew(t: &MultisetValuedTableau) -> Result<IntervalSkewTableau> {
    require_highest_weight(t)?;
    let lambda = t.shape().clone();
    let l1 = lambda.first() as Letter;
    let rows: Vec<Vec<Letter>> = t
        .cells()
        .iter()
        .map(|row| {
            let mut out: Vec<Letter> = row
                .iter()
                .enumerate()
                .flat_map(|(c, cell)| std::iter::repeat_n(l1 - c as Letter, cell.len() - 1))
                .collect();
            out.sort_unstable();
            out
        })
        .collect();
    let mu = Partition::new(lambda.parts().iter().zip(&rows).map(|(l, r)| l + r.len()).collect())?;
    let intervals = mvt_target_intervals(&lambda, lambda.len());
    IntervalSkewTableau::new(SkewShape::new(mu, lambda)?, CellOrder::Semistandard, intervals, rows).map_err(violation)
}

/// Highest weight valued-set tableau to a conjugate semistandard tableau: row `i` lists the anchor
/// columns of every group but the last.
pub fn hw_vst_to_conj(t: &ValuedSetTableau) -> Result<IntervalSkewTableau> {
    require_highest_weight(t)?;
    let lambda = t.shape();
    let rows: Vec<Vec<Letter>> = (0..lambda.len())
        .map(|r| {
            let groups = t.groups_in_row(r);
            groups[..groups.len() - 1].iter().map(|g| g.anchor() as Letter + 1).collect()
        })
        .filter(|row: &Vec<Letter>| !row.is_empty())
        .collect();
    let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
    let intervals = (0..rows.len()).map(|i| (1, lambda.get(i) as Letter - 1)).collect();
    IntervalSkewTableau::new(SkewShape::new(shape, Partition::empty())?, CellOrder::ConjugateSemistandard, intervals, rows)
        .map_err(violation)
}

/// Highest weight valued-set tableau to a reverse plane partition of `λ/μ`: the `j`-th non-buoy of
/// row `i` becomes the number of buoys to its left plus `μ_1 - μ_i`.
pub fn hw_vst_to_rpp(t: &ValuedSetTableau) -> Result<IntervalSkewTableau> {
    require_highest_weight(t)?;
    let lambda = t.shape().clone();
    let mu = Partition::new((0..lambda.len()).map(|r| t.groups_in_row(r).len()).collect())?;
    let m1 = mu.first() as Letter;
    let rows: Vec<Vec<Letter>> = (0..lambda.len())
        .map(|r| {
            let mut buoys = 0;
            let mut out = Vec::new();
            for c in 0..lambda.get(r) {
                if c == 0 || t.has_divider(r, c) {
                    buoys += 1;
                } else {
                    out.push(buoys + m1 - mu.get(r) as Letter);
                }
            }
            out
        })
        .collect();
    let intervals = (0..lambda.len()).map(|i| (m1 + 1 - mu.get(i) as Letter, m1)).collect();
    IntervalSkewTableau::new(SkewShape::new(lambda, mu)?, CellOrder::ReversePlanePartition, intervals, rows)
        .map_err(violation)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn mvt(rows: Vec<Vec<Vec<Letter>>>) -> MultisetValuedTableau {
        MultisetValuedTableau::new(rows).unwrap()
    }

    #[test]
    fn column_map() {
        let s = |rows: Vec<Vec<Letter>>| Ssyt::new(rows).unwrap();
        assert_eq!(psi_column(&mvt(vec![vec![vec![1, 1]], vec![vec![2]]])).unwrap(), s(vec![vec![1, 1], vec![2]]));
        assert_eq!(psi_column(&mvt(vec![vec![vec![1]], vec![vec![2]], vec![vec![3]]])).unwrap(), s(vec![vec![1], vec![2], vec![3]]));
        assert_eq!(psi_column(&mvt(vec![vec![vec![1, 2]], vec![vec![3, 3]]])).unwrap(), s(vec![vec![1, 2, 3], vec![3]]));
        assert!(psi_column(&mvt(vec![vec![vec![1], vec![1]]])).is_err());
    }

    #[test]
    fn skew_from_highest_weight_mvt() {
        let t = mvt(vec![vec![vec![1], vec![1], vec![1, 1]], vec![vec![2], vec![2, 2, 2]]]);
        let s = hw_mvt_to_skew(&t).unwrap();
        assert_eq!(s.shape(), &SkewShape::new(p(&[4, 4]), p(&[3, 2])).unwrap());
        assert_eq!(s.rows(), &[vec![1], vec![2, 2]]);
        let t = mvt(vec![vec![vec![1], vec![1, 1], vec![1]], vec![vec![2, 2, 2], vec![2]]]);
        assert_eq!(hw_mvt_to_skew(&t).unwrap().rows(), &[vec![2], vec![3, 3]]);
    }

    #[test]
    fn rejects_non_highest_weight() {
        let t = mvt(vec![vec![vec![1, 2]]]);
        assert!(matches!(hw_mvt_to_skew(&t), Err(Error::NotHighestWeight(_))));
    }

    #[test]
    fn valued_set_targets() {
        let base = Ssyt::new(vec![vec![1, 1, 1], vec![2, 2, 2]]).unwrap();
        let full = ValuedSetTableau::fully_divided(base.clone());
        assert_eq!(hw_vst_to_rpp(&full).unwrap().shape().size(), 0);
        let conj = hw_vst_to_conj(&full).unwrap();
        assert_eq!(conj.rows(), &[vec![1, 2], vec![1, 2]]);
        let t = ValuedSetTableau::new(vec![vec![1, 1, 1], vec![2, 2, 2]], vec![vec![1, 2], vec![2]]).unwrap();
        assert_eq!(hw_vst_to_rpp(&t).unwrap().rows(), &[vec![], vec![2]]);
    }

    #[test]
    fn flagged_shift_round_trip() {
        let shape = SkewShape::new(p(&[5, 4]), p(&[3, 3])).unwrap();
        let all = FlaggedTableau::enumerate(FlagKind::Fc, &shape);
        assert_eq!(all.len(), 8);
        for f in &all {
            assert_eq!(phi_flagged_inverse(&phi_flagged(f).unwrap()).unwrap(), *f);
        }
    }
}
