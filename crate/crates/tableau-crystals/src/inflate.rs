//! Inflation: valued-set tableaux to pairs of a semistandard tableau and a column semistandard flagged tableau.

use crate::crystal::{vst_reading, ReadingConvention};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rsk::{insertion_tableau, lusztig_ssyt, reverse_bump};
use crate::tableau::{FlagKind, FlaggedTableau, Letter, Ssyt, Tableau, ValuedSetTableau};
use crate::uncrowd::{from_flagged, to_flagged, Cells};
use crate::word::{lusztig, Word};

fn anchor_column_word(t: &ValuedSetTableau, c: usize) -> Word {
    vst_reading(t, ReadingConvention::Anchor).into_iter().filter(|(_, g)| g.anchor() == c).map(|(a, _)| a).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InflateStep {
    /// 1-based column index `i`.
    pub column: usize,
    pub ssyt: Ssyt,
    pub flagged: FlaggedTableau,
}

pub fn inflate_trace(t: &ValuedSetTableau) -> Result<Vec<InflateStep>> {
    t.check()?;
    let lambda = t.shape();
    let width = lambda.first();
    let mut word: Word = Vec::new();
    let mut cells = Cells::new();
    let mut steps = Vec::with_capacity(width);
    for i in (1..=width).rev() {
        let mut w = anchor_column_word(t, i - 1);
        w.extend_from_slice(&word);
        word = w;
        let b = insertion_tableau(&word);
        let outer = lambda.rightmost_columns(width - i + 1);
        if !outer.contains(b.shape()) {
            return Err(Error::BijectionViolation(format!("{} escapes {outer}", b.shape())));
        }
        let mut next: Cells = cells.iter().map(|(&(r, c), &a)| ((r, c + 1), a + 1)).collect();
        for (r, c) in crate::partition::SkewShape::new(outer.clone(), b.shape().clone())?.cells() {
            next.entry((r, c)).or_insert(1);
        }
        cells = next;
        let flagged = to_flagged(&cells, &outer, b.shape(), FlagKind::Fcs)?;
        steps.push(InflateStep { column: i, ssyt: b, flagged });
    }
    Ok(steps)
}

pub fn inflate(t: &ValuedSetTableau) -> Result<(Ssyt, FlaggedTableau)> {
    match inflate_trace(t)?.pop() {
        Some(s) => Ok((s.ssyt, s.flagged)),
        None => Ok((Ssyt::empty(), FlaggedTableau::empty(Partition::empty(), FlagKind::Fcs))),
    }
}

/// For each column, the rows whose cells entered the inner shape at that step.
fn vertical_strips(f: &FlaggedTableau) -> Result<Vec<Vec<usize>>> {
    let lambda = f.shape().outer().clone();
    let width = lambda.first();
    let mut cells = from_flagged(f);
    let mut mu = f.shape().inner().clone();
    let mut strips = Vec::with_capacity(width);
    for i in 1..=width {
        let next_outer = lambda.rightmost_columns(width - i);
        let next: Cells = cells
            .iter()
            .filter(|(_, &a)| a > 1)
            .map(|(&(r, c), &a)| ((r, c.saturating_sub(1)), a - 1))
            .collect();
        let mut parts = Vec::new();
        for r in 0..next_outer.len() {
            let filled = next.keys().filter(|&&(row, _)| row == r).count();
            parts.push(next_outer.get(r).checked_sub(filled).ok_or_else(|| {
                Error::InversionFailure(format!("row {} overflows at column {i}", r + 1))
            })?);
        }
        let next_mu = Partition::new(parts).map_err(|e| Error::InversionFailure(e.to_string()))?;
        to_flagged(&next, &next_outer, &next_mu, FlagKind::Fcs).map_err(|e| Error::InversionFailure(e.to_string()))?;
        let mut strip = Vec::new();
        for r in 0..mu.len() {
            match mu.get(r).checked_sub(next_mu.get(r)) {
                Some(0) => {}
                Some(1) => strip.push(r),
                _ => return Err(Error::InversionFailure(format!("column {i} does not add a vertical strip"))),
            }
        }
        strips.push(strip);
        cells = next;
        mu = next_mu;
    }
    Ok(strips)
}

/// Rebuild column `c` right to left from its anchor values, sorted top to bottom.
fn place_column(rows: &mut [Vec<Option<Letter>>], anchors_at: &mut [Vec<bool>], c: usize, anchors: &[Letter]) -> Result<()> {
    let mut p = 0;
    for r in 0..rows.len() {
        if c >= rows[r].len() {
            break;
        }
        let right = rows[r].get(c + 1).copied().flatten();
        let value = match right {
            Some(x) if p < anchors.len() && anchors[p] <= x => {
                p += 1;
                anchors_at[r][c] = true;
                anchors[p - 1]
            }
            Some(x) => x,
            None => {
                let a = *anchors.get(p).ok_or_else(|| {
                    Error::InversionFailure(format!("column {} runs out of anchors", c + 1))
                })?;
                p += 1;
                anchors_at[r][c] = true;
                a
            }
        };
        rows[r][c] = Some(value);
    }
    if p != anchors.len() {
        return Err(Error::InversionFailure(format!("column {} has unplaced anchors", c + 1)));
    }
    Ok(())
}

/// Inverse of [`inflate`].
pub fn deflate(b: &Ssyt, f: &FlaggedTableau) -> Result<ValuedSetTableau> {
    b.check()?;
    f.check()?;
    if f.kind() != FlagKind::Fcs {
        return Err(Error::ShapeMismatch("inflation pairs use column semistandard flagged tableaux".into()));
    }
    if b.shape() != f.shape().inner() {
        return Err(Error::ShapeMismatch(format!("tableau shape {} vs flagged inner shape {}", b.shape(), f.shape().inner())));
    }
    let lambda = f.shape().outer().clone();
    let strips = vertical_strips(f)?;
    let n = b.max_entry().max(1) as usize;
    let mut star = lusztig_ssyt(b, n).rows().to_vec();
    let mut columns: Vec<Vec<Letter>> = Vec::with_capacity(strips.len());
    for strip in &strips {
        let mut popped = Vec::with_capacity(strip.len());
        for &r in strip.iter().rev() {
            popped.push(reverse_bump(&mut star, r).map_err(|e| Error::InversionFailure(e.to_string()))?);
        }
        popped.reverse();
        let mut anchors = lusztig(&popped, n);
        anchors.reverse();
        columns.push(anchors);
    }
    if star.iter().any(|row| !row.is_empty()) {
        return Err(Error::InversionFailure("letters remain after peeling every column".into()));
    }

    let mut rows: Vec<Vec<Option<Letter>>> = lambda.parts().iter().map(|&len| vec![None; len]).collect();
    let mut anchors_at: Vec<Vec<bool>> = lambda.parts().iter().map(|&len| vec![false; len]).collect();
    for (c, anchors) in columns.iter().enumerate().rev() {
        place_column(&mut rows, &mut anchors_at, c, anchors)?;
    }
    let entries: Vec<Vec<Letter>> = rows.into_iter().map(|row| row.into_iter().map(|x| x.expect("placed")).collect()).collect();
    let dividers: Vec<Vec<usize>> = anchors_at
        .iter()
        .map(|row| (0..row.len().saturating_sub(1)).filter(|&c| row[c]).map(|c| c + 1).collect())
        .collect();
    let t = ValuedSetTableau::new(entries, dividers).map_err(|e| Error::InversionFailure(e.to_string()))?;
    if inflate(&t)? != (b.clone(), f.clone()) {
        return Err(Error::InversionFailure("the pair is not in the image of inflation".into()));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::SkewShape;

    fn ssyt(rows: &[&[Letter]]) -> Ssyt {
        Ssyt::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn flagged(outer: &[usize], inner: &[usize], rows: Vec<Vec<Letter>>) -> FlaggedTableau {
        let shape = SkewShape::new(Partition::new(outer.to_vec()).unwrap(), Partition::new(inner.to_vec()).unwrap()).unwrap();
        FlaggedTableau::new(shape, FlagKind::Fcs, rows).unwrap()
    }

    fn example() -> ValuedSetTableau {
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
    fn example_ladder() {
        let steps = inflate_trace(&example()).unwrap();
        let at = |i: usize| &steps[10 - i];
        assert_eq!(at(10).ssyt, ssyt(&[&[6]]));
        assert_eq!(at(9).ssyt, ssyt(&[&[4, 6], &[5]]));
        assert_eq!(at(8).flagged, flagged(&[3, 2], &[3, 1], vec![vec![], vec![1]]));
        assert_eq!(at(7).ssyt, ssyt(&[&[2, 4, 5, 6], &[5]]));
        assert_eq!(at(7).flagged, flagged(&[4, 3], &[4, 1], vec![vec![], vec![1, 2]]));
        assert_eq!(at(6).flagged, flagged(&[5, 4], &[5, 2], vec![vec![], vec![2, 3]]));
        assert_eq!(at(5).flagged, flagged(&[6, 5, 1], &[5, 3, 1], vec![vec![1], vec![3, 4], vec![]]));
        assert_eq!(at(4).flagged, flagged(&[7, 6, 2], &[5, 3, 1], vec![vec![1, 2], vec![1, 4, 5], vec![1]]));
        assert_eq!(at(3).ssyt, ssyt(&[&[1, 2, 4, 4, 5, 6], &[2, 3, 5], &[5, 5], &[8]]));
        assert_eq!(at(3).flagged, flagged(&[8, 7, 3, 1], &[6, 3, 2, 1], vec![vec![2, 3], vec![1, 2, 5, 6], vec![2], vec![]]));
        assert_eq!(at(2).ssyt, ssyt(&[&[1, 1, 2, 4, 4, 5, 6], &[2, 3, 5, 5], &[4, 5], &[5, 8], &[7]]));
        assert_eq!(
            at(2).flagged,
            flagged(&[9, 8, 4, 2, 1], &[7, 4, 2, 2, 1], vec![vec![3, 4], vec![2, 3, 6, 7], vec![1, 3], vec![], vec![]])
        );
        assert_eq!(at(1).ssyt, ssyt(&[&[1, 1, 2, 4, 4, 5, 6], &[2, 3, 5, 5, 5], &[3, 4], &[5, 8], &[7]]));
        assert_eq!(
            at(1).flagged,
            flagged(
                &[10, 9, 5, 3, 2],
                &[7, 5, 2, 2, 1],
                vec![vec![1, 4, 5], vec![3, 4, 7, 8], vec![1, 2, 4], vec![1], vec![1]]
            )
        );
    }

    #[test]
    fn example_deflation() {
        let (b, f) = inflate(&example()).unwrap();
        assert_eq!(lusztig_ssyt(&b, 8), ssyt(&[&[1, 2, 4, 4, 4, 4, 6], &[3, 4, 5, 7, 8], &[5, 5], &[6, 8], &[7]]));
        let strips = vertical_strips(&f).unwrap();
        assert_eq!(strips[0], vec![1]);
        assert_eq!(strips[1], vec![0, 1, 3, 4]);
        assert_eq!(deflate(&b, &f).unwrap(), example());
    }

    #[test]
    fn single_cell_groups() {
        let base = ssyt(&[&[1, 1, 2], &[2, 3]]);
        let (b, f) = inflate(&ValuedSetTableau::fully_divided(base.clone())).unwrap();
        assert_eq!(b, base);
        assert_eq!(f.shape().size(), 0);
    }

    #[test]
    fn deflate_rejects_shape_mismatch() {
        let f = flagged(&[2], &[1], vec![vec![1]]);
        assert!(matches!(deflate(&ssyt(&[&[1, 1]]), &f), Err(Error::ShapeMismatch(_))));
    }
}
