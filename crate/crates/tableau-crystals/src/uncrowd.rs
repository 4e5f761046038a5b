//! Uncrowding: multiset-valued tableaux to pairs of a semistandard tableau and a column flagged tableau.

use std::collections::BTreeMap;

use crate::crystal::mvt_reading;
use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};
use crate::rsk::{insertion_tableau, lusztig_ssyt, rsk_inverse};
use crate::tableau::{FlagKind, FlaggedTableau, Letter, MultisetValuedTableau, Ssyt, Tableau};
use crate::word::{lusztig, Word};

/// Skew cells keyed by absolute `(row, col)`.
pub(crate) type Cells = BTreeMap<(usize, usize), Letter>;

pub(crate) fn to_flagged(cells: &Cells, outer: &Partition, inner: &Partition, kind: FlagKind) -> Result<FlaggedTableau> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    let mut rows = vec![Vec::new(); outer.len()];
    for (r, c) in shape.cells() {
        let a = cells
            .get(&(r, c))
            .copied()
            .ok_or_else(|| Error::BijectionViolation(format!("cell ({}, {}) left unfilled", r + 1, c + 1)))?;
        rows[r].push(a);
    }
    if cells.len() != shape.size() {
        return Err(Error::BijectionViolation("filled cells outside the skew shape".into()));
    }
    FlaggedTableau::new(shape, kind, rows).map_err(|e| Error::BijectionViolation(e.to_string()))
}

pub(crate) fn from_flagged(f: &FlaggedTableau) -> Cells {
    f.shape().cells().map(|(r, c)| ((r, c), f.get(r, c).unwrap())).collect()
}

fn column_word(t: &MultisetValuedTableau, c: usize) -> Word {
    mvt_reading(t).into_iter().filter(|(_, (_, col, _))| *col == c).map(|(a, _)| a).collect()
}

/// One stage `b_i × F_i` of the recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UncrowdStep {
    /// 1-based column index `i`.
    pub column: usize,
    pub ssyt: Ssyt,
    pub flagged: FlaggedTableau,
}

/// Every stage from the rightmost column down to the first.
pub fn uncrowd_trace(t: &MultisetValuedTableau) -> Result<Vec<UncrowdStep>> {
    t.check()?;
    let lambda = t.shape();
    let width = lambda.first();
    let mut word: Word = Vec::new();
    let mut cells = Cells::new();
    let mut steps = Vec::with_capacity(width);
    for i in (1..=width).rev() {
        let mut w = column_word(t, i - 1);
        w.extend_from_slice(&word);
        word = w;
        let b = insertion_tableau(&word);
        let inner = lambda.rightmost_columns(width - i + 1);
        let shape = SkewShape::new(b.shape().clone(), inner.clone())?;
        let mut next: Cells = cells.iter().map(|(&(r, c), &a)| ((r, c + 1), a)).collect();
        for (r, c) in shape.cells() {
            next.entry((r, c)).or_insert(c as Letter);
        }
        cells = next;
        let flagged = to_flagged(&cells, b.shape(), &inner, FlagKind::Fc)?;
        steps.push(UncrowdStep { column: i, ssyt: b, flagged });
    }
    Ok(steps)
}

pub fn uncrowd(t: &MultisetValuedTableau) -> Result<(Ssyt, FlaggedTableau)> {
    match uncrowd_trace(t)?.pop() {
        Some(s) => Ok((s.ssyt, s.flagged)),
        None => Ok((Ssyt::empty(), FlaggedTableau::empty(Partition::empty(), FlagKind::Fc))),
    }
}

/// Per column of the inner shape, how many cells each row gains at that stage.
fn peel_new_cells(f: &FlaggedTableau) -> Result<Vec<Vec<usize>>> {
    let width = f.shape().inner().first();
    let rows = f.shape().outer().len();
    let mut cells = from_flagged(f);
    let mut out = Vec::with_capacity(width);
    for _ in 0..width {
        let mut new = vec![0; rows];
        let mut rest = Cells::new();
        for (&(r, c), &a) in &cells {
            if a as usize == c {
                new[r] += 1;
            } else if c == 0 {
                return Err(Error::InversionFailure(format!("cell in row {} cannot shift left", r + 1)));
            } else {
                rest.insert((r, c - 1), a);
            }
        }
        out.push(new);
        cells = rest;
    }
    if !cells.is_empty() {
        return Err(Error::InversionFailure("flagged cells remain after peeling every column".into()));
    }
    Ok(out)
}

fn rightmost_unset(q: &mut [Vec<Option<Letter>>], r: usize, value: Letter) -> Result<()> {
    let slot = q
        .get_mut(r)
        .and_then(|row| row.iter_mut().rev().find(|x| x.is_none()))
        .ok_or_else(|| Error::InversionFailure(format!("row {} of the recording tableau is already full", r + 1)))?;
    *slot = Some(value);
    Ok(())
}

/// Semistandard recording tableau for reverse insertion of the evacuated word.
pub fn recording_tableau(f: &FlaggedTableau) -> Result<Ssyt> {
    let heights = f.shape().inner().conjugate();
    let new = peel_new_cells(f)?;
    let mut q: Vec<Vec<Option<Letter>>> = f.shape().outer().parts().iter().map(|&len| vec![None; len]).collect();
    for (i, new_i) in new.iter().enumerate() {
        let h = heights.get(i);
        for x in q.iter_mut().flatten().flatten() {
            *x += h as Letter + 1;
        }
        for r in 0..h {
            rightmost_unset(&mut q, r, r as Letter + 2)?;
        }
        for (r, &k) in new_i.iter().enumerate() {
            for _ in 0..k {
                rightmost_unset(&mut q, r, 1)?;
            }
        }
    }
    let rows: Option<Vec<Vec<Letter>>> = q.into_iter().map(|row| row.into_iter().collect()).collect();
    let rows = rows.ok_or_else(|| Error::InversionFailure("recording tableau left incomplete".into()))?;
    Ssyt::new(rows).map_err(|e| Error::InversionFailure(format!("recording tableau: {e}")))
}

/// Inverse of [`uncrowd`].
pub fn crowd(b: &Ssyt, f: &FlaggedTableau) -> Result<MultisetValuedTableau> {
    b.check()?;
    f.check()?;
    if f.kind() != FlagKind::Fc {
        return Err(Error::ShapeMismatch("uncrowding pairs use column flagged tableaux".into()));
    }
    if b.shape() != f.shape().outer() {
        return Err(Error::ShapeMismatch(format!("tableau shape {} vs flagged outer shape {}", b.shape(), f.shape().outer())));
    }
    let lambda = f.shape().inner().clone();
    if lambda.is_empty() {
        return if b.size() == 0 {
            Ok(MultisetValuedTableau::from_cells_unchecked(Vec::new())?)
        } else {
            Err(Error::InversionFailure("nonempty tableau over an empty shape".into()))
        };
    }
    let heights = lambda.conjugate();
    let new = peel_new_cells(f)?;
    let q = recording_tableau(f)?;
    let n = b.max_entry() as usize;
    let w = lusztig(&rsk_inverse(&lusztig_ssyt(b, n), &q)?, n);

    let mut cells: Vec<Vec<Vec<Letter>>> = lambda.parts().iter().map(|&len| vec![Vec::new(); len]).collect();
    let mut rest = &w[..];
    for (c, new_c) in new.iter().enumerate() {
        let h = heights.get(c);
        let (block, tail) = rest.split_at(h + new_c.iter().sum::<usize>());
        rest = tail;
        let mins: Vec<Letter> = block[..h].iter().rev().copied().collect();
        for (r, &m) in mins.iter().enumerate() {
            cells[r][c].push(m);
        }
        for &x in &block[h..] {
            let r = mins
                .iter()
                .rposition(|&m| m <= x)
                .ok_or_else(|| Error::InversionFailure(format!("extra {x} lies below every entry of column {}", c + 1)))?;
            cells[r][c].push(x);
        }
    }
    for cell in cells.iter_mut().flatten() {
        cell.sort_unstable();
    }
    let t = MultisetValuedTableau::new(cells).map_err(|e| Error::InversionFailure(e.to_string()))?;
    if uncrowd(&t)? != (b.clone(), f.clone()) {
        return Err(Error::InversionFailure("the pair is not in the image of uncrowding".into()));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn mvt(rows: Vec<Vec<Vec<Letter>>>) -> MultisetValuedTableau {
        MultisetValuedTableau::new(rows).unwrap()
    }

    fn ssyt(rows: &[&[Letter]]) -> Ssyt {
        Ssyt::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn flagged(outer: &[usize], inner: &[usize], rows: Vec<Vec<Letter>>) -> FlaggedTableau {
        let shape = SkewShape::new(Partition::new(outer.to_vec()).unwrap(), Partition::new(inner.to_vec()).unwrap()).unwrap();
        FlaggedTableau::new(shape, FlagKind::Fc, rows).unwrap()
    }

    fn small() -> MultisetValuedTableau {
        mvt(vec![vec![vec![1, 1], vec![1], vec![1]], vec![vec![2], vec![2, 2]], vec![vec![3, 3]]])
    }

    fn big() -> MultisetValuedTableau {
        mvt(vec![
            vec![vec![1, 1, 2], vec![2, 2], vec![2, 5, 6]],
            vec![vec![3, 3], vec![4, 4, 4], vec![7]],
            vec![vec![5, 6, 8]],
            vec![vec![9]],
        ])
    }

    #[test]
    fn small_example() {
        let (b, f) = uncrowd(&small()).unwrap();
        assert_eq!(b, ssyt(&[&[1, 1, 1, 1], &[2, 2, 2], &[3, 3]]));
        assert_eq!(f, flagged(&[4, 3, 2], &[3, 2, 1], vec![vec![3], vec![1], vec![1]]));
        assert_eq!(crowd(&b, &f).unwrap(), small());
    }

    #[test]
    fn big_example_ladder() {
        let t = big();
        let rd: Word = mvt_reading(&t).into_iter().map(|(a, _)| a).collect();
        assert_eq!(rd, parse_word("953112368 42244 7256").unwrap());
        let steps = uncrowd_trace(&t).unwrap();
        assert_eq!(steps[0].ssyt, ssyt(&[&[2, 5, 6], &[7]]));
        assert_eq!(steps[0].flagged, flagged(&[3, 1], &[1, 1], vec![vec![1, 2], vec![]]));
        assert_eq!(steps[1].ssyt, ssyt(&[&[2, 2, 2, 4, 5, 6], &[4, 4, 7]]));
        assert_eq!(steps[1].flagged, flagged(&[6, 3], &[2, 2], vec![vec![1, 2, 4, 5], vec![2]]));
        assert_eq!(steps[2].ssyt, ssyt(&[&[1, 1, 2, 2, 2, 2, 4, 5, 6], &[3, 3, 4, 4, 7], &[5, 6, 8], &[9]]));
        assert_eq!(
            steps[2].flagged,
            flagged(&[9, 5, 3, 1], &[3, 3, 1, 1], vec![vec![1, 2, 4, 5, 7, 8], vec![2, 4], vec![1, 2], vec![]])
        );
    }

    #[test]
    fn big_example_recording_and_inverse() {
        let (b, f) = uncrowd(&big()).unwrap();
        let q = recording_tableau(&f).unwrap();
        assert_eq!(q, ssyt(&[&[1, 1, 2, 4, 4, 5, 7, 7, 8], &[3, 4, 6, 7, 9], &[7, 7, 10], &[11]]));
        let star = lusztig_ssyt(&b, 9);
        assert_eq!(star, ssyt(&[&[1, 4, 5, 6, 6, 7, 7, 9, 9], &[2, 5, 6, 8, 8], &[3, 8, 8], &[4]]));
        assert_eq!(rsk_inverse(&star, &q).unwrap(), parse_word("4583 66886 247899751").unwrap());
        assert_eq!(crowd(&b, &f).unwrap(), big());
    }

    #[test]
    fn excess_zero_is_fixed() {
        let s = ssyt(&[&[1, 2], &[3]]);
        let (b, f) = uncrowd(&MultisetValuedTableau::from_ssyt(&s)).unwrap();
        assert_eq!(b, s);
        assert_eq!(f.shape().size(), 0);
        assert_eq!(crowd(&b, &f).unwrap(), MultisetValuedTableau::from_ssyt(&s));
    }

    #[test]
    fn crowd_rejects_shape_mismatch() {
        let f = flagged(&[2], &[1], vec![vec![1]]);
        assert!(matches!(crowd(&ssyt(&[&[1]]), &f), Err(Error::ShapeMismatch(_))));
    }
}
