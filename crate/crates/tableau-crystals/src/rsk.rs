//! Row insertion, its inverse, and evacuation through insertion.

use crate::error::{Error, Result};
use crate::tableau::{Letter, Ssyt, Tableau};
use crate::word::{lusztig, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RskPair {
    pub insertion: Ssyt,
    /// Standard tableau recording the order in which cells appeared.
    pub recording: Ssyt,
}

/// Row-insert `x`; returns the row that grew.
pub fn insert(rows: &mut Vec<Vec<Letter>>, mut x: Letter) -> usize {
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![x]);
            return r;
        }
        let row = &mut rows[r];
        match row.iter().position(|&y| y > x) {
            Some(c) => {
                std::mem::swap(&mut row[c], &mut x);
                r += 1;
            }
            None => {
                row.push(x);
                return r;
            }
        }
    }
}

/// Remove the last cell of row `r` and bump its entry out of the top row.
pub fn reverse_bump(rows: &mut Vec<Vec<Letter>>, r: usize) -> Result<Letter> {
    let len = rows.get(r).map_or(0, Vec::len);
    if len == 0 || rows.get(r + 1).is_some_and(|below| below.len() >= len) {
        return Err(Error::InversionFailure(format!("row {} does not end in a corner", r + 1)));
    }
    let mut y = rows[r].pop().unwrap();
    if rows[r].is_empty() {
        rows.pop();
    }
    for k in (0..r).rev() {
        let row = &mut rows[k];
        let c = row
            .iter()
            .rposition(|&a| a < y)
            .ok_or_else(|| Error::InversionFailure(format!("nothing to bump in row {}", k + 1)))?;
        std::mem::swap(&mut row[c], &mut y);
    }
    Ok(y)
}

pub fn insertion_rows(w: &[Letter]) -> Vec<Vec<Letter>> {
    let mut rows = Vec::new();
    for &x in w {
        insert(&mut rows, x);
    }
    rows
}

pub fn insertion_tableau(w: &[Letter]) -> Ssyt {
    Ssyt::from_rows_unchecked(insertion_rows(w)).unwrap_or_else(|_| Ssyt::empty())
}

pub fn rsk(w: &[Letter]) -> RskPair {
    let mut p = Vec::new();
    let mut q: Vec<Vec<Letter>> = Vec::new();
    for (k, &x) in w.iter().enumerate() {
        let r = insert(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(k as Letter + 1);
    }
    let mk = |rows: Vec<Vec<Letter>>| Ssyt::from_rows_unchecked(rows).unwrap_or_else(|_| Ssyt::empty());
    RskPair { insertion: mk(p), recording: mk(q) }
}

/// Inverse insertion driven by a semistandard recording tableau: cells leave by decreasing
/// recording value, ties from right to left.
pub fn rsk_inverse(p: &Ssyt, q: &Ssyt) -> Result<Word> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(format!("insertion {} vs recording {}", p.shape(), q.shape())));
    }
    let mut order: Vec<(Letter, usize, usize)> =
        q.shape().cells().map(|(r, c)| (q.get(r, c).unwrap(), c, r)).collect();
    order.sort_unstable_by(|a, b| b.cmp(a));
    let mut rows = p.rows().to_vec();
    let mut out = Vec::with_capacity(order.len());
    for (_, _, r) in order {
        out.push(reverse_bump(&mut rows, r)?);
    }
    out.reverse();
    Ok(out)
}

/// Evacuation: insertion tableau of the reversed, complemented row word.
pub fn lusztig_ssyt(t: &Ssyt, n: usize) -> Ssyt {
    insertion_tableau(&lusztig(&t.row_word(), n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn ssyt(rows: &[&[Letter]]) -> Ssyt {
        Ssyt::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn uncrowding_example_insertions() {
        assert_eq!(insertion_tableau(&parse_word("7256").unwrap()), ssyt(&[&[2, 5, 6], &[7]]));
        assert_eq!(insertion_tableau(&parse_word("422447256").unwrap()), ssyt(&[&[2, 2, 2, 4, 5, 6], &[4, 4, 7]]));
        assert_eq!(insertion_tableau(&[1]), ssyt(&[&[1]]));
    }

    #[test]
    fn recording_is_standard() {
        let pair = rsk(&parse_word("2121").unwrap());
        assert_eq!(pair.insertion, ssyt(&[&[1, 1], &[2, 2]]));
        assert_eq!(pair.recording, ssyt(&[&[1, 3], &[2, 4]]));
    }

    #[test]
    fn inverse_roundtrip() {
        let w = parse_word("953112368422447256").unwrap();
        let pair = rsk(&w);
        assert_eq!(rsk_inverse(&pair.insertion, &pair.recording).unwrap(), w);
    }

    #[test]
    fn evacuation_small() {
        assert_eq!(lusztig_ssyt(&ssyt(&[&[1, 1], &[2]]), 3), ssyt(&[&[2, 3], &[3]]));
    }

    #[test]
    fn reverse_bump_rejects_non_corner() {
        let mut rows = vec![vec![1, 2], vec![3, 4]];
        assert!(reverse_bump(&mut rows, 0).is_err());
    }
}
