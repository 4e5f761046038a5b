//! Bounded, deterministic enumeration of every tableau family.

use crate::partition::Partition;
use crate::tableau::{
    sort_canonical, HookCell, HookValuedTableau, Letter, MultisetValuedTableau, SetValuedTableau, Ssyt,
    ValuedSetTableau,
};

/// Grading bound accepted by [`enumerate`]-style calls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// At most this many extra entries (set- and multiset-valued families).
    Excess(usize),
    /// Exactly this many arm and leg entries in total (hook-valued family).
    ArmLeg { arm: usize, leg: usize },
    /// No bound (the valued-set family is finite).
    Unbounded,
}

fn combos(lo: Letter, n: usize, k: usize, strict: bool) -> Vec<Vec<Letter>> {
    fn go(from: Letter, n: Letter, k: usize, strict: bool, cur: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for a in from..=n {
            cur.push(a);
            go(if strict { a + 1 } else { a }, n, k, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lo, n as Letter, k, strict, &mut Vec::new(), &mut out);
    out
}

/// A filling together with the (arm, leg) budget it used.
type Filled<C> = (Vec<Vec<C>>, (usize, usize));
type Candidates<'a, C> = &'a dyn Fn(Letter, (usize, usize)) -> Vec<(C, (usize, usize))>;

/// Row-major backtracking: `candidates(lo, budget)` lists cell values whose minimum is at least `lo`
/// together with the budget they consume.
fn fill<C: Clone>(
    shape: &Partition,
    budget: (usize, usize),
    max_of: impl Fn(&C) -> Letter,
    candidates: impl Fn(Letter, (usize, usize)) -> Vec<(C, (usize, usize))>,
) -> Vec<Filled<C>> {
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut rows: Vec<Vec<C>> = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn go<C: Clone>(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<C>>,
        left: (usize, usize),
        budget: (usize, usize),
        max_of: &dyn Fn(&C) -> Letter,
        candidates: Candidates<'_, C>,
        out: &mut Vec<Filled<C>>,
    ) {
        if k == cells.len() {
            out.push((rows.clone(), (budget.0 - left.0, budget.1 - left.1)));
            return;
        }
        let (r, c) = cells[k];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(max_of(&rows[r][c - 1]));
        }
        if r > 0 {
            lo = lo.max(max_of(&rows[r - 1][c]) + 1);
        }
        for (cell, cost) in candidates(lo, left) {
            rows[r].push(cell);
            go(k + 1, cells, rows, (left.0 - cost.0, left.1 - cost.1), budget, max_of, candidates, out);
            rows[r].pop();
        }
    }

    go(0, &cells, &mut rows, budget, budget, &max_of, &candidates, &mut out);
    out
}

pub fn ssyt(shape: &Partition, n: usize) -> Vec<Ssyt> {
    let mut out: Vec<Ssyt> = fill(shape, (0, 0), |&a: &Letter| a, |lo, _| (lo..=n as Letter).map(|a| (a, (0, 0))).collect())
        .into_iter()
        .map(|(rows, _)| Ssyt::from_rows_unchecked(rows).expect("shape"))
        .collect();
    sort_canonical(&mut out);
    out
}

fn set_like(shape: &Partition, n: usize, max_excess: usize, strict: bool) -> Vec<Vec<Vec<Vec<Letter>>>> {
    fill(
        shape,
        (max_excess, 0),
        |c: &Vec<Letter>| *c.last().unwrap(),
        |lo, left| {
            let mut v = Vec::new();
            for k in 1..=left.0 + 1 {
                for s in combos(lo, n, k, strict) {
                    v.push((s, (k - 1, 0)));
                }
            }
            v
        },
    )
    .into_iter()
    .map(|(rows, _)| rows)
    .collect()
}

pub fn svt(shape: &Partition, n: usize, max_excess: usize) -> Vec<SetValuedTableau> {
    let mut out: Vec<_> = set_like(shape, n, max_excess, true)
        .into_iter()
        .map(|rows| SetValuedTableau::from_cells_unchecked(rows).expect("shape"))
        .collect();
    sort_canonical(&mut out);
    out
}

pub fn mvt(shape: &Partition, n: usize, max_excess: usize) -> Vec<MultisetValuedTableau> {
    let mut out: Vec<_> = set_like(shape, n, max_excess, false)
        .into_iter()
        .map(|rows| MultisetValuedTableau::from_cells_unchecked(rows).expect("shape"))
        .collect();
    sort_canonical(&mut out);
    out
}

/// Hook-valued tableaux with exactly `arm` arm entries and `leg` leg entries in total.
pub fn hvt(shape: &Partition, n: usize, arm: usize, leg: usize) -> Vec<HookValuedTableau> {
    let mut out: Vec<_> = fill(shape, (arm, leg), HookCell::largest, |lo, left| {
        let mut v = Vec::new();
        for h in lo..=n as Letter {
            for a in 0..=left.0 {
                for arm in combos(h, n, a, false) {
                    for l in 0..=left.1 {
                        for leg in combos(h + 1, n, l, true) {
                            v.push((HookCell::new(h, arm.clone(), leg), (a, l)));
                        }
                    }
                }
            }
        }
        v
    })
    .into_iter()
    .filter(|(_, used)| *used == (arm, leg))
    .map(|(rows, _)| HookValuedTableau::from_cells_unchecked(rows).expect("shape"))
    .collect();
    sort_canonical(&mut out);
    out
}

/// All valued-set tableaux of the shape: semistandard bases times optional dividers between equal neighbours.
pub fn vst(shape: &Partition, n: usize) -> Vec<ValuedSetTableau> {
    let mut out = Vec::new();
    for base in ssyt(shape, n) {
        let optional: Vec<(usize, usize)> = base
            .rows()
            .iter()
            .enumerate()
            .flat_map(|(r, row)| (1..row.len()).filter(move |&j| row[j - 1] == row[j]).map(move |j| (r, j)))
            .collect();
        let forced = ValuedSetTableau::minimally_divided(base.clone());
        for mask in 0u64..(1u64 << optional.len()) {
            let mut dividers = forced.dividers().to_vec();
            for (bit, &(r, j)) in optional.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    dividers[r].push(j);
                }
            }
            for d in &mut dividers {
                d.sort_unstable();
            }
            out.push(ValuedSetTableau::new(base.rows().to_vec(), dividers).expect("valid by construction"));
        }
    }
    sort_canonical(&mut out);
    out
}

/// Hook-valued tableaux over every grading `(a, b)` with `a ≤ max_arm`, `b ≤ max_leg`.
pub fn hvt_up_to(shape: &Partition, n: usize, max_arm: usize, max_leg: usize) -> Vec<HookValuedTableau> {
    let mut out = Vec::new();
    for a in 0..=max_arm {
        for b in 0..=max_leg {
            out.extend(hvt(shape, n, a, b));
        }
    }
    sort_canonical(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::tableau::Tableau;

    fn all_valid<T: Tableau>(v: &[T]) -> bool {
        v.iter().all(Tableau::is_valid)
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn figure_one_count() {
        assert_eq!(svt(&p(&[2, 2]), 3, 2).len(), 13);
    }

    #[test]
    fn one_cell_one_letter() {
        let v = mvt(&p(&[1]), 1, 2);
        let json: Vec<String> = v.iter().map(Tableau::to_json).collect();
        assert_eq!(
            json,
            vec![
                r#"{"shape":[1],"cells":[[[1,1,1]]]}"#,
                r#"{"shape":[1],"cells":[[[1,1]]]}"#,
                r#"{"shape":[1],"cells":[[[1]]]}"#,
            ]
        );
    }

    #[test]
    fn too_many_rows_is_empty() {
        assert!(ssyt(&p(&[1, 1, 1]), 2).is_empty());
        assert!(vst(&p(&[1, 1, 1]), 2).is_empty());
    }

    #[test]
    fn zero_excess_agrees() {
        let lam = p(&[2, 1]);
        assert_eq!(svt(&lam, 3, 0).len(), 8);
        assert_eq!(mvt(&lam, 3, 0).len(), 8);
        assert_eq!(ssyt(&lam, 3).len(), 8);
        assert_eq!(hvt(&lam, 3, 0, 0).len(), 8);
    }

    #[test]
    fn everything_validates() {
        let lam = p(&[2, 1]);
        assert!(all_valid(&svt(&lam, 3, 2)));
        assert!(all_valid(&mvt(&lam, 3, 2)));
        assert!(all_valid(&hvt_up_to(&lam, 3, 1, 1)));
        assert!(all_valid(&vst(&lam, 3)));
    }
}
