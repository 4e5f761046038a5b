use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid { family: "partition", reason: format!("zero part in {parts:?}") });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid { family: "partition", reason: format!("{parts:?} is not weakly decreasing") });
        }
        Ok(Partition(parts))
    }

    /// Drops zero parts; panics when the remaining parts increase.
    pub fn from_trimmed(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        Self::new(parts).expect("weakly decreasing parts")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.get(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        Partition((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.get(i) <= self.get(i))
    }

    /// Cells as 0-based (row, column) pairs in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Shape of the rightmost `k` columns, i.e. parts `max(λ_r - (λ_1 - k), 0)`.
    pub fn rightmost_columns(&self, k: usize) -> Partition {
        let drop = self.first().saturating_sub(k);
        Partition::from_trimmed(self.0.iter().map(|&p| p.saturating_sub(drop)).collect())
    }

    /// Column heights read as a dominant weight: entry `i` counts columns of height `i + 1`.
    pub fn fundamental_weight_coefficients(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = vec![0; self.len()];
        for &h in conj.parts() {
            out[h - 1] += 1;
        }
        out
    }

    /// All partitions of `k`, in decreasing lexicographic order.
    pub fn all_of_size(k: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(k, k, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions contained in `self` (including `self` and the empty partition).
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &Partition, r: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if r == outer.len() {
                out.push(Partition::from_trimmed(cur.clone()));
                return;
            }
            for p in 0..=outer.get(r).min(max) {
                cur.push(p);
                go(outer, r + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(self, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions `μ ⊇ self` with `|μ| - |self| ≤ extra` and at most `max_rows` rows.
    pub fn superpartitions(&self, extra: usize, max_rows: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for k in self.size()..=self.size() + extra {
            for mu in Partition::all_of_size(k) {
                if mu.len() <= max_rows && mu.contains(self) {
                    out.push(mu);
                }
            }
        }
        out
    }

    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| Error::Invalid {
                    family: "partition",
                    reason: format!("cannot parse part {t:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::ShapeMismatch(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of skew cells in row `r`.
    pub fn row_len(&self, r: usize) -> usize {
        self.outer.get(r) - self.inner.get(r)
    }

    /// Skew cells as 0-based (row, column), row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.outer.len()).flat_map(move |r| (self.inner.get(r)..self.outer.get(r)).map(move |c| (r, c)))
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        c >= self.inner.get(r) && c < self.outer.get(r)
    }
}
