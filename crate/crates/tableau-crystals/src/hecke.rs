//! 0-Hecke monoid words, decreasing factorizations and weak stable Grothendieck polynomials of permutations.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::enumerate;
use crate::error::{invalid, Result};
use crate::grothendieck::{generating_function, Bounds};
use crate::partition::Partition;
use crate::poly::{Exponent, ExactPolynomial};
use crate::tableau::{Family, Letter, Ssyt};
use crate::word::Word;

/// One-line notation of a permutation of `1..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; one_line.len()];
        for &v in &one_line {
            if v == 0 || v > one_line.len() || std::mem::replace(&mut seen[v - 1], true) {
                return invalid("permutation", format!("{one_line:?} is not a rearrangement of 1..{}", one_line.len()));
            }
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// `"3,1,2"` or `"312"` (single digits).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let parts: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|p| p.trim().parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        match parts {
            Some(v) => Self::new(v),
            None => invalid("permutation", format!("cannot parse {s:?}")),
        }
    }

    /// Every permutation of `1..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if rest.is_empty() {
                out.push(Permutation(cur.clone()));
                return;
            }
            for k in 0..rest.len() {
                let v = rest.remove(k);
                cur.push(v);
                go(rest, cur, out);
                cur.pop();
                rest.insert(k, v);
            }
        }
        let mut out = Vec::new();
        go(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
        out
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    /// Positions `d` with `w(d) > w(d+1)`, 1-based.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&d| self.0[d - 1] > self.0[d]).collect()
    }

    /// For a permutation with at most one descent `d`, the partition `(w(d) - d, ..., w(1) - 1)`.
    pub fn grassmannian_shape(&self) -> Option<Partition> {
        match self.descents().as_slice() {
            [] => Some(Partition::empty()),
            [d] => Some(Partition::from_trimmed((1..=*d).rev().map(|i| self.0[i - 1] - i).collect())),
            _ => None,
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Apply `s_i` on the right when it lengthens, absorb it otherwise.
pub fn demazure_product(word: &[Letter], n: usize) -> Result<Permutation> {
    let mut w: Vec<usize> = (1..=n).collect();
    for &i in word {
        let i = i as usize;
        if i == 0 || i >= n {
            return invalid("hecke word", format!("letter {i} outside 1..{}", n.saturating_sub(1)));
        }
        if w[i - 1] < w[i] {
            w.swap(i - 1, i);
        }
    }
    Ok(Permutation(w))
}

fn all_words(k: usize, alphabet: Letter) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out.into_iter().flat_map(|w: Word| (1..=alphabet).map(move |a| [w.clone(), vec![a]].concat())).collect();
    }
    out
}

/// Words of length `k` whose Demazure product is `w`.
pub fn hecke_words(w: &Permutation, k: usize) -> Vec<Word> {
    if k < w.length() {
        return Vec::new();
    }
    let n = w.n();
    all_words(k, n.saturating_sub(1) as Letter)
        .into_iter()
        .filter(|h| demazure_product(h, n).is_ok_and(|p| &p == w))
        .collect()
}

/// A Hecke word cut into consecutive decreasing factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecreasingFactorization {
    pub factors: Vec<Word>,
}

impl DecreasingFactorization {
    pub fn word(&self) -> Word {
        self.factors.concat()
    }

    /// Factor lengths.
    pub fn weight(&self) -> Vec<u32> {
        self.factors.iter().map(|f| f.len() as u32).collect()
    }
}

impl fmt::Display for DecreasingFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for factor in &self.factors {
            let s: String = factor.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ");
            write!(f, "({s})")?;
        }
        Ok(())
    }
}

fn compositions(k: usize, m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return if k == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    (0..=k)
        .flat_map(|first| {
            compositions(k - first, m - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Every way to write a member of `H_w^k` as `m` weakly (or strictly) decreasing factors.
pub fn factorizations(w: &Permutation, k: usize, m: usize, strict: bool) -> Vec<DecreasingFactorization> {
    let decreasing = |f: &[Letter]| f.windows(2).all(|p| if strict { p[0] > p[1] } else { p[0] >= p[1] });
    let cuts = compositions(k, m);
    let mut out = Vec::new();
    for h in hecke_words(w, k) {
        for lens in &cuts {
            let mut start = 0;
            let factors: Vec<Word> = lens
                .iter()
                .map(|&len| {
                    start += len;
                    h[start - len..start].to_vec()
                })
                .collect();
            if factors.iter().all(|f| decreasing(f)) {
                out.push(DecreasingFactorization { factors });
            }
        }
    }
    out.sort();
    out
}

/// Columns right to left, each top to bottom.
pub fn far_eastern_reading(t: &Ssyt) -> Word {
    let width = t.rows().first().map_or(0, Vec::len);
    (0..width).rev().flat_map(|c| t.rows().iter().filter_map(move |row| row.get(c).copied())).collect()
}

/// Rows and columns strictly increasing, entries in `1..=max`.
pub fn increasing_tableaux(shape: &Partition, max: usize) -> Vec<Ssyt> {
    enumerate::ssyt(shape, max).into_iter().filter(|t| t.rows().iter().all(|r| r.windows(2).all(|p| p[0] < p[1]))).collect()
}

/// Increasing tableaux of shape `shape` whose Far-Eastern reading has Demazure product `w`.
pub fn pw(w: &Permutation, shape: &Partition) -> Vec<Ssyt> {
    let n = w.n();
    increasing_tableaux(shape, n.saturating_sub(1))
        .into_iter()
        .filter(|t| demazure_product(&far_eastern_reading(t), n).is_ok_and(|p| &p == w))
        .collect()
}

/// Sum over decreasing factorizations into `vars` factors of `α^{k - ℓ(w)} x^{factor lengths}`, `k ≤ max_k`.
pub fn wg_direct(w: &Permutation, vars: usize, max_k: usize) -> ExactPolynomial {
    let mut out = ExactPolynomial::zero(vars);
    for k in w.length()..=max_k {
        for f in factorizations(w, k, vars, false) {
            out.add_term(Exponent::new(f.weight(), (k - w.length()) as u32, 0), BigInt::one());
        }
    }
    out
}

/// `Σ_λ α^{|λ| - ℓ(w)} |P_w(λ)| wG_λ`, each `wG_λ` truncated at `x`-degree `max_k`.
pub fn wg_via_pw(w: &Permutation, vars: usize, max_k: usize) -> Result<ExactPolynomial> {
    let mut out = ExactPolynomial::zero(vars);
    for size in w.length()..=max_k {
        for lam in Partition::all_of_size(size) {
            let count = pw(w, &lam).len();
            if count == 0 {
                continue;
            }
            let bounds = Bounds { max_excess: max_k - size, ..Bounds::default() };
            let g = generating_function(Family::Mvt, &lam, vars, bounds)?;
            let shift = ExactPolynomial::term(vars, Exponent::new(vec![0; vars], (size - w.length()) as u32, 0), BigInt::from(count));
            out = out + &shift * &g;
        }
    }
    Ok(out)
}
