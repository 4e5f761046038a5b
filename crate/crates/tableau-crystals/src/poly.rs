//! Exact polynomials in `x_1..x_n`, `α`, `β` with big integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::enumerate;
use crate::partition::Partition;
use crate::tableau::Tableau;

/// Exponents of `x_1..x_n`, then `α`, then `β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exponent {
    pub x: Vec<u32>,
    pub alpha: u32,
    pub beta: u32,
}

impl Exponent {
    pub fn new(x: Vec<u32>, alpha: u32, beta: u32) -> Self {
        Exponent { x, alpha, beta }
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn degree(&self) -> u32 {
        self.x_degree() + self.alpha + self.beta
    }

    fn times(&self, other: &Exponent) -> Exponent {
        Exponent {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            alpha: self.alpha + other.alpha,
            beta: self.beta + other.beta,
        }
    }
}

/// Graded lexicographic.
impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.alpha.cmp(&other.alpha))
            .then_with(|| self.beta.cmp(&other.beta))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPolynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl ExactPolynomial {
    pub fn zero(nvars: usize) -> Self {
        ExactPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::term(nvars, Exponent::new(vec![0; nvars], 0, 0), BigInt::one())
    }

    pub fn term(nvars: usize, e: Exponent, c: BigInt) -> Self {
        assert_eq!(e.x.len(), nvars, "exponent length must match the variable count");
        let mut p = Self::zero(nvars);
        p.add_term(e, c);
        p
    }

    /// `x^w α^a β^b`.
    pub fn monomial(x: &[u32], alpha: u32, beta: u32) -> Self {
        Self::term(x.len(), Exponent::new(x.to_vec(), alpha, beta), BigInt::one())
    }

    /// `α^a β^b` with no `x` variables.
    pub fn grading(alpha: u32, beta: u32) -> Self {
        Self::monomial(&[], alpha, beta)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Exponent) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Sum of the coefficients.
    pub fn evaluate_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    /// The same polynomial over `nvars` variables, padding with zero exponents.
    pub fn with_nvars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars, "cannot drop variables");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut x = e.x.clone();
                x.resize(nvars, 0);
                (Exponent { x, ..e.clone() }, c.clone())
            })
            .collect();
        ExactPolynomial { nvars, terms }
    }

    /// Keep terms with `x`-degree at most `d`.
    pub fn truncate_x_degree(&self, d: u32) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| e.x_degree() <= d).map(|(e, c)| (e.clone(), c.clone())).collect();
        ExactPolynomial { nvars: self.nvars, terms }
    }

    /// Set `β = α`.
    pub fn beta_to_alpha(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(Exponent { x: e.x.clone(), alpha: e.alpha + e.beta, beta: 0 }, c.clone());
        }
        out
    }

    /// Coefficient polynomial in `x` of `α^a β^b`.
    pub fn grading_part(&self, alpha: u32, beta: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.alpha == alpha && e.beta == beta)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        ExactPolynomial { nvars: self.nvars, terms }
    }

    pub fn gradings(&self) -> Vec<(u32, u32)> {
        let mut g: Vec<_> = self.terms.keys().map(|e| (e.alpha, e.beta)).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    /// Product with every term of `x`-degree above `d` dropped.
    pub fn mul_truncated(&self, other: &Self, d: u32) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        let mut out = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            for (f, b) in &other.terms {
                if e.x_degree() + f.x_degree() <= d {
                    out.add_term(e.times(f), a * b);
                }
            }
        }
        out
    }

    /// Invariant under every transposition of adjacent `x` variables.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            (1..self.nvars).all(|i| {
                let mut x = e.x.clone();
                x.swap(i - 1, i);
                self.coefficient(&Exponent { x, ..e.clone() }) == *c
            })
        })
    }

    /// `x_i ↦ x_i + α x_i^2 + α^2 x_i^3 + ...`, keeping `x`-degree at most `d`.
    pub fn substitute_series(&self, d: u32) -> Self {
        let n = self.nvars;
        let series: Vec<ExactPolynomial> = (0..n)
            .map(|i| {
                let mut s = Self::zero(n);
                for k in 0..d {
                    let mut x = vec![0; n];
                    x[i] = k + 1;
                    s.add_term(Exponent::new(x, k, 0), BigInt::one());
                }
                s
            })
            .collect();
        let mut out = Self::zero(n);
        for (e, c) in &self.terms {
            if e.x_degree() > d {
                continue;
            }
            let mut acc = Self::term(n, Exponent::new(vec![0; n], e.alpha, e.beta), c.clone());
            for (i, &k) in e.x.iter().enumerate() {
                for _ in 0..k {
                    acc = acc.mul_truncated(&series[i], d);
                }
            }
            out = out + acc;
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> =
            self.terms.iter().rev().map(|(e, c)| (monomial_name(e), serde_json::Value::String(c.to_string()))).collect();
        serde_json::Value::Object(map)
    }
}

fn power(name: &str, k: u32) -> Option<String> {
    match k {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{k}")),
    }
}

fn monomial_name(e: &Exponent) -> String {
    let mut parts: Vec<String> = e.x.iter().enumerate().filter_map(|(i, &k)| power(&format!("x{}", i + 1), k)).collect();
    parts.extend(power("alpha", e.alpha));
    parts.extend(power("beta", e.beta));
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let name = monomial_name(e);
            match (c.abs().is_one(), name.as_str()) {
                (true, "1") => write!(f, "1")?,
                (true, _) => write!(f, "{name}")?,
                (false, "1") => write!(f, "{}", c.abs())?,
                (false, _) => write!(f, "{} {name}", c.abs())?,
            }
        }
        Ok(())
    }
}

impl Add for ExactPolynomial {
    type Output = ExactPolynomial;
    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable counts differ");
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Neg for ExactPolynomial {
    type Output = ExactPolynomial;
    fn neg(self) -> Self {
        self.scale(&BigInt::from(-1))
    }
}

impl Sub for ExactPolynomial {
    type Output = ExactPolynomial;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn mul(self, rhs: Self) -> ExactPolynomial {
        self.mul_truncated(rhs, u32::MAX)
    }
}

/// Schur polynomial in `n` variables as a sum over semistandard tableaux.
pub fn schur(mu: &Partition, n: usize) -> ExactPolynomial {
    let mut out = ExactPolynomial::zero(n);
    for t in enumerate::ssyt(mu, n) {
        let w = t.weight(n).expect("entries bounded by n");
        out.add_term(Exponent::new(w.exponents().iter().map(|&k| k as u32).collect(), 0, 0), BigInt::one());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn schur_sizes() {
        assert_eq!(schur(&p(&[1]), 2).to_string(), "x1 + x2");
        assert_eq!(schur(&p(&[2, 2]), 3).len(), 6);
        assert_eq!(schur(&p(&[3, 1]), 3).evaluate_at_ones(), BigInt::from(15));
        assert!(schur(&p(&[1, 1, 1]), 2).is_zero());
        assert!(schur(&p(&[2, 1]), 3).is_symmetric());
    }

    #[test]
    fn geometric_substitution() {
        let x1 = ExactPolynomial::monomial(&[1], 0, 0);
        let s = x1.substitute_series(2);
        assert_eq!(s, ExactPolynomial::monomial(&[1], 0, 0) + ExactPolynomial::monomial(&[2], 1, 0));
        let c = ExactPolynomial::one(2);
        assert_eq!(c.substitute_series(3), c);
    }

    #[test]
    fn arithmetic_cancels() {
        let a = schur(&p(&[2]), 2);
        assert!((a.clone() - a.clone()).is_zero());
        let sq = &a * &a;
        assert_eq!(sq.evaluate_at_ones(), BigInt::from(9));
        assert!(!ExactPolynomial::monomial(&[2, 1], 0, 0).is_symmetric());
    }

    #[test]
    fn graded_lex_display() {
        let q = ExactPolynomial::monomial(&[1, 0], 0, 0) + ExactPolynomial::monomial(&[2, 0], 1, 0).scale(&BigInt::from(3));
        assert_eq!(q.to_string(), "3 x1^2 alpha + x1");
    }
}
