//! Truncated Grothendieck generating functions and their Schur expansions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::json;

use crate::crystal::Crystal;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::graph::decompose;
use crate::partition::{Partition, SkewShape};
use crate::poly::{schur, Exponent, ExactPolynomial};
use crate::tableau::{
    Family, FlagKind, FlaggedTableau, HookValuedTableau, MultisetValuedTableau, SetValuedTableau, Ssyt,
    ValuedSetTableau,
};

/// Exponents of `α` and `β` attached to a tableau.
pub trait Graded {
    fn grading(&self) -> (u32, u32);
}

impl Graded for Ssyt {
    fn grading(&self) -> (u32, u32) {
        (0, 0)
    }
}

impl Graded for SetValuedTableau {
    fn grading(&self) -> (u32, u32) {
        (0, self.excess() as u32)
    }
}

impl Graded for MultisetValuedTableau {
    fn grading(&self) -> (u32, u32) {
        (self.excess() as u32, 0)
    }
}

impl Graded for HookValuedTableau {
    fn grading(&self) -> (u32, u32) {
        (self.arm_excess() as u32, self.leg_excess() as u32)
    }
}

impl Graded for ValuedSetTableau {
    fn grading(&self) -> (u32, u32) {
        (self.excess() as u32, 0)
    }
}

/// Caller-supplied truncation. `max_excess` bounds set- and multiset-valued tableaux, the other two
/// bound hook-valued tableaux; valued-set tableaux are finite and ignore all three.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    pub max_excess: usize,
    pub max_arm: usize,
    pub max_leg: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Highest weight elements of the certified crystal decomposition.
    Crystal,
    /// Flagged tableau counts.
    Flagged,
    /// Peel lex-leading monomials off the generating function.
    Gram,
}

/// Sum of `α^a β^b x^wt` over a set of tableaux.
pub fn character<T: Crystal + Graded>(items: &[T], n: usize) -> Result<ExactPolynomial> {
    let mut out = ExactPolynomial::zero(n);
    for t in items {
        let w = t.weight(n)?;
        let (a, b) = t.grading();
        out.add_term(Exponent::new(w.exponents().iter().map(|&k| k as u32).collect(), a, b), BigInt::one());
    }
    Ok(out)
}

/// Generating function of `family` over shape `lambda` in `n` variables, truncated by `bounds`.
pub fn generating_function(family: Family, lambda: &Partition, n: usize, bounds: Bounds) -> Result<ExactPolynomial> {
    match family {
        Family::Ssyt => character(&enumerate::ssyt(lambda, n), n),
        Family::Svt => character(&enumerate::svt(lambda, n, bounds.max_excess), n),
        Family::Mvt => character(&enumerate::mvt(lambda, n, bounds.max_excess), n),
        Family::Hvt => character(&enumerate::hvt_up_to(lambda, n, bounds.max_arm, bounds.max_leg), n),
        Family::Vst => character(&enumerate::vst(lambda, n), n),
    }
}

/// Coefficients in `α, β` of Schur polynomials in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    n: usize,
    terms: BTreeMap<Partition, ExactPolynomial>,
}

impl SchurExpansion {
    pub fn new(n: usize) -> Self {
        SchurExpansion { n, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, mu: Partition, coeff: ExactPolynomial) {
        let entry = self.terms.entry(mu.clone()).or_insert_with(|| ExactPolynomial::zero(0));
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.terms.remove(&mu);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, ExactPolynomial> {
        &self.terms
    }

    pub fn coefficient(&self, mu: &Partition) -> ExactPolynomial {
        self.terms.get(mu).cloned().unwrap_or_else(|| ExactPolynomial::zero(0))
    }

    /// Integer multiplicity of `s_mu α^a β^b`.
    pub fn multiplicity(&self, mu: &Partition, alpha: u32, beta: u32) -> BigInt {
        self.coefficient(mu).coefficient(&Exponent::new(Vec::new(), alpha, beta))
    }

    /// Every coefficient of every coefficient polynomial is nonnegative.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|p| p.terms().all(|(_, c)| *c > BigInt::zero()))
    }

    /// Conjugate every indexing partition.
    pub fn omega(&self) -> SchurExpansion {
        SchurExpansion { n: self.n, terms: self.terms.iter().map(|(mu, c)| (mu.conjugate(), c.clone())).collect() }
    }

    /// Set `β = α` in every coefficient.
    pub fn beta_to_alpha(&self) -> SchurExpansion {
        let mut out = SchurExpansion::new(self.n);
        for (mu, c) in &self.terms {
            out.add(mu.clone(), c.beta_to_alpha());
        }
        out
    }

    /// Drop Schur polynomials that vanish in `n` variables.
    pub fn restricted(&self, n: usize) -> SchurExpansion {
        SchurExpansion {
            n,
            terms: self.terms.iter().filter(|(mu, _)| mu.len() <= n).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn to_polynomial(&self) -> ExactPolynomial {
        let mut out = ExactPolynomial::zero(self.n);
        for (mu, c) in &self.terms {
            let s = schur(mu, self.n);
            out = out + &c.with_nvars(self.n) * &s;
        }
        out
    }

    /// `[{"mu": [...], "coeff": {"alpha^i beta^j": c}}]` in partition order.
    pub fn to_json(&self) -> String {
        let records: Vec<_> = self.terms.iter().map(|(mu, c)| json!({ "mu": mu, "coeff": c.to_json() })).collect();
        serde_json::to_string(&records).expect("expansions serialize")
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.terms.keys().map(|mu| mu.to_string().len()).max().unwrap_or(0);
        for (mu, c) in &self.terms {
            writeln!(f, "s[{:<width$}]  {c}", mu.to_string())?;
        }
        Ok(())
    }
}

fn grading_coeff(alpha: u32, beta: u32, count: usize) -> ExactPolynomial {
    ExactPolynomial::grading(alpha, beta).scale(&BigInt::from(count))
}

/// Expansion read off the certified decomposition: one `s_μ` per component, weighted by its grading.
pub fn crystal_expansion<T: Crystal + Graded>(vertices: Vec<T>, n: usize) -> Result<SchurExpansion> {
    let report = decompose(vertices, n)?;
    let mut out = SchurExpansion::new(n);
    for c in report.components {
        let (a, b) = c.highest_weight.grading();
        out.add(c.mu, grading_coeff(a, b, 1));
    }
    Ok(out)
}

/// Expansion from flagged tableau counts.
pub fn flagged_expansion(family: Family, lambda: &Partition, n: usize, bounds: Bounds) -> Result<SchurExpansion> {
    let mut out = SchurExpansion::new(n);
    let push = |out: &mut SchurExpansion, mu: Partition, a: usize, b: usize, count: usize| {
        if count > 0 {
            out.add(mu, grading_coeff(a as u32, b as u32, count));
        }
    };
    match family {
        Family::Ssyt => push(&mut out, lambda.clone(), 0, 0, usize::from(lambda.len() <= n)),
        Family::Mvt => {
            for mu in lambda.superpartitions(bounds.max_excess, n) {
                let count = FlaggedTableau::count(FlagKind::Fc, &SkewShape::new(mu.clone(), lambda.clone())?);
                let k = mu.size() - lambda.size();
                push(&mut out, mu, k, 0, count);
            }
        }
        Family::Svt => {
            let conj = lambda.conjugate();
            for mu in lambda.superpartitions(bounds.max_excess, n) {
                let count = FlaggedTableau::count(FlagKind::Fc, &SkewShape::new(mu.conjugate(), conj.clone())?);
                let k = mu.size() - lambda.size();
                push(&mut out, mu, 0, k, count);
            }
        }
        Family::Vst => {
            for mu in lambda.subpartitions().into_iter().filter(|mu| mu.len() <= n) {
                let count = FlaggedTableau::count(FlagKind::Fcs, &SkewShape::new(lambda.clone(), mu.clone())?);
                let k = lambda.size() - mu.size();
                push(&mut out, mu, k, 0, count);
            }
        }
        Family::Hvt => return Err(Error::RouteUnavailable("flagged")),
    }
    Ok(out)
}

/// Expansion of a symmetric polynomial by repeatedly removing the lex-leading monomial's Schur polynomial.
pub fn gram_expansion(p: &ExactPolynomial) -> Result<SchurExpansion> {
    let n = p.nvars();
    let mut out = SchurExpansion::new(n);
    for (a, b) in p.gradings() {
        let mut rest = p.grading_part(a, b);
        let mut budget = rest.len();
        while let Some((e, c)) = rest.terms().max_by(|x, y| x.0.x.cmp(&y.0.x)).map(|(e, c)| (e.clone(), c.clone())) {
            if budget == 0 || e.x.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::NonSymmetric(e.x));
            }
            budget -= 1;
            let mu = Partition::from_trimmed(e.x.iter().map(|&k| k as usize).collect());
            let s = schur(&mu, n);
            let lifted = ExactPolynomial::term(n, Exponent::new(vec![0; n], a, b), c.clone());
            rest = rest - &lifted * &s;
            out.add(mu, ExactPolynomial::term(0, Exponent::new(Vec::new(), a, b), c));
        }
    }
    Ok(out)
}

pub fn schur_expand(family: Family, lambda: &Partition, n: usize, bounds: Bounds, route: Route) -> Result<SchurExpansion> {
    match route {
        Route::Crystal => match family {
            Family::Ssyt => crystal_expansion(enumerate::ssyt(lambda, n), n),
            Family::Svt => crystal_expansion(enumerate::svt(lambda, n, bounds.max_excess), n),
            Family::Mvt => crystal_expansion(enumerate::mvt(lambda, n, bounds.max_excess), n),
            Family::Hvt => crystal_expansion(enumerate::hvt_up_to(lambda, n, bounds.max_arm, bounds.max_leg), n),
            Family::Vst => crystal_expansion(enumerate::vst(lambda, n), n),
        },
        Route::Flagged => flagged_expansion(family, lambda, n, bounds),
        Route::Gram => gram_expansion(&generating_function(family, lambda, n, bounds)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn bounds(max_excess: usize) -> Bounds {
        Bounds { max_excess, ..Bounds::default() }
    }

    #[test]
    fn single_cell_weak() {
        let g = generating_function(Family::Mvt, &p(&[1]), 1, bounds(2)).unwrap();
        let want = ExactPolynomial::monomial(&[1], 0, 0) + ExactPolynomial::monomial(&[2], 1, 0) + ExactPolynomial::monomial(&[3], 2, 0);
        assert_eq!(g, want);
    }

    #[test]
    fn valued_set_rectangle() {
        let e = schur_expand(Family::Vst, &p(&[3, 3]), 3, Bounds::default(), Route::Crystal).unwrap();
        let table: Vec<(Partition, u32, i64)> = vec![
            (p(&[3, 3]), 0, 1),
            (p(&[3, 2]), 1, 2),
            (p(&[3, 1]), 2, 1),
            (p(&[2, 2]), 2, 3),
            (p(&[2, 1]), 3, 2),
            (p(&[1, 1]), 4, 1),
        ];
        assert_eq!(e.terms().len(), table.len());
        for (mu, a, m) in table {
            assert_eq!(e.multiplicity(&mu, a, 0), BigInt::from(m), "{mu}");
        }
    }

    #[test]
    fn routes_agree_on_small_shapes() {
        for (family, lam) in [(Family::Mvt, p(&[2, 1])), (Family::Svt, p(&[2, 2])), (Family::Vst, p(&[2, 2])), (Family::Ssyt, p(&[2]))] {
            let crystal = schur_expand(family, &lam, 3, bounds(2), Route::Crystal).unwrap();
            let gram = schur_expand(family, &lam, 3, bounds(2), Route::Gram).unwrap();
            let flagged = schur_expand(family, &lam, 3, bounds(2), Route::Flagged).unwrap();
            assert_eq!(crystal, gram, "{family:?}");
            assert_eq!(crystal, flagged, "{family:?}");
            assert_eq!(crystal.to_polynomial(), generating_function(family, &lam, 3, bounds(2)).unwrap());
        }
    }

    #[test]
    fn hook_specializations() {
        let lam = p(&[2, 1]);
        let only_arms = Bounds { max_excess: 2, max_arm: 2, max_leg: 0 };
        let only_legs = Bounds { max_excess: 2, max_arm: 0, max_leg: 2 };
        assert_eq!(
            generating_function(Family::Hvt, &lam, 3, only_arms).unwrap(),
            generating_function(Family::Mvt, &lam, 3, bounds(2)).unwrap()
        );
        assert_eq!(
            generating_function(Family::Hvt, &lam, 3, only_legs).unwrap(),
            generating_function(Family::Svt, &lam, 3, bounds(2)).unwrap()
        );
        assert!(matches!(flagged_expansion(Family::Hvt, &lam, 3, only_arms), Err(Error::RouteUnavailable(_))));
    }

    #[test]
    fn gram_rejects_asymmetry() {
        let q = ExactPolynomial::monomial(&[1, 2], 0, 0);
        assert!(matches!(gram_expansion(&q), Err(Error::NonSymmetric(_))));
    }

    #[test]
    fn omega_is_an_involution() {
        let e = schur_expand(Family::Mvt, &p(&[2, 1]), 3, bounds(1), Route::Flagged).unwrap();
        assert_eq!(e.omega().omega(), e);
        let mut s = SchurExpansion::new(3);
        s.add(p(&[2, 1]), ExactPolynomial::grading(0, 0));
        assert_eq!(s.omega(), s);
    }
}
