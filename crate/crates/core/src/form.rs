//! Polynomial differential forms on ℝⁿ and the operators acting on them.
//!
//! A [`PolyForm`] is a finite sum of form monomials `c · x^α dx_σ` with `σ`
//! stored strictly increasing; any reordering sign is folded into the
//! coefficient when a term is built, so two forms are equal exactly when
//! their term maps are equal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Pow, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::{q, IndexSet, MultiIndex, Rational};

/// Coordinate of a form monomial `x^α dx_σ`.
///
/// The derived order (α first, then σ) is the global coordinate order
/// used for echelon forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermKey {
    pub alpha: MultiIndex,
    pub sigma: IndexSet,
}

impl TermKey {
    pub fn new(alpha: MultiIndex, sigma: IndexSet) -> Self {
        debug_assert_eq!(alpha.dim(), sigma.ambient());
        TermKey { alpha, sigma }
    }

    pub fn degree(&self) -> u32 {
        self.alpha.degree()
    }

    /// Number of axes outside `σ` whose exponent is exactly one.
    pub fn linear_degree(&self) -> usize {
        self.sigma
            .complement()
            .indices()
            .iter()
            .filter(|&&i| self.alpha.get(i) == 1)
            .count()
    }
}

/// A single term `coefficient · x^α dx_σ` with a nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMonomial {
    pub alpha: MultiIndex,
    pub sigma: IndexSet,
    pub coefficient: Rational,
}

impl FormMonomial {
    pub fn degree(&self) -> u32 {
        self.alpha.degree()
    }

    pub fn linear_degree(&self) -> usize {
        TermKey::new(self.alpha.clone(), self.sigma.clone()).linear_degree()
    }

    pub fn into_form(self) -> PolyForm {
        let n = self.alpha.dim();
        let k = self.sigma.len();
        let mut form = PolyForm::zero(n, k);
        form.add_term(TermKey::new(self.alpha, self.sigma), self.coefficient);
        form
    }
}

/// A polynomial differential `k`-form on ℝⁿ.
///
/// Forms of order `n + 1` occur only as the zero result of `d` on
/// top-degree forms; the Koszul image of a 0-form is the zero 0-form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyForm {
    n: usize,
    k: usize,
    terms: BTreeMap<TermKey, Rational>,
}

impl PolyForm {
    pub fn zero(n: usize, k: usize) -> Self {
        PolyForm { n, k, terms: BTreeMap::new() }
    }

    /// `coefficient · x^α dx_σ`.
    pub fn monomial(coefficient: Rational, alpha: MultiIndex, sigma: IndexSet) -> Self {
        let mut form = PolyForm::zero(alpha.dim(), sigma.len());
        form.add_term(TermKey::new(alpha, sigma), coefficient);
        form
    }

    /// `x^α dx_σ` with unit coefficient.
    pub fn basis_monomial(key: &TermKey) -> Self {
        PolyForm::monomial(Rational::one(), key.alpha.clone(), key.sigma.clone())
    }

    /// The constant 0-form `c`.
    pub fn constant(n: usize, c: Rational) -> Self {
        PolyForm::monomial(c, MultiIndex::zero(n), IndexSet::empty(n))
    }

    /// The coordinate function `x_axis` as a 0-form.
    pub fn coordinate(n: usize, axis: usize) -> Self {
        PolyForm::monomial(Rational::one(), MultiIndex::unit(n, axis), IndexSet::empty(n))
    }

    /// The 1-form `dx_axis`.
    pub fn differential(n: usize, axis: usize) -> Self {
        PolyForm::monomial(Rational::one(), MultiIndex::zero(n), IndexSet::new(n, vec![axis]))
    }

    /// `dx_1 ∧ … ∧ dx_n`.
    pub fn volume(n: usize) -> Self {
        PolyForm::monomial(Rational::one(), MultiIndex::zero(n), IndexSet::full(n))
    }

    pub fn from_terms<I>(n: usize, k: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (TermKey, Rational)>,
    {
        let mut form = PolyForm::zero(n, k);
        for (key, c) in terms {
            form.add_term(key, c);
        }
        form
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
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

    pub fn terms(&self) -> &BTreeMap<TermKey, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, key: &TermKey) -> Option<&Rational> {
        self.terms.get(key)
    }

    /// Smallest coordinate with a nonzero coefficient.
    pub fn leading_term(&self) -> Option<(&TermKey, &Rational)> {
        self.terms.iter().next()
    }

    pub fn monomials(&self) -> impl Iterator<Item = FormMonomial> + '_ {
        self.terms.iter().map(|(key, c)| FormMonomial {
            alpha: key.alpha.clone(),
            sigma: key.sigma.clone(),
            coefficient: c.clone(),
        })
    }

    /// Adds `c · key` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, key: TermKey, c: Rational) {
        debug_assert_eq!(key.alpha.dim(), self.n);
        debug_assert_eq!(key.sigma.len(), self.k);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += factor · other`.
    pub fn add_scaled(&mut self, factor: &Rational, other: &PolyForm) {
        self.check_same_shape(other);
        if factor.is_zero() {
            return;
        }
        for (key, c) in &other.terms {
            self.add_term(key.clone(), factor * c);
        }
    }

    pub fn scale(&self, factor: &Rational) -> PolyForm {
        if factor.is_zero() {
            return PolyForm::zero(self.n, self.k);
        }
        PolyForm {
            n: self.n,
            k: self.k,
            terms: self.terms.iter().map(|(key, c)| (key.clone(), c * factor)).collect(),
        }
    }

    /// Highest polynomial degree among the terms, `None` for the zero form.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(TermKey::degree).max()
    }

    /// Lowest polynomial degree among the terms.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(TermKey::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    /// Sub-sum of the terms of polynomial degree exactly `r`.
    pub fn homogeneous_component(&self, r: u32) -> PolyForm {
        PolyForm {
            n: self.n,
            k: self.k,
            terms: self
                .terms
                .iter()
                .filter(|(key, _)| key.degree() == r)
                .map(|(key, c)| (key.clone(), c.clone()))
                .collect(),
        }
    }

    /// Minimum linear degree over the terms. Undefined on the zero form.
    pub fn linear_degree(&self) -> Result<usize> {
        self.terms
            .keys()
            .map(TermKey::linear_degree)
            .min()
            .ok_or(Error::ZeroLinearDegree)
    }

    /// Exterior derivative `d`, producing a `(k+1)`-form.
    pub fn exterior_derivative(&self) -> PolyForm {
        let mut out = PolyForm::zero(self.n, self.k + 1);
        if self.k >= self.n {
            return out;
        }
        for (key, c) in &self.terms {
            for axis in 0..self.n {
                let e = key.alpha.get(axis);
                if e == 0 {
                    continue;
                }
                let Some((sigma, sign)) = key.sigma.insert_front(axis) else {
                    continue;
                };
                let alpha = key.alpha.with(axis, e - 1);
                out.add_term(TermKey::new(alpha, sigma), c * q(sign as i64 * e as i64));
            }
        }
        out
    }

    /// Koszul operator `κ`: contraction with the position field `Σ x_i ∂_i`.
    pub fn koszul(&self) -> PolyForm {
        if self.k == 0 {
            return PolyForm::zero(self.n, 0);
        }
        let mut out = PolyForm::zero(self.n, self.k - 1);
        for (key, c) in &self.terms {
            for (pos, &axis) in key.sigma.indices().iter().enumerate() {
                let alpha = key.alpha.with(axis, key.alpha.get(axis) + 1);
                let sigma = key.sigma.without_position(pos);
                let coeff = if pos % 2 == 0 { c.clone() } else { -c };
                out.add_term(TermKey::new(alpha, sigma), coeff);
            }
        }
        out
    }

    /// Exterior product `self ∧ other`.
    pub fn wedge(&self, other: &PolyForm) -> PolyForm {
        assert_eq!(self.n, other.n, "wedge of forms on different spaces");
        let mut out = PolyForm::zero(self.n, self.k + other.k);
        if self.k + other.k > self.n {
            return out;
        }
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let Some((sigma, sign)) = a.sigma.concat_sorted(&b.sigma) else {
                    continue;
                };
                let coeff = if sign > 0 { ca * cb } else { -(ca * cb) };
                out.add_term(TermKey::new(a.alpha.mul(&b.alpha), sigma), coeff);
            }
        }
        out
    }

    /// Pullback to the hyperplane `x_axis = value`, expressed in the
    /// remaining `n - 1` coordinates (later axes shift down by one).
    pub fn trace(&self, axis: usize, value: &Rational) -> PolyForm {
        assert!(axis < self.n, "trace axis {axis} out of range for n={}", self.n);
        let mut out = PolyForm::zero(self.n - 1, self.k);
        for (key, c) in &self.terms {
            if key.sigma.contains(axis) {
                continue;
            }
            let e = key.alpha.get(axis);
            let factor: Rational = value.clone().pow(e);
            out.add_term(
                TermKey::new(key.alpha.remove_axis(axis), key.sigma.remove_axis(axis)),
                c * factor,
            );
        }
        out
    }

    /// `∂/∂x_axis` applied coefficientwise.
    pub fn partial(&self, axis: usize) -> PolyForm {
        let mut out = PolyForm::zero(self.n, self.k);
        for (key, c) in &self.terms {
            let e = key.alpha.get(axis);
            if e > 0 {
                out.add_term(
                    TermKey::new(key.alpha.with(axis, e - 1), key.sigma.clone()),
                    c * q(e as i64),
                );
            }
        }
        out
    }

    /// Structured JSON with one-based axis labels.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(key, c)| {
                json!({
                    "coeff": c.to_string(),
                    "alpha": key.alpha.exponents(),
                    "sigma": key.sigma.indices().iter().map(|i| i + 1).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({ "n": self.n, "k": self.k, "terms": terms })
    }

    fn check_same_shape(&self, other: &PolyForm) {
        assert!(
            self.n == other.n && self.k == other.k,
            "form shape mismatch: ({}, {}) vs ({}, {})",
            self.n,
            self.k,
            other.n,
            other.k
        );
    }
}

/// Canonical text: `(3/2) x1^2 x3 dx1^dx4 + (-1) x2`.
impl fmt::Display for PolyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (key, c)) in self.terms.iter().enumerate() {
            if pos > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (axis, &e) in key.alpha.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, " x{}", axis + 1)?,
                    _ => write!(f, " x{}^{}", axis + 1, e)?,
                }
            }
            if !key.sigma.is_empty() {
                let wedge: Vec<String> =
                    key.sigma.indices().iter().map(|i| format!("dx{}", i + 1)).collect();
                write!(f, " {}", wedge.join("^"))?;
            }
        }
        Ok(())
    }
}

impl Add for &PolyForm {
    type Output = PolyForm;
    fn add(self, rhs: &PolyForm) -> PolyForm {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl Sub for &PolyForm {
    type Output = PolyForm;
    fn sub(self, rhs: &PolyForm) -> PolyForm {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl Neg for &PolyForm {
    type Output = PolyForm;
    fn neg(self) -> PolyForm {
        self.scale(&-Rational::one())
    }
}

impl Mul<&Rational> for &PolyForm {
    type Output = PolyForm;
    fn mul(self, rhs: &Rational) -> PolyForm {
        self.scale(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q_frac;

    fn mono(c: i64, alpha: &[u32], sigma: &[usize]) -> PolyForm {
        let n = alpha.len();
        PolyForm::monomial(q(c), MultiIndex::new(alpha.to_vec()), IndexSet::new(n, sigma.to_vec()))
    }

    #[test]
    fn derivative_examples() {
        // d(x1^2 dx2) = 2 x1 dx1^dx2
        assert_eq!(mono(1, &[2, 0], &[1]).exterior_derivative(), mono(2, &[1, 0], &[0, 1]));
        // d(x1 x2 dx1) = -x1 dx1^dx2
        assert_eq!(mono(1, &[1, 1], &[0]).exterior_derivative(), mono(-1, &[1, 0], &[0, 1]));
        // constants are closed
        assert!(PolyForm::constant(3, q(7)).exterior_derivative().is_zero());
        // top forms map to the zero (n+1)-form
        let top = mono(1, &[3, 1], &[0, 1]).exterior_derivative();
        assert!(top.is_zero());
        assert_eq!(top.k(), 3);
    }

    #[test]
    fn koszul_examples() {
        let got = mono(1, &[1, 1], &[0, 1]).koszul();
        let want = &mono(1, &[2, 1], &[1]) - &mono(1, &[1, 2], &[0]);
        assert_eq!(got, want);
        for n in 1..=4 {
            assert_eq!(PolyForm::differential(n, 0).koszul(), PolyForm::coordinate(n, 0));
        }
        assert!(PolyForm::coordinate(2, 0).koszul().is_zero());
    }

    #[test]
    fn wedge_examples() {
        let dx1 = PolyForm::differential(2, 0);
        assert!(dx1.wedge(&dx1).is_zero());
        assert_eq!(mono(1, &[1, 0], &[1]).wedge(&dx1), mono(-1, &[1, 0], &[0, 1]));
    }

    #[test]
    fn trace_examples() {
        assert!(mono(1, &[1, 1], &[0]).trace(0, &q(1)).is_zero());
        assert_eq!(mono(1, &[1, 1], &[1]).trace(0, &q(1)), mono(1, &[1], &[0]));
        assert_eq!(mono(1, &[3], &[]).trace(0, &q(-1)), PolyForm::constant(0, q(-1)));
        assert_eq!(
            mono(1, &[2, 0, 1], &[1]).trace(2, &q_frac(1, 2)),
            PolyForm::monomial(q_frac(1, 2), MultiIndex::new(vec![2, 0]), IndexSet::new(2, vec![1]))
        );
    }

    #[test]
    fn linear_degree_examples() {
        assert_eq!(mono(1, &[1, 2], &[1]).linear_degree().unwrap(), 1);
        assert_eq!(mono(1, &[1, 1, 5], &[0, 1, 2]).linear_degree().unwrap(), 0);
        let f = &mono(1, &[1, 1], &[0]) + &mono(1, &[2, 1], &[0]);
        assert_eq!(f.linear_degree().unwrap(), 1);
        assert!(matches!(PolyForm::zero(2, 1).linear_degree(), Err(Error::ZeroLinearDegree)));
    }

    #[test]
    fn homogeneous_components() {
        let f = &mono(1, &[1, 0], &[1]) + &mono(1, &[2, 0], &[1]);
        assert_eq!(f.homogeneous_component(1), mono(1, &[1, 0], &[1]));
        assert!(f.homogeneous_component(5).is_zero());
    }

    #[test]
    fn rendering() {
        let f = PolyForm::monomial(
            q_frac(3, 2),
            MultiIndex::new(vec![2, 0, 1, 0]),
            IndexSet::new(4, vec![0, 3]),
        );
        assert_eq!(f.to_string(), "(3/2) x1^2 x3 dx1^dx4");
        let g = &PolyForm::constant(2, q(1)) - &PolyForm::coordinate(2, 1);
        assert_eq!(g.to_string(), "(1) + (-1) x2");
        assert_eq!(PolyForm::zero(3, 1).to_string(), "0");
    }
}
