//! Exact linear algebra over ℚ: dense matrices with reduced row-echelon
//! forms, and finite-dimensional spaces of forms kept in a canonical
//! echelon basis.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Bound;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::form::{PolyForm, TermKey};

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = QMatrix::zeros(size, size);
        for i in 0..size {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        QMatrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Unique reduced row-echelon form together with the pivot columns.
    ///
    /// Elimination runs on integer rows (each row is cleared of
    /// denominators first and kept primitive after every update); pivots are
    /// normalized to one only at the end.
    pub fn rref_with_pivots(&self) -> (QMatrix, Vec<usize>) {
        let mut rows: Vec<Vec<BigInt>> = (0..self.rows).map(|i| integer_row(self.row(i))).collect();
        let mut pivots = Vec::new();
        let mut cur = 0;
        for col in 0..self.cols {
            if cur == self.rows {
                break;
            }
            let Some(found) = (cur..self.rows)
                .filter(|&i| !rows[i][col].is_zero())
                .min_by_key(|&i| rows[i][col].abs())
            else {
                continue;
            };
            rows.swap(cur, found);
            let pivot_row = rows[cur].clone();
            let p = &pivot_row[col];
            for (i, row) in rows.iter_mut().enumerate() {
                if i == cur || row[col].is_zero() {
                    continue;
                }
                let g = p.gcd(&row[col]);
                let a = p / &g;
                let b = &row[col] / &g;
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = &a * &*x - &b * y;
                }
                make_primitive(row);
            }
            pivots.push(col);
            cur += 1;
        }
        let mut out = QMatrix::zeros(self.rows, self.cols);
        for (i, &col) in pivots.iter().enumerate() {
            let p = rows[i][col].clone();
            for (j, v) in rows[i].iter().enumerate() {
                if !v.is_zero() {
                    out.set(i, j, Rational::new(v.clone(), p.clone()));
                }
            }
        }
        (out, pivots)
    }

    pub fn rref(&self) -> (QMatrix, usize) {
        let (m, pivots) = self.rref_with_pivots();
        (m, pivots.len())
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref_with_pivots();
        let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
        (0..self.cols)
            .filter(|c| !pivot_set.contains(c))
            .map(|free| {
                let mut x = vec![Rational::zero(); self.cols];
                x[free] = Rational::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    x[pc] = -r.get(i, free).clone();
                }
                x
            })
            .collect()
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Linear operators that act on forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormOp {
    /// Exterior derivative.
    D,
    /// Koszul operator.
    Kappa,
    /// Pullback to `x_axis = value`.
    Trace { axis: usize, value: Rational },
}

impl FormOp {
    pub fn apply(&self, form: &PolyForm) -> PolyForm {
        match self {
            FormOp::D => form.exterior_derivative(),
            FormOp::Kappa => form.koszul(),
            FormOp::Trace { axis, value } => form.trace(*axis, value),
        }
    }

    /// `(n, k)` of the image of an `(n, k)` space.
    pub fn target_shape(&self, n: usize, k: usize) -> (usize, usize) {
        match self {
            FormOp::D => (n, k + 1),
            FormOp::Kappa => (n, k.saturating_sub(1)),
            FormOp::Trace { .. } => (n - 1, k),
        }
    }
}

/// Incremental echelon basis keyed by pivot coordinate.
#[derive(Default)]
struct Echelon {
    rows: BTreeMap<TermKey, PolyForm>,
}

impl Echelon {
    /// Eliminates every pivot coordinate from `v` (rows only need to be in
    /// echelon form, not reduced).
    fn reduce(rows: &BTreeMap<TermKey, PolyForm>, mut v: PolyForm) -> PolyForm {
        let mut cursor: Option<TermKey> = None;
        loop {
            let next = match &cursor {
                None => v.terms().keys().find(|t| rows.contains_key(*t)).cloned(),
                Some(c) => v
                    .terms()
                    .range((Bound::Excluded(c), Bound::Unbounded))
                    .map(|(t, _)| t)
                    .find(|t| rows.contains_key(*t))
                    .cloned(),
            };
            let Some(t) = next else { break };
            let c = v.coefficient(&t).cloned().expect("pivot present");
            v.add_scaled(&-c, &rows[&t]);
            cursor = Some(t);
        }
        v
    }

    fn insert(&mut self, v: PolyForm) -> bool {
        let v = Self::reduce(&self.rows, v);
        let Some((lead, c)) = v.leading_term() else {
            return false;
        };
        let lead = lead.clone();
        let inv = c.recip();
        self.rows.insert(lead, v.scale(&inv));
        true
    }

    /// Back-substitutes into reduced form, ordered by pivot.
    fn finish(self) -> Vec<PolyForm> {
        let mut done: BTreeMap<TermKey, PolyForm> = BTreeMap::new();
        for (pivot, row) in self.rows.into_iter().rev() {
            let row = Self::reduce(&done, row);
            done.insert(pivot, row);
        }
        done.into_values().collect()
    }
}

#[derive(Debug, PartialEq, Eq)]
struct SpaceData {
    n: usize,
    k: usize,
    basis: Vec<PolyForm>,
    pivots: BTreeMap<TermKey, usize>,
}

/// A finite-dimensional space of `k`-forms on ℝⁿ.
///
/// The basis is the reduced row-echelon basis with respect to the
/// [`TermKey`] order: each basis form has a distinct pivot coordinate with
/// coefficient one, and every other basis form vanishes there. The echelon
/// basis is unique, so two spaces are equal exactly when their bases are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSpace(Arc<SpaceData>);

impl FormSpace {
    pub fn zero(n: usize, k: usize) -> Self {
        FormSpace::from_echelon(n, k, Echelon::default())
    }

    /// Echelonized span. Every form must be an `(n, k)` form.
    pub fn span<I>(n: usize, k: usize, forms: I) -> Result<Self>
    where
        I: IntoIterator<Item = PolyForm>,
    {
        let mut ech = Echelon::default();
        for form in forms {
            if form.n() != n || form.k() != k {
                return Err(Error::ShapeMismatch { n1: n, k1: k, n2: form.n(), k2: form.k() });
            }
            ech.insert(form);
        }
        Ok(FormSpace::from_echelon(n, k, ech))
    }

    /// Span of a non-empty list, taking the shape from the first form.
    pub fn span_of(forms: Vec<PolyForm>) -> Result<Self> {
        let first = forms
            .first()
            .ok_or_else(|| Error::Invalid("span_of needs at least one form".into()))?;
        let (n, k) = (first.n(), first.k());
        FormSpace::span(n, k, forms)
    }

    fn from_echelon(n: usize, k: usize, ech: Echelon) -> Self {
        let basis = ech.finish();
        let pivots = basis
            .iter()
            .enumerate()
            .map(|(i, b)| (b.leading_term().expect("nonzero basis form").0.clone(), i))
            .collect();
        FormSpace(Arc::new(SpaceData { n, k, basis, pivots }))
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn k(&self) -> usize {
        self.0.k
    }

    pub fn dim(&self) -> usize {
        self.0.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.basis.is_empty()
    }

    pub fn basis(&self) -> &[PolyForm] {
        &self.0.basis
    }

    /// Pivot coordinates in basis order.
    pub fn pivots(&self) -> impl Iterator<Item = &TermKey> {
        self.0.basis.iter().map(|b| b.leading_term().expect("nonzero").0)
    }

    fn check_form(&self, form: &PolyForm) -> Result<()> {
        if form.n() != self.n() || form.k() != self.k() {
            return Err(Error::ShapeMismatch {
                n1: self.n(),
                k1: self.k(),
                n2: form.n(),
                k2: form.k(),
            });
        }
        Ok(())
    }

    fn check_space(&self, other: &FormSpace) -> Result<()> {
        if other.n() != self.n() || other.k() != self.k() {
            return Err(Error::ShapeMismatch {
                n1: self.n(),
                k1: self.k(),
                n2: other.n(),
                k2: other.k(),
            });
        }
        Ok(())
    }

    /// What is left of `form` after eliminating against the basis.
    pub fn residual(&self, form: &PolyForm) -> Result<PolyForm> {
        self.check_form(form)?;
        let mut v = form.clone();
        for (key, c) in form.terms() {
            if let Some(&i) = self.0.pivots.get(key) {
                // reduced basis: other pivots never reappear
                let c = v.coefficient(key).cloned().unwrap_or_else(|| c.clone());
                v.add_scaled(&-c, &self.0.basis[i]);
            }
        }
        Ok(v)
    }

    pub fn contains(&self, form: &PolyForm) -> Result<bool> {
        Ok(self.residual(form)?.is_zero())
    }

    /// Coefficients of `form` in the echelon basis, `None` if outside.
    pub fn coordinates(&self, form: &PolyForm) -> Result<Option<Vec<Rational>>> {
        if !self.contains(form)? {
            return Ok(None);
        }
        Ok(Some(
            self.pivots()
                .map(|p| form.coefficient(p).cloned().unwrap_or_else(Rational::zero))
                .collect(),
        ))
    }

    /// First basis form of `self` outside `other`, if any.
    pub fn first_outside(&self, other: &FormSpace) -> Result<Option<PolyForm>> {
        self.check_space(other)?;
        for b in self.basis() {
            if !other.contains(b)? {
                return Ok(Some(b.clone()));
            }
        }
        Ok(None)
    }

    pub fn is_subspace_of(&self, other: &FormSpace) -> Result<bool> {
        Ok(self.first_outside(other)?.is_none())
    }

    pub fn sum(&self, other: &FormSpace) -> Result<FormSpace> {
        self.check_space(other)?;
        FormSpace::span(
            self.n(),
            self.k(),
            self.basis().iter().chain(other.basis()).cloned(),
        )
    }

    /// Sum of any number of same-shape spaces.
    pub fn sum_all(n: usize, k: usize, spaces: &[&FormSpace]) -> Result<FormSpace> {
        for s in spaces {
            if s.n() != n || s.k() != k {
                return Err(Error::ShapeMismatch { n1: n, k1: k, n2: s.n(), k2: s.k() });
            }
        }
        FormSpace::span(n, k, spaces.iter().flat_map(|s| s.basis().iter().cloned()))
    }

    pub fn is_direct(&self, other: &FormSpace) -> Result<bool> {
        Ok(self.sum(other)?.dim() == self.dim() + other.dim())
    }

    pub fn intersect(&self, other: &FormSpace) -> Result<FormSpace> {
        self.check_space(other)?;
        let mut columns: Vec<PolyForm> = self.basis().to_vec();
        columns.extend(other.basis().iter().map(|b| -b));
        let kernel = coordinate_matrix(&columns).nullspace();
        let forms = kernel.into_iter().map(|x| combine(self.n(), self.k(), self.basis(), &x));
        FormSpace::span(self.n(), self.k(), forms)
    }

    pub fn image(&self, op: &FormOp) -> FormSpace {
        let (n, k) = op.target_shape(self.n(), self.k());
        FormSpace::span(n, k, self.basis().iter().map(|b| op.apply(b)))
            .expect("operator image has a uniform shape")
    }

    pub fn kernel(&self, op: &FormOp) -> FormSpace {
        let images: Vec<PolyForm> = self.basis().iter().map(|b| op.apply(b)).collect();
        let kernel = coordinate_matrix(&images).nullspace();
        let forms = kernel.into_iter().map(|x| combine(self.n(), self.k(), self.basis(), &x));
        FormSpace::span(self.n(), self.k(), forms).expect("kernel forms share the space shape")
    }

    /// Members annihilated by every operator in `ops` at once.
    pub fn joint_kernel(&self, ops: &[FormOp]) -> FormSpace {
        let mut keys: BTreeMap<(usize, TermKey), usize> = BTreeMap::new();
        let images: Vec<Vec<PolyForm>> = self
            .basis()
            .iter()
            .map(|b| ops.iter().map(|op| op.apply(b)).collect())
            .collect();
        for per_op in &images {
            for (i, img) in per_op.iter().enumerate() {
                for key in img.terms().keys() {
                    let next = keys.len();
                    keys.entry((i, key.clone())).or_insert(next);
                }
            }
        }
        let mut m = QMatrix::zeros(keys.len(), self.dim());
        for (j, per_op) in images.iter().enumerate() {
            for (i, img) in per_op.iter().enumerate() {
                for (key, c) in img.terms() {
                    m.set(keys[&(i, key.clone())], j, c.clone());
                }
            }
        }
        let forms = m
            .nullspace()
            .into_iter()
            .map(|x| combine(self.n(), self.k(), self.basis(), &x));
        FormSpace::span(self.n(), self.k(), forms).expect("kernel forms share the space shape")
    }

    /// Rank of `op` restricted to this space.
    pub fn rank_of(&self, op: &FormOp) -> usize {
        let images: Vec<PolyForm> = self.basis().iter().map(|b| op.apply(b)).collect();
        coordinate_matrix(&images).rank()
    }
}

/// Matrix whose column `j` holds the coefficients of `forms[j]` over the
/// union of their coordinates.
pub fn coordinate_matrix(forms: &[PolyForm]) -> QMatrix {
    let keys: BTreeSet<&TermKey> = forms.iter().flat_map(|f| f.terms().keys()).collect();
    let index: BTreeMap<&TermKey, usize> = keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut m = QMatrix::zeros(index.len(), forms.len());
    for (j, f) in forms.iter().enumerate() {
        for (key, c) in f.terms() {
            m.set(index[key], j, c.clone());
        }
    }
    m
}

fn combine(n: usize, k: usize, basis: &[PolyForm], coeffs: &[Rational]) -> PolyForm {
    let mut out = PolyForm::zero(n, k);
    for (b, c) in basis.iter().zip(coeffs) {
        out.add_scaled(c, b);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{enumerate_index_sets, enumerate_multi_indices, q, IndexSet, MultiIndex};

    #[test]
    fn rref_examples() {
        let id = QMatrix::identity(3);
        assert_eq!(id.rref(), (id.clone(), 3));
        let z = QMatrix::zeros(2, 3);
        assert_eq!(z.rref(), (z.clone(), 0));
        let m = QMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rref(), (QMatrix::from_i64(&[&[1, 2], &[0, 0]]), 1));
    }

    #[test]
    fn rref_with_fractions() {
        let m = QMatrix::from_rows(vec![
            vec![crate::exact::q_frac(1, 2), q(1), q(0)],
            vec![q(3), crate::exact::q_frac(-1, 3), q(2)],
        ]);
        let (r, rank) = m.rref();
        assert_eq!(rank, 2);
        // verify r = E m for the solved rows by checking null vectors agree
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for i in 0..2 {
            let dot: Rational = (0..3).map(|j| m.get(i, j) * &ns[0][j]).sum();
            assert!(dot.is_zero());
        }
        assert_eq!(r.get(0, 0), &q(1));
        assert_eq!(r.get(1, 1), &q(1));
        assert!(r.get(0, 1).is_zero());
    }

    fn monomials(n: usize, k: usize, r: u32) -> Vec<PolyForm> {
        let mut out = Vec::new();
        for d in 0..=r {
            for a in enumerate_multi_indices(n, d) {
                for s in enumerate_index_sets(n, k) {
                    out.push(PolyForm::monomial(q(1), a.clone(), s));
                }
            }
        }
        out
    }

    #[test]
    fn span_examples() {
        let dx1 = PolyForm::differential(2, 0);
        let s = FormSpace::span(2, 1, vec![dx1.clone(), dx1.scale(&q(2))]).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(FormSpace::span(2, 1, vec![]).unwrap().dim(), 0);
        assert_eq!(FormSpace::span(2, 1, monomials(2, 1, 1)).unwrap().dim(), 6);
        assert!(matches!(
            FormSpace::span(2, 1, vec![PolyForm::coordinate(2, 0)]),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn membership() {
        let p1 = FormSpace::span(2, 0, monomials(2, 0, 1)).unwrap();
        let x1x2 = PolyForm::monomial(q(1), MultiIndex::new(vec![1, 1]), IndexSet::empty(2));
        assert!(!p1.contains(&x1x2).unwrap());
        assert!(p1.is_subspace_of(&p1).unwrap());
        assert!(p1.contains(&(&PolyForm::coordinate(2, 0) - &PolyForm::constant(2, q(3)))).unwrap());
        assert!(p1.contains(&PolyForm::differential(2, 0)).is_err());
    }

    #[test]
    fn kernel_of_d_on_linear_polynomials_is_constants() {
        let p1 = FormSpace::span(2, 0, monomials(2, 0, 1)).unwrap();
        let ker = p1.kernel(&FormOp::D);
        assert_eq!(ker, FormSpace::span(2, 0, vec![PolyForm::constant(2, q(1))]).unwrap());
        assert_eq!(p1.rank_of(&FormOp::D), 2);
    }

    #[test]
    fn echelon_basis_is_canonical() {
        let a = PolyForm::coordinate(2, 0);
        let b = PolyForm::coordinate(2, 1);
        let s1 = FormSpace::span(2, 0, vec![a.clone(), b.clone()]).unwrap();
        let s2 = FormSpace::span(2, 0, vec![&a + &b, &a - &b.scale(&q(3))]).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(s1.intersect(&s1).unwrap(), s1);
    }
}
