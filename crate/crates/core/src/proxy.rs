//! Vector proxies in two and three dimensions, and the classical
//! Arbogast–Correa and Cockburn–Fu spaces rewritten as differential forms.

use crate::error::{Error, Result};
use crate::exact::{enumerate_multi_indices, q, IndexSet, MultiIndex, Rational};
use crate::form::PolyForm;
use crate::linalg::FormSpace;
use crate::properties::{PropertyReport, Witness};
use crate::spaces::{generate_space, SpaceKind};

/// A polynomial vector field on ℝ² or ℝ³.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    n: usize,
    components: Vec<PolyForm>,
}

impl VectorField {
    pub fn new(components: Vec<PolyForm>) -> Result<Self> {
        let n = components.len();
        if !(n == 2 || n == 3) {
            return Err(Error::UnsupportedDimension(n));
        }
        for c in &components {
            if c.n() != n || c.k() != 0 {
                return Err(Error::ShapeMismatch { n1: n, k1: 0, n2: c.n(), k2: c.k() });
            }
        }
        Ok(VectorField { n, components })
    }

    pub fn zero(n: usize) -> Self {
        VectorField { n, components: vec![PolyForm::zero(n, 0); n] }
    }

    /// `p e_axis`.
    pub fn along(n: usize, axis: usize, p: PolyForm) -> Self {
        let mut v = VectorField::zero(n);
        v.components[axis] = p;
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[PolyForm] {
        &self.components
    }

    /// Multiplies every component by a scalar polynomial.
    pub fn times(&self, p: &PolyForm) -> VectorField {
        let components = self.components.iter().map(|c| c.wedge(p)).collect();
        VectorField { n: self.n, components }
    }

    pub fn scale(&self, c: &Rational) -> VectorField {
        let components = self.components.iter().map(|x| x.scale(c)).collect();
        VectorField { n: self.n, components }
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        let components = self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect();
        VectorField { n: self.n, components }
    }
}

/// `c x^α` as a 0-form on ℝⁿ.
pub fn scalar(c: i64, exponents: &[u32]) -> PolyForm {
    let n = exponents.len();
    PolyForm::monomial(q(c), MultiIndex::new(exponents.to_vec()), IndexSet::empty(n))
}

/// Homogeneous monomials of degree `r` on ℝⁿ that only involve `axes`.
pub fn homogeneous_in(n: usize, axes: &[usize], r: u32) -> Vec<PolyForm> {
    enumerate_multi_indices(axes.len(), r)
        .into_iter()
        .map(|a| {
            let mut e = vec![0; n];
            for (i, &axis) in axes.iter().enumerate() {
                e[axis] = a.get(i);
            }
            scalar(1, &e)
        })
        .collect()
}

fn all_axes(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Vector field to `k`-form: `Σ vᵢdxᵢ` for `k = 1`, and
/// `v₁dx₂dx₃ - v₂dx₁dx₃ + v₃dx₁dx₂` for `(n, k) = (3, 2)`.
pub fn flat(v: &VectorField, k: usize) -> Result<PolyForm> {
    let n = v.n;
    let mut out = PolyForm::zero(n, k);
    match (n, k) {
        (_, 1) => {
            for (i, c) in v.components.iter().enumerate() {
                out = &out + &c.wedge(&PolyForm::differential(n, i));
            }
        }
        (3, 2) => {
            let pairs = [(1, 2, 1), (0, 2, -1), (0, 1, 1)];
            for (c, &(a, b, s)) in v.components.iter().zip(&pairs) {
                let dx = PolyForm::differential(3, a).wedge(&PolyForm::differential(3, b));
                out = &out + &c.wedge(&dx).scale(&q(s));
            }
        }
        _ => return Err(Error::UnsupportedProxy { n, k }),
    }
    Ok(out)
}

/// Scalar to 0-form (`k = 0`) or to a multiple of the volume form (`k = n`).
pub fn flat_scalar(w: &PolyForm, k: usize) -> Result<PolyForm> {
    let n = w.n();
    if w.k() != 0 {
        return Err(Error::OrderMismatch { expected: 0, got: w.k() });
    }
    if k == 0 {
        Ok(w.clone())
    } else if k == n {
        Ok(w.wedge(&PolyForm::volume(n)))
    } else {
        Err(Error::UnsupportedProxy { n, k })
    }
}

/// Inverse of [`flat`].
pub fn sharp(form: &PolyForm) -> Result<VectorField> {
    let n = form.n();
    let mut v = VectorField::zero(n);
    let slot = |sigma: &IndexSet| -> Option<(usize, i64)> {
        match (n, form.k(), sigma.indices()) {
            (2 | 3, 1, [i]) => Some((*i, 1)),
            (3, 2, [1, 2]) => Some((0, 1)),
            (3, 2, [0, 2]) => Some((1, -1)),
            (3, 2, [0, 1]) => Some((2, 1)),
            _ => None,
        }
    };
    if !(n == 2 || n == 3) || !(form.k() == 1 || (n, form.k()) == (3, 2)) {
        return Err(Error::UnsupportedProxy { n, k: form.k() });
    }
    for m in form.monomials() {
        let (i, s) = slot(&m.sigma).expect("sigma of the right size");
        let c = if s > 0 { m.coefficient } else { -m.coefficient };
        v.components[i].add_term(crate::form::TermKey::new(m.alpha, IndexSet::empty(n)), c);
    }
    Ok(v)
}

/// Inverse of [`flat_scalar`].
pub fn sharp_scalar(form: &PolyForm) -> Result<PolyForm> {
    let n = form.n();
    if form.k() == 0 {
        return Ok(form.clone());
    }
    if form.k() != n {
        return Err(Error::UnsupportedProxy { n, k: form.k() });
    }
    let mut w = PolyForm::zero(n, 0);
    for m in form.monomials() {
        w.add_term(crate::form::TermKey::new(m.alpha, IndexSet::empty(n)), m.coefficient);
    }
    Ok(w)
}

/// Clockwise quarter turn `(v₁, v₂) ↦ (v₂, -v₁)`.
pub fn rot(v: &VectorField) -> Result<VectorField> {
    if v.n != 2 {
        return Err(Error::UnsupportedDimension(v.n));
    }
    VectorField::new(vec![v.components[1].clone(), -&v.components[0]])
}

pub fn grad(w: &PolyForm) -> VectorField {
    let n = w.n();
    VectorField { n, components: (0..n).map(|i| w.partial(i)).collect() }
}

pub fn div(v: &VectorField) -> PolyForm {
    v.components
        .iter()
        .enumerate()
        .fold(PolyForm::zero(v.n, 0), |acc, (i, c)| &acc + &c.partial(i))
}

/// `rot ∇w = (∂₂w, -∂₁w)`.
pub fn curl2d(w: &PolyForm) -> Result<VectorField> {
    rot(&grad(w))
}

pub fn curl3d(v: &VectorField) -> Result<VectorField> {
    if v.n != 3 {
        return Err(Error::UnsupportedDimension(v.n));
    }
    let c = &v.components;
    VectorField::new(vec![
        &c[2].partial(1) - &c[1].partial(2),
        &c[0].partial(2) - &c[2].partial(0),
        &c[1].partial(0) - &c[0].partial(1),
    ])
}

pub fn cross(a: &VectorField, b: &VectorField) -> Result<VectorField> {
    if a.n != 3 || b.n != 3 {
        return Err(Error::UnsupportedDimension(a.n));
    }
    let (a, b) = (&a.components, &b.components);
    let m = |i: usize, j: usize| a[i].wedge(&b[j]);
    VectorField::new(vec![&m(1, 2) - &m(2, 1), &m(2, 0) - &m(0, 2), &m(0, 1) - &m(1, 0)])
}

/// The position field `x`.
pub fn position(n: usize) -> VectorField {
    VectorField { n, components: (0..n).map(|i| PolyForm::coordinate(n, i)).collect() }
}

fn full_vectors(n: usize, r: u32) -> Vec<VectorField> {
    let mut out = Vec::new();
    for deg in 0..=r {
        for p in homogeneous_in(n, &all_axes(n), deg) {
            for axis in 0..n {
                out.push(VectorField::along(n, axis, p.clone()));
            }
        }
    }
    out
}

fn full_scalars(n: usize, r: u32) -> Vec<PolyForm> {
    (0..=r).flat_map(|deg| homogeneous_in(n, &all_axes(n), deg)).collect()
}

fn span_flat(vectors: &[VectorField], k: usize) -> Result<FormSpace> {
    let n = vectors.first().map_or(2, VectorField::n);
    let forms = vectors.iter().map(|v| flat(v, k)).collect::<Result<Vec<_>>>()?;
    FormSpace::span(n, k, forms)
}

fn span_scalars(n: usize, scalars: &[PolyForm], k: usize) -> Result<FormSpace> {
    let forms = scalars.iter().map(|w| flat_scalar(w, k)).collect::<Result<Vec<_>>>()?;
    FormSpace::span(n, k, forms)
}

/// The two supplemental fields `curl(x^{r-1}(1-x²)y)` and
/// `curl(xy^{r-1}(1-y²))`.
pub fn ac_supplement(r: u32) -> Result<[VectorField; 2]> {
    if r == 0 {
        return Err(Error::Invalid("the supplement needs r >= 1".into()));
    }
    let phi1 = &scalar(1, &[r - 1, 1]) - &scalar(1, &[r + 1, 1]);
    let phi2 = &scalar(1, &[1, r - 1]) - &scalar(1, &[1, r + 1]);
    Ok([curl2d(&phi1)?, curl2d(&phi2)?])
}

/// `(V, W)` of the Arbogast–Correa pair, with `V` rotated and turned into
/// 1-forms and `W` turned into 2-forms.
pub fn build_ac_pair(r: u32) -> Result<(FormSpace, FormSpace)> {
    let mut fields = full_vectors(2, r);
    let x = position(2);
    for p in homogeneous_in(2, &[0, 1], r) {
        fields.push(x.times(&p));
    }
    fields.extend(ac_supplement(r)?);
    let rotated = fields.iter().map(rot).collect::<Result<Vec<_>>>()?;
    let v = span_flat(&rotated, 1)?;
    let w = span_scalars(2, &full_scalars(2, r), 2)?;
    Ok((v, w))
}

/// `δH_{r+1}`: on ℝ², `{xy^{r+1}, x^{r+1}y}`; on ℝ³, `x P̃_{r+1}(y,z)`,
/// `xyz^{r+1}` and their permutations.
pub fn delta_h(n: usize, r: u32) -> Result<Vec<PolyForm>> {
    match n {
        2 => Ok(vec![scalar(1, &[1, r + 1]), scalar(1, &[r + 1, 1])]),
        3 => {
            let mut out = Vec::new();
            for i in 0..3 {
                let others: Vec<usize> = (0..3).filter(|&j| j != i).collect();
                let xi = PolyForm::coordinate(3, i);
                out.extend(homogeneous_in(3, &others, r + 1).iter().map(|p| xi.wedge(p)));
                let mut e = [1, 1, 1];
                e[i] = r + 1;
                out.push(scalar(1, &e));
            }
            Ok(out)
        }
        _ => Err(Error::UnsupportedDimension(n)),
    }
}

/// `δE_{r+1}` on ℝ³: `x p(y,z) (y∇z - z∇y)` and its cyclic permutations,
/// `p` homogeneous of degree `r`.
pub fn delta_e(r: u32) -> Vec<VectorField> {
    let mut out = Vec::new();
    for i in 0..3 {
        let (a, b) = ((i + 1) % 3, (i + 2) % 3);
        let rotation = VectorField::along(3, b, PolyForm::coordinate(3, a))
            .add(&VectorField::along(3, a, -&PolyForm::coordinate(3, b)));
        let xi = PolyForm::coordinate(3, i);
        let mut axes = [a, b];
        axes.sort_unstable();
        for p in homogeneous_in(3, &axes, r) {
            out.push(rotation.times(&xi.wedge(&p)));
        }
    }
    out
}

/// Cockburn–Fu space of order `k` at index `r`, as a space of `k`-forms.
pub fn build_cf_space(n: usize, r: u32, k: usize) -> Result<FormSpace> {
    let x = position(n);
    match (n, k) {
        (2 | 3, 0) => {
            let mut s = full_scalars(n, r + 1);
            s.extend(delta_h(n, r)?);
            span_scalars(n, &s, 0)
        }
        (2, 1) => {
            let mut fields = full_vectors(2, r);
            for p in homogeneous_in(2, &[0, 1], r) {
                fields.push(rot(&x.times(&p))?);
            }
            fields.extend(delta_h(2, r)?.iter().map(grad));
            span_flat(&fields, 1)
        }
        (3, 1) => {
            let mut fields = full_vectors(3, r);
            for p in homogeneous_in(3, &[0, 1, 2], r) {
                for axis in 0..3 {
                    fields.push(cross(&x, &VectorField::along(3, axis, p.clone()))?);
                }
            }
            fields.extend(delta_h(3, r)?.iter().map(grad));
            fields.extend(delta_e(r));
            span_flat(&fields, 1)
        }
        (3, 2) => {
            let mut fields = full_vectors(3, r);
            for p in homogeneous_in(3, &[0, 1, 2], r) {
                fields.push(x.times(&p));
            }
            for e in delta_e(r) {
                fields.push(curl3d(&e)?);
            }
            span_flat(&fields, 2)
        }
        (2, 2) | (3, 3) => span_scalars(n, &full_scalars(n, r), n),
        _ => Err(Error::UnsupportedProxy { n, k }),
    }
}

fn require_same(rep: &mut PropertyReport, label: &str, a: &FormSpace, b: &FormSpace) -> Result<()> {
    for (x, y, dir) in [(a, b, "proxy in form space"), (b, a, "form space in proxy")] {
        if let Some(form) = x.first_outside(y)? {
            rep.fail(Witness::Form { relation: format!("{label}: {dir}"), form });
        }
    }
    Ok(())
}

/// Arbogast–Correa pair against `S⁻_{r+1}Λ¹(□₂)` and `S⁻_{r+1}Λ²(□₂)`.
pub fn check_prop_ac(r: u32) -> Result<PropertyReport> {
    let mut rep = PropertyReport::new("proxy[AC]", 2, None, i64::from(r));
    let (v, w) = build_ac_pair(r)?;
    let s1 = generate_space(&SpaceKind::SMinus, 2, 1, i64::from(r) + 1)?;
    let s2 = generate_space(&SpaceKind::SMinus, 2, 2, i64::from(r) + 1)?;
    require_same(&mut rep, "V", &v, &s1)?;
    require_same(&mut rep, "W", &w, &s2)?;

    // each rotated supplement field sits in dJ_{r+1}Λ⁰ + P_rΛ¹
    let dj = generate_space(&SpaceKind::D(Box::new(SpaceKind::J)), 2, 1, i64::from(r) + 1)?;
    let target = dj.sum(&generate_space(&SpaceKind::P, 2, 1, i64::from(r))?)?;
    for sigma in ac_supplement(r)? {
        let form = flat(&rot(&sigma)?, 1)?;
        if !target.contains(&form)? {
            rep.fail(Witness::Form { relation: "rot supplement in dJ + P".into(), form });
        }
    }
    rep.note(format!("dim V {} vs {}, dim W {} vs {}", v.dim(), s1.dim(), w.dim(), s2.dim()));
    Ok(rep)
}

/// Cockburn–Fu sequence against `S⁻_{r+1}Λᵏ(□ₙ)` for every `k`.
pub fn check_prop_cf(n: usize, r: u32) -> Result<PropertyReport> {
    let mut rep = PropertyReport::new("proxy[CF]", n, None, i64::from(r));
    let mut dims = Vec::new();
    for k in 0..=n {
        let cf = build_cf_space(n, r, k)?;
        let s = generate_space(&SpaceKind::SMinus, n, k, i64::from(r) + 1)?;
        require_same(&mut rep, &format!("k={k}"), &cf, &s)?;
        dims.push(format!("{}/{}", cf.dim(), s.dim()));
    }
    if n == 3 {
        let de = span_flat(&delta_e(r), 1)?;
        let j = generate_space(&SpaceKind::J, 3, 1, i64::from(r) + 1)?;
        require_same(&mut rep, "delta E = J", &de, &j)?;
    }
    rep.note(format!("dims {}", dims.join(",")));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_examples() {
        let v = VectorField::new(vec![scalar(1, &[1, 0]), scalar(1, &[0, 1])]).unwrap();
        assert_eq!(flat(&v, 1).unwrap().to_string(), "(1) x1 dx1 + (1) x2 dx2");
        let e3 = VectorField::along(3, 2, PolyForm::constant(3, q(1)));
        assert_eq!(flat(&e3, 2).unwrap(), PolyForm::differential(3, 0).wedge(&PolyForm::differential(3, 1)));
        assert_eq!(flat_scalar(&PolyForm::constant(3, q(1)), 3).unwrap(), PolyForm::volume(3));
        assert!(flat(&v, 2).is_err());
    }

    #[test]
    fn rot_and_curl() {
        let e1 = VectorField::along(2, 0, PolyForm::constant(2, q(1)));
        assert_eq!(rot(&e1).unwrap(), VectorField::along(2, 1, PolyForm::constant(2, q(-1))));
        let c = curl2d(&scalar(1, &[1, 1])).unwrap();
        assert_eq!(c.components(), &[scalar(1, &[1, 0]), scalar(-1, &[0, 1])]);
        let v = VectorField::new(vec![scalar(3, &[2, 1]), scalar(-1, &[0, 4])]).unwrap();
        assert_eq!(rot(&rot(&v).unwrap()).unwrap(), v.scale(&q(-1)));
        assert!(rot(&position(3)).is_err());
    }

    #[test]
    fn sharp_inverts_flat() {
        let v = VectorField::new(vec![scalar(2, &[1, 0, 3]), scalar(-1, &[0, 0, 0]), scalar(5, &[1, 1, 1])]).unwrap();
        for k in [1, 2] {
            assert_eq!(sharp(&flat(&v, k).unwrap()).unwrap(), v);
        }
        let w = scalar(7, &[2, 0, 1]);
        assert_eq!(sharp_scalar(&flat_scalar(&w, 3).unwrap()).unwrap(), w);
    }

    #[test]
    fn ac_low_order() {
        let (v, w) = build_ac_pair(1).unwrap();
        assert_eq!(v.dim(), 10);
        assert_eq!(w.dim(), 3);
        assert!(check_prop_ac(2).unwrap().passed());
    }

    #[test]
    fn cf_low_order() {
        assert_eq!(build_cf_space(3, 1, 3).unwrap().dim(), 4);
        let rep = check_prop_cf(2, 1).unwrap();
        assert!(rep.passed(), "{rep}");
        let rep = check_prop_cf(3, 1).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}
