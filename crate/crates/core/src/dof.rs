//! Faces of the cube `[-1,1]ⁿ`, face moments, and the degrees of freedom of
//! the trimmed serendipity element.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{binom, enumerate_index_sets, q, q_frac, Rational};
use crate::form::PolyForm;
use crate::linalg::{FormOp, QMatrix};
use crate::spaces::{dim_formula, generate_space, SpaceKind};

/// A `d`-dimensional face of `[-1,1]ⁿ`: the pinned axes sit at `±1`, the
/// free axes (increasing) become the face's coordinates in that order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face {
    n: usize,
    pinned: Vec<(usize, i8)>,
    free_axes: Vec<usize>,
}

impl Face {
    /// `pinned` lists `(axis, sign)` pairs with sign `±1`.
    pub fn new(n: usize, mut pinned: Vec<(usize, i8)>) -> Result<Self> {
        pinned.sort_unstable();
        let valid = pinned.windows(2).all(|w| w[0].0 < w[1].0)
            && pinned.iter().all(|&(a, s)| a < n && (s == 1 || s == -1));
        if !valid {
            return Err(Error::Invalid(format!("bad pinned coordinates {pinned:?} for n={n}")));
        }
        let free_axes = (0..n).filter(|a| !pinned.iter().any(|p| p.0 == *a)).collect();
        Ok(Face { n, pinned, free_axes })
    }

    /// The whole cube.
    pub fn cell(n: usize) -> Self {
        Face { n, pinned: Vec::new(), free_axes: (0..n).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.free_axes.len()
    }

    pub fn pinned(&self) -> &[(usize, i8)] {
        &self.pinned
    }

    pub fn free_axes(&self) -> &[usize] {
        &self.free_axes
    }
}

impl fmt::Display for Face {
    /// Coordinates of the face in one-based notation, e.g. `(x1, -1, x3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.n)
            .map(|a| match self.pinned.iter().find(|p| p.0 == a) {
                Some(&(_, s)) => if s > 0 { "+1".into() } else { "-1".into() },
                None => format!("x{}", a + 1),
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// All `d`-dimensional faces: free-axis sets in lexicographic order, then
/// pinned signs lexicographically with `-1` before `+1`.
pub fn faces(n: usize, d: usize) -> Vec<Face> {
    if d > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    for free in enumerate_index_sets(n, d) {
        let pinned_axes = free.complement();
        let m = pinned_axes.len();
        for code in 0..(1u32 << m) {
            let pinned = pinned_axes
                .indices()
                .iter()
                .enumerate()
                .map(|(pos, &a)| (a, if code >> (m - 1 - pos) & 1 == 1 { 1 } else { -1 }))
                .collect();
            out.push(Face { n, pinned, free_axes: free.indices().to_vec() });
        }
    }
    out
}

/// Pullback of `u` to the face, in the face's own coordinates.
pub fn trace_to_face(u: &PolyForm, face: &Face) -> PolyForm {
    assert_eq!(u.n(), face.n, "form and face live in different dimensions");
    face.pinned.iter().rev().fold(u.clone(), |acc, &(axis, sign)| acc.trace(axis, &q(sign.into())))
}

/// `∫_f ω` for a top-degree form written in the face coordinates, with the
/// orientation given by increasing free axes.
pub fn integrate_over_face(omega: &PolyForm, face: &Face) -> Result<Rational> {
    let d = face.dim();
    if omega.n() != d || omega.k() != d {
        return Err(Error::OrderMismatch { expected: d, got: omega.k() });
    }
    let mut total = Rational::zero();
    for (key, c) in omega.terms() {
        let mut value = c.clone();
        for &e in key.alpha.exponents() {
            if e % 2 == 1 {
                value = Rational::zero();
                break;
            }
            value *= q_frac(2, i64::from(e) + 1);
        }
        total += value;
    }
    Ok(total)
}

/// Which summand of the weight space a functional comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DofPart {
    P,
    DH,
}

impl fmt::Display for DofPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DofPart::P => "P",
            DofPart::DH => "dH",
        })
    }
}

/// `u ↦ ∫_f tr_f u ∧ weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DofFunctional {
    pub face: Face,
    pub weight: PolyForm,
    pub part: DofPart,
}

/// Weight forms on a `d`-face for `k`-forms at degree `r`.
pub fn face_weights(d: usize, k: usize, r: i64) -> Result<(Vec<PolyForm>, Vec<PolyForm>)> {
    if k > d {
        return Ok((Vec::new(), Vec::new()));
    }
    let m = d - k;
    let shift = 2 * m as i64;
    let p = generate_space(&SpaceKind::P, d, m, r - shift - 1)?;
    let dh = generate_space(&SpaceKind::D(Box::new(SpaceKind::H)), d, m, r - shift + 1)?;
    Ok((p.basis().to_vec(), dh.basis().to_vec()))
}

/// Highest face dimension carrying degrees of freedom.
pub fn top_face_dim(n: usize, k: usize, r: i64) -> usize {
    n.min((r.max(0) / 2) as usize + k)
}

pub fn dof_functionals(n: usize, k: usize, r: i64) -> Result<Vec<DofFunctional>> {
    if k > n {
        return Err(Error::FormOrder { n, k });
    }
    let mut out = Vec::new();
    for d in k..=top_face_dim(n, k, r) {
        let (p, dh) = face_weights(d, k, r)?;
        for face in faces(n, d) {
            for w in &p {
                out.push(DofFunctional { face: face.clone(), weight: w.clone(), part: DofPart::P });
            }
            for w in &dh {
                out.push(DofFunctional { face: face.clone(), weight: w.clone(), part: DofPart::DH });
            }
        }
    }
    Ok(out)
}

/// Closed-form number of degrees of freedom.
pub fn dof_count(n: usize, k: usize, r: i64) -> i64 {
    if k > n {
        return 0;
    }
    let (n, k) = (n as i64, k as i64);
    (k..=top_face_dim(n as usize, k as usize, r) as i64)
        .map(|d| {
            let faces = (1i64 << (n - d)) * binom(n, d);
            let p = binom(r - d + 2 * k - 1, r - d + k - 1) * binom(r - d + k - 1, d - k);
            let dh = binom(r - d + 2 * k, k) * binom(r - d + k - 1, d - k - 1);
            faces * (p + dh)
        })
        .sum()
}

/// Per face dimension: number of faces and weights per face in each part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCount {
    pub d: usize,
    pub faces: usize,
    pub p_per_face: usize,
    pub dh_per_face: usize,
}

impl FaceCount {
    pub fn total(&self) -> usize {
        self.faces * (self.p_per_face + self.dh_per_face)
    }
}

pub fn dof_breakdown(n: usize, k: usize, r: i64) -> Result<Vec<FaceCount>> {
    if k > n {
        return Err(Error::FormOrder { n, k });
    }
    (k..=top_face_dim(n, k, r))
        .map(|d| {
            let m = d - k;
            let shift = 2 * m as i64;
            let p = dim_formula(&SpaceKind::P, d, m, r - shift - 1)?;
            let dh = dim_formula(&SpaceKind::D(Box::new(SpaceKind::H)), d, m, r - shift + 1)?;
            Ok(FaceCount {
                d,
                faces: (1usize << (n - d)) * binom(n as i64, d as i64) as usize,
                p_per_face: p as usize,
                dh_per_face: dh as usize,
            })
        })
        .collect()
}

pub fn apply_dof(phi: &DofFunctional, u: &PolyForm) -> Result<Rational> {
    let traced = trace_to_face(u, &phi.face);
    integrate_over_face(&traced.wedge(&phi.weight), &phi.face)
}

/// DOF matrix with one row per functional and one column per basis form.
pub fn dof_matrix(functionals: &[DofFunctional], basis: &[PolyForm]) -> Result<QMatrix> {
    let mut m = QMatrix::zeros(functionals.len(), basis.len());
    for (i, phi) in functionals.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            m.set(i, j, apply_dof(phi, b)?);
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnisolvenceReport {
    pub n: usize,
    pub k: usize,
    pub r: i64,
    pub functionals: usize,
    pub dim: usize,
    pub rank: usize,
    pub square: bool,
    pub unisolvent: bool,
    /// Dimension of the members whose traces on every facet vanish.
    pub trace_free_dim: usize,
    /// Whether the interior functionals alone separate trace-free members.
    pub interior_injective: bool,
}

pub fn unisolvence_check(n: usize, k: usize, r: i64) -> Result<UnisolvenceReport> {
    let space = generate_space(&SpaceKind::SMinus, n, k, r)?;
    let functionals = dof_functionals(n, k, r)?;
    let rank = dof_matrix(&functionals, space.basis())?.rank();
    let square = functionals.len() == space.dim();

    let facet_traces: Vec<FormOp> = (0..n)
        .flat_map(|axis| [-1, 1].map(|s| FormOp::Trace { axis, value: q(s) }))
        .collect();
    let trace_free = if n == 0 { space.clone() } else { space.joint_kernel(&facet_traces) };
    let interior: Vec<DofFunctional> =
        functionals.iter().filter(|phi| phi.face.dim() == n).cloned().collect();
    let interior_rank = dof_matrix(&interior, trace_free.basis())?.rank();

    Ok(UnisolvenceReport {
        n,
        k,
        r,
        functionals: functionals.len(),
        dim: space.dim(),
        rank,
        square,
        unisolvent: square && rank == space.dim(),
        trace_free_dim: trace_free.dim(),
        interior_injective: interior_rank == trace_free.dim(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityReport {
    pub interior_count: i64,
    pub p_dim: i64,
    pub dh_dim: i64,
    pub holds: bool,
}

/// Interior DOF count against `dim P_{r-2(n-k)-1}Λⁿ⁻ᵏ + dim dH_{r-2(n-k)+1}Λⁿ⁻ᵏ⁻¹`.
pub fn minimality_identity(n: usize, k: usize, r: i64) -> Result<MinimalityReport> {
    if k > n {
        return Err(Error::FormOrder { n, k });
    }
    let (ni, ki) = (n as i64, k as i64);
    let interior_count = if top_face_dim(n, k, r) == n {
        binom(r - ni + 2 * ki - 1, r - ni + ki - 1) * binom(r - ni + ki - 1, ni - ki)
            + binom(r - ni + 2 * ki, ki) * binom(r - ni + ki - 1, ni - ki - 1)
    } else {
        0
    };
    let m = n - k;
    let shift = 2 * m as i64;
    let p_dim = dim_formula(&SpaceKind::P, n, m, r - shift - 1)?;
    let dh_dim = dim_formula(&SpaceKind::D(Box::new(SpaceKind::H)), n, m, r - shift + 1)?;
    Ok(MinimalityReport { interior_count, p_dim, dh_dim, holds: interior_count == p_dim + dh_dim })
}

/// Number of functionals that remain after dropping every `dH` weight.
pub fn p_part_count(n: usize, k: usize, r: i64) -> Result<i64> {
    Ok(dof_breakdown(n, k, r)?.iter().map(|c| (c.faces * c.p_per_face) as i64).sum())
}

/// Evaluates a 0-form at a vertex of the cube.
pub fn vertex_value(u: &PolyForm, signs: &[i8]) -> Result<Rational> {
    let pinned = signs.iter().enumerate().map(|(a, &s)| (a, s)).collect();
    let face = Face::new(u.n(), pinned)?;
    let traced = trace_to_face(u, &face);
    Ok(traced.terms().values().fold(Rational::zero(), |acc, c| acc + c))
}
