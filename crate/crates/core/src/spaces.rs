//! Polynomial form spaces on ℝⁿ (or the cube □ₙ) and their dimension counts.
//!
//! Every space is built from explicit generators and echelonized; the
//! closed-form dimensions are kept independent so that each side can check
//! the other.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::exact::{binom, enumerate_index_sets, enumerate_multi_indices};
use crate::form::{PolyForm, TermKey};
use crate::linalg::{FormOp, FormSpace};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceKind {
    /// Homogeneous forms of degree `r`.
    H,
    /// Homogeneous forms of degree `r` whose monomials have linear degree
    /// at least `ℓ`.
    HLinear(usize),
    /// Full polynomial forms of degree at most `r`.
    P,
    /// `P_{r-1}Λᵏ + κH_{r-1}Λᵏ⁺¹`.
    PMinus,
    /// `Σ_{ℓ≥1} κH_{r+ℓ-1,ℓ}Λᵏ⁺¹`.
    J,
    /// `J` rebuilt from `κm` over monomials `m` with `deg m ≥ r` and
    /// `deg m - ldeg m ≤ r - 1`.
    JViaChar,
    /// Serendipity `P_r ⊕ J_r ⊕ dJ_{r+1}Λᵏ⁻¹`.
    S,
    /// Trimmed serendipity `S_{r-1}Λᵏ + κS_{r-1}Λᵏ⁺¹`.
    SMinus,
    /// `d` applied to the inner kind of order `k - 1`.
    D(Box<SpaceKind>),
    /// `κ` applied to the inner kind of order `k + 1`.
    Kappa(Box<SpaceKind>),
    /// Tensor-product trimmed space; only its dimension is available.
    QMinus,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceKind::H => write!(f, "H"),
            SpaceKind::HLinear(l) => write!(f, "H_linear({l})"),
            SpaceKind::P => write!(f, "P"),
            SpaceKind::PMinus => write!(f, "Pminus"),
            SpaceKind::J => write!(f, "J"),
            SpaceKind::JViaChar => write!(f, "J_via_char"),
            SpaceKind::S => write!(f, "S"),
            SpaceKind::SMinus => write!(f, "Sminus"),
            SpaceKind::D(inner) => write!(f, "d({inner})"),
            SpaceKind::Kappa(inner) => write!(f, "kappa({inner})"),
            SpaceKind::QMinus => write!(f, "Qminus"),
        }
    }
}

impl FromStr for SpaceKind {
    type Err = Error;

    /// Accepts the `Display` spelling, case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        let wrapped = |prefix: &str| -> Option<&str> {
            let open = format!("{prefix}(");
            (lower.starts_with(&open) && lower.ends_with(')')).then(|| &t[open.len()..t.len() - 1])
        };
        if let Some(inner) = wrapped("d") {
            return Ok(SpaceKind::D(Box::new(inner.parse()?)));
        }
        if let Some(inner) = wrapped("kappa") {
            return Ok(SpaceKind::Kappa(Box::new(inner.parse()?)));
        }
        if let Some(l) = wrapped("h_linear") {
            let l = l.trim().parse().map_err(|_| Error::Invalid(format!("bad linear degree in {s:?}")))?;
            return Ok(SpaceKind::HLinear(l));
        }
        Ok(match lower.as_str() {
            "h" => SpaceKind::H,
            "p" => SpaceKind::P,
            "pminus" => SpaceKind::PMinus,
            "j" => SpaceKind::J,
            "j_via_char" => SpaceKind::JViaChar,
            "s" => SpaceKind::S,
            "sminus" => SpaceKind::SMinus,
            "qminus" => SpaceKind::QMinus,
            _ => return Err(Error::Invalid(format!("unknown space kind {s:?}"))),
        })
    }
}

type CacheKey = (SpaceKind, usize, usize, i64);

fn cache() -> &'static Mutex<HashMap<CacheKey, FormSpace>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, FormSpace>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Echelonized basis of the space `kind` of `k`-forms on ℝⁿ at degree `r`.
///
/// Degrees that leave nothing (negative `r`, or `r ≤ 0` for the trimmed
/// and `J` families) give the zero space. Results are memoized.
pub fn generate_space(kind: &SpaceKind, n: usize, k: usize, r: i64) -> Result<FormSpace> {
    if k > n {
        return Err(Error::FormOrder { n, k });
    }
    if let SpaceKind::QMinus = kind {
        return Err(Error::NoBasisRoute(kind.to_string()));
    }
    let key = (kind.clone(), n, k, r);
    if let Some(s) = cache().lock().expect("space cache").get(&key) {
        return Ok(s.clone());
    }
    let space = build(kind, n, k, r)?;
    cache().lock().expect("space cache").insert(key, space.clone());
    Ok(space)
}

fn build(kind: &SpaceKind, n: usize, k: usize, r: i64) -> Result<FormSpace> {
    let s = match kind {
        SpaceKind::H => monomial_span(n, k, r..=r, |_| true),
        SpaceKind::HLinear(l) => monomial_span(n, k, r..=r, |t| t.linear_degree() >= *l),
        SpaceKind::P => monomial_span(n, k, 0..=r, |_| true),
        SpaceKind::PMinus => {
            if r <= 0 {
                return Ok(FormSpace::zero(n, k));
            }
            let p = generate_space(&SpaceKind::P, n, k, r - 1)?;
            if k < n {
                let kh = generate_space(&SpaceKind::H, n, k + 1, r - 1)?.image(&FormOp::Kappa);
                p.sum(&kh)?
            } else {
                p
            }
        }
        SpaceKind::J => {
            let mut gens = Vec::new();
            for l in 1..n.saturating_sub(k) {
                let h = generate_space(&SpaceKind::HLinear(l), n, k + 1, r + l as i64 - 1)?;
                gens.extend(h.basis().iter().map(PolyForm::koszul));
            }
            FormSpace::span(n, k, gens)?
        }
        SpaceKind::JViaChar => {
            let mut gens = Vec::new();
            if k < n && r >= 1 {
                let top = r + n as i64 - k as i64 - 2;
                for t in monomial_keys(n, k + 1, r..=top) {
                    if (t.degree() as i64 - t.linear_degree() as i64) < r {
                        gens.push(PolyForm::basis_monomial(&t).koszul());
                    }
                }
            }
            FormSpace::span(n, k, gens)?
        }
        SpaceKind::S => {
            if r < 0 {
                return Ok(FormSpace::zero(n, k));
            }
            let p = generate_space(&SpaceKind::P, n, k, r)?;
            let j = generate_space(&SpaceKind::J, n, k, r)?;
            let mut parts = vec![p, j];
            if k >= 1 {
                parts.push(generate_space(&SpaceKind::J, n, k - 1, r + 1)?.image(&FormOp::D));
            }
            FormSpace::sum_all(n, k, &parts.iter().collect::<Vec<_>>())?
        }
        SpaceKind::SMinus => {
            if r <= 0 {
                return Ok(FormSpace::zero(n, k));
            }
            let s = generate_space(&SpaceKind::S, n, k, r - 1)?;
            if k < n {
                let ks = generate_space(&SpaceKind::S, n, k + 1, r - 1)?.image(&FormOp::Kappa);
                s.sum(&ks)?
            } else {
                s
            }
        }
        SpaceKind::D(inner) => {
            if k == 0 {
                FormSpace::zero(n, 0)
            } else {
                generate_space(inner, n, k - 1, r)?.image(&FormOp::D)
            }
        }
        SpaceKind::Kappa(inner) => {
            if k == n {
                FormSpace::zero(n, k)
            } else {
                generate_space(inner, n, k + 1, r)?.image(&FormOp::Kappa)
            }
        }
        SpaceKind::QMinus => return Err(Error::NoBasisRoute(kind.to_string())),
    };
    Ok(s)
}

fn monomial_keys(n: usize, k: usize, degrees: std::ops::RangeInclusive<i64>) -> Vec<TermKey> {
    let mut out = Vec::new();
    for deg in degrees {
        if deg < 0 {
            continue;
        }
        for alpha in enumerate_multi_indices(n, deg as u32) {
            for sigma in enumerate_index_sets(n, k) {
                out.push(TermKey::new(alpha.clone(), sigma));
            }
        }
    }
    out
}

fn monomial_span<F>(n: usize, k: usize, degrees: std::ops::RangeInclusive<i64>, keep: F) -> FormSpace
where
    F: Fn(&TermKey) -> bool,
{
    let forms = monomial_keys(n, k, degrees)
        .into_iter()
        .filter(|t| keep(t))
        .map(|t| PolyForm::basis_monomial(&t));
    FormSpace::span(n, k, forms).expect("monomials share one shape")
}

/// `S⁻_r` assembled as `P⁻_r ⊕ J_r ⊕ dJ_rΛᵏ⁻¹`.
pub fn sminus_by_decomposition(n: usize, k: usize, r: i64) -> Result<FormSpace> {
    if k > n {
        return Err(Error::FormOrder { n, k });
    }
    let mut parts = vec![
        generate_space(&SpaceKind::PMinus, n, k, r)?,
        generate_space(&SpaceKind::J, n, k, r)?,
    ];
    if k >= 1 {
        parts.push(generate_space(&SpaceKind::J, n, k - 1, r)?.image(&FormOp::D));
    }
    FormSpace::sum_all(n, k, &parts.iter().collect::<Vec<_>>())
}

/// Closed-form dimension of `generate_space(kind, n, k, r)`.
pub fn dim_formula(kind: &SpaceKind, n: usize, k: usize, r: i64) -> Result<i64> {
    if k > n {
        return Err(Error::FormOrder { n, k });
    }
    let (n, k) = (n as i64, k as i64);
    Ok(match kind {
        SpaceKind::H => dim_h(n, k, r),
        SpaceKind::HLinear(l) => dim_h_linear(n, k, r, *l as i64),
        SpaceKind::P => dim_p(n, k, r),
        SpaceKind::PMinus => dim_pminus(n, k, r),
        SpaceKind::J | SpaceKind::JViaChar => dim_j(n, k, r),
        SpaceKind::S => dim_s(n, k, r),
        SpaceKind::SMinus => dim_sminus(n, k, r),
        SpaceKind::QMinus => {
            if r <= 0 {
                0
            } else {
                binom(n, k) * r.pow(k as u32) * (r + 1).pow((n - k) as u32)
            }
        }
        SpaceKind::D(inner) => {
            if k == 0 {
                0
            } else {
                dim_d_of(inner, n, k - 1, r)?
            }
        }
        SpaceKind::Kappa(inner) => {
            if k == n {
                0
            } else {
                dim_kappa_of(inner, n, k + 1, r)?
            }
        }
    })
}

fn dim_h(n: i64, k: i64, r: i64) -> i64 {
    if r < 0 || k < 0 || k > n {
        return 0;
    }
    if n == 0 {
        return i64::from(r == 0);
    }
    binom(n + r - 1, r) * binom(n, k)
}

/// Number of exponent vectors on `vars` variables with total `s`.
fn compositions(vars: i64, s: i64) -> i64 {
    if s < 0 {
        0
    } else if vars == 0 {
        i64::from(s == 0)
    } else {
        binom(s + vars - 1, vars - 1)
    }
}

/// `free` unrestricted exponents plus `avoid` exponents that are never 1,
/// summing to `s` (inclusion-exclusion over the forbidden value).
fn compositions_avoiding_one(free: i64, avoid: i64, s: i64) -> i64 {
    (0..=avoid.min(s.max(0)))
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sign * binom(avoid, i) * compositions(free + avoid - i, s - i)
        })
        .sum()
}

fn dim_h_linear(n: i64, k: i64, r: i64, l: i64) -> i64 {
    if r < 0 || k < 0 || k > n {
        return 0;
    }
    let m = n - k;
    let per_sigma: i64 = (l.max(0)..=m.min(r))
        .map(|j| binom(m, j) * compositions_avoiding_one(k, m - j, r - j))
        .sum();
    binom(n, k) * per_sigma
}

fn dim_p(n: i64, k: i64, r: i64) -> i64 {
    if r < 0 || k < 0 || k > n {
        return 0;
    }
    binom(r + n, r + k) * binom(r + k, k)
}

fn dim_pminus(n: i64, k: i64, r: i64) -> i64 {
    if r <= 0 || k < 0 || k > n {
        return 0;
    }
    binom(r + n, r + k) * binom(r + k - 1, k)
}

/// `dim κH_rΛᵏ`.
fn dim_kappa_h(n: i64, k: i64, r: i64) -> i64 {
    if r < 0 || k < 1 || k > n {
        return 0;
    }
    binom(n + r, n - k) * binom(r + k - 1, k - 1)
}

/// `dim dH_sΛᵏ`.
fn dim_d_h(n: i64, k: i64, s: i64) -> i64 {
    if s < 1 || k < 0 || k >= n {
        return 0;
    }
    binom(n + s - 1, n - k - 1) * binom(s + k - 1, k)
}

/// Serendipity dimension for `r ≥ 1` as a sum over face dimensions.
fn dim_s_faces(n: i64, k: i64, r: i64) -> i64 {
    (k..=n.min(r / 2 + k))
        .map(|d| (1i64 << (n - d)) * binom(n, d) * binom(r - d + 2 * k, d) * binom(d, k))
        .sum()
}

/// `dim S_r - dim P_r` for `r ≥ 1`.
fn f_jj(n: i64, k: i64, r: i64) -> i64 {
    dim_s_faces(n, k, r) - dim_p(n, k, r)
}

fn dim_j(n: i64, k: i64, r: i64) -> i64 {
    if r <= 0 || k < 0 || k > n {
        return 0;
    }
    (0..=k)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sign * f_jj(n, k - i, r + i)
        })
        .sum()
}

fn dim_s(n: i64, k: i64, r: i64) -> i64 {
    if r < 0 || k < 0 || k > n {
        0
    } else if r == 0 {
        dim_p(n, k, 0) + dim_j(n, k - 1, 1)
    } else {
        dim_s_faces(n, k, r)
    }
}

fn dim_sminus(n: i64, k: i64, r: i64) -> i64 {
    if r <= 0 || k < 0 || k > n {
        return 0;
    }
    dim_pminus(n, k, r) + dim_j(n, k, r) + dim_j(n, k - 1, r)
}

fn dim_dp(n: i64, k: i64, r: i64) -> i64 {
    (1..=r).map(|j| dim_d_h(n, k, j)).sum()
}

fn dim_kappa_p(n: i64, k: i64, r: i64) -> i64 {
    (0..=r).map(|j| dim_kappa_h(n, k, j)).sum()
}

/// `dim d(X)` where `X` is the inner kind at order `k`.
fn dim_d_of(inner: &SpaceKind, n: i64, k: i64, r: i64) -> Result<i64> {
    Ok(match inner {
        SpaceKind::H => dim_d_h(n, k, r),
        SpaceKind::P => dim_dp(n, k, r),
        SpaceKind::PMinus => {
            if r <= 0 {
                0
            } else {
                dim_dp(n, k, r - 1) + dim_kappa_h(n, k + 1, r - 1)
            }
        }
        SpaceKind::J | SpaceKind::JViaChar => dim_j(n, k, r),
        SpaceKind::S => {
            if r < 0 {
                0
            } else {
                dim_dp(n, k, r) + dim_j(n, k, r)
            }
        }
        SpaceKind::SMinus => {
            if r <= 0 {
                0
            } else {
                dim_dp(n, k, r - 1) + dim_kappa_h(n, k + 1, r - 1) + dim_j(n, k, r)
            }
        }
        SpaceKind::D(_) => 0,
        other => return Err(Error::NoDimFormula(format!("d({other})"))),
    })
}

/// `dim κ(X)` where `X` is the inner kind at order `k`.
fn dim_kappa_of(inner: &SpaceKind, n: i64, k: i64, r: i64) -> Result<i64> {
    Ok(match inner {
        SpaceKind::H => dim_kappa_h(n, k, r),
        SpaceKind::P => dim_kappa_p(n, k, r),
        SpaceKind::PMinus => {
            if r <= 0 {
                0
            } else {
                dim_kappa_p(n, k, r - 1)
            }
        }
        SpaceKind::J | SpaceKind::JViaChar => 0,
        SpaceKind::S => {
            if r < 0 {
                0
            } else {
                dim_kappa_p(n, k, r) + dim_j(n, k - 1, r + 1)
            }
        }
        SpaceKind::SMinus => {
            if r <= 0 {
                0
            } else {
                dim_kappa_p(n, k, r - 1) + dim_j(n, k - 1, r)
            }
        }
        SpaceKind::Kappa(_) => 0,
        other => return Err(Error::NoDimFormula(format!("kappa({other})"))),
    })
}

/// Piecewise closed forms for `dim S⁻_rΛᵏ(□ₙ)` in two and three dimensions.
pub fn closed_form_dim(n: usize, k: usize, r: i64) -> Result<i64> {
    if k > n {
        return Err(Error::FormOrder { n, k });
    }
    if r < 1 {
        return Err(Error::Invalid(format!("closed forms need r >= 1, got {r}")));
    }
    let c = binom;
    match (n, k) {
        (2, 0) => Ok(4 + 4 * (r - 1) + c(r - 2, 2)),
        (2, 1) => Ok(if r == 1 { 4 } else { r * r + 2 * r + 2 }),
        (2, 2) => Ok(c(r + 1, 2)),
        (3, _) => {
            let j0 = match r {
                1 => 4,
                2 => 10,
                _ => 3 * (r + 1),
            };
            let j1 = if r == 1 { 2 } else { 3 * r };
            Ok(match k {
                0 => c(r + 3, 3) + j0,
                1 => match r {
                    1 => 12,
                    2 => 36,
                    _ => (r * r * r + 5 * r * r + 18 * r + 6) / 2,
                },
                2 => (r + 3) * c(r + 1, 2) + j1,
                _ => c(r + 2, 3),
            })
        }
        _ => Err(Error::UnsupportedDimension(n)),
    }
}

/// Largest total degree and largest `deg - ldeg` over the monomials of a
/// space's basis.
pub fn degree_profile(space: &FormSpace) -> (u32, u32) {
    let mut max_deg = 0;
    let mut max_gap = 0;
    for b in space.basis() {
        for key in b.terms().keys() {
            max_deg = max_deg.max(key.degree());
            max_gap = max_gap.max(key.degree() - key.linear_degree() as u32);
        }
    }
    (max_deg, max_gap)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds() -> Vec<SpaceKind> {
        use SpaceKind::*;
        vec![
            H,
            HLinear(1),
            HLinear(2),
            P,
            PMinus,
            J,
            JViaChar,
            S,
            SMinus,
            D(Box::new(SMinus)),
            Kappa(Box::new(SMinus)),
            D(Box::new(S)),
            Kappa(Box::new(S)),
            D(Box::new(P)),
            Kappa(Box::new(PMinus)),
            D(Box::new(PMinus)),
            Kappa(Box::new(P)),
            D(Box::new(J)),
            Kappa(Box::new(J)),
        ]
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in kinds().into_iter().chain([SpaceKind::QMinus]) {
            assert_eq!(kind.to_string().parse::<SpaceKind>().unwrap(), kind);
        }
        assert_eq!("sminus".parse::<SpaceKind>().unwrap(), SpaceKind::SMinus);
        assert!("T".parse::<SpaceKind>().is_err());
    }

    #[test]
    fn basis_matches_formula_small() {
        for n in 1..=3 {
            for k in 0..=n {
                for r in 0..=3 {
                    for kind in kinds() {
                        let s = generate_space(&kind, n, k, r).unwrap();
                        let f = dim_formula(&kind, n, k, r).unwrap();
                        assert_eq!(s.dim() as i64, f, "{kind} n={n} k={k} r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn examples() {
        assert_eq!(generate_space(&SpaceKind::SMinus, 2, 1, 2).unwrap().dim(), 10);
        assert_eq!(dim_formula(&SpaceKind::SMinus, 3, 1, 2).unwrap(), 36);
        assert_eq!(dim_formula(&SpaceKind::SMinus, 4, 2, 3).unwrap(), 216);
        assert_eq!(dim_formula(&SpaceKind::J, 2, 0, 2).unwrap(), 2);
        assert_eq!(dim_formula(&SpaceKind::QMinus, 3, 2, 1).unwrap(), 6);
        assert_eq!(closed_form_dim(2, 1, 1).unwrap(), 4);
        assert_eq!(closed_form_dim(2, 1, 3).unwrap(), 17);
        assert_eq!(closed_form_dim(3, 1, 2).unwrap(), 36);
        assert!(generate_space(&SpaceKind::QMinus, 3, 2, 1).is_err());
        assert!(generate_space(&SpaceKind::P, 2, 3, 1).is_err());
        for r in 1..=5 {
            assert!(generate_space(&SpaceKind::J, 2, 1, r).unwrap().is_zero());
        }
    }

    #[test]
    fn s_at_degree_zero() {
        assert_eq!(generate_space(&SpaceKind::S, 2, 1, 0).unwrap().dim(), 3);
        assert_eq!(dim_formula(&SpaceKind::S, 2, 1, 0).unwrap(), 3);
        assert_eq!(generate_space(&SpaceKind::S, 3, 0, 0).unwrap().dim(), 1);
    }

    #[test]
    fn h_linear_counts_match_brute_force() {
        for n in 1..=4 {
            for k in 0..=n {
                for r in 0..=5 {
                    for l in 0..=3 {
                        let brute = monomial_keys(n, k, r..=r)
                            .iter()
                            .filter(|t| t.linear_degree() >= l)
                            .count() as i64;
                        assert_eq!(dim_h_linear(n as i64, k as i64, r, l as i64), brute, "n={n} k={k} r={r} l={l}");
                    }
                }
            }
        }
    }

    #[test]
    fn j_routes_agree() {
        for n in 1..=3 {
            for k in 0..=n {
                for r in 1..=5 {
                    let a = generate_space(&SpaceKind::J, n, k, r).unwrap();
                    let b = generate_space(&SpaceKind::JViaChar, n, k, r).unwrap();
                    assert_eq!(a, b, "n={n} k={k} r={r}");
                }
            }
        }
    }

    #[test]
    fn sminus_routes_agree() {
        for n in 1..=3 {
            for k in 0..=n {
                for r in 1..=4 {
                    let a = generate_space(&SpaceKind::SMinus, n, k, r).unwrap();
                    assert_eq!(a, sminus_by_decomposition(n, k, r).unwrap(), "n={n} k={k} r={r}");
                }
            }
        }
    }

    #[test]
    fn serendipity_degree_property() {
        for n in 1..=3 {
            for k in 0..=n {
                for r in 1..=4 {
                    let s = generate_space(&SpaceKind::S, n, k, r).unwrap();
                    let delta = u32::from(k == 0);
                    let (deg, gap) = degree_profile(&s);
                    assert!(deg <= (r as u32 + (n - k) as u32).saturating_sub(delta));
                    assert!(gap <= r as u32 + 1 - delta);
                }
            }
        }
    }

    #[test]
    fn kappa_lowers_serendipity_order() {
        for n in 1..=3 {
            for k in 1..=n {
                for r in 1..=4 {
                    let img = generate_space(&SpaceKind::S, n, k, r - 1).unwrap().image(&FormOp::Kappa);
                    let target = generate_space(&SpaceKind::S, n, k - 1, r).unwrap();
                    assert!(img.is_subspace_of(&target).unwrap(), "n={n} k={k} r={r}");
                }
            }
        }
    }

    #[test]
    fn homogeneous_splits_into_kappa_and_d_parts() {
        for n in 1..=3 {
            for k in 0..=n {
                for r in 0..=4 {
                    let h = generate_space(&SpaceKind::H, n, k, r).unwrap();
                    let kh = generate_space(&SpaceKind::Kappa(Box::new(SpaceKind::H)), n, k, r - 1).unwrap();
                    let dh = generate_space(&SpaceKind::D(Box::new(SpaceKind::H)), n, k, r + 1).unwrap();
                    if r + k as i64 > 0 {
                        assert!(kh.is_direct(&dh).unwrap());
                        assert_eq!(kh.sum(&dh).unwrap(), h, "n={n} k={k} r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn closed_forms_agree_with_general_formula() {
        for n in 2..=3 {
            for k in 0..=n {
                for r in 1..=50 {
                    assert_eq!(
                        closed_form_dim(n, k, r).unwrap(),
                        dim_formula(&SpaceKind::SMinus, n, k, r).unwrap(),
                        "n={n} k={k} r={r}"
                    );
                }
            }
        }
        assert!(closed_form_dim(4, 1, 1).is_err());
    }

    #[test]
    fn j_vanishes_in_top_two_orders() {
        for n in 1..=5 {
            for r in 1..=20 {
                assert_eq!(dim_formula(&SpaceKind::J, n, n, r).unwrap(), 0);
                assert_eq!(dim_formula(&SpaceKind::J, n, n - 1, r).unwrap(), 0);
            }
        }
    }
}
