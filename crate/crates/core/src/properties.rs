//! Executable checks of the structural claims about the trimmed serendipity
//! spaces. Each check returns a report; a failing report names a witness.

use std::fmt;

use serde_json::json;

use crate::error::Result;
use crate::exact::q;
use crate::form::PolyForm;
use crate::linalg::{FormOp, FormSpace};
use crate::spaces::{generate_space, sminus_by_decomposition, SpaceKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Evidence attached to a failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A form that lies outside the space it was claimed to lie in.
    Form { relation: String, form: PolyForm },
    /// Two counts that were claimed to agree.
    Count { what: String, expected: i64, got: i64 },
    /// The check could not be carried out.
    Error(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Form { relation, form } => write!(f, "{relation}: {form}"),
            Witness::Count { what, expected, got } => write!(f, "{what}: expected {expected}, got {got}"),
            Witness::Error(msg) => write!(f, "error: {msg}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: String,
    pub n: usize,
    pub k: Option<usize>,
    pub r: i64,
    pub verdict: Verdict,
    pub detail: String,
    pub witness: Option<Witness>,
}

impl PropertyReport {
    pub fn new(property: &str, n: usize, k: Option<usize>, r: i64) -> Self {
        PropertyReport {
            property: property.to_string(),
            n,
            k,
            r,
            verdict: Verdict::Pass,
            detail: String::new(),
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub(crate) fn fail(&mut self, witness: Witness) {
        if self.witness.is_none() {
            self.witness = Some(witness);
        }
        self.verdict = Verdict::Fail;
    }

    pub(crate) fn note(&mut self, part: impl AsRef<str>) {
        if !self.detail.is_empty() {
            self.detail.push_str("; ");
        }
        self.detail.push_str(part.as_ref());
    }

    /// Records `sub ⊆ sup`, failing with the first basis form outside.
    fn require_subspace(&mut self, relation: &str, sub: &FormSpace, sup: &FormSpace) -> Result<()> {
        if let Some(form) = sub.first_outside(sup)? {
            self.fail(Witness::Form { relation: relation.to_string(), form });
        }
        Ok(())
    }

    fn require_equal(&mut self, relation: &str, a: &FormSpace, b: &FormSpace) -> Result<()> {
        self.require_subspace(relation, a, b)?;
        self.require_subspace(relation, b, a)
    }

    fn require_count(&mut self, what: &str, expected: i64, got: i64) {
        if expected != got {
            self.fail(Witness::Count { what: what.to_string(), expected, got });
        }
    }

    /// One line of newline-delimited JSON.
    pub fn to_json(&self) -> serde_json::Value {
        let mut detail = self.detail.clone();
        if let Some(w) = &self.witness {
            if !detail.is_empty() {
                detail.push_str("; ");
            }
            detail.push_str(&format!("witness {w}"));
        }
        json!({
            "property": self.property,
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "verdict": self.verdict.to_string(),
            "detail": detail,
        })
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.k.map_or_else(|| "-".to_string(), |k| k.to_string());
        write!(f, "{} n={} k={} r={}: {}", self.property, self.n, k, self.r, self.verdict)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness {w}")?;
        }
        Ok(())
    }
}

fn space(kind: SpaceKind, n: usize, k: usize, r: i64) -> Result<FormSpace> {
    generate_space(&kind, n, k, r)
}

/// `S_{r-1}Λᵏ ⊂ S⁻_rΛᵏ ⊂ S_rΛᵏ`, with the second inclusion strict for `k > 0`.
pub fn check_inclusion(n: usize, k: usize, r: i64) -> Result<PropertyReport> {
    let mut rep = PropertyReport::new("inclusion", n, Some(k), r);
    let lower = space(SpaceKind::S, n, k, r - 1)?;
    let mid = space(SpaceKind::SMinus, n, k, r)?;
    let upper = space(SpaceKind::S, n, k, r)?;
    rep.require_subspace("S_{r-1} in S-_r", &lower, &mid)?;
    rep.require_subspace("S-_r in S_r", &mid, &upper)?;
    rep.note(format!("dims {} <= {} <= {}", lower.dim(), mid.dim(), upper.dim()));
    if k == 0 {
        rep.require_count("dim S-_r = dim S_r at k=0", upper.dim() as i64, mid.dim() as i64);
    } else if mid.dim() >= upper.dim() {
        rep.fail(Witness::Count {
            what: "dim S-_r < dim S_r".into(),
            expected: upper.dim() as i64 - 1,
            got: mid.dim() as i64,
        });
    }
    Ok(rep)
}

/// `dS⁻_rΛᵏ ⊆ S⁻_rΛᵏ⁺¹`, and the sharper `dS⁻_rΛᵏ ⊆ S_{r-1}Λᵏ⁺¹`.
pub fn check_subcomplex(n: usize, k: usize, r: i64) -> Result<PropertyReport> {
    let mut rep = PropertyReport::new("subcomplex", n, Some(k), r);
    if k == n {
        rep.note("top order, nothing to map into");
        return Ok(rep);
    }
    let image = space(SpaceKind::SMinus, n, k, r)?.image(&FormOp::D);
    rep.require_subspace("d S-_r^k in S-_r^{k+1}", &image, &space(SpaceKind::SMinus, n, k + 1, r)?)?;
    rep.require_subspace("d S-_r^k in S_{r-1}^{k+1}", &image, &space(SpaceKind::S, n, k + 1, r - 1)?)?;
    rep.note(format!("dim d-image {}", image.dim()));
    Ok(rep)
}

/// The complexes whose exactness is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExactFamily {
    /// `S⁻_rΛ⁰ → S⁻_rΛ¹ → …`
    SMinus,
    /// `S_rΛ⁰ → S_{r-1}Λ¹ → …`
    SDescending,
    /// `P_rΛ⁰ → P_{r-1}Λ¹ → …`
    PDescending,
    /// `P⁻_rΛ⁰ → P⁻_rΛ¹ → …`
    PMinus,
}

impl ExactFamily {
    pub const ALL: [ExactFamily; 4] =
        [ExactFamily::SMinus, ExactFamily::SDescending, ExactFamily::PDescending, ExactFamily::PMinus];

    pub fn name(self) -> &'static str {
        match self {
            ExactFamily::SMinus => "Sminus",
            ExactFamily::SDescending => "S_descending",
            ExactFamily::PDescending => "P_descending",
            ExactFamily::PMinus => "Pminus",
        }
    }

    pub fn space(self, n: usize, k: usize, r: i64) -> Result<FormSpace> {
        let ki = k as i64;
        match self {
            ExactFamily::SMinus => space(SpaceKind::SMinus, n, k, r),
            ExactFamily::SDescending => space(SpaceKind::S, n, k, r - ki),
            ExactFamily::PDescending => space(SpaceKind::P, n, k, r - ki),
            ExactFamily::PMinus => space(SpaceKind::PMinus, n, k, r),
        }
    }
}

/// Exactness of `ℝ → X⁰ → X¹ → … → Xⁿ → 0` by rank accounting, together
/// with `dXᵏ ⊆ Xᵏ⁺¹`.
pub fn check_exactness(n: usize, r: i64, family: ExactFamily) -> Result<PropertyReport> {
    let mut rep = PropertyReport::new(&format!("exactness[{}]", family.name()), n, None, r);
    let spaces: Vec<FormSpace> = (0..=n).map(|k| family.space(n, k, r)).collect::<Result<_>>()?;
    let ranks: Vec<usize> = spaces.iter().map(|s| s.rank_of(&FormOp::D)).collect();
    for k in 0..n {
        let image = spaces[k].image(&FormOp::D);
        rep.require_subspace(&format!("d X^{k} in X^{}", k + 1), &image, &spaces[k + 1])?;
    }
    for k in 0..=n {
        let kernel = spaces[k].dim() - ranks[k];
        let expected = if k == 0 { 1 } else { ranks[k - 1] };
        rep.require_count(&format!("dim ker d on X^{k}"), expected as i64, kernel as i64);
    }
    let dims: Vec<String> = spaces.iter().map(|s| s.dim().to_string()).collect();
    let rk: Vec<String> = ranks.iter().map(ToString::to_string).collect();
    rep.note(format!("dims {}", dims.join(",")));
    rep.note(format!("ranks {}", rk.join(",")));
    Ok(rep)
}

/// Traces of `S⁻_rΛᵏ(ℝⁿ)` to all `2n` facets land in `S⁻_rΛᵏ(ℝⁿ⁻¹)`.
pub fn check_trace(n: usize, k: usize, r: i64) -> Result<PropertyReport> {
    let mut rep = PropertyReport::new("trace", n, Some(k), r);
    let full = space(SpaceKind::SMinus, n, k, r)?;
    let target = if k < n { Some(space(SpaceKind::SMinus, n - 1, k, r)?) } else { None };
    for axis in 0..n {
        for sign in [-1, 1] {
            let op = FormOp::Trace { axis, value: q(sign) };
            let relation = format!("trace to x{}={sign:+}", axis + 1);
            match &target {
                Some(t) => rep.require_subspace(&relation, &full.image(&op), t)?,
                None => {
                    if let Some(form) = full.basis().iter().find(|b| !op.apply(b).is_zero()) {
                        rep.fail(Witness::Form { relation, form: form.clone() });
                    }
                }
            }
        }
    }
    match &target {
        Some(t) => rep.note(format!("{} facets, facet space dim {}", 2 * n, t.dim())),
        None => rep.note("top order vanishes on facets"),
    }
    Ok(rep)
}

fn require_direct_sum(
    rep: &mut PropertyReport,
    name: &str,
    whole: &FormSpace,
    parts: &[(&str, FormSpace)],
) -> Result<()> {
    let refs: Vec<&FormSpace> = parts.iter().map(|(_, s)| s).collect();
    let sum = FormSpace::sum_all(whole.n(), whole.k(), &refs)?;
    rep.require_equal(&format!("{name} = sum of parts"), whole, &sum)?;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if !parts[i].1.is_direct(&parts[j].1)? {
                let meet = parts[i].1.intersect(&parts[j].1)?;
                rep.fail(Witness::Form {
                    relation: format!("{} meets {}", parts[i].0, parts[j].0),
                    form: meet.basis()[0].clone(),
                });
            }
        }
    }
    let dims: Vec<String> = parts.iter().map(|(_, s)| s.dim().to_string()).collect();
    rep.note(format!("{name}: {} = {}", dims.join(" + "), whole.dim()));
    Ok(())
}

/// `S⁻_r = P⁻_r ⊕ J_r ⊕ dJ_rΛᵏ⁻¹` and `S_r = P_r ⊕ J_r ⊕ dJ_{r+1}Λᵏ⁻¹`.
pub fn check_decompositions(n: usize, k: usize, r: i64) -> Result<PropertyReport> {
    let mut rep = PropertyReport::new("decomposition", n, Some(k), r);
    let dj = |rr: i64| -> Result<FormSpace> {
        if k == 0 {
            Ok(FormSpace::zero(n, 0))
        } else {
            Ok(space(SpaceKind::J, n, k - 1, rr)?.image(&FormOp::D))
        }
    };
    let sminus = space(SpaceKind::SMinus, n, k, r)?;
    require_direct_sum(
        &mut rep,
        "S-_r",
        &sminus,
        &[
            ("P-_r", space(SpaceKind::PMinus, n, k, r)?),
            ("J_r", space(SpaceKind::J, n, k, r)?),
            ("dJ_r", dj(r)?),
        ],
    )?;
    let s = space(SpaceKind::S, n, k, r)?;
    require_direct_sum(
        &mut rep,
        "S_r",
        &s,
        &[
            ("P_r", space(SpaceKind::P, n, k, r)?),
            ("J_r", space(SpaceKind::J, n, k, r)?),
            ("dJ_{r+1}", dj(r + 1)?),
        ],
    )?;
    rep.require_equal("S-_r by definition = S-_r by decomposition", &sminus, &sminus_by_decomposition(n, k, r)?)?;
    Ok(rep)
}

/// The identities satisfied by the `J` spaces.
pub fn check_j_identities(n: usize, k: usize, r: i64) -> Result<PropertyReport> {
    let mut rep = PropertyReport::new("J-identities", n, Some(k), r);
    let j = space(SpaceKind::J, n, k, r)?;
    let j_next = space(SpaceKind::J, n, k, r + 1)?;
    let p_next = space(SpaceKind::P, n, k, r + 1)?;
    rep.require_subspace("J_r in P_{r+1} + J_{r+1}", &j, &p_next.sum(&j_next)?)?;
    if k < n {
        let kp = space(SpaceKind::P, n, k + 1, r)?.image(&FormOp::Kappa);
        rep.require_subspace("J_r in kappa P_r + J_{r+1}", &j, &kp.sum(&j_next)?)?;
    }
    let kdj = j.image(&FormOp::D).image(&FormOp::Kappa);
    rep.require_equal("kappa d J_r = J_r", &kdj, &j)?;
    let dkj = j.image(&FormOp::Kappa).image(&FormOp::D);
    if let Some(form) = dkj.basis().first() {
        rep.fail(Witness::Form { relation: "d kappa J_r = 0".into(), form: form.clone() });
    }
    rep.note(format!("dim J_r {}", j.dim()));
    Ok(rep)
}

/// `S⁻_rΛ⁰ = S_rΛ⁰`, `S⁻_rΛⁿ = S_{r-1}Λⁿ`, `S⁻_rΛᵏ + dS_{r+1}Λᵏ⁻¹ = S_rΛᵏ`.
pub fn check_space_identities(n: usize, k: usize, r: i64) -> Result<PropertyReport> {
    let mut rep = PropertyReport::new("space-identities", n, Some(k), r);
    let sminus = space(SpaceKind::SMinus, n, k, r)?;
    let s = space(SpaceKind::S, n, k, r)?;
    if k == 0 {
        rep.require_equal("S-_r = S_r at k=0", &sminus, &s)?;
    }
    if k == n {
        rep.require_equal("S-_r = S_{r-1} at k=n", &sminus, &space(SpaceKind::S, n, k, r - 1)?)?;
    }
    if k >= 1 {
        let ds = space(SpaceKind::S, n, k - 1, r + 1)?.image(&FormOp::D);
        rep.require_equal("S-_r + d S_{r+1} = S_r", &sminus.sum(&ds)?, &s)?;
    }
    rep.note(format!("dim S-_r {}, dim S_r {}", sminus.dim(), s.dim()));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_pass() {
        assert!(check_inclusion(2, 1, 2).unwrap().passed());
        assert!(check_inclusion(3, 0, 2).unwrap().passed());
        assert!(check_subcomplex(2, 0, 3).unwrap().passed());
        assert!(check_subcomplex(3, 2, 2).unwrap().passed());
        assert!(check_trace(3, 1, 2).unwrap().passed());
        assert!(check_trace(3, 3, 2).unwrap().passed());
        assert!(check_j_identities(2, 0, 2).unwrap().passed());
        assert!(check_j_identities(3, 1, 2).unwrap().passed());
        assert!(check_space_identities(3, 1, 2).unwrap().passed());
    }

    #[test]
    fn exactness_ledgers() {
        let rep = check_exactness(2, 2, ExactFamily::SMinus).unwrap();
        assert!(rep.passed());
        assert!(rep.detail.contains("dims 8,10,3"), "{}", rep.detail);
        let rep = check_exactness(3, 1, ExactFamily::SMinus).unwrap();
        assert!(rep.detail.contains("dims 8,12,6,1"), "{}", rep.detail);
        assert!(check_exactness(2, 3, ExactFamily::PDescending).unwrap().passed());
    }

    #[test]
    fn decomposition_dims() {
        let rep = check_decompositions(2, 1, 2).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(rep.detail.contains("S-_r: 8 + 0 + 2 = 10"), "{}", rep.detail);
        let rep = check_decompositions(3, 1, 1).unwrap();
        assert!(rep.detail.contains("S-_r: 6 + 2 + 4 = 12"), "{}", rep.detail);
    }

    #[test]
    fn failing_relation_carries_witness() {
        let mut rep = PropertyReport::new("probe", 2, Some(1), 1);
        let big = space(SpaceKind::P, 2, 1, 1).unwrap();
        let small = space(SpaceKind::P, 2, 1, 0).unwrap();
        rep.require_subspace("P_1 in P_0", &big, &small).unwrap();
        assert_eq!(rep.verdict, Verdict::Fail);
        assert!(matches!(rep.witness, Some(Witness::Form { .. })));
        assert_eq!(rep.to_json()["verdict"], "fail");
    }

    #[test]
    fn reports_are_deterministic() {
        let a = check_decompositions(3, 2, 2).unwrap().to_json().to_string();
        let b = check_decompositions(3, 2, 2).unwrap().to_json().to_string();
        assert_eq!(a, b);
    }
}
