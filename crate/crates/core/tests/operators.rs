use proptest::prelude::*;

use trimmed_serendipity::exact::{q, q_frac, IndexSet, MultiIndex};
use trimmed_serendipity::form::{PolyForm, TermKey};
use trimmed_serendipity::linalg::FormSpace;
use trimmed_serendipity::spaces::{generate_space, SpaceKind};

/// Homogeneous form of degree `r` on ℝⁿ with terms drawn from `raw`.
fn build(n: usize, k: usize, r: u32, raw: &[(Vec<usize>, Vec<usize>, i64, i64)]) -> PolyForm {
    let mut form = PolyForm::zero(n, k);
    for (bumps, perm, num, den) in raw {
        let mut alpha = vec![0u32; n];
        for b in bumps.iter().take(r as usize) {
            alpha[b % n] += 1;
        }
        let mut axes: Vec<usize> = (0..n).collect();
        for (i, p) in perm.iter().enumerate().take(n.saturating_sub(1)) {
            let j = i + p % (n - i);
            axes.swap(i, j);
        }
        let mut sigma = axes[..k].to_vec();
        sigma.sort_unstable();
        form.add_term(TermKey::new(MultiIndex::new(alpha), IndexSet::new(n, sigma)), q_frac(*num, *den));
    }
    form
}

fn forms_on(n: usize, k: usize) -> impl Strategy<Value = (PolyForm, u32)> {
    (0u32..=5).prop_flat_map(move |r| {
        let term = (
            prop::collection::vec(0usize..4, r as usize),
            prop::collection::vec(0usize..4, 3),
            -20i64..=20,
            1i64..=9,
        );
        prop::collection::vec(term, 1..6).prop_map(move |raw| (build(n, k, r, &raw), r))
    })
}

fn forms() -> impl Strategy<Value = (PolyForm, u32)> {
    (1usize..=4).prop_flat_map(|n| (0..=n).prop_flat_map(move |k| forms_on(n, k)))
}

/// Two forms on the same ℝⁿ whose orders add up to at most n.
fn wedge_pairs() -> impl Strategy<Value = (PolyForm, PolyForm)> {
    (1usize..=4)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, ka)| (Just(n), Just(ka), 0..=n - ka))
        .prop_flat_map(|(n, ka, kb)| (forms_on(n, ka), forms_on(n, kb)))
        .prop_map(|((a, _), (b, _))| (a, b))
}

proptest! {
    #[test]
    fn d_squared_vanishes((w, _) in forms()) {
        prop_assert!(w.exterior_derivative().exterior_derivative().is_zero());
    }

    #[test]
    fn kappa_squared_vanishes((w, _) in forms()) {
        prop_assert!(w.koszul().koszul().is_zero());
    }

    #[test]
    fn homotopy_formula((w, r) in forms()) {
        let kd = w.exterior_derivative().koszul();
        let lhs = if w.k() == 0 { kd } else { &w.koszul().exterior_derivative() + &kd };
        prop_assert_eq!(lhs, w.scale(&q((r as usize + w.k()) as i64)));
    }

    #[test]
    fn d_is_a_derivation((a, b) in wedge_pairs()) {
        let sign = if a.k() % 2 == 0 { q(1) } else { q(-1) };
        let lhs = a.wedge(&b).exterior_derivative();
        let rhs = &a.exterior_derivative().wedge(&b) + &a.wedge(&b.exterior_derivative()).scale(&sign);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trace_commutes_with_d((w, _) in forms(), axis in 0usize..4, v in -3i64..=3) {
        let axis = axis % w.n();
        let value = q(v);
        prop_assert_eq!(
            w.trace(axis, &value).exterior_derivative(),
            w.exterior_derivative().trace(axis, &value)
        );
    }

    #[test]
    fn span_membership((w, r) in forms()) {
        // every homogeneous form lies in H_r and in the span of itself
        let h = generate_space(&SpaceKind::H, w.n(), w.k(), r as i64).unwrap();
        prop_assert!(h.contains(&w).unwrap());
        let own = FormSpace::span(w.n(), w.k(), [w.clone()]).unwrap();
        prop_assert_eq!(own.dim(), usize::from(!w.is_zero()));
    }
}
