//! One pass/fail line per acceptance criterion. Every comparison is exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use trimmed_serendipity::cli::{cmd_dims, cmd_table2, run_suite, table2_row, Format, IntRange, Suite};
use trimmed_serendipity::dof::{dof_count, minimality_identity, unisolvence_check};
use trimmed_serendipity::exact::{q_frac, IndexSet, MultiIndex};
use trimmed_serendipity::form::{PolyForm, TermKey};
use trimmed_serendipity::properties::{check_exactness, ExactFamily};
use trimmed_serendipity::proxy::{check_prop_ac, check_prop_cf};
use trimmed_serendipity::spaces::{dim_formula, generate_space, SpaceKind};

const TABLE1: &str = include_str!("../data/table1.csv");
const TABLE2: &str = include_str!("../data/table2.csv");

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn golden_rows(text: &str) -> Vec<Vec<i64>> {
    csv::Reader::from_reader(text.as_bytes())
        .records()
        .map(|rec| rec.unwrap().iter().map(|v| v.parse().unwrap()).collect())
        .collect()
}

fn table1() -> Outcome {
    let start = Instant::now();
    let out = cmd_dims(&IntRange::new(1, 4), &IntRange::new(1, 7), Format::Csv, false).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let mut checked = 0;
    for row in golden_rows(TABLE1) {
        let (n, k) = (row[0] as usize, row[1] as usize);
        for (i, &want) in row[2..].iter().enumerate() {
            let got = dim_formula(&SpaceKind::SMinus, n, k, i as i64 + 1).map_err(|e| e.to_string())?;
            if got != want {
                return Err(format!("n={n} k={k} r={}: {got} != {want}", i + 1));
            }
            checked += 1;
        }
    }
    if checked != 98 {
        return Err(format!("{checked} values checked, expected 98"));
    }
    if out.text != TABLE1 {
        return Err("CSV output differs from the golden table".into());
    }
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("98/98 values, {elapsed:?}"))
}

fn basis_vs_formula() -> Outcome {
    let mut cells = Vec::new();
    for n in 1..=3usize {
        for r in 1..=5 {
            cells.extend((0..=n).map(|k| (n, k, r)));
        }
    }
    for r in 1..=2 {
        cells.extend((0..=4).map(|k| (4, k, r)));
    }
    let bad: Vec<String> = cells
        .par_iter()
        .filter_map(|&(n, k, r)| {
            let built = generate_space(&SpaceKind::SMinus, n, k, r).map(|s| s.dim() as i64);
            let formula = dim_formula(&SpaceKind::SMinus, n, k, r);
            match (built, formula) {
                (Ok(b), Ok(f)) if b == f => None,
                (b, f) => Some(format!("n={n} k={k} r={r}: basis {b:?} formula {f:?}")),
            }
        })
        .collect();
    match bad.first() {
        None => Ok(format!("{} spaces", cells.len())),
        Some(m) => Err(m.clone()),
    }
}

fn dofs_vs_dim() -> Outcome {
    let mut cells = 0;
    for (ns, rmax) in [(2..=3usize, 20i64), (4..=5, 30)] {
        for n in ns {
            for k in 0..=n {
                for r in 1..=rmax {
                    let dim = dim_formula(&SpaceKind::SMinus, n, k, r).map_err(|e| e.to_string())?;
                    let count = dof_count(n, k, r);
                    if dim != count {
                        return Err(format!("n={n} k={k} r={r}: {count} DOFs, dim {dim}"));
                    }
                    cells += 1;
                }
            }
        }
    }
    Ok(format!("{cells} cases"))
}

fn unisolvence() -> Outcome {
    let mut cells: Vec<(usize, usize, i64)> = Vec::new();
    for (n, rmax) in [(2usize, 4i64), (3, 3)] {
        for k in 0..=n {
            cells.extend((1..=rmax).map(|r| (n, k, r)));
        }
    }
    let results: Vec<Result<(usize, String), String>> = cells
        .par_iter()
        .map(|&(n, k, r)| {
            let u = unisolvence_check(n, k, r).map_err(|e| e.to_string())?;
            if u.square && u.unisolvent && u.interior_injective {
                Ok((u.dim, String::new()))
            } else {
                Err(format!("n={n} k={k} r={r}: {}x{} rank {}", u.functionals, u.dim, u.rank))
            }
        })
        .collect();
    let mut largest = 0;
    for res in results {
        largest = largest.max(res?.0);
    }
    Ok(format!("{} elements, largest {largest}x{largest}", cells.len()))
}

fn exactness() -> Outcome {
    let cells: Vec<(usize, i64, ExactFamily)> = (1..=3usize)
        .flat_map(|n| (1..=4i64).flat_map(move |r| ExactFamily::ALL.map(|f| (n, r, f))))
        .collect();
    let reports: Vec<_> = cells.par_iter().map(|&(n, r, f)| check_exactness(n, r, f)).collect();
    for rep in reports {
        let rep = rep.map_err(|e| e.to_string())?;
        if !rep.passed() {
            return Err(rep.to_string());
        }
    }
    Ok(format!("{} complexes", cells.len()))
}

fn structural_suites() -> Outcome {
    let (n, k, r) = (IntRange::new(1, 3), None, IntRange::new(1, 4));
    let mut total = 0;
    for suite in [Suite::Inclusion, Suite::Subcomplex, Suite::Trace, Suite::Decomposition, Suite::JIdentities, Suite::SpaceIdentities] {
        for rep in run_suite(suite, &n, &k, &r) {
            if !rep.passed() {
                return Err(rep.to_string());
            }
            total += 1;
        }
    }
    Ok(format!("{total} reports"))
}

fn random_form(rng: &mut ChaCha8Rng) -> (PolyForm, u32) {
    let n = rng.gen_range(1..=4);
    let k = rng.gen_range(0..=n);
    let r = rng.gen_range(0..=5u32);
    let terms = rng.gen_range(1..=6);
    let mut form = PolyForm::zero(n, k);
    for _ in 0..terms {
        let mut alpha = vec![0u32; n];
        for _ in 0..r {
            alpha[rng.gen_range(0..n)] += 1;
        }
        let mut axes: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            axes.swap(i, rng.gen_range(0..=i));
        }
        let mut sigma = axes[..k].to_vec();
        sigma.sort_unstable();
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let c = q_frac(sign * rng.gen_range(1..=9), rng.gen_range(1..=7));
        form.add_term(TermKey::new(MultiIndex::new(alpha), IndexSet::new(n, sigma)), c);
    }
    (form, r)
}

fn operator_algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let trials = 1000;
    for i in 0..trials {
        let (w, r) = random_form(&mut rng);
        let dd = w.exterior_derivative().exterior_derivative();
        let kk = w.koszul().koszul();
        // no dκ term on 0-forms
        let lhs = if w.k() == 0 {
            w.exterior_derivative().koszul()
        } else {
            &w.koszul().exterior_derivative() + &w.exterior_derivative().koszul()
        };
        let rhs = w.scale(&q_frac((r as usize + w.k()) as i64, 1));
        if !dd.is_zero() {
            return Err(format!("trial {i}: dd({w}) = {dd}"));
        }
        if !kk.is_zero() {
            return Err(format!("trial {i}: kk({w}) = {kk}"));
        }
        if lhs != rhs {
            return Err(format!("trial {i}: homotopy fails on {w}"));
        }
    }
    Ok(format!("{trials} seeded forms"))
}

fn proxies() -> Outcome {
    let mut reports = Vec::new();
    for r in 1..=3 {
        reports.push(check_prop_ac(r));
        reports.push(check_prop_cf(2, r));
    }
    for r in 1..=2 {
        reports.push(check_prop_cf(3, r));
    }
    let count = reports.len();
    for rep in reports {
        let rep = rep.map_err(|e| e.to_string())?;
        if !rep.passed() {
            return Err(rep.to_string());
        }
    }
    Ok(format!("{count} equivalences"))
}

fn table2() -> Outcome {
    let out = cmd_table2(&IntRange::new(1, 4), Format::Csv).map_err(|e| e.to_string())?;
    let mut sums = 0;
    for row in golden_rows(TABLE2) {
        let v = table2_row(row[0]).map_err(|e| e.to_string())?;
        for (j, pair) in v.chunks(2).enumerate() {
            let want = &row[1 + 3 * j..4 + 3 * j];
            if pair[0] != want[0] || pair[1] != want[1] || pair[0] + pair[1] != want[2] {
                return Err(format!("r={}: {pair:?} vs {want:?}", row[0]));
            }
            sums += 1;
        }
    }
    if sums != 12 {
        return Err(format!("{sums} sums checked, expected 12"));
    }
    if out.text != TABLE2 {
        return Err("CSV output differs from the golden table".into());
    }
    Ok("12/12 sums".into())
}

fn minimality() -> Outcome {
    let mut cells = 0;
    for n in 2..=3usize {
        for k in 0..=n {
            for r in 1..=10 {
                let m = minimality_identity(n, k, r).map_err(|e| e.to_string())?;
                if !m.holds {
                    return Err(format!(
                        "n={n} k={k} r={r}: {} != {} + {}",
                        m.interior_count, m.p_dim, m.dh_dim
                    ));
                }
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} cases"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 dimension table", table1),
        ("2 basis size = formula", basis_vs_formula),
        ("3 DOF count = dimension", dofs_vs_dim),
        ("4 unisolvence", unisolvence),
        ("5 exactness", exactness),
        ("6 inclusion/subcomplex/trace/decomposition/identities", structural_suites),
        ("7 operator algebra", operator_algebra),
        ("8 vector proxy equivalences", proxies),
        ("9 mixed pair counts", table2),
        ("10 minimality identity", minimality),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS criterion {name}: {msg} [{secs:.2}s]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} [{secs:.2}s]");
            }
        }
    }
    println!("acceptance: {}/10 passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
