//! Command-line front end. `run` parses arguments, writes the requested
//! output and returns the process exit code.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::dof::{dof_breakdown, dof_count, dof_functionals, minimality_identity, unisolvence_check};
use crate::error::{Error, Result};
use crate::properties::{
    check_decompositions, check_exactness, check_inclusion, check_j_identities, check_space_identities,
    check_subcomplex, check_trace, ExactFamily, PropertyReport, Witness,
};
use crate::proxy::{check_prop_ac, check_prop_cf};
use crate::spaces::{dim_formula, generate_space, SpaceKind};

/// Soft limit for commands that build bases.
pub const BASIS_N_LIMIT: usize = 4;
/// Soft limit for formula-only commands.
pub const FORMULA_N_LIMIT: usize = 5;

/// Inclusive integer range written as `a` or `a..b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub start: i64,
    pub end: i64,
}

impl IntRange {
    pub fn new(start: i64, end: i64) -> Self {
        IntRange { start, end }
    }

    pub fn iter(&self) -> RangeInclusive<i64> {
        self.start..=self.end
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("not an integer: {t:?}"));
        let (a, b) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if a > b {
            return Err(format!("empty range {s:?}"));
        }
        Ok(IntRange::new(a, b))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Inclusion,
    Subcomplex,
    Exactness,
    Trace,
    Decomposition,
    JIdentities,
    SpaceIdentities,
    Unisolvence,
    Minimality,
    Proxy,
}

#[derive(Parser, Debug)]
#[command(name = "trimser", version, about = "Exact computations with trimmed serendipity forms on cubes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension table of the trimmed serendipity spaces.
    Dims {
        #[arg(long, default_value = "1..4")]
        n: IntRange,
        #[arg(long, default_value = "1..7")]
        r: IntRange,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<String>,
        /// Also build every basis and compare its size with the formula.
        #[arg(long)]
        verify_basis: bool,
    },
    /// Per-element counts for mixed Poisson pairs on the cube.
    Table2 {
        #[arg(long, default_value = "1..4")]
        r: IntRange,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// Echelon basis of one space.
    Basis {
        #[arg(long, default_value = "Sminus")]
        space: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// Degrees of freedom by face dimension.
    Dofs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<String>,
        /// List every functional.
        #[arg(long)]
        list: bool,
    },
    /// Run a verification suite over a parameter grid.
    Check {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value = "1..3")]
        n: IntRange,
        #[arg(long)]
        k: Option<IntRange>,
        #[arg(long, default_value = "1..3")]
        r: IntRange,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
}

/// Output of a command: its text and whether everything checked out.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn warn_if_large(n_max: i64, limit: usize) {
    if n_max > limit as i64 {
        eprintln!("warning: n={n_max} is above the documented limit n<={limit}; this may be slow");
    }
}

fn require_positive(name: &str, range: &IntRange, min: i64) -> Result<()> {
    if range.start < min {
        return Err(Error::Invalid(format!("--{name} must be at least {min}")));
    }
    Ok(())
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| Error::Invalid(e.to_string()))?;
    for row in rows {
        w.write_record(row).map_err(|e| Error::Invalid(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Invalid(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Invalid(e.to_string()))
}

fn json_lines(values: &[serde_json::Value]) -> String {
    values.iter().map(|v| format!("{v}\n")).collect()
}

pub fn cmd_dims(n: &IntRange, r: &IntRange, format: Format, verify_basis: bool) -> Result<Outcome> {
    require_positive("n", n, 1)?;
    require_positive("r", r, 1)?;
    warn_if_large(n.end, if verify_basis { BASIS_N_LIMIT } else { FORMULA_N_LIMIT });
    let mut rows: Vec<(usize, usize, Vec<i64>)> = Vec::new();
    for nn in n.iter() {
        for k in 0..=nn {
            let dims = r
                .iter()
                .map(|rr| dim_formula(&SpaceKind::SMinus, nn as usize, k as usize, rr))
                .collect::<Result<Vec<_>>>()?;
            rows.push((nn as usize, k as usize, dims));
        }
    }
    let mut ok = true;
    if verify_basis {
        let cells: Vec<(usize, usize, i64, i64)> = rows
            .iter()
            .flat_map(|(nn, k, dims)| r.iter().zip(dims).map(move |(rr, &d)| (*nn, *k, rr, d)))
            .collect();
        let built: Vec<Result<usize>> = cells
            .par_iter()
            .map(|&(nn, k, rr, _)| generate_space(&SpaceKind::SMinus, nn, k, rr).map(|s| s.dim()))
            .collect();
        for (&(nn, k, rr, d), b) in cells.iter().zip(built) {
            let b = b?;
            if b as i64 != d {
                ok = false;
                eprintln!("mismatch n={nn} k={k} r={rr}: formula {d}, basis {b}");
            }
        }
    }
    let r_labels: Vec<String> = r.iter().map(|rr| format!("r{rr}")).collect();
    let text = match format {
        Format::Csv => {
            let mut header = vec!["n", "k"];
            header.extend(r_labels.iter().map(String::as_str));
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|(nn, k, dims)| {
                    let mut row = vec![nn.to_string(), k.to_string()];
                    row.extend(dims.iter().map(ToString::to_string));
                    row
                })
                .collect();
            csv_text(&header, &body)?
        }
        Format::Json => json_lines(
            &rows
                .iter()
                .map(|(nn, k, dims)| {
                    json!({"n": nn, "k": k, "r_values": r.iter().collect::<Vec<_>>(), "dims": dims})
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = String::new();
            let _ = write!(s, "{:>3} {:>3} |", "n", "k");
            for rr in r.iter() {
                let _ = write!(s, " {:>6}", format!("r={rr}"));
            }
            s.push('\n');
            for (nn, k, dims) in &rows {
                let _ = write!(s, "{nn:>3} {k:>3} |");
                for d in dims {
                    let _ = write!(s, " {d:>6}");
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome { text, ok })
}

/// One row of the mixed-pair comparison: `(Q⁻₂, Q⁻₃, S₂, S₃, S⁻₂, S⁻₃)`.
pub fn table2_row(r: i64) -> Result<[i64; 6]> {
    let d = |kind: SpaceKind, k: usize, rr: i64| dim_formula(&kind, 3, k, rr);
    Ok([
        d(SpaceKind::QMinus, 2, r)?,
        d(SpaceKind::QMinus, 3, r)?,
        d(SpaceKind::S, 2, r)?,
        d(SpaceKind::S, 3, r - 1)?,
        d(SpaceKind::SMinus, 2, r)?,
        d(SpaceKind::SMinus, 3, r)?,
    ])
}

pub fn cmd_table2(r: &IntRange, format: Format) -> Result<Outcome> {
    require_positive("r", r, 1)?;
    let rows: Vec<(i64, [i64; 6])> = r.iter().map(|rr| Ok((rr, table2_row(rr)?))).collect::<Result<_>>()?;
    let text = match format {
        Format::Csv => {
            let header = [
                "r", "qminus_2", "qminus_3", "qminus_sum", "s_2", "s_3", "s_sum", "sminus_2", "sminus_3",
                "sminus_sum",
            ];
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|(rr, v)| {
                    let mut row = vec![rr.to_string()];
                    for pair in v.chunks(2) {
                        row.extend([pair[0], pair[1], pair[0] + pair[1]].iter().map(ToString::to_string));
                    }
                    row
                })
                .collect();
            csv_text(&header, &body)?
        }
        Format::Json => json_lines(
            &rows
                .iter()
                .map(|(rr, v)| {
                    json!({
                        "r": rr,
                        "qminus": [v[0], v[1], v[0] + v[1]],
                        "serendipity": [v[2], v[3], v[2] + v[3]],
                        "trimmed": [v[4], v[5], v[4] + v[5]],
                    })
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = String::from("r | Qminus_r^2 + Qminus_r^3 | S_r^2 + S_{r-1}^3 | Sminus_r^2 + Sminus_r^3\n");
            for (rr, v) in &rows {
                let _ = writeln!(
                    s,
                    "{rr} | {}+{}={} | {}+{}={} | {}+{}={}",
                    v[0],
                    v[1],
                    v[0] + v[1],
                    v[2],
                    v[3],
                    v[2] + v[3],
                    v[4],
                    v[5],
                    v[4] + v[5]
                );
            }
            s
        }
    };
    Ok(Outcome { text, ok: true })
}

pub fn cmd_basis(space: &str, n: usize, k: usize, r: i64, format: Format) -> Result<Outcome> {
    let kind: SpaceKind = space.parse()?;
    warn_if_large(n as i64, BASIS_N_LIMIT);
    let s = generate_space(&kind, n, k, r)?;
    let text = match format {
        Format::Text => s.basis().iter().map(|b| format!("{b}\n")).collect(),
        Format::Json => json_lines(
            &s.basis()
                .iter()
                .enumerate()
                .map(|(i, b)| json!({"space": kind.to_string(), "n": n, "k": k, "r": r, "index": i, "form": b.to_json()}))
                .collect::<Vec<_>>(),
        ),
        Format::Csv => csv_text(
            &["index", "form"],
            &s.basis().iter().enumerate().map(|(i, b)| vec![i.to_string(), b.to_string()]).collect::<Vec<_>>(),
        )?,
    };
    Ok(Outcome { text, ok: true })
}

pub fn cmd_dofs(n: usize, k: usize, r: i64, format: Format, list: bool) -> Result<Outcome> {
    if r < 1 {
        return Err(Error::Invalid("--r must be at least 1".into()));
    }
    warn_if_large(n as i64, if list { BASIS_N_LIMIT } else { FORMULA_N_LIMIT });
    let breakdown = dof_breakdown(n, k, r)?;
    let count = dof_count(n, k, r);
    let dim = dim_formula(&SpaceKind::SMinus, n, k, r)?;
    let functionals = if list { dof_functionals(n, k, r)? } else { Vec::new() };
    let text = match format {
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = breakdown
                .iter()
                .map(|c| {
                    vec![
                        c.d.to_string(),
                        c.faces.to_string(),
                        c.p_per_face.to_string(),
                        c.dh_per_face.to_string(),
                        c.total().to_string(),
                    ]
                })
                .collect();
            rows.push(vec!["total".into(), String::new(), String::new(), String::new(), count.to_string()]);
            csv_text(&["d", "faces", "p_per_face", "dh_per_face", "total"], &rows)?
        }
        Format::Json => {
            let mut lines: Vec<serde_json::Value> = breakdown
                .iter()
                .map(|c| {
                    json!({"d": c.d, "faces": c.faces, "p_per_face": c.p_per_face,
                           "dh_per_face": c.dh_per_face, "total": c.total()})
                })
                .collect();
            lines.extend(functionals.iter().map(|phi| {
                json!({"face": phi.face.to_string(), "part": phi.part.to_string(), "weight": phi.weight.to_json()})
            }));
            lines.push(json!({"n": n, "k": k, "r": r, "dof_count": count, "dim": dim}));
            json_lines(&lines)
        }
        Format::Text => {
            let mut s = String::new();
            for c in &breakdown {
                let _ = writeln!(
                    s,
                    "d={}: {} faces x ({} P + {} dH) = {}",
                    c.d,
                    c.faces,
                    c.p_per_face,
                    c.dh_per_face,
                    c.total()
                );
            }
            for phi in &functionals {
                let _ = writeln!(s, "  {} {}: {}", phi.face, phi.part, phi.weight);
            }
            let _ = writeln!(s, "total {count}, dim {dim}");
            s
        }
    };
    Ok(Outcome { text, ok: count == dim })
}

#[derive(Clone, Debug)]
enum Task {
    Cell(Suite, usize, usize, i64),
    Exactness(usize, i64, ExactFamily),
    Ac(i64),
    Cf(usize, i64),
}

fn unisolvence_report(n: usize, k: usize, r: i64) -> Result<PropertyReport> {
    let u = unisolvence_check(n, k, r)?;
    let mut rep = PropertyReport::new("unisolvence", n, Some(k), r);
    rep.note(format!(
        "{}x{} rank {}; trace-free dim {}, interior injective {}",
        u.functionals, u.dim, u.rank, u.trace_free_dim, u.interior_injective
    ));
    if !u.unisolvent {
        rep.fail(Witness::Count { what: "rank of the DOF matrix".into(), expected: u.functionals as i64, got: u.rank as i64 });
    } else if !u.interior_injective {
        rep.fail(Witness::Count {
            what: "rank of interior DOFs on trace-free members".into(),
            expected: u.trace_free_dim as i64,
            got: 0,
        });
    }
    Ok(rep)
}

fn minimality_report(n: usize, k: usize, r: i64) -> Result<PropertyReport> {
    let m = minimality_identity(n, k, r)?;
    let mut rep = PropertyReport::new("minimality", n, Some(k), r);
    rep.note(format!("interior {} = {} + {}", m.interior_count, m.p_dim, m.dh_dim));
    if !m.holds {
        rep.fail(Witness::Count { what: "interior DOF count".into(), expected: m.p_dim + m.dh_dim, got: m.interior_count });
    }
    Ok(rep)
}

fn run_task(task: &Task) -> PropertyReport {
    let (name, n, k, r) = match task {
        Task::Cell(s, n, k, r) => (format!("{s:?}").to_lowercase(), *n, Some(*k), *r),
        Task::Exactness(n, r, f) => (format!("exactness[{}]", f.name()), *n, None, *r),
        Task::Ac(r) => ("proxy[AC]".to_string(), 2, None, *r),
        Task::Cf(n, r) => ("proxy[CF]".to_string(), *n, None, *r),
    };
    let result = match task {
        Task::Cell(suite, n, k, r) => match suite {
            Suite::Inclusion => check_inclusion(*n, *k, *r),
            Suite::Subcomplex => check_subcomplex(*n, *k, *r),
            Suite::Trace => check_trace(*n, *k, *r),
            Suite::Decomposition => check_decompositions(*n, *k, *r),
            Suite::JIdentities => check_j_identities(*n, *k, *r),
            Suite::SpaceIdentities => check_space_identities(*n, *k, *r),
            Suite::Unisolvence => unisolvence_report(*n, *k, *r),
            Suite::Minimality => minimality_report(*n, *k, *r),
            _ => unreachable!("suite {suite:?} is not per-cell"),
        },
        Task::Exactness(n, r, f) => check_exactness(*n, *r, *f),
        Task::Ac(r) => check_prop_ac(*r as u32),
        Task::Cf(n, r) => check_prop_cf(*n, *r as u32),
    };
    result.unwrap_or_else(|e| {
        let mut rep = PropertyReport::new(&name, n, k, r);
        rep.fail(Witness::Error(e.to_string()));
        rep
    })
}

fn plan(suite: Suite, n: &IntRange, k: &Option<IntRange>, r: &IntRange) -> Vec<Task> {
    const CELL_SUITES: [Suite; 8] = [
        Suite::Inclusion,
        Suite::Subcomplex,
        Suite::Trace,
        Suite::Decomposition,
        Suite::JIdentities,
        Suite::SpaceIdentities,
        Suite::Unisolvence,
        Suite::Minimality,
    ];
    let suites: Vec<Suite> = if suite == Suite::All {
        CELL_SUITES.iter().copied().chain([Suite::Exactness, Suite::Proxy]).collect()
    } else {
        vec![suite]
    };
    let mut tasks = Vec::new();
    for s in suites {
        for nn in n.iter() {
            let nn = nn as usize;
            for rr in r.iter() {
                match s {
                    Suite::Exactness => {
                        tasks.extend(ExactFamily::ALL.iter().map(|&f| Task::Exactness(nn, rr, f)));
                    }
                    Suite::Proxy => {
                        if nn == 2 {
                            tasks.push(Task::Ac(rr));
                        }
                        if nn == 2 || nn == 3 {
                            tasks.push(Task::Cf(nn, rr));
                        }
                    }
                    _ => {
                        let ks: Vec<i64> = match k {
                            Some(kr) => kr.iter().filter(|&kk| kk >= 0 && kk as usize <= nn).collect(),
                            None => (0..=nn as i64).collect(),
                        };
                        tasks.extend(ks.into_iter().map(|kk| Task::Cell(s, nn, kk as usize, rr)));
                    }
                }
            }
        }
    }
    tasks
}

/// Runs a suite over the grid, in parallel, reporting in grid order.
pub fn run_suite(suite: Suite, n: &IntRange, k: &Option<IntRange>, r: &IntRange) -> Vec<PropertyReport> {
    plan(suite, n, k, r).par_iter().map(run_task).collect()
}

pub fn cmd_check(suite: Suite, n: &IntRange, k: &Option<IntRange>, r: &IntRange, format: Format) -> Result<Outcome> {
    require_positive("n", n, 1)?;
    require_positive("r", r, 1)?;
    warn_if_large(n.end, BASIS_N_LIMIT);
    let reports = run_suite(suite, n, k, r);
    let ok = reports.iter().all(PropertyReport::passed);
    let text = match format {
        Format::Text => reports.iter().map(|rep| format!("{rep}\n")).collect(),
        Format::Json => json_lines(&reports.iter().map(PropertyReport::to_json).collect::<Vec<_>>()),
        Format::Csv => csv_text(
            &["property", "n", "k", "r", "verdict", "detail"],
            &reports
                .iter()
                .map(|rep| {
                    let j = rep.to_json();
                    vec![
                        rep.property.clone(),
                        rep.n.to_string(),
                        rep.k.map(|k| k.to_string()).unwrap_or_default(),
                        rep.r.to_string(),
                        rep.verdict.to_string(),
                        j["detail"].as_str().unwrap_or_default().to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        )?,
    };
    Ok(Outcome { text, ok })
}

fn execute(cli: &Cli) -> Result<(Outcome, Option<String>)> {
    Ok(match &cli.command {
        Command::Dims { n, r, format, out, verify_basis } => (cmd_dims(n, r, *format, *verify_basis)?, out.clone()),
        Command::Table2 { r, format, out } => (cmd_table2(r, *format)?, out.clone()),
        Command::Basis { space, n, k, r, format, out } => (cmd_basis(space, *n, *k, *r, *format)?, out.clone()),
        Command::Dofs { n, k, r, format, out, list } => (cmd_dofs(*n, *k, *r, *format, *list)?, out.clone()),
        Command::Check { suite, n, k, r, format, out } => (cmd_check(*suite, n, k, r, *format)?, out.clone()),
    })
}

/// Parses `args` (including the program name) and runs the command.
/// Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok((outcome, out)) => {
            let written = match out {
                Some(path) => fs::write(&path, &outcome.text),
                None => io::stdout().lock().write_all(outcome.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return 2;
            }
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
