//! Command-line front end.
//!
//! Exit codes: 0 success, 1 input or parse error, 2 invalid lattice,
//! 3 internal invariant violation.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::classify::{count_formula, enumerate_ising, record_at, ClassificationReport};
use crate::error::{Error, Result};
use crate::griess::{GriessAlgebra, GriessBasis, GriessElement};
use crate::ising::{check_l4e_fixed, check_signed_permutation, is_ising};
use crate::lattice::{find_sqrt2e8, preset, preset_names, IntegralLattice, LatticeSpec};

#[derive(Parser, Debug)]
#[command(name = "isingvec", version, about = "Enumerate and verify Ising vectors of V_L^+ for rootless even lattices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, short, global = true)]
    pub verbose: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Built-in lattice name (see `presets`).
    #[arg(long)]
    pub preset: Option<String>,
    /// Lattice file `{"name": ..., "gram": [[...]]}`.
    #[arg(long)]
    pub gram: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the built-in lattices.
    Presets,
    /// Check the lattice and print dim B.
    Validate(Input),
    /// Print all vectors of a given norm.
    Shell {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        norm: i64,
    },
    /// Print all sublattices isometric to √2E8.
    E8search(Input),
    /// Full classification report.
    Enumerate(Input),
    /// The counting formula only.
    Count(Input),
    /// Re-run every check on a stored report.
    Verify {
        #[arg(long)]
        report: PathBuf,
    },
    /// τ-matrix and eigenspace dimensions of one record.
    Tau {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        record: usize,
    },
}

/// Parses `args` and runs the command; returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    0
                }
                _ => 1,
            };
        }
    };
    if cli.verbose {
        let _ = env_logger::Builder::new().filter_level(log::LevelFilter::Info).target(env_logger::Target::Stderr).try_init();
    }
    let pool = match cli.jobs {
        Some(0) => {
            let _ = writeln!(stderr, "error: --jobs must be positive");
            return 1;
        }
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    };
    let result = pool.install(|| dispatch(&cli));
    let (text, code) = match result {
        Ok(out) => out,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &text).map_err(|e| e.to_string()),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return 1;
    }
    if code != 0 {
        let _ = writeln!(stderr, "error: invariant violations detected");
    }
    code
}

fn load_lattice(input: &Input) -> Result<IntegralLattice> {
    match (&input.preset, &input.gram) {
        (Some(name), None) => preset(name),
        (None, Some(path)) => IntegralLattice::from_spec(read_json::<LatticeSpec>(path)?),
        _ => Err(Error::Input("exactly one of --preset or --gram is required".into())),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

fn tsv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join("\t");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join("\t"));
        out.push('\n');
    }
    out
}

fn coords(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

type Output = (String, i32);

fn dispatch(cli: &Cli) -> Result<Output> {
    let start = Instant::now();
    let out = match &cli.command {
        Command::Presets => presets(cli.format),
        Command::Validate(input) => validate(cli.format, input),
        Command::Shell { input, norm } => shell(cli.format, input, *norm),
        Command::E8search(input) => e8search(cli.format, input),
        Command::Enumerate(input) => enumerate(cli.format, input),
        Command::Count(input) => count(cli.format, input),
        Command::Verify { report } => verify(cli.format, report),
        Command::Tau { input, record } => tau(cli.format, input, *record),
    };
    log::info!("finished in {:.2?}", start.elapsed());
    out
}

fn presets(format: Format) -> Result<Output> {
    let rows: Vec<(String, usize)> = preset_names()
        .iter()
        .map(|&n| {
            let concrete = if n == "sqrt2A1xN" { "sqrt2A1x2" } else { n };
            (n.to_string(), preset(concrete).map(|l| l.rank()).unwrap_or(0))
        })
        .collect();
    Ok((
        match format {
            Format::Json => to_json(&rows.iter().map(|(n, r)| json!({"name": n, "rank": r})).collect::<Vec<_>>()),
            Format::Tsv => tsv(&["name", "rank"], rows.iter().map(|(n, r)| vec![n.clone(), r.to_string()])),
        },
        0,
    ))
}

fn validate(format: Format, input: &Input) -> Result<Output> {
    let l = load_lattice(input)?;
    l.require_rootless()?;
    let basis = GriessBasis::build(&l)?;
    let v = json!({
        "name": l.name(),
        "rank": l.rank(),
        "even": true,
        "rootless": true,
        "sqrt2_even": l.is_sqrt2_even(),
        "l4_count": 2 * basis.x_dim(),
        "dim_b": basis.dim(),
    });
    Ok((
        match format {
            Format::Json => to_json(&v),
            Format::Tsv => tsv(
                &["name", "rank", "sqrt2_even", "l4_count", "dim_b"],
                [vec![l.name().into(), l.rank().to_string(), l.is_sqrt2_even().to_string(), (2 * basis.x_dim()).to_string(), basis.dim().to_string()]],
            ),
        },
        0,
    ))
}

fn shell(format: Format, input: &Input, norm: i64) -> Result<Output> {
    if norm < 2 || norm % 2 != 0 {
        return Err(Error::Input(format!("--norm must be an even integer >= 2, got {norm}")));
    }
    let l = load_lattice(input)?;
    let vs = l.shell(norm);
    Ok((
        match format {
            Format::Json => to_json(&json!({"name": l.name(), "norm": norm, "count": vs.len(), "vectors": vs})),
            Format::Tsv => tsv(&["vector"], vs.iter().map(|v| vec![coords(v)])),
        },
        0,
    ))
}

fn e8search(format: Format, input: &Input) -> Result<Output> {
    let l = load_lattice(input)?;
    l.require_rootless()?;
    let subs = find_sqrt2e8(&l);
    Ok((
        match format {
            Format::Json => to_json(&json!({
                "name": l.name(),
                "count": subs.len(),
                "sublattices": subs.iter().map(|s| json!({"canonical_id": s.id_string(), "basis": s.generators()})).collect::<Vec<_>>(),
            })),
            Format::Tsv => tsv(
                &["canonical_id", "basis"],
                subs.iter().map(|s| vec![s.id_string(), s.generators().iter().map(|g| coords(g)).collect::<Vec<_>>().join(";")]),
            ),
        },
        0,
    ))
}

fn enumerate(format: Format, input: &Input) -> Result<Output> {
    let l = load_lattice(input)?;
    let c = enumerate_ising(&l)?;
    log::info!("{}: {} records, {} E8 sublattices", l.name(), c.ising_total(), c.sublattices.len());
    let report = c.report();
    let code = if c.violations().is_empty() { 0 } else { 3 };
    Ok((render_report(format, &report), code))
}

fn render_report(format: Format, report: &ClassificationReport) -> String {
    match format {
        Format::Json => to_json(report),
        Format::Tsv => report.to_tsv(),
    }
}

fn count(format: Format, input: &Input) -> Result<Output> {
    let l = load_lattice(input)?;
    let total = count_formula(&l)?;
    let l4 = l.shell(4).len();
    let e8 = (total - l4) / 256;
    Ok((
        match format {
            Format::Json => to_json(&json!({"name": l.name(), "l4_count": l4, "e8_sublattice_count": e8, "ising_total": total})),
            Format::Tsv => tsv(&["name", "l4_count", "e8_sublattice_count", "ising_total"], [vec![l.name().into(), l4.to_string(), e8.to_string(), total.to_string()]]),
        },
        0,
    ))
}

/// Rebuilds the lattice from the stored Gram matrix, re-checks every stored
/// vector independently, re-runs the classification and compares.
fn verify(format: Format, path: &Path) -> Result<Output> {
    let stored: ClassificationReport = read_json(path)?;
    let l = IntegralLattice::validate(stored.gram.clone(), stored.name.clone())?;
    let algebra = GriessAlgebra::new(&l)?;
    let mut problems: Vec<String> = Vec::new();
    let mut vectors: Vec<GriessElement> = Vec::with_capacity(stored.records.len());
    for (i, r) in stored.records.iter().enumerate() {
        let e = GriessElement::from_json(algebra.basis(), &r.coordinates)?;
        let check = is_ising(&algebra, &e);
        match check.spectral {
            Some(s) if check.failure.is_none() => {
                if s.eigen_dims != r.eigen_dims {
                    problems.push(format!("record {i}: eigenspace dimensions differ from stored"));
                }
                if check_signed_permutation(algebra.basis(), &s.tau).is_none() || !check_l4e_fixed(algebra.basis(), &s.tau, &e) {
                    problems.push(format!("record {i}: τ is not a signed permutation fixing the support"));
                }
            }
            _ => problems.push(format!("record {i}: {}", check.failure.map(|f| f.to_string()).unwrap_or_default())),
        }
        vectors.push(e);
    }
    let fresh = enumerate_ising(&l)?;
    let report = fresh.report();
    if report != stored {
        problems.push("stored report differs from a fresh classification".into());
    }
    if fresh.records.iter().zip(&vectors).any(|(a, b)| a.vector != *b) || fresh.records.len() != vectors.len() {
        problems.push("stored vectors differ from the enumerated ones".into());
    }
    problems.extend(fresh.violations().into_iter().map(|v| format!("check failed: {v}")));
    let code = if problems.is_empty() { 0 } else { 3 };
    let v = json!({
        "name": stored.name,
        "records": stored.records.len(),
        "ising_total": report.ising_total,
        "ok": problems.is_empty(),
        "problems": problems,
        "check_summary": report.check_summary,
    });
    Ok((
        match format {
            Format::Json => to_json(&v),
            Format::Tsv => tsv(
                &["check", "passed", "failed"],
                report.check_summary.iter().map(|(k, c)| vec![k.clone(), c.passed.to_string(), c.failed.to_string()]),
            ),
        },
        code,
    ))
}

fn tau(format: Format, input: &Input, index: usize) -> Result<Output> {
    let l = load_lattice(input)?;
    let algebra = GriessAlgebra::new(&l)?;
    let subs = find_sqrt2e8(&l);
    let r = record_at(&algebra, &subs, index)?;
    let code = if r.checks.all() { 0 } else { 3 };
    let entries: Vec<(usize, usize, String)> = {
        let mut e: Vec<_> = r.tau.entries().map(|(i, j, v)| (i, j, v.to_string())).collect();
        e.sort();
        e
    };
    Ok((
        match format {
            Format::Json => to_json(&json!({
                "name": l.name(),
                "index": index,
                "family": r.family,
                "eigen_dims": r.eigen_dims,
                "dim_b": algebra.dim(),
                "tau_is_identity": r.tau.is_identity(),
                "tau": entries,
                "checks": r.checks,
            })),
            Format::Tsv => tsv(&["row", "col", "value"], entries.into_iter().map(|(i, j, v)| vec![i.to_string(), j.to_string(), v])),
        },
        code,
    ))
}
