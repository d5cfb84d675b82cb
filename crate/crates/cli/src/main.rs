//! `equilex` command-line frontend.
//!
//! Exit codes: 0 success or pass, 1 verification failure, 2 usage or input
//! error, 3 domain or range error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use equilex::document::PointSetDocument;
use equilex::hadamard::{sylvester, HadamardMatrix};
use equilex::lp_core::scale_set;
use equilex::search::{run_search, SearchConfig};
use equilex::verify::{check_equilateral, EquilateralReport};
use equilex::{bounds, certify, construct, Error, LpSpace, PointSet};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "equilex", version, about = "Equilateral sets in l_p^d: construct, verify, certify, bound, search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an equilateral set and write it as a point-set document.
    Construct {
        #[arg(value_enum)]
        kind: Construction,
        #[arg(long)]
        p: f64,
        /// Target dimension (simplex, theorem2).
        #[arg(long)]
        d: Option<usize>,
        /// Sylvester order 2^n for the Hadamard lift.
        #[arg(long)]
        hadamard_order: Option<usize>,
        /// Read the Hadamard matrix for the lift from a text file instead.
        #[arg(long, conflicts_with = "hadamard_order")]
        hadamard_file: Option<PathBuf>,
        /// Rescale to common distance 1.
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the points as headerless CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Check that a point set is equilateral (and optionally on the unit sphere).
    Verify {
        file: PathBuf,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        sphere: bool,
    },
    /// Rank certificate of the polynomial family for an even integer p.
    Certify {
        file: PathBuf,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = certify::DEFAULT_SVD_TOL)]
        svd_tol: f64,
    },
    /// Known bounds on the largest equilateral set in l_p^d.
    Bounds {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Random-restart energy minimization for an n-point equilateral set.
    Search {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_iters: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Construction {
    Simplex,
    Prop2,
    Theorem2,
    Theorem3,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidExponent(_)
            | Error::InvalidDimension(_)
            | Error::NonPositiveScale(_)
            | Error::OutOfRange { .. }
            | Error::DimensionTooSmall { .. }
            | Error::HadamardTooLarge { .. }
            | Error::HadamardOrder(_) => EXIT_DOMAIN,
            Error::Validation(_) | Error::Degenerate { .. } | Error::TooFewPoints { .. } => EXIT_FAIL,
            Error::DimensionMismatch { .. } | Error::Parse(_) | Error::Io(_) | Error::Json(_) => EXIT_USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

type CmdResult = Result<u8, Failure>;

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable output"));
}

fn require_d(d: Option<usize>, kind: &str) -> Result<usize, Failure> {
    d.ok_or_else(|| Failure::usage(format!("construct {kind} requires --d")))
}

fn load_hadamard(order: Option<usize>, file: Option<&Path>) -> Result<HadamardMatrix, Failure> {
    if let Some(path) = file {
        let text = fs::read_to_string(path).map_err(Error::from)?;
        return Ok(HadamardMatrix::parse(&text)?);
    }
    let order = order.ok_or_else(|| Failure::usage("construct prop2 requires --hadamard-order or --hadamard-file"))?;
    if !order.is_power_of_two() || order < 2 {
        return Err(Failure {
            code: EXIT_DOMAIN,
            message: format!(
                "--hadamard-order {order} is not a power of two >= 2; supply other orders with --hadamard-file"
            ),
        });
    }
    Ok(sylvester(order.trailing_zeros())?)
}

#[allow(clippy::too_many_arguments)]
fn cmd_construct(
    kind: Construction,
    p: f64,
    d: Option<usize>,
    hadamard_order: Option<usize>,
    hadamard_file: Option<&Path>,
    normalize: bool,
    out: Option<&Path>,
    csv: Option<&Path>,
) -> CmdResult {
    let (set, mut provenance) = match kind {
        Construction::Simplex => {
            let d = require_d(d, "simplex")?;
            (construct::standard_simplex(p, d)?, json!({"construction": "simplex", "p": p, "d": d}))
        }
        Construction::Prop2 => {
            let h = load_hadamard(hadamard_order, hadamard_file)?;
            let set = construct::prop2_lift(p, &h)?;
            (set, json!({"construction": "prop2", "p": p, "hadamard_order": h.order()}))
        }
        Construction::Theorem2 => {
            let d = require_d(d, "theorem2")?;
            let k = bounds::k_of_p(p)?;
            (
                construct::theorem2(p, d)?,
                json!({"construction": "theorem2", "p": p, "d": d, "k": k}),
            )
        }
        Construction::Theorem3 => (construct::theorem3(p)?, json!({"construction": "theorem3", "p": p})),
    };
    let set = if normalize {
        let scale = set.claimed_scale().expect("constructions carry their scale");
        provenance["normalized"] = json!(true);
        scale_set(&set, 1.0 / scale)?
    } else {
        set
    };
    let doc = PointSetDocument::from_set(&set, provenance);
    match out {
        Some(path) => {
            doc.write(path)?;
            eprintln!("wrote {} points in l_p^{} to {}", set.len(), set.dim(), path.display());
        }
        None => print_json(&doc),
    }
    if let Some(path) = csv {
        fs::write(path, doc.to_csv()).map_err(Error::from)?;
    }
    Ok(0)
}

fn load_set(path: &Path, p: f64) -> Result<PointSet, Failure> {
    let doc = PointSetDocument::read(path)?;
    if doc.p != p {
        eprintln!(
            "warning: {} was written for p = {}, evaluating with p = {p}",
            path.display(),
            doc.p
        );
    }
    Ok(doc.to_set_with_exponent(p)?)
}

fn cmd_verify(file: &Path, p: f64, tol: f64, sphere: bool) -> CmdResult {
    let set = load_set(file, p)?;
    let report: EquilateralReport = check_equilateral(&set, tol, sphere)?;
    print_json(&report);
    Ok(if report.pass { 0 } else { EXIT_FAIL })
}

fn cmd_certify(file: &Path, p: f64, svd_tol: f64) -> CmdResult {
    let set = load_set(file, p)?;
    let cert = certify::certify_rank(&set, p, svd_tol)?;
    print_json(&cert);
    Ok(if cert.certified { 0 } else { EXIT_FAIL })
}

fn cmd_bounds(p: f64, d: usize, format: Format) -> CmdResult {
    let report = bounds::report(p, d)?;
    match format {
        Format::Json => print_json(&report),
        Format::Table => print!("{}", report.to_table()),
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    p: f64,
    d: usize,
    n: usize,
    restarts: usize,
    seed: u64,
    max_iters: Option<usize>,
    out: Option<&Path>,
) -> CmdResult {
    let mut cfg = SearchConfig::new(LpSpace::new(p, d)?, n, restarts, seed);
    if let Some(m) = max_iters {
        cfg.max_iters = m;
    }
    let result = run_search(&cfg)?;
    for entry in &result.log {
        eprintln!(
            "restart {} energy {:e} iterations {}",
            entry.restart, entry.energy, entry.iterations
        );
    }
    let provenance = json!({
        "construction": "search",
        "p": p, "d": d, "n": n,
        "restarts": restarts, "seed": seed, "max_iters": cfg.max_iters,
        "best_energy": result.best_energy,
        "restart_index": result.restart_index,
    });
    let doc = PointSetDocument::from_set(&result.best_points, provenance);
    if let Some(path) = out {
        doc.write(path)?;
    }
    let summary = json!({
        "best_energy": result.best_energy,
        "restart_index": result.restart_index,
        "iterations_used": result.iterations_used,
        "discovery": result.discovery,
        "verifier_report": result.verifier_report,
        "points": if out.is_none() { serde_json::to_value(&doc).map_err(Error::from)? } else { Value::Null },
    });
    print_json(&summary);
    Ok(0)
}

fn configure_threads() {
    if let Some(n) = std::env::var("EQUILEX_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Construct { kind, p, d, hadamard_order, hadamard_file, normalize, out, csv } => cmd_construct(
            kind,
            p,
            d,
            hadamard_order,
            hadamard_file.as_deref(),
            normalize,
            out.as_deref(),
            csv.as_deref(),
        ),
        Command::Verify { file, p, tol, sphere } => cmd_verify(&file, p, tol, sphere),
        Command::Certify { file, p, svd_tol } => cmd_certify(&file, p, svd_tol),
        Command::Bounds { p, d, format } => cmd_bounds(p, d, format),
        Command::Search { p, d, n, restarts, seed, max_iters, out } => {
            cmd_search(p, d, n, restarts, seed, max_iters, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    configure_threads();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
