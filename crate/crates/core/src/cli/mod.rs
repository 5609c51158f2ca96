//! Command-line front end: named suites, one-off computations and
//! certificate verification. Output JSON has sorted keys and integers as
//! decimal strings.
//!
//! Exit codes: 0 when everything passes, 1 when a check fails, 2 on a usage
//! error, 3 when an input file does not parse.

pub mod suites;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::checkers::{check_projective_cofibration, CheckReport};
use crate::engine::serial::{digest, Serial};
use crate::engine::{Engine, FinSet};
use crate::error::Error;
use crate::filtration::{decompose_composite_power, decompose_kappa, FiltrationCertificate};
use crate::pp::{coinvariant_arrow, pp_power, MultiIndex};
use crate::sset::homology::homology_table;
use crate::sset::text::parse_document;
use crate::sset::{sset_homology, SSet, SimplicialMap};

pub use suites::{run_named, EngineKind, SuiteConfig, SUITES};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "pplab", version, about = "Pushout products, symmetric powers and their checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a named verification suite.
    Run(RunArgs),
    /// Compute one object from an input file.
    Compute(ComputeArgs),
    /// Replay a filtration certificate written by `compute certificate`.
    Verify(VerifyArgs),
    /// List the suite names.
    Suites,
}

#[derive(Debug, clap::Args)]
pub struct RunArgs {
    #[arg(long)]
    pub suite: String,
    #[arg(long, value_enum)]
    pub engine: Option<EngineKind>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long)]
    pub max_cells: Option<usize>,
    /// Comma-separated multi-index, e.g. `2,1`.
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub upto: Option<usize>,
    /// Random instances per parameter choice.
    #[arg(long)]
    pub count: Option<usize>,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print the JSON report instead of the summary.
    #[arg(long)]
    pub json: bool,
    /// Record wall-clock milliseconds per instance. Output is then not reproducible.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComputeKind {
    PpPower,
    Homology,
    Coinv,
    Certificate,
}

#[derive(Debug, clap::Args)]
pub struct ComputeArgs {
    #[arg(value_enum)]
    pub what: ComputeKind,
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = EngineKind::Sset)]
    pub engine: EngineKind,
    #[arg(long, default_value = "2")]
    pub n: String,
    #[arg(long, default_value_t = 3)]
    pub upto: usize,
    /// Build the certificate for the map into the κ-stage instead of the composite power.
    #[arg(long)]
    pub kappa: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    pub certificate: PathBuf,
    #[arg(long, value_enum, default_value_t = EngineKind::Sset)]
    pub engine: EngineKind,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Library(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Library(_) => EXIT_FAIL,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Library(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => CliError::Parse(e.to_string()),
            Error::InvalidArgument(m) => CliError::Usage(m),
            other => CliError::Library(other),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// The document written by `run`.
pub fn report_document(cfg: &SuiteConfig, report: &CheckReport) -> Value {
    json!({
        "tool": "pplab",
        "version": env!("CARGO_PKG_VERSION"),
        "config": cfg.to_json(),
        "reports": [serde_json::to_value(report).expect("reports serialize")],
        "pass": report.passed(),
    })
}

pub fn run_suite(cfg: &SuiteConfig) -> CliResult<Value> {
    if !SUITES.contains(&cfg.suite.as_str()) {
        return Err(CliError::Usage(format!("unknown suite `{}`; known suites: {}", cfg.suite, SUITES.join(", "))));
    }
    if cfg.max_cells == Some(0) || cfg.count == Some(0) {
        return Err(CliError::Usage("bounds must be positive".into()));
    }
    let report = run_named(cfg)?;
    Ok(report_document(cfg, &report))
}

fn parse_n(text: &str) -> CliResult<MultiIndex> {
    MultiIndex::parse(text).map_err(|e| CliError::Usage(format!("--n: {e}")))
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn read_json(path: &Path) -> CliResult<Value> {
    serde_json::from_str(&read(path)?).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn sset_maps(path: &Path) -> CliResult<Vec<SimplicialMap>> {
    let doc = parse_document(&read(path)?)?;
    Ok(doc.order.iter().filter_map(|n| doc.maps.get(n).cloned()).collect())
}

fn first_sset_map(path: &Path) -> CliResult<SimplicialMap> {
    sset_maps(path)?.into_iter().next().ok_or_else(|| CliError::Parse(format!("{}: no map in file", path.display())))
}

fn finset_map(v: &Value) -> CliResult<crate::engine::FinSetMap> {
    FinSet.mor_from_json(v).map_err(|e| CliError::Parse(e.to_string()))
}

fn pp_power_json<E: Engine + Serial>(e: &E, f: &E::Mor, n: usize) -> CliResult<Value> {
    let (p, _) = pp_power(e, f, n)?;
    let arrow = e.mor_json(&p.arrow);
    Ok(json!({
        "n": n.to_string(),
        "domain": e.obj_json(&e.dom(&p.arrow)),
        "codomain": e.obj_json(&e.cod(&p.arrow)),
        "mono": e.is_mono(&p.arrow),
        "digest": digest(&arrow),
    }))
}

fn coinv_json<E: Engine + Serial>(e: &E, f: &E::Mor, n: usize) -> CliResult<Value> {
    let (_, eq) = pp_power(e, f, n)?;
    let c = coinvariant_arrow(e, &eq)?;
    Ok(json!({
        "n": n.to_string(),
        "arrow": e.mor_json(&c.arrow),
        "domain": e.obj_json(&e.dom(&c.arrow)),
        "codomain": e.obj_json(&e.cod(&c.arrow)),
        "mono": e.is_mono(&c.arrow),
    }))
}

fn certificate_json<E: Engine + Serial>(e: &E, v0: &[E::Mor], v1: &[E::Mor], n: &MultiIndex, kappa: bool) -> CliResult<Value> {
    let c = if kappa { decompose_kappa(e, v0, v1, n)? } else { decompose_composite_power(e, v0, v1, n)? };
    Ok(c.to_json(e))
}

fn single_block(n: &MultiIndex) -> CliResult<usize> {
    match n.parts() {
        [k] => Ok(*k),
        _ => Err(CliError::Usage("this computation takes a single number for --n".into())),
    }
}

pub fn compute(args: &ComputeArgs) -> CliResult<Value> {
    let n = parse_n(&args.n)?;
    match (args.what, args.engine) {
        (_, EngineKind::Chain) => Err(CliError::Usage("compute reads sset or finset inputs".into())),
        (ComputeKind::Homology, EngineKind::Sset) => {
            let doc = parse_document(&read(&args.input)?)?;
            let x = doc.first_set().ok_or_else(|| CliError::Parse("no simplicial set in file".into()))?;
            // above the top dimension everything vanishes
            let upto = args.upto.min(x.dim());
            let h = sset_homology(x, upto)?;
            Ok(json!({
                "upto": upto.to_string(),
                "table": homology_table(&h),
                "groups": h.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            }))
        }
        (ComputeKind::Homology, EngineKind::Finset) => Err(CliError::Usage("homology needs --engine sset".into())),
        (ComputeKind::PpPower, EngineKind::Sset) => {
            let f = first_sset_map(&args.input)?;
            let k = single_block(&n)?;
            let mut out = pp_power_json(&SSet, &f, k)?;
            let v = check_projective_cofibration(&f, k)?;
            out["fixed cell"] = json!(v.detail("fixed cell"));
            out["fixed cell vertices"] = json!(v.detail("fixed cell vertices"));
            Ok(out)
        }
        (ComputeKind::PpPower, EngineKind::Finset) => pp_power_json(&FinSet, &finset_map(&read_json(&args.input)?)?, single_block(&n)?),
        (ComputeKind::Coinv, EngineKind::Sset) => coinv_json(&SSet, &first_sset_map(&args.input)?, single_block(&n)?),
        (ComputeKind::Coinv, EngineKind::Finset) => coinv_json(&FinSet, &finset_map(&read_json(&args.input)?)?, single_block(&n)?),
        (ComputeKind::Certificate, EngineKind::Sset) => {
            // maps alternate v0, v1 block by block
            let maps = sset_maps(&args.input)?;
            if maps.len() != 2 * n.len() {
                return Err(CliError::Parse(format!("expected {} maps for n = {n}, found {}", 2 * n.len(), maps.len())));
            }
            let v0: Vec<_> = maps.iter().step_by(2).cloned().collect();
            let v1: Vec<_> = maps.iter().skip(1).step_by(2).cloned().collect();
            certificate_json(&SSet, &v0, &v1, &n, args.kappa)
        }
        (ComputeKind::Certificate, EngineKind::Finset) => {
            let v = read_json(&args.input)?;
            let list = |key: &str| -> CliResult<Vec<_>> {
                v[key]
                    .as_array()
                    .ok_or_else(|| CliError::Parse(format!("`{key}` must be a list of maps")))?
                    .iter()
                    .map(finset_map)
                    .collect()
            };
            certificate_json(&FinSet, &list("v0")?, &list("v1")?, &n, args.kappa)
        }
    }
}

pub fn verify(args: &VerifyArgs) -> CliResult<Value> {
    let v = read_json(&args.certificate)?;
    let verdict = match args.engine {
        EngineKind::Sset => FiltrationCertificate::verify_json(&SSet, &v)?,
        EngineKind::Finset => FiltrationCertificate::verify_json(&FinSet, &v)?,
        EngineKind::Chain => return Err(CliError::Usage("certificates are written for sset or finset".into())),
    };
    Ok(serde_json::to_value(verdict).expect("verdicts serialize"))
}

fn write_out(path: &Option<PathBuf>, doc: &Value) -> CliResult<()> {
    if let Some(p) = path {
        fs::write(p, format!("{}\n", pretty(doc))).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

pub fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn summary(doc: &Value) -> String {
    let mut out = String::new();
    for report in doc["reports"].as_array().into_iter().flatten() {
        for inst in report["instances"].as_array().into_iter().flatten() {
            let verdicts = inst["verdicts"].as_array().cloned().unwrap_or_default();
            let pass = verdicts.iter().all(|v| v["pass"] == json!(true));
            out.push_str(&format!("{} {}\n", if pass { "PASS" } else { "FAIL" }, inst["key"].as_str().unwrap_or("")));
            for v in verdicts.iter().filter(|v| v["pass"] != json!(true)) {
                out.push_str(&format!("    {}\n", v["claim"].as_str().unwrap_or("")));
                for w in v["witnesses"].as_array().into_iter().flatten() {
                    out.push_str(&format!("      {}: {}\n", w["label"].as_str().unwrap_or(""), w["detail"].as_str().unwrap_or("")));
                }
            }
        }
    }
    out.push_str(if doc["pass"] == json!(true) { "suite passed\n" } else { "suite FAILED\n" });
    out
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> CliResult<i32> {
    let emit = |stdout: &mut dyn Write, text: &str| {
        let _ = stdout.write_all(text.as_bytes());
    };
    match cli.command {
        Command::Suites => {
            emit(stdout, &format!("{}\n", SUITES.join("\n")));
            Ok(EXIT_PASS)
        }
        Command::Run(a) => {
            let cfg = SuiteConfig {
                suite: a.suite,
                engine: a.engine,
                seed: a.seed,
                max_cells: a.max_cells,
                n: a.n.as_deref().map(parse_n).transpose()?,
                upto: a.upto,
                count: a.count,
                timings: a.timings,
            };
            let doc = run_suite(&cfg)?;
            write_out(&a.out, &doc)?;
            emit(stdout, &if a.json { format!("{}\n", pretty(&doc)) } else { summary(&doc) });
            Ok(if doc["pass"] == json!(true) { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Compute(a) => {
            let doc = compute(&a)?;
            write_out(&a.out, &doc)?;
            if a.out.is_none() {
                emit(stdout, &format!("{}\n", pretty(&doc)));
            }
            Ok(EXIT_PASS)
        }
        Command::Verify(a) => {
            let doc = verify(&a)?;
            emit(stdout, &format!("{}\n", pretty(&doc)));
            Ok(if doc["pass"] == json!(true) { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

/// Parses `args` (program name first), runs, and returns the exit code.
/// Diagnostics go to stderr.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("pplab: {e}");
            if e.exit_code() == EXIT_USAGE {
                eprintln!("run `pplab --help` for usage");
            }
            e.exit_code()
        }
    }
}
