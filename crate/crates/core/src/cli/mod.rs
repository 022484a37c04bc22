//! The `coneproc` command line.

mod input;

pub use input::{parse_csv, parse_input, Input};

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::analysis::{
    default_q_max, nullcontrollability_verdict_with, reachability_verdict_with, AnalysisVerdict, Property,
    VerdictStatus,
};
use crate::cone::PolyCone;
use crate::informativity::{
    cone_json, decide_nullcontrollability, decide_reachability, mat_json, subspace_json, AnalysisJson,
    ConeJson, DecideOptions, InformativityJson, InformativityReport, SubspaceJson, Verdict,
};
use crate::linalg::Mat;
use crate::process::ConvexProcess;

pub const SCHEMA: &str = "coneproc-report/1";

pub const EXIT_USAGE: u8 = 3;
pub const EXIT_INPUT: u8 = 4;
pub const EXIT_IO: u8 = 5;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Input(_) => EXIT_INPUT,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "coneproc", version, about = "Exact informativity analysis for conically constrained linear systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PropertyArg {
    Reachability,
    NullControllability,
    Both,
}

impl PropertyArg {
    fn properties(self) -> Vec<Property> {
        match self {
            PropertyArg::Reachability => vec![Property::Reachability],
            PropertyArg::NullControllability => vec![Property::NullControllability],
            PropertyArg::Both => vec![Property::Reachability, Property::NullControllability],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Input file (JSON, or CSV trajectories starting with `n=<dim>`).
    input: PathBuf,
    /// Write the report here instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether measured data are informative.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "both")]
        property: PropertyArg,
        /// Horizon for the reachability oracle (default 2n).
        #[arg(long)]
        oracle_max_steps: Option<usize>,
        /// Never fall back to the reachability oracle.
        #[arg(long)]
        no_fallback: bool,
    },
    /// Analyze a process given by graph generators/inequalities or (A, B, C).
    Analyze {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "both")]
        property: PropertyArg,
        /// Horizon for the oracle chains (default 2n).
        #[arg(long)]
        oracle_max_steps: Option<usize>,
    },
    /// Print both representations, the linear parts and the dual processes.
    Dual {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Serialize)]
struct Tool {
    name: &'static str,
    version: &'static str,
}

const TOOL: Tool = Tool {
    name: env!("CARGO_PKG_NAME"),
    version: env!("CARGO_PKG_VERSION"),
};

#[derive(Serialize)]
struct InputInfo {
    sha256: String,
    n: usize,
    /// Distinct nonzero pairs, for data input.
    #[serde(skip_serializing_if = "Option::is_none")]
    pairs: Option<usize>,
}

#[derive(Serialize)]
struct Timing {
    elapsed_ms: f64,
}

#[derive(Serialize)]
struct CheckOptions {
    oracle_max_steps: Option<usize>,
    fallback: bool,
}

#[derive(Serialize)]
struct CheckFile {
    schema: &'static str,
    tool: Tool,
    command: &'static str,
    input: InputInfo,
    options: CheckOptions,
    reports: Vec<InformativityJson>,
    timing: Timing,
}

#[derive(Serialize)]
struct AnalyzeFile {
    schema: &'static str,
    tool: Tool,
    command: &'static str,
    input: InputInfo,
    graph: ConeJson,
    reports: Vec<AnalysisJson>,
    timing: Timing,
}

#[derive(Serialize)]
struct Representations {
    #[serde(rename = "X")]
    x: Vec<Vec<String>>,
    #[serde(rename = "Y")]
    y: Vec<Vec<String>>,
    #[serde(rename = "Z")]
    z: Vec<Vec<String>>,
    #[serde(rename = "W")]
    w: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct DualFile {
    schema: &'static str,
    tool: Tool,
    command: &'static str,
    input: InputInfo,
    matrices: Representations,
    graph: ConeJson,
    domain: ConeJson,
    image: ConeJson,
    minimal_linear: SubspaceJson,
    maximal_linear: SubspaceJson,
    negative_dual: ConeJson,
    positive_dual: ConeJson,
    timing: Timing,
}

fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

fn elapsed(start: Instant) -> Timing {
    Timing {
        elapsed_ms: (start.elapsed().as_secs_f64() * 1e6).round() / 1e3,
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("CONEPROC_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("CONEPROC_THREADS must be a positive integer, got {value:?}")))?;
    // A pool configured earlier in this process wins.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn read_input(path: &PathBuf) -> Result<(Vec<u8>, Input), CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|e| CliError::Input(format!("{}: not UTF-8: {e}", path.display())))?;
    let input = parse_input(text)?;
    Ok((bytes, input))
}

fn emit(common: &Common, body: String) -> Result<(), CliError> {
    match &common.output {
        Some(path) => std::fs::write(path, body).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn verdict_exit(verdicts: impl IntoIterator<Item = Verdict>) -> u8 {
    let mut code = 0;
    for v in verdicts {
        code = match v {
            Verdict::Informative => code,
            Verdict::NotInformative => 1,
            Verdict::InconclusiveAssumptions | Verdict::Indeterminate if code == 0 => 2,
            _ => code,
        };
    }
    code
}

fn status_exit(statuses: impl IntoIterator<Item = VerdictStatus>) -> u8 {
    verdict_exit(statuses.into_iter().map(|s| match s {
        VerdictStatus::Holds => Verdict::Informative,
        VerdictStatus::Fails => Verdict::NotInformative,
        VerdictStatus::AssumptionsNotMet => Verdict::InconclusiveAssumptions,
        VerdictStatus::Indeterminate => Verdict::Indeterminate,
    }))
}

fn fmt_mat(m: &Mat) -> String {
    if m.rows() == 0 {
        return "[]".to_string();
    }
    let rows: Vec<String> = mat_json(m).iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

fn fmt_cone(c: &PolyCone) -> String {
    if c.is_full() {
        return "R^n (full)".to_string();
    }
    if c.is_zero() {
        return "{0}".to_string();
    }
    let gens: Vec<String> = cone_json(c).generators.iter().map(|g| format!("({})", g.join(", "))).collect();
    format!("cone{{{}}}", gens.join(", "))
}

/// The JSON spelling of an enum value.
fn label<T: Serialize>(value: &T) -> String {
    match serde_json::to_value(value) {
        Ok(serde_json::Value::String(s)) => s,
        _ => String::new(),
    }
}

fn fmt_span(s: &crate::linalg::Subspace) -> String {
    let vs: Vec<String> = subspace_json(s).basis.iter().map(|v| format!("({})", v.join(", "))).collect();
    format!("span{{{}}}", vs.join(", "))
}

fn check_text(reports: &[InformativityReport]) -> String {
    let mut s = String::new();
    if let Some(r) = reports.first() {
        let m = &r.matrices;
        let _ = writeln!(s, "n = {}, T = {}", r.n, m.x.cols());
        let _ = writeln!(s, "X = {}", fmt_mat(&m.x));
        let _ = writeln!(s, "Y = {}", fmt_mat(&m.y));
        let _ = writeln!(s, "Z = {}", fmt_mat(&m.z));
        let _ = writeln!(s, "W = {}", fmt_mat(&m.w));
    }
    for r in reports {
        let j = InformativityJson::from(r);
        let _ = writeln!(
            s,
            "{}: {} via {}",
            label(&r.property),
            label(&j.verdict),
            label(&j.path)
        );
        let _ = writeln!(s, "  domain hypothesis: {}", r.assumption_13.holds);
        if let Some(a) = &r.assumption_14 {
            let _ = writeln!(
                s,
                "  image hypothesis: {} (R_+ full: {}, Y R_+^T + N_- full: {})",
                a.holds, a.r_plus_full, a.image_sum_full
            );
        }
        let _ = writeln!(
            s,
            "  dim R_+ = {}, dim R_- = {}, dim N_+ = {}, dim N_- = {}",
            r.subspaces.r_plus.subspace.dim(),
            r.subspaces.r_minus.subspace.dim(),
            r.subspaces.n_plus.subspace.dim(),
            r.subspaces.n_minus.subspace.dim()
        );
        let crit: Vec<String> = r.eigen.critical_points.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "  eigen: {}, critical points [{}]", label(&r.eigen.outcome), crit.join(", "));
        if let Some(o) = &r.oracle {
            match o.chain.first_full() {
                Some(q) => {
                    let _ = writeln!(s, "  oracle: R^n reached at q = {q}");
                }
                None => {
                    let _ = writeln!(s, "  oracle: R^n not reached within {} steps", o.chain.chain.len() - 1);
                }
            }
        }
        if let Some(w) = &j.witness {
            let _ = writeln!(s, "  witness: {}", serde_json::to_string(w).expect("serializable"));
        }
    }
    s
}

fn analyze_text(h: &ConvexProcess, verdicts: &[AnalysisVerdict]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph = {}", fmt_cone(h.graph()));
    for v in verdicts {
        let _ = writeln!(s, "{}: {}", label(&v.property), label(&v.status));
        if let Some(r) = &v.reason {
            let _ = writeln!(s, "  reason: {r}");
        }
        let _ = writeln!(s, "  dom H + R_- = R^n: {}", v.assumption_13.holds);
        if let Some(a) = &v.assumption_14 {
            let _ = writeln!(s, "  R_+ = im H + N_- = R^n: {}", a.holds);
        }
        if let Some(e) = &v.eigen {
            let _ = writeln!(s, "  eigen: {}", label(&e.outcome));
        }
        let o = &v.oracle;
        let _ = writeln!(s, "  oracle (q <= {}):", o.q_max);
        let _ = writeln!(s, "    reachable  {} (stabilized: {})", fmt_cone(o.reach.chain.last()), o.reach.chain.stabilized);
        let _ = writeln!(s, "    null-ctrl  {} (stabilized: {})", fmt_cone(o.nullc.last()), o.nullc.stabilized);
        let _ = writeln!(s, "    feasible   {} (certified: {})", fmt_cone(o.feasible.last()), o.feasible.stabilized);
    }
    s
}

fn process_of(input: Input) -> (ConvexProcess, Option<usize>) {
    match input {
        Input::Data(d) => (ConvexProcess::from_data(&d), Some(d.len())),
        Input::Process(h) => (h, None),
    }
}

fn run_check(
    common: &Common,
    property: PropertyArg,
    oracle_max_steps: Option<usize>,
    no_fallback: bool,
) -> Result<u8, CliError> {
    let start = Instant::now();
    let (bytes, input) = read_input(&common.input)?;
    let Input::Data(d) = input else {
        return Err(CliError::Usage(
            "check expects measured data (\"trajectories\" or \"pairs\"); use analyze for a process".to_string(),
        ));
    };
    if oracle_max_steps == Some(0) {
        return Err(CliError::Usage("--oracle-max-steps must be at least 1".to_string()));
    }
    let opts = DecideOptions {
        fallback: !no_fallback,
        q_max: oracle_max_steps,
    };
    let reports = property
        .properties()
        .into_iter()
        .map(|p| match p {
            Property::Reachability => decide_reachability(&d, &opts),
            Property::NullControllability => decide_nullcontrollability(&d, &opts),
        })
        .collect::<crate::Result<Vec<_>>>()
        .map_err(|e| CliError::Input(e.to_string()))?;
    let code = verdict_exit(reports.iter().map(|r| r.verdict));
    let body = match common.format {
        Format::Text => check_text(&reports),
        Format::Json => to_json(&CheckFile {
            schema: SCHEMA,
            tool: TOOL,
            command: "check",
            input: InputInfo {
                sha256: digest(&bytes),
                n: d.n(),
                pairs: Some(d.len()),
            },
            options: CheckOptions {
                oracle_max_steps,
                fallback: opts.fallback,
            },
            reports: reports.iter().map(Into::into).collect(),
            timing: elapsed(start),
        }),
    };
    emit(common, body)?;
    Ok(code)
}

fn run_analyze(common: &Common, property: PropertyArg, oracle_max_steps: Option<usize>) -> Result<u8, CliError> {
    let start = Instant::now();
    let (bytes, input) = read_input(&common.input)?;
    let (h, pairs) = process_of(input);
    let q_max = oracle_max_steps.unwrap_or_else(|| default_q_max(h.state_dim()));
    if q_max == 0 {
        return Err(CliError::Usage("--oracle-max-steps must be at least 1".to_string()));
    }
    let verdicts: Vec<AnalysisVerdict> = property
        .properties()
        .into_iter()
        .map(|p| match p {
            Property::Reachability => reachability_verdict_with(&h, q_max),
            Property::NullControllability => nullcontrollability_verdict_with(&h, q_max),
        })
        .collect();
    let code = status_exit(verdicts.iter().map(|v| v.status));
    let body = match common.format {
        Format::Text => analyze_text(&h, &verdicts),
        Format::Json => to_json(&AnalyzeFile {
            schema: SCHEMA,
            tool: TOOL,
            command: "analyze",
            input: InputInfo {
                sha256: digest(&bytes),
                n: h.state_dim(),
                pairs,
            },
            graph: cone_json(h.graph()),
            reports: verdicts.iter().map(Into::into).collect(),
            timing: elapsed(start),
        }),
    };
    emit(common, body)?;
    Ok(code)
}

fn run_dual(common: &Common) -> Result<u8, CliError> {
    let start = Instant::now();
    let (bytes, input) = read_input(&common.input)?;
    let (x, y, h, pairs) = match input {
        Input::Data(d) => {
            let h = ConvexProcess::from_data(&d);
            (d.x_matrix(), d.y_matrix(), h, Some(d.len()))
        }
        Input::Process(h) => {
            let (x, y) = h.x_y();
            (x, y, h, None)
        }
    };
    let (z, w) = h.z_w();
    let neg = h.negative_dual();
    let pos = h.positive_dual();
    let body = match common.format {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "X = {}", fmt_mat(&x));
            let _ = writeln!(s, "Y = {}", fmt_mat(&y));
            let _ = writeln!(s, "Z = {}", fmt_mat(&z));
            let _ = writeln!(s, "W = {}", fmt_mat(&w));
            let _ = writeln!(s, "graph L_- = {}", fmt_span(h.minimal_linear().graph()));
            let _ = writeln!(s, "graph L_+ = {}", fmt_span(h.maximal_linear().graph()));
            let _ = writeln!(s, "graph H^- = {}", fmt_cone(neg.graph()));
            let _ = writeln!(s, "graph H^+ = {}", fmt_cone(pos.graph()));
            s
        }
        Format::Json => to_json(&DualFile {
            schema: SCHEMA,
            tool: TOOL,
            command: "dual",
            input: InputInfo {
                sha256: digest(&bytes),
                n: h.state_dim(),
                pairs,
            },
            matrices: Representations {
                x: mat_json(&x),
                y: mat_json(&y),
                z: mat_json(&z),
                w: mat_json(&w),
            },
            graph: cone_json(h.graph()),
            domain: cone_json(&h.domain()),
            image: cone_json(&h.image_set()),
            minimal_linear: subspace_json(h.minimal_linear().graph()),
            maximal_linear: subspace_json(h.maximal_linear().graph()),
            negative_dual: cone_json(neg.graph()),
            positive_dual: cone_json(pos.graph()),
            timing: elapsed(start),
        }),
    };
    emit(common, body)?;
    Ok(0)
}

/// Parses `args` (including the program name), runs the command and maps
/// the outcome to an exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = configure_threads().and_then(|()| match &cli.command {
        Command::Check {
            common,
            property,
            oracle_max_steps,
            no_fallback,
        } => run_check(common, *property, *oracle_max_steps, *no_fallback),
        Command::Analyze {
            common,
            property,
            oracle_max_steps,
        } => run_analyze(common, *property, *oracle_max_steps),
        Command::Dual { common } => run_dual(common),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("coneproc: error: {e}");
            ExitCode::from(e.code())
        }
    }
}
