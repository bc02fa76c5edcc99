//! Command definitions and execution. Every command builds one JSON report;
//! text mode renders the same value.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use lspace_core::families::{self, FamilySpec, Generator, CATALOG};
use lspace_core::twist::{
    family_report_from_points, h1_consistency, point_record, FamilyReport, SeiferterData, TwistMatrix,
};
use lspace_core::{classify, decide, h1_order, sufficient_conditions, third_slot_threshold, SeifertForm};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::corpus;
use crate::json::{guarantee, h1, int, Encoder};
use crate::text::{parse_form, parse_params, parse_rational, parse_window};
use crate::CliError;

/// Environment variable capping the worker threads used by scans.
pub const THREADS_ENV: &str = "SEIFERT_LSPACE_THREADS";

const DEFAULT_WINDOW: (i64, i64) = (-50, 50);

#[derive(Debug, Parser)]
#[command(name = "lspace", version, about = "Exact L-space decisions for small Seifert fibered spaces")]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Add decimal approximations next to exact rationals.
    #[arg(long, global = true)]
    pub float: bool,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a Seifert form is an L-space.
    Decide {
        /// A form such as "SFS[S2; -1; 1/2, 1/3, 1/7]".
        form: String,
    },
    /// Order of the first homology group.
    H1 { form: String },
    /// Print the normal form.
    Normalize { form: String },
    /// L-space set of the third slope r in S2(b; r1, r2, r).
    Threshold {
        #[arg(allow_hyphen_values = true)]
        b: String,
        r1: String,
        r2: String,
    },
    /// Scan a twist family given by explicit seiferter data.
    TwistScan(TwistScanArgs),
    /// Catalog families.
    Family {
        #[command(subcommand)]
        command: FamilyCommand,
    },
    /// Replay the embedded example corpus.
    Reproduce {
        /// Run only the named case.
        #[arg(long)]
        only: Option<String>,
        /// Read the corpus from a file instead of the embedded copy.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct TwistScanArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
    #[arg(long)]
    pub r1: String,
    #[arg(long)]
    pub r2: String,
    /// alpha,beta,alpha3,beta3
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: String,
    /// Surgery slope at n = 0.
    #[arg(long, allow_hyphen_values = true)]
    pub m: String,
    /// Linking number.
    #[arg(long)]
    pub l: String,
    /// Inclusive index range a..b.
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<String>,
    /// Treat the data as coming from a knot in S3 and check |H1| = |m_n|.
    #[arg(long)]
    pub realizable: bool,
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    /// List catalog families and their default parameters.
    List,
    /// Scan a catalog family and check its claimed guarantee.
    Run {
        name: String,
        /// Parameter overrides, e.g. m=0,p=3. May be repeated.
        #[arg(long, allow_hyphen_values = true)]
        params: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
}

/// A finished command: its report and process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub exit_code: i32,
}

impl Outcome {
    /// The report as text or pretty JSON.
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.report).expect("serializable");
            s.push('\n');
            s
        } else {
            crate::render::render(&self.report)
        }
    }
}

fn report(command: &str, inputs: Value, outputs: Value) -> Value {
    json!({ "command": command, "inputs": inputs, "outputs": outputs })
}

fn parse_int(s: &str) -> Result<BigInt, CliError> {
    s.trim().parse().map_err(|_| CliError::Usage(format!("bad integer `{s}`")))
}

fn parse_i64(s: &str) -> Result<i64, CliError> {
    s.trim().parse().map_err(|_| CliError::Usage(format!("bad integer `{s}`")))
}

fn window_or_default(w: &Option<String>) -> Result<(i64, i64), CliError> {
    w.as_deref().map_or(Ok(DEFAULT_WINDOW), parse_window)
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got `{v}`")))?;
        builder = builder.num_threads(n.max(1));
    }
    builder.build().map_err(|e| CliError::Usage(e.to_string()))
}

/// Window verdicts computed in parallel, assembled in index order.
pub fn scan(d: &SeiferterData, window: (i64, i64)) -> Result<FamilyReport, CliError> {
    let pool = thread_pool()?;
    let points = pool
        .install(|| (window.0..=window.1).into_par_iter().map(|n| point_record(d, n)).collect::<Result<Vec<_>, _>>())?;
    Ok(family_report_from_points(d, window.0..=window.1, points)?)
}

fn report_json(enc: &Encoder, rep: &FamilyReport) -> Value {
    let mut v = enc.family_report(rep);
    let non_lspace: Vec<Value> = rep.points.iter().filter(|p| !p.verdict.is_lspace).map(|p| int(&p.n)).collect();
    v["non_lspace_n"] = Value::Array(non_lspace);
    v
}

fn decide_cmd(enc: &Encoder, src: &str) -> Result<Outcome, CliError> {
    let form = parse_form(src)?.normalized();
    let class = classify(&form)?;
    let verdict = decide(&form)?;
    let shortcut = sufficient_conditions(&form).map_or(Value::Null, Value::Bool);
    let outputs = json!({
        "form": enc.form(&form),
        "classification": enc.classification(&class),
        "verdict": enc.verdict(&verdict),
        "shortcut": shortcut,
    });
    Ok(Outcome {
        report: report("decide", json!({ "form": src }), outputs),
        exit_code: if verdict.is_lspace { 0 } else { 1 },
    })
}

fn h1_cmd(enc: &Encoder, src: &str) -> Result<Outcome, CliError> {
    let form = parse_form(src)?.normalized();
    let class = classify(&form)?;
    // Connected sums and S2 x S1 with degenerate fibers carry their order
    // in the classification.
    let order = match h1_order(&form) {
        Ok(h) => h1(&h),
        Err(_) => class.h1.as_ref().map_or(Value::Null, h1),
    };
    let outputs = json!({
        "form": enc.form(&form),
        "h1": order,
        "classification": enc.classification(&class),
    });
    Ok(Outcome { report: report("h1", json!({ "form": src }), outputs), exit_code: 0 })
}

fn normalize_cmd(enc: &Encoder, src: &str) -> Result<Outcome, CliError> {
    let form: SeifertForm = parse_form(src)?.normalized();
    let outputs = json!({ "form": enc.form(&form) });
    Ok(Outcome { report: report("normalize", json!({ "form": src }), outputs), exit_code: 0 })
}

fn threshold_cmd(enc: &Encoder, b: &str, r1: &str, r2: &str) -> Result<Outcome, CliError> {
    let (bb, q1, q2) = (parse_int(b)?, parse_rational(r1)?, parse_rational(r2)?);
    let t = third_slot_threshold(bb, &q1, &q2)?;
    let inputs = json!({ "b": b, "r1": r1, "r2": r2 });
    Ok(Outcome { report: report("threshold", inputs, enc.threshold(&t)), exit_code: 0 })
}

fn twist_scan_cmd(enc: &Encoder, a: &TwistScanArgs) -> Result<Outcome, CliError> {
    let entries: Vec<i64> = a.matrix.split(',').map(parse_i64).collect::<Result<_, _>>()?;
    let [alpha, beta, alpha3, beta3] = entries[..] else {
        return Err(CliError::Usage(format!("--matrix needs four integers, got `{}`", a.matrix)));
    };
    let window = window_or_default(&a.window)?;
    let mut d = SeiferterData::new(
        parse_int(&a.b)?,
        parse_rational(&a.r1)?,
        parse_rational(&a.r2)?,
        TwistMatrix::new(alpha, beta, alpha3, beta3),
        parse_int(&a.m)?,
        parse_int(&a.l)?,
    )?;
    if a.realizable {
        d = d.realizable();
    }
    let rep = scan(&d, window)?;
    let mut outputs = report_json(enc, &rep);
    if a.realizable {
        let bad: Vec<i64> = (window.0..=window.1).filter(|&n| !h1_consistency(&d, n)).collect();
        outputs["h1_mismatches"] = json!(bad);
    }
    let inputs = json!({
        "b": a.b, "r1": a.r1, "r2": a.r2, "matrix": a.matrix, "m": a.m, "l": a.l,
        "window": [window.0, window.1], "realizable": a.realizable,
    });
    Ok(Outcome { report: report("twist-scan", inputs, outputs), exit_code: 0 })
}

fn family_list_cmd() -> Outcome {
    let entries: Vec<Value> = CATALOG
        .iter()
        .map(|e| {
            let defaults: Map<String, Value> = e.defaults.iter().map(|(k, v)| ((*k).to_owned(), json!(v))).collect();
            json!({ "name": e.name, "defaults": defaults, "summary": e.summary })
        })
        .collect();
    Outcome { report: report("family list", json!({}), json!({ "families": entries })), exit_code: 0 }
}

fn family_run_cmd(enc: &Encoder, name: &str, params: &[String], window: &Option<String>) -> Result<Outcome, CliError> {
    let mut overrides = Vec::new();
    for p in params {
        overrides.extend(parse_params(p)?);
    }
    let borrowed: Vec<(&str, i64)> = overrides.iter().map(|(k, v)| (k.as_str(), *v)).collect();
    let spec: FamilySpec = families::family_by_name(name, &borrowed)?;
    let window = window_or_default(window)?;
    let mut violations = Vec::new();
    let mut reports = Vec::new();
    for g in &spec.generators {
        match g {
            Generator::Seiferter(d) => {
                let rep = scan(d, window)?;
                violations.extend(families::violations(&spec.claimed, &rep));
                reports.push(report_json(enc, &rep));
            }
            Generator::ProjectiveBase { .. } => {
                let lspace = decide(&SeifertForm::rp2())?.is_lspace;
                violations.extend(
                    (window.0..=window.1).filter(|&n| spec.claimed.expects(n).is_some_and(|want| want != lspace)),
                );
            }
        }
    }
    violations.sort_unstable();
    violations.dedup();
    let holds = violations.is_empty();
    let outputs = json!({
        "family": enc.spec(&spec),
        "confirmation": {
            "claimed": guarantee(&spec.claimed),
            "holds": holds,
            "violations": violations,
        },
        "reports": reports,
    });
    let inputs = json!({ "name": name, "params": params, "window": [window.0, window.1] });
    Ok(Outcome { report: report("family run", inputs, outputs), exit_code: if holds { 0 } else { 1 } })
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let enc = Encoder { float: cli.float };
    let start = Instant::now();
    let mut out = match &cli.command {
        Command::Decide { form } => decide_cmd(&enc, form)?,
        Command::H1 { form } => h1_cmd(&enc, form)?,
        Command::Normalize { form } => normalize_cmd(&enc, form)?,
        Command::Threshold { b, r1, r2 } => threshold_cmd(&enc, b, r1, r2)?,
        Command::TwistScan(args) => twist_scan_cmd(&enc, args)?,
        Command::Family { command: FamilyCommand::List } => family_list_cmd(),
        Command::Family { command: FamilyCommand::Run { name, params, window } } => {
            family_run_cmd(&enc, name, params, window)?
        }
        Command::Reproduce { only, corpus: path } => corpus::reproduce(only.as_deref(), path.as_deref())?,
    };
    if cli.timing {
        out.report["timing_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(out)
}

/// JSON form of an error, used by the corpus harness.
pub fn error_report(e: &CliError) -> Value {
    json!({ "error": { "kind": e.kind(), "message": e.to_string() } })
}
