//! Command-line front end for the identity checker.

mod config;

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::sync::Arc;

use clap::error::ErrorKind;
use ffhyper::{build_field, registry, run_suite, CplxNum, CycNum, Error, FieldCtx, Status, SuiteReport, SweepOptions};
use serde::Serialize;

pub use config::{parse_args, Backend, Command, Identities, Output, RunConfig};

/// Schema version of the JSON report.
pub const REPORT_VERSION: u32 = 1;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Serialize)]
struct ConfigOut<'a> {
    fields: Vec<[u32; 3]>,
    identities: Vec<String>,
    mode: &'static str,
    samples: u64,
    seed: u64,
    backend: Backend,
    max_arity: u32,
    budget: String,
    timings: bool,
    flags: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    corrupt: Option<&'a str>,
}

#[derive(Serialize)]
struct JsonOut<'a> {
    version: u32,
    config: ConfigOut<'a>,
    #[serde(flatten)]
    suite: &'a SuiteReport,
}

impl RunConfig {
    pub fn sweep_options(&self) -> SweepOptions {
        SweepOptions {
            mode: self.mode,
            samples: self.samples,
            seed: self.seed,
            max_arity: self.max_arity,
            budget: self.budget,
            timings: self.timings,
            corrupt: self.corrupt.clone(),
        }
    }
}

/// Runs the configured suite.
pub fn execute(cfg: &RunConfig) -> Result<SuiteReport, Error> {
    let fields = cfg
        .fields
        .iter()
        .map(|&(p, r)| build_field(p, r).map(Arc::new))
        .collect::<Result<Vec<Arc<FieldCtx>>, _>>()?;
    let ids = cfg.identity_ids();
    let opts = cfg.sweep_options();
    match cfg.backend {
        Backend::Exact => run_suite::<CycNum>(&fields, &ids, &opts),
        Backend::Float => run_suite::<CplxNum>(&fields, &ids, &opts),
    }
}

/// Renders a finished suite in the configured format.
pub fn emit_report(cfg: &RunConfig, suite: &SuiteReport) -> String {
    match cfg.output {
        Output::Json => {
            let out = JsonOut {
                version: REPORT_VERSION,
                config: ConfigOut {
                    fields: cfg
                        .fields
                        .iter()
                        .map(|&(p, r)| [p, r, p.pow(r)])
                        .collect(),
                    identities: cfg.identity_ids(),
                    mode: cfg.mode.as_str(),
                    samples: cfg.samples,
                    seed: cfg.seed,
                    backend: cfg.backend,
                    max_arity: cfg.max_arity,
                    budget: cfg.budget.to_string(),
                    timings: cfg.timings,
                    flags: cfg.to_flags(),
                    corrupt: cfg.corrupt.as_deref(),
                },
                suite,
            };
            let mut s = serde_json::to_string_pretty(&out).expect("report serializes");
            s.push('\n');
            s
        }
        Output::Text => text_report(suite),
    }
}

fn text_report(suite: &SuiteReport) -> String {
    let mut s = String::new();
    for r in &suite.reports {
        let _ = write!(
            s,
            "{:<12} q={:<3} {:<28} checked={} skipped={} failed={}",
            r.status.as_str().to_uppercase(),
            r.q,
            r.identity,
            r.checked,
            r.skipped,
            r.failed
        );
        if let Some(ms) = r.duration_ms {
            let _ = write!(s, " {ms}ms");
        }
        if let Some(err) = &r.error {
            let _ = write!(s, " error: {err}");
        }
        s.push('\n');
        if let Some(f) = r.failures.first() {
            let _ = writeln!(
                s,
                "    witness n,knob={:?} chars={:?} point={:?}\n      lhs={:?}\n      rhs={:?}",
                f.knobs, f.params, f.point, f.lhs, f.rhs
            );
        }
    }
    let t = &suite.totals;
    let count = |st: Status| suite.reports.iter().filter(|r| r.status == st).count();
    let _ = writeln!(
        s,
        "{} reports: {} pass, {} fail, {} vacuous, {} inapplicable, {} error; {} tuples checked, {} skipped",
        t.reports,
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Vacuous),
        count(Status::Inapplicable),
        t.errors,
        t.checked,
        t.skipped
    );
    let _ = writeln!(s, "digest {}", suite.digest);
    s
}

fn list_identities() -> String {
    let mut s = String::new();
    for spec in registry::<CycNum>() {
        let odd = if spec.requires_odd_p { " (odd p)" } else { "" };
        let _ = writeln!(s, "{:<28} {}{}", spec.id, spec.description, odd);
    }
    s
}

fn usage_error(kind: ErrorKind, msg: impl std::fmt::Display) -> clap::Error {
    clap::Error::raw(kind, format!("{msg}\n"))
}

/// Parses, runs and reports. Returns the process exit code, or a clap
/// error (exit code 2, or 0 for `--help`) for the caller to print.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write) -> Result<i32, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match parse_args(argv)? {
        Command::List => {
            stdout
                .write_all(list_identities().as_bytes())
                .map_err(|e| usage_error(ErrorKind::Io, e))?;
            return Ok(EXIT_PASS);
        }
        Command::Run(cfg) => cfg,
    };
    // unknown ids, budget overruns and bad fields are all caught before
    // anything is evaluated
    let suite = execute(&cfg).map_err(|e| usage_error(ErrorKind::InvalidValue, e))?;
    let text = emit_report(&cfg, &suite);
    match &cfg.out_path {
        Some(path) => fs::write(path, &text)
            .map_err(|e| usage_error(ErrorKind::Io, format!("cannot write {}: {e}", path.display())))?,
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| usage_error(ErrorKind::Io, e))?,
    }
    Ok(if suite.passed() { EXIT_PASS } else { EXIT_FAIL })
}
