//! Machine checks of character-sum identities.
//!
//! An [`IdentitySpec`] is a hypothesis predicate plus two evaluators over a
//! [`Tuple`] of characters and field elements. A sweep enumerates (or
//! samples) tuples, skips those failing the hypothesis without evaluating
//! anything, and compares both sides with the backend's notion of equality.

pub mod crosscheck;
pub mod invariance;
mod registry;
pub mod rng;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::characters::{AddChar, MulChar};
use crate::error::{Error, Result};
use crate::finite_field::{FieldCtx, FqElem};
use crate::hyperfun::Evaluator;
use crate::scalar::{Scalar, Witness};

pub use registry::{registry, registry_ids};
use rng::SplitMix64;

/// Default cap on exhaustive sweeps.
pub const DEFAULT_BUDGET: u128 = 10_000_000;
/// Failures kept per report; the count is always complete.
pub const FAILURE_CAP: usize = 32;

/// One point of a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tuple {
    /// Arity knob.
    pub n: u32,
    /// Secondary knob (sub-case selector), 0 when unused.
    pub knob: u32,
    pub chars: Vec<MulChar>,
    pub points: Vec<FqElem>,
}

impl Tuple {
    pub fn c(&self, i: usize) -> MulChar {
        self.chars[i]
    }

    pub fn x(&self, i: usize) -> FqElem {
        self.points[i]
    }

    /// The first `N` characters.
    pub fn cs<const N: usize>(&self) -> [MulChar; N] {
        std::array::from_fn(|i| self.chars[i])
    }
}

pub type Side<S> = fn(&Evaluator<S>, &Tuple) -> S;
pub type Hypothesis = fn(&FieldCtx, &Tuple) -> bool;

pub struct IdentitySpec<S: Scalar> {
    pub id: &'static str,
    pub description: &'static str,
    /// Values of the arity knob `n`; `[0]` when there is none.
    pub arities: &'static [u32],
    /// Added to `n` before comparing with the arity cap, for identities
    /// whose functions have more variables than the knob says.
    pub arity_shift: u32,
    pub knobs: fn(u32) -> Vec<u32>,
    pub char_slots: fn(u32, u32) -> usize,
    pub point_slots: fn(u32, u32) -> usize,
    pub requires_odd_p: bool,
    pub hypothesis: Hypothesis,
    pub lhs: Side<S>,
    pub rhs: Side<S>,
}

impl<S: Scalar> IdentitySpec<S> {
    /// `(n, knob, character slots, point slots)` for every shape allowed
    /// under `max_arity`.
    pub fn shapes(&self, max_arity: u32) -> Vec<(u32, u32, usize, usize)> {
        self.arities
            .iter()
            .filter(|&&n| n + self.arity_shift <= max_arity)
            .flat_map(|&n| {
                (self.knobs)(n)
                    .into_iter()
                    .map(move |k| (n, k, (self.char_slots)(n, k), (self.point_slots)(n, k)))
            })
            .collect()
    }

    /// Number of tuples an exhaustive sweep visits on `F_q`.
    pub fn predicted_tuples(&self, q: u32, max_arity: u32) -> u128 {
        let m = (q - 1) as u128;
        self.shapes(max_arity)
            .iter()
            .map(|&(_, _, c, pts)| m.pow(c as u32) * (q as u128).pow(pts as u32))
            .sum()
    }

    pub fn evaluate(&self, e: &Evaluator<S>, t: &Tuple) -> (S, S) {
        ((self.lhs)(e, t), (self.rhs)(e, t))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sample,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sample => "sample",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub mode: Mode,
    pub samples: u64,
    pub seed: u64,
    pub max_arity: u32,
    pub budget: u128,
    pub timings: bool,
    /// Test hook: adds 1 to the right-hand side of this identity.
    pub corrupt: Option<String>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            mode: Mode::Exhaustive,
            samples: 200,
            seed: 0,
            max_arity: 3,
            budget: DEFAULT_BUDGET,
            timings: false,
            corrupt: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// No tuple satisfied the hypothesis on this field.
    Vacuous,
    /// Characteristic 2 for an odd-characteristic identity.
    Inapplicable,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
            Status::Inapplicable => "inapplicable",
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    /// `[n, knob]`.
    pub knobs: [u32; 2],
    /// Character indices.
    pub params: Vec<u32>,
    /// Points as coefficient lists, low degree first.
    pub point: Vec<Vec<u32>>,
    pub lhs: WitnessOut,
    pub rhs: WitnessOut,
}

/// [`Witness`] in report form: `[[num, den], …]` or `[re, im]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum WitnessOut {
    Exact(Vec<[String; 2]>),
    Float([f64; 2]),
}

impl From<Witness> for WitnessOut {
    fn from(w: Witness) -> Self {
        match w {
            Witness::Exact(v) => WitnessOut::Exact(v),
            Witness::Float(v) => WitnessOut::Float(v),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub identity: String,
    pub p: u32,
    pub r: u32,
    pub q: u32,
    pub mode: Mode,
    pub backend: &'static str,
    pub status: Status,
    pub checked: u64,
    pub skipped: u64,
    pub failed: u64,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub duration_ms: Option<u64>,
}

impl Report {
    fn empty(id: &str, f: &FieldCtx, mode: Mode, backend: &'static str) -> Self {
        Report {
            identity: id.to_string(),
            p: f.p(),
            r: f.r(),
            q: f.q(),
            mode,
            backend,
            status: Status::Pass,
            checked: 0,
            skipped: 0,
            failed: 0,
            failures: Vec::new(),
            error: None,
            duration_ms: None,
        }
    }

    pub fn enumerated(&self) -> u64 {
        self.checked + self.skipped
    }

    /// Stable text form used for the suite digest. Durations are left out.
    fn canonical(&self, out: &mut String) {
        use std::fmt::Write;
        let _ = write!(
            out,
            "{}|{}|{}|{}|{}|{}|{}|{}|{}|{};",
            self.identity,
            self.p,
            self.r,
            self.mode.as_str(),
            self.backend,
            self.status.as_str(),
            self.checked,
            self.skipped,
            self.failed,
            self.error.as_deref().unwrap_or("")
        );
        for f in &self.failures {
            let _ = write!(out, "{:?}{:?}{:?}{:?}{:?};", f.knobs, f.params, f.point, f.lhs, f.rhs);
        }
        out.push('\n');
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Totals {
    pub reports: usize,
    pub checked: u64,
    pub skipped: u64,
    pub failed: u64,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub reports: Vec<Report>,
    pub totals: Totals,
    /// SHA-256 over the canonical form of every report.
    pub digest: String,
}

impl SuiteReport {
    pub fn new(reports: Vec<Report>) -> Self {
        let mut text = String::new();
        for r in &reports {
            r.canonical(&mut text);
        }
        let digest = Sha256::digest(text.as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        let totals = Totals {
            reports: reports.len(),
            checked: reports.iter().map(|r| r.checked).sum(),
            skipped: reports.iter().map(|r| r.skipped).sum(),
            failed: reports.iter().map(|r| r.failed).sum(),
            errors: reports.iter().filter(|r| r.status == Status::Error).count(),
        };
        SuiteReport {
            reports,
            totals,
            digest,
        }
    }

    /// No failing and no erroring report.
    pub fn passed(&self) -> bool {
        self.totals.failed == 0 && self.totals.errors == 0
    }
}

pub fn find<S: Scalar>(id: &str) -> Result<IdentitySpec<S>> {
    registry::<S>()
        .into_iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

fn odd_gated<S: Scalar>(spec: &IdentitySpec<S>, f: &FieldCtx) -> bool {
    spec.requires_odd_p && f.p() == 2
}

/// Sweeps one identity over one field.
pub fn check_identity<S: Scalar>(
    e: &Evaluator<S>,
    spec: &IdentitySpec<S>,
    opts: &SweepOptions,
) -> Result<Report> {
    let f = e.k();
    let shapes = spec.shapes(opts.max_arity);
    if shapes.is_empty() {
        let arity = spec.arities.iter().min().copied().unwrap_or(0) + spec.arity_shift;
        return Err(Error::ArityOverCap {
            arity,
            cap: opts.max_arity,
        });
    }
    if opts.mode == Mode::Exhaustive {
        let predicted = spec.predicted_tuples(f.q(), opts.max_arity);
        if predicted > opts.budget {
            return Err(Error::BudgetExceeded {
                predicted,
                budget: opts.budget,
            });
        }
    }
    let start = Instant::now();
    let mut report = Report::empty(spec.id, f, opts.mode, S::NAME);
    if odd_gated(spec, f) {
        report.status = Status::Inapplicable;
        report.skipped = match opts.mode {
            Mode::Exhaustive => spec.predicted_tuples(f.q(), opts.max_arity) as u64,
            Mode::Sample => opts.samples,
        };
    } else {
        let corrupt = opts.corrupt.as_deref() == Some(spec.id);
        let mut visit = |t: &Tuple| {
            if !(spec.hypothesis)(f, t) {
                report.skipped += 1;
                return;
            }
            report.checked += 1;
            let (lhs, mut rhs) = spec.evaluate(e, t);
            if corrupt {
                rhs = rhs.add(&S::one(e.ring()));
            }
            if !lhs.agrees(&rhs) {
                report.failed += 1;
                if report.failures.len() < FAILURE_CAP {
                    report.failures.push(Failure {
                        knobs: [t.n, t.knob],
                        params: t.chars.iter().map(|c| c.index()).collect(),
                        point: t.points.iter().map(|&x| f.coeffs(x)).collect(),
                        lhs: lhs.witness().into(),
                        rhs: rhs.witness().into(),
                    });
                }
            }
        };
        match opts.mode {
            Mode::Exhaustive => enumerate(f, &shapes, &mut visit),
            Mode::Sample => {
                let mut rng = SplitMix64::for_run(opts.seed, spec.id, f.q());
                for _ in 0..opts.samples {
                    visit(&draw(f, &shapes, &mut rng));
                }
            }
        }
        report.status = if report.failed > 0 {
            Status::Fail
        } else if report.checked == 0 {
            Status::Vacuous
        } else {
            Status::Pass
        };
    }
    if opts.timings {
        report.duration_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

/// Every tuple of every shape: characters in mixed radix (first slot
/// fastest), points innermost so that cached grids are reused.
fn enumerate(f: &FieldCtx, shapes: &[(u32, u32, usize, usize)], visit: &mut impl FnMut(&Tuple)) {
    let m = f.q() - 1;
    for &(n, knob, cs, ps) in shapes {
        let mut t = Tuple {
            n,
            knob,
            chars: vec![MulChar::trivial(m); cs],
            points: vec![FqElem::ZERO; ps],
        };
        loop {
            loop {
                visit(&t);
                if !advance_points(f, &mut t.points) {
                    break;
                }
            }
            if !advance_chars(&mut t.chars) {
                break;
            }
        }
    }
}

fn advance_points(f: &FieldCtx, xs: &mut [FqElem]) -> bool {
    for x in xs.iter_mut() {
        if x.index() + 1 < f.q() {
            *x = f.elem(x.index() + 1).unwrap();
            return true;
        }
        *x = FqElem::ZERO;
    }
    false
}

fn advance_chars(cs: &mut [MulChar]) -> bool {
    for c in cs.iter_mut() {
        let m = c.group_order();
        if c.index() + 1 < m {
            *c = MulChar::new(c.index() as i64 + 1, m);
            return true;
        }
        *c = MulChar::trivial(m);
    }
    false
}

/// One sampled tuple: a shape uniformly, then each slot uniformly.
fn draw(f: &FieldCtx, shapes: &[(u32, u32, usize, usize)], rng: &mut SplitMix64) -> Tuple {
    let m = f.q() - 1;
    let (n, knob, cs, ps) = shapes[rng.below(shapes.len() as u64) as usize];
    let chars = (0..cs)
        .map(|_| MulChar::new(rng.below(m as u64) as i64, m))
        .collect();
    let points = (0..ps)
        .map(|_| f.elem(rng.below(f.q() as u64) as u32).unwrap())
        .collect();
    Tuple {
        n,
        knob,
        chars,
        points,
    }
}

/// Runs `ids` over every field, ordered by `(q, id)`. Errors inside one
/// identity become an error report; unknown ids and budget overruns are
/// rejected before anything runs.
pub fn run_suite<S: Scalar>(
    fields: &[Arc<FieldCtx>],
    ids: &[String],
    opts: &SweepOptions,
) -> Result<SuiteReport> {
    let reg = registry::<S>();
    let mut specs: Vec<&IdentitySpec<S>> = Vec::new();
    for id in ids {
        let spec = reg
            .iter()
            .find(|s| s.id == id)
            .ok_or_else(|| Error::UnknownIdentity(id.clone()))?;
        if !specs.iter().any(|s| s.id == spec.id) {
            specs.push(spec);
        }
    }
    specs.sort_by_key(|s| s.id);
    let mut fields: Vec<&Arc<FieldCtx>> = fields.iter().collect();
    fields.sort_by_key(|f| (f.q(), f.p()));
    fields.dedup_by_key(|f| f.q());

    if opts.mode == Mode::Exhaustive {
        let predicted: u128 = fields
            .iter()
            .flat_map(|f| specs.iter().map(move |s| s.predicted_tuples(f.q(), opts.max_arity)))
            .sum();
        if predicted > opts.budget {
            return Err(Error::BudgetExceeded {
                predicted,
                budget: opts.budget,
            });
        }
    }

    let mut reports = Vec::new();
    for f in fields {
        let e = Evaluator::<S>::new(f.clone(), AddChar::standard())?;
        for spec in &specs {
            let outcome = catch_unwind(AssertUnwindSafe(|| check_identity(&e, spec, opts)));
            let report = match outcome {
                Ok(Ok(r)) => r,
                Ok(Err(err)) => error_report(spec.id, f, opts.mode, S::NAME, err.to_string()),
                Err(panic) => {
                    let msg = panic
                        .downcast_ref::<String>()
                        .cloned()
                        .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                        .unwrap_or_else(|| "evaluation panicked".to_string());
                    error_report(spec.id, f, opts.mode, S::NAME, msg)
                }
            };
            reports.push(report);
        }
    }
    Ok(SuiteReport::new(reports))
}

fn error_report(id: &str, f: &FieldCtx, mode: Mode, backend: &'static str, msg: String) -> Report {
    let mut r = Report::empty(id, f, mode, backend);
    r.status = Status::Error;
    r.error = Some(msg);
    r
}

/// Outcome of evaluating an identity off its hypothesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeOutcome {
    pub violating: u64,
    pub unequal: u64,
}

/// Evaluates both sides on every tuple that fails the hypothesis. A gate
/// that matters shows up as `unequal > 0`. Purely diagnostic.
pub fn probe_hypothesis<S: Scalar>(
    e: &Evaluator<S>,
    spec: &IdentitySpec<S>,
    max_arity: u32,
    point_ok: impl Fn(&FieldCtx, &Tuple) -> bool,
) -> ProbeOutcome {
    let f = e.k();
    let mut out = ProbeOutcome {
        violating: 0,
        unequal: 0,
    };
    enumerate(f, &spec.shapes(max_arity), &mut |t| {
        if (spec.hypothesis)(f, t) || !point_ok(f, t) {
            return;
        }
        out.violating += 1;
        let (l, r) = spec.evaluate(e, t);
        if !l.agrees(&r) {
            out.unequal += 1;
        }
    });
    out
}
