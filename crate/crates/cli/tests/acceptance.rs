//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::Instant;

use ffhyper::verifier::crosscheck::cross_check;
use ffhyper::verifier::find;
use ffhyper::verifier::invariance::{generator_invariance, psi_invariance, Shape};
use ffhyper::{
    build_field, build_field_with, check_identity, prime_power, registry_ids, run_suite, AddChar, CycNum,
    Evaluator, FieldCtx, FieldOptions, GeneratorChoice, IdentitySpec, Mode, Status, SuiteReport, SweepOptions,
};

const FOUNDATIONS: &[&str] = &["gauss-inversion", "jacobi-gauss", "poch-chain", "poch-invert", "dup-gauss", "dup-poch"];
const ONE_VARIABLE: &[&str] = &["psi-0F0", "int-1F0", "int-1F1", "ana-1F1", "int-3F2", "euler-gauss", "trans-2F1"];
const SUM_REPS: &[&str] = &["sumrep-FA", "sumrep-FB", "sumrep-FC-kummer", "sumrep-FC-double"];
const QUAD_BRANCHES: &[&str] = &["gauss-quad-alpha-eps", "gauss-quad-alpha-bphi", "gauss-quad-alpha-b2"];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn field(q: u32) -> Arc<FieldCtx> {
    let (p, r) = prime_power(q as u64).unwrap();
    Arc::new(build_field(p, r).unwrap())
}

fn fields(qs: &[u32]) -> Vec<Arc<FieldCtx>> {
    qs.iter().map(|&q| field(q)).collect()
}

fn owned(ids: &[&str]) -> Vec<String> {
    ids.iter().map(|s| s.to_string()).collect()
}

fn exhaustive(max_arity: u32) -> SweepOptions {
    SweepOptions {
        mode: Mode::Exhaustive,
        max_arity,
        ..Default::default()
    }
}

fn sampled(max_arity: u32) -> SweepOptions {
    SweepOptions {
        mode: Mode::Sample,
        samples: 200,
        seed: 0,
        max_arity,
        ..Default::default()
    }
}

/// Every report passes, is vacuous, or is gated off in characteristic 2.
fn clean(suites: &[&SuiteReport]) -> Result<(u64, u64), String> {
    let (mut checked, mut skipped) = (0, 0);
    for s in suites {
        for r in &s.reports {
            let ok = match r.status {
                Status::Pass | Status::Vacuous => true,
                Status::Inapplicable => r.p == 2,
                Status::Fail | Status::Error => false,
            };
            if !ok {
                return Err(format!(
                    "{} at q={} is {} ({} of {} failed) {}",
                    r.identity,
                    r.q,
                    r.status.as_str(),
                    r.failed,
                    r.checked,
                    r.error.as_deref().unwrap_or("")
                ));
            }
            checked += r.checked;
            skipped += r.skipped;
        }
    }
    Ok((checked, skipped))
}

/// Ids never checked at any field across the given suites.
fn never_checked(ids: &[String], suites: &[&SuiteReport]) -> Vec<String> {
    ids.iter()
        .filter(|id| {
            suites
                .iter()
                .flat_map(|s| &s.reports)
                .all(|r| &r.identity != *id || r.checked == 0)
        })
        .cloned()
        .collect()
}

fn layer(ids: &[String], small: &[u32], large: &[u32], max_arity: u32) -> Outcome {
    let a = run_suite::<CycNum>(&fields(small), ids, &exhaustive(max_arity)).map_err(|e| e.to_string())?;
    let b = run_suite::<CycNum>(&fields(large), ids, &sampled(max_arity)).map_err(|e| e.to_string())?;
    let (checked, skipped) = clean(&[&a, &b])?;
    let missing = never_checked(ids, &[&a, &b]);
    if !missing.is_empty() {
        return Err(format!("never checked: {missing:?}"));
    }
    Ok(format!(
        "{} ids, {} reports, {checked} tuples checked, {skipped} skipped by hypothesis",
        ids.len(),
        a.reports.len() + b.reports.len()
    ))
}

fn foundations() -> Outcome {
    let s = run_suite::<CycNum>(
        &fields(&[3, 4, 5, 7, 8, 9, 11, 13, 16]),
        &owned(FOUNDATIONS),
        &exhaustive(2),
    )
    .map_err(|e| e.to_string())?;
    let (checked, _) = clean(&[&s])?;
    Ok(format!("{} reports, {checked} tuples checked exhaustively", s.reports.len()))
}

fn one_variable() -> Outcome {
    layer(&owned(ONE_VARIABLE), &[3, 4, 5], &[7, 9, 11, 13], 2)
}

fn sum_representations() -> Outcome {
    let ids = owned(SUM_REPS);
    let summary = layer(&ids, &[3, 4, 5], &[7, 9], 2)?;
    // arity 3 alone, sampled at q = 5
    let e = Evaluator::<CycNum>::new(field(5), AddChar::standard()).map_err(|e| e.to_string())?;
    let mut three = 0;
    for id in SUM_REPS {
        let spec = find::<CycNum>(id).map_err(|e| e.to_string())?;
        let spec = IdentitySpec { arities: &[3], ..spec };
        let r = check_identity(&e, &spec, &sampled(3 + spec.arity_shift)).map_err(|e| e.to_string())?;
        if r.status != Status::Pass {
            return Err(format!("{id} at n=3, q=5: {} ({} failed)", r.status.as_str(), r.failed));
        }
        three += r.checked;
    }
    Ok(format!("{summary}; n=3 at q=5: {three} tuples checked"))
}

fn full_registry() -> Outcome {
    let ids: Vec<String> = registry_ids().into_iter().map(String::from).collect();
    layer(&ids, &[3, 4, 5], &[7, 8, 9, 11, 13], 3)
}

fn quadratic_branches() -> Outcome {
    let mut total = 0;
    for id in QUAD_BRANCHES {
        let spec = find::<CycNum>(id).map_err(|e| e.to_string())?;
        for q in [5, 7, 9] {
            let e = Evaluator::<CycNum>::new(field(q), AddChar::standard()).map_err(|e| e.to_string())?;
            let r = check_identity(&e, &spec, &exhaustive(3)).map_err(|e| e.to_string())?;
            if r.status != Status::Pass || r.checked == 0 {
                return Err(format!("{id} at q={q}: {} with {} checked", r.status.as_str(), r.checked));
            }
            total += r.checked;
        }
    }
    Ok(format!("3 branches at q=5,7,9 exhaustively, {total} tuples checked"))
}

fn invariance() -> Outcome {
    let mut tuples = 0;
    for q in [5u32, 7, 9] {
        let (p, r) = prime_power(q as u64).unwrap();
        let a = Arc::new(build_field(p, r).map_err(|e| e.to_string())?);
        let opts = FieldOptions {
            generator: GeneratorChoice::Largest,
            ..Default::default()
        };
        let b = Arc::new(build_field_with(p, r, opts).map_err(|e| e.to_string())?);
        if a.generator() == b.generator() {
            return Err(format!("q={q}: no second generator"));
        }
        let ea = Evaluator::<CycNum>::new(a.clone(), AddChar::standard()).map_err(|e| e.to_string())?;
        let eb = Evaluator::<CycNum>::new(b, AddChar::standard()).map_err(|e| e.to_string())?;
        let twists: Vec<AddChar> = a.nonzero().skip(1).map(AddChar::new).collect();
        for shape in Shape::standard() {
            let psi = psi_invariance(&ea, shape, &twists, true).map_err(|e| e.to_string())?;
            let gen = generator_invariance(&ea, &eb, shape).map_err(|e| e.to_string())?;
            for out in [&psi, &gen] {
                if !out.holds() {
                    return Err(format!("{out:?}"));
                }
            }
            tuples += psi.tuples;
        }
    }
    Ok(format!("6 shapes at q=5,7,9, {tuples} parameter tuples, every ψ_a and a second generator"))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_ffhyper");
    let args = [
        "--q-list", "3,4,5,7", "--all", "--mode", "sample", "--samples", "50", "--seed", "0", "--json",
    ];
    let run = || {
        Command::new(bin)
            .args(args)
            .output()
            .map_err(|e| e.to_string())
            .and_then(|o| if o.status.success() { Ok(o.stdout) } else { Err(format!("exit {:?}", o.status.code())) })
    };
    let (x, y) = (run()?, run()?);
    if x != y {
        return Err("reports differ between identical runs".into());
    }
    Ok(format!("two runs, {} identical bytes", x.len()))
}

fn cross_backend() -> Outcome {
    let c = cross_check(field(13), 1000, 0).map_err(|e| e.to_string())?;
    if !c.holds() || c.max_error >= 1e-9 {
        return Err(format!("{c:?}"));
    }
    Ok(format!("{} evaluations at q=13, max relative error {:.1e}", c.evaluations, c.max_error))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("foundations", foundations),
        ("one-variable layer", one_variable),
        ("sum representations", sum_representations),
        ("full registry", full_registry),
        ("quadratic transformation branches", quadratic_branches),
        ("additive character and generator independence", invariance),
        ("determinism", determinism),
        ("cross-backend agreement", cross_backend),
    ];
    let mut ok = true;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail} [{secs:.1}s]"),
            Err(why) => {
                ok = false;
                println!("FAIL {name}: {why} [{secs:.1}s]");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
