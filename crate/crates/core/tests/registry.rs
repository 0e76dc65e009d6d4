mod common;

use common::{exact, field};
use ffhyper::verifier::find;
use ffhyper::{
    check_identity, registry, registry_ids, run_suite, CycNum, Error, Mode, Status, SweepOptions,
};

fn ids(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn exhaustive(max_arity: u32) -> SweepOptions {
    SweepOptions {
        mode: Mode::Exhaustive,
        max_arity,
        ..Default::default()
    }
}

fn sampled() -> SweepOptions {
    SweepOptions {
        mode: Mode::Sample,
        ..Default::default()
    }
}

#[test]
fn every_entry_passes_exhaustively_on_small_fields() {
    let all: Vec<String> = registry_ids().into_iter().map(String::from).collect();
    let fields = [field(3), field(4), field(5)];
    let suite = run_suite::<CycNum>(&fields, &all, &exhaustive(2)).unwrap();
    assert_eq!(suite.reports.len(), 3 * all.len());
    for r in &suite.reports {
        assert!(
            matches!(r.status, Status::Pass | Status::Vacuous | Status::Inapplicable),
            "{} at q={}: {:?} {:?}",
            r.identity,
            r.q,
            r.status,
            r.failures.first()
        );
        assert_eq!(r.checked + r.skipped, r.enumerated());
        if r.status == Status::Inapplicable {
            assert_eq!(r.p, 2);
        }
    }
    // something is checked for every entry at q = 4 or 5
    for id in &all {
        let checked: u64 = suite
            .reports
            .iter()
            .filter(|r| &r.identity == id && r.q >= 4)
            .map(|r| r.checked)
            .sum();
        let odd_only = find::<CycNum>(id).unwrap().requires_odd_p;
        assert!(checked > 0 || odd_only, "{id} never checked");
    }
}

#[test]
fn report_ordering_is_by_field_then_id() {
    let suite = run_suite::<CycNum>(
        &[field(5), field(3)],
        &ids(&["poch-chain", "euler-gauss", "poch-chain"]),
        &exhaustive(3),
    )
    .unwrap();
    let keys: Vec<(u32, &str)> = suite.reports.iter().map(|r| (r.q, r.identity.as_str())).collect();
    assert_eq!(
        keys,
        vec![(3, "euler-gauss"), (3, "poch-chain"), (5, "euler-gauss"), (5, "poch-chain")]
    );
}

#[test]
fn euler_gauss_counts_at_seven() {
    let e = exact(7);
    let spec = find::<CycNum>("euler-gauss").unwrap();
    let r = check_identity(&e, &spec, &exhaustive(3)).unwrap();
    // {α, β} = {ε, c}: (ε, c), (c, ε) for c ≠ ε, and (ε, ε) for c = ε
    assert_eq!((r.checked, r.skipped, r.failed), (216 - 11, 11, 0));
}

#[test]
fn quadratic_transformation_branches_pass_separately() {
    for id in ["gauss-quad-alpha-eps", "gauss-quad-alpha-bphi", "gauss-quad-alpha-b2", "gauss-quad"] {
        for q in [5, 7, 9] {
            let e = exact(q);
            let spec = find::<CycNum>(id).unwrap();
            let r = check_identity(&e, &spec, &exhaustive(3)).unwrap();
            assert_eq!(r.status, Status::Pass, "{id} q={q}");
            assert!(r.checked > 0);
        }
    }
}

#[test]
fn sum_representations_sampled() {
    let list = ids(&["sumrep-FA", "sumrep-FB", "sumrep-FC-kummer", "sumrep-FC-double"]);
    let suite = run_suite::<CycNum>(&[field(7), field(9)], &list, &sampled()).unwrap();
    assert!(suite.passed());
    for r in &suite.reports {
        assert_eq!(r.checked + r.skipped, 200);
        assert!(r.checked > 0);
    }
}

#[test]
fn sampling_is_reproducible_and_seed_dependent() {
    let list = ids(&["trans-2F1", "F2-2F1"]);
    let a = run_suite::<CycNum>(&[field(11)], &list, &sampled()).unwrap();
    let b = run_suite::<CycNum>(&[field(11)], &list, &sampled()).unwrap();
    assert_eq!(a.digest, b.digest);
    let other = SweepOptions {
        seed: 7,
        ..sampled()
    };
    let c = run_suite::<CycNum>(&[field(11)], &list, &other).unwrap();
    let counts = |s: &ffhyper::SuiteReport| s.reports.iter().map(|r| r.skipped).collect::<Vec<_>>();
    assert!(c.passed());
    assert_ne!(counts(&a), counts(&c));
}

#[test]
fn arity_cap_and_budget_are_enforced() {
    let e = exact(5);
    let spec = find::<CycNum>("fd-multinomial").unwrap();
    let err = check_identity(&e, &spec, &exhaustive(1)).unwrap_err();
    assert_eq!(err, Error::ArityOverCap { arity: 2, cap: 1 });

    let tight = SweepOptions {
        budget: 1000,
        ..exhaustive(3)
    };
    let spec = find::<CycNum>("sumrep-FA").unwrap();
    assert!(matches!(check_identity(&e, &spec, &tight), Err(Error::BudgetExceeded { .. })));
    let all: Vec<String> = registry_ids().into_iter().map(String::from).collect();
    let err = run_suite::<CycNum>(&[field(13)], &all, &exhaustive(3)).unwrap_err();
    assert!(matches!(err, Error::BudgetExceeded { .. }));
    // sample mode is not budgeted
    let spec = find::<CycNum>("sumrep-FA").unwrap();
    assert!(check_identity(&exact(13), &spec, &SweepOptions { samples: 3, ..sampled() }).is_ok());
}

#[test]
fn unknown_ids_are_rejected() {
    let err = run_suite::<CycNum>(&[field(3)], &ids(&["euler-gauss", "no-such"]), &sampled()).unwrap_err();
    assert_eq!(err, Error::UnknownIdentity("no-such".into()));
}

#[test]
fn corrupted_right_side_yields_a_witness() {
    let opts = SweepOptions {
        corrupt: Some("poch-invert".into()),
        ..exhaustive(3)
    };
    let suite = run_suite::<CycNum>(&[field(5)], &ids(&["poch-invert", "poch-chain"]), &opts).unwrap();
    assert!(!suite.passed());
    let bad = &suite.reports[1];
    assert_eq!(bad.identity, "poch-invert");
    assert_eq!(bad.status, Status::Fail);
    assert_eq!(bad.failed, bad.checked);
    let w = &bad.failures[0];
    assert_eq!(w.params.len(), 2);
    assert_eq!(suite.reports[0].status, Status::Pass);
}

#[test]
fn registry_is_generic_over_the_backend() {
    assert_eq!(registry::<ffhyper::CplxNum>().len(), registry_ids().len());
    let suite = run_suite::<ffhyper::CplxNum>(&[field(7)], &ids(&["int-3F2", "bailey-FA-FC"]), &sampled()).unwrap();
    assert!(suite.passed());
    assert!(suite.reports.iter().all(|r| r.backend == "float"));
}
