use std::sync::Arc;

use ffhyper::verifier::invariance::{generator_invariance, psi_invariance, Shape};
use ffhyper::{
    build_field, build_field_with, registry_ids, run_suite, AddChar, CycNum, Evaluator, FieldOptions,
    GeneratorChoice, Mode, SweepOptions,
};

fn evaluators(p: u32, r: u32) -> (Evaluator<CycNum>, Evaluator<CycNum>) {
    let opts = FieldOptions {
        generator: GeneratorChoice::Largest,
        ..Default::default()
    };
    let a = Arc::new(build_field(p, r).unwrap());
    let b = Arc::new(build_field_with(p, r, opts).unwrap());
    assert_ne!(a.generator(), b.generator());
    (
        Evaluator::new(a, AddChar::standard()).unwrap(),
        Evaluator::new(b, AddChar::standard()).unwrap(),
    )
}

#[test]
fn every_additive_character_gives_the_same_functions() {
    for (p, r) in [(5, 1), (7, 1)] {
        let (e, _) = evaluators(p, r);
        let twists: Vec<AddChar> = e.k().nonzero().skip(1).map(AddChar::new).collect();
        for shape in Shape::standard() {
            let out = psi_invariance(&e, shape, &twists, true).unwrap();
            assert!(out.holds(), "{out:?}");
        }
    }
}

#[test]
fn generator_choice_only_relabels_characters() {
    for (p, r) in [(5, 1), (7, 1), (3, 2)] {
        let (a, b) = evaluators(p, r);
        for shape in Shape::standard() {
            let out = generator_invariance(&a, &b, shape).unwrap();
            assert!(out.holds(), "{out:?}");
        }
    }
}

#[test]
fn registry_counts_do_not_depend_on_the_generator() {
    let (a, b) = evaluators(5, 1);
    let ids: Vec<String> = registry_ids().into_iter().map(String::from).collect();
    let opts = SweepOptions {
        mode: Mode::Exhaustive,
        max_arity: 2,
        ..Default::default()
    };
    let x = run_suite::<CycNum>(&[a.field().clone()], &ids, &opts).unwrap();
    let y = run_suite::<CycNum>(&[b.field().clone()], &ids, &opts).unwrap();
    assert!(x.passed() && y.passed());
    for (r, s) in x.reports.iter().zip(&y.reports) {
        assert_eq!(r.identity, s.identity);
        assert_eq!((r.status, r.checked, r.skipped, r.failed), (s.status, s.checked, s.skipped, s.failed), "{}", r.identity);
    }
}
