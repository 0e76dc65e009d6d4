//! Printed forms that the sweeps rejected, each pinned to the exact set of
//! tuples where it breaks, plus probes showing that hypotheses matter.

mod common;

use common::{chars, exact};
use ffhyper::verifier::{find, probe_hypothesis};
use ffhyper::{CycNum, Evaluator, FqElem, MulChar, Scalar, Tuple};

fn tuple(chars: Vec<MulChar>, points: Vec<FqElem>) -> Tuple {
    Tuple {
        n: 0,
        knob: 0,
        chars,
        points,
    }
}

fn sides(e: &Evaluator<CycNum>, id: &str, t: &Tuple) -> (CycNum, CycNum) {
    find::<CycNum>(id).unwrap().evaluate(e, t)
}

#[test]
fn transformation_of_2f1_breaks_only_at_one() {
    for q in [4, 5, 7] {
        let e = exact(q);
        let cs = chars(e.k());
        let mut broken = 0;
        for &a in &cs {
            for &b in &cs {
                for &c in &cs {
                    if [a, b].iter().any(|&x| x.is_trivial() || x == c) {
                        continue;
                    }
                    for lam in e.k().nonzero() {
                        let (l, r) = sides(&e, "trans-2F1", &tuple(vec![a, b, c], vec![lam]));
                        if lam == FqElem::ONE {
                            assert!(r.is_zero() && !l.is_zero());
                            broken += 1;
                        } else {
                            assert_eq!(l, r);
                        }
                    }
                }
            }
        }
        assert!(broken > 0);
    }
}

#[test]
fn confluent_sum_formula_breaks_only_at_zero() {
    for q in [3, 4, 5, 7] {
        let e = exact(q);
        for a in chars(e.k()) {
            for lam in e.k().elements() {
                let (l, r) = sides(&e, "ana-1F1", &tuple(vec![a], vec![lam]));
                if lam.is_zero() {
                    assert!(l.is_zero());
                    assert_eq!(r, e.int(1));
                } else {
                    assert_eq!(l, r);
                }
            }
        }
    }
}

#[test]
fn circled_duplication_as_printed_breaks_only_at_phi() {
    for q in [3, 5, 7, 9, 11, 13] {
        let e = exact(q);
        let ph = e.phi();
        for a in chars(e.k()) {
            let printed = e
                .chi(a, e.k().int(4))
                .mul(&e.gc(a))
                .mul(&e.g(a * ph))
                .mul(&e.ginv(ph));
            if a == ph {
                assert_eq!(e.gc(a.sq()), e.q());
                assert_eq!(printed, e.int(1));
            } else {
                assert_eq!(e.gc(a.sq()), printed, "q={q}");
            }
        }
    }
}

#[test]
fn convolution_breaks_only_on_cancelling_points() {
    for q in [3, 4, 5, 7] {
        let e = exact(q);
        let k = e.k();
        for v in chars(k).into_iter().filter(|v| !v.is_trivial()) {
            for x in k.elements() {
                for y in k.elements() {
                    let (l, r) = sides(&e, "conv-1F1-sum", &tuple(vec![v], vec![x, y]));
                    let cancelling = !x.is_zero() && !y.is_zero() && k.add(x, y).is_zero();
                    if cancelling {
                        assert_eq!(l.sub(&r).mul(&l.sub(&r)), e.int(1), "q={q}");
                    } else {
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }
}

#[test]
fn quadratic_reduction_has_no_half() {
    for q in [5, 7, 9, 11] {
        let e = exact(q);
        let k = e.k();
        let ph = e.phi();
        let mut broken = 0;
        for a in chars(k) {
            for lam in k.nonzero() {
                let pm = lam == FqElem::ONE || lam == k.neg(FqElem::ONE);
                if a.sq().is_trivial() && pm {
                    continue;
                }
                let lhs = e.hyp(&[a, a * ph], &[ph], k.mul(lam, lam));
                let a2b = a.sq().conj();
                let sum = e
                    .chi(a2b, k.add(FqElem::ONE, lam))
                    .add(&e.chi(a2b, k.sub(FqElem::ONE, lam)));
                let printed = sum.mul(&e.ratio(1, 2));
                assert_eq!(lhs, sum);
                if !sum.is_zero() {
                    assert_ne!(lhs, printed);
                    broken += 1;
                }
            }
        }
        assert!(broken > 0, "q={q}");
    }
}

#[test]
fn extra_identity_needs_q_at_trivial_c() {
    for q in [5, 7] {
        let e = exact(q);
        let spec = find::<CycNum>("extra-i").unwrap();
        let cs = chars(e.k());
        let mut broken = 0;
        for &a in &cs {
            for &b in &cs {
                for &c in &cs {
                    for lam in e.k().elements() {
                        let t = tuple(vec![a, b, c], vec![lam]);
                        if !(spec.hypothesis)(e.k(), &t) {
                            continue;
                        }
                        let (l, r) = spec.evaluate(&e, &t);
                        assert_eq!(l, r);
                        // the printed right side lacks q^δ(c)
                        let printed = if c.is_trivial() { r.mul(&e.ratio(1, q as i64)) } else { r };
                        if l != printed {
                            assert!(c.is_trivial());
                            broken += 1;
                        }
                    }
                }
            }
        }
        assert!(broken > 0, "q={q}");
    }
}

#[test]
fn euler_gauss_hypothesis_is_needed() {
    let e = exact(5);
    let spec = find::<CycNum>("euler-gauss").unwrap();
    let out = probe_hypothesis(&e, &spec, 3, |_, _| true);
    assert!(out.violating > 0);
    assert!(out.unequal > 0);
}

#[test]
fn fd_at_one_hypothesis_is_needed() {
    let e = exact(5);
    let spec = find::<CycNum>("fd-at-one").unwrap();
    let out = probe_hypothesis(&e, &spec, 3, |_, _| true);
    assert!(out.violating > 0);
    assert!(out.unequal > 0);
}
