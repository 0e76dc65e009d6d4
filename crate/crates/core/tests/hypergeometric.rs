mod common;

use common::{chars, close, exact, Oracle};
use ffhyper::{Error, FqElem, LauricellaParams, Scalar};

#[test]
fn one_variable_sums_match_float_oracle() {
    for q in [4, 5, 7, 8] {
        let e = exact(q);
        let o = Oracle::new(e.field().clone());
        let cs = chars(e.k());
        for &a in &cs {
            for &b in &cs {
                for &c in &cs {
                    for lam in e.k().elements() {
                        let got = e.hyp(&[a, b], &[c], lam).to_complex();
                        let want = o.hyper(&[a.index(), b.index()], &[c.index()], lam);
                        assert!(close(got, want), "q={q}");
                    }
                }
            }
            for lam in e.k().elements() {
                let got = e.hyp(&[a], &[], lam).to_complex();
                assert!(close(got, o.hyper(&[a.index()], &[], lam)));
                let got = e.hyp(&[], &[a], lam).to_complex();
                assert!(close(got, o.hyper(&[], &[a.index()], lam)));
            }
        }
    }
}

#[test]
fn lauricella_d_matches_float_oracle() {
    let e = exact(5);
    let o = Oracle::new(e.field().clone());
    let cs = chars(e.k());
    let pts: Vec<FqElem> = e.k().elements().collect();
    for &a in &cs {
        for &b1 in &cs {
            for &b2 in &cs {
                for &c in &cs {
                    for &x in &pts {
                        for &y in &pts {
                            let got = e.fd(a, &[b1, b2], c, &[x, y]).to_complex();
                            let want = o.fd(a.index(), &[b1.index(), b2.index()], c.index(), &[x, y]);
                            assert!(close(got, want));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn confluent_closed_forms() {
    for q in [3, 4, 5, 7, 9] {
        let e = exact(q);
        let k = e.k();
        let eps = e.eps();
        for lam in k.nonzero() {
            assert_eq!(e.hyp(&[], &[], lam), e.psi(k.neg(lam)), "0F0, q={q}");
        }
        for a in chars(k) {
            for lam in k.nonzero() {
                let got = e.hyp(&[a], &[], lam);
                if !a.is_trivial() || lam != FqElem::ONE {
                    assert_eq!(got, e.chi(a.conj(), k.sub(FqElem::ONE, lam)), "1F0, q={q}");
                }
            }
            if !a.is_trivial() {
                assert!(e.hyp(&[a], &[], FqElem::ONE).is_zero());
            }
        }
        // 1F1(α; ε; λ) at λ = 0 is 0, like every sum at 0
        assert!(e.hyp(&[eps], &[eps], FqElem::ZERO).is_zero());
    }
}

#[test]
fn zero_coordinates_annihilate() {
    let e = exact(5);
    let cs = chars(e.k());
    let z = FqElem::ZERO;
    let x = e.k().int(2);
    for &a in &cs {
        for &b in &cs {
            assert!(e.fa(a, &[b, b], &[a, b], &[x, z]).is_zero());
            assert!(e.fb(&[a, b], &[b, a], a, &[z, x]).is_zero());
            assert!(e.fc(a, b, &[a, b], &[z, z]).is_zero());
            assert!(e.fd(a, &[b, a], b, &[x, z]).is_zero());
        }
    }
}

#[test]
fn families_collapse_to_2f1_at_arity_one() {
    let e = exact(7);
    let cs = chars(e.k());
    for &a in &cs {
        for &b in &cs {
            for &c in &cs {
                for lam in e.k().elements() {
                    let f = e.hyp(&[a, b], &[c], lam);
                    assert_eq!(e.fa(a, &[b], &[c], &[lam]), f);
                    assert_eq!(e.fb(&[a], &[b], c, &[lam]), f);
                    assert_eq!(e.fc(a, b, &[c], &[lam]), f);
                    assert_eq!(e.fd(a, &[b], c, &[lam]), f);
                }
            }
        }
    }
}

#[test]
fn euler_gauss_value_at_one() {
    let e = exact(7);
    let cs = chars(e.k());
    for &a in &cs {
        for &b in &cs {
            for &c in &cs {
                let mut ab = [a, b];
                ab.sort();
                let mut ec = [e.eps(), c];
                ec.sort();
                if ab == ec {
                    continue;
                }
                let (ab, bb) = (a.conj(), b.conj());
                let want = e.gc(c).mul(&e.g(ab * bb * c)).mul(&e.gcinv(ab * c)).mul(&e.gcinv(bb * c));
                assert_eq!(e.hyp(&[a, b], &[c], FqElem::ONE), want);
            }
        }
    }
}

#[test]
fn fourier_pair_round_trips() {
    let e = exact(5);
    let k = e.k();
    let m = k.q() as i64 - 1;
    for eta in chars(k) {
        let fhat = e.fourier_transform(1, |t| e.chi(eta, t[0]));
        for (j, v) in fhat.iter().enumerate() {
            let want = if j as u32 == eta.index() { m } else { 0 };
            assert_eq!(*v, e.int(want));
        }
    }
    let ones = e.fourier_transform(1, |_| e.int(1));
    assert_eq!(ones[0], e.int(m));
    assert!(ones[1..].iter().all(|v| v.is_zero()));

    let f = |t: &[FqElem]| e.psi(k.add(t[0], k.mul(t[1], t[1]))).add(&e.chi(e.char(1), t[0]));
    let fhat = e.fourier_transform(2, f);
    for x in k.nonzero() {
        for y in k.nonzero() {
            assert_eq!(e.inverse_fourier(&fhat, &[x, y]), f(&[x, y]));
        }
    }
}

#[test]
fn grids_reproduce_values() {
    let e = exact(5);
    let cs = chars(e.k());
    let p = LauricellaParams::fc(cs[1], cs[2], &[cs[3], cs[0]]).unwrap();
    let grid = e.lauricella_grid(&p);
    for x in e.k().nonzero() {
        for y in e.k().nonzero() {
            let v = e.lauricella(&p, &[x, y]).unwrap();
            assert_eq!(e.inverse_fourier(&grid, &[x, y]).mul(&e.int(16)), v);
        }
    }
}

#[test]
fn arity_mismatch_is_reported() {
    let e = exact(5);
    let cs = chars(e.k());
    let p = LauricellaParams::fa(cs[1], &[cs[1], cs[2]], &[cs[0], cs[3]]).unwrap();
    let got = e.lauricella(&p, &[FqElem::ONE]);
    assert_eq!(got.unwrap_err(), Error::ArityMismatch { expected: 2, got: 1 });
    assert!(LauricellaParams::fa(cs[1], &[cs[1]], &[cs[0], cs[3]]).is_err());
}

#[test]
fn twisted_additive_character_leaves_values_fixed() {
    let e = exact(7);
    let k = e.k();
    let cs = chars(k);
    for a in k.nonzero().skip(1) {
        let t = e.with_psi(ffhyper::AddChar::new(a));
        assert_ne!(t.g(cs[1]), e.g(cs[1]));
        for &x in &cs {
            for &y in &cs {
                for lam in k.elements() {
                    assert_eq!(t.hyp(&[x, y], &[cs[2]], lam), e.hyp(&[x, y], &[cs[2]], lam));
                }
            }
        }
    }
}
