//! Every checked identity. Character slots are listed in each entry as
//! `[α, β, …]`; point slots likewise. Derived coordinates such as
//! `λ/(λ-1)` are computed from the free point, and the point exclusions
//! that make them well defined live in the hypothesis.

use crate::characters::{AddChar, MulChar};
use crate::finite_field::{FieldCtx, FqElem};
use crate::hyperfun::Evaluator;
use crate::scalar::Scalar;

use super::{Hypothesis, IdentitySpec, Side, Tuple};

const ONE: FqElem = FqElem::ONE;

fn spec<S: Scalar>(
    id: &'static str,
    description: &'static str,
    char_slots: fn(u32, u32) -> usize,
    point_slots: fn(u32, u32) -> usize,
    lhs: Side<S>,
    rhs: Side<S>,
) -> IdentitySpec<S> {
    IdentitySpec {
        id,
        description,
        arities: &[0],
        arity_shift: 0,
        knobs: |_| vec![0],
        char_slots,
        point_slots,
        requires_odd_p: false,
        hypothesis: |_, _| true,
        lhs,
        rhs,
    }
}

impl<S: Scalar> IdentitySpec<S> {
    fn odd(mut self) -> Self {
        self.requires_odd_p = true;
        self
    }

    fn when(mut self, h: Hypothesis) -> Self {
        self.hypothesis = h;
        self
    }

    fn arity(mut self, a: &'static [u32]) -> Self {
        self.arities = a;
        self
    }

    fn knobs(mut self, k: fn(u32) -> Vec<u32>) -> Self {
        self.knobs = k;
        self
    }

    fn shift(mut self, s: u32) -> Self {
        self.arity_shift = s;
        self
    }
}

fn phi(k: &FieldCtx) -> MulChar {
    MulChar::quadratic(k).expect("odd characteristic")
}

fn nontrivial(cs: &[MulChar]) -> bool {
    cs.iter().all(|c| !c.is_trivial())
}

fn prod<S: Scalar>(xs: &[S]) -> S {
    let (first, rest) = xs.split_first().expect("empty product");
    rest.iter().fold(first.clone(), |acc, x| acc.mul(x))
}

fn mul_all(cs: &[MulChar]) -> MulChar {
    cs.iter().copied().reduce(|a, b| a * b).expect("empty product")
}

fn sub1(k: &FieldCtx, x: FqElem) -> FqElem {
    k.sub(ONE, x)
}

fn div(k: &FieldCtx, a: FqElem, b: FqElem) -> FqElem {
    k.div(a, b).expect("gated by the hypothesis")
}

fn sq(k: &FieldCtx, x: FqElem) -> FqElem {
    k.mul(x, x)
}

/// `x, y ≠ 0` and `x + y = 0`.
fn cancelling(k: &FieldCtx, x: FqElem, y: FqElem) -> bool {
    !x.is_zero() && !y.is_zero() && k.add(x, y).is_zero()
}

fn is_pm_one(k: &FieldCtx, x: FqElem) -> bool {
    x == ONE || x == k.neg(ONE)
}

/// `Σ_t a_t ζ^{e_t}` for owned terms.
fn wsum<S: Scalar>(e: &Evaluator<S>, terms: &[(S, u64)]) -> S {
    let refs: Vec<(&S, u64)> = terms.iter().map(|(a, k)| (a, *k)).collect();
    S::weighted_zeta_sum(e.ring(), &refs)
}

/// `1/(1-q)`.
fn inv_one_minus_q<S: Scalar>(e: &Evaluator<S>) -> S {
    e.ratio(1, 1 - e.k().q() as i64)
}

fn chars_of<S: Scalar>(e: &Evaluator<S>) -> impl Iterator<Item = MulChar> {
    let m = e.k().q() - 1;
    (0..m).map(move |j| MulChar::new(j as i64, m))
}

/// `Σ_{α' ∈ {α, αφ}} (top)_α' / (φ)_α' · f(α')`.
fn phi_pair_sum<S: Scalar>(
    e: &Evaluator<S>,
    alpha: MulChar,
    top: MulChar,
    f: impl Fn(MulChar) -> S,
) -> S {
    let ph = e.phi();
    [alpha, alpha * ph]
        .into_iter()
        .map(|a| prod(&[e.poch(top, a), e.g(ph), e.ginv(ph * a), f(a)]))
        .reduce(|x, y| x.add(&y))
        .unwrap()
}

fn gauss_quad<S: Scalar>(e: &Evaluator<S>, a: MulChar, b: MulChar, lam: FqElem) -> [S; 2] {
    let k = e.k();
    let ph = e.phi();
    let lhs = e.hyp(&[a, a * b.conj() * ph], &[b * ph], sq(k, lam));
    let one_plus = k.add(ONE, lam);
    let z = div(k, k.mul(k.int(4), lam), sq(k, one_plus));
    let rhs = e.chi(a.sq().conj(), one_plus).mul(&e.hyp(&[a, b], &[b.sq()], z));
    [lhs, rhs]
}

fn gauss_quad_hyp(k: &FieldCtx, t: &Tuple, beta: MulChar) -> bool {
    !is_pm_one(k, t.x(0)) && !beta.sq().is_trivial()
}

/// Parameter slots of each family in the additive-character check.
fn family_slots(n: u32, fam: u32) -> (usize, usize) {
    let n = n as usize;
    match fam {
        0 | 1 => (2 * n + 1, n),
        2 | 3 => (n + 2, n),
        4 => (3, 1),
        _ => (5, 1),
    }
}

fn family_value<S: Scalar>(e: &Evaluator<S>, fam: u32, n: usize, cs: &[MulChar], pts: &[FqElem]) -> S {
    match fam {
        0 => e.fa(cs[0], &cs[1..=n], &cs[n + 1..2 * n + 1], pts),
        1 => e.fb(&cs[..n], &cs[n..2 * n], cs[2 * n], pts),
        2 => e.fc(cs[0], cs[1], &cs[2..n + 2], pts),
        3 => e.fd(cs[0], &cs[1..=n], cs[n + 1], pts),
        4 => e.hyp(&cs[..2], &cs[2..3], pts[0]),
        _ => e.hyp(&cs[..3], &cs[3..5], pts[0]),
    }
}

/// Splits `[α, β_1..β_n, c]` style slots for the `F_D` entries.
fn fd_parts(t: &Tuple) -> (MulChar, &[MulChar], MulChar) {
    let n = t.n as usize;
    (t.c(0), &t.chars[1..=n], t.c(n + 1))
}

/// `β_{i+1} ⋯ β_n` for the `F_D` entries.
fn fd_tail(t: &Tuple) -> MulChar {
    let (_, beta, _) = fd_parts(t);
    mul_all(&beta[t.knob as usize..])
}

pub fn registry_ids() -> Vec<&'static str> {
    registry::<crate::cyclotomic::CycNum>()
        .iter()
        .map(|s| s.id)
        .collect()
}

pub fn registry<S: Scalar>() -> Vec<IdentitySpec<S>> {
    let mut out = foundations::<S>();
    out.extend(one_variable::<S>());
    out.extend(sum_representations::<S>());
    out.extend(appell::<S>());
    out.extend(quadratic::<S>());
    out.extend(lauricella_d::<S>());
    out
}

fn foundations<S: Scalar>() -> Vec<IdentitySpec<S>> {
    vec![
        // [η]
        spec::<S>(
            "gauss-inversion",
            "g(η) g°(η̄) = η(-1) q",
            |_, _| 1,
            |_, _| 0,
            |e, t| e.g(t.c(0)).mul(&e.gc(t.c(0).conj())),
            |e, t| e.chi(t.c(0), e.k().int(-1)).mul(&e.q()),
        ),
        // [η_1..η_n]
        spec::<S>(
            "jacobi-gauss",
            "Jacobi sum from Gauss sums against direct summation",
            |n, _| n as usize,
            |_, _| 0,
            |e, t| e.jac(&t.chars),
            |e, t| e.tables().jacobi_by_summation(&t.chars),
        )
        .arity(&[2, 3]),
        // [α, ν, μ]; knob 1 uses the circled symbol
        spec::<S>(
            "poch-chain",
            "(α)_{νμ} = (α)_ν (αν)_μ",
            |_, _| 3,
            |_, _| 0,
            |e, t| {
                let [a, v, u] = t.cs();
                if t.knob == 0 { e.poch(a, v * u) } else { e.pochc(a, v * u) }
            },
            |e, t| {
                let [a, v, u] = t.cs();
                if t.knob == 0 {
                    e.poch(a, v).mul(&e.poch(a * v, u))
                } else {
                    e.pochc(a, v).mul(&e.pochc(a * v, u))
                }
            },
        )
        .knobs(|_| vec![0, 1]),
        // [α, ν]
        spec::<S>(
            "poch-invert",
            "(α)_ν = ν(-1) / (ᾱ)°_ν̄",
            |_, _| 2,
            |_, _| 0,
            |e, t| e.poch(t.c(0), t.c(1)),
            |e, t| {
                let [a, v] = t.cs();
                e.chi(v, e.k().int(-1)).mul(&e.pochc_inv(a.conj(), v.conj()))
            },
        ),
        // [α]; knob 1 uses g°
        spec::<S>(
            "dup-gauss",
            "g(α²) = α(4) g(α) g(αφ) / g(φ), and with g° in place of g",
            |_, _| 1,
            |_, _| 0,
            |e, t| {
                let a2 = t.c(0).sq();
                if t.knob == 0 { e.g(a2) } else { e.gc(a2) }
            },
            |e, t| {
                let a = t.c(0);
                let ph = e.phi();
                // the circled form needs g°(αφ); with g(αφ) it fails at α = φ
                let (first, second) = if t.knob == 0 {
                    (e.g(a), e.g(a * ph))
                } else {
                    (e.gc(a), e.gc(a * ph))
                };
                prod(&[e.chi(a, e.k().int(4)), first, second, e.ginv(ph)])
            },
        )
        .odd()
        .knobs(|_| vec![0, 1]),
        // [α, ν]; knob 1 uses the circled symbol
        spec::<S>(
            "dup-poch",
            "(α²)_{ν²} = ν(4) (α)_ν (αφ)_ν",
            |_, _| 2,
            |_, _| 0,
            |e, t| {
                let [a, v] = t.cs();
                if t.knob == 0 { e.poch(a.sq(), v.sq()) } else { e.pochc(a.sq(), v.sq()) }
            },
            |e, t| {
                let [a, v] = t.cs();
                let ph = e.phi();
                let four = e.chi(v, e.k().int(4));
                if t.knob == 0 {
                    prod(&[four, e.poch(a, v), e.poch(a * ph, v)])
                } else {
                    prod(&[four, e.pochc(a, v), e.pochc(a * ph, v)])
                }
            },
        )
        .odd()
        .knobs(|_| vec![0, 1]),
    ]
}

fn one_variable<S: Scalar>() -> Vec<IdentitySpec<S>> {
    vec![
        // [], [λ]
        spec::<S>(
            "psi-0F0",
            "0F0(λ) = ψ(-λ), λ ≠ 0",
            |_, _| 0,
            |_, _| 1,
            |e, t| e.hyp(&[], &[], t.x(0)),
            |e, t| e.psi(e.k().neg(t.x(0))),
        )
        .when(|_, t| !t.x(0).is_zero()),
        // [α], [λ]
        spec::<S>(
            "int-1F0",
            "1F0(α; λ) = ᾱ(1-λ)",
            |_, _| 1,
            |_, _| 1,
            |e, t| e.hyp(&[t.c(0)], &[], t.x(0)),
            |e, t| e.chi(t.c(0).conj(), sub1(e.k(), t.x(0))),
        )
        .when(|_, t| !t.x(0).is_zero() && (!t.c(0).is_trivial() || t.x(0) != ONE)),
        // [α_1..α_n, β_1..β_n], [λ]
        spec::<S>(
            "int-1F1",
            "nFn as a sum over u ∈ k^n",
            |n, _| 2 * n as usize,
            |_, _| 1,
            |e, t| {
                let n = t.n as usize;
                let (a, b) = t.chars.split_at(n);
                let mut acc = e.hyp(a, b, t.x(0));
                for i in 0..n {
                    acc = acc.mul(&e.jac(&[a[i], a[i].conj() * b[i]]));
                }
                if n % 2 == 1 { acc.neg() } else { acc }
            },
            |e, t| {
                let (a, b) = t.chars.split_at(t.n as usize);
                e.hyper_nfn_integral(a, b, t.x(0))
            },
        )
        .arity(&[1, 2])
        .when(|_, t| {
            let (a, b) = t.chars.split_at(t.n as usize);
            a.iter().zip(b).all(|(x, y)| x != y) && !t.x(0).is_zero()
        }),
        // [α], [λ]
        spec::<S>(
            "ana-1F1",
            "1F1(α; ε; λ) as a one-variable sum",
            |_, _| 1,
            |_, _| 1,
            |e, t| e.hyp(&[t.c(0)], &[e.eps()], t.x(0)),
            |e, t| {
                let k = e.k();
                let (a, lam) = (t.c(0), t.x(0));
                let s = e.char_sum(1, |u| {
                    let u = u[0];
                    if u.is_zero() || u == ONE {
                        return None;
                    }
                    Some(e.psi_exp(k.neg(k.mul(lam, u))) + e.chi_exp(a, div(k, u, sub1(k, u)))?)
                });
                let mut out = e.chi(a, k.int(-1)).mul(&s).neg();
                if a.is_trivial() {
                    out = out.add(&e.int(k.q() as i64 - 1).mul(&e.psi(k.neg(lam))));
                }
                out
            },
        )
        .when(|_, t| !t.x(0).is_zero()),
        // [α_0, α_1, α_2, β_1, β_2], [λ]
        spec::<S>(
            "int-3F2",
            "3F2 as a double sum",
            |_, _| 5,
            |_, _| 1,
            |e, t| {
                let [a0, a1, a2, b1, b2] = t.cs();
                prod(&[
                    e.jac(&[a1, a1.conj() * b1]),
                    e.jac(&[a2, a2.conj() * b2]),
                    e.hyp(&[a0, a1, a2], &[b1, b2], t.x(0)),
                ])
            },
            |e, t| {
                let [a0, a1, a2, b1, b2] = t.cs();
                e.hyper_3f2_doublesum([a0, a1, a2], [b1, b2], t.x(0))
                    .expect("gated by the hypothesis")
            },
        )
        .when(|_, t| {
            let [a0, a1, a2, b1, b2] = t.cs();
            nontrivial(&[a0, a1.conj() * b1, a2.conj() * b2]) && !t.x(0).is_zero()
        }),
        // [α, β, c]
        spec::<S>(
            "euler-gauss",
            "2F1(α, β; c; 1) as a Gauss-sum quotient",
            |_, _| 3,
            |_, _| 0,
            |e, t| {
                let [a, b, c] = t.cs();
                e.hyp(&[a, b], &[c], ONE)
            },
            |e, t| {
                let [a, b, c] = t.cs();
                let (ab, bb) = (a.conj(), b.conj());
                prod(&[e.gc(c), e.g(ab * bb * c), e.gcinv(ab * c), e.gcinv(bb * c)])
            },
        )
        .when(|_, t| {
            let [a, b, c] = t.cs();
            let mut lhs = vec![a, b];
            let mut rhs = vec![MulChar::trivial(c.group_order()), c];
            lhs.sort();
            lhs.dedup();
            rhs.sort();
            rhs.dedup();
            lhs != rhs
        }),
        // [α, β, c], [λ]
        spec::<S>(
            "trans-2F1",
            "2F1 at λ against 2F1 at (λ-1)/λ",
            |_, _| 3,
            |_, _| 1,
            |e, t| {
                let [a, b, c] = t.cs();
                e.hyp(&[a, b], &[c], t.x(0))
            },
            |e, t| {
                let k = e.k();
                let [a, b, c] = t.cs();
                let lam = t.x(0);
                let (ab, bb, cb) = (a.conj(), b.conj(), c.conj());
                prod(&[
                    e.gc(c),
                    e.g(a * b * cb),
                    e.ginv(a),
                    e.ginv(b),
                    e.chi(a * cb, lam),
                    e.chi(ab * bb * c, sub1(k, lam)),
                    e.hyp(&[ab, ab * c], &[ab * bb * c], div(k, k.sub(lam, ONE), lam)),
                ])
            },
        )
        // λ = 1 is excluded as well: there the right side vanishes while
        // the left side is the nonzero value at 1.
        .when(|_, t| {
            let [a, b, c] = t.cs();
            ![a, b].iter().any(|&x| x.is_trivial() || x == c) && !t.x(0).is_zero() && t.x(0) != ONE
        }),
        // [α_1, α_2, β_1, β_2], [λ]
        spec::<S>(
            "erdelyi-2F2",
            "character sum of products of two 1F1 equals ψ(λ) 2F2",
            |_, _| 4,
            |_, _| 1,
            |e, t| {
                let [a1, a2, b1, b2] = t.cs();
                let k = e.k();
                let lam = t.x(0);
                if lam.is_zero() {
                    return e.zero();
                }
                let eps = e.eps();
                let terms: Vec<(S, u64)> = chars_of(e)
                    .map(|v| {
                        let c = prod(&[
                            e.poch(a1, v),
                            e.poch(a2, v),
                            e.pochc_inv(eps, v),
                            e.pochc_inv(b1, v),
                            e.pochc_inv(b2, v),
                            e.hyp(&[a1 * v], &[b1 * v], k.neg(lam)),
                            e.hyp(&[a2 * v], &[b2 * v], k.neg(lam)),
                        ]);
                        (c, e.chi_exp(v, lam).unwrap())
                    })
                    .collect();
                wsum(e, &terms).mul(&inv_one_minus_q(e))
            },
            |e, t| {
                let [a1, a2, b1, b2] = t.cs();
                e.psi(t.x(0))
                    .mul(&e.hyp(&[a1.conj() * b1, a2.conj() * b2], &[b1, b2], t.x(0)))
            },
        )
        .when(|_, t| {
            let [a1, a2, b1, b2] = t.cs();
            nontrivial(&[a1, a2]) && a1 != b1 && a2 != b2
        }),
        // [ν], [x, y]
        spec::<S>(
            "conv-1F1-sum",
            "convolution of 1F1(·; ε; ·) over η",
            |_, _| 1,
            |_, _| 2,
            |e, t| {
                let v = t.c(0);
                let eps = e.eps();
                let (x, y) = (t.x(0), t.x(1));
                chars_of(e)
                    .map(|h| e.hyp(&[h.conj()], &[eps], x).mul(&e.hyp(&[v.conj() * h], &[eps], y)))
                    .reduce(|a, b| a.add(&b))
                    .unwrap()
                    .mul(&inv_one_minus_q(e))
            },
            |e, t| {
                let k = e.k();
                let vb = t.c(0).conj();
                let eps = e.eps();
                let (x, y) = (t.x(0), t.x(1));
                let f = |z| e.hyp(&[vb], &[eps], z);
                f(k.add(x, y))
                    .sub(&e.psi(k.neg(y)).mul(&f(x)))
                    .sub(&e.psi(k.neg(x)).mul(&f(y)))
            },
        )
        // x + y = 0 with x, y ≠ 0 is excluded: the sides differ by 1 there
        .when(|k, t| !t.c(0).is_trivial() && !cancelling(k, t.x(0), t.x(1))),
        // [α], [λ]
        spec::<S>(
            "kummer-product",
            "ψ(λ) 1F1(α; α²; 2λ) = 0F1(; αφ; λ²/4)",
            |_, _| 1,
            |_, _| 1,
            |e, t| {
                let a = t.c(0);
                let k = e.k();
                e.psi(t.x(0)).mul(&e.hyp(&[a], &[a.sq()], k.mul(k.int(2), t.x(0))))
            },
            |e, t| {
                let k = e.k();
                let z = div(k, sq(k, t.x(0)), k.int(4));
                e.hyp(&[], &[t.c(0) * e.phi()], z)
            },
        )
        .odd()
        .when(|_, t| !t.c(0).is_trivial()),
    ]
}

fn sum_representations<S: Scalar>() -> Vec<IdentitySpec<S>> {
    vec![
        // [α, β_1..β_n, c_1..c_n], [λ_1..λ_n]
        spec::<S>(
            "sumrep-FA",
            "-g(α) F_A as a sum of products of 1F1",
            |n, _| 2 * n as usize + 1,
            |n, _| n as usize,
            |e, t| {
                let n = t.n as usize;
                let a = t.c(0);
                e.g(a).mul(&e.fa(a, &t.chars[1..=n], &t.chars[n + 1..], &t.points)).neg()
            },
            |e, t| {
                let k = e.k();
                let n = t.n as usize;
                let a = t.c(0);
                let terms: Vec<(S, u64)> = k
                    .nonzero()
                    .map(|s| {
                        let v = (0..n)
                            .map(|i| {
                                e.hyp(&[t.c(1 + i)], &[t.c(1 + n + i)], k.mul(t.x(i), s))
                            })
                            .collect::<Vec<_>>();
                        (prod(&v), e.psi_exp(s) + e.chi_exp(a, s).unwrap())
                    })
                    .collect();
                wsum(e, &terms)
            },
        )
        .arity(&[1, 2, 3]),
        // [α_1..α_n, β_1..β_n, c], [λ_1..λ_n]
        spec::<S>(
            "sumrep-FB",
            "F_B as a sum of products of 2F0",
            |n, _| 2 * n as usize + 1,
            |n, _| n as usize,
            |e, t| {
                let n = t.n as usize;
                let c = t.c(2 * n);
                prod(&[
                    e.q().neg(),
                    e.gcinv(c),
                    e.fb(&t.chars[..n], &t.chars[n..2 * n], c, &t.points),
                ])
            },
            |e, t| {
                let k = e.k();
                let n = t.n as usize;
                let cb = t.c(2 * n).conj();
                let terms: Vec<(S, u64)> = k
                    .nonzero()
                    .map(|s| {
                        let v = (0..n)
                            .map(|i| e.hyp(&[t.c(i), t.c(n + i)], &[], div(k, t.x(i), s)))
                            .collect::<Vec<_>>();
                        (prod(&v), e.psi_exp(k.neg(s)) + e.chi_exp(cb, s).unwrap())
                    })
                    .collect();
                wsum(e, &terms)
            },
        )
        .arity(&[1, 2]),
        // [α, β_1..β_n], [λ_1..λ_n]
        spec::<S>(
            "sumrep-FC-kummer",
            "-g(α²) F_C(α; αφ; β; λ) as a sum of products of 0F1",
            |n, _| n as usize + 1,
            |n, _| n as usize,
            |e, t| {
                let a = t.c(0);
                e.g(a.sq())
                    .mul(&e.fc(a, a * e.phi(), &t.chars[1..], &t.points))
                    .neg()
            },
            |e, t| {
                let k = e.k();
                let n = t.n as usize;
                let a2 = t.c(0).sq();
                let four = k.int(4);
                let terms: Vec<(S, u64)> = k
                    .nonzero()
                    .map(|s| {
                        let s2 = div(k, sq(k, s), four);
                        let v = (0..n)
                            .map(|i| e.hyp(&[], &[t.c(1 + i)], k.mul(t.x(i), s2)))
                            .collect::<Vec<_>>();
                        (prod(&v), e.psi_exp(s) + e.chi_exp(a2, s).unwrap())
                    })
                    .collect();
                wsum(e, &terms)
            },
        )
        .arity(&[1, 2])
        .odd(),
        // [α, β, c_1..c_n], [λ_1..λ_n]
        spec::<S>(
            "sumrep-FC-double",
            "g(α) g(β) F_C as a double sum of products of 0F1",
            |n, _| n as usize + 2,
            |n, _| n as usize,
            |e, t| {
                let [a, b] = t.cs();
                prod(&[e.g(a), e.g(b), e.fc(a, b, &t.chars[2..], &t.points)])
            },
            |e, t| {
                let k = e.k();
                let n = t.n as usize;
                let [a, b] = t.cs();
                let mut terms: Vec<(S, u64)> = Vec::new();
                for s in k.nonzero() {
                    for u in k.nonzero() {
                        let st = k.mul(s, u);
                        let v = (0..n)
                            .map(|i| e.hyp(&[], &[t.c(2 + i)], k.mul(t.x(i), st)))
                            .collect::<Vec<_>>();
                        let z = e.psi_exp(k.add(s, u))
                            + e.chi_exp(a, s).unwrap()
                            + e.chi_exp(b, u).unwrap();
                        terms.push((prod(&v), z));
                    }
                }
                wsum(e, &terms)
            },
        )
        .arity(&[1, 2]),
        // [α_1..α_n, β_1..β_n, c], [λ_1..λ_n]
        spec::<S>(
            "fb-via-fa",
            "F_B at λ as F_A at 1/λ",
            |n, _| 2 * n as usize + 1,
            |n, _| n as usize,
            |e, t| {
                let n = t.n as usize;
                e.fb(&t.chars[..n], &t.chars[n..2 * n], t.c(2 * n), &t.points)
            },
            |e, t| {
                let k = e.k();
                let n = t.n as usize;
                let (a, rest) = t.chars.split_at(n);
                let (b, c) = (&rest[..n], rest[n]);
                let bsum = mul_all(b);
                let mut factors = vec![e.poch(c.conj(), bsum)];
                for i in 0..n {
                    factors.push(e.poch(a[i], b[i].conj()));
                    factors.push(e.chi(b[i].conj(), t.x(i)));
                }
                let lower: Vec<MulChar> = (0..n).map(|i| a[i].conj() * b[i]).collect();
                let pts: Vec<FqElem> = t.points.iter().map(|&x| div(k, ONE, x)).collect();
                factors.push(e.fa(bsum * c.conj(), b, &lower, &pts));
                prod(&factors)
            },
        )
        .arity(&[1, 2])
        .when(|_, t| t.points.iter().all(|x| !x.is_zero())),
        // knob: family (0 F_A, 1 F_B, 2 F_C, 3 F_D, 4 2F1, 5 3F2)
        // [parameters], [point…, a]
        spec::<S>(
            "psi-choice",
            "values do not depend on the additive character",
            |n, fam| family_slots(n, fam).0,
            |n, fam| family_slots(n, fam).1 + 1,
            |e, t| {
                let pts = &t.points[..t.points.len() - 1];
                family_value(e, t.knob, t.n as usize, &t.chars, pts)
            },
            |e, t| {
                let (a, pts) = t.points.split_last().unwrap();
                let twisted = e.with_psi(AddChar::new(*a));
                family_value(&twisted, t.knob, t.n as usize, &t.chars, pts)
            },
        )
        .arity(&[1, 2])
        .knobs(|n| if n == 1 { (0..6).collect() } else { (0..4).collect() })
        .when(|_, t| {
            let a = *t.points.last().unwrap();
            !a.is_zero() && a != ONE
        }),
    ]
}

fn appell<S: Scalar>() -> Vec<IdentitySpec<S>> {
    vec![
        // [α, ν, β_1..β_n, c_1..c_n], [x, y, λ_1..λ_n]
        spec::<S>(
            "redFA-sum",
            "summing F_A over a split character lowers the arity",
            |n, _| 2 * n as usize + 2,
            |n, _| n as usize + 2,
            |e, t| {
                let n = t.n as usize;
                let [a, v] = t.cs();
                let eps = e.eps();
                let (beta, c) = t.chars[2..].split_at(n);
                chars_of(e)
                    .map(|h| {
                        let bs: Vec<MulChar> = [h.conj(), v.conj() * h].into_iter().chain(beta.iter().copied()).collect();
                        let cs: Vec<MulChar> = [eps, eps].into_iter().chain(c.iter().copied()).collect();
                        e.fa(a, &bs, &cs, &t.points)
                    })
                    .reduce(|x, y| x.add(&y))
                    .unwrap()
                    .mul(&inv_one_minus_q(e))
            },
            |e, t| {
                let k = e.k();
                let n = t.n as usize;
                let [a, v] = t.cs();
                let (beta, c) = t.chars[2..].split_at(n);
                let bs: Vec<MulChar> = std::iter::once(v.conj()).chain(beta.iter().copied()).collect();
                let cs: Vec<MulChar> = std::iter::once(e.eps()).chain(c.iter().copied()).collect();
                let (x, y, lam) = (t.x(0), t.x(1), &t.points[2..]);
                let at = |first: FqElem, scale: FqElem| {
                    let pts: Vec<FqElem> = std::iter::once(first)
                        .chain(lam.iter().map(|&l| div(k, l, scale)))
                        .collect();
                    e.fa(a, &bs, &cs, &pts)
                };
                let (sx, sy) = (sub1(k, x), sub1(k, y));
                at(k.add(x, y), ONE)
                    .sub(&e.chi(a.conj(), sx).mul(&at(div(k, y, sx), sx)))
                    .sub(&e.chi(a.conj(), sy).mul(&at(div(k, x, sy), sy)))
            },
        )
        .arity(&[0, 1])
        .shift(2)
        .when(|k, t| {
            !t.c(1).is_trivial() && t.x(0) != ONE && t.x(1) != ONE && !cancelling(k, t.x(0), t.x(1))
        }),
        // [ν]
        spec::<S>(
            "F2-half-half",
            "the split sum of F_2 at (1/2, 1/2) is -1",
            |_, _| 1,
            |_, _| 0,
            |e, t| {
                let k = e.k();
                let half = div(k, ONE, k.int(2));
                let eps = e.eps();
                let v = t.c(0);
                chars_of(e)
                    .map(|h| e.fa(eps, &[h.conj(), v.conj() * h], &[eps, eps], &[half, half]))
                    .reduce(|x, y| x.add(&y))
                    .unwrap()
                    .mul(&inv_one_minus_q(e))
            },
            |e, _| e.int(-1),
        )
        .odd()
        .when(|_, t| !t.c(0).is_trivial()),
        // [α, β_1..β_n], [λ_1..λ_n]
        spec::<S>(
            "bailey-FA-FC",
            "F_C with quadratic parameters as F_A",
            |n, _| n as usize + 1,
            |n, _| n as usize,
            |e, t| {
                let k = e.k();
                let a = t.c(0);
                let ph = e.phi();
                let bs: Vec<MulChar> = t.chars[1..].iter().map(|&b| b * ph).collect();
                let pts: Vec<FqElem> = t.points.iter().map(|&x| sq(k, x)).collect();
                e.fc(a, a * ph, &bs, &pts)
            },
            |e, t| {
                let k = e.k();
                let a = t.c(0);
                let s = t.points.iter().fold(ONE, |acc, &x| k.add(acc, x));
                let bs = &t.chars[1..];
                let cs: Vec<MulChar> = bs.iter().map(|b| b.sq()).collect();
                let two = k.int(2);
                let pts: Vec<FqElem> = t.points.iter().map(|&x| div(k, k.mul(two, x), s)).collect();
                e.chi(a.sq().conj(), s).mul(&e.fa(a.sq(), bs, &cs, &pts))
            },
        )
        .arity(&[1, 2])
        .odd()
        .when(|k, t| {
            let s = t.points.iter().fold(ONE, |acc, &x| k.add(acc, x));
            nontrivial(&t.chars[1..]) && !s.is_zero()
        }),
        // [α], [λ]
        spec::<S>(
            "F2red-i",
            "2F1(α, αφ; φ; λ²) = ᾱ²(1+λ) + ᾱ²(1-λ)",
            |_, _| 1,
            |_, _| 1,
            |e, t| {
                let a = t.c(0);
                let ph = e.phi();
                e.hyp(&[a, a * ph], &[ph], sq(e.k(), t.x(0)))
            },
            |e, t| {
                let k = e.k();
                let a2b = t.c(0).sq().conj();
                // no factor 1/2: the left side is 1F0(α²; λ) + 1F0(α²; -λ)
                e.chi(a2b, k.add(ONE, t.x(0))).add(&e.chi(a2b, sub1(k, t.x(0))))
            },
        )
        .odd()
        .when(|k, t| !t.x(0).is_zero() && (!t.c(0).sq().is_trivial() || !is_pm_one(k, t.x(0)))),
        // [α, χ, η], [λ]
        spec::<S>(
            "F2red-ii",
            "F_2 at (2λ/(1+λ), 2/(1+λ)) as two 2F1",
            |_, _| 3,
            |_, _| 1,
            |e, t| {
                let [a, x, h] = t.cs();
                let ph = e.phi();
                let z = sq(e.k(), t.x(0));
                phi_pair_sum(e, a, h * ph, |a2| e.hyp(&[a2, a2 * h * ph], &[x.conj() * ph], z))
            },
            |e, t| {
                let k = e.k();
                let [a, x, h] = t.cs();
                let s = k.add(ONE, t.x(0));
                let two = k.int(2);
                let pts = [div(k, k.mul(two, t.x(0)), s), div(k, two, s)];
                e.chi(a.sq().conj(), s).mul(&e.fa(
                    a.sq(),
                    &[x.conj(), h.conj()],
                    &[x.sq().conj(), h.sq().conj()],
                    &pts,
                ))
            },
        )
        .odd()
        .when(|k, t| nontrivial(&[t.c(1), t.c(2)]) && t.x(0) != k.neg(ONE)),
        // [α, β_1, β_2], [λ]
        spec::<S>(
            "F2-2F1",
            "F_2 at (1+λ, 1-λ) as two 2F1",
            |_, _| 3,
            |_, _| 1,
            |e, t| {
                let k = e.k();
                let [a, b1, b2] = t.cs();
                let lam = t.x(0);
                e.fa(a.sq(), &[b1, b2], &[b1.sq(), b2.sq()], &[k.add(ONE, lam), sub1(k, lam)])
            },
            |e, t| {
                let k = e.k();
                let [a, b1, b2] = t.cs();
                let ph = e.phi();
                let lam = t.x(0);
                let z = sq(k, div(k, k.add(ONE, lam), sub1(k, lam)));
                let top = b2.conj() * ph;
                let half = div(k, sub1(k, lam), k.int(2));
                e.chi(a.sq().conj(), half)
                    .mul(&phi_pair_sum(e, a, top, |a2| e.hyp(&[a2, a2 * top], &[b1 * ph], z)))
            },
        )
        .odd()
        .when(|_, t| nontrivial(&[t.c(1), t.c(2)]) && t.x(0) != ONE),
        // [α, β_1, β_2, c_1, c_2], [λ]
        spec::<S>(
            "F2-3F2-at1",
            "F_2(·; λ, 1) as 3F2",
            |_, _| 5,
            |_, _| 1,
            |e, t| {
                let [a, b1, b2, c1, c2] = t.cs();
                e.fa(a, &[b1, b2], &[c1, c2], &[t.x(0), ONE])
            },
            |e, t| {
                let [a, b1, b2, c1, c2] = t.cs();
                let ab = a.conj();
                prod(&[
                    e.poch(b2.conj() * c2, ab),
                    e.pochc_inv(c2, ab),
                    e.hyp(&[a, b1, a * c2.conj()], &[c1, a * b2 * c2.conj()], t.x(0)),
                ])
            },
        )
        .when(|_, t| {
            let [a, b1, b2, c1, c2] = t.cs();
            nontrivial(&[a, b2, b1 * c1.conj(), b2 * c2.conj()])
        }),
        // [α, β_1, β_2, c_1, c_2], [λ]
        spec::<S>(
            "F2-3F2-split",
            "F_2(·; λ, 1-λ) as 3F2 at λ/(λ-1)",
            |_, _| 5,
            |_, _| 1,
            |e, t| {
                let [a, b1, b2, c1, c2] = t.cs();
                e.fa(a, &[b1, b2], &[c1, c2], &[t.x(0), sub1(e.k(), t.x(0))])
            },
            |e, t| {
                let k = e.k();
                let [a, b1, b2, c1, c2] = t.cs();
                let ab = a.conj();
                let lam = t.x(0);
                prod(&[
                    e.poch(b2.conj() * c2, ab),
                    e.pochc_inv(c2, ab),
                    e.chi(ab, sub1(k, lam)),
                    e.hyp(
                        &[a, b1.conj() * c1, a * c2.conj()],
                        &[c1, a * b2 * c2.conj()],
                        div(k, lam, k.sub(lam, ONE)),
                    ),
                ])
            },
        )
        .when(|_, t| {
            let [a, b1, b2, c1, c2] = t.cs();
            nontrivial(&[a, b1, b2, b1 * c1.conj(), b2 * c2.conj()]) && t.x(0) != ONE
        }),
        // [α, β_1, β_2, c_1, c_2], [x, y]
        spec::<S>(
            "int-FA",
            "F_2 as a double character sum",
            |_, _| 5,
            |_, _| 2,
            |e, t| {
                let [a, b1, b2, c1, c2] = t.cs();
                prod(&[
                    e.jac(&[b1, b1.conj() * c1]),
                    e.jac(&[b2, b2.conj() * c2]),
                    e.fa(a, &[b1, b2], &[c1, c2], &t.points),
                ])
            },
            |e, t| {
                let k = e.k();
                let [a, b1, b2, c1, c2] = t.cs();
                let (x, y) = (t.x(0), t.x(1));
                let (d1, d2) = (b1.conj() * c1, b2.conj() * c2);
                e.char_sum(2, |w| {
                    let (u, v) = (w[0], w[1]);
                    let arg = k.sub(sub1(k, k.mul(x, u)), k.mul(y, v));
                    Some(
                        e.chi_exp(a.conj(), arg)?
                            + e.chi_exp(b1, u)?
                            + e.chi_exp(d1, sub1(k, u))?
                            + e.chi_exp(b2, v)?
                            + e.chi_exp(d2, sub1(k, v))?,
                    )
                })
            },
        )
        .when(|_, t| {
            let [a, b1, b2, c1, c2] = t.cs();
            nontrivial(&[a, b1.conj() * c1, b2.conj() * c2]) && !t.x(0).is_zero() && !t.x(1).is_zero()
        }),
        // [α_1, α_2, β_1, β_2, c], [λ]
        spec::<S>(
            "F3-3F2-at1",
            "F_3(·; λ, 1) as 3F2",
            |_, _| 5,
            |_, _| 1,
            |e, t| {
                let [a1, a2, b1, b2, c] = t.cs();
                e.fb(&[a1, a2], &[b1, b2], c, &[t.x(0), ONE])
            },
            |e, t| {
                let [a1, a2, b1, b2, c] = t.cs();
                let (a2b, b2b) = (a2.conj(), b2.conj());
                prod(&[
                    e.gc(c),
                    e.g(a2b * b2b * c),
                    e.gcinv(a2b * c),
                    e.gcinv(b2b * c),
                    e.hyp(&[a1, b1, a2b * b2b * c], &[a2b * c, b2b * c], t.x(0)),
                ])
            },
        )
        .when(|_, t| {
            let [a1, a2, b1, b2, c] = t.cs();
            nontrivial(&[a1, a2, b2, b1.conj() * b2.conj() * c])
        }),
        // [α_1, α_2, β_1, β_2, c], [λ]
        spec::<S>(
            "F3-3F2-split",
            "F_3(·; λ, λ/(λ-1)) as 3F2 at 1-λ",
            |_, _| 5,
            |_, _| 1,
            |e, t| {
                let k = e.k();
                let [a1, a2, b1, b2, c] = t.cs();
                let lam = t.x(0);
                e.fb(&[a1, a2], &[b1, b2], c, &[lam, div(k, lam, k.sub(lam, ONE))])
            },
            |e, t| {
                let k = e.k();
                let [a1, a2, b1, b2, c] = t.cs();
                let lam = t.x(0);
                let cb = c.conj();
                prod(&[
                    e.g(a1 * a2 * cb),
                    e.g(a2 * b1 * cb),
                    e.g(b2.conj()),
                    e.ginv(cb),
                    e.gcinv(a1 * a2 * b1 * cb),
                    e.gcinv(a2 * b2.conj()),
                    e.chi(cb, lam),
                    e.chi(a2, sub1(k, lam)),
                    e.hyp(
                        &[a1 * a2 * cb, a2 * b1 * cb, b2.conj()],
                        &[a1 * a2 * b1 * cb, a2 * b2.conj()],
                        sub1(k, lam),
                    ),
                ])
            },
        )
        .when(|_, t| {
            let [a1, a2, b1, b2, c] = t.cs();
            nontrivial(&[a1, a2, b1, b2, a1.conj() * a2.conj() * c]) && t.x(0) != ONE
        }),
        // [β_1, β_2, c], [λ]
        spec::<S>(
            "F3-2F1-quad",
            "F_3 at (λ/(λ+1), λ/(λ-1)) as two 2F1",
            |_, _| 3,
            |_, _| 1,
            |e, t| {
                let k = e.k();
                let [b1, b2, c] = t.cs();
                let lam = t.x(0);
                let pts = [div(k, lam, k.add(lam, ONE)), div(k, lam, k.sub(lam, ONE))];
                e.fb(&[b1.sq(), b2.sq()], &[b1.sq().conj(), b2.sq().conj()], c.sq(), &pts)
            },
            |e, t| {
                let k = e.k();
                let [b1, b2, c] = t.cs();
                let ph = e.phi();
                let lam = t.x(0);
                let lp = k.add(ONE, lam);
                let z = div(k, k.mul(k.int(4), lam), sq(k, lp));
                let pair = [c, c * ph]
                    .into_iter()
                    .map(|c2| e.hyp(&[b1.conj() * b2 * c2, b1 * b2 * c2 * ph], &[c.sq()], z))
                    .reduce(|x, y| x.add(&y))
                    .unwrap();
                prod(&[
                    e.chi((b2.sq() * c.sq()).conj(), lp),
                    e.chi(b2.sq(), sub1(k, lam)),
                    pair,
                ])
            },
        )
        .odd()
        .when(|k, t| {
            let [b1, b2, c] = t.cs();
            let excluded = [c.sq(), c.sq().conj()];
            nontrivial(&[b1.sq(), b2.sq()])
                && !excluded.contains(&(b1 * b2).sq())
                && !excluded.contains(&(b1 * b2.conj()).sq())
                && !is_pm_one(k, t.x(0))
        }),
        // [α_1, α_2, β_1, β_2, c], [λ]
        spec::<S>(
            "karlsson",
            "F_3 transformation on the line (λ, λ/(λ-1))",
            |_, _| 5,
            |_, _| 1,
            |e, t| {
                let k = e.k();
                let [a1, a2, b1, b2, c] = t.cs();
                let lam = t.x(0);
                let pts = [lam, div(k, lam, k.sub(lam, ONE))];
                e.chi(a1 * a2 * b1 * c.conj(), sub1(k, lam))
                    .mul(&e.fb(&[a1, a2], &[b1, b2], c, &pts))
            },
            |e, t| {
                let k = e.k();
                let [a1, a2, b1, b2, c] = t.cs();
                let lam = t.x(0);
                let pts = [lam, div(k, lam, k.sub(lam, ONE))];
                e.fb(
                    &[a2.conj() * b1.conj() * c, a1 * a2 * b1 * b2 * c.conj()],
                    &[a1.conj() * a2.conj() * c, a2],
                    c,
                    &pts,
                )
            },
        )
        .when(|_, t| {
            let [a1, a2, b1, b2, c] = t.cs();
            let bad = [a1 * a2, b1 * b2, a1 * b2, a2 * b1, a1 * a2 * b1 * b2];
            !bad.contains(&c) && nontrivial(&[a1, a2, b1, b2]) && t.x(0) != ONE
        }),
        // [α_1, α_2, β_1, β_2, c], [x, y]
        spec::<S>(
            "int-FB",
            "F_3 as a double character sum",
            |_, _| 5,
            |_, _| 2,
            |e, t| {
                let [a1, a2, b1, b2, c] = t.cs();
                let d = b1.conj() * b2.conj() * c;
                prod(&[
                    e.g(b1),
                    e.g(b2),
                    e.g(d),
                    e.gcinv(c),
                    e.fb(&[a1, a2], &[b1, b2], c, &t.points),
                ])
            },
            |e, t| {
                let k = e.k();
                let [a1, a2, b1, b2, c] = t.cs();
                let d = b1.conj() * b2.conj() * c;
                let (x, y) = (t.x(0), t.x(1));
                e.char_sum(2, |w| {
                    let (u, v) = (w[0], w[1]);
                    Some(
                        e.chi_exp(a1.conj(), sub1(k, k.mul(x, u)))?
                            + e.chi_exp(a2.conj(), sub1(k, k.mul(y, v)))?
                            + e.chi_exp(b1, u)?
                            + e.chi_exp(b2, v)?
                            + e.chi_exp(d, k.sub(sub1(k, u), v))?,
                    )
                })
            },
        )
        .when(|_, t| {
            let [a1, a2, b1, b2, c] = t.cs();
            nontrivial(&[a1, a2, b1.conj() * b2.conj() * c]) && !t.x(0).is_zero() && !t.x(1).is_zero()
        }),
        // [α, β, c], [λ]
        spec::<S>(
            "F4red-parity",
            "F_4(α; β; cφ, φ; λ², (1-λ)²) under α, β ↦ αφ, βφ",
            |_, _| 3,
            |_, _| 1,
            |e, t| {
                let [a, b, c] = t.cs();
                let ph = e.phi();
                e.fc(a, b, &[c * ph, ph], &f4_line(e.k(), t.x(0)))
            },
            |e, t| {
                let [a, b, c] = t.cs();
                let ph = e.phi();
                prod(&[
                    e.poch(a, ph),
                    e.poch(b, ph),
                    e.fc(a * ph, b * ph, &[c * ph, ph], &f4_line(e.k(), t.x(0))),
                ])
            },
        )
        .odd(),
        // [α, β, c], [λ]
        spec::<S>(
            "F4red-trans",
            "F_4(α; β; cφ, φ; λ², (1-λ)²) as F_4 at (λ²/(1-λ)², 1/(1-λ)²)",
            |_, _| 3,
            |_, _| 1,
            |e, t| {
                let [a, b, c] = t.cs();
                let ph = e.phi();
                e.fc(a, b, &[c * ph, ph], &f4_line(e.k(), t.x(0)))
            },
            |e, t| {
                let [a, b, c] = t.cs();
                let ph = e.phi();
                prod(&[
                    e.g(a.conj() * b),
                    e.g(a * ph),
                    e.ginv(b),
                    e.ginv(ph),
                    f4_moved(e, a, b, c, t.x(0)),
                ])
            },
        )
        .odd()
        .when(|_, t| {
            let [a, b, c] = t.cs();
            nontrivial(&[a, b.conj() * c]) && t.x(0) != ONE
        }),
        // [α, β, c], [λ]
        spec::<S>(
            "F4red-3F2",
            "F_4 at (λ²/(1-λ)², 1/(1-λ)²) as 3F2",
            |_, _| 3,
            |_, _| 1,
            |e, t| {
                let [a, b, c] = t.cs();
                f4_moved(e, a, b, c, t.x(0))
            },
            |e, t| {
                let [a, b, c] = t.cs();
                let ph = e.phi();
                prod(&[
                    e.g(b),
                    e.g(b * ph),
                    e.ginv(a.conj() * b),
                    e.gcinv(a * b * ph),
                    e.hyp(&[a.sq(), b.sq(), c], &[a * b * ph, c.sq()], t.x(0)),
                ])
            },
        )
        .odd()
        .when(|k, t| {
            let [a, b, c] = t.cs();
            nontrivial(&[a * b.conj() * phi(k), c]) && t.x(0) != ONE
        }),
        // [α, β, c_1, c_2], [x, y]
        spec::<S>(
            "F4-lintrans",
            "F_4 at (x, y) as F_4 at (x/y, 1/y)",
            |_, _| 4,
            |_, _| 2,
            |e, t| {
                let [a, b, c1, c2] = t.cs();
                e.fc(a, b, &[c1, c2], &t.points)
            },
            |e, t| {
                let k = e.k();
                let [a, b, c1, c2] = t.cs();
                let (x, y) = (t.x(0), t.x(1));
                let ac = a * c2.conj();
                prod(&[
                    e.g(a.conj() * b),
                    e.g(ac),
                    e.ginv(b),
                    e.ginv(c2.conj()),
                    e.chi(a.conj(), y),
                    e.fc(a, ac, &[c1, a * b.conj()], &[div(k, x, y), div(k, ONE, y)]),
                ])
            },
        )
        .when(|_, t| {
            let [a, b, c1, c2] = t.cs();
            nontrivial(&[a, b.conj() * c1 * c2]) && !t.x(1).is_zero()
        }),
        // [α, β, c_1, c_2], [x, y]
        spec::<S>(
            "int-F4",
            "F_4 as a double character sum",
            |_, _| 4,
            |_, _| 2,
            |e, t| {
                let [a, b, c1, c2] = t.cs();
                prod(&[
                    e.g(c1.conj()),
                    e.g(c2.conj()),
                    e.g(b.conj() * c1 * c2),
                    e.gcinv(b.conj()),
                    e.fc(a, b, &[c1, c2], &t.points),
                ])
            },
            |e, t| {
                let k = e.k();
                let [a, b, c1, c2] = t.cs();
                let (x, y) = (t.x(0), t.x(1));
                let d = b.conj() * c1 * c2;
                e.char_sum(2, |w| {
                    let (u, v) = (w[0], w[1]);
                    if u.is_zero() || v.is_zero() {
                        return None;
                    }
                    let arg = k.sub(sub1(k, div(k, x, u)), div(k, y, v));
                    Some(
                        e.chi_exp(a.conj(), arg)?
                            + e.chi_exp(c1.conj(), u)?
                            + e.chi_exp(c2.conj(), v)?
                            + e.chi_exp(d, k.sub(sub1(k, u), v))?,
                    )
                })
            },
        )
        .when(|_, t| {
            let [a, b, c1, c2] = t.cs();
            nontrivial(&[a, b.conj() * c1 * c2]) && !t.x(0).is_zero() && !t.x(1).is_zero()
        }),
        // [α, β, c], [x, y]
        spec::<S>(
            "appell-kampe",
            "F_4 at (x, y²) as F_2",
            |_, _| 3,
            |_, _| 2,
            |e, t| {
                let [a, b, c] = t.cs();
                let ph = e.phi();
                e.fc(a, a * b.conj() * ph, &[c, b * ph], &[t.x(0), sq(e.k(), t.x(1))])
            },
            |e, t| {
                let k = e.k();
                let [a, b, c] = t.cs();
                let ph = e.phi();
                let (x, y) = (t.x(0), t.x(1));
                let s = k.add(ONE, y);
                let s2 = sq(k, s);
                let pts = [div(k, x, s2), div(k, k.mul(k.int(4), y), s2)];
                e.chi(a.sq().conj(), s)
                    .mul(&e.fa(a, &[a * b.conj() * ph, b], &[c, b.sq()], &pts))
            },
        )
        .odd()
        .when(|k, t| !t.c(1).sq().is_trivial() && !is_pm_one(k, t.x(1))),
    ]
}

/// `(λ², (1-λ)²)`.
fn f4_line(k: &FieldCtx, lam: FqElem) -> [FqElem; 2] {
    [sq(k, lam), sq(k, sub1(k, lam))]
}

/// `ᾱ²(1-λ) F_4(α; αφ; cφ, αβ̄; λ²/(1-λ)², 1/(1-λ)²)`.
fn f4_moved<S: Scalar>(e: &Evaluator<S>, a: MulChar, b: MulChar, c: MulChar, lam: FqElem) -> S {
    let k = e.k();
    let ph = e.phi();
    let s = sub1(k, lam);
    let s2 = sq(k, s);
    let pts = [div(k, sq(k, lam), s2), div(k, ONE, s2)];
    e.chi(a.sq().conj(), s)
        .mul(&e.fc(a, a * ph, &[c * ph, a * b.conj()], &pts))
}

fn quadratic<S: Scalar>() -> Vec<IdentitySpec<S>> {
    vec![
        // [α, β], [λ]
        spec::<S>(
            "gauss-quad",
            "quadratic transformation of 2F1",
            |_, _| 2,
            |_, _| 1,
            |e, t| gauss_quad(e, t.c(0), t.c(1), t.x(0))[0].clone(),
            |e, t| gauss_quad(e, t.c(0), t.c(1), t.x(0))[1].clone(),
        )
        .odd()
        .when(|k, t| gauss_quad_hyp(k, t, t.c(1))),
        // [β], [λ] with α = ε
        spec::<S>(
            "gauss-quad-alpha-eps",
            "quadratic transformation of 2F1, α = ε",
            |_, _| 1,
            |_, _| 1,
            |e, t| gauss_quad(e, e.eps(), t.c(0), t.x(0))[0].clone(),
            |e, t| gauss_quad(e, e.eps(), t.c(0), t.x(0))[1].clone(),
        )
        .odd()
        .when(|k, t| gauss_quad_hyp(k, t, t.c(0))),
        // [β], [λ] with α = βφ
        spec::<S>(
            "gauss-quad-alpha-bphi",
            "quadratic transformation of 2F1, α = βφ",
            |_, _| 1,
            |_, _| 1,
            |e, t| gauss_quad(e, t.c(0) * e.phi(), t.c(0), t.x(0))[0].clone(),
            |e, t| gauss_quad(e, t.c(0) * e.phi(), t.c(0), t.x(0))[1].clone(),
        )
        .odd()
        .when(|k, t| gauss_quad_hyp(k, t, t.c(0))),
        // [β], [λ] with α = β²
        spec::<S>(
            "gauss-quad-alpha-b2",
            "quadratic transformation of 2F1, α = β²",
            |_, _| 1,
            |_, _| 1,
            |e, t| gauss_quad(e, t.c(0).sq(), t.c(0), t.x(0))[0].clone(),
            |e, t| gauss_quad(e, t.c(0).sq(), t.c(0), t.x(0))[1].clone(),
        )
        .odd()
        .when(|k, t| gauss_quad_hyp(k, t, t.c(0))),
        // [α, β, c], [λ]
        spec::<S>(
            "tb-i",
            "F_2(α²; β², c²; β⁴, c⁴; λ, -λ) as 4F3 at λ²",
            |_, _| 3,
            |_, _| 1,
            |e, t| {
                let [a, b, c] = t.cs();
                let (b2, c2) = (b.sq(), c.sq());
                e.fa(a.sq(), &[b2, c2], &[b2.sq(), c2.sq()], &opposite(e.k(), t.x(0)))
            },
            |e, t| {
                let [a, b, c] = t.cs();
                let ph = e.phi();
                e.hyp(
                    &[a, a * ph, b * c, b * c * ph],
                    &[b.sq() * ph, c.sq() * ph, b.sq() * c.sq()],
                    sq(e.k(), t.x(0)),
                )
            },
        )
        .odd()
        .when(|_, t| {
            let [_, b, c] = t.cs();
            let (b2, c2) = (b.sq(), c.sq());
            nontrivial(&[b2, c2, b2 * c2, b2 * c2.conj()])
        }),
        // [α, β, c], [λ]
        spec::<S>(
            "tb-ii",
            "F_2(α²; β, β; c², c²; λ, -λ) as 4F3 at λ²",
            |_, _| 3,
            |_, _| 1,
            |e, t| {
                let [a, b, c] = t.cs();
                e.fa(a.sq(), &[b, b], &[c.sq(), c.sq()], &opposite(e.k(), t.x(0)))
            },
            |e, t| {
                let [a, b, c] = t.cs();
                let ph = e.phi();
                e.hyp(
                    &[a, a * ph, b, b.conj() * c.sq()],
                    &[c.sq(), c, c * ph],
                    sq(e.k(), t.x(0)),
                )
            },
        )
        .odd()
        .when(|k, t| {
            let [_, b, c] = t.cs();
            ![MulChar::trivial(c.group_order()), c, c * phi(k), c.sq()].contains(&b)
        }),
        // [α, β, c], [λ]
        spec::<S>(
            "tb-iii",
            "F_3(α², α²; β², β²; c²; λ, -λ) as 4F3 at λ²",
            |_, _| 3,
            |_, _| 1,
            |e, t| {
                let [a, b, c] = t.cs();
                let (a2, b2) = (a.sq(), b.sq());
                e.fb(&[a2, a2], &[b2, b2], c.sq(), &opposite(e.k(), t.x(0)))
            },
            |e, t| {
                let [a, b, c] = t.cs();
                let ph = e.phi();
                e.hyp(
                    &[a * b, a * b * ph, a.sq(), b.sq()],
                    &[a.sq() * b.sq(), c, c * ph],
                    sq(e.k(), t.x(0)),
                )
            },
        )
        .odd()
        .when(|_, t| {
            let [a, b, _] = t.cs();
            nontrivial(&[a.sq(), b.sq(), a.sq() * b.sq()])
        }),
        // [α, β, c_1, c_2], [λ]
        spec::<S>(
            "tb-iv",
            "F_4(α; β; c_1², c_2²; λ, λ) as 4F3 at 4λ",
            |_, _| 4,
            |_, _| 1,
            |e, t| {
                let [a, b, c1, c2] = t.cs();
                e.fc(a, b, &[c1.sq(), c2.sq()], &[t.x(0), t.x(0)])
            },
            |e, t| {
                let k = e.k();
                let [a, b, c1, c2] = t.cs();
                let ph = e.phi();
                e.hyp(
                    &[a, b, c1 * c2, c1 * c2 * ph],
                    &[c1.sq(), c2.sq(), c1.sq() * c2.sq()],
                    k.mul(k.int(4), t.x(0)),
                )
            },
        )
        .odd()
        .when(|_, t| {
            let [_, _, c1, c2] = t.cs();
            nontrivial(&[c1.sq() * c2.sq(), c1.sq() * c2.sq().conj()])
        }),
        // [α, β, c], [λ]
        spec::<S>(
            "tb-v",
            "F_4(α²; β²; c², c²; λ, -λ) as 4F3 at -4λ²",
            |_, _| 3,
            |_, _| 1,
            |e, t| {
                let [a, b, c] = t.cs();
                e.fc(a.sq(), b.sq(), &[c.sq(), c.sq()], &opposite(e.k(), t.x(0)))
            },
            |e, t| {
                let k = e.k();
                let [a, b, c] = t.cs();
                let ph = e.phi();
                e.hyp(
                    &[a, a * ph, b, b * ph],
                    &[c.sq(), c, c * ph],
                    k.mul(k.int(-4), sq(k, t.x(0))),
                )
            },
        )
        .odd(),
        // [α, β, c], [λ]
        spec::<S>(
            "extra-i",
            "F_2(α²; β, βc̄²; c², c̄²; λ, -λ) as q^δ(c) 4F3 at λ²",
            |_, _| 3,
            |_, _| 1,
            |e, t| {
                let [a, b, c] = t.cs();
                let c2b = c.sq().conj();
                e.fa(a.sq(), &[b, b * c2b], &[c.sq(), c2b], &opposite(e.k(), t.x(0)))
            },
            |e, t| {
                let [a, b, c] = t.cs();
                let ph = e.phi();
                let v = e.hyp(
                    &[a, a * ph, b * c.conj() * ph, b.conj() * c * ph],
                    &[ph, c * ph, c.conj() * ph],
                    sq(e.k(), t.x(0)),
                );
                // q^δ(c), as in extra-iii; without it c = ε is off by q
                if c.is_trivial() { v.mul(&e.q()) } else { v }
            },
        )
        .odd()
        .when(|_, t| {
            let [_, b, c] = t.cs();
            let c2b = c.sq().conj();
            nontrivial(&[b, b * c2b, b.sq() * c2b])
        }),
        // [α, β, c], [λ]
        spec::<S>(
            "extra-ii",
            "F_3(α², β²; ᾱ², β̄²; c²; λ, -λ) as 4F3 at λ²",
            |_, _| 3,
            |_, _| 1,
            |e, t| {
                let [a, b, c] = t.cs();
                let (a2, b2) = (a.sq(), b.sq());
                e.fb(&[a2, b2], &[a2.conj(), b2.conj()], c.sq(), &opposite(e.k(), t.x(0)))
            },
            |e, t| {
                let [a, b, c] = t.cs();
                let ph = e.phi();
                let (ab, bb) = (a.conj(), b.conj());
                e.hyp(
                    &[a * b, ab * bb, a * bb * ph, ab * b * ph],
                    &[ph, c, c * ph],
                    sq(e.k(), t.x(0)),
                )
            },
        )
        .odd()
        .when(|_, t| {
            let [a, b, _] = t.cs();
            let (a2, b2) = (a.sq(), b.sq());
            nontrivial(&[a2, b2, a2 * b2, a2 * b2.conj()])
        }),
        // [α, β, c], [λ]
        spec::<S>(
            "extra-iii",
            "F_4(α²; β²; c², c̄²; λ, -λ) as q^δ(c) 4F3 at -4λ²",
            |_, _| 3,
            |_, _| 1,
            |e, t| {
                let [a, b, c] = t.cs();
                e.fc(a.sq(), b.sq(), &[c.sq(), c.sq().conj()], &opposite(e.k(), t.x(0)))
            },
            |e, t| {
                let k = e.k();
                let [a, b, c] = t.cs();
                let ph = e.phi();
                let v = e.hyp(
                    &[a, a * ph, b, b * ph],
                    &[ph, c * ph, c.conj() * ph],
                    k.mul(k.int(-4), sq(k, t.x(0))),
                );
                if c.is_trivial() { v.mul(&e.q()) } else { v }
            },
        )
        .odd(),
    ]
}

/// `(λ, -λ)`.
fn opposite(k: &FieldCtx, lam: FqElem) -> [FqElem; 2] {
    [lam, k.neg(lam)]
}

fn lauricella_d<S: Scalar>() -> Vec<IdentitySpec<S>> {
    vec![
        // [β_1..β_n, ν]
        spec::<S>(
            "fd-multinomial",
            "(β_1⋯β_n)_ν / (ε)°_ν as a convolution",
            |n, _| n as usize + 1,
            |_, _| 0,
            |e, t| {
                let n = t.n as usize;
                let b = mul_all(&t.chars[..n]);
                let v = t.c(n);
                e.poch(b, v).mul(&e.pochc_inv(e.eps(), v))
            },
            |e, t| {
                let n = t.n as usize;
                let (betas, v) = (&t.chars[..n], t.c(n));
                let m = e.k().q() - 1;
                let eps = e.eps();
                let term = |b: MulChar, w: MulChar| e.poch(b, w).mul(&e.pochc_inv(eps, w));
                let mut total = e.zero();
                for cell in 0..(m as u64).pow(n as u32 - 1) {
                    let mut rest = cell;
                    let mut nus = Vec::with_capacity(n);
                    for _ in 0..n - 1 {
                        nus.push(MulChar::new((rest % m as u64) as i64, m));
                        rest /= m as u64;
                    }
                    let last = v * mul_all(&nus).conj();
                    nus.push(last);
                    let parts: Vec<S> = betas.iter().zip(&nus).map(|(&b, &w)| term(b, w)).collect();
                    total = total.add(&prod(&parts));
                }
                let scale = e.ratio(1, (1 - e.k().q() as i64).pow(n as u32 - 1));
                total.mul(&scale)
            },
        )
        .arity(&[2, 3])
        .when(|_, t| !mul_all(&t.chars[..t.n as usize]).is_trivial()),
        // knob i; [α, β_1..β_n, c], [λ_1..λ_i, x]
        spec::<S>(
            "fd-collapse",
            "F_D with equal trailing coordinates has lower arity",
            |n, _| n as usize + 2,
            |_, i| i as usize + 1,
            |e, t| {
                let n = t.n as usize;
                let (a, beta, c) = fd_parts(t);
                let (lam, x) = t.points.split_at(t.knob as usize);
                let pts: Vec<FqElem> = lam.iter().copied().chain(std::iter::repeat_n(x[0], n - lam.len())).collect();
                e.fd(a, beta, c, &pts)
            },
            |e, t| {
                let (a, beta, c) = fd_parts(t);
                let i = t.knob as usize;
                let bs: Vec<MulChar> = beta[..i].iter().copied().chain(std::iter::once(fd_tail(t))).collect();
                e.fd(a, &bs, c, &t.points)
            },
        )
        .arity(&[2, 3])
        .knobs(|n| (0..n).collect())
        .when(|_, t| !fd_tail(t).is_trivial()),
        // knob i; [α, β_1..β_n, c], [λ_1..λ_i]
        spec::<S>(
            "fd-at-one",
            "F_D with trailing coordinates 1 as a Gauss-sum multiple of F_D",
            |n, _| n as usize + 2,
            |_, i| i as usize,
            |e, t| {
                let n = t.n as usize;
                let (a, beta, c) = fd_parts(t);
                let pts: Vec<FqElem> = t.points.iter().copied().chain(std::iter::repeat_n(ONE, n - t.points.len())).collect();
                e.fd(a, beta, c, &pts)
            },
            |e, t| {
                let (a, beta, c) = fd_parts(t);
                let i = t.knob as usize;
                let bb = fd_tail(t).conj();
                let ab = a.conj();
                let rest = if i == 0 { e.int(1) } else { e.fd(a, &beta[..i], bb * c, &t.points) };
                prod(&[e.gc(c), e.g(ab * bb * c), e.gcinv(ab * c), e.gcinv(bb * c), rest])
            },
        )
        .arity(&[2, 3])
        .knobs(|n| (0..n).collect())
        .when(|_, t| {
            let b = fd_tail(t);
            let (a, _, c) = fd_parts(t);
            !b.is_trivial() && b != a.conj() * c
        }),
    ]
}
