//! Hypergeometric functions over a finite field: `ₘFₙ`, the Lauricella
//! families `F_A`, `F_B`, `F_C`, `F_D`, and the multiplicative Fourier
//! transform.
//!
//! Every function is a finite sum over characters. For a fixed parameter
//! tuple the coefficient of each character (or character tuple) does not
//! depend on the point, so it is computed once into a grid and cached; a
//! point evaluation is then `Σ_ν c_ν ζ^{e(ν, λ)}`, a sum of rotations.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

use crate::characters::{AddChar, MulChar};
use crate::charsums::SumTables;
use crate::error::{Error, Result};
use crate::finite_field::{FieldCtx, FqElem};
use crate::scalar::Scalar;

/// Parameters of `ₘFₙ(α_1, …, α_m; β_1, …, β_n; ·)`. Either list may be
/// empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HyperParams {
    pub upper: Vec<MulChar>,
    pub lower: Vec<MulChar>,
}

impl HyperParams {
    pub fn new(upper: &[MulChar], lower: &[MulChar]) -> Self {
        HyperParams {
            upper: upper.to_vec(),
            lower: lower.to_vec(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    A,
    B,
    C,
    D,
}

/// Parameters of a Lauricella function of arity `n`.
///
/// | family | `alpha` | `beta` | `c` |
/// |--------|---------|--------|-----|
/// | A      | 1       | n      | n   |
/// | B      | n       | n      | 1   |
/// | C      | 1       | 1      | n   |
/// | D      | 1       | n      | 1   |
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LauricellaParams {
    family: Family,
    alpha: Vec<MulChar>,
    beta: Vec<MulChar>,
    c: Vec<MulChar>,
}

impl LauricellaParams {
    pub fn fa(alpha: MulChar, beta: &[MulChar], c: &[MulChar]) -> Result<Self> {
        Self::checked(Family::A, vec![alpha], beta.to_vec(), c.to_vec())
    }

    pub fn fb(alpha: &[MulChar], beta: &[MulChar], c: MulChar) -> Result<Self> {
        Self::checked(Family::B, alpha.to_vec(), beta.to_vec(), vec![c])
    }

    pub fn fc(alpha: MulChar, beta: MulChar, c: &[MulChar]) -> Result<Self> {
        Self::checked(Family::C, vec![alpha], vec![beta], c.to_vec())
    }

    pub fn fd(alpha: MulChar, beta: &[MulChar], c: MulChar) -> Result<Self> {
        Self::checked(Family::D, vec![alpha], beta.to_vec(), vec![c])
    }

    fn checked(family: Family, alpha: Vec<MulChar>, beta: Vec<MulChar>, c: Vec<MulChar>) -> Result<Self> {
        let n = match family {
            Family::A | Family::D => beta.len(),
            Family::B => alpha.len(),
            Family::C => c.len(),
        };
        if n == 0 {
            return Err(Error::ArityMismatch { expected: 1, got: 0 });
        }
        let want = |slot: &[MulChar], per_coord: bool| {
            let expected = if per_coord { n } else { 1 };
            if slot.len() == expected {
                Ok(())
            } else {
                Err(Error::ArityMismatch {
                    expected,
                    got: slot.len(),
                })
            }
        };
        let (a, b, cc) = match family {
            Family::A => (false, true, true),
            Family::B => (true, true, false),
            Family::C => (false, false, true),
            Family::D => (false, true, false),
        };
        want(&alpha, a)?;
        want(&beta, b)?;
        want(&c, cc)?;
        Ok(LauricellaParams {
            family,
            alpha,
            beta,
            c,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn arity(&self) -> usize {
        match self.family {
            Family::A | Family::D => self.beta.len(),
            Family::B => self.alpha.len(),
            Family::C => self.c.len(),
        }
    }
}

/// Small memo table that is flushed wholesale when full. Sweeps visit
/// parameter tuples in order, so only recent entries are ever reused.
struct Memo<K, V> {
    cap: usize,
    map: Mutex<HashMap<K, Arc<V>>>,
}

impl<K: Hash + Eq, V> Memo<K, V> {
    fn new(cap: usize) -> Self {
        Memo {
            cap,
            map: Mutex::new(HashMap::new()),
        }
    }

    fn get_or(&self, key: K, build: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.map.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = Arc::new(build());
        let mut map = self.map.lock().unwrap();
        if map.len() >= self.cap {
            map.clear();
        }
        map.insert(key, v.clone());
        v
    }
}

const MEMO_CAPACITY: usize = 256;

/// Evaluator for one field and one additive character.
pub struct Evaluator<S: Scalar> {
    tables: Arc<SumTables<S>>,
    one_var: Memo<HyperParams, Vec<S>>,
    multi_var: Memo<LauricellaParams, Vec<S>>,
    twisted: Memo<FqElem, Evaluator<S>>,
}

impl<S: Scalar> Evaluator<S> {
    pub fn new(field: Arc<FieldCtx>, psi: AddChar) -> Result<Self> {
        Ok(Self::from_tables(Arc::new(SumTables::new(field, psi)?)))
    }

    pub fn from_tables(tables: Arc<SumTables<S>>) -> Self {
        Evaluator {
            tables,
            one_var: Memo::new(MEMO_CAPACITY),
            multi_var: Memo::new(MEMO_CAPACITY),
            twisted: Memo::new(MEMO_CAPACITY),
        }
    }

    /// The evaluator for the same field with `ψ_a` in place of the current
    /// additive character.
    pub fn with_psi(&self, psi: AddChar) -> Arc<Evaluator<S>> {
        self.twisted.get_or(psi.twist(), || {
            Evaluator::new(self.field().clone(), psi).expect("field already validated")
        })
    }

    pub fn tables(&self) -> &Arc<SumTables<S>> {
        &self.tables
    }

    /// The underlying field, for element arithmetic.
    pub fn k(&self) -> &FieldCtx {
        self.tables.field()
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        self.tables.field()
    }

    pub fn ring(&self) -> &S::Ring {
        self.tables.ring()
    }

    fn m(&self) -> usize {
        self.tables.group_order() as usize
    }

    pub fn char(&self, j: i64) -> MulChar {
        MulChar::new(j, self.tables.group_order())
    }

    pub fn eps(&self) -> MulChar {
        self.char(0)
    }

    /// The quadratic character.
    ///
    /// # Panics
    /// Panics in characteristic 2.
    pub fn phi(&self) -> MulChar {
        MulChar::quadratic(self.k()).expect("no quadratic character in characteristic 2")
    }

    pub fn zero(&self) -> S {
        S::zero(self.ring())
    }

    pub fn int(&self, n: i64) -> S {
        S::from_int(self.ring(), n)
    }

    pub fn ratio(&self, num: i64, den: i64) -> S {
        S::from_ratio(self.ring(), num, den)
    }

    /// `q` as a scalar.
    pub fn q(&self) -> S {
        self.int(self.k().q() as i64)
    }

    pub fn chi(&self, c: MulChar, x: FqElem) -> S {
        self.tables.chi(c, x)
    }

    pub fn psi(&self, x: FqElem) -> S {
        self.tables.psi_value(x)
    }

    pub fn g(&self, c: MulChar) -> S {
        self.tables.gauss(c).clone()
    }

    pub fn gc(&self, c: MulChar) -> S {
        self.tables.gauss_circ(c).clone()
    }

    pub fn ginv(&self, c: MulChar) -> S {
        self.tables.gauss_inv(c).clone()
    }

    pub fn gcinv(&self, c: MulChar) -> S {
        self.tables.gauss_circ_inv(c).clone()
    }

    pub fn pochc_inv(&self, a: MulChar, nu: MulChar) -> S {
        self.tables.poch_circ_inv(a, nu).clone()
    }

    pub fn poch(&self, a: MulChar, nu: MulChar) -> S {
        self.tables.poch(a, nu).clone()
    }

    pub fn pochc(&self, a: MulChar, nu: MulChar) -> S {
        self.tables.poch_circ(a, nu).clone()
    }

    pub fn jac(&self, etas: &[MulChar]) -> S {
        self.tables.jacobi(etas)
    }

    /// `ₘFₙ(upper; lower; λ)`.
    pub fn hyp(&self, upper: &[MulChar], lower: &[MulChar], lambda: FqElem) -> S {
        self.hyper(&HyperParams::new(upper, lower), lambda)
    }

    pub fn hyper(&self, params: &HyperParams, lambda: FqElem) -> S {
        if lambda.is_zero() {
            return self.zero();
        }
        let grid = self.hyper_grid(params);
        let n = self.k().value_order() as u64;
        let step = self.tables.chi_exp(self.char(1), lambda).unwrap();
        let terms: Vec<(&S, u64)> = grid
            .iter()
            .enumerate()
            .map(|(nu, c)| (c, (nu as u64 * step) % n))
            .collect();
        S::weighted_zeta_sum(self.ring(), &terms)
    }

    /// Coefficients `c_ν` with `ₘFₙ(λ) = Σ_ν c_ν ν(λ)`.
    pub fn hyper_grid(&self, params: &HyperParams) -> Arc<Vec<S>> {
        self.one_var.get_or(params.clone(), || {
            let t = &self.tables;
            let eps = self.eps();
            let norm = self.ratio(1, 1 - self.k().q() as i64);
            (0..self.m())
                .map(|j| {
                    let nu = self.char(j as i64);
                    let mut acc = t.poch_circ_inv(eps, nu).mul(&norm);
                    for &a in &params.upper {
                        acc = acc.mul(t.poch(a, nu));
                    }
                    for &b in &params.lower {
                        acc = acc.mul(t.poch_circ_inv(b, nu));
                    }
                    acc
                })
                .collect()
        })
    }

    pub fn fa(&self, alpha: MulChar, beta: &[MulChar], c: &[MulChar], pt: &[FqElem]) -> S {
        self.lauricella(&LauricellaParams::fa(alpha, beta, c).unwrap(), pt)
            .unwrap()
    }

    pub fn fb(&self, alpha: &[MulChar], beta: &[MulChar], c: MulChar, pt: &[FqElem]) -> S {
        self.lauricella(&LauricellaParams::fb(alpha, beta, c).unwrap(), pt)
            .unwrap()
    }

    pub fn fc(&self, alpha: MulChar, beta: MulChar, c: &[MulChar], pt: &[FqElem]) -> S {
        self.lauricella(&LauricellaParams::fc(alpha, beta, c).unwrap(), pt)
            .unwrap()
    }

    pub fn fd(&self, alpha: MulChar, beta: &[MulChar], c: MulChar, pt: &[FqElem]) -> S {
        self.lauricella(&LauricellaParams::fd(alpha, beta, c).unwrap(), pt)
            .unwrap()
    }

    pub fn lauricella(&self, params: &LauricellaParams, pt: &[FqElem]) -> Result<S> {
        let n = params.arity();
        if pt.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                got: pt.len(),
            });
        }
        if pt.iter().any(|x| x.is_zero()) {
            return Ok(self.zero());
        }
        let grid = self.lauricella_grid(params);
        let order = self.k().value_order() as u64;
        let steps: Vec<u64> = pt
            .iter()
            .map(|&x| self.tables.chi_exp(self.char(1), x).unwrap())
            .collect();
        let m = self.m();
        let terms: Vec<(&S, u64)> = grid
            .iter()
            .enumerate()
            .map(|(cell, c)| {
                let mut rest = cell;
                let mut e = 0u64;
                for s in &steps {
                    e += (rest % m) as u64 * s;
                    rest /= m;
                }
                (c, e % order)
            })
            .collect();
        Ok(S::weighted_zeta_sum(self.ring(), &terms))
    }

    /// Coefficients over `(ν_1, …, ν_n)`, flattened with `ν_1` varying
    /// fastest, normalization included.
    pub fn lauricella_grid(&self, params: &LauricellaParams) -> Arc<Vec<S>> {
        self.multi_var.get_or(params.clone(), || self.build_grid(params))
    }

    fn build_grid(&self, params: &LauricellaParams) -> Vec<S> {
        let t = &self.tables;
        let m = self.m();
        let n = params.arity();
        let eps = self.eps();
        let chars: Vec<MulChar> = (0..m).map(|j| self.char(j as i64)).collect();
        let one = S::one(self.ring());

        // per-coordinate factors, indexed by ν_i
        let coord: Vec<Vec<S>> = (0..n)
            .map(|i| {
                chars
                    .iter()
                    .map(|&nu| {
                        let base = t.poch_circ_inv(eps, nu);
                        match params.family {
                            Family::A => base
                                .mul(t.poch(params.beta[i], nu))
                                .mul(t.poch_circ_inv(params.c[i], nu)),
                            Family::B => base
                                .mul(t.poch(params.alpha[i], nu))
                                .mul(t.poch(params.beta[i], nu)),
                            Family::C => base.mul(t.poch_circ_inv(params.c[i], nu)),
                            Family::D => base.mul(t.poch(params.beta[i], nu)),
                        }
                    })
                    .collect()
            })
            .collect();

        // factor depending on ν_1⋯ν_n, normalization folded in
        let q = self.k().q() as i64;
        let norm = self.ratio(1, (1 - q).pow(n as u32));
        let head: Vec<S> = chars
            .iter()
            .map(|&s| {
                let h = match params.family {
                    Family::A => t.poch(params.alpha[0], s).clone(),
                    Family::B => t.poch_circ_inv(params.c[0], s).clone(),
                    Family::C => t.poch(params.alpha[0], s).mul(t.poch(params.beta[0], s)),
                    Family::D => t.poch(params.alpha[0], s).mul(t.poch_circ_inv(params.c[0], s)),
                };
                h.mul(&norm)
            })
            .collect();

        // products of the per-coordinate factors, ν_1 fastest, with index sums
        let mut cells: Vec<(S, usize)> = vec![(one, 0)];
        for factors in &coord {
            let mut next = Vec::with_capacity(cells.len() * m);
            for (v, f) in factors.iter().enumerate() {
                for (acc, s) in &cells {
                    next.push((acc.mul(f), (s + v) % m));
                }
            }
            cells = next;
        }
        cells.into_iter().map(|(c, s)| c.mul(&head[s])).collect()
    }

    /// `Σ_{x ∈ k^dims} ∏ χ(·)ψ(·)` for a summand given by its `ζ_N` exponent
    /// (`None` for a vanishing term).
    pub fn char_sum(&self, dims: usize, mut f: impl FnMut(&[FqElem]) -> Option<u64>) -> S {
        let order = self.k().value_order() as u64;
        let mut counts = vec![0i64; order as usize];
        let q = self.k().q();
        let mut xs = vec![FqElem::ZERO; dims];
        loop {
            if let Some(e) = f(&xs) {
                counts[(e % order) as usize] += 1;
            }
            let mut i = 0;
            loop {
                if i == dims {
                    return S::from_zeta_counts(self.ring(), &counts);
                }
                if xs[i].index() + 1 < q {
                    xs[i] = self.k().elem(xs[i].index() + 1).unwrap();
                    break;
                }
                xs[i] = FqElem::ZERO;
                i += 1;
            }
        }
    }

    /// Exponent of `ζ_N` for `χ(x)`.
    pub fn chi_exp(&self, c: MulChar, x: FqElem) -> Option<u64> {
        self.tables.chi_exp(c, x)
    }

    /// Exponent of `ζ_N` for `ψ(x)`.
    pub fn psi_exp(&self, x: FqElem) -> u64 {
        self.tables.psi_exp(x)
    }

    /// `f̂(ν_1, …, ν_n) = Σ_{t_i ≠ 0} f(t) ∏ ν̄_i(t_i)`, flattened with `ν_1`
    /// varying fastest.
    pub fn fourier_transform(&self, n: usize, f: impl Fn(&[FqElem]) -> S) -> Vec<S> {
        let m = self.m();
        let order = self.k().value_order() as u64;
        let points: Vec<Vec<FqElem>> = mixed_radix(m, n)
            .map(|ks| ks.iter().map(|&k| self.k().exp(k as u64)).collect())
            .collect();
        let values: Vec<S> = points.iter().map(|t| f(t)).collect();
        mixed_radix(m, n)
            .map(|nu| {
                let terms: Vec<(&S, u64)> = points
                    .iter()
                    .zip(&values)
                    .map(|(t, v)| {
                        let e: u64 = nu
                            .iter()
                            .zip(t)
                            .map(|(&j, &x)| self.chi_exp(self.char(-(j as i64)), x).unwrap())
                            .sum();
                        (v, e % order)
                    })
                    .collect();
                S::weighted_zeta_sum(self.ring(), &terms)
            })
            .collect()
    }

    /// `1/(q-1)^n Σ_ν f̂(ν) ∏ ν_i(λ_i)`.
    pub fn inverse_fourier(&self, fhat: &[S], lambda: &[FqElem]) -> S {
        let m = self.m();
        let n = lambda.len();
        assert_eq!(fhat.len(), m.pow(n as u32), "transform size");
        if lambda.iter().any(|x| x.is_zero()) {
            return self.zero();
        }
        let order = self.k().value_order() as u64;
        let terms: Vec<(&S, u64)> = mixed_radix(m, n)
            .zip(fhat)
            .map(|(nu, v)| {
                let e: u64 = nu
                    .iter()
                    .zip(lambda)
                    .map(|(&j, &x)| self.chi_exp(self.char(j as i64), x).unwrap())
                    .sum();
                (v, e % order)
            })
            .collect();
        let total = S::weighted_zeta_sum(self.ring(), &terms);
        total.mul(&self.ratio(1, (m as i64).pow(n as u32)))
    }

    /// `Σ_{s,t ≠ 0} ᾱ_0(1-λst) α_1(s) ᾱ_1β_1(1-s) α_2(t) ᾱ_2β_2(1-t)`,
    /// which equals `j(α_1, ᾱ_1β_1) j(α_2, ᾱ_2β_2) ₃F₂(α_0, α_1, α_2; β_1, β_2; λ)`
    /// when `ε ∉ {α_0, ᾱ_1β_1, ᾱ_2β_2}` and `λ ≠ 0`. Returns `None` outside
    /// that domain.
    pub fn hyper_3f2_doublesum(
        &self,
        alpha: [MulChar; 3],
        beta: [MulChar; 2],
        lambda: FqElem,
    ) -> Option<S> {
        let [a0, a1, a2] = alpha;
        let [b1, b2] = beta;
        let (c1, c2) = (a1.conj() * b1, a2.conj() * b2);
        if a0.is_trivial() || c1.is_trivial() || c2.is_trivial() || lambda.is_zero() {
            return None;
        }
        let k = self.k();
        let a0b = a0.conj();
        Some(self.char_sum(2, |v| {
            let (s, t) = (v[0], v[1]);
            let one = FqElem::ONE;
            Some(
                self.chi_exp(a0b, k.sub(one, k.mul(lambda, k.mul(s, t))))?
                    + self.chi_exp(a1, s)?
                    + self.chi_exp(c1, k.sub(one, s))?
                    + self.chi_exp(a2, t)?
                    + self.chi_exp(c2, k.sub(one, t))?,
            )
        }))
    }

    /// `Σ_{u_i ∈ k} ψ(-λ u_1⋯u_n) ∏ α_i(u_i) ᾱ_iβ_i(1-u_i)`, equal to
    /// `(-1)^n ∏ j(α_i, ᾱ_iβ_i) · ₙFₙ(α; β; λ)` when `α_i ≠ β_i` and `λ ≠ 0`.
    pub fn hyper_nfn_integral(&self, alpha: &[MulChar], beta: &[MulChar], lambda: FqElem) -> S {
        assert_eq!(alpha.len(), beta.len());
        let k = self.k();
        let shifted: Vec<MulChar> = alpha.iter().zip(beta).map(|(&a, &b)| a.conj() * b).collect();
        self.char_sum(alpha.len(), |u| {
            let prod = u.iter().fold(FqElem::ONE, |acc, &x| k.mul(acc, x));
            let mut e = self.psi_exp(k.neg(k.mul(lambda, prod)));
            for ((&a, &c), &x) in alpha.iter().zip(&shifted).zip(u) {
                e += self.chi_exp(a, x)? + self.chi_exp(c, k.sub(FqElem::ONE, x))?;
            }
            Some(e)
        })
    }
}

/// All index tuples in `[0, m)^n`, first index fastest.
fn mixed_radix(m: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..m.pow(n as u32)).map(move |mut cell| {
        (0..n)
            .map(|_| {
                let d = cell % m;
                cell /= m;
                d
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::char_group;
    use crate::cyclotomic::CycNum;
    use crate::finite_field::build_field;

    fn ev(p: u32, r: u32) -> Evaluator<CycNum> {
        Evaluator::new(Arc::new(build_field(p, r).unwrap()), AddChar::standard()).unwrap()
    }

    /// Term-by-term transcription of the definition, no grids or caches.
    fn naive_2f1(e: &Evaluator<CycNum>, a: MulChar, b: MulChar, c: MulChar, x: FqElem) -> CycNum {
        let eps = e.eps();
        let mut acc = e.zero();
        for nu in char_group(e.k()) {
            let num = e.poch(a, nu) * e.poch(b, nu);
            let den = e.pochc(eps, nu) * e.pochc(c, nu);
            acc = acc + num * den.inv().unwrap() * e.chi(nu, x);
        }
        acc * e.ratio(1, 1 - e.k().q() as i64)
    }

    #[test]
    fn zero_f_zero_is_psi() {
        let e = ev(5, 1);
        for x in e.k().nonzero() {
            assert_eq!(e.hyp(&[], &[], x), e.psi(e.k().neg(x)));
        }
    }

    #[test]
    fn all_families_collapse_to_2f1_at_arity_one() {
        let e = ev(5, 1);
        let g = char_group(e.k());
        for &a in &g {
            for &b in &g {
                for &c in &g {
                    for x in e.k().elements() {
                        let want = naive_2f1(&e, a, b, c, x);
                        assert_eq!(e.hyp(&[a, b], &[c], x), want);
                        assert_eq!(e.fa(a, &[b], &[c], &[x]), want);
                        assert_eq!(e.fb(&[a], &[b], c, &[x]), want);
                        assert_eq!(e.fc(a, b, &[c], &[x]), want);
                        assert_eq!(e.fd(a, &[b], c, &[x]), want);
                    }
                }
            }
        }
    }

    #[test]
    fn zero_coordinate_annihilates() {
        let e = ev(3, 1);
        let g = char_group(e.k());
        let z = FqElem::ZERO;
        let one = FqElem::ONE;
        for &a in &g {
            for &b in &g {
                assert!(e.fa(a, &[b, a], &[b, b], &[one, z]).is_zero());
                assert!(e.fb(&[a, b], &[b, a], a, &[z, one]).is_zero());
                assert!(e.fc(a, b, &[a, b], &[z, z]).is_zero());
                assert!(e.fd(a, &[a, b], b, &[one, z]).is_zero());
            }
        }
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let e = ev(3, 1);
        let c = e.eps();
        let p = LauricellaParams::fa(c, &[c, c], &[c, c]).unwrap();
        assert_eq!(
            e.lauricella(&p, &[FqElem::ONE]),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        );
        assert!(LauricellaParams::fa(c, &[c, c], &[c]).is_err());
        assert!(LauricellaParams::fb(&[c], &[c, c], c).is_err());
    }

    #[test]
    fn fourier_pair() {
        let e = ev(7, 1);
        let eta = e.char(2);
        let fhat = e.fourier_transform(1, |t| e.chi(eta, t[0]));
        for (j, v) in fhat.iter().enumerate() {
            let want = if j == 2 { 6 } else { 0 };
            assert_eq!(*v, e.int(want));
        }
        let ones = e.fourier_transform(1, |_| e.int(1));
        assert_eq!(ones[0], e.int(6));
        assert!(ones[1..].iter().all(|v| v.is_zero()));

        // f(t_1, t_2) = ψ(t_1 + 2 t_2) χ_1(t_1 - t_2), recovered pointwise
        let k = e.k();
        let f = |t: &[FqElem]| {
            let two = k.int(2);
            e.psi(k.add(t[0], k.mul(two, t[1]))) * e.chi(e.char(1), k.sub(t[0], t[1]))
        };
        let fhat = e.fourier_transform(2, f);
        for x in k.nonzero() {
            for y in k.nonzero() {
                assert_eq!(e.inverse_fourier(&fhat, &[x, y]), f(&[x, y]));
            }
        }
    }
}
