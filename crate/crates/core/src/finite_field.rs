//! Concrete finite fields `F_{p^r}` with discrete-log and trace tables.

use std::fmt;

use crate::error::{Error, Result};

/// Default upper bound on `q` accepted by [`build_field`].
pub const DEFAULT_FIELD_BOUND: u64 = 64;

/// An element of `F_q`, stored as its index `Σ c_i p^i` in the canonical
/// enumeration, where `c_i` is the coefficient of `x^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FqElem(u32);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);
    pub const ONE: FqElem = FqElem(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Which element of full order becomes the fixed generator of `k^×`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum GeneratorChoice {
    /// The first generator in enumeration order.
    #[default]
    Smallest,
    /// The last one; only useful for checking generator independence.
    Largest,
}

#[derive(Clone, Copy, Debug)]
pub struct FieldOptions {
    pub bound: u64,
    pub generator: GeneratorChoice,
}

impl Default for FieldOptions {
    fn default() -> Self {
        FieldOptions {
            bound: DEFAULT_FIELD_BOUND,
            generator: GeneratorChoice::Smallest,
        }
    }
}

/// `F_{p^r}` realized as `F_p[x]/(f)`.
pub struct FieldCtx {
    p: u32,
    r: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: FqElem,
    add: Vec<u32>,
    neg: Vec<u32>,
    /// `exp[k] = g^k` for `k < q-1`
    exp: Vec<u32>,
    /// `dlog[0]` is unused
    dlog: Vec<u32>,
    trace: Vec<u32>,
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `(p, r)` with `p^r = q`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 || q > u32::MAX as u64 {
        return None;
    }
    let q = q as u32;
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut m, mut r) = (q, 0);
    while m % p == 0 {
        m /= p;
        r += 1;
    }
    (m == 1).then_some((p, r))
}

/// Build `F_{p^r}` with default options.
pub fn build_field(p: u32, r: u32) -> Result<FieldCtx> {
    build_field_with(p, r, FieldOptions::default())
}

fn digits(mut idx: u32, p: u32, r: u32) -> Vec<u32> {
    (0..r)
        .map(|_| {
            let d = idx % p;
            idx /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic `m` over `F_p` (low degree first).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut a = a.to_vec();
    while a.len() > dm {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let base = a.len() - dm;
            for (j, &c) in m[..dm].iter().enumerate() {
                a[base + j] = (a[base + j] + (p - c) * lead) % p;
            }
        }
    }
    a
}

fn poly_mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    let mut r = poly_rem(&out, m, p);
    r.resize(m.len() - 1, 0);
    r
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let r = (f.len() - 1) as u32;
    for d in 1..=r / 2 {
        for low in 0..p.pow(d) {
            let mut g = digits(low, p, d);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

pub fn build_field_with(p: u32, r: u32, opts: FieldOptions) -> Result<FieldCtx> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if r == 0 {
        return Err(Error::InvalidField("extension degree must be at least 1".into()));
    }
    let q = (p as u64)
        .checked_pow(r)
        .filter(|&q| q <= opts.bound)
        .ok_or(Error::FieldTooLarge {
            q: (p as u64).saturating_pow(r),
            bound: opts.bound,
        })? as u32;

    let modulus = (0..q)
        .map(|low| {
            let mut f = digits(low, p, r);
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree");

    let order_of = |e: u32| -> u32 {
        let x = digits(e, p, r);
        let mut acc = x.clone();
        let mut k = 1;
        while undigits(&acc, p) != 1 {
            acc = poly_mul_mod(&acc, &x, &modulus, p);
            k += 1;
        }
        k
    };
    let full = |e: &u32| order_of(*e) == q - 1;
    let generator = match opts.generator {
        GeneratorChoice::Smallest => (1..q).find(full),
        GeneratorChoice::Largest => (1..q).rev().find(full),
    }
    .expect("k^× is cyclic");

    let g = digits(generator, p, r);
    let mut exp = Vec::with_capacity(q as usize - 1);
    let mut dlog = vec![0u32; q as usize];
    let mut acc = digits(1, p, r);
    for k in 0..q - 1 {
        let idx = undigits(&acc, p);
        exp.push(idx);
        dlog[idx as usize] = k;
        acc = poly_mul_mod(&acc, &g, &modulus, p);
    }

    let qu = q as usize;
    let mut add = vec![0u32; qu * qu];
    let mut neg = vec![0u32; qu];
    for a in 0..q {
        let da = digits(a, p, r);
        neg[a as usize] = undigits(&da.iter().map(|&c| (p - c) % p).collect::<Vec<_>>(), p);
        for b in 0..q {
            let db = digits(b, p, r);
            let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            add[a as usize * qu + b as usize] = undigits(&s, p);
        }
    }

    let mut ctx = FieldCtx {
        p,
        r,
        q,
        modulus,
        generator: FqElem(generator),
        add,
        neg,
        exp,
        dlog,
        trace: Vec::new(),
    };
    ctx.trace = (0..q)
        .map(|a| {
            let mut t = FqElem::ZERO;
            let mut x = FqElem(a);
            for _ in 0..r {
                t = ctx.add(t, x);
                x = ctx.pow(x, p as u64);
            }
            assert!(t.0 < p, "trace lands in the prime field");
            t.0
        })
        .collect();
    Ok(ctx)
}

impl FieldCtx {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Cyclotomic order `N = p(q-1)` of the value field.
    pub fn value_order(&self) -> u32 {
        self.p * (self.q - 1)
    }

    /// Coefficients of the defining polynomial, low degree first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn generator(&self) -> FqElem {
        self.generator
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> + Clone {
        (0..self.q).map(FqElem)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FqElem> + Clone {
        (1..self.q).map(FqElem)
    }

    pub fn elem(&self, index: u32) -> Result<FqElem> {
        if index < self.q {
            Ok(FqElem(index))
        } else {
            Err(Error::InvalidElement(digits(index, self.p, self.r)))
        }
    }

    pub fn coeffs(&self, a: FqElem) -> Vec<u32> {
        digits(a.0, self.p, self.r)
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<FqElem> {
        if c.len() != self.r as usize || c.iter().any(|&x| x >= self.p) {
            return Err(Error::InvalidElement(c.to_vec()));
        }
        Ok(FqElem(undigits(c, self.p)))
    }

    /// Image of an integer under `Z → F_p ⊂ F_q`.
    pub fn int(&self, n: i64) -> FqElem {
        FqElem(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        FqElem(self.add[(a.0 * self.q + b.0) as usize])
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        FqElem(self.neg[a.0 as usize])
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if a.is_zero() || b.is_zero() {
            return FqElem::ZERO;
        }
        let k = self.dlog[a.0 as usize] + self.dlog[b.0 as usize];
        FqElem(self.exp[(k % (self.q - 1)) as usize])
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let k = self.dlog[a.0 as usize];
        Ok(FqElem(self.exp[((self.q - 1 - k) % (self.q - 1)) as usize]))
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> Result<FqElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FqElem, e: u64) -> FqElem {
        if e == 0 {
            return FqElem::ONE;
        }
        if a.is_zero() {
            return FqElem::ZERO;
        }
        let k = self.dlog[a.0 as usize] as u64 * (e % (self.q as u64 - 1));
        FqElem(self.exp[(k % (self.q as u64 - 1)) as usize])
    }

    /// `g^k` for the fixed generator.
    pub fn exp(&self, k: u64) -> FqElem {
        FqElem(self.exp[(k % (self.q as u64 - 1)) as usize])
    }

    pub fn dlog(&self, a: FqElem) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.dlog[a.0 as usize])
    }

    /// `dlog` for callers that already know `a ≠ 0`.
    #[inline]
    pub(crate) fn dlog_nz(&self, a: FqElem) -> u32 {
        debug_assert!(!a.is_zero());
        self.dlog[a.0 as usize]
    }

    /// Absolute trace to `F_p`, as a residue in `[0, p)`.
    pub fn trace(&self, a: FqElem) -> u32 {
        self.trace[a.0 as usize]
    }
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{} (p={}, r={}, modulus={:?}, generator={:?})",
            self.q,
            self.p,
            self.r,
            self.modulus,
            self.coeffs(self.generator)
        )
    }
}
