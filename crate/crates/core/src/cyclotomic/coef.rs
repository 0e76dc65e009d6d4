//! Coefficient kernels shared by the machine-word and arbitrary-precision
//! representations of [`super::CycNum`].
//!
//! Every kernel returns `None` when an intermediate does not fit the
//! coefficient type; the caller then retries with `BigInt`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub(crate) trait Coef: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn checked_mul(&self, o: &Self) -> Option<Self>;
    fn checked_neg(&self) -> Option<Self>;
    /// `self += a * b`
    fn fma(&mut self, a: &Self, b: &Self) -> bool;
    /// `self -= a * k`
    fn fms_i64(&mut self, a: &Self, k: i64) -> bool;
    /// Non-negative gcd.
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
}

impl Coef for i128 {
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        i128::checked_mul(*self, *o)
    }
    fn checked_neg(&self) -> Option<Self> {
        i128::checked_neg(*self)
    }
    #[inline]
    fn fma(&mut self, a: &Self, b: &Self) -> bool {
        match i128::checked_mul(*a, *b).and_then(|t| i128::checked_add(*self, t)) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    #[inline]
    fn fms_i64(&mut self, a: &Self, k: i64) -> bool {
        match i128::checked_mul(*a, k as i128).and_then(|t| i128::checked_sub(*self, t)) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn gcd(&self, o: &Self) -> Self {
        // values reaching here are normalized and far from i128::MIN
        let (mut a, mut b) = (self.unsigned_abs(), o.unsigned_abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a as i128
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

impl Coef for BigInt {
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        num_traits::One::is_one(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn fma(&mut self, a: &Self, b: &Self) -> bool {
        *self += a * b;
        true
    }
    fn fms_i64(&mut self, a: &Self, k: i64) -> bool {
        *self -= a * k;
        true
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

/// `num / den` in lowest terms with `den > 0`; zero is `[0..] / 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Frac<C> {
    pub num: Vec<C>,
    pub den: C,
}

impl<C: Coef> Frac<C> {
    pub fn zero(len: usize) -> Self {
        Frac {
            num: vec![C::zero(); len],
            den: C::from_i64(1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(C::is_zero)
    }

    /// Bring to lowest terms with a positive denominator.
    pub fn normalize(mut self) -> Option<Self> {
        if self.is_zero() {
            self.den = C::from_i64(1);
            return Some(self);
        }
        if self.den.is_negative() {
            self.den = self.den.checked_neg()?;
            for c in &mut self.num {
                *c = c.checked_neg()?;
            }
        }
        if self.den.is_one() {
            return Some(self);
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if !c.is_zero() {
                g = g.gcd(c);
                if g.is_one() {
                    return Some(self);
                }
            }
        }
        for c in &mut self.num {
            *c = c.div_exact(&g);
        }
        self.den = self.den.div_exact(&g);
        Some(self)
    }
}

/// Reduce `buf` modulo the monic modulus `x^phi + Σ m_j x^j`, given by its
/// nonzero lower coefficients `nz = [(j, m_j)]`. Truncates to `phi`.
pub(crate) fn reduce<C: Coef>(buf: &mut Vec<C>, phi: usize, nz: &[(usize, i64)]) -> Option<()> {
    for k in (phi..buf.len()).rev() {
        if buf[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut buf[k], C::zero());
        let base = k - phi;
        for &(j, m) in nz {
            if !buf[base + j].fms_i64(&c, m) {
                return None;
            }
        }
    }
    buf.truncate(phi);
    buf.resize(phi, C::zero());
    Some(())
}

pub(crate) fn add<C: Coef>(a: &Frac<C>, b: &Frac<C>, negate_b: bool) -> Option<Frac<C>> {
    let one = C::from_i64(1);
    let neg_one = C::from_i64(-1);
    let sb = if negate_b { &neg_one } else { &one };
    if a.den == b.den {
        let mut num = a.num.clone();
        for (x, y) in num.iter_mut().zip(&b.num) {
            if !x.fma(y, sb) {
                return None;
            }
        }
        return Frac { num, den: a.den.clone() }.normalize();
    }
    let g = a.den.gcd(&b.den);
    let fa = b.den.div_exact(&g);
    let fb = a.den.div_exact(&g);
    let fb = if negate_b { fb.checked_neg()? } else { fb };
    let den = a.den.checked_mul(&fa)?;
    let mut num = Vec::with_capacity(a.num.len());
    for (x, y) in a.num.iter().zip(&b.num) {
        let mut v = x.checked_mul(&fa)?;
        if !v.fma(y, &fb) {
            return None;
        }
        num.push(v);
    }
    Frac { num, den }.normalize()
}

pub(crate) fn mul<C: Coef>(
    a: &Frac<C>,
    b: &Frac<C>,
    phi: usize,
    nz: &[(usize, i64)],
) -> Option<Frac<C>> {
    if a.is_zero() || b.is_zero() {
        return Some(Frac::zero(phi));
    }
    let mut buf = vec![C::zero(); 2 * phi - 1];
    for (i, x) in a.num.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.num.iter().enumerate() {
            if !y.is_zero() && !buf[i + j].fma(x, y) {
                return None;
            }
        }
    }
    reduce(&mut buf, phi, nz)?;
    let den = a.den.checked_mul(&b.den)?;
    Frac { num: buf, den }.normalize()
}

/// `Σ_t a_t ζ^{k_t}`: every term is rotated inside `Z[x]/(x^N - 1)` and the
/// total is reduced modulo `Φ_N` once.
pub(crate) fn weighted_rotations<'a, C: Coef + 'a>(
    terms: &[(&'a Frac<C>, usize)],
    order: usize,
    phi: usize,
    nz: &[(usize, i64)],
) -> Option<Frac<C>> {
    let mut den = C::from_i64(1);
    for (t, _) in terms {
        if t.den != den {
            let g = den.gcd(&t.den);
            den = den.checked_mul(&t.den.div_exact(&g))?;
        }
    }
    let mut buf = vec![C::zero(); order];
    for (t, k) in terms {
        let scale = den.div_exact(&t.den);
        for (i, x) in t.num.iter().enumerate() {
            if !x.is_zero() && !buf[(i + k) % order].fma(x, &scale) {
                return None;
            }
        }
    }
    reduce(&mut buf, phi, nz)?;
    Frac { num: buf, den }.normalize()
}

/// `Σ_k counts[k] ζ^k`, reduced.
pub(crate) fn from_counts<C: Coef>(counts: &[i64], phi: usize, nz: &[(usize, i64)]) -> Option<Frac<C>> {
    let mut buf: Vec<C> = counts.iter().map(|&c| C::from_i64(c)).collect();
    reduce(&mut buf, phi, nz)?;
    Frac { num: buf, den: C::from_i64(1) }.normalize()
}

pub(crate) fn to_big(f: &Frac<i128>) -> Frac<BigInt> {
    Frac {
        num: f.num.iter().map(|&c| BigInt::from(c)).collect(),
        den: BigInt::from(f.den),
    }
}

/// Demote to machine words when every entry fits.
pub(crate) fn to_small(f: &Frac<BigInt>) -> Option<Frac<i128>> {
    let num = f.num.iter().map(|c| c.to_i128()).collect::<Option<Vec<_>>>()?;
    Some(Frac {
        num,
        den: f.den.to_i128()?,
    })
}
