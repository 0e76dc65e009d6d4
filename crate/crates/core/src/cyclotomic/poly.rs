use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals, lowest degree first.
///
/// The coefficient vector is always trimmed, so the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycPoly {
    coeffs: Vec<BigRational>,
}

impl CycPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        CycPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        CycPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![BigRational::zero(); n + 1];
        c[n] = BigRational::one();
        CycPoly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        Self::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CycPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.leading().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let f = &rem[k] / &lead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = &f * d;
                rem[k - dd + j] -= t;
            }
            quot[k - dd] = f;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g` and `g` monic
    /// (or zero when both inputs are zero).
    pub fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            Some(l) if !l.is_one() => {
                let inv = l.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            _ => (r0, s0, t0),
        }
    }
}

impl fmt::Debug for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycPoly({self})")
    }
}

impl fmt::Display for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{a}x^{i}")?,
            }
        }
        Ok(())
    }
}

fn phi_cache() -> &'static Mutex<HashMap<u32, CycPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, CycPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `n`-th cyclotomic polynomial, obtained by dividing `x^n - 1` by every
/// `Φ_d` with `d | n`, `d < n`. Results are memoized process-wide.
///
/// # Panics
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: u32) -> CycPoly {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = CycPoly::monomial(n as usize).sub(&CycPoly::one());
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = num
            .div_rem(&cyclotomic_polynomial(d))
            .expect("cyclotomic polynomials are nonzero");
        debug_assert!(r.is_zero());
        num = q;
    }
    phi_cache().lock().unwrap().insert(n, num.clone());
    num
}

/// Euler's totient.
pub fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Uncached recursive division, independent of the memoized path.
    fn recursive_oracle(n: u32) -> Vec<i64> {
        let mut num = CycPoly::monomial(n as usize).sub(&CycPoly::one());
        for d in 1..n {
            if n.is_multiple_of(d) {
                num = num.div_rem(&CycPoly::from_ints(&recursive_oracle(d))).unwrap().0;
            }
        }
        num.to_ints().unwrap()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).to_ints().unwrap(), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3).to_ints().unwrap(), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(6).to_ints().unwrap(), vec![1, -1, 1]);
        assert_eq!(recursive_oracle(6), vec![1, -1, 1]);
        assert_eq!(recursive_oracle(3), vec![1, 1, 1]);
    }

    #[test]
    fn degree_and_divisibility_up_to_60() {
        for n in 1..=60u32 {
            let phi = cyclotomic_polynomial(n);
            assert!(phi.is_monic());
            assert!(phi.to_ints().is_some(), "Φ_{n} has integer coefficients");
            assert_eq!(phi.degree(), Some(euler_phi(n) as usize), "deg Φ_{n}");
            let xn1 = CycPoly::monomial(n as usize).sub(&CycPoly::one());
            let (_, r) = xn1.div_rem(&phi).unwrap();
            assert!(r.is_zero(), "Φ_{n} divides x^{n} - 1");
        }
    }

    #[test]
    fn phi_105_has_a_coefficient_two() {
        // first n with a coefficient outside {-1, 0, 1}
        let c = cyclotomic_polynomial(105).to_ints().unwrap();
        assert!(c.contains(&-2));
    }

    #[test]
    fn ext_gcd_inverts_modulo_phi() {
        let phi = cyclotomic_polynomial(12);
        let a = CycPoly::from_ints(&[1, 2, 0, 3]);
        let (g, s, _) = CycPoly::ext_gcd(&a, &phi);
        assert_eq!(g, CycPoly::one());
        let (_, r) = s.mul(&a).div_rem(&phi).unwrap();
        assert_eq!(r, CycPoly::one());
    }

    #[test]
    fn display() {
        assert_eq!(cyclotomic_polynomial(6).to_string(), "x^2 - x + 1");
        assert_eq!(cyclotomic_polynomial(1).to_string(), "x - 1");
    }
}
