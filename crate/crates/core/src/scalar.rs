//! Value types for character sums.
//!
//! Everything above the cyclotomic layer is generic over [`Scalar`], with the
//! exact [`CycNum`] as the reference implementation and [`CplxNum`] as a fast
//! floating-point cross-check.

use std::fmt::Debug;
use std::sync::Arc;

use num_complex::Complex64;

use crate::cyclotomic::{cyc_ring, CycNum, CycRing};
use crate::error::{Error, Result};

/// Rendered value for reports.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// `[numerator, denominator]` per power-basis coordinate.
    Exact(Vec<[String; 2]>),
    /// Real and imaginary part.
    Float([f64; 2]),
}

/// A commutative ring containing `ζ_N`, with division by nonzero elements.
pub trait Scalar: Clone + Debug + Send + Sync + 'static {
    /// Handle for `Q(ζ_N)` or its stand-in.
    type Ring: Clone + Debug + Send + Sync;

    const NAME: &'static str;

    fn ring(order: u32) -> Self::Ring;
    fn zero(ring: &Self::Ring) -> Self;
    fn from_int(ring: &Self::Ring, n: i64) -> Self;
    fn from_ratio(ring: &Self::Ring, num: i64, den: i64) -> Self;

    fn one(ring: &Self::Ring) -> Self {
        Self::from_int(ring, 1)
    }

    /// `ζ_N^k`.
    fn zeta(ring: &Self::Ring, k: u64) -> Self;

    /// `Σ_k counts[k] ζ^k`.
    fn from_zeta_counts(ring: &Self::Ring, counts: &[i64]) -> Self;

    /// `Σ_t a_t ζ^{k_t}`.
    fn weighted_zeta_sum(ring: &Self::Ring, terms: &[(&Self, u64)]) -> Self;

    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn is_zero(&self) -> bool;

    fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    /// Equality for the backend: exact for [`CycNum`], within tolerance for
    /// [`CplxNum`].
    fn agrees(&self, o: &Self) -> bool;

    fn witness(&self) -> Witness;

    fn to_complex(&self) -> Complex64;
}

impl Scalar for CycNum {
    type Ring = Arc<CycRing>;

    const NAME: &'static str = "exact";

    fn ring(order: u32) -> Self::Ring {
        cyc_ring(order)
    }

    fn zero(ring: &Self::Ring) -> Self {
        CycNum::zero(ring)
    }

    fn from_int(ring: &Self::Ring, n: i64) -> Self {
        CycNum::from_int(ring, n)
    }

    fn from_ratio(ring: &Self::Ring, num: i64, den: i64) -> Self {
        CycNum::from_ratio(ring, num, den)
    }

    fn zeta(ring: &Self::Ring, k: u64) -> Self {
        CycNum::zeta(ring, (k % ring.order() as u64) as i64)
    }

    fn from_zeta_counts(ring: &Self::Ring, counts: &[i64]) -> Self {
        CycNum::from_zeta_counts(ring, counts)
    }

    fn weighted_zeta_sum(ring: &Self::Ring, terms: &[(&Self, u64)]) -> Self {
        CycNum::weighted_zeta_sum(ring, terms)
    }

    fn add(&self, o: &Self) -> Self {
        self + o
    }

    fn sub(&self, o: &Self) -> Self {
        self - o
    }

    fn mul(&self, o: &Self) -> Self {
        self * o
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Result<Self> {
        CycNum::inv(self)
    }

    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }

    fn agrees(&self, o: &Self) -> bool {
        self == o
    }

    fn witness(&self) -> Witness {
        Witness::Exact(
            self.coeffs()
                .iter()
                .map(|c| [c.numer().to_string(), c.denom().to_string()])
                .collect(),
        )
    }

    fn to_complex(&self) -> Complex64 {
        CycNum::to_complex(self)
    }
}

/// Relative tolerance of [`CplxNum::agrees`].
pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// Double-precision complex value under `ζ_N ↦ exp(2πi/N)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CplxNum(pub Complex64);

fn unit(order: u32, k: u64) -> Complex64 {
    let k = k % order as u64;
    Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / order as f64)
}

impl Scalar for CplxNum {
    type Ring = u32;

    const NAME: &'static str = "float";

    fn ring(order: u32) -> u32 {
        order
    }

    fn zero(_: &u32) -> Self {
        CplxNum(Complex64::new(0.0, 0.0))
    }

    fn from_int(_: &u32, n: i64) -> Self {
        CplxNum(Complex64::new(n as f64, 0.0))
    }

    fn from_ratio(_: &u32, num: i64, den: i64) -> Self {
        CplxNum(Complex64::new(num as f64 / den as f64, 0.0))
    }

    fn zeta(ring: &u32, k: u64) -> Self {
        CplxNum(unit(*ring, k))
    }

    fn from_zeta_counts(ring: &u32, counts: &[i64]) -> Self {
        CplxNum(
            counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(k, &c)| unit(*ring, k as u64) * c as f64)
                .sum(),
        )
    }

    fn weighted_zeta_sum(ring: &u32, terms: &[(&Self, u64)]) -> Self {
        CplxNum(terms.iter().map(|(a, k)| a.0 * unit(*ring, *k)).sum())
    }

    fn add(&self, o: &Self) -> Self {
        CplxNum(self.0 + o.0)
    }

    fn sub(&self, o: &Self) -> Self {
        CplxNum(self.0 - o.0)
    }

    fn mul(&self, o: &Self) -> Self {
        CplxNum(self.0 * o.0)
    }

    fn neg(&self) -> Self {
        CplxNum(-self.0)
    }

    fn inv(&self) -> Result<Self> {
        // Nonzero values here are algebraic integers over small
        // denominators, far from this threshold.
        if self.0.norm() < 1e-12 {
            return Err(Error::DivisionByZero);
        }
        Ok(CplxNum(self.0.inv()))
    }

    fn is_zero(&self) -> bool {
        self.0.norm() < 1e-12
    }

    fn agrees(&self, o: &Self) -> bool {
        let scale = self.0.norm().max(o.0.norm()).max(1.0);
        (self.0 - o.0).norm() <= FLOAT_TOLERANCE * scale
    }

    fn witness(&self) -> Witness {
        Witness::Float([self.0.re, self.0.im])
    }

    fn to_complex(&self) -> Complex64 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta_sum<S: Scalar>(order: u32) -> S {
        let ring = S::ring(order);
        let counts = vec![1i64; order as usize];
        S::from_zeta_counts(&ring, &counts)
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in [2, 3, 12, 30] {
            assert!(Scalar::is_zero(&zeta_sum::<CycNum>(n)));
            assert!(zeta_sum::<CplxNum>(n).is_zero());
        }
    }

    #[test]
    fn witnesses() {
        let ring = <CycNum as Scalar>::ring(3);
        let w = <CycNum as Scalar>::from_ratio(&ring, -2, 4).witness();
        assert_eq!(
            w,
            Witness::Exact(vec![
                ["-1".to_string(), "2".to_string()],
                ["0".to_string(), "1".to_string()]
            ])
        );
        assert_eq!(CplxNum::from_int(&3, 2).witness(), Witness::Float([2.0, 0.0]));
    }

    #[test]
    fn float_tolerance_is_relative() {
        let a = CplxNum(Complex64::new(1e6, 0.0));
        let b = CplxNum(Complex64::new(1e6 + 1e-4, 0.0));
        assert!(a.agrees(&b));
        let c = CplxNum(Complex64::new(1.0 + 1e-6, 0.0));
        assert!(!CplxNum::from_int(&1, 1).agrees(&c));
    }
}
