use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::coef::{self, Frac};
use super::poly::{cyclotomic_polynomial, CycPoly};
use crate::error::{Error, Result};

/// The ring `Q[x]/(Φ_N(x))` for one fixed `N`, i.e. the cyclotomic field
/// `Q(ζ_N)` in its power basis.
pub struct CycRing {
    order: u32,
    phi: usize,
    modulus: CycPoly,
    /// nonzero coefficients of `Φ_N` below the leading term
    nz: Vec<(usize, i64)>,
}

impl CycRing {
    pub fn order(&self) -> u32 {
        self.order
    }

    /// `φ(N)`, the dimension over `Q`.
    pub fn dim(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &CycPoly {
        &self.modulus
    }
}

impl fmt::Debug for CycRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(ζ_{})", self.order)
    }
}

/// Shared handle to `Q(ζ_N)`; constructed once per `N`.
pub fn cyc_ring(order: u32) -> Arc<CycRing> {
    static RINGS: OnceLock<Mutex<HashMap<u32, Arc<CycRing>>>> = OnceLock::new();
    let rings = RINGS.get_or_init(Default::default);
    if let Some(r) = rings.lock().unwrap().get(&order) {
        return r.clone();
    }
    let modulus = cyclotomic_polynomial(order);
    let ints = modulus.to_ints().expect("Φ_N has integer coefficients");
    let phi = ints.len() - 1;
    let nz = ints[..phi]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| (j, c))
        .collect();
    let ring = Arc::new(CycRing {
        order,
        phi,
        modulus,
        nz,
    });
    rings.lock().unwrap().entry(order).or_insert(ring).clone()
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(Frac<i128>),
    Big(Frac<BigInt>),
}

impl Repr {
    fn big(&self) -> Frac<BigInt> {
        match self {
            Repr::Small(f) => coef::to_big(f),
            Repr::Big(f) => f.clone(),
        }
    }

    fn from_big(f: Frac<BigInt>) -> Repr {
        match coef::to_small(&f) {
            Some(s) => Repr::Small(s),
            None => Repr::Big(f),
        }
    }
}

/// An exact element of `Q(ζ_N)`: rational coordinates in the power basis
/// `1, ζ, …, ζ^{φ(N)-1}`.
///
/// Coordinates are stored as integer numerators over one common positive
/// denominator in lowest terms, using machine words while they fit and
/// `BigInt` otherwise. The representation is canonical, so equality is
/// coordinate equality.
#[derive(Clone)]
pub struct CycNum {
    ring: Arc<CycRing>,
    repr: Repr,
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.ring.order == other.ring.order && self.repr == other.repr
    }
}

impl Eq for CycNum {}

impl CycNum {
    fn small(ring: &Arc<CycRing>, f: Frac<i128>) -> Self {
        CycNum {
            ring: ring.clone(),
            repr: Repr::Small(f),
        }
    }

    pub fn zero(ring: &Arc<CycRing>) -> Self {
        Self::small(ring, Frac::zero(ring.phi))
    }

    pub fn one(ring: &Arc<CycRing>) -> Self {
        Self::from_int(ring, 1)
    }

    pub fn from_int(ring: &Arc<CycRing>, v: i64) -> Self {
        let mut f = Frac::zero(ring.phi);
        f.num[0] = v as i128;
        Self::small(ring, f)
    }

    /// The rational `num / den`.
    ///
    /// # Panics
    /// Panics if `den == 0`.
    pub fn from_ratio(ring: &Arc<CycRing>, num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let mut f = Frac::zero(ring.phi);
        f.num[0] = num as i128;
        f.den = den as i128;
        Self::small(ring, f.normalize().expect("fits"))
    }

    pub fn from_rational(ring: &Arc<CycRing>, r: &BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); ring.phi];
        coeffs[0] = r.clone();
        Self::from_rationals(ring, &coeffs)
    }

    /// Element with the given power-basis coordinates; longer inputs are
    /// reduced modulo `Φ_N`.
    pub fn from_rationals(ring: &Arc<CycRing>, coeffs: &[BigRational]) -> Self {
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let mut num: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        if num.len() < ring.phi {
            num.resize(ring.phi, BigInt::zero());
        }
        coef::reduce(&mut num, ring.phi, &ring.nz).expect("bigint never overflows");
        let f = Frac { num, den }.normalize().expect("bigint never overflows");
        CycNum {
            ring: ring.clone(),
            repr: Repr::from_big(f),
        }
    }

    /// `ζ_N^k` with `k` taken mod `N`.
    pub fn zeta_power(order: u32, k: i64) -> Self {
        Self::zeta(&cyc_ring(order), k)
    }

    pub fn zeta(ring: &Arc<CycRing>, k: i64) -> Self {
        let mut counts = vec![0i64; ring.order as usize];
        counts[k.rem_euclid(ring.order as i64) as usize] = 1;
        Self::from_zeta_counts(ring, &counts)
    }

    /// `Σ_k counts[k] ζ^k` for `k < N`.
    pub fn from_zeta_counts(ring: &Arc<CycRing>, counts: &[i64]) -> Self {
        debug_assert!(counts.len() <= ring.order as usize);
        let mut padded = counts.to_vec();
        padded.resize(ring.order as usize, 0);
        let repr = match coef::from_counts::<i128>(&padded, ring.phi, &ring.nz) {
            Some(f) => Repr::Small(f),
            None => Repr::from_big(
                coef::from_counts::<BigInt>(&padded, ring.phi, &ring.nz).expect("bigint"),
            ),
        };
        CycNum {
            ring: ring.clone(),
            repr,
        }
    }

    /// `Σ_t a_t ζ^{k_t}`. Much cheaper than multiplying by each power of ζ.
    ///
    /// # Panics
    /// Panics if a term lives in a different ring.
    pub fn weighted_zeta_sum(ring: &Arc<CycRing>, terms: &[(&CycNum, u64)]) -> Self {
        let n = ring.order as usize;
        for (t, _) in terms {
            assert_eq!(t.ring.order, ring.order, "order mismatch");
        }
        let all_small = terms.iter().all(|(t, _)| matches!(t.repr, Repr::Small(_)));
        if all_small {
            let small: Vec<(&Frac<i128>, usize)> = terms
                .iter()
                .map(|(t, k)| match &t.repr {
                    Repr::Small(f) => (f, (*k % n as u64) as usize),
                    Repr::Big(_) => unreachable!(),
                })
                .collect();
            if let Some(f) = coef::weighted_rotations(&small, n, ring.phi, &ring.nz) {
                return Self::small(ring, f);
            }
        }
        let bigs: Vec<Frac<BigInt>> = terms.iter().map(|(t, _)| t.repr.big()).collect();
        let refs: Vec<(&Frac<BigInt>, usize)> = bigs
            .iter()
            .zip(terms)
            .map(|(f, (_, k))| (f, (*k % n as u64) as usize))
            .collect();
        let f = coef::weighted_rotations(&refs, n, ring.phi, &ring.nz).expect("bigint");
        CycNum {
            ring: ring.clone(),
            repr: Repr::from_big(f),
        }
    }

    pub fn mul_zeta(&self, k: u64) -> Self {
        Self::weighted_zeta_sum(&self.ring, &[(self, k)])
    }

    pub fn ring(&self) -> &Arc<CycRing> {
        &self.ring
    }

    pub fn order(&self) -> u32 {
        self.ring.order
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Small(f) => f.is_zero(),
            Repr::Big(f) => f.is_zero(),
        }
    }

    /// Power-basis coordinates; always `φ(N)` of them.
    pub fn coeffs(&self) -> Vec<BigRational> {
        let f = self.repr.big();
        f.num
            .iter()
            .map(|c| BigRational::new(c.clone(), f.den.clone()))
            .collect()
    }

    /// Common denominator and integer numerators of the coordinates.
    pub fn numerators(&self) -> (Vec<BigInt>, BigInt) {
        let f = self.repr.big();
        (f.num, f.den)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        let c = self.coeffs();
        c[1..].iter().all(Zero::is_zero).then(|| c[0].clone())
    }

    fn binop(
        &self,
        other: &Self,
        small: impl Fn(&Frac<i128>, &Frac<i128>) -> Option<Frac<i128>>,
        big: impl Fn(&Frac<BigInt>, &Frac<BigInt>) -> Option<Frac<BigInt>>,
    ) -> Self {
        assert_eq!(
            self.ring.order, other.ring.order,
            "cyclotomic order mismatch"
        );
        if let (Repr::Small(a), Repr::Small(b)) = (&self.repr, &other.repr) {
            if let Some(f) = small(a, b) {
                return Self::small(&self.ring, f);
            }
        }
        let f = big(&self.repr.big(), &other.repr.big()).expect("bigint never overflows");
        CycNum {
            ring: self.ring.clone(),
            repr: Repr::from_big(f),
        }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        self.binop(
            other,
            |a, b| coef::add(a, b, negate),
            |a, b| coef::add(a, b, negate),
        )
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let (phi, nz) = (self.ring.phi, &self.ring.nz);
        self.binop(
            other,
            |a, b| coef::mul(a, b, phi, nz),
            |a, b| coef::mul(a, b, phi, nz),
        )
    }

    /// Multiply by the rational `num / den`.
    pub fn scale(&self, num: i64, den: i64) -> Self {
        self.mul_impl(&Self::from_ratio(&self.ring, num, den))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            base = base.mul_impl(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended gcd of the representative
    /// with `Φ_N` over the rationals.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = CycPoly::new(self.coeffs());
        let (g, s, _) = CycPoly::ext_gcd(&a, &self.ring.modulus);
        debug_assert_eq!(g, CycPoly::one(), "Φ_N is irreducible");
        Ok(Self::from_rationals(&self.ring, s.coeffs()))
    }

    /// Apply the automorphism `ζ ↦ ζ^k` (requires `gcd(k, N) = 1`).
    pub fn galois(&self, k: u64) -> Self {
        let n = self.ring.order as u64;
        debug_assert_eq!(k.gcd(&n), 1);
        let (num, den) = self.numerators();
        let mut buf = vec![BigInt::zero(); n as usize];
        for (i, c) in num.iter().enumerate() {
            buf[((i as u64 * k) % n) as usize] += c;
        }
        coef::reduce(&mut buf, self.ring.phi, &self.ring.nz).expect("bigint");
        let f = Frac { num: buf, den }.normalize().expect("bigint");
        CycNum {
            ring: self.ring.clone(),
            repr: Repr::from_big(f),
        }
    }

    /// Whether the value lies in the subfield `Q(ζ_m)` (`m | N`), i.e. is
    /// fixed by every `ζ ↦ ζ^k` with `k ≡ 1 (mod m)`.
    pub fn in_subfield(&self, m: u32) -> bool {
        let n = self.ring.order;
        assert!(n.is_multiple_of(m), "Q(ζ_{m}) is not a subfield of Q(ζ_{n})");
        subgroup_generators(n, m)
            .into_iter()
            .all(|k| self.galois(k as u64) == *self)
    }

    /// The image under the embedding `ζ_N ↦ exp(2πi/N)`.
    pub fn to_complex(&self) -> Complex64 {
        let (num, den) = self.numerators();
        let den = den.to_f64().unwrap_or(f64::INFINITY);
        let n = self.ring.order as f64;
        num.iter()
            .enumerate()
            .map(|(i, c)| {
                let theta = std::f64::consts::TAU * i as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), theta)
            })
            .sum::<Complex64>()
            / den
    }
}

/// A generating set of `{k mod N : gcd(k, N) = 1, k ≡ 1 (mod m)}`, chosen
/// greedily.
fn subgroup_generators(n: u32, m: u32) -> Vec<u32> {
    let mul = |a: u32, b: u32| (a as u64 * b as u64 % n as u64) as u32;
    let mut seen = vec![false; n as usize];
    seen[(1 % n) as usize] = true;
    let mut gens: Vec<u32> = Vec::new();
    for k in (1..n).filter(|k| k % m == 1 % m && k.gcd(&n) == 1) {
        if seen[k as usize] {
            continue;
        }
        gens.push(k);
        let mut queue: Vec<u32> = (0..n).filter(|&x| seen[x as usize]).collect();
        while let Some(x) = queue.pop() {
            for &g in &gens {
                let y = mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push(y);
                }
            }
        }
    }
    gens
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum<{}>{}", self.ring.order, self)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coeffs();
        write!(f, "[")?;
        for (i, x) in c.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a CycNum> for &'a CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &'a CycNum) -> CycNum {
                $body(self, rhs)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &'a CycNum) -> CycNum {
                $body(&self, rhs)
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &CycNum, b: &CycNum| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &CycNum, b: &CycNum| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &CycNum, b: &CycNum| a.mul_impl(b));

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::zero(&self.ring).add_impl(self, true)
    }
}
