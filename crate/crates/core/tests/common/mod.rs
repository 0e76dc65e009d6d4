#![allow(dead_code)]

use std::f64::consts::TAU;
use std::sync::Arc;

use ffhyper::{build_field, AddChar, CycNum, Evaluator, FieldCtx, FqElem, MulChar};
use num_complex::Complex64;

pub fn field(q: u32) -> Arc<FieldCtx> {
    let (p, r) = ffhyper::prime_power(q as u64).expect("prime power");
    Arc::new(build_field(p, r).unwrap())
}

pub fn exact(q: u32) -> Evaluator<CycNum> {
    Evaluator::new(field(q), AddChar::standard()).unwrap()
}

pub fn chars(k: &FieldCtx) -> Vec<MulChar> {
    ffhyper::char_group(k)
}

/// Brute-force floating-point evaluation straight from the definitions,
/// sharing nothing with the library beyond field arithmetic.
pub struct Oracle {
    pub k: Arc<FieldCtx>,
    m: u32,
    gauss: Vec<Complex64>,
}

impl Oracle {
    pub fn new(k: Arc<FieldCtx>) -> Self {
        let m = k.q() - 1;
        let mut o = Oracle {
            k,
            m,
            gauss: Vec::new(),
        };
        o.gauss = (0..m)
            .map(|j| {
                -o.k.nonzero()
                    .map(|x| o.psi(x) * o.chi(j, x))
                    .sum::<Complex64>()
            })
            .collect();
        o
    }

    pub fn chi(&self, j: u32, x: FqElem) -> Complex64 {
        if x.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        let e = (j as u64 * self.k.dlog(x).unwrap() as u64) % self.m as u64;
        Complex64::from_polar(1.0, TAU * e as f64 / self.m as f64)
    }

    pub fn psi(&self, x: FqElem) -> Complex64 {
        let t = self.k.trace(x);
        Complex64::from_polar(1.0, TAU * t as f64 / self.k.p() as f64)
    }

    pub fn g(&self, j: u32) -> Complex64 {
        self.gauss[(j % self.m) as usize]
    }

    pub fn gc(&self, j: u32) -> Complex64 {
        if j.is_multiple_of(self.m) {
            self.g(j) * self.k.q() as f64
        } else {
            self.g(j)
        }
    }

    fn poch(&self, a: u32, v: u32) -> Complex64 {
        self.g(a + v) / self.g(a)
    }

    fn pochc(&self, a: u32, v: u32) -> Complex64 {
        self.gc(a + v) / self.gc(a)
    }

    /// `ₘFₙ` by its defining sum over `ν`.
    pub fn hyper(&self, upper: &[u32], lower: &[u32], lam: FqElem) -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        for v in 0..self.m {
            let mut t = self.chi(v, lam) / self.pochc(0, v);
            for &a in upper {
                t *= self.poch(a, v);
            }
            for &b in lower {
                t /= self.pochc(b, v);
            }
            s += t;
        }
        s / (1.0 - self.k.q() as f64)
    }

    /// `F_D^{(n)}` by its defining sum.
    pub fn fd(&self, a: u32, beta: &[u32], c: u32, pt: &[FqElem]) -> Complex64 {
        let n = beta.len();
        let mut s = Complex64::new(0.0, 0.0);
        for idx in 0..(self.m as usize).pow(n as u32) {
            let nus: Vec<u32> = (0..n)
                .map(|i| ((idx / (self.m as usize).pow(i as u32)) % self.m as usize) as u32)
                .collect();
            let tot: u32 = nus.iter().sum();
            let mut t = self.poch(a, tot) / self.pochc(c, tot);
            for i in 0..n {
                t *= self.poch(beta[i], nus[i]) / self.pochc(0, nus[i]) * self.chi(nus[i], pt[i]);
            }
            s += t;
        }
        s / (1.0 - self.k.q() as f64).powi(n as i32)
    }
}

pub fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-9 * a.norm().max(b.norm()).max(1.0)
}
