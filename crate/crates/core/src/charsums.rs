//! Gauss sums, Jacobi sums and the finite Pochhammer symbols.

use std::sync::Arc;

use crate::characters::{char_group, AddChar, MulChar};
use crate::error::Result;
use crate::finite_field::{FieldCtx, FqElem};
use crate::scalar::Scalar;

/// Character values and Gauss-sum-derived tables for one field and one
/// additive character. Everything is built eagerly and never mutated.
pub struct SumTables<S: Scalar> {
    field: Arc<FieldCtx>,
    psi: AddChar,
    ring: S::Ring,
    m: u32,
    gauss: Vec<S>,
    gauss_inv: Vec<S>,
    gauss_circ: Vec<S>,
    gauss_circ_inv: Vec<S>,
    /// `[a * m + v]`
    poch: Vec<S>,
    poch_circ: Vec<S>,
    poch_circ_inv: Vec<S>,
}

impl<S: Scalar> SumTables<S> {
    pub fn new(field: Arc<FieldCtx>, psi: AddChar) -> Result<Self> {
        let ring = S::ring(field.value_order());
        let m = field.q() - 1;
        let n = field.value_order() as usize;
        let q = field.q() as i64;

        let gauss: Vec<S> = char_group(&field)
            .into_iter()
            .map(|eta| {
                let mut counts = vec![0i64; n];
                for x in field.nonzero() {
                    let e = zeta_exp_psi(&field, psi, x) + zeta_exp_chi(&field, eta, x).unwrap();
                    counts[(e % n as u64) as usize] -= 1;
                }
                S::from_zeta_counts(&ring, &counts)
            })
            .collect();
        for g in &gauss {
            assert!(!g.is_zero(), "Gauss sums never vanish");
        }
        let gauss_inv = gauss.iter().map(S::inv).collect::<Result<Vec<_>>>()?;
        let qs = S::from_int(&ring, q);
        let mut gauss_circ = gauss.clone();
        gauss_circ[0] = gauss[0].mul(&qs);
        let mut gauss_circ_inv = gauss_inv.clone();
        gauss_circ_inv[0] = gauss_inv[0].mul(&S::from_ratio(&ring, 1, q));

        let mu = m as usize;
        let mut poch = Vec::with_capacity(mu * mu);
        let mut poch_circ = Vec::with_capacity(mu * mu);
        let mut poch_circ_inv = Vec::with_capacity(mu * mu);
        for a in 0..mu {
            for v in 0..mu {
                let av = (a + v) % mu;
                poch.push(gauss[av].mul(&gauss_inv[a]));
                poch_circ.push(gauss_circ[av].mul(&gauss_circ_inv[a]));
                poch_circ_inv.push(gauss_circ[a].mul(&gauss_circ_inv[av]));
            }
        }
        Ok(SumTables {
            field,
            psi,
            ring,
            m,
            gauss,
            gauss_inv,
            gauss_circ,
            gauss_circ_inv,
            poch,
            poch_circ,
            poch_circ_inv,
        })
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn psi(&self) -> AddChar {
        self.psi
    }

    pub fn ring(&self) -> &S::Ring {
        &self.ring
    }

    /// `|k^×| = q - 1`.
    pub fn group_order(&self) -> u32 {
        self.m
    }

    fn at(&self, c: MulChar) -> usize {
        debug_assert_eq!(c.group_order(), self.m);
        c.index() as usize
    }

    /// Exponent of `ζ_N` for `χ(x)`, `None` at zero.
    #[inline]
    pub fn chi_exp(&self, chi: MulChar, x: FqElem) -> Option<u64> {
        zeta_exp_chi(&self.field, chi, x)
    }

    /// Exponent of `ζ_N` for `ψ(x)`.
    #[inline]
    pub fn psi_exp(&self, x: FqElem) -> u64 {
        zeta_exp_psi(&self.field, self.psi, x)
    }

    pub fn chi(&self, chi: MulChar, x: FqElem) -> S {
        match self.chi_exp(chi, x) {
            Some(e) => S::zeta(&self.ring, e),
            None => S::zero(&self.ring),
        }
    }

    pub fn psi_value(&self, x: FqElem) -> S {
        S::zeta(&self.ring, self.psi_exp(x))
    }

    /// `g(η) = -Σ_{x ≠ 0} ψ(x) η(x)`.
    pub fn gauss(&self, eta: MulChar) -> &S {
        &self.gauss[self.at(eta)]
    }

    pub fn gauss_inv(&self, eta: MulChar) -> &S {
        &self.gauss_inv[self.at(eta)]
    }

    /// `g°(η) = q^{δ(η)} g(η)`.
    pub fn gauss_circ(&self, eta: MulChar) -> &S {
        &self.gauss_circ[self.at(eta)]
    }

    pub fn gauss_circ_inv(&self, eta: MulChar) -> &S {
        &self.gauss_circ_inv[self.at(eta)]
    }

    /// `(α)_ν = g(αν) / g(α)`.
    pub fn poch(&self, alpha: MulChar, nu: MulChar) -> &S {
        &self.poch[self.at(alpha) * self.m as usize + self.at(nu)]
    }

    /// `(α)°_ν = g°(αν) / g°(α)`.
    pub fn poch_circ(&self, alpha: MulChar, nu: MulChar) -> &S {
        &self.poch_circ[self.at(alpha) * self.m as usize + self.at(nu)]
    }

    /// `1 / (α)°_ν`.
    pub fn poch_circ_inv(&self, alpha: MulChar, nu: MulChar) -> &S {
        &self.poch_circ_inv[self.at(alpha) * self.m as usize + self.at(nu)]
    }

    /// `j(η_1, …, η_n)` from Gauss sums: `(1 - (1-q)^n) / q` when every
    /// `η_i` is trivial, `∏ g(η_i) / g°(∏ η_i)` otherwise.
    ///
    /// # Panics
    /// Panics if fewer than two characters are given.
    pub fn jacobi(&self, etas: &[MulChar]) -> S {
        assert!(etas.len() >= 2, "Jacobi sums take at least two characters");
        if etas.iter().all(|e| e.is_trivial()) {
            let q = self.field.q() as i64;
            let n = etas.len() as u32;
            return S::from_ratio(&self.ring, 1 - (1 - q).pow(n), q);
        }
        let prod = etas.iter().copied().reduce(|a, b| a * b).unwrap();
        etas.iter()
            .fold(self.gauss_circ_inv(prod).clone(), |acc, &e| {
                acc.mul(self.gauss(e))
            })
    }

    /// `(-1)^{n-1} Σ_{x_i ≠ 0, Σ x_i = 1} ∏ η_i(x_i)` by direct enumeration
    /// of `q^{n-1}` tuples. Intended as a test oracle.
    pub fn jacobi_by_summation(&self, etas: &[MulChar]) -> S {
        assert!(etas.len() >= 2, "Jacobi sums take at least two characters");
        let f = &self.field;
        let n = etas.len();
        let mut counts = vec![0i64; f.value_order() as usize];
        let mut xs = vec![FqElem::ZERO; n - 1];
        let sign = if n.is_multiple_of(2) { -1 } else { 1 };
        'outer: loop {
            let partial = xs.iter().fold(FqElem::ZERO, |a, &x| f.add(a, x));
            let last = f.sub(FqElem::ONE, partial);
            let mut e = 0u64;
            let mut live = true;
            for (&eta, &x) in etas.iter().zip(xs.iter().chain(std::iter::once(&last))) {
                match self.chi_exp(eta, x) {
                    Some(k) => e += k,
                    None => {
                        live = false;
                        break;
                    }
                }
            }
            if live {
                counts[(e % f.value_order() as u64) as usize] += sign;
            }
            for x in xs.iter_mut() {
                if x.index() + 1 < f.q() {
                    *x = f.elem(x.index() + 1).unwrap();
                    continue 'outer;
                }
                *x = FqElem::ZERO;
            }
            break;
        }
        S::from_zeta_counts(&self.ring, &counts)
    }
}

pub(crate) fn zeta_exp_chi(f: &FieldCtx, chi: MulChar, x: FqElem) -> Option<u64> {
    chi.exponent(f, x).map(|e| e * f.p() as u64)
}

pub(crate) fn zeta_exp_psi(f: &FieldCtx, psi: AddChar, x: FqElem) -> u64 {
    psi.exponent(f, x) * (f.q() as u64 - 1)
}
