//! Independence of the hypergeometric functions from the two arbitrary
//! choices made when realizing them: the additive character `ψ` and the
//! generator of `k^×` that indexes the multiplicative characters.
//!
//! Values are compared through coefficient grids. A function
//! `F(λ) = Σ_ν c(ν) ∏ ν_i(λ_i)` on `(k^×)^n` determines and is determined by
//! its grid `c`, and every family vanishes once a coordinate is zero, so
//! equal grids mean equal values at every point.

use std::sync::Arc;

use crate::characters::{AddChar, MulChar};
use crate::cyclotomic::CycNum;
use crate::error::Result;
use crate::hyperfun::{Evaluator, Family, HyperParams, LauricellaParams};

/// A function shape whose grids are compared.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Shape {
    Lauricella(Family, usize),
    /// `₂F₁`
    Gauss,
    /// `₃F₂`
    Clausen,
}

impl Shape {
    /// `F_A … F_D` at arity 2, then `₂F₁` and `₃F₂`.
    pub fn standard() -> Vec<Shape> {
        vec![
            Shape::Lauricella(Family::A, 2),
            Shape::Lauricella(Family::B, 2),
            Shape::Lauricella(Family::C, 2),
            Shape::Lauricella(Family::D, 2),
            Shape::Gauss,
            Shape::Clausen,
        ]
    }

    pub fn name(self) -> String {
        match self {
            Shape::Lauricella(f, n) => format!("F_{f:?}^({n})"),
            Shape::Gauss => "2F1".to_string(),
            Shape::Clausen => "3F2".to_string(),
        }
    }

    fn slots(self) -> usize {
        match self {
            Shape::Lauricella(Family::A | Family::B, n) => 2 * n + 1,
            Shape::Lauricella(_, n) => n + 2,
            Shape::Gauss => 3,
            Shape::Clausen => 5,
        }
    }

    fn arity(self) -> usize {
        match self {
            Shape::Lauricella(_, n) => n,
            _ => 1,
        }
    }

    fn grid(self, e: &Evaluator<CycNum>, cs: &[MulChar]) -> Result<Arc<Vec<CycNum>>> {
        let p = match self {
            Shape::Lauricella(Family::A, n) => LauricellaParams::fa(cs[0], &cs[1..=n], &cs[n + 1..])?,
            Shape::Lauricella(Family::B, n) => LauricellaParams::fb(&cs[..n], &cs[n..2 * n], cs[2 * n])?,
            Shape::Lauricella(Family::C, _) => LauricellaParams::fc(cs[0], cs[1], &cs[2..])?,
            Shape::Lauricella(Family::D, n) => LauricellaParams::fd(cs[0], &cs[1..=n], cs[n + 1])?,
            Shape::Gauss => return Ok(e.hyper_grid(&HyperParams::new(&cs[..2], &cs[2..]))),
            Shape::Clausen => return Ok(e.hyper_grid(&HyperParams::new(&cs[..3], &cs[3..]))),
        };
        Ok(e.lauricella_grid(&p))
    }
}

/// Outcome of one invariance check over every parameter tuple of a shape.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Invariance {
    pub shape: String,
    pub q: u32,
    pub tuples: u64,
    pub cells: u64,
    pub mismatches: u64,
    /// Cells found outside `Q(ζ_{q-1})`.
    pub outside_subfield: u64,
}

impl Invariance {
    pub fn holds(&self) -> bool {
        self.tuples > 0 && self.mismatches == 0 && self.outside_subfield == 0
    }
}

/// Calls `f` on every tuple of `len` character indices below `m`.
fn each_tuple(m: u32, len: usize, mut f: impl FnMut(&[u32]) -> Result<()>) -> Result<()> {
    let mut idx = vec![0u32; len];
    loop {
        f(&idx)?;
        let mut i = 0;
        loop {
            if i == len {
                return Ok(());
            }
            idx[i] += 1;
            if idx[i] < m {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Grids under `ψ_a` for each twist `a` against grids under `e`'s own
/// character, for every parameter tuple. With `rationality`, every cell of
/// `e`'s grids is also checked to lie in `Q(ζ_{q-1})`.
pub fn psi_invariance(
    e: &Evaluator<CycNum>,
    shape: Shape,
    twists: &[AddChar],
    rationality: bool,
) -> Result<Invariance> {
    let m = e.k().q() - 1;
    let others: Vec<_> = twists.iter().map(|&a| e.with_psi(a)).collect();
    let mut out = Invariance {
        shape: shape.name(),
        q: e.k().q(),
        ..Default::default()
    };
    each_tuple(m, shape.slots(), |idx| {
        let cs: Vec<MulChar> = idx.iter().map(|&j| MulChar::new(j as i64, m)).collect();
        let base = shape.grid(e, &cs)?;
        out.tuples += 1;
        out.cells += base.len() as u64;
        if rationality {
            out.outside_subfield += base.iter().filter(|c| !c.in_subfield(m)).count() as u64;
        }
        for other in &others {
            let g = shape.grid(other, &cs)?;
            out.mismatches += base.iter().zip(g.iter()).filter(|(a, b)| a != b).count() as u64;
        }
        Ok(())
    })?;
    Ok(out)
}

/// Grids of `other` against those of `base`, where both realize the same
/// field and additive character but fix different generators. If
/// `other`'s generator is `g^u`, its `χ_j` is `base`'s `χ_{j/u}`.
pub fn generator_invariance(
    base: &Evaluator<CycNum>,
    other: &Evaluator<CycNum>,
    shape: Shape,
) -> Result<Invariance> {
    let k = base.k();
    let m = k.q() - 1;
    assert_eq!(k.q(), other.k().q(), "fields of different size");
    assert_eq!(k.modulus(), other.k().modulus(), "fields with different moduli");
    let u = k.dlog(other.k().generator())?;
    let u_inv = (1..m.max(2)).find(|v| (u as u64 * *v as u64) % m as u64 == 1 % m as u64).unwrap_or(1);
    let map = |j: u32| (j as u64 * u_inv as u64 % m as u64) as u32;
    let n = shape.arity();
    let mut out = Invariance {
        shape: shape.name(),
        q: k.q(),
        ..Default::default()
    };
    each_tuple(m, shape.slots(), |idx| {
        let theirs: Vec<MulChar> = idx.iter().map(|&j| MulChar::new(j as i64, m)).collect();
        let ours: Vec<MulChar> = idx.iter().map(|&j| MulChar::new(map(j) as i64, m)).collect();
        let g_other = shape.grid(other, &theirs)?;
        let g_base = shape.grid(base, &ours)?;
        out.tuples += 1;
        out.cells += g_other.len() as u64;
        for (cell, v) in g_other.iter().enumerate() {
            // cells are mixed radix with ν_1 fastest
            let mut rest = cell;
            let mut target = 0usize;
            let mut scale = 1usize;
            for _ in 0..n {
                let j = (rest % m as usize) as u32;
                rest /= m as usize;
                target += map(j) as usize * scale;
                scale *= m as usize;
            }
            if g_base[target] != *v {
                out.mismatches += 1;
            }
        }
        Ok(())
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::{build_field, build_field_with, FieldOptions, GeneratorChoice};

    #[test]
    fn twists_at_five() {
        let k = Arc::new(build_field(5, 1).unwrap());
        let e = Evaluator::<CycNum>::new(k.clone(), AddChar::standard()).unwrap();
        let twists: Vec<AddChar> = k.nonzero().skip(1).map(AddChar::new).collect();
        for shape in [Shape::Gauss, Shape::Lauricella(Family::D, 2)] {
            let r = psi_invariance(&e, shape, &twists, true).unwrap();
            assert!(r.holds(), "{r:?}");
        }
    }

    #[test]
    fn generators_at_seven() {
        let k = Arc::new(build_field(7, 1).unwrap());
        let opts = FieldOptions {
            generator: GeneratorChoice::Largest,
            ..Default::default()
        };
        let k2 = Arc::new(build_field_with(7, 1, opts).unwrap());
        assert_ne!(k.generator(), k2.generator());
        let a = Evaluator::<CycNum>::new(k, AddChar::standard()).unwrap();
        let b = Evaluator::<CycNum>::new(k2, AddChar::standard()).unwrap();
        let r = generator_invariance(&a, &b, Shape::Lauricella(Family::C, 2)).unwrap();
        assert!(r.holds(), "{r:?}");
        let same = generator_invariance(&a, &a, Shape::Gauss).unwrap();
        assert!(same.holds());
        // without the index map the two realizations disagree
        let cs: Vec<MulChar> = [1, 2, 4].iter().map(|&j| MulChar::new(j, 6)).collect();
        assert_ne!(Shape::Gauss.grid(&a, &cs).unwrap(), Shape::Gauss.grid(&b, &cs).unwrap());
    }
}
