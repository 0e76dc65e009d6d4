//! Exact against floating-point evaluation of the same random quantities.

use std::sync::Arc;

use crate::characters::{AddChar, MulChar};
use crate::cyclotomic::CycNum;
use crate::error::Result;
use crate::finite_field::{FieldCtx, FqElem};
use crate::hyperfun::Evaluator;
use crate::scalar::{CplxNum, Scalar};

use super::rng::SplitMix64;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct CrossCheck {
    pub q: u32,
    pub evaluations: u64,
    pub disagreements: u64,
    /// Largest `|a - b| / max(1, |a|, |b|)` seen.
    pub max_error: f64,
}

impl CrossCheck {
    pub fn holds(&self) -> bool {
        self.evaluations > 0 && self.disagreements == 0
    }
}

/// `count` random evaluations (Gauss and Jacobi sums, `₂F₁`, `₃F₂` and the
/// four Lauricella families at arity 2) under both backends.
pub fn cross_check(field: Arc<FieldCtx>, count: u64, seed: u64) -> Result<CrossCheck> {
    let exact = Evaluator::<CycNum>::new(field.clone(), AddChar::standard())?;
    let float = Evaluator::<CplxNum>::new(field.clone(), AddChar::standard())?;
    let m = field.q() - 1;
    let mut rng = SplitMix64::new(seed);
    let mut out = CrossCheck {
        q: field.q(),
        ..Default::default()
    };
    for _ in 0..count {
        let cs: Vec<MulChar> = (0..5)
            .map(|_| MulChar::new(rng.below(m as u64) as i64, m))
            .collect();
        let pts: Vec<FqElem> = (0..2)
            .map(|_| field.elem(rng.below(field.q() as u64) as u32).unwrap())
            .collect();
        let kind = rng.below(8);
        let a = value(&exact, kind, &cs, &pts).to_complex();
        let b = value(&float, kind, &cs, &pts).to_complex();
        let err = (a - b).norm() / a.norm().max(b.norm()).max(1.0);
        out.evaluations += 1;
        out.max_error = out.max_error.max(err);
        if !CplxNum(a).agrees(&CplxNum(b)) {
            out.disagreements += 1;
        }
    }
    Ok(out)
}

fn value<S: Scalar>(e: &Evaluator<S>, kind: u64, c: &[MulChar], p: &[FqElem]) -> S {
    match kind {
        0 => e.g(c[0]),
        1 => e.jac(&c[..2]),
        2 => e.hyp(&c[..2], &c[2..3], p[0]),
        3 => e.hyp(&c[..3], &c[3..], p[0]),
        4 => e.fa(c[0], &c[1..3], &c[3..5], p),
        5 => e.fb(&c[..2], &c[2..4], c[4], p),
        6 => e.fc(c[0], c[1], &c[2..4], p),
        _ => e.fd(c[0], &c[1..3], c[3], p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::build_field;

    #[test]
    fn backends_agree_at_seven() {
        let k = Arc::new(build_field(7, 1).unwrap());
        let r = cross_check(k, 200, 1).unwrap();
        assert!(r.holds(), "{r:?}");
        assert!(r.max_error < 1e-9);
    }
}
