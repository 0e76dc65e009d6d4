//! Multiplicative and additive characters of a finite field.
//!
//! Characters are indices into the cyclic dual group rather than closures:
//! `χ_j(g^k) = ζ_{q-1}^{jk}` for the fixed generator `g`, and `χ(0) = 0`
//! for every `χ`, the trivial one included.

use std::fmt;
use std::ops::Mul;

use crate::finite_field::{FieldCtx, FqElem};

/// `χ_j`, the multiplicative character of index `j` mod `q-1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MulChar {
    index: u32,
    order: u32,
}

impl MulChar {
    /// `χ_j` on a field with `q - 1 = group_order`.
    pub fn new(j: i64, group_order: u32) -> Self {
        MulChar {
            index: j.rem_euclid(group_order as i64) as u32,
            order: group_order,
        }
    }

    pub fn trivial(group_order: u32) -> Self {
        Self::new(0, group_order)
    }

    /// The quadratic character; `None` in characteristic 2.
    pub fn quadratic(ctx: &FieldCtx) -> Option<Self> {
        (ctx.p() != 2).then(|| Self::new((ctx.q() as i64 - 1) / 2, ctx.q() - 1))
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn group_order(self) -> u32 {
        self.order
    }

    pub fn is_trivial(self) -> bool {
        self.index == 0
    }

    /// `δ(χ)`: 1 for the trivial character, 0 otherwise.
    pub fn delta(self) -> u32 {
        self.is_trivial() as u32
    }

    pub fn conj(self) -> Self {
        Self::new(-(self.index as i64), self.order)
    }

    pub fn pow(self, e: i64) -> Self {
        Self::new(self.index as i64 * e, self.order)
    }

    pub fn sq(self) -> Self {
        self.pow(2)
    }

    /// Exponent `e` with `χ(x) = ζ_{q-1}^e`, or `None` at `x = 0`.
    pub fn exponent(self, ctx: &FieldCtx, x: FqElem) -> Option<u64> {
        debug_assert_eq!(self.order, ctx.q() - 1);
        (!x.is_zero()).then(|| {
            (self.index as u64 * ctx.dlog_nz(x) as u64) % self.order as u64
        })
    }
}

impl Mul for MulChar {
    type Output = MulChar;
    fn mul(self, rhs: MulChar) -> MulChar {
        assert_eq!(self.order, rhs.order, "characters of different fields");
        MulChar::new(self.index as i64 + rhs.index as i64, self.order)
    }
}

impl fmt::Debug for MulChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "χ_{}", self.index)
    }
}

/// All `q - 1` multiplicative characters in index order.
pub fn char_group(ctx: &FieldCtx) -> Vec<MulChar> {
    (0..ctx.q() - 1)
        .map(|j| MulChar::new(j as i64, ctx.q() - 1))
        .collect()
}

/// `ψ_a(x) = ζ_p^{Tr(ax)}` for a nonzero twist `a`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AddChar {
    twist: FqElem,
}

impl AddChar {
    /// # Panics
    /// Panics if `twist` is zero; `ψ_0` is trivial.
    pub fn new(twist: FqElem) -> Self {
        assert!(!twist.is_zero(), "the additive character must be nontrivial");
        AddChar { twist }
    }

    pub fn standard() -> Self {
        AddChar { twist: FqElem::ONE }
    }

    pub fn twist(self) -> FqElem {
        self.twist
    }

    /// Exponent `e` with `ψ(x) = ζ_p^e`.
    pub fn exponent(self, ctx: &FieldCtx, x: FqElem) -> u64 {
        ctx.trace(ctx.mul(self.twist, x)) as u64
    }
}

impl Default for AddChar {
    fn default() -> Self {
        Self::standard()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::build_field;

    #[test]
    fn group_shapes() {
        let f3 = build_field(3, 1).unwrap();
        let g = char_group(&f3);
        assert_eq!(g.len(), 2);
        assert_eq!(MulChar::quadratic(&f3), Some(g[1]));
        let f4 = build_field(2, 2).unwrap();
        assert_eq!(char_group(&f4).len(), 3);
        assert_eq!(MulChar::quadratic(&f4), None);
        let f5 = build_field(5, 1).unwrap();
        assert_eq!(MulChar::quadratic(&f5).unwrap().index(), 2);
    }

    #[test]
    fn delta_and_inverse() {
        assert_eq!(MulChar::trivial(4).delta(), 1);
        assert_eq!(MulChar::new(2, 4).delta(), 0);
        assert_eq!(MulChar::new(1, 6).delta(), 0);
        let c = MulChar::new(1, 6);
        assert!((c * c.conj()).is_trivial());
        assert_eq!(c.conj(), MulChar::new(5, 6));
    }

    #[test]
    fn quadratic_squares_to_trivial() {
        for (p, r) in [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1)] {
            let f = build_field(p, r).unwrap();
            let phi = MulChar::quadratic(&f).unwrap();
            assert!(!phi.is_trivial());
            assert!(phi.sq().is_trivial());
        }
    }

    #[test]
    fn zero_convention() {
        let f = build_field(5, 1).unwrap();
        for c in char_group(&f) {
            assert_eq!(c.exponent(&f, FqElem::ZERO), None);
        }
    }
}
