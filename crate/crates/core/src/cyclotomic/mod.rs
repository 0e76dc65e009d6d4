//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! All character sums over `F_q` take values in `Q(ζ_N)` with `N = p(q-1)`;
//! values of multiplicative characters sit inside via `ζ_{q-1} = ζ_N^p` and
//! values of additive characters via `ζ_p = ζ_N^{q-1}`.

mod coef;
mod num;
mod poly;

pub use num::{cyc_ring, CycNum, CycRing};
pub use poly::{cyclotomic_polynomial, euler_phi, CycPoly};
