//! Hypergeometric functions over finite fields with exact cyclotomic values.
//!
//! ```
//! use std::sync::Arc;
//! use ffhyper::{build_field, AddChar, CycNum, Evaluator, MulChar};
//!
//! let k = Arc::new(build_field(3, 2)?);
//! let e = Evaluator::<CycNum>::new(k.clone(), AddChar::standard())?;
//! let (a, b, c) = (MulChar::new(1, 8), MulChar::new(2, 8), MulChar::new(5, 8));
//! let x = k.elem(4)?;
//! let v = e.hyp(&[a, b], &[c], x);
//! let w = e.fd(a, &[b, c], c, &[x, x]);
//! assert!(v.in_subfield(8) && w.in_subfield(8));
//! assert_eq!(e.fd(a, &[b], c, &[x]), v);
//! # Ok::<(), ffhyper::Error>(())
//! ```

pub mod characters;
pub mod charsums;
pub mod cyclotomic;
pub mod error;
pub mod finite_field;
pub mod hyperfun;
pub mod scalar;
pub mod verifier;

pub use characters::{char_group, AddChar, MulChar};
pub use charsums::SumTables;
pub use cyclotomic::{cyc_ring, cyclotomic_polynomial, euler_phi, CycNum, CycPoly, CycRing};
pub use error::{Error, Result};
pub use finite_field::{
    build_field, build_field_with, prime_power, FieldCtx, FieldOptions, FqElem, GeneratorChoice,
};
pub use hyperfun::{Evaluator, Family, HyperParams, LauricellaParams};
pub use scalar::{CplxNum, Scalar, Witness};
pub use verifier::{
    check_identity, registry, registry_ids, run_suite, IdentitySpec, Mode, Report, Status,
    SuiteReport, SweepOptions, Tuple,
};
