//! Integral closure of reduced affine rings over prime fields.
//!
//! A ring `R = F_p[x_1..x_n]/P` is normalized by iterating Frobenius
//! preimages of ideals: starting from `U_0 = R`, each step keeps the
//! elements `r` of `U_e` with `r^p` in `D^(p-1) U_e`, where `D` is a
//! nonzerodivisor in the conductor. The chain stabilizes at `U = D * R̄`,
//! and the closure is reported as the fractions `n / D` for generators `n`
//! of `U`.

pub mod closure;
pub mod conductor;
pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod verify;

pub use closure::{
    closure_step, frobenius_preimage, integral_closure, principal_closure_member, trim_generators,
    ClosureOptions, ClosureResult, ClosureState, ComponentResult,
};
pub use conductor::{
    conductor_candidate, is_nonzerodivisor, jacobian, split, ConductorData, ConductorSource,
    Presentation,
};
pub use error::{Error, Result};
pub use field::{FieldElement, Modulus};
pub use ideal::Ideal;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::{Polynomial, Ring, RingRef};
pub use verify::{verify_result, CheckOutcome, VerificationReport};
