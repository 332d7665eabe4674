//! Exact arithmetic over prime fields and truncated graded polynomial rings.

mod bigraded;
mod graded;
mod ring;
mod scalar;

pub use bigraded::BigradedPoly;
pub use graded::{poly_inv, poly_mul, poly_pow, GradedPoly, RingSpec};
pub use ring::RingElement;
pub use scalar::{binom_mod_p, fp_inv, is_prime, FpScalar, Prime, MAX_MODULUS};
