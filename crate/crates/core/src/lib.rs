pub mod arith;
pub mod biquotient;
pub mod error;
pub mod graded_ring;
pub mod harness;
pub mod invariants;
pub mod linalg;
pub mod numfield;
pub mod poly;
pub mod upoly;

pub use arith::Rational;
pub use error::{Error, Result};

pub(crate) fn to_f64(q: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
}
