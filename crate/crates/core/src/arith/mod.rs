//! Exact arithmetic over Q and Q(i).
//!
//! Rationals are `num_rational::BigRational`, which keeps the canonical
//! reduced form (positive denominator, zero as `0/1`). On top of it this module
//! provides integer factorization, Gaussian-integer factorization, and the two
//! class-group canonicalizations the invariants live in: `Q*/(Q*)^2` and
//! `(K*/3)/(Q*/3)` for `K = Q(i)`.

mod classes;
mod factor;
mod gaussian;

pub use classes::{conjugate_class, cube_class_mod_q, square_class, CubeClassModQ, SquareClass};
pub use factor::{factor, factor_biguint, is_prime, Factorization};
pub use gaussian::{
    gaussian_factor, split_prime, GaussianInt, GaussianPrimeFactorization, GaussianRational, Unit,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `n / d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
        let d: BigInt = d.trim().parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rational::new(n, d))
    } else {
        let n: BigInt = t.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
        Ok(Rational::from_integer(n))
    }
}

/// Height `|numerator| * denominator`, used for deterministic pivot choices.
pub fn height(q: &Rational) -> BigInt {
    q.numer().abs() * q.denom()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}
