//! Exact scalar arithmetic and the dense structures built on it.
//!
//! Every quantity in this crate is an arbitrary-precision rational
//! ([`Scalar`]); no floating point is used anywhere. Rationals are kept in
//! lowest terms with a positive denominator by the underlying
//! representation, so equality is exact structural equality.

mod linalg;
mod matrix;
mod poly;

pub use linalg::{char_poly, inverse, kernel_basis, rational_eigenvalues, rref, solve_in_span};
pub use matrix::Matrix;
pub use poly::BivarPoly;

use crate::error::{Result, SchemeError};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational scalar. Always in lowest terms, denominator
/// positive; closed under `+`, `-`, `*` and `/` by nonzero.
pub type Scalar = num_rational::BigRational;

/// Integer as a scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Exact fraction `num/den`.
///
/// Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` for a possibly negative integer exponent.
///
/// Panics when `base == 0` and `exp < 0`.
pub fn pow_i(base: &Scalar, exp: i64) -> Scalar {
    if exp >= 0 {
        base.pow(exp as i32)
    } else {
        Scalar::one() / base.pow((-exp) as i32)
    }
}

pub fn is_integer(s: &Scalar) -> bool {
    s.denom().is_one()
}

pub fn to_i64(s: &Scalar) -> Option<i64> {
    if is_integer(s) {
        s.numer().to_i64()
    } else {
        None
    }
}

/// Parse `"p"` or `"p/q"` into a scalar.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    text.trim()
        .parse::<Scalar>()
        .map_err(|e| SchemeError::Malformed(format!("bad rational {text:?}: {e}")))
}

/// Canonical rendering: `"p"` for integers, `"p/q"` otherwise.
pub fn scalar_string(s: &Scalar) -> String {
    s.to_string()
}

/// Exact square root of a nonnegative rational, when it exists.
pub fn sqrt_exact(s: &Scalar) -> Option<Scalar> {
    if s.is_negative() {
        return None;
    }
    let num = s.numer().sqrt();
    let den = s.denom().sqrt();
    if &(&num * &num) == s.numer() && &(&den * &den) == s.denom() {
        Some(Scalar::new(num, den))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_normalization() {
        assert_eq!(ratio(2, 4), ratio(1, 2));
        assert_eq!(ratio(-2, -4), ratio(1, 2));
        assert_eq!(scalar_string(&ratio(-3, 6)), "-1/2");
        assert_eq!(scalar_string(&int(7)), "7");
        assert_eq!(parse_scalar("7").unwrap(), int(7));
        assert_eq!(parse_scalar("-3/6").unwrap(), ratio(-1, 2));
    }

    #[test]
    fn integer_powers() {
        assert_eq!(pow_i(&int(2), 10), int(1024));
        assert_eq!(pow_i(&int(2), -2), ratio(1, 4));
        assert_eq!(pow_i(&ratio(2, 3), 0), int(1));
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(sqrt_exact(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(sqrt_exact(&int(2)), None);
        assert_eq!(sqrt_exact(&int(-1)), None);
    }
}
