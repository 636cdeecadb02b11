//! Exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;

/// Coefficient field: arbitrary-precision rationals, always in lowest terms.
pub type Scalar = BigRational;

/// Builds an integer-valued scalar.
pub fn int(value: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(value))
}

/// Builds `numer / denom`. Panics if `denom == 0`.
pub fn ratio(numer: i64, denom: i64) -> Scalar {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Renders a scalar as `p` or `p/q`, the same syntax the expression parser reads.
pub fn format(value: &Scalar) -> String {
    value.to_string()
}
