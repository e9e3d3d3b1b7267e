//! Exact arithmetic: arbitrary-precision rationals and cyclotomic fields.

mod cyclotomic;
mod matrix;
mod poly;

pub use cyclotomic::{CycField, Cyclotomic, FieldExt};
pub use matrix::{rank_of_rows, row_echelon, CycMatrix};
pub use poly::{cyclotomic_polynomial, totient, CycPolynomial};

use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

/// Largest accepted conductor.
pub const MAX_CONDUCTOR: u32 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum NumError {
    #[error("invalid conductor {0} (must be in 1..=10000)")]
    InvalidConductor(u32),
    #[error("exponent {exponent} out of range for conductor {conductor}")]
    ExponentOutOfRange { exponent: u64, conductor: u32 },
    #[error("conductor {from} does not divide {to}")]
    ConductorMismatch { from: u32, to: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
}

/// Shorthand for the rational `num/den`; panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `num/den` from arbitrary-precision parts, rejecting a zero denominator.
pub fn try_rational(num: BigInt, den: BigInt) -> Result<Rational, NumError> {
    if den == BigInt::from(0) {
        return Err(NumError::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}
