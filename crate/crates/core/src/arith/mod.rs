//! Exact scalars and dense linear algebra over cyclotomic fields.

mod cyclotomic;
mod matrix;
pub mod smith;
mod upoly;

pub use cyclotomic::{cyc_arith, cyclotomic_polynomial, totient, CycNum, CycOp, Field};
pub use matrix::{mat_order, CycMatrix};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary precision rational number, always stored in lowest terms.
pub type Rational = BigRational;

/// Builds the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("cyclotomic level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix order exceeds cap {0}")]
    OrderCap(u64),
    #[error("level {0} does not contain roots of unity of order {1}")]
    MissingRoot(u32, u32),
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return a.max(b);
    }
    num_integer::lcm(a, b)
}
