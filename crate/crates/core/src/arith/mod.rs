//! Exact scalar arithmetic and small dense linear algebra.
//!
//! Three scalar types are used throughout the crate:
//!
//! - [`Rational`]: arbitrary precision rationals (weights, real form coefficients),
//! - [`GaussianRational`]: `Q(i)`, for decompositions that use roots of unity,
//! - [`NPoly`]: univariate polynomials in the formal number of variables `n`,
//!   used to carry closed-form weights.
//!
//! All of them implement [`Scalar`], which is what [`Matrix`] and the sparse
//! polynomial code are generic over.

mod gaussian;
mod matrix;
mod npoly;
mod rational;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use gaussian::GaussianRational;
pub use matrix::{solve_block_triangular, Matrix};
pub use npoly::NPoly;
pub use rational::{parse_rational, rational_from_i64, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    /// A diagonal block of a block-triangular system is singular. Carries the
    /// index of the block in the order the blocks were supplied.
    #[error("diagonal block {0} is singular")]
    SingularBlock(usize),
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// Which exact field a decomposition lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Gaussian,
}

impl FieldKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FieldKind::Rational => "rational",
            FieldKind::Gaussian => "gaussian",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "rational" => Some(FieldKind::Rational),
            "gaussian" => Some(FieldKind::Gaussian),
            _ => None,
        }
    }
}

/// An exact commutative ring element with a partial division.
///
/// `checked_div` is total on fields except for a zero divisor. For [`NPoly`]
/// it only succeeds when the divisor is a nonzero constant.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + 'static
{
    fn from_bigint(v: BigInt) -> Self;

    fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError>;

    fn from_i64(v: i64) -> Self {
        Self::from_bigint(BigInt::from(v))
    }

    fn from_rational(r: &Rational) -> Self {
        let num = Self::from_bigint(r.numer().clone());
        let den = Self::from_bigint(r.denom().clone());
        num.checked_div(&den).expect("rational denominators are nonzero")
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// A field in which linear forms of a decomposition may have coefficients.
pub trait FormField: Scalar + Eq + std::hash::Hash {
    const KIND: FieldKind;

    /// Rescales `coeffs` in place by the unique unit `mu` with `mu^degree = 1`
    /// (among the units representable in the field) that puts the first
    /// nonzero coefficient into canonical position. Two forms with equal
    /// `degree`-th powers that differ by such a unit normalize identically.
    fn normalize_form(coeffs: &mut [Self], degree: u32);

    /// Real and imaginary parts.
    fn parts(&self) -> (Rational, Rational);

    fn from_parts(re: Rational, im: Rational) -> Option<Self>;

    /// The value as a rational, when it is real.
    fn as_rational(&self) -> Option<Rational> {
        let (re, im) = self.parts();
        im.is_zero().then_some(re)
    }
}
