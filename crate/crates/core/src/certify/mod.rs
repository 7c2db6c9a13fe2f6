//! Independent checking of decompositions and their on-disk form.
//!
//! [`verify_exact`] re-expands every term and compares against the
//! multinomial expansion of `q_n^s`; it uses nothing from the ansatz solver.
//! [`verify_numeric`] does the same in arbitrary precision complex floating
//! point for families with irrational coefficients.

mod certificate;
mod exact;
mod numeric;

use std::fmt;

use thiserror::Error;

use crate::sympoly::MultiIndex;

pub use certificate::{deserialize, serialize, BoundsSnapshot, CertMeta, CertTerm, Certificate, CERTIFICATE_VERSION};
pub use exact::{verify_any, verify_exact};
pub use numeric::{
    numeric_terms_from, stroud_s2, verify_numeric, verify_numeric_with, Complex, NumericTerm, DEFAULT_PRECISION,
    MIN_PRECISION,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(String),
    #[error("precision must be at least {MIN_PRECISION} bits, got {0}")]
    InvalidPrecision(usize),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("certificate version {0} is not supported")]
    VersionUnsupported(u64),
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A coefficient where the expansion disagrees with `q_n^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub monomial: MultiIndex,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationOutcome {
    pub ok: bool,
    /// The grevlex-largest disagreeing monomial.
    pub first_mismatch: Option<Mismatch>,
    pub terms_expanded: usize,
}

impl VerificationOutcome {
    fn from_mismatch(first_mismatch: Option<Mismatch>, terms_expanded: usize) -> Self {
        Self { ok: first_mismatch.is_none(), first_mismatch, terms_expanded }
    }
}

impl fmt::Display for VerificationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_mismatch {
            None => write!(f, "ok ({} terms expanded)", self.terms_expanded),
            Some(m) => write!(
                f,
                "mismatch at {}: expected {}, got {} ({} terms expanded)",
                m.monomial, m.expected, m.got, self.terms_expanded
            ),
        }
    }
}
