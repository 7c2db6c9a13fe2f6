//! Exact Waring decompositions of `q_n^s = (x_1^2 + ... + x_n^2)^s`.
//!
//! A decomposition writes `q_n^s` as a weighted sum of `2s`-th powers of
//! linear forms. This crate builds such decompositions from signed orbit
//! families of a few points, solves for the weights exactly (numerically at
//! a given `n`, or symbolically as polynomials in `n`), checks the result by
//! full expansion, and computes the rank bounds the sizes are compared
//! against.
//!
//! ```
//! use quadwaring::{generate, verify_exact};
//!
//! let d = generate(5, 3, 0).unwrap();
//! assert_eq!(d.size(), 45);
//! assert!(verify_exact(&d).ok);
//! ```

pub mod arith;
pub mod partitions;
pub mod sympoly;
pub mod ansatz;
pub mod bounds;
pub mod certify;
pub mod reproduce;

pub use ansatz::{
    builtin, generate, generate_symbolic, generate_with, select_points, AnsatzError, AnsatzSpec, AnyDecomposition,
    Decomposition, GenerateOptions, Provenance, SymbolicDecomposition, Term, BUILTIN_NAMES,
};
pub use arith::{ArithError, FieldKind, FormField, GaussianRational, Matrix, NPoly, Rational, Scalar};
pub use bounds::{BoundsError, BoundsReport, SizeFormula};
pub use certify::{verify_any, verify_exact, verify_numeric, Certificate, CertifyError, VerificationOutcome};
pub use partitions::{Partition, PartitionError};
pub use sympoly::{MultiIndex, SparsePoly};
