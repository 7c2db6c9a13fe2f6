use std::fmt::Display;

use rayon::prelude::*;

use super::{Mismatch, VerificationOutcome};
use crate::ansatz::{AnyDecomposition, Decomposition};
use crate::arith::FormField;
use crate::sympoly::{expand_q_power, LinearPowerExpander, SparsePoly};

const CHUNK: usize = 64;

/// Expands `sum_t w_t (c_t . x)^(2s)` and compares it coefficientwise with
/// `q_n^s`. Exact arithmetic makes the chunked reduction order irrelevant.
pub fn verify_exact<F: FormField + Display>(d: &Decomposition<F>) -> VerificationOutcome {
    let deg = 2 * d.s;
    let expander = LinearPowerExpander::<F>::new(deg);
    let got = d
        .terms
        .par_chunks(CHUNK)
        .map(|chunk| {
            let mut local = SparsePoly::homogeneous(d.n, deg);
            for t in chunk {
                assert_eq!(t.coeffs.len(), d.n, "form length");
                expander.accumulate(&mut local, &t.weight, &t.coeffs);
            }
            local
        })
        .reduce(
            || SparsePoly::homogeneous(d.n, deg),
            |mut a, b| {
                a.add_assign(&b);
                a
            },
        );
    let expected = expand_q_power(d.n, d.s).map(F::from_rational);
    let diff = got.sub(&expected);
    let mismatch = diff.terms().next_back().map(|(idx, _)| Mismatch {
        monomial: idx.clone(),
        expected: expected.get(idx).to_string(),
        got: got.get(idx).to_string(),
    });
    VerificationOutcome::from_mismatch(mismatch, d.size())
}

pub fn verify_any(d: &AnyDecomposition) -> VerificationOutcome {
    match d {
        AnyDecomposition::Rational(d) => verify_exact(d),
        AnyDecomposition::Gaussian(d) => verify_exact(d),
    }
}
