use std::fmt;

use num_traits::{One, Zero};

use super::{assemble_symbolic, AnsatzError, AnsatzSpec, Decomposition, Provenance};
use crate::arith::{ArithError, FormField, NPoly, Rational};

/// One family of a closed formula: its point and its weight as a polynomial
/// in `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicFamily<F> {
    pub k: u32,
    pub point: Vec<F>,
    pub weight: NPoly,
}

/// A decomposition of `q_n^s` valid for every `n >= valid_from`, with weights
/// polynomial in `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicDecomposition<F> {
    pub s: u32,
    pub families: Vec<SymbolicFamily<F>>,
    /// Constant `c` with `c * q_n^s = sum (c * weight) * family`; chosen so
    /// the first family has scaled weight 1.
    pub scale: Rational,
    pub valid_from: usize,
}

impl<F: FormField> SymbolicDecomposition<F> {
    pub fn weights(&self) -> Vec<NPoly> {
        self.families.iter().map(|f| f.weight.clone()).collect()
    }

    /// Weights multiplied by [`Self::scale`].
    pub fn scaled_weights(&self) -> Vec<NPoly> {
        self.families.iter().map(|f| f.weight.scale(&self.scale)).collect()
    }

    /// Substitutes `n` and materializes every family.
    pub fn at(&self, n: usize, provenance: Provenance) -> Result<Decomposition<F>, AnsatzError> {
        if n < self.valid_from {
            return Err(AnsatzError::DomainError(format!(
                "formula holds for n >= {}, got {n}",
                self.valid_from
            )));
        }
        let families: Vec<(F, Vec<F>)> = self
            .families
            .iter()
            .map(|f| (F::from_rational(&f.weight.eval_int(n as i64)), f.point.clone()))
            .collect();
        Ok(Decomposition::from_families(n, self.s, &families, provenance))
    }
}

impl<F: FormField + fmt::Display> fmt::Display for SymbolicDecomposition<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = 2 * self.s;
        writeln!(f, "{} q_n^{} =", self.scale, self.s)?;
        for (fam, w) in self.families.iter().zip(self.scaled_weights()) {
            let point = fam.point.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
            writeln!(f, "  + ({w}) * F[({point})]^{d}")?;
        }
        write!(f, "valid for n >= {}", self.valid_from)
    }
}

/// Solves the condition system with `n` symbolic. Weights come out as
/// polynomials in `n` because every diagonal block is independent of `n`.
pub fn generate_symbolic<F: FormField>(s: u32, spec: &AnsatzSpec<F>) -> Result<SymbolicDecomposition<F>, AnsatzError> {
    if spec.s != s {
        return Err(AnsatzError::InvalidArgument(format!("spec is for s = {}, not {s}", spec.s)));
    }
    let system = assemble_symbolic(spec)?;
    let weights = system.solve()?;
    let families: Vec<SymbolicFamily<F>> = system
        .col_index
        .iter()
        .zip(weights)
        .map(|(&(k, j), weight)| SymbolicFamily { k, point: spec.block(k)[j].clone(), weight })
        .collect();
    let lead = families.first().map(|f| f.weight.clone()).unwrap_or_else(NPoly::one);
    if !lead.is_constant() || lead.is_zero() {
        return Err(AnsatzError::Arith(ArithError::ContractViolation(format!(
            "leading weight {lead} is not a nonzero constant"
        ))));
    }
    let scale = Rational::one() / lead.constant_term();
    Ok(SymbolicDecomposition { s, families, scale, valid_from: 1 })
}
