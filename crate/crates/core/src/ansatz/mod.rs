//! The sign-symmetrized ansatz: one family of forms per chosen point, a
//! block-lower-triangular linear system for the family weights, and the
//! materialized decompositions it produces.
//!
//! Each column of the system is a family `f_{k,a}`: for a point `a` with `k`
//! nonzero coordinates, the sum over all supports `t_1 < ... < t_k`, all
//! distinct arrangements of `a`, and all sign patterns with first sign `+`,
//! of `(a_1 x_{t_1} +- ... +- a_k x_{t_k})^{2s}`. Each row is a monomial class
//! `M_{2m}` with `m` a partition of `s`; the right-hand side is the
//! coefficient `multinomial(s; m)` of that class in `q_n^s`.

mod builtin;
mod decomposition;
mod symbolic;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arith::{
    solve_block_triangular, ArithError, FormField, Matrix, NPoly, Rational, Scalar,
};
use crate::partitions::{count_k_partitions, enumerate_partitions, multinomial, Partition};
use crate::sympoly::h_value;

pub use builtin::{builtin, builtin_symbolic, gaussian_s4_symbolic, q8_squared, BUILTIN_NAMES};
pub use decomposition::{AnyDecomposition, Decomposition, Provenance, Term};
pub use symbolic::{generate_symbolic, SymbolicDecomposition, SymbolicFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnsatzError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("no nonsingular point set found for block k = {k} after {attempts} attempts")]
    RetryExhausted { k: u32, attempts: u32 },
    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),
    #[error("outside the formula's domain: {0}")]
    DomainError(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Points of the ansatz, grouped by arity.
#[derive(Clone, Debug, PartialEq)]
pub struct AnsatzSpec<F> {
    pub s: u32,
    /// `blocks[k - 1]` holds the points with `k` coordinates.
    pub blocks: Vec<Vec<Vec<F>>>,
}

impl<F: FormField> AnsatzSpec<F> {
    pub fn block(&self, k: u32) -> &[Vec<F>] {
        &self.blocks[k as usize - 1]
    }

    pub fn point_count(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Points in column order: arity `s` down to 1.
    pub fn columns(&self) -> impl Iterator<Item = (u32, &Vec<F>)> {
        (1..=self.s)
            .rev()
            .flat_map(move |k| self.block(k).iter().map(move |p| (k, p)))
    }
}

#[derive(Clone, Debug)]
pub struct GenerateOptions {
    /// 0 selects the deterministic points `(j, 1, ..., 1)`; any other value
    /// seeds random integer points.
    pub seed: u64,
    /// Use the all-ones point for arities `s` and `s - 1`.
    pub merged: bool,
    pub max_attempts: u32,
}

impl Default for GenerateOptions {
    fn default() -> Self {
        Self { seed: 0, merged: true, max_attempts: 64 }
    }
}

impl GenerateOptions {
    pub fn with_seed(seed: u64) -> Self {
        Self { seed, ..Self::default() }
    }
}

/// Rows of the condition system.
#[derive(Clone, Debug)]
pub struct ConditionSystem<M> {
    pub matrix: Matrix<M>,
    pub rhs: Vec<M>,
    /// `(k, m)` for each row, `k` the number of parts of `m`.
    pub row_index: Vec<(u32, Partition)>,
    /// `(arity, index within its block)` for each column.
    pub col_index: Vec<(u32, usize)>,
    /// Row counts per block, blocks ordered `k = kmax` down to 1.
    pub block_sizes: Vec<usize>,
    /// Column counts per block, same order.
    pub col_block_sizes: Vec<usize>,
}

impl<M: Scalar> ConditionSystem<M> {
    pub fn is_square_blocked(&self) -> bool {
        self.block_sizes == self.col_block_sizes
    }

    pub fn solve(&self) -> Result<Vec<M>, AnsatzError> {
        if !self.is_square_blocked() {
            return Err(AnsatzError::InvalidArgument(format!(
                "row blocks {:?} do not match column blocks {:?}",
                self.block_sizes, self.col_block_sizes
            )));
        }
        Ok(solve_block_triangular(&self.matrix, &self.rhs, &self.block_sizes)?)
    }
}

impl<F: FormField> ConditionSystem<F> {
    /// `(rank of the matrix, rank of the augmented matrix)`. The system is
    /// consistent iff they agree.
    pub fn ranks(&self) -> (usize, usize) {
        let aug = self.matrix.augment(&self.rhs).expect("rhs has one entry per row");
        (self.matrix.rank(), aug.rank())
    }
}

/// Coefficient of the class `M_{2m}` in `f_{lambda,a}`, given the value of
/// `C(n - k, lambda - k)`; `k` is the number of parts of `m`.
fn entry<M: Scalar>(s: u32, m: &Partition, lambda: u32, binom: M, h: M) -> M {
    let two_pow = M::from_bigint(BigInt::from(1u64) << (lambda - 1));
    let multi = M::from_bigint(multinomial(2 * s, &m.doubled()).expect("sums to 2s").into());
    two_pow * binom * multi * h
}

fn assemble<F: FormField, M: Scalar>(
    spec: &AnsatzSpec<F>,
    kmax: u32,
    binom: impl Fn(u32, u32) -> M,
    conv: impl Fn(F) -> Result<M, AnsatzError>,
) -> Result<ConditionSystem<M>, AnsatzError> {
    let s = spec.s;
    let mut row_index = Vec::new();
    let mut block_sizes = Vec::new();
    for k in (1..=kmax).rev() {
        let parts = enumerate_partitions(s, k).map_err(|e| AnsatzError::InvalidArgument(e.to_string()))?;
        block_sizes.push(parts.len());
        row_index.extend(parts.into_iter().map(|m| (k, m)));
    }
    let mut col_index = Vec::new();
    let mut cols = Vec::new();
    let mut col_block_sizes = Vec::new();
    for lambda in (1..=kmax).rev() {
        let block = spec.block(lambda);
        col_block_sizes.push(block.len());
        for (j, p) in block.iter().enumerate() {
            col_index.push((lambda, j));
            cols.push(p);
        }
    }
    let mut matrix = Matrix::zeros(row_index.len(), cols.len());
    let mut rhs = Vec::with_capacity(row_index.len());
    for (r, (k, m)) in row_index.iter().enumerate() {
        for (c, ((lambda, _), point)) in col_index.iter().zip(&cols).enumerate() {
            if lambda < k {
                continue;
            }
            let h = conv(h_value(point, m))?;
            matrix.set(r, c, entry(s, m, *lambda, binom(*k, *lambda), h));
        }
        rhs.push(M::from_bigint(multinomial(s, m.parts()).expect("sums to s").into()));
    }
    Ok(ConditionSystem { matrix, rhs, row_index, col_index, block_sizes, col_block_sizes })
}

/// The condition system at a concrete `n`. Rows and columns with more than
/// `n` variables are omitted: those classes and families do not exist.
pub fn assemble_system<F: FormField>(spec: &AnsatzSpec<F>, n: usize) -> Result<ConditionSystem<F>, AnsatzError> {
    if n == 0 {
        return Err(AnsatzError::InvalidArgument("n must be positive".into()));
    }
    let kmax = spec.s.min(n as u32);
    let n = n as u64;
    assemble(
        spec,
        kmax,
        |k, lambda| F::from_bigint(crate::partitions::binomial(n - u64::from(k), u64::from(lambda - k)).into()),
        Ok,
    )
}

/// The condition system with `n` kept symbolic. Requires every h-value to
/// be rational.
pub fn assemble_symbolic<F: FormField>(spec: &AnsatzSpec<F>) -> Result<ConditionSystem<NPoly>, AnsatzError> {
    assemble(
        spec,
        spec.s,
        |k, lambda| NPoly::binomial(-i64::from(k), lambda - k),
        |h: F| {
            h.as_rational().map(NPoly::constant).ok_or_else(|| {
                AnsatzError::Arith(ArithError::ContractViolation(format!(
                    "h-value {h:?} is not rational"
                )))
            })
        },
    )
}

/// Whether the diagonal block of arity `k` built from `points` is
/// nonsingular: the matrix `[h(a_j, m_i)]` over `m` in `P_k(s)`.
pub fn block_is_nonsingular<F: FormField>(s: u32, k: u32, points: &[Vec<F>]) -> bool {
    let parts = enumerate_partitions(s, k).expect("k in range");
    if parts.len() != points.len() {
        return false;
    }
    let rows = parts
        .iter()
        .map(|m| points.iter().map(|a| h_value(a, m)).collect())
        .collect();
    Matrix::from_rows(rows).expect("rectangular").rank() == parts.len()
}

fn deterministic_block(k: u32, count: usize) -> Vec<Vec<Rational>> {
    (1..=count as i64)
        .map(|j| {
            let mut p = vec![Rational::from_integer(1.into()); k as usize];
            p[0] = Rational::from_integer(j.into());
            p
        })
        .collect()
}

fn random_block(rng: &mut ChaCha8Rng, k: u32, count: usize, bound: u32) -> Option<Vec<Vec<Rational>>> {
    let mut seen: Vec<Vec<u32>> = Vec::new();
    let mut draws = 0;
    while seen.len() < count {
        draws += 1;
        if draws > 64 * count {
            return None;
        }
        let mut p: Vec<u32> = (0..k).map(|_| rng.gen_range(1..=bound)).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        if !seen.contains(&p) {
            seen.push(p);
        }
    }
    Some(
        seen.into_iter()
            .map(|p| p.into_iter().map(|c| Rational::from_integer(c.into())).collect())
            .collect(),
    )
}

pub fn select_points(s: u32, seed: u64) -> Result<AnsatzSpec<Rational>, AnsatzError> {
    select_points_with(s, &GenerateOptions::with_seed(seed))
}

/// Chooses `p_k(s)` points per arity so that every diagonal block is
/// nonsingular. With seed 0 the points `(j, 1, ..., 1)` are tried first;
/// failing blocks, and every block under a nonzero seed, are drawn at random
/// from `[1, B]^k` with `B` doubling after each failed attempt.
pub fn select_points_with(s: u32, opts: &GenerateOptions) -> Result<AnsatzSpec<Rational>, AnsatzError> {
    if s == 0 {
        return Err(AnsatzError::InvalidArgument("s must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut blocks = vec![Vec::new(); s as usize];
    for k in (1..=s).rev() {
        let count = count_k_partitions(s, k).try_into().expect("block size fits usize");
        let fixed = opts.seed == 0 || k == 1 || (opts.merged && k + 1 >= s);
        if fixed {
            let pts = deterministic_block(k, count);
            if block_is_nonsingular(s, k, &pts) {
                blocks[k as usize - 1] = pts;
                continue;
            }
        }
        let mut bound = 4u32.max(count as u32 + 1);
        let mut found = None;
        for _ in 0..opts.max_attempts {
            if let Some(pts) = random_block(&mut rng, k, count, bound) {
                if block_is_nonsingular(s, k, &pts) {
                    found = Some(pts);
                    break;
                }
            }
            bound = bound.saturating_mul(2);
        }
        blocks[k as usize - 1] = found.ok_or(AnsatzError::RetryExhausted { k, attempts: opts.max_attempts })?;
    }
    Ok(AnsatzSpec { s, blocks })
}

/// One all-ones point per arity: a single family per block, which is too
/// few unknowns once some `p_k(s)` exceeds 1.
pub fn naive_spec(s: u32) -> AnsatzSpec<Rational> {
    AnsatzSpec {
        s,
        blocks: (1..=s).map(|k| deterministic_block(k, 1)).collect(),
    }
}

pub fn generate(n: usize, s: u32, seed: u64) -> Result<Decomposition<Rational>, AnsatzError> {
    generate_with(n, s, &GenerateOptions::with_seed(seed))
}

pub fn generate_with(n: usize, s: u32, opts: &GenerateOptions) -> Result<Decomposition<Rational>, AnsatzError> {
    if n == 0 {
        return Err(AnsatzError::InvalidArgument("n must be positive".into()));
    }
    let spec = select_points_with(s, opts)?;
    let system = assemble_system(&spec, n)?;
    let weights = system.solve()?;
    let families = system
        .col_index
        .iter()
        .zip(weights)
        .map(|(&(k, j), w)| (w, spec.block(k)[j].clone()))
        .collect::<Vec<_>>();
    Ok(Decomposition::from_families(n, s, &families, Provenance::Generated { seed: opts.seed }))
}
