//! Rank bounds for `q_n^s`: the catalecticant lower bound, the two upper
//! bounds from the ansatz, the generic rank, and the subgenericity threshold
//! computations built on them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::arith::{Matrix, Rational};
use crate::partitions::{binomial, count_k_partitions, factorial, multinomial};
use crate::sympoly::{compositions, MultiIndex};

pub const DEFAULT_CATALECTICANT_CAP: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("catalecticant dimension {dim} exceeds the cap {cap}")]
    SizeCapExceeded { dim: BigUint, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

fn c(n: u64, k: u64) -> BigUint {
    binomial(n, k)
}

/// `C(s + n - 1, s)`, the rank of the middle catalecticant of `q_n^s`.
pub fn lower_bound(n: u64, s: u32) -> BigUint {
    c(u64::from(s) + n - 1, u64::from(s))
}

/// `2^(s-1) C(n,s) + 2^(s-2) C(n,s-1) + sum_{k<=s-2} 2^(k-1) k! p_k(s) C(n,k)`.
pub fn upper_bound_thm11(n: u64, s: u32) -> BigUint {
    SizeFormula::thm11(s).eval_int(n)
}

/// `sum_{k=1}^s 2^k k! p_k(s) C(n,k)`.
pub fn upper_bound_thm42(n: u64, s: u32) -> BigUint {
    SizeFormula::thm42(s).eval_int(n)
}

/// `(1/n) C(2s + n - 1, 2s)` exactly, and its ceiling.
pub fn generic_rank(n: u64, s: u32) -> (Rational, BigInt) {
    let q = Rational::new(c(2 * u64::from(s) + n - 1, 2 * u64::from(s)).into(), BigInt::from(n));
    let ceil = q.ceil().to_integer();
    (q, ceil)
}

/// Rank of the catalecticant of `q_n^s` from degree-`s` derivatives to
/// degree-`s` forms, with the default dimension cap.
pub fn catalecticant_rank(n: usize, s: u32) -> Result<usize, BoundsError> {
    catalecticant_rank_with_cap(n, s, DEFAULT_CATALECTICANT_CAP)
}

/// Rows and columns are degree-`s` exponent vectors; entry `(a, b)` is the
/// coefficient of `x^b` in `d^a q_n^s`, i.e. `coeff(a + b) (a + b)! / b!`.
/// Only pairs with `a = b (mod 2)` can be nonzero, so the matrix splits into
/// blocks by parity class and the rank is the sum of block ranks.
pub fn catalecticant_rank_with_cap(n: usize, s: u32, cap: usize) -> Result<usize, BoundsError> {
    if n == 0 || s == 0 {
        return Err(BoundsError::InvalidArgument("n and s must be positive".into()));
    }
    let dim = lower_bound(n as u64, s);
    if dim > BigUint::from(cap) {
        return Err(BoundsError::SizeCapExceeded { dim, cap });
    }
    let mut classes: BTreeMap<Vec<u32>, Vec<Vec<u32>>> = BTreeMap::new();
    let mut cur = vec![0u32; n];
    compositions(s, 0, &mut cur, &mut |e| {
        classes.entry(e.iter().map(|x| x % 2).collect()).or_default().push(e.to_vec());
    });
    let fact = |v: &[u32]| v.iter().fold(BigUint::one(), |acc, &x| acc * factorial(x));
    let ranks: Vec<usize> = classes
        .into_par_iter()
        .map(|(_, idx)| {
            let rows: Vec<Vec<BigUint>> = idx
                .iter()
                .map(|a| {
                    idx.iter()
                        .map(|b| {
                            let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                            let half: Vec<u32> = sum.iter().map(|x| x / 2).collect();
                            let coeff = multinomial(s, &half).expect("even sum has total s");
                            coeff * fact(&sum) / fact(b)
                        })
                        .collect()
                })
                .collect();
            integer_rank(&rows)
        })
        .collect();
    Ok(ranks.into_iter().sum())
}

const RANK_PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(RANK_PRIME)) as u64
}

fn inv_mod(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, RANK_PRIME - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        e >>= 1;
    }
    acc
}

/// Rank over `F_p` by Gaussian elimination.
fn rank_mod_prime(rows: &[Vec<BigUint>]) -> usize {
    let p = BigUint::from(RANK_PRIME);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| (x % &p).to_u64().expect("reduced below p")).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][c]);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[c] == 0 {
                continue;
            }
            let f = mul_mod(row[c], inv);
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = (*x + RANK_PRIME - mul_mod(f, y)) % RANK_PRIME;
            }
        }
        rank += 1;
    }
    rank
}

/// Exact rank of an integer matrix. Reduction mod `p` can only lower the
/// rank, so a full rank mod `p` is the rank over `Q`; otherwise the matrix is
/// eliminated over the rationals.
fn integer_rank(rows: &[Vec<BigUint>]) -> usize {
    let full = rows.len().min(rows.first().map_or(0, Vec::len));
    if rank_mod_prime(rows) == full {
        return full;
    }
    let q = rows
        .iter()
        .map(|r| r.iter().map(|x| Rational::from_integer(x.clone().into())).collect())
        .collect();
    Matrix::from_rows(q).expect("rectangular").rank()
}

/// A size polynomial `sum_k coeffs[k] C(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeFormula {
    pub name: String,
    pub coeffs: Vec<BigUint>,
}

impl SizeFormula {
    pub fn new(name: impl Into<String>, coeffs: Vec<BigUint>) -> Self {
        Self { name: name.into(), coeffs }
    }

    fn from_u64(name: &str, coeffs: &[u64]) -> Self {
        Self::new(name, coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn thm11(s: u32) -> Self {
        let mut coeffs = vec![BigUint::zero(); s as usize + 1];
        for k in 1..=s {
            coeffs[k as usize] = if k == s {
                BigUint::one() << (s - 1)
            } else if k + 1 == s {
                BigUint::one() << (s - 2)
            } else {
                (BigUint::one() << (k - 1)) * factorial(k) * count_k_partitions(s, k)
            };
        }
        Self::new(format!("thm11(s={s})"), coeffs)
    }

    pub fn thm42(s: u32) -> Self {
        let mut coeffs = vec![BigUint::zero(); s as usize + 1];
        for k in 1..=s {
            coeffs[k as usize] = (BigUint::one() << k) * factorial(k) * count_k_partitions(s, k);
        }
        Self::new(format!("thm42(s={s})"), coeffs)
    }

    /// `n^2 = 2 C(n,2) + C(n,1)`, the size of the `s = 2` family.
    pub fn pairs_s2() -> Self {
        Self::from_u64("s2", &[0, 1, 2])
    }

    /// `1 + n + C(n,2)`, the size of the quadrature family for `q_n^2`.
    pub fn stroud_s2() -> Self {
        Self::from_u64("stroud-s2", &[1, 1, 1])
    }

    /// Sizes of the named closed formulas in the generic range.
    pub fn closed_form(name: &str) -> Option<Self> {
        let c: &[u64] = match name {
            "s2" | "s2-real" => &[0, 1, 2],
            "s3" => &[0, 1, 2, 4],
            "s4-real" => &[0, 1, 6, 4, 8],
            "s4-gaussian" => &[0, 1, 4, 4, 8],
            "s5" => &[0, 1, 6, 16, 8, 16],
            _ => return None,
        };
        Some(Self::from_u64(name, c))
    }

    pub fn max_k(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval_int(&self, n: u64) -> BigUint {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a * c(n, k as u64))
            .sum()
    }
}

impl fmt::Display for SizeFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(k, a)| format!("{a}*C(n,{k})"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Whether `size(n) < (1/n) C(2s + n - 1, 2s)`.
pub fn below_generic(formula: &SizeFormula, n: u64, s: u32) -> bool {
    let (g, _) = generic_rank(n, s);
    Rational::from_integer(formula.eval_int(n).into()) < g
}

/// `n (s - 1) > 2s^2 - 2s + 1`. Under this condition
/// `C(n+1,k)/C(n,k) <= (n+1)/(n+1-s) < (2s+n)/(n+1)` for all `k <= s`, and
/// the right-hand side is the growth factor of `(1/n) C(2s+n-1, 2s)`, so a
/// strict inequality for a nonnegative combination of `C(n,k)` with `k <= s`
/// carries over from `n` to `n + 1`.
pub fn monotone_step_holds(n: u64, s: u32) -> bool {
    let s = u64::from(s);
    n * (s - 1) > 2 * s * s - 2 * s + 1
}

/// Smallest `n` satisfying [`monotone_step_holds`].
pub fn monotone_from(s: u32) -> u64 {
    let s = u64::from(s);
    (2 * s * s - 2 * s + 1) / (s - 1) + 1
}

/// The largest `n` at which `formula(n) < (1/n) C(2s+n-1, 2s)` fails, so the
/// inequality holds for every larger `n`. Scans upward until the inequality
/// holds at some `n` where the monotone step applies.
pub fn subgeneric_threshold(s: u32, formula: &SizeFormula) -> Result<u64, BoundsError> {
    if s < 2 {
        return Err(BoundsError::InvalidArgument("s must be at least 2".into()));
    }
    if formula.max_k() > s as usize {
        return Err(BoundsError::InvalidArgument(format!(
            "{} has binomials C(n,k) with k > s",
            formula.name
        )));
    }
    let start = monotone_from(s);
    let mut last_fail = 0;
    let mut n = 1;
    loop {
        if !below_generic(formula, n, s) {
            last_fail = n;
        } else if n >= start {
            return Ok(last_fail);
        }
        n += 1;
    }
}

/// Outcome of the desk check behind the threshold `n > (2s - 1)^2`.
#[derive(Clone, Debug)]
pub struct Thm14Report {
    pub s: u32,
    pub n: u64,
    /// The size formula that certifies the inequality at `n`.
    pub formula: SizeFormula,
    pub size: BigUint,
    pub generic: Rational,
    pub strict_ok: bool,
    pub monotone_ok: bool,
    /// Whether the cruder `sum_k 2^k k! p_k(s) C(n,k)` alone suffices at `n`.
    pub thm42_ok: bool,
}

impl Thm14Report {
    pub fn passed(&self) -> bool {
        self.strict_ok && self.monotone_ok
    }
}

/// Checks, in exact arithmetic at `n = (2s-1)^2 + 1`, that a proven upper
/// bound is strictly below `(1/n) C(2s+n-1, 2s)` and that the monotone step
/// applies there. The bound used is the quadrature family `1 + n + C(n,2)`
/// for `s = 2` and the merged-point bound for `s >= 3`.
pub fn check_thm14(s: u32) -> Result<Thm14Report, BoundsError> {
    if s < 2 {
        return Err(BoundsError::InvalidArgument("s must be at least 2".into()));
    }
    let n = u64::from(2 * s - 1).pow(2) + 1;
    let formula = if s == 2 { SizeFormula::stroud_s2() } else { SizeFormula::thm11(s) };
    let (generic, _) = generic_rank(n, s);
    let size = formula.eval_int(n);
    Ok(Thm14Report {
        s,
        n,
        strict_ok: Rational::from_integer(size.clone().into()) < generic,
        monotone_ok: monotone_step_holds(n, s),
        thm42_ok: below_generic(&SizeFormula::thm42(s), n, s),
        formula,
        size,
        generic,
    })
}

/// Natural logarithm of a big integer, accurate to `f64` precision.
pub fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64 bits");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

#[derive(Clone, Debug, PartialEq)]
pub struct LogLimitRow {
    pub n: u64,
    pub log_lower: f64,
    pub log_upper: f64,
}

/// `(n, log_n(lower_bound), log_n(upper_bound_thm11))` for each `n`.
pub fn log_limit_table(s: u32, n_list: &[u64]) -> Vec<LogLimitRow> {
    n_list
        .par_iter()
        .map(|&n| {
            let ln_n = (n as f64).ln();
            let (lo, hi) = (lower_bound(n, s), upper_bound_thm11(n, s));
            let (log_lower, log_upper) = if n < 2 {
                (f64::NAN, f64::NAN)
            } else {
                (ln_big(&lo) / ln_n, ln_big(&hi) / ln_n)
            };
            LogLimitRow { n, log_lower, log_upper }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundsReport {
    pub n: u64,
    pub s: u32,
    pub lower_catalecticant: BigUint,
    pub upper_thm11: BigUint,
    pub upper_thm42: BigUint,
    pub generic_rank_exact: Rational,
    pub generic_rank_ceil: BigInt,
    pub achieved_size: Option<u64>,
    pub subgeneric: bool,
}

impl BoundsReport {
    pub fn new(n: u64, s: u32, achieved_size: Option<u64>) -> Self {
        let lower = lower_bound(n, s);
        let u11 = upper_bound_thm11(n, s);
        let u42 = upper_bound_thm42(n, s);
        if n >= u64::from(s) {
            assert!(lower <= u11 && u11 <= u42, "bound ordering failed at n={n}, s={s}");
        }
        let (g, gc) = generic_rank(n, s);
        let best = match achieved_size {
            Some(a) => BigUint::from(a).min(u11.clone()),
            None => u11.clone(),
        };
        let subgeneric = Rational::from_integer(best.into()) < g;
        Self {
            n,
            s,
            lower_catalecticant: lower,
            upper_thm11: u11,
            upper_thm42: u42,
            generic_rank_exact: g,
            generic_rank_ceil: gc,
            achieved_size,
            subgeneric,
        }
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}, s = {}", self.n, self.s)?;
        writeln!(f, "lower (catalecticant)  {}", self.lower_catalecticant)?;
        writeln!(f, "upper (merged points)  {}", self.upper_thm11)?;
        writeln!(f, "upper (all points)     {}", self.upper_thm42)?;
        let g = &self.generic_rank_exact;
        let (num, den) = (g.numer(), g.denom());
        let (q, r) = num.div_rem(den);
        writeln!(f, "generic rank           {g} (= {q} + {r}/{den}, ceil {})", self.generic_rank_ceil)?;
        if let Some(a) = self.achieved_size {
            writeln!(f, "achieved size          {a}")?;
        }
        write!(f, "subgeneric             {}", self.subgeneric)
    }
}

/// Reports for every `(n, s)` in the given ranges, ordered by `s` then `n`.
pub fn bounds_table(ns: std::ops::RangeInclusive<u64>, ss: std::ops::RangeInclusive<u32>) -> Vec<BoundsReport> {
    let pairs: Vec<(u64, u32)> = ss.flat_map(|s| ns.clone().map(move |n| (n, s))).collect();
    pairs.into_par_iter().map(|(n, s)| BoundsReport::new(n, s, None)).collect()
}

/// Exponent vectors of degree `s` in `n` variables, used by callers that
/// want to inspect catalecticant rows.
pub fn degree_s_monomials(n: usize, s: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    compositions(s, 0, &mut cur, &mut |e| out.push(MultiIndex(e.to_vec())));
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational_from_i64;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn lower_bounds() {
        for s in 1..8u32 {
            assert_eq!(lower_bound(3, s), c(u64::from(s) + 2, 2));
            assert_eq!(lower_bound(1, s), big(1));
        }
        assert_eq!(lower_bound(4, 2), big(10));
    }

    #[test]
    fn small_catalecticants() {
        assert_eq!(catalecticant_rank(2, 2).unwrap(), 3);
        assert_eq!(catalecticant_rank(3, 1).unwrap(), 3);
        assert_eq!(catalecticant_rank(3, 3).unwrap(), 10);
        assert!(matches!(
            catalecticant_rank_with_cap(10, 5, 100),
            Err(BoundsError::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn catalecticant_q3_is_twice_identity() {
        // d/dx_i (x1^2 + x2^2 + x3^2) = 2 x_i
        let idx = degree_s_monomials(3, 1);
        assert_eq!(idx.len(), 3);
        let m: Matrix<Rational> = Matrix::from_rows(vec![
            vec![rational_from_i64(2, 1), rational_from_i64(0, 1), rational_from_i64(0, 1)],
            vec![rational_from_i64(0, 1), rational_from_i64(2, 1), rational_from_i64(0, 1)],
            vec![rational_from_i64(0, 1), rational_from_i64(0, 1), rational_from_i64(2, 1)],
        ])
        .unwrap();
        assert_eq!(m.rank(), catalecticant_rank(3, 1).unwrap());
    }

    #[test]
    fn rank_falls_back_on_deficient_mod_p() {
        let b = |v: u64| BigUint::from(v);
        // singular mod p but invertible over Q
        assert_eq!(integer_rank(&[vec![b(RANK_PRIME), b(0)], vec![b(0), b(1)]]), 2);
        assert_eq!(integer_rank(&[vec![b(2), b(4)], vec![b(3), b(6)]]), 1);
        assert_eq!(integer_rank(&[vec![b(1), b(2), b(3)]]), 1);
    }

    #[test]
    fn upper_bound_values() {
        for n in 3..30u64 {
            // (2/3)n^3 - n^2 + (4/3)n
            let expect = (2 * n * n * n - 3 * n * n + 4 * n) / 3;
            assert_eq!(upper_bound_thm11(n, 3), big(expect));
            assert_eq!(upper_bound_thm11(n, 1), big(n));
        }
        // independent summation at s = 5, n = 10 with p_k(5) = 1, 2, 2, 1, 1
        let pk = [1u64, 2, 2, 1, 1];
        let fact = [1u64, 2, 6, 24, 120];
        let mut sum = big(0);
        for k in 1..=5u64 {
            sum += big((1 << k) * fact[k as usize - 1] * pk[k as usize - 1]) * c(10, k);
        }
        assert_eq!(upper_bound_thm42(10, 5), sum);
    }

    #[test]
    fn thm11_below_thm42() {
        for s in 1..=10u32 {
            for n in u64::from(s)..=100 {
                assert!(upper_bound_thm11(n, s) <= upper_bound_thm42(n, s));
            }
        }
    }

    #[test]
    fn generic_rank_values() {
        let (g, ceil) = generic_rank(12, 3);
        assert_eq!(g, rational_from_i64(12376, 12));
        assert_eq!(ceil, BigInt::from(1032));
        assert!(Rational::from_integer(upper_bound_thm11(12, 3).into()) < g);
        assert_eq!(upper_bound_thm11(12, 3), big(1024));
        assert_eq!(generic_rank(1, 4).0, Rational::one());
        assert!(below_generic(&SizeFormula::pairs_s2(), 18, 2));
    }

    #[test]
    fn thresholds() {
        assert_eq!(subgeneric_threshold(3, &SizeFormula::closed_form("s3").unwrap()).unwrap(), 11);
        assert_eq!(subgeneric_threshold(4, &SizeFormula::closed_form("s4-real").unwrap()).unwrap(), 10);
        assert_eq!(subgeneric_threshold(5, &SizeFormula::closed_form("s5").unwrap()).unwrap(), 8);
        assert_eq!(subgeneric_threshold(2, &SizeFormula::pairs_s2()).unwrap(), 17);
    }

    #[test]
    fn thresholds_within_quadratic_range() {
        for s in 3..=5u32 {
            let t = subgeneric_threshold(s, &SizeFormula::thm11(s)).unwrap();
            assert!(t <= u64::from(2 * s - 1).pow(2), "s={s} t={t}");
        }
        // at s = 2 the merged-point bound is n^2 with threshold 17; the
        // quadrature family is what stays inside (2s-1)^2 = 9
        assert_eq!(subgeneric_threshold(2, &SizeFormula::thm11(2)).unwrap(), 17);
        assert!(subgeneric_threshold(2, &SizeFormula::stroud_s2()).unwrap() <= 9);
    }

    #[test]
    fn monotone_start() {
        for s in 2..30u32 {
            let m = monotone_from(s);
            assert!(monotone_step_holds(m, s));
            assert!(!monotone_step_holds(m - 1, s));
        }
    }

    #[test]
    fn thm14_examples() {
        let r2 = check_thm14(2).unwrap();
        assert_eq!(r2.n, 10);
        assert!(r2.passed());
        assert_eq!(check_thm14(6).unwrap().n, 122);
        assert!(check_thm14(6).unwrap().thm42_ok);
        assert!(check_thm14(3).unwrap().passed());
        assert_eq!(check_thm14(3).unwrap().n, 26);
    }

    #[test]
    fn log_limit_single_power() {
        for row in log_limit_table(1, &[2, 10, 1000]) {
            assert!((row.log_lower - 1.0).abs() < 1e-12);
            assert!((row.log_upper - 1.0).abs() < 1e-12);
        }
        let rows = log_limit_table(2, &[10_000]);
        assert!(rows[0].log_lower > 1.5 && rows[0].log_upper < 2.5);
        let rows = log_limit_table(3, &[100, 1000, 10_000]);
        for w in rows.windows(2) {
            assert!((w[1].log_lower - 3.0).abs() < (w[0].log_lower - 3.0).abs());
            assert!((w[1].log_upper - 3.0).abs() < (w[0].log_upper - 3.0).abs());
        }
    }

    #[test]
    fn cruder_bound_misses_small_s() {
        for s in 2..=5u32 {
            assert!(!check_thm14(s).unwrap().thm42_ok, "s={s}");
        }
        for s in 6..=20u32 {
            assert!(check_thm14(s).unwrap().thm42_ok, "s={s}");
        }
    }

    #[test]
    fn ln_big_matches_f64() {
        let x = BigUint::from(10u32).pow(400);
        assert!((ln_big(&x) - 400.0 * 10f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn table_order() {
        let t = bounds_table(1..=3, 2..=3);
        let keys: Vec<(u64, u32)> = t.iter().map(|r| (r.n, r.s)).collect();
        assert_eq!(keys, vec![(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (3, 3)]);
    }

    #[test]
    fn report() {
        let r = BoundsReport::new(12, 3, None);
        assert!(r.subgeneric);
        assert!(!BoundsReport::new(11, 3, Some(1024)).subgeneric);
        assert!(r.to_string().contains("subgeneric             true"));
    }
}
