use std::collections::HashMap;
use std::fmt;

use astro_float::{BigFloat, RoundingMode};
use itertools::Itertools;
use num_bigint::{BigInt, Sign};
use rayon::prelude::*;

use super::{CertifyError, Mismatch, VerificationOutcome};
use crate::ansatz::AnyDecomposition;
use crate::arith::{FormField, Rational};
use crate::partitions::multinomial;
use crate::sympoly::{expand_q_power, MultiIndex};

pub const DEFAULT_PRECISION: usize = 256;
pub const MIN_PRECISION: usize = 128;

const RM: RoundingMode = RoundingMode::ToEven;
const CHUNK: usize = 16;

/// A complex number with `BigFloat` parts. Every operation takes the
/// working precision in bits.
#[derive(Clone, Debug)]
pub struct Complex {
    pub re: BigFloat,
    pub im: BigFloat,
}

fn big_int_to_float(v: &BigInt, p: usize) -> BigFloat {
    let (sign, digits) = v.to_u32_digits();
    let base = BigFloat::from_u64(1 << 32, p);
    let mut acc = BigFloat::from_u64(0, p);
    for d in digits.iter().rev() {
        acc = acc.mul(&base, p, RM).add(&BigFloat::from_u64(u64::from(*d), p), p, RM);
    }
    if sign == Sign::Minus {
        acc.neg()
    } else {
        acc
    }
}

fn rational_to_float(r: &Rational, p: usize) -> BigFloat {
    big_int_to_float(r.numer(), p).div(&big_int_to_float(r.denom(), p), p, RM)
}

impl Complex {
    pub fn zero(p: usize) -> Self {
        Self::real(BigFloat::from_u64(0, p), p)
    }

    pub fn real(re: BigFloat, p: usize) -> Self {
        Self { re, im: BigFloat::from_u64(0, p) }
    }

    pub fn from_i64(v: i64, p: usize) -> Self {
        Self::real(BigFloat::from_i64(v, p), p)
    }

    pub fn from_rational(r: &Rational, p: usize) -> Self {
        Self::real(rational_to_float(r, p), p)
    }

    pub fn from_field<F: FormField>(x: &F, p: usize) -> Self {
        let (re, im) = x.parts();
        Self { re: rational_to_float(&re, p), im: rational_to_float(&im, p) }
    }

    pub fn add(&self, o: &Self, p: usize) -> Self {
        Self { re: self.re.add(&o.re, p, RM), im: self.im.add(&o.im, p, RM) }
    }

    pub fn sub(&self, o: &Self, p: usize) -> Self {
        Self { re: self.re.sub(&o.re, p, RM), im: self.im.sub(&o.im, p, RM) }
    }

    pub fn mul(&self, o: &Self, p: usize) -> Self {
        let re = self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM);
        Self { re, im }
    }

    pub fn scale(&self, c: &BigFloat, p: usize) -> Self {
        Self { re: self.re.mul(c, p, RM), im: self.im.mul(c, p, RM) }
    }

    pub fn norm_sqr(&self, p: usize) -> BigFloat {
        self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn inv(&self, p: usize) -> Self {
        let d = self.norm_sqr(p);
        Self { re: self.re.div(&d, p, RM), im: self.im.neg().div(&d, p, RM) }
    }

    pub fn powi(&self, e: u32, p: usize) -> Self {
        let mut acc = Self::from_i64(1, p);
        for _ in 0..e {
            acc = acc.mul(self, p);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{} + ({})i", self.re, self.im)
        }
    }
}

/// `weight * (coeffs . x)^(2s)` with floating coefficients.
#[derive(Clone, Debug)]
pub struct NumericTerm {
    pub weight: Complex,
    pub coeffs: Vec<Complex>,
}

/// Casts an exact decomposition to floating terms.
pub fn numeric_terms_from(d: &AnyDecomposition, p: usize) -> Vec<NumericTerm> {
    fn cast<F: FormField>(terms: &[crate::ansatz::Term<F>], p: usize) -> Vec<NumericTerm> {
        terms
            .iter()
            .map(|t| NumericTerm {
                weight: Complex::from_field(&t.weight, p),
                coeffs: t.coeffs.iter().map(|c| Complex::from_field(c, p)).collect(),
            })
            .collect()
    }
    match d {
        AnyDecomposition::Rational(d) => cast(&d.terms, p),
        AnyDecomposition::Gaussian(d) => cast(&d.terms, p),
    }
}

/// The quadrature family for `q_n^2` in `1 + n + C(n,2)` fourth powers:
/// `3 a5^4 q_n^2 = a1 S^4 + sum_k (a2 S + a3 x_k)^4
///  + sum_{j1<j2} (a4 S + a5 (x_j1 + x_j2))^4` with `S = x_1 + ... + x_n` and
/// `g^4 = 8 - n`. For `n > 8` the fourth root is `(n-8)^(1/4) (1+i)/sqrt 2`.
pub fn stroud_s2(n: usize, p: usize) -> Result<Vec<NumericTerm>, CertifyError> {
    if n < 3 || n == 8 {
        return Err(CertifyError::InvalidArgument(format!("the family needs n >= 3 and n != 8, got {n}")));
    }
    let c = |v: i64| Complex::from_i64(v, p);
    let sqrt2 = BigFloat::from_u64(2, p).sqrt(p, RM);
    let fourth_root = |v: u64| BigFloat::from_u64(v, p).sqrt(p, RM).sqrt(p, RM);
    let g = if n < 8 {
        Complex::real(fourth_root(8 - n as u64), p)
    } else {
        let t = fourth_root(n as u64 - 8).div(&sqrt2, p, RM);
        Complex { re: t.clone(), im: t }
    };
    let r2 = Complex::real(sqrt2, p);
    let two_r2 = r2.scale(&BigFloat::from_u64(2, p), p);
    let g2 = g.mul(&g, p);
    let g3 = g2.mul(&g, p);
    let g4 = g2.mul(&g2, p);

    let a1 = c(8).mul(&g4.sub(&c(1), p), p).mul(&g2.add(&two_r2, p).powi(4, p), p);
    let a2 = c(2).mul(&g2, p).add(&two_r2, p);
    let a3 = two_r2.mul(&g4, p).add(&c(8).mul(&g2, p), p).mul(&c(-1), p);
    let a4 = c(2).mul(&g, p);
    let a5 = two_r2.mul(&g3, p).add(&c(8).mul(&g, p), p).mul(&c(-1), p);
    let inv = c(3).mul(&a5.powi(4, p), p).inv(p);

    let mut terms = vec![NumericTerm { weight: a1.mul(&inv, p), coeffs: vec![c(1); n] }];
    for k in 0..n {
        let mut coeffs = vec![a2.clone(); n];
        coeffs[k] = a2.add(&a3, p);
        terms.push(NumericTerm { weight: inv.clone(), coeffs });
    }
    let pair = a4.add(&a5, p);
    for (j1, j2) in (0..n).tuple_combinations() {
        let mut coeffs = vec![a4.clone(); n];
        coeffs[j1] = pair.clone();
        coeffs[j2] = pair.clone();
        terms.push(NumericTerm { weight: inv.clone(), coeffs });
    }
    Ok(terms)
}

pub fn verify_numeric(terms: &[NumericTerm], n: usize, s: u32, tol: f64) -> Result<VerificationOutcome, CertifyError> {
    verify_numeric_with(terms, n, s, tol, DEFAULT_PRECISION)
}

/// Expands every term in floating point at `precision` bits and accepts iff
/// each residual coefficient against `q_n^s` has modulus below `tol`. Chunk
/// sums are combined in chunk order, so the result does not depend on the
/// thread schedule.
pub fn verify_numeric_with(
    terms: &[NumericTerm],
    n: usize,
    s: u32,
    tol: f64,
    precision: usize,
) -> Result<VerificationOutcome, CertifyError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CertifyError::InvalidTolerance(tol.to_string()));
    }
    if precision < MIN_PRECISION {
        return Err(CertifyError::InvalidPrecision(precision));
    }
    if let Some(t) = terms.iter().find(|t| t.coeffs.len() != n) {
        return Err(CertifyError::InvalidArgument(format!("form of length {} in {n} variables", t.coeffs.len())));
    }
    let p = precision;
    let d = 2 * s;
    let partial: Vec<HashMap<Vec<u32>, Complex>> = terms
        .par_chunks(CHUNK)
        .map(|chunk| {
            let mut acc = HashMap::new();
            for t in chunk {
                expand_term(t, d, p, &mut acc);
            }
            acc
        })
        .collect();
    let mut got: HashMap<Vec<u32>, Complex> = HashMap::new();
    for part in partial {
        for (k, v) in part {
            let e = got.entry(k).or_insert_with(|| Complex::zero(p));
            *e = e.add(&v, p);
        }
    }
    let expected: HashMap<Vec<u32>, Complex> = expand_q_power(n, s)
        .terms()
        .map(|(k, v)| (k.0.clone(), Complex::from_rational(v, p)))
        .collect();

    let tol = BigFloat::from_f64(tol, p);
    let tol2 = tol.mul(&tol, p, RM);
    let zero = Complex::zero(p);
    let worst = got
        .keys()
        .chain(expected.keys())
        .unique()
        .filter(|k| {
            let a = got.get(*k).unwrap_or(&zero);
            let b = expected.get(*k).unwrap_or(&zero);
            let r2 = a.sub(b, p).norm_sqr(p);
            !matches!(r2.partial_cmp(&tol2), Some(std::cmp::Ordering::Less))
        })
        .map(|k| MultiIndex(k.clone()))
        .max();
    let mismatch = worst.map(|idx| Mismatch {
        expected: expected.get(&idx.0).unwrap_or(&zero).to_string(),
        got: got.get(&idx.0).unwrap_or(&zero).to_string(),
        monomial: idx,
    });
    Ok(VerificationOutcome::from_mismatch(mismatch, terms.len()))
}

fn expand_term(t: &NumericTerm, d: u32, p: usize, acc: &mut HashMap<Vec<u32>, Complex>) {
    let n = t.coeffs.len();
    let support: Vec<usize> = (0..n).filter(|&i| !t.coeffs[i].is_zero()).collect();
    let powers: Vec<Vec<Complex>> = support
        .iter()
        .map(|&i| {
            let mut row = vec![Complex::from_i64(1, p)];
            for e in 1..=d as usize {
                row.push(row[e - 1].mul(&t.coeffs[i], p));
            }
            row
        })
        .collect();
    let mut local = vec![0u32; support.len()];
    crate::sympoly::compositions(d, 0, &mut local, &mut |e| {
        let mut exps = vec![0u32; n];
        let mut v = t.weight.clone();
        for (j, &x) in e.iter().enumerate() {
            exps[support[j]] = x;
            v = v.mul(&powers[j][x as usize], p);
        }
        let m = multinomial(d, e).expect("composition of d");
        v = v.scale(&big_int_to_float(&m.into(), p), p);
        let slot = acc.entry(exps).or_insert_with(|| Complex::zero(p));
        *slot = slot.add(&v, p);
    });
}
