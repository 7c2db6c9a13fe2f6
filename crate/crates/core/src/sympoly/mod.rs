//! Sparse multivariate polynomials over the exact scalar types, with the
//! symmetric-function helpers needed to expand powers of the quadratic form
//! and of sign-symmetrized linear forms.

mod expand;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::arith::{Rational, Scalar};
use crate::partitions::{distinct_permutations, multinomial, Partition};

pub use expand::{
    expand_linear_power, expand_signed_power, h_value, LinearPowerExpander, SignedOrbitForm,
};

/// Exponent vector of a monomial. Ordered by graded reverse lexicographic
/// order: total degree first, then the vector whose last nonzero entry of
/// `self - other` is negative is the larger one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn all_even(&self) -> bool {
        self.0.iter().all(|e| e % 2 == 0)
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| {
                for (a, b) in self.0.iter().zip(&other.0).rev() {
                    if a != b {
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            })
            .then_with(|| self.0.len().cmp(&other.0.len()))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Polynomial in `n` variables stored as a map from exponent vector to a
/// nonzero coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct SparsePoly<F> {
    n: usize,
    degree: Option<u32>,
    terms: BTreeMap<MultiIndex, F>,
}

impl<F: Scalar> SparsePoly<F> {
    pub fn zero(n: usize) -> Self {
        Self { n, degree: None, terms: BTreeMap::new() }
    }

    /// Empty polynomial whose terms must all have total degree `degree`.
    pub fn homogeneous(n: usize, degree: u32) -> Self {
        Self { n, degree: Some(degree), terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree_tag(&self) -> Option<u32> {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, idx: &MultiIndex) -> F {
        self.terms.get(idx).cloned().unwrap_or_else(F::zero)
    }

    /// Terms in ascending graded reverse lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &F)> {
        self.terms.iter()
    }

    /// Adds `c * x^idx`, dropping the entry if the sum vanishes.
    pub fn add_term(&mut self, idx: MultiIndex, c: F) {
        assert_eq!(idx.len(), self.n, "exponent vector length");
        if let Some(d) = self.degree {
            assert_eq!(idx.degree(), d, "term degree differs from tag");
        }
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.n, other.n, "variable count");
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.degree = if self.degree == other.degree { self.degree } else { None };
        for (k, v) in &other.terms {
            out.add_term(k.clone(), -v.clone());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self { n: self.n, degree: self.degree, terms: BTreeMap::new() };
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "variable count");
        let degree = match (self.degree, other.degree) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        let mut out = Self { n: self.n, degree, terms: BTreeMap::new() };
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let idx = MultiIndex(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect());
                out.add_term(idx, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// The linear form `sum_i coeffs[i] x_i`.
    pub fn linear(coeffs: &[F]) -> Self {
        let n = coeffs.len();
        let mut out = Self::homogeneous(n, 1);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            out.add_term(MultiIndex(e), c.clone());
        }
        out
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::zero(self.n);
        out.add_term(MultiIndex(vec![0; self.n]), F::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn all_exponents_even(&self) -> bool {
        self.terms.keys().all(MultiIndex::all_even)
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut out = Self { n: self.n, degree: self.degree, terms: BTreeMap::new() };
        for (k, v) in &self.terms {
            let mut e = vec![0; self.n];
            for (i, &x) in k.0.iter().enumerate() {
                e[perm[i]] = x;
            }
            out.add_term(MultiIndex(e), v.clone());
        }
        out
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> SparsePoly<G> {
        let mut out = SparsePoly { n: self.n, degree: self.degree, terms: BTreeMap::new() };
        for (k, v) in &self.terms {
            out.add_term(k.clone(), f(v));
        }
        out
    }

    /// Builds a polynomial from raw terms, merging repeats and dropping zeros.
    pub fn from_terms(n: usize, degree: Option<u32>, terms: impl IntoIterator<Item = (MultiIndex, F)>) -> Self {
        let mut out = Self { n, degree, terms: BTreeMap::new() };
        for (k, v) in terms {
            out.add_term(k, v);
        }
        out
    }
}

impl<F: Scalar + fmt::Display> fmt::Display for SparsePoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, v)| format!("({v})*{k}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `M_m` in `n` variables: every distinct placement of the exponents of `m`
/// on the variables, each with coefficient 1. Zero when `m` has more parts
/// than there are variables.
pub fn monomial_symmetric(m: &Partition, n: usize) -> SparsePoly<Rational> {
    let degree = m.total();
    let mut out = SparsePoly::homogeneous(n, degree);
    if m.len() > n {
        return out;
    }
    for e in distinct_permutations(&m.padded(n)) {
        out.add_term(MultiIndex(e), Rational::from_integer(1.into()));
    }
    out
}

/// `(x_1^2 + ... + x_n^2)^s`, one term per weak composition of `s` into `n`
/// parts.
pub fn expand_q_power(n: usize, s: u32) -> SparsePoly<Rational> {
    let mut out = SparsePoly::homogeneous(n, 2 * s);
    let mut cur = vec![0u32; n];
    compositions(s, 0, &mut cur, &mut |c| {
        let coef = multinomial(s, c).expect("composition sums to s");
        let e = c.iter().map(|x| 2 * x).collect();
        out.add_term(MultiIndex(e), Rational::from_integer(BigInt::from(coef)));
    });
    out
}

/// Calls `f` on every weak composition of `rest` into the slots `cur[i..]`.
pub(crate) fn compositions(rest: u32, i: usize, cur: &mut [u32], f: &mut impl FnMut(&[u32])) {
    if i + 1 >= cur.len() {
        if let Some(last) = cur.last_mut() {
            *last = rest;
            f(cur);
        } else if rest == 0 {
            f(cur);
        }
        return;
    }
    for e in (0..=rest).rev() {
        cur[i] = e;
        compositions(rest - e, i + 1, cur, f);
    }
    cur[i] = 0;
}
