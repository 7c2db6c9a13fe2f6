use num_bigint::BigInt;

use super::{MultiIndex, SparsePoly};
use crate::arith::Scalar;
use crate::partitions::{binomial, distinct_permutations, Partition};

/// Expands `(c . x)^d` by the multinomial theorem over the nonzero
/// coordinates of `c`, with the binomial table for `d` precomputed.
pub struct LinearPowerExpander<F> {
    d: u32,
    /// `binom[r][e] = C(r, e)` for `e <= r <= d`.
    binom: Vec<Vec<F>>,
}

impl<F: Scalar> LinearPowerExpander<F> {
    pub fn new(d: u32) -> Self {
        let binom = (0..=d)
            .map(|r| {
                (0..=r)
                    .map(|e| F::from_bigint(BigInt::from(binomial(u64::from(r), u64::from(e)))))
                    .collect()
            })
            .collect();
        Self { d, binom }
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    /// Calls `emit(exponents, coefficient)` once per monomial of `(c . x)^d`.
    /// Coefficients may be zero only if the field has zero divisors, which
    /// ours do not.
    pub fn for_each_term(&self, coeffs: &[F], mut emit: impl FnMut(&[u32], F)) {
        let support: Vec<usize> = (0..coeffs.len()).filter(|&i| !coeffs[i].is_zero()).collect();
        let mut exps = vec![0u32; coeffs.len()];
        if support.is_empty() {
            if self.d == 0 {
                emit(&exps, F::one());
            }
            return;
        }
        let powers: Vec<Vec<F>> = support
            .iter()
            .map(|&i| {
                let mut row = Vec::with_capacity(self.d as usize + 1);
                let mut acc = F::one();
                for _ in 0..=self.d {
                    row.push(acc.clone());
                    acc = acc * coeffs[i].clone();
                }
                row
            })
            .collect();
        self.recurse(&support, &powers, 0, self.d, F::one(), &mut exps, &mut emit);
    }

    #[allow(clippy::too_many_arguments)]
    fn recurse(
        &self,
        support: &[usize],
        powers: &[Vec<F>],
        j: usize,
        rest: u32,
        acc: F,
        exps: &mut [u32],
        emit: &mut impl FnMut(&[u32], F),
    ) {
        let var = support[j];
        if j + 1 == support.len() {
            exps[var] = rest;
            emit(exps, acc * powers[j][rest as usize].clone());
            exps[var] = 0;
            return;
        }
        let row = &self.binom[rest as usize];
        for e in 0..=rest {
            exps[var] = e;
            let next = acc.clone() * row[e as usize].clone() * powers[j][e as usize].clone();
            self.recurse(support, powers, j + 1, rest - e, next, exps, emit);
        }
        exps[var] = 0;
    }

    /// Adds `weight * (c . x)^d` into `target`.
    pub fn accumulate(&self, target: &mut SparsePoly<F>, weight: &F, coeffs: &[F]) {
        self.for_each_term(coeffs, |e, c| {
            target.add_term(MultiIndex(e.to_vec()), weight.clone() * c);
        });
    }
}

/// `(c . x)^d` as a sparse polynomial in `c.len()` variables.
pub fn expand_linear_power<F: Scalar>(coeffs: &[F], d: u32) -> SparsePoly<F> {
    let mut out = SparsePoly::homogeneous(coeffs.len(), d);
    LinearPowerExpander::new(d).accumulate(&mut out, &F::one(), coeffs);
    out
}

/// One member `a_1 x_{t_1} +- a_2 x_{t_2} +- ... +- a_k x_{t_k}` of a
/// sign-symmetrized family. `point` is the arrangement of the family's base
/// point used by this member.
#[derive(Clone, Debug, PartialEq)]
pub struct SignedOrbitForm<F> {
    pub point: Vec<F>,
    /// Strictly increasing variable indices, zero-based.
    pub support: Vec<usize>,
    /// Bit `i` set means coordinate `i` enters with a minus sign; bit 0 is
    /// always clear.
    pub sign_pattern: u64,
}

impl<F: Scalar> SignedOrbitForm<F> {
    pub fn k(&self) -> usize {
        self.point.len()
    }

    /// Dense coefficient vector in `n` variables.
    pub fn coeffs(&self, n: usize) -> Vec<F> {
        let mut out = vec![F::zero(); n];
        for (i, (&t, a)) in self.support.iter().zip(&self.point).enumerate() {
            out[t] = if self.sign_pattern >> i & 1 == 1 { -a.clone() } else { a.clone() };
        }
        out
    }

    /// Every distinct arrangement of `point` on `support`, combined with
    /// each of the `2^(k-1)` sign patterns whose first sign is `+`.
    pub fn family(point: &[F], support: &[usize]) -> Vec<Self> {
        assert_eq!(point.len(), support.len(), "point arity and support size");
        assert!(support.windows(2).all(|w| w[0] < w[1]), "support must increase");
        assert!(point.iter().all(|a| !a.is_zero()), "point entries must be nonzero");
        let k = point.len();
        let patterns = if k == 0 { 1u64 } else { 1u64 << (k - 1) };
        let mut out = Vec::new();
        for arrangement in distinct_permutations(point) {
            for p in 0..patterns {
                out.push(Self { point: arrangement.clone(), support: support.to_vec(), sign_pattern: p << 1 });
            }
        }
        out
    }
}

/// Sum of `l^(2s)` over the whole family of `point` on `support`, in `n`
/// variables. Odd exponents cancel.
pub fn expand_signed_power<F: Scalar>(point: &[F], support: &[usize], n: usize, s: u32) -> SparsePoly<F> {
    let expander = LinearPowerExpander::new(2 * s);
    let mut out = SparsePoly::homogeneous(n, 2 * s);
    for form in SignedOrbitForm::family(point, support) {
        expander.accumulate(&mut out, &F::one(), &form.coeffs(n));
    }
    out
}

/// `h_a(m) = sum over distinct arrangements b of a of prod_i b_i^(2 m_i)`,
/// with `m` zero-padded to the arity of `a`. Zero when `m` has more parts
/// than `a` has coordinates.
pub fn h_value<F: Scalar>(point: &[F], m: &Partition) -> F {
    if m.len() > point.len() {
        return F::zero();
    }
    let exps = m.padded(point.len());
    distinct_permutations(point)
        .into_iter()
        .map(|b| {
            b.iter()
                .zip(&exps)
                .fold(F::one(), |acc, (x, &e)| acc * x.pow(2 * e))
        })
        .fold(F::zero(), |acc, v| acc + v)
}
