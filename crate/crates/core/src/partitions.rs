//! Integer partitions and the small combinatorial helpers built on them:
//! multinomial and binomial coefficients, stabilizer orders, distinct
//! permutations of multisets.

use std::fmt;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::{FromPrimitive, One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A weakly decreasing tuple of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(PartitionError::InvalidArgument(format!(
                "partition parts must be positive: {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::InvalidArgument(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The partitioned integer.
    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parts padded with zeros to `width`.
    pub fn padded(&self, width: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(width.max(v.len()), 0);
        v
    }

    pub fn doubled(&self) -> Vec<u32> {
        self.parts.iter().map(|p| 2 * p).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `s`, grouped by number of parts.
#[derive(Clone, Debug)]
pub struct PartitionTable {
    pub s: u32,
    /// `by_k[k - 1]` holds the `k`-partitions in lexicographically decreasing order.
    pub by_k: Vec<Vec<Partition>>,
}

impl PartitionTable {
    pub fn new(s: u32) -> Self {
        let by_k = (1..=s)
            .map(|k| enumerate_partitions(s, k).expect("k in range"))
            .collect();
        Self { s, by_k }
    }

    pub fn k_partitions(&self, k: u32) -> &[Partition] {
        &self.by_k[k as usize - 1]
    }

    pub fn total(&self) -> usize {
        self.by_k.iter().map(Vec::len).sum()
    }
}

/// Partitions of `s` into exactly `k` parts, lexicographically decreasing.
pub fn enumerate_partitions(s: u32, k: u32) -> Result<Vec<Partition>, PartitionError> {
    if k == 0 || k > s {
        return Err(PartitionError::InvalidArgument(format!(
            "need 1 <= k <= s, got s = {s}, k = {k}"
        )));
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k as usize);
    fill(s, k, s, &mut cur, &mut out);
    Ok(out)
}

fn fill(rest: u32, slots: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if slots == 0 {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
        }
        return;
    }
    // Each remaining slot needs at least 1; the first of them at most max_part.
    let hi = max_part.min(rest - (slots - 1));
    let lo = rest.div_ceil(slots);
    for first in (lo..=hi).rev() {
        cur.push(first);
        fill(rest - first, slots - 1, first, cur, out);
        cur.pop();
    }
}

static K_PARTITION_MEMO: RwLock<Vec<Vec<BigUint>>> = RwLock::new(Vec::new());

/// `p_k(s)`, the number of partitions of `s` into exactly `k` parts, via
/// `p_k(s) = p_k(s - k) + p_{k-1}(s - 1)`.
pub fn count_k_partitions(s: u32, k: u32) -> BigUint {
    if k > s {
        return BigUint::zero();
    }
    if k == 0 {
        return if s == 0 { BigUint::one() } else { BigUint::zero() };
    }
    let (si, ki) = (s as usize, k as usize);
    {
        let memo = K_PARTITION_MEMO.read().expect("memo lock");
        if si < memo.len() {
            return memo[si][ki].clone();
        }
    }
    let mut memo = K_PARTITION_MEMO.write().expect("memo lock");
    while memo.len() <= si {
        let t = memo.len();
        let mut row = vec![BigUint::zero(); t + 1];
        if t == 0 {
            row[0] = BigUint::one();
        }
        for j in 1..=t {
            let mut v = memo[t - 1][j - 1].clone();
            if j <= t - j {
                v += &memo[t - j][j];
            }
            row[j] = v;
        }
        memo.push(row);
    }
    memo[si][ki].clone()
}

/// `p(s)`, the number of partitions of `s`.
pub fn count_partitions(s: u32) -> BigUint {
    (1..=s).map(|k| count_k_partitions(s, k)).sum::<BigUint>() + u32::from(s == 0)
}

pub fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `total! / prod(parts!)`.
pub fn multinomial(total: u32, parts: &[u32]) -> Result<BigUint, PartitionError> {
    let sum: u64 = parts.iter().map(|&p| u64::from(p)).sum();
    if sum != u64::from(total) {
        return Err(PartitionError::InvalidArgument(format!(
            "parts {parts:?} do not sum to {total}"
        )));
    }
    // product of binomials C(running, part) keeps intermediate values small
    let mut acc = BigUint::one();
    let mut running = 0u64;
    for &p in parts {
        running += u64::from(p);
        acc *= binomial(running, u64::from(p));
    }
    Ok(acc)
}

/// Order of the stabilizer of `tuple` under coordinate permutations: the
/// product of the factorials of the multiplicities of its distinct values.
pub fn stabilizer_size<T: PartialEq>(tuple: &[T]) -> BigUint {
    class_ids(tuple)
        .1
        .iter()
        .fold(BigUint::one(), |acc, &m| acc * factorial(m as u32))
}

/// Assigns each entry the index of its equality class (in order of first
/// appearance). Returns the ids and the multiplicity of each class.
fn class_ids<T: PartialEq>(items: &[T]) -> (Vec<usize>, Vec<usize>) {
    let mut reps: Vec<&T> = Vec::new();
    let mut mult: Vec<usize> = Vec::new();
    let ids = items
        .iter()
        .map(|x| match reps.iter().position(|r| *r == x) {
            Some(c) => {
                mult[c] += 1;
                c
            }
            None => {
                reps.push(x);
                mult.push(1);
                reps.len() - 1
            }
        })
        .collect();
    (ids, mult)
}

/// Rearranges `v` into the next lexicographic permutation; false when `v`
/// was already the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Every distinct rearrangement of `items`, each exactly once.
///
/// Works for any `PartialEq` element type (no ordering needed), so it also
/// applies to Gaussian rationals.
pub fn distinct_permutations<T: Clone + PartialEq>(items: &[T]) -> Vec<Vec<T>> {
    let (ids, _) = class_ids(items);
    let mut reps: Vec<T> = Vec::new();
    for (x, &c) in items.iter().zip(&ids) {
        if c == reps.len() {
            reps.push(x.clone());
        }
    }
    let mut cur = ids;
    cur.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(cur.iter().map(|&c| reps[c].clone()).collect());
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

/// Outcome of checking the two partition-function inequalities for one `s`.
#[derive(Clone, Debug)]
pub struct PartitionBoundsReport {
    pub s: u32,
    /// `(k, p_k(s), C(s-1, k-1))` for every `k`.
    pub per_k: Vec<(u32, BigUint, BigUint)>,
    /// `p_k(s) <= C(s-1, k-1)` for all `k`.
    pub binomial_ok: bool,
    /// The sharper `2 p_k(s) <= C(s-1, k-1) + 1` for all `k`.
    pub sharp_binomial_ok: bool,
    pub p: BigUint,
    /// A value not exceeding `(6/s) exp(pi sqrt(2s/3))`, as an integer.
    pub exp_bound_floor: BigUint,
    pub exp_bound_ok: bool,
}

impl PartitionBoundsReport {
    pub fn passed(&self) -> bool {
        self.binomial_ok && self.exp_bound_ok
    }
}

/// Checks `p_k(s) <= C(s-1, k-1)` for every `k` and
/// `p(s) <= (6/s) e^{pi sqrt(2s/3)}`.
///
/// The exponential bound is evaluated in `f64` and then shrunk by a relative
/// margin far above the accumulated rounding error before flooring, so the
/// integer it is compared against never exceeds the true bound.
pub fn check_partition_bounds(s: u32) -> Result<PartitionBoundsReport, PartitionError> {
    if s == 0 {
        return Err(PartitionError::InvalidArgument("s must be positive".into()));
    }
    let mut per_k = Vec::with_capacity(s as usize);
    let mut binomial_ok = true;
    let mut sharp_binomial_ok = true;
    for k in 1..=s {
        let pk = count_k_partitions(s, k);
        let b = binomial(u64::from(s - 1), u64::from(k - 1));
        binomial_ok &= pk <= b;
        sharp_binomial_ok &= &pk * 2u32 <= &b + 1u32;
        per_k.push((k, pk, b));
    }
    let p = count_partitions(s);
    let sf = f64::from(s);
    let bound = 6.0 / sf * (std::f64::consts::PI * (2.0 * sf / 3.0).sqrt()).exp();
    let lowered = bound * (1.0 - 1e-9);
    let exp_bound_floor = BigUint::from_f64(lowered.floor()).unwrap_or_else(BigUint::zero);
    let exp_bound_ok = p <= exp_bound_floor;
    Ok(PartitionBoundsReport {
        s,
        per_k,
        binomial_ok,
        sharp_binomial_ok,
        p,
        exp_bound_floor,
        exp_bound_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parts(v: &[Partition]) -> Vec<Vec<u32>> {
        v.iter().map(|p| p.parts().to_vec()).collect()
    }

    /// Brute force: all weakly decreasing k-tuples with entries in 1..=s.
    fn brute_force(s: u32, k: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut idx = vec![1u32; k as usize];
        loop {
            if idx.iter().sum::<u32>() == s && idx.windows(2).all(|w| w[0] >= w[1]) {
                out.push(idx.clone());
            }
            let mut i = 0;
            loop {
                if i == idx.len() {
                    out.sort_by(|a, b| b.cmp(a));
                    return out;
                }
                if idx[i] < s {
                    idx[i] += 1;
                    break;
                }
                idx[i] = 1;
                i += 1;
            }
        }
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(parts(&enumerate_partitions(4, 3).unwrap()), vec![vec![2, 1, 1]]);
        assert_eq!(
            parts(&enumerate_partitions(5, 3).unwrap()),
            vec![vec![3, 1, 1], vec![2, 2, 1]]
        );
        assert_eq!(parts(&enumerate_partitions(3, 3).unwrap()), vec![vec![1, 1, 1]]);
        assert_eq!(brute_force(5, 3), vec![vec![3, 1, 1], vec![2, 2, 1]]);
        for s in 1..=8 {
            for k in 1..=s {
                assert_eq!(parts(&enumerate_partitions(s, k).unwrap()), brute_force(s, k));
            }
        }
    }

    #[test]
    fn out_of_range_k() {
        assert!(enumerate_partitions(3, 0).is_err());
        assert!(enumerate_partitions(3, 4).is_err());
    }

    #[test]
    fn partition_counts() {
        for s in 1..40 {
            assert_eq!(count_k_partitions(s, 1), BigUint::one());
        }
        assert_eq!(count_partitions(5), BigUint::from(7u32));
        assert_eq!(count_k_partitions(4, 2), BigUint::from(2u32));
        assert_eq!(count_partitions(100), BigUint::from(190_569_292u64));
    }

    #[test]
    fn counts_match_enumeration_up_to_30() {
        for s in 1..=30u32 {
            let mut total = BigUint::zero();
            for k in 1..=s {
                let n = enumerate_partitions(s, k).unwrap().len();
                assert_eq!(count_k_partitions(s, k), BigUint::from(n), "s={s} k={k}");
                total += n;
            }
            assert_eq!(count_partitions(s), total);
        }
    }

    #[test]
    fn conjugation_largest_part() {
        // Partitions of s with largest part k are as many as those with k parts.
        for s in 1..=20u32 {
            let all: Vec<Partition> = (1..=s).flat_map(|k| enumerate_partitions(s, k).unwrap()).collect();
            for k in 1..=s {
                let largest = all.iter().filter(|p| p.parts()[0] == k).count();
                assert_eq!(BigUint::from(largest), count_k_partitions(s, k));
            }
        }
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(6, &[4, 2]).unwrap(), BigUint::from(15u32));
        assert_eq!(multinomial(7, &[7]).unwrap(), BigUint::one());
        let via_factorials = factorial(8) / (factorial(2).pow(4));
        assert_eq!(multinomial(8, &[2, 2, 2, 2]).unwrap(), via_factorials);
        assert_eq!(via_factorials, BigUint::from(2520u32));
        assert!(multinomial(5, &[2, 2]).is_err());
        assert_eq!(multinomial(0, &[]).unwrap(), BigUint::one());
    }

    #[test]
    fn stabilizers() {
        assert_eq!(stabilizer_size(&[1, 1, 1, 1]), BigUint::from(24u32));
        assert_eq!(stabilizer_size(&[3, 2, 1]), BigUint::one());
        // brute force for (2,1,1): permutations of positions fixing the tuple
        let t = [2, 1, 1];
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let fixing = perms.iter().filter(|p| p.iter().enumerate().all(|(i, &j)| t[i] == t[j])).count();
        assert_eq!(stabilizer_size(&t), BigUint::from(fixing));
        assert_eq!(fixing, 2);
    }

    #[test]
    fn distinct_permutations_of_multisets() {
        let p = distinct_permutations(&[2, 1, 1]);
        assert_eq!(p.len(), 3);
        assert!(p.contains(&vec![1, 2, 1]));
        assert_eq!(distinct_permutations(&[1, 1, 1]).len(), 1);
        assert_eq!(distinct_permutations(&[1, 2, 3, 4]).len(), 24);
        assert_eq!(distinct_permutations::<u8>(&[]).len(), 1);
    }

    #[test]
    fn bounds_small_cases() {
        let r = check_partition_bounds(5).unwrap();
        assert!(r.passed());
        assert_eq!(r.per_k[1], (2, BigUint::from(2u32), BigUint::from(4u32)));
        let r1 = check_partition_bounds(1).unwrap();
        assert!(r1.passed());
        assert_eq!(r1.p, BigUint::one());
        assert!(check_partition_bounds(0).is_err());
    }

    #[test]
    fn bounds_hold_up_to_94() {
        for s in 1..=94 {
            let r = check_partition_bounds(s).unwrap();
            assert!(r.passed(), "s = {s}");
            assert!(r.sharp_binomial_ok, "s = {s}");
        }
    }

    proptest! {
        #[test]
        fn multinomial_is_symmetric(v in proptest::collection::vec(0u32..6, 1..6), seed in any::<u64>()) {
            let total = v.iter().sum();
            let mut w = v.clone();
            let len = w.len();
            w.rotate_left((seed as usize) % len);
            w.reverse();
            prop_assert_eq!(multinomial(total, &v).unwrap(), multinomial(total, &w).unwrap());
        }
    }
}
