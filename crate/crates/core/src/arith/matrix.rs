use std::fmt;

use super::{ArithError, FormField, Scalar};

/// Dense row-major matrix over an exact scalar type.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = Self::zeros(d, d);
        for i in 0..d {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, ArithError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ArithError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[F]) -> Result<Vec<F>, ArithError> {
        if x.len() != self.cols {
            return Err(ArithError::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// The matrix with `col` appended as a last column.
    pub fn augment(&self, col: &[F]) -> Result<Self, ArithError> {
        if col.len() != self.rows {
            return Err(ArithError::DimensionMismatch("augmenting column length".into()));
        }
        let mut out = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            out.set(i, self.cols, col[i].clone());
        }
        Ok(out)
    }

    /// Submatrix on the given row and column index sets.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Solves the square system `self * x = rhs` by fraction-free (Bareiss)
    /// elimination followed by back substitution.
    ///
    /// Divisions happen only by previous pivots and, in back substitution, by
    /// the diagonal of the eliminated matrix.
    pub fn solve(&self, rhs: &[F]) -> Result<Vec<F>, ArithError> {
        if self.rows != self.cols || rhs.len() != self.rows {
            return Err(ArithError::DimensionMismatch("solve needs a square system".into()));
        }
        let d = self.rows;
        let w = d + 1;
        let mut a: Vec<F> = Vec::with_capacity(d * w);
        for i in 0..d {
            a.extend_from_slice(self.row(i));
            a.push(rhs[i].clone());
        }
        let mut prev = F::one();
        for k in 0..d {
            let Some(p) = (k..d).find(|&i| !a[i * w + k].is_zero()) else {
                return Err(ArithError::SingularBlock(0));
            };
            if p != k {
                for j in 0..w {
                    a.swap(p * w + j, k * w + j);
                }
            }
            let pivot = a[k * w + k].clone();
            for i in k + 1..d {
                let lead = a[i * w + k].clone();
                for j in k + 1..w {
                    let v = a[i * w + j].clone() * pivot.clone() - lead.clone() * a[k * w + j].clone();
                    a[i * w + j] = v.checked_div(&prev)?;
                }
                a[i * w + k] = F::zero();
            }
            prev = pivot;
        }
        let mut x = vec![F::zero(); d];
        for i in (0..d).rev() {
            let mut acc = a[i * w + d].clone();
            for j in i + 1..d {
                acc = acc - a[i * w + j].clone() * x[j].clone();
            }
            x[i] = acc.checked_div(&a[i * w + i])?;
        }
        Ok(x)
    }
}

impl<F: FormField> Matrix<F> {
    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut prev = F::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    a.swap(p * cols + j, r * cols + j);
                }
            }
            let pivot = a[r * cols + c].clone();
            for i in r + 1..rows {
                let lead = a[i * cols + c].clone();
                for j in c + 1..cols {
                    let v = a[i * cols + j].clone() * pivot.clone()
                        - lead.clone() * a[r * cols + j].clone();
                    a[i * cols + j] = v.checked_div(&prev).expect("nonzero pivot");
                }
                a[i * cols + c] = F::zero();
            }
            prev = pivot;
            r += 1;
        }
        r
    }
}

impl<F: Scalar + fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Solves a block-lower-triangular square system by forward substitution
/// over the diagonal blocks, each solved with [`Matrix::solve`].
///
/// `block_sizes` lists the diagonal block orders in row/column order. Entries
/// above the block diagonal must be zero. A singular diagonal block is
/// reported as [`ArithError::SingularBlock`] carrying the block's position in
/// `block_sizes`.
pub fn solve_block_triangular<F: Scalar>(
    m: &Matrix<F>,
    rhs: &[F],
    block_sizes: &[usize],
) -> Result<Vec<F>, ArithError> {
    let d = m.rows();
    if m.cols() != d || rhs.len() != d {
        return Err(ArithError::DimensionMismatch("block solve needs a square system".into()));
    }
    if block_sizes.iter().sum::<usize>() != d || block_sizes.contains(&0) {
        return Err(ArithError::DimensionMismatch(format!(
            "block sizes {block_sizes:?} do not partition dimension {d}"
        )));
    }
    let mut x: Vec<F> = Vec::with_capacity(d);
    let mut offset = 0;
    for (b, &size) in block_sizes.iter().enumerate() {
        let rows: Vec<usize> = (offset..offset + size).collect();
        for &i in &rows {
            if (offset + size..d).any(|j| !m.get(i, j).is_zero()) {
                return Err(ArithError::ContractViolation(format!(
                    "row {i} has entries above the block diagonal"
                )));
            }
        }
        let local_rhs: Vec<F> = rows
            .iter()
            .map(|&i| {
                (0..offset).fold(rhs[i].clone(), |acc, j| acc - m.get(i, j).clone() * x[j].clone())
            })
            .collect();
        let block = m.select(&rows, &rows);
        let xb = block.solve(&local_rhs).map_err(|e| match e {
            ArithError::SingularBlock(_) => ArithError::SingularBlock(b),
            other => other,
        })?;
        x.extend(xb);
        offset += size;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational_from_i64, NPoly, Rational};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        rational_from_i64(n, d)
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| q(v, 1)).collect())
                .collect(),
        )
        .unwrap()
    }

    /// Textbook Gauss-Jordan elimination with rational pivots; an independent
    /// route used to check the Bareiss code.
    fn naive_rank_and_solve(m: &Matrix<Rational>, rhs: Option<&[Rational]>) -> (usize, Option<Vec<Rational>>) {
        let rows = m.rows();
        let cols = m.cols();
        let mut a: Vec<Vec<Rational>> = (0..rows)
            .map(|i| {
                let mut r = m.row(i).to_vec();
                if let Some(b) = rhs {
                    r.push(b[i].clone());
                }
                r
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(p, r);
            let inv = Rational::one() / a[r][c].clone();
            for v in a[r].iter_mut() {
                *v = v.clone() * inv.clone();
            }
            for i in 0..rows {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    let pr = a[r].clone();
                    for (v, p) in a[i].iter_mut().zip(pr) {
                        *v = v.clone() - f.clone() * p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        let sol = (rhs.is_some() && r == cols && rows == cols)
            .then(|| (0..cols).map(|i| a[i][cols].clone()).collect());
        (r, sol)
    }

    #[test]
    fn rank_basics() {
        assert_eq!(Matrix::<Rational>::zeros(3, 4).rank(), 0);
        assert_eq!(Matrix::<Rational>::identity(5).rank(), 5);
        assert_eq!(qm(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(qm(&[&[0, 0, 1], &[0, 0, 2], &[1, 0, 0]]).rank(), 2);
        // catalecticant of q_3 = 2 * identity
        let mut c = Matrix::<Rational>::zeros(3, 3);
        for i in 0..3 {
            c.set(i, i, q(2, 1));
        }
        assert_eq!(c.rank(), 3);
    }

    #[test]
    fn symbolic_two_by_two_block_system() {
        // [[12, 0], [2(n-1), 1]] x = [2, 1]  =>  x = [1/6, (4-n)/3]
        let m = Matrix::from_rows(vec![
            vec![NPoly::from_i64s(&[12]), NPoly::zero()],
            vec![NPoly::from_i64s(&[-2, 2]), NPoly::one()],
        ])
        .unwrap();
        let x = solve_block_triangular(&m, &[NPoly::from_i64s(&[2]), NPoly::one()], &[1, 1]).unwrap();
        assert_eq!(x[0], NPoly::constant(q(1, 6)));
        assert_eq!(x[1], NPoly::new(vec![q(4, 3), q(-1, 3)]));
    }

    #[test]
    fn identity_system() {
        let rhs = vec![q(3, 7), q(-1, 2), q(5, 1)];
        let x = solve_block_triangular(&Matrix::identity(3), &rhs, &[1, 2]).unwrap();
        assert_eq!(x, rhs);
    }

    #[test]
    fn s3_system_at_n4_matches_naive_elimination() {
        // Rows (2,2,2), (4,2), (6); columns (1,1,1), (1,1), (1) at n = 4,
        // unscaled: entries 2^(l-1) C(n-k, l-k) C(6; 2m) h.
        let m = qm(&[&[4 * 90, 0, 0], &[4 * 2 * 15, 2 * 15, 0], &[4 * 3, 2 * 3, 1]]);
        let rhs = vec![q(6, 1), q(3, 1), q(1, 1)];
        let x = solve_block_triangular(&m, &rhs, &[1, 1, 1]).unwrap();
        let (_, oracle) = naive_rank_and_solve(&m, Some(&rhs));
        assert_eq!(Some(x.clone()), oracle);
        // 1/60, 2(5-4)/60, 2(16-36+38)/60
        assert_eq!(x, vec![q(1, 60), q(2, 60), q(36, 60)]);
    }

    #[test]
    fn singular_block_is_reported_with_its_index() {
        let m = qm(&[&[1, 0, 0], &[0, 1, 2], &[5, 2, 4]]);
        let err = solve_block_triangular(&m, &[q(1, 1), q(1, 1), q(1, 1)], &[1, 2]).unwrap_err();
        assert_eq!(err, ArithError::SingularBlock(1));
    }

    #[test]
    fn entries_above_block_diagonal_are_rejected() {
        let m = qm(&[&[1, 1], &[0, 1]]);
        assert!(matches!(
            solve_block_triangular(&m, &[q(1, 1), q(1, 1)], &[1, 1]),
            Err(ArithError::ContractViolation(_))
        ));
    }

    #[test]
    fn non_constant_pivot_is_a_contract_violation() {
        let m = Matrix::from_rows(vec![
            vec![NPoly::n(), NPoly::one()],
            vec![NPoly::one(), NPoly::n()],
        ])
        .unwrap();
        let r = solve_block_triangular(&m, &[NPoly::one(), NPoly::one()], &[2]);
        assert!(matches!(r, Err(ArithError::ContractViolation(_))));
    }

    fn arb_matrix(d: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix<Rational>> {
        proptest::collection::vec((lo..hi, 1i64..4), d * d).prop_map(move |v| {
            let data: Vec<Rational> = v.into_iter().map(|(a, b)| q(a, b)).collect();
            Matrix::from_rows(data.chunks(d).map(|c| c.to_vec()).collect()).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_is_transpose_invariant(m in arb_matrix(5, -2, 3)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn bareiss_agrees_with_naive_elimination(
            m in arb_matrix(6, -5, 6),
            b in proptest::collection::vec(-9i64..10, 6),
        ) {
            let rhs: Vec<Rational> = b.into_iter().map(|v| q(v, 1)).collect();
            let (_, naive_sol) = naive_rank_and_solve(&m, Some(&rhs));
            let (plain_rank, _) = naive_rank_and_solve(&m, None);
            prop_assert_eq!(m.rank(), plain_rank);
            match m.solve(&rhs) {
                Ok(x) => {
                    prop_assert_eq!(m.mul_vec(&x).unwrap(), rhs);
                    prop_assert_eq!(Some(x), naive_sol);
                }
                Err(e) => {
                    prop_assert_eq!(e, ArithError::SingularBlock(0));
                    prop_assert!(plain_rank < 6);
                }
            }
        }

        #[test]
        fn block_solution_satisfies_system(
            a in arb_matrix(2, -4, 5),
            c in arb_matrix(2, -4, 5),
            lower in proptest::collection::vec(-4i64..5, 4),
            b in proptest::collection::vec(-9i64..10, 4),
        ) {
            let mut m = Matrix::<Rational>::zeros(4, 4);
            for i in 0..2 {
                for j in 0..2 {
                    m.set(i, j, a.get(i, j).clone());
                    m.set(i + 2, j + 2, c.get(i, j).clone());
                    m.set(i + 2, j, q(lower[2 * i + j], 1));
                }
            }
            let rhs: Vec<Rational> = b.into_iter().map(|v| q(v, 1)).collect();
            match solve_block_triangular(&m, &rhs, &[2, 2]) {
                Ok(x) => prop_assert_eq!(m.mul_vec(&x).unwrap(), rhs),
                Err(ArithError::SingularBlock(k)) => {
                    let blk = if k == 0 { &a } else { &c };
                    prop_assert!(blk.rank() < 2);
                }
                Err(e) => prop_assert!(false, "unexpected {e}"),
            }
        }
    }
}
