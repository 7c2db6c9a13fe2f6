//! Closed formulas shipped as named decompositions.
//!
//! Weights are stored scaled by a constant so they read as integer-ish
//! polynomials in `n`; each formula is checked against a fresh symbolic solve
//! and against exact expansion in the tests.

use itertools::Itertools;
use num_traits::One;

use super::{AnsatzError, AnyDecomposition, Decomposition, Provenance, SymbolicDecomposition, SymbolicFamily, Term};
use crate::arith::{rational_from_i64, FormField, GaussianRational, NPoly, Rational};

pub const BUILTIN_NAMES: &[&str] = &["s2", "s2-real", "s3", "s4-real", "s4-gaussian", "s5", "q8s2"];

fn poly(c: &[(i64, i64)]) -> NPoly {
    NPoly::new(c.iter().map(|&(a, b)| rational_from_i64(a, b)).collect())
}

fn int_poly(c: &[i64]) -> NPoly {
    NPoly::from_i64s(c)
}

/// Point `(lead, 1, ..., 1)` with `k` coordinates.
fn pt<F: FormField>(k: usize, lead: F) -> Vec<F> {
    let mut p = vec![F::one(); k];
    p[0] = lead;
    p
}

fn ones<F: FormField>(k: usize) -> Vec<F> {
    vec![F::one(); k]
}

fn symbolic<F: FormField>(s: u32, scale: i64, fams: Vec<(Vec<F>, NPoly)>) -> SymbolicDecomposition<F> {
    let inv = Rational::one() / rational_from_i64(scale, 1);
    SymbolicDecomposition {
        s,
        families: fams
            .into_iter()
            .map(|(point, w)| SymbolicFamily { k: point.len() as u32, point, weight: w.scale(&inv) })
            .collect(),
        scale: rational_from_i64(scale, 1),
        valid_from: 1,
    }
}

/// Closed formula with rational points, by name.
pub fn builtin_symbolic(name: &str) -> Result<SymbolicDecomposition<Rational>, AnsatzError> {
    let two = rational_from_i64(2, 1);
    let d = match name {
        "s2" | "s2-real" => symbolic(2, 6, vec![(ones(2), int_poly(&[1])), (ones(1), int_poly(&[8, -2]))]),
        "s3" => symbolic(
            3,
            60,
            vec![
                (ones(3), int_poly(&[1])),
                (ones(2), int_poly(&[10, -2])),
                (ones(1), int_poly(&[76, -18, 2])),
            ],
        ),
        "s4-real" => symbolic(
            4,
            840,
            vec![
                (ones(4), int_poly(&[1])),
                (ones(3), int_poly(&[12, -2])),
                (ones(2), poly(&[(152, 3), (-22, 1), (2, 1)])),
                (pt(2, two.clone()), poly(&[(2, 3)])),
                // -(4/3)(n^3 - 15n^2 + 317n - 933)
                (ones(1), poly(&[(1244, 1), (-1268, 3), (20, 1), (-4, 3)])),
            ],
        ),
        "s5" => symbolic(
            5,
            15120,
            vec![
                (ones(5), int_poly(&[1])),
                (ones(4), int_poly(&[14, -2])),
                (ones(3), int_poly(&[72, -26, 2])),
                (pt(3, two.clone()), poly(&[(2, 3)])),
                // -(4/3)(n^3 - 18n^2 + 90n - 226)
                (ones(2), poly(&[(904, 3), (-120, 1), (24, 1), (-4, 3)])),
                (pt(2, two), poly(&[(16, 3), (-4, 3)])),
                // (2/3)(n^4 - 22n^3 + 2195n^2 - 15086n + 35592)
                (ones(1), poly(&[(23728, 1), (-30172, 3), (4390, 3), (-44, 3), (2, 3)])),
            ],
        ),
        "s4-gaussian" | "q8s2" => {
            return Err(AnsatzError::InvalidArgument(format!("{name} has no closed form over the rationals")))
        }
        _ => return Err(AnsatzError::UnknownBuiltin(name.to_string())),
    };
    Ok(d)
}

/// The `s = 4` formula with the pair point `(1, i)` in place of `(2, 1)`.
pub fn gaussian_s4_symbolic() -> SymbolicDecomposition<GaussianRational> {
    let i = GaussianRational::i();
    symbolic(
        4,
        840,
        vec![
            (ones(4), int_poly(&[1])),
            (ones(3), int_poly(&[12, -2])),
            (ones(2), int_poly(&[84, -22, 2])),
            (vec![GaussianRational::one(), i], int_poly(&[-6])),
            (ones(1), poly(&[(944, 1), (-368, 3), (20, 1), (-4, 3)])),
        ],
    )
}

/// The exact rational decomposition of `q_8^2` with 45 forms, built from
/// `S = x_1 + ... + x_8`:
/// `(3/256) S^4 + (8/9) sum x_j^4 - (8/9) sum (x_k - 3S/16)^4
///  + (1/3) sum_{j1 < j2} (x_j1 + x_j2 - 3S/8)^4`.
pub fn q8_squared() -> Decomposition<Rational> {
    let n = 8;
    let q = rational_from_i64;
    let mut terms = vec![Term { weight: q(3, 256), coeffs: vec![q(1, 1); n] }];
    for j in 0..n {
        let mut c = vec![q(0, 1); n];
        c[j] = q(1, 1);
        terms.push(Term { weight: q(8, 9), coeffs: c });
    }
    for k in 0..n {
        let mut c = vec![q(-3, 16); n];
        c[k] += q(1, 1);
        terms.push(Term { weight: q(-8, 9), coeffs: c });
    }
    for (a, b) in (0..n).tuple_combinations() {
        let mut c = vec![q(-3, 8); n];
        c[a] += q(1, 1);
        c[b] += q(1, 1);
        terms.push(Term { weight: q(1, 3), coeffs: c });
    }
    Decomposition::from_terms(n, 2, terms, Provenance::Builtin("q8s2".into()))
}

/// Materializes a named formula at `n`.
pub fn builtin(name: &str, n: usize) -> Result<AnyDecomposition, AnsatzError> {
    if n == 0 {
        return Err(AnsatzError::DomainError("n must be positive".into()));
    }
    let prov = Provenance::Builtin(name.to_string());
    match name {
        "q8s2" if n == 8 => Ok(q8_squared().into()),
        "q8s2" => Err(AnsatzError::DomainError(format!("q8s2 needs n = 8, got {n}"))),
        "s4-gaussian" => Ok(gaussian_s4_symbolic().at(n, prov)?.into()),
        _ => Ok(builtin_symbolic(name)?.at(n, prov)?.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ansatz::{generate_symbolic, select_points, AnsatzSpec};

    #[test]
    fn rational_builtins_match_symbolic_solve() {
        for (name, s) in [("s2", 2), ("s3", 3), ("s4-real", 4), ("s5", 5)] {
            let fresh = generate_symbolic(s, &select_points(s, 0).unwrap()).unwrap();
            assert_eq!(builtin_symbolic(name).unwrap(), fresh, "{name}");
        }
    }

    #[test]
    fn gaussian_builtin_matches_symbolic_solve() {
        let g = gaussian_s4_symbolic();
        let spec = AnsatzSpec {
            s: 4,
            blocks: vec![
                vec![ones(1)],
                vec![ones(2), vec![GaussianRational::one(), GaussianRational::i()]],
                vec![ones(3)],
                vec![ones(4)],
            ],
        };
        assert_eq!(generate_symbolic(4, &spec).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert_eq!(builtin("nope", 4), Err(AnsatzError::UnknownBuiltin("nope".into())));
        assert!(matches!(builtin("q8s2", 7), Err(AnsatzError::DomainError(_))));
        assert!(matches!(builtin("s3", 0), Err(AnsatzError::DomainError(_))));
        for name in BUILTIN_NAMES {
            let n = if *name == "q8s2" { 8 } else { 6 };
            assert!(builtin(name, n).is_ok(), "{name}");
        }
    }

    #[test]
    fn q8_size() {
        assert_eq!(q8_squared().size(), 45);
    }
}
