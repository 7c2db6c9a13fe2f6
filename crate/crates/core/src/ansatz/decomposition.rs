use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use crate::arith::{FieldKind, FormField, GaussianRational, Rational};
use crate::sympoly::SignedOrbitForm;

/// Where a decomposition came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Generated { seed: u64 },
    Builtin(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Generated { .. } => write!(f, "generated"),
            Provenance::Builtin(name) => write!(f, "{name}"),
        }
    }
}

impl Provenance {
    pub fn seed(&self) -> Option<u64> {
        match self {
            Provenance::Generated { seed } => Some(*seed),
            Provenance::Builtin(_) => None,
        }
    }
}

/// `weight * (coeffs . x)^(2s)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Term<F> {
    pub weight: F,
    pub coeffs: Vec<F>,
}

/// `q_n^s = sum_t weight_t (coeffs_t . x)^(2s)`, with no zero weights and no
/// two terms whose forms differ by a unit `mu` with `mu^(2s) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition<F> {
    pub n: usize,
    pub s: u32,
    pub terms: Vec<Term<F>>,
    pub provenance: Provenance,
}

impl<F: FormField> Decomposition<F> {
    pub fn size(&self) -> usize {
        self.terms.len()
    }

    pub fn field(&self) -> FieldKind {
        F::KIND
    }

    pub fn degree(&self) -> u32 {
        2 * self.s
    }

    /// Normalizes every form, merges equal forms by adding weights, and
    /// drops terms whose weight ends up zero. First-occurrence order is kept.
    pub fn from_terms(n: usize, s: u32, raw: impl IntoIterator<Item = Term<F>>, provenance: Provenance) -> Self {
        let mut slot: HashMap<Vec<F>, usize> = HashMap::new();
        let mut merged: Vec<Term<F>> = Vec::new();
        for Term { weight, mut coeffs } in raw {
            assert_eq!(coeffs.len(), n, "form length");
            if weight.is_zero() || coeffs.iter().all(|c| c.is_zero()) {
                continue;
            }
            F::normalize_form(&mut coeffs, 2 * s);
            match slot.get(&coeffs) {
                Some(&i) => merged[i].weight = merged[i].weight.clone() + weight,
                None => {
                    slot.insert(coeffs.clone(), merged.len());
                    merged.push(Term { weight, coeffs });
                }
            }
        }
        merged.retain(|t| !t.weight.is_zero());
        Self { n, s, terms: merged, provenance }
    }

    /// Materializes weighted families: each `(weight, point)` contributes
    /// every signed arrangement of `point` on every support of its size.
    pub fn from_families(n: usize, s: u32, families: &[(F, Vec<F>)], provenance: Provenance) -> Self {
        let raw = families
            .iter()
            .filter(|(w, _)| !w.is_zero())
            .flat_map(|(w, point)| {
                (0..n).combinations(point.len()).flat_map(move |support| {
                    SignedOrbitForm::family(point, &support)
                        .into_iter()
                        .map(move |form| Term { weight: w.clone(), coeffs: form.coeffs(n) })
                })
            });
        Self::from_terms(n, s, raw, provenance)
    }
}

/// A decomposition over either exact field.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyDecomposition {
    Rational(Decomposition<Rational>),
    Gaussian(Decomposition<GaussianRational>),
}

impl AnyDecomposition {
    pub fn n(&self) -> usize {
        match self {
            Self::Rational(d) => d.n,
            Self::Gaussian(d) => d.n,
        }
    }

    pub fn s(&self) -> u32 {
        match self {
            Self::Rational(d) => d.s,
            Self::Gaussian(d) => d.s,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Self::Rational(d) => d.size(),
            Self::Gaussian(d) => d.size(),
        }
    }

    pub fn field(&self) -> FieldKind {
        match self {
            Self::Rational(_) => FieldKind::Rational,
            Self::Gaussian(_) => FieldKind::Gaussian,
        }
    }

    pub fn provenance(&self) -> &Provenance {
        match self {
            Self::Rational(d) => &d.provenance,
            Self::Gaussian(d) => &d.provenance,
        }
    }

    pub fn as_rational(&self) -> Option<&Decomposition<Rational>> {
        match self {
            Self::Rational(d) => Some(d),
            Self::Gaussian(_) => None,
        }
    }

    /// The same terms viewed over `Q(i)`.
    pub fn to_gaussian(&self) -> Decomposition<GaussianRational> {
        match self {
            Self::Gaussian(d) => d.clone(),
            Self::Rational(d) => Decomposition {
                n: d.n,
                s: d.s,
                terms: d
                    .terms
                    .iter()
                    .map(|t| Term {
                        weight: GaussianRational::real(t.weight.clone()),
                        coeffs: t.coeffs.iter().cloned().map(GaussianRational::real).collect(),
                    })
                    .collect(),
                provenance: d.provenance.clone(),
            },
        }
    }
}

impl From<Decomposition<Rational>> for AnyDecomposition {
    fn from(d: Decomposition<Rational>) -> Self {
        Self::Rational(d)
    }
}

impl From<Decomposition<GaussianRational>> for AnyDecomposition {
    fn from(d: Decomposition<GaussianRational>) -> Self {
        Self::Gaussian(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational_from_i64;

    fn q(a: i64) -> Rational {
        rational_from_i64(a, 1)
    }

    #[test]
    fn opposite_forms_merge() {
        let terms = vec![
            Term { weight: q(1), coeffs: vec![q(1), q(-1)] },
            Term { weight: q(2), coeffs: vec![q(-1), q(1)] },
            Term { weight: q(5), coeffs: vec![q(0), q(0)] },
            Term { weight: q(1), coeffs: vec![q(1), q(1)] },
            Term { weight: q(-1), coeffs: vec![q(-1), q(-1)] },
        ];
        let d = Decomposition::from_terms(2, 2, terms, Provenance::Builtin("t".into()));
        assert_eq!(d.size(), 1);
        assert_eq!(d.terms[0], Term { weight: q(3), coeffs: vec![q(1), q(-1)] });
    }

    #[test]
    fn gaussian_quarter_turns_merge_at_degree_eight_only() {
        let one = GaussianRational::real(q(1));
        let i = GaussianRational::i();
        let fam = vec![(one.clone(), vec![one.clone(), i.clone()])];
        let d8 = Decomposition::from_families(2, 4, &fam, Provenance::Builtin("t".into()));
        assert_eq!(d8.size(), 2);
        assert!(d8.terms.iter().all(|t| t.weight == GaussianRational::real(q(2))));
        let d6 = Decomposition::from_families(2, 3, &fam, Provenance::Builtin("t".into()));
        assert_eq!(d6.size(), 4);
    }

    #[test]
    fn family_sizes() {
        let fam = vec![(q(1), vec![q(2), q(1)])];
        let d = Decomposition::from_families(4, 4, &fam, Provenance::Generated { seed: 0 });
        // 2 arrangements x 2 signs x C(4,2) supports
        assert_eq!(d.size(), 24);
        let fam = vec![(q(1), vec![q(1); 3])];
        assert_eq!(Decomposition::from_families(5, 3, &fam, Provenance::Generated { seed: 0 }).size(), 40);
    }
}
