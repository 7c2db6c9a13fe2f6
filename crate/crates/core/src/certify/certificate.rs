//! Canonical JSON certificates.
//!
//! Keys are sorted, scalars are exact `"p/q"` strings (`{"im", "re"}` objects
//! over `Q(i)`), and weights are stored multiplied by a global `scale`, the
//! least common multiple of all weight denominators. Serializing a parsed
//! certificate reproduces the input bytes exactly.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CertifyError;
use crate::ansatz::{AnyDecomposition, Decomposition, Provenance, Term};
use crate::arith::{parse_rational, FieldKind, FormField, GaussianRational, Rational};
use crate::bounds::BoundsReport;

pub const CERTIFICATE_VERSION: u64 = 1;

/// Bound values at the certificate's `(n, s)`, for human inspection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsSnapshot {
    pub generic_rank: Rational,
    pub lower: BigUint,
    pub subgeneric: bool,
    pub upper_thm11: BigUint,
    pub upper_thm42: BigUint,
}

impl From<&BoundsReport> for BoundsSnapshot {
    fn from(r: &BoundsReport) -> Self {
        Self {
            generic_rank: r.generic_rank_exact.clone(),
            lower: r.lower_catalecticant.clone(),
            subgeneric: r.subgeneric,
            upper_thm11: r.upper_thm11.clone(),
            upper_thm42: r.upper_thm42.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertMeta {
    pub bounds: Option<BoundsSnapshot>,
    pub provenance: Provenance,
    pub size: usize,
}

/// A term with its weight multiplied by the certificate scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertTerm {
    pub weight: GaussianRational,
    pub coeffs: Vec<GaussianRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub version: u64,
    pub n: usize,
    pub s: u32,
    pub field: FieldKind,
    pub scale: Rational,
    pub terms: Vec<CertTerm>,
    pub meta: CertMeta,
}

fn lift<F: FormField>(x: &F) -> GaussianRational {
    let (re, im) = x.parts();
    GaussianRational::new(re, im)
}

impl Certificate {
    pub fn from_decomposition(d: &AnyDecomposition) -> Self {
        fn build<F: FormField>(d: &Decomposition<F>) -> Certificate {
            let scale = d.terms.iter().fold(BigInt::one(), |acc, t| {
                let (re, im) = t.weight.parts();
                acc.lcm(re.denom()).lcm(im.denom())
            });
            let scale = Rational::from_integer(scale);
            let terms = d
                .terms
                .iter()
                .map(|t| {
                    let w = lift(&t.weight);
                    CertTerm {
                        weight: GaussianRational::new(w.re * &scale, w.im * &scale),
                        coeffs: t.coeffs.iter().map(lift).collect(),
                    }
                })
                .collect();
            let report = BoundsReport::new(d.n as u64, d.s, Some(d.size() as u64));
            Certificate {
                version: CERTIFICATE_VERSION,
                n: d.n,
                s: d.s,
                field: F::KIND,
                scale,
                terms,
                meta: CertMeta {
                    bounds: Some(BoundsSnapshot::from(&report)),
                    provenance: d.provenance.clone(),
                    size: d.size(),
                },
            }
        }
        match d {
            AnyDecomposition::Rational(d) => build(d),
            AnyDecomposition::Gaussian(d) => build(d),
        }
    }

    /// Recovers the decomposition with unscaled weights, term order kept.
    pub fn to_decomposition(&self) -> Result<AnyDecomposition, CertifyError> {
        if self.scale.is_zero() {
            return Err(CertifyError::Malformed("scale is zero".into()));
        }
        if self.meta.size != self.terms.len() {
            return Err(CertifyError::Malformed(format!(
                "meta.size is {} but there are {} terms",
                self.meta.size,
                self.terms.len()
            )));
        }
        if self.n == 0 || self.s == 0 {
            return Err(CertifyError::Malformed("n and s must be positive".into()));
        }
        for (i, t) in self.terms.iter().enumerate() {
            if t.coeffs.len() != self.n {
                return Err(CertifyError::Malformed(format!(
                    "term {i} has {} coefficients, expected {}",
                    t.coeffs.len(),
                    self.n
                )));
            }
        }
        let unscale = |w: &GaussianRational| GaussianRational::new(&w.re / &self.scale, &w.im / &self.scale);
        let gaussian: Vec<Term<GaussianRational>> = self
            .terms
            .iter()
            .map(|t| Term { weight: unscale(&t.weight), coeffs: t.coeffs.clone() })
            .collect();
        let prov = self.meta.provenance.clone();
        match self.field {
            FieldKind::Gaussian => {
                Ok(Decomposition { n: self.n, s: self.s, terms: gaussian, provenance: prov }.into())
            }
            FieldKind::Rational => {
                let real = |x: &GaussianRational| {
                    x.as_rational()
                        .ok_or_else(|| CertifyError::Malformed(format!("non-real scalar {x} in a rational certificate")))
                };
                let terms = gaussian
                    .iter()
                    .map(|t| {
                        Ok(Term {
                            weight: real(&t.weight)?,
                            coeffs: t.coeffs.iter().map(real).collect::<Result<_, _>>()?,
                        })
                    })
                    .collect::<Result<Vec<_>, CertifyError>>()?;
                Ok(Decomposition { n: self.n, s: self.s, terms, provenance: prov }.into())
            }
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.to_wire()).expect("in-memory serialization");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, CertifyError> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(parse_error)?;
        match value.get("version").and_then(serde_json::Value::as_u64) {
            Some(CERTIFICATE_VERSION) => {}
            Some(v) => return Err(CertifyError::VersionUnsupported(v)),
            None => return Err(CertifyError::Malformed("missing integer field \"version\"".into())),
        }
        let wire: Wire = serde_json::from_str(text).map_err(parse_error)?;
        Self::from_wire(wire)
    }

    fn to_wire(&self) -> Wire {
        let scalar = |x: &GaussianRational| match self.field {
            FieldKind::Rational => WireScalar::Real(x.re.clone()),
            FieldKind::Gaussian => WireScalar::Complex(x.clone()),
        };
        Wire {
            field: self.field.as_str().to_string(),
            meta: WireMeta {
                bounds: self.meta.bounds.as_ref().map(|b| WireBounds {
                    generic_rank: RatStr(b.generic_rank.clone()),
                    lower: b.lower.to_string(),
                    subgeneric: b.subgeneric,
                    upper_thm11: b.upper_thm11.to_string(),
                    upper_thm42: b.upper_thm42.to_string(),
                }),
                provenance: self.meta.provenance.to_string(),
                seed: self.meta.provenance.seed(),
                size: self.meta.size,
            },
            n: self.n,
            s: self.s,
            scale: RatStr(self.scale.clone()),
            terms: self
                .terms
                .iter()
                .map(|t| WireTerm { coeffs: t.coeffs.iter().map(scalar).collect(), weight: scalar(&t.weight) })
                .collect(),
            version: self.version,
        }
    }

    fn from_wire(w: Wire) -> Result<Self, CertifyError> {
        let field = FieldKind::parse(&w.field)
            .ok_or_else(|| CertifyError::Malformed(format!("unknown field {:?}", w.field)))?;
        let provenance = match (w.meta.provenance.as_str(), w.meta.seed) {
            ("generated", Some(seed)) => Provenance::Generated { seed },
            ("generated", None) => return Err(CertifyError::Malformed("generated certificate without seed".into())),
            (name, None) => Provenance::Builtin(name.to_string()),
            (name, Some(_)) => return Err(CertifyError::Malformed(format!("builtin {name:?} carries a seed"))),
        };
        let bounds = match w.meta.bounds {
            None => None,
            Some(b) => {
                let int = |s: &str| {
                    s.parse::<BigUint>().map_err(|_| CertifyError::Malformed(format!("bad integer {s:?} in bounds")))
                };
                Some(BoundsSnapshot {
                    generic_rank: b.generic_rank.0,
                    lower: int(&b.lower)?,
                    subgeneric: b.subgeneric,
                    upper_thm11: int(&b.upper_thm11)?,
                    upper_thm42: int(&b.upper_thm42)?,
                })
            }
        };
        let terms = w
            .terms
            .into_iter()
            .map(|t| CertTerm { weight: t.weight.into_gaussian(), coeffs: t.coeffs.into_iter().map(WireScalar::into_gaussian).collect() })
            .collect();
        Ok(Self {
            version: w.version,
            n: w.n,
            s: w.s,
            field,
            scale: w.scale.0,
            terms,
            meta: CertMeta { bounds, provenance, size: w.meta.size },
        })
    }
}

fn parse_error(e: serde_json::Error) -> CertifyError {
    CertifyError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
}

/// Canonical certificate bytes for `d`.
pub fn serialize(d: &AnyDecomposition) -> Vec<u8> {
    Certificate::from_decomposition(d).to_json().into_bytes()
}

pub fn deserialize(bytes: &[u8]) -> Result<AnyDecomposition, CertifyError> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let before = &bytes[..e.valid_up_to()];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let column = before.len() - before.iter().rposition(|&b| b == b'\n').map_or(0, |p| p + 1) + 1;
        CertifyError::Parse { line, column, message: "invalid UTF-8".into() }
    })?;
    Certificate::from_json(text)?.to_decomposition()
}

// Wire structs declare fields alphabetically so the emitted keys are sorted.

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Wire {
    field: String,
    meta: WireMeta,
    n: usize,
    s: u32,
    scale: RatStr,
    terms: Vec<WireTerm>,
    version: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireMeta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bounds: Option<WireBounds>,
    provenance: String,
    seed: Option<u64>,
    size: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireBounds {
    generic_rank: RatStr,
    lower: String,
    subgeneric: bool,
    upper_thm11: String,
    upper_thm42: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireTerm {
    coeffs: Vec<WireScalar>,
    weight: WireScalar,
}

/// A rational as a `"p/q"` string. Parse failures become serde errors so
/// they carry the reader position.
struct RatStr(Rational);

impl Serialize for RatStr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for RatStr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map(RatStr).map_err(|_| de::Error::custom(format!("invalid rational {s:?}")))
    }
}

enum WireScalar {
    Real(Rational),
    Complex(GaussianRational),
}

impl WireScalar {
    fn into_gaussian(self) -> GaussianRational {
        match self {
            WireScalar::Real(r) => GaussianRational::real(r),
            WireScalar::Complex(z) => z,
        }
    }
}

impl Serialize for WireScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            WireScalar::Real(r) => s.serialize_str(&r.to_string()),
            WireScalar::Complex(z) => {
                let mut st = s.serialize_struct("Gaussian", 2)?;
                st.serialize_field("im", &z.im.to_string())?;
                st.serialize_field("re", &z.re.to_string())?;
                st.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for WireScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = WireScalar;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a \"p/q\" string or an object with \"im\" and \"re\"")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<WireScalar, E> {
                parse_rational(v).map(WireScalar::Real).map_err(|_| E::custom(format!("invalid rational {v:?}")))
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<WireScalar, A::Error> {
                let (mut re, mut im) = (None, None);
                while let Some(key) = map.next_key::<String>()? {
                    let slot = match key.as_str() {
                        "re" => &mut re,
                        "im" => &mut im,
                        other => return Err(de::Error::unknown_field(other, &["im", "re"])),
                    };
                    if slot.is_some() {
                        return Err(de::Error::custom(format!("duplicate key {key:?}")));
                    }
                    *slot = Some(map.next_value::<RatStr>()?.0);
                }
                match (re, im) {
                    (Some(re), Some(im)) => Ok(WireScalar::Complex(GaussianRational::new(re, im))),
                    (None, _) => Err(de::Error::missing_field("re")),
                    (_, None) => Err(de::Error::missing_field("im")),
                }
            }
        }
        d.deserialize_any(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ansatz::{builtin, generate};
    use crate::certify::verify_any;

    #[test]
    fn round_trip_is_byte_identical() {
        for d in [builtin("s3", 5).unwrap(), builtin("s4-gaussian", 4).unwrap(), generate(4, 3, 7).unwrap().into()] {
            let bytes = serialize(&d);
            let back = deserialize(&bytes).unwrap();
            assert_eq!(back, d);
            assert_eq!(serialize(&back), bytes);
            assert!(verify_any(&back).ok);
        }
    }

    #[test]
    fn scale_clears_denominators() {
        let c = Certificate::from_decomposition(&builtin("s3", 5).unwrap());
        assert_eq!(c.scale, Rational::from_integer(60.into()));
        assert!(c.terms.iter().all(|t| t.weight.re.is_integer() && t.weight.im.is_zero()));
        let json = c.to_json();
        assert!(json.contains("\"scale\": \"60\""));
        let keys: Vec<usize> = ["\"field\"", "\"meta\"", "\"n\"", "\"s\"", "\"scale\"", "\"terms\"", "\"version\""]
            .iter()
            .map(|k| json.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn bad_rational_has_position() {
        let d = builtin("s2", 3).unwrap();
        let text = String::from_utf8(serialize(&d)).unwrap();
        let i = text.find("\"weight\": \"").unwrap() + "\"weight\": \"".len();
        let end = i + text[i..].find('"').unwrap();
        let bad = format!("{}1/0{}", &text[..i], &text[end..]);
        let expected_line = bad[..i].matches('\n').count() + 1;
        match deserialize(bad.as_bytes()) {
            Err(CertifyError::Parse { line, .. }) => assert_eq!(line, expected_line),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn version_and_syntax() {
        let d = builtin("s2", 3).unwrap();
        let text = String::from_utf8(serialize(&d)).unwrap().replace("\"version\": 1", "\"version\": 2");
        assert_eq!(deserialize(text.as_bytes()), Err(CertifyError::VersionUnsupported(2)));
        match deserialize(b"{\n  \"n\": 2,\n  oops\n}") {
            Err(CertifyError::Parse { line, column, .. }) => assert_eq!((line, column), (3, 3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn hand_written_unit_identity() {
        let text = r#"{
  "field": "rational",
  "meta": {"provenance": "hand", "seed": null, "size": 2},
  "n": 2,
  "s": 1,
  "scale": "1",
  "terms": [
    {"coeffs": ["1", "0"], "weight": "1"},
    {"coeffs": ["0", "1"], "weight": "1"}
  ],
  "version": 1
}"#;
        let d = deserialize(text.as_bytes()).unwrap();
        assert_eq!(d.size(), 2);
        assert!(verify_any(&d).ok);
    }

    #[test]
    fn malformed_shapes() {
        let text = r#"{"field": "rational", "meta": {"provenance": "x", "seed": null, "size": 1}, "n": 2, "s": 1,
            "scale": "1", "terms": [{"coeffs": ["1"], "weight": "1"}], "version": 1}"#;
        assert!(matches!(deserialize(text.as_bytes()), Err(CertifyError::Malformed(_))));
        let text = text.replace("[\"1\"]", "[{\"re\": \"1\", \"im\": \"1\"}, \"0\"]");
        assert!(matches!(deserialize(text.as_bytes()), Err(CertifyError::Malformed(_))));
    }
}
