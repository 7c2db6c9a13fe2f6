use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{ArithError, FieldKind, FormField, Scalar};

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator (zero is `0/1`).
pub type Rational = BigRational;

pub fn rational_from_i64(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"` with decimal integers `p`, `q` and `q != 0`.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let bad = || ArithError::Parse(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

impl Scalar for Rational {
    fn from_bigint(v: BigInt) -> Self {
        Rational::from_integer(v)
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            Err(ArithError::DivisionByZero)
        } else {
            Ok(self / rhs)
        }
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl FormField for Rational {
    const KIND: FieldKind = FieldKind::Rational;

    fn normalize_form(coeffs: &mut [Self], _degree: u32) {
        // Only the units +1 and -1 exist; even powers cannot tell them apart.
        if let Some(first) = coeffs.iter().find(|c| !c.is_zero()) {
            if first.is_negative() {
                for c in coeffs.iter_mut() {
                    *c = -c.clone();
                }
            }
        }
    }

    fn parts(&self) -> (Rational, Rational) {
        (self.clone(), Rational::zero())
    }

    fn from_parts(re: Rational, im: Rational) -> Option<Self> {
        im.is_zero().then_some(re)
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}
