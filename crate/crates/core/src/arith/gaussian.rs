use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ArithError, FieldKind, FormField, Rational, Scalar};

/// An element `re + im*i` of `Q(i)`. Equality is componentwise; there is no
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        Self { re: Rational::zero(), im: Rational::one() }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.is_negative() => {
                write!(f, "{}-{}i", self.re, -self.im.clone())
            }
            (false, false) => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        Self { re, im }
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::real(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl Scalar for GaussianRational {
    fn from_bigint(v: BigInt) -> Self {
        Self::real(Rational::from_integer(v))
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let den = rhs.norm_sqr();
        let num = self.clone() * rhs.conj();
        Ok(Self { re: num.re / &den, im: num.im / den })
    }

    fn from_rational(r: &Rational) -> Self {
        Self::real(r.clone())
    }
}

impl FormField for GaussianRational {
    const KIND: FieldKind = FieldKind::Gaussian;

    fn normalize_form(coeffs: &mut [Self], degree: u32) {
        let Some(first) = coeffs.iter().find(|c| !c.is_zero()).cloned() else {
            return;
        };
        // Units with mu^degree = 1: {1, -1} always, {i, -i} as well when 4 | degree.
        let quarter_turns = degree.is_multiple_of(4);
        let unit = if quarter_turns {
            // Rotate `first` into the quadrant re > 0, im >= 0.
            if first.re.is_positive() && !first.im.is_negative() {
                Self::one()
            } else if !first.re.is_positive() && first.im.is_positive() {
                // multiply by -i
                -Self::i()
            } else if first.re.is_negative() && !first.im.is_positive() {
                -Self::one()
            } else {
                Self::i()
            }
        } else if first.re.is_negative() || (first.re.is_zero() && first.im.is_negative()) {
            -Self::one()
        } else {
            Self::one()
        };
        if unit != Self::one() {
            for c in coeffs.iter_mut() {
                *c = c.clone() * unit.clone();
            }
        }
    }

    fn parts(&self) -> (Rational, Rational) {
        (self.re.clone(), self.im.clone())
    }

    fn from_parts(re: Rational, im: Rational) -> Option<Self> {
        Some(Self { re, im })
    }
}
