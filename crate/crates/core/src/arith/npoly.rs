use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ArithError, Rational, Scalar};

/// A polynomial in the formal symbol `n` with rational coefficients.
///
/// `coeffs[d]` is the coefficient of `n^d`. The vector never ends in a zero,
/// so the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NPoly {
    coeffs: Vec<Rational>,
}

impl NPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `n`.
    pub fn n() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    /// Horner evaluation at `n = x`.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, n: i64) -> Rational {
        self.eval(&Rational::from_integer(n.into()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// `C(n + shift, k)` as a polynomial: `prod_{i<k} (n + shift - i) / k!`.
    pub fn binomial(shift: i64, k: u32) -> Self {
        let mut p = Self::one();
        let mut fact = BigInt::one();
        for i in 0..k as i64 {
            p = p * Self::from_i64s(&[shift - i, 1]);
            fact *= i + 1;
        }
        p.scale(&Rational::new(BigInt::one(), fact))
    }
}

/// Falling-factorial binomial `C(top, k)` for any integer `top`, matching
/// [`NPoly::binomial`] evaluated at an integer.
#[cfg(test)]
fn poly_binomial(top: i64, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= top - i;
        den *= i + 1;
    }
    num / den
}

impl fmt::Display for NPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            let coeff = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match (d, unit) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => write!(f, "n")?,
                (1, false) => write!(f, "{coeff}n")?,
                (_, true) => write!(f, "n^{d}")?,
                (_, false) => write!(f, "{coeff}n^{d}")?,
            }
        }
        Ok(())
    }
}

impl Add for NPoly {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a += b;
        }
        Self::new(long)
    }
}

impl Sub for NPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for NPoly {
    type Output = Self;
    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Mul for NPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

impl Zero for NPoly {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for NPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Scalar for NPoly {
    fn from_bigint(v: BigInt) -> Self {
        Self::constant(Rational::from_integer(v))
    }

    /// Division is only defined by nonzero constants; anything else would
    /// leave the polynomial ring and is reported as a contract violation.
    fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if !rhs.is_constant() {
            return Err(ArithError::ContractViolation(format!(
                "division by the non-constant polynomial {rhs}"
            )));
        }
        let c = rhs.constant_term();
        Ok(Self::new(self.coeffs.iter().map(|a| a / &c).collect()))
    }

    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }
}
