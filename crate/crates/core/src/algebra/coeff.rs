//! Coefficient rings.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact Gaussian rational, the default coefficient ring.
pub type ExactComplex = Complex<BigRational>;

/// Ring contract used by [`Multivector`](super::Multivector).
///
/// `try_mul` is fallible because the formal ring only admits the
/// operator-times-field products that first-order expansions need.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn try_mul(&self, rhs: &Self) -> Result<Self>;
    /// Complex conjugation; identity on real rings.
    fn conjugate(&self) -> Self;
    fn from_i64(n: i64) -> Self;

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }

    fn signed(&self, sign: i8) -> Self {
        if sign < 0 {
            self.negate()
        } else {
            self.clone()
        }
    }
}

/// Real scalar fields the complex coefficient rings are built on.
pub trait Real:
    Clone + Num + Neg<Output = Self> + PartialEq + fmt::Debug + Send + Sync + 'static
{
    fn from_i64(n: i64) -> Self;
    fn half() -> Self {
        Self::one() / (Self::one() + Self::one())
    }
}

impl Real for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

impl Real for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl<R: Real> Coefficient for Complex<R> {
    fn zero() -> Self {
        Complex::new(R::zero(), R::zero())
    }
    fn one() -> Self {
        Complex::new(R::one(), R::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }
    fn negate(&self) -> Self {
        -self.clone()
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.clone())
    }
    fn conjugate(&self) -> Self {
        self.conj()
    }
    fn from_i64(n: i64) -> Self {
        Complex::new(<R as Real>::from_i64(n), R::zero())
    }
}

/// Rational `n/d`.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact complex integer `re + i·im`.
pub fn exact(re: i64, im: i64) -> ExactComplex {
    Complex::new(rational(re, 1), rational(im, 1))
}

pub fn exact_ratio(re: BigRational, im: BigRational) -> ExactComplex {
    Complex::new(re, im)
}

pub fn imaginary_unit<R: Real>() -> Complex<R> {
    Complex::new(R::zero(), R::one())
}

/// Formats a rational as `"num/den"`.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Lossy conversion from exact to floating complex.
pub fn to_f64(c: &ExactComplex) -> Complex<f64> {
    use num_traits::ToPrimitive;
    Complex::new(
        c.re.to_f64().unwrap_or(f64::NAN),
        c.im.to_f64().unwrap_or(f64::NAN),
    )
}

/// Compact human-readable form: `3`, `-1/2`, `i/2`, `(1+2i)`.
pub fn display_exact(c: &ExactComplex) -> String {
    fn mag(r: &BigRational) -> String {
        if r.is_integer() {
            r.numer().abs().to_string()
        } else {
            format!("{}/{}", r.numer().abs(), r.denom())
        }
    }
    fn imag(r: &BigRational) -> String {
        if r.abs().is_one() {
            "i".into()
        } else if r.is_integer() {
            format!("{}i", r.numer().abs())
        } else if r.numer().abs().is_one() {
            format!("i/{}", r.denom())
        } else {
            format!("{}i/{}", r.numer().abs(), r.denom())
        }
    }
    let (re, im) = (&c.re, &c.im);
    match (re.is_zero(), im.is_zero()) {
        (_, true) => format!("{}{}", if re.is_negative() { "-" } else { "" }, mag(re)),
        (true, false) => format!("{}{}", if im.is_negative() { "-" } else { "" }, imag(im)),
        (false, false) => format!(
            "({}{}{}{})",
            if re.is_negative() { "-" } else { "" },
            mag(re),
            if im.is_negative() { "-" } else { "+" },
            imag(im)
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        let r = rational(-6, 4);
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(parse_rational("-3/2").unwrap(), r);
        assert_eq!(parse_rational("7").unwrap(), rational(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(display_exact(&exact(3, 0)), "3");
        assert_eq!(display_exact(&exact(0, -1)), "-i");
        assert_eq!(
            display_exact(&Complex::new(rational(0, 1), rational(1, 2))),
            "i/2"
        );
        assert_eq!(display_exact(&exact(1, -2)), "(1-2i)");
    }

    #[test]
    fn conjugation_is_identity_on_reals() {
        let c = exact(5, 0);
        assert_eq!(c.conjugate(), c);
        assert_eq!(exact(1, 1).conjugate(), exact(1, -1));
    }
}
