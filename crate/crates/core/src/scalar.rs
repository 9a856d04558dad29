//! Exact rational scalars.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::GeomError;

/// An exact rational number kept in lowest terms with a positive denominator.
///
/// Apartness on scalars is `a - b != 0`, which is decidable here; the
/// negation of apartness therefore always yields equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, GeomError> {
        let den = den.into();
        if den.is_zero() {
            return Err(GeomError::ZeroDenominator);
        }
        Ok(Scalar(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Scalar(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// `self` and `other` differ as exact rationals.
    pub fn apart(&self, other: &Scalar) -> bool {
        !(&self.0 - &other.0).is_zero()
    }

    pub fn recip(&self) -> Option<Scalar> {
        if self.is_zero() {
            None
        } else {
            Some(Scalar(self.0.recip()))
        }
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    /// Nearest `f64`, for drawing only.
    pub fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self.0).unwrap_or(f64::NAN)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar(r)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::from_integer(n)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_integer(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Scalar {
    type Err = GeomError;

    /// Accepts `n` or `p/q` with optional leading sign on the numerator.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || GeomError::BadLiteral(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Scalar::new(n, d)
            }
            None => Ok(Scalar::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$m(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero, as `BigRational` does.
    fn div(self, rhs: &Scalar) -> Scalar {
        Scalar(&self.0 / &rhs.0)
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 / rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let s = Scalar::new(6, -4).unwrap();
        assert_eq!(s.numer(), &BigInt::from(-3));
        assert_eq!(s.denom(), &BigInt::from(2));
        assert_eq!(s.to_string(), "-3/2");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(Scalar::new(1, 0), Err(GeomError::ZeroDenominator)));
        assert!("3/0".parse::<Scalar>().is_err());
    }

    #[test]
    fn parse_literals() {
        assert_eq!("-7/14".parse::<Scalar>().unwrap(), Scalar::new(-1, 2).unwrap());
        assert_eq!("12".parse::<Scalar>().unwrap(), Scalar::from(12));
        assert!("1.5".parse::<Scalar>().is_err());
    }

    #[test]
    fn apartness_is_tight() {
        let a = Scalar::new(1, 3).unwrap();
        let b = Scalar::new(2, 6).unwrap();
        assert!(!a.apart(&b));
        assert_eq!(a, b);
        assert!(a.apart(&Scalar::zero()));
    }
}
