//! Exact rational scalars.
//!
//! Every coefficient in this crate is a [`Scalar`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. There is no
//! floating point anywhere in the library.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den` reduced to lowest terms. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Scalar(self.0.recip())
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    /// Binomial coefficient `C(r, n)` for integer `r` (possibly negative),
    /// computed as `r(r-1)...(r-n+1) / n!`.
    pub fn binomial(r: i64, n: u32) -> Self {
        let mut acc = Scalar::one();
        for k in 0..n as i64 {
            acc *= Scalar::from_int(r - k);
            acc *= Scalar::ratio(1, k + 1);
        }
        acc
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

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses `"p"` or `"p/q"` with arbitrary-precision integers.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::BadCoefficient(s.to_string());
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                Ok(Scalar(BigRational::from_integer(n)))
            }
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar(BigRational::new(p, q)))
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

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

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        self.0 -= rhs.0;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        self.0 *= rhs.0;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_display() {
        let s = Scalar::ratio(6, -4);
        assert_eq!(s.to_string(), "-3/2");
        assert_eq!("-3/2".parse::<Scalar>().unwrap(), s);
        assert_eq!("7".parse::<Scalar>().unwrap(), Scalar::from_int(7));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
    }

    #[test]
    fn binomial_negative_upper_index() {
        // C(r, n) = (-1)^n C(-r+n-1, n) for r < 0
        for r in -6i64..0 {
            for n in 0u32..5 {
                let direct = Scalar::binomial(r, n);
                let sign = if n % 2 == 0 { 1 } else { -1 };
                let flipped = Scalar::from_int(sign) * Scalar::binomial(-r + n as i64 - 1, n);
                assert_eq!(direct, flipped, "r={r} n={n}");
            }
        }
        assert_eq!(Scalar::binomial(3, 2), Scalar::from_int(3));
        assert_eq!(Scalar::binomial(2, 3), Scalar::zero());
        assert_eq!(Scalar::binomial(-1, 3), Scalar::from_int(-1));
    }
}
