//! Exact rational coefficients.
//!
//! A thin wrapper over `num_rational::Rational64` whose arithmetic is checked:
//! an overflow aborts with a panic instead of wrapping, so a coefficient is
//! either exact or the computation stops.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};

use crate::error::Error;

/// An exact rational number in lowest terms with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(Rational64);

impl Rational {
    pub const fn from_integer(n: i64) -> Self {
        Rational(Rational64::new_raw(n, 1))
    }

    /// Builds `num / den`, reduced. Errors on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(Rational64::new(num, den)))
    }

    pub fn zero() -> Self {
        Rational(Rational64::zero())
    }

    pub fn one() -> Self {
        Rational(Rational64::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(
            self.0
                .checked_add(&rhs.0)
                .expect("rational overflow in addition"),
        )
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(
            self.0
                .checked_sub(&rhs.0)
                .expect("rational overflow in subtraction"),
        )
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(
            self.0
                .checked_mul(&rhs.0)
                .expect("rational overflow in multiplication"),
        )
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(
            self.0
                .checked_div(&rhs.0)
                .expect("rational overflow in division"),
        )
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(
            Rational64::zero()
                .checked_sub(&self.0)
                .expect("rational overflow in negation"),
        )
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = *self + rhs;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        *self = *self - rhs;
    }
}

impl MulAssign for Rational {
    fn mul_assign(&mut self, rhs: Rational) {
        *self = *self * rhs;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse {
            line: 0,
            col: 0,
            message: format!("invalid rational '{s}'"),
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                Rational::new(n, d)
            }
            None => Ok(Rational::from_integer(s.trim().parse().map_err(|_| bad())?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let q = Rational::new(6, -4).unwrap();
        assert_eq!(q.numer(), -3);
        assert_eq!(q.denom(), 2);
        assert_eq!(q.to_string(), "-3/2");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(Rational::new(1, 0), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn parse_and_arith() {
        let a: Rational = "3/4".parse().unwrap();
        let b: Rational = "-1".parse().unwrap();
        assert_eq!((a + b).to_string(), "-1/4");
        assert_eq!((a * b).to_string(), "-3/4");
        assert_eq!((a / a), Rational::one());
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_loud() {
        let big = Rational::from_integer(i64::MAX);
        let _ = big + Rational::one();
    }
}
