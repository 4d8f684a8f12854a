//! The Koszul sign rule.

use super::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn to_rational(self) -> Rational {
        match self {
            Sign::Plus => Rational::one(),
            Sign::Minus => -Rational::one(),
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        Sign::from_parity(self != other)
    }
}

impl From<Sign> for Rational {
    fn from(s: Sign) -> Rational {
        s.to_rational()
    }
}

/// `(-1)^(Σmoved · Σpassed)`: the sign of moving a block of symbols past another.
pub fn koszul_sign(degrees_moved: &[i64], degrees_passed: &[i64]) -> Sign {
    let m: i64 = degrees_moved.iter().sum();
    let p: i64 = degrees_passed.iter().sum();
    Sign::from_parity((m.rem_euclid(2) * p.rem_euclid(2)) == 1)
}
