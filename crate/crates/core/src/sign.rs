use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};
use crate::scalar::{lit, Scalar};

/// A unit `±1`, used for ε and for the `±` in the family parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    /// `(−1)ⁿ`.
    pub fn parity(n: usize) -> Sign {
        if n.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn to_scalar<T: Scalar>(self) -> T {
        lit(self.to_i64())
    }

    pub fn apply<T: Scalar>(self, value: T) -> T {
        match self {
            Sign::Plus => value,
            Sign::Minus => -value,
        }
    }

    pub fn from_scalar<T: Scalar>(value: &T) -> Result<Sign> {
        if value.is_one() {
            Ok(Sign::Plus)
        } else if (-value.clone()).is_one() {
            Ok(Sign::Minus)
        } else {
            Err(Error::Domain(format!("expected +1 or -1, got {value}")))
        }
    }
}

impl TryFrom<i64> for Sign {
    type Error = Error;

    fn try_from(value: i64) -> Result<Sign> {
        match value {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::Domain(format!("expected +1 or -1, got {other}"))),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}
