use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{add, mul, parse_int, Scalar};

/// A reduced fraction `num/den` on the projective line ℚ ∪ {∞}.
///
/// Invariants: `gcd(|num|, den) = 1`; `den ≥ 0`; `den = 0` only for the single
/// point ∞, which is stored as `1/0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedRational<T> {
    num: T,
    den: T,
}

impl<T: Scalar> ExtendedRational<T> {
    /// Build and reduce `num/den`. `0/0` is the only rejected input; any
    /// `n/0` with `n ≠ 0` is ∞.
    pub fn new(num: T, den: T) -> Result<Self> {
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::Domain(
                    "0/0 is not a point of the projective line".into(),
                ));
            }
            return Ok(Self::infinity());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g.clone(), den / g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(ExtendedRational { num, den })
    }

    pub fn infinity() -> Self {
        ExtendedRational {
            num: T::one(),
            den: T::zero(),
        }
    }

    pub fn from_integer(n: T) -> Self {
        ExtendedRational {
            num: n,
            den: T::one(),
        }
    }

    pub fn numer(&self) -> &T {
        &self.num
    }

    pub fn denom(&self) -> &T {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Strictly positive finite value.
    pub fn is_positive(&self) -> bool {
        !self.is_infinite() && self.num.is_positive()
    }

    /// `1/x` with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> Self {
        if self.is_infinite() {
            return Self::from_integer(T::zero());
        }
        if self.num.is_zero() {
            return Self::infinity();
        }
        if self.num.is_negative() {
            ExtendedRational {
                num: -self.den.clone(),
                den: -self.num.clone(),
            }
        } else {
            ExtendedRational {
                num: self.den.clone(),
                den: self.num.clone(),
            }
        }
    }

    /// `a + x`, with `a + ∞ = ∞`. Reduction is preserved since
    /// `gcd(a·den + num, den) = gcd(num, den)`.
    pub fn add_integer(&self, a: &T) -> Self {
        if self.is_infinite() {
            return Self::infinity();
        }
        ExtendedRational {
            num: add(&mul(a, &self.den), &self.num),
            den: self.den.clone(),
        }
    }

    /// `⌊x⌋` for finite values.
    pub fn floor(&self) -> Option<T> {
        if self.is_infinite() {
            None
        } else {
            Some(self.num.div_floor(&self.den))
        }
    }

    /// Equality of `self` with `p/q` for an arbitrary (unreduced, possibly
    /// sign-flipped) pair.
    pub fn equals_pair(&self, p: &T, q: &T) -> bool {
        match Self::new(p.clone(), q.clone()) {
            Ok(other) => &other == self,
            Err(_) => false,
        }
    }
}

impl<T: Scalar> fmt::Display for ExtendedRational<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Accepts `p/q`, a bare integer, or `inf`/`∞`.
impl<T: Scalar> FromStr for ExtendedRational<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" || s == "∞" {
            return Ok(Self::infinity());
        }
        let bad = || Error::Parse(format!("expected `p/q` or an integer, got {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p = parse_int(p).ok_or_else(bad)?;
                let q = parse_int(q).ok_or_else(bad)?;
                Self::new(p, q)
            }
            None => Ok(Self::from_integer(parse_int(s).ok_or_else(bad)?)),
        }
    }
}
