use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::{Integer, Roots};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer usable as the scalar of every construction in this
/// crate.
///
/// `BigInt` is the intended instantiation. Fixed-width types (`i64`, `i128`)
/// also satisfy the bound; arithmetic on them is checked and panics on
/// overflow instead of wrapping.
pub trait Scalar:
    Integer
    + Signed
    + Roots
    + Clone
    + Hash
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Roots
        + Clone
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + Send
        + Sync
        + 'static
{
}

const OVERFLOW: &str = "integer overflow in exact arithmetic; use BigInt";

pub(crate) fn lit<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect(OVERFLOW)
}

pub(crate) fn add<T: Scalar>(a: &T, b: &T) -> T {
    a.checked_add(b).expect(OVERFLOW)
}

pub(crate) fn sub<T: Scalar>(a: &T, b: &T) -> T {
    a.checked_sub(b).expect(OVERFLOW)
}

pub(crate) fn mul<T: Scalar>(a: &T, b: &T) -> T {
    a.checked_mul(b).expect(OVERFLOW)
}

/// Parse a decimal integer literal, allowing a leading `+`.
pub(crate) fn parse_int<T: Scalar>(s: &str) -> Option<T> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    if s.is_empty() {
        return None;
    }
    T::from_str_radix(s, 10).ok()
}
