//! Continued fractions over the extended rationals and their 2×2 matrix
//! counterparts.
//!
//! Two independent evaluation routes are kept on purpose: [`eval_cf`] folds
//! reduced fractions right to left, [`cf_to_matrix`] multiplies letter
//! matrices left to right. Their agreement (up to a common sign of the first
//! column) is the check used throughout [`crate::symunion`].

mod contfrac;
mod matrix;
mod rational;

pub(crate) use contfrac::parse_delimited;
pub use contfrac::{ContinuedFraction, SymmetricIdentity};
pub use matrix::Mat2;
pub use rational::ExtendedRational;

use crate::error::Result;
use crate::scalar::{add, mul, Scalar};
use crate::sign::Sign;

pub fn eval_cf<T: Scalar>(cf: &ContinuedFraction<T>) -> ExtendedRational<T> {
    cf.eval()
}

pub fn cf_to_matrix<T: Scalar>(cf: &ContinuedFraction<T>) -> Mat2<T> {
    cf.to_matrix()
}

pub fn expand_cf<T: Scalar>(r: &ExtendedRational<T>) -> Result<ContinuedFraction<T>> {
    ContinuedFraction::expand(r)
}

pub fn symmetric_cf<T: Scalar>(
    cf: &ContinuedFraction<T>,
    epsilon: Sign,
) -> Result<ContinuedFraction<T>> {
    cf.symmetric(epsilon)
}

pub fn symmetric_identity<T: Scalar>(
    cf: &ContinuedFraction<T>,
    epsilon: Sign,
) -> Result<SymmetricIdentity<T>> {
    cf.symmetric_identity(epsilon)
}

/// `gcd(m², mk + sign) = 1`. Holds for every integer pair; exposed for the
/// property suites.
pub fn gcd_check<T: Scalar>(m: &T, k: &T, sign: Sign) -> bool {
    let square = mul(m, m);
    let shifted = add(&mul(m, k), &sign.to_scalar());
    square.gcd(&shifted).is_one()
}

/// Whether the first column of `matrix` represents `value`, up to a common
/// sign, and the determinant is `(−1)^len`.
pub fn matrix_matches<T: Scalar>(
    matrix: &Mat2<T>,
    value: &ExtendedRational<T>,
    len: usize,
) -> bool {
    let (a, c) = matrix.first_column();
    value.equals_pair(&a, &c) && matrix.det() == Sign::parity(len).to_scalar()
}
