use std::ops::Mul;

use crate::scalar::{add, mul, sub, Scalar};

use super::rational::ExtendedRational;

/// Row-major 2×2 integer matrix `(a b; c d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Scalar> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(T::one(), T::zero(), T::zero(), T::one())
    }

    /// The letter matrix `(x 1; 1 0)` of a continued-fraction entry.
    pub fn letter(x: T) -> Self {
        Mat2::new(x, T::one(), T::one(), T::zero())
    }

    pub fn det(&self) -> T {
        sub(&mul(&self.a, &self.d), &mul(&self.b, &self.c))
    }

    pub fn first_column(&self) -> (T, T) {
        (self.a.clone(), self.c.clone())
    }

    /// The first column read as the fraction `a/c`.
    pub fn first_column_value(&self) -> ExtendedRational<T> {
        ExtendedRational::new(self.a.clone(), self.c.clone())
            .expect("first column of a unimodular matrix is nonzero")
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(
            self.a.clone(),
            self.c.clone(),
            self.b.clone(),
            self.d.clone(),
        )
    }
}

impl<T: Scalar> Mul for &Mat2<T> {
    type Output = Mat2<T>;

    fn mul(self, rhs: &Mat2<T>) -> Mat2<T> {
        Mat2 {
            a: add(&mul(&self.a, &rhs.a), &mul(&self.b, &rhs.c)),
            b: add(&mul(&self.a, &rhs.b), &mul(&self.b, &rhs.d)),
            c: add(&mul(&self.c, &rhs.a), &mul(&self.d, &rhs.c)),
            d: add(&mul(&self.c, &rhs.b), &mul(&self.d, &rhs.d)),
        }
    }
}
