//! Reference implementations used only by tests. They share no code with the
//! crate's evaluation routes.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Right-to-left evaluation with `num_rational`, `None` standing for ∞.
pub fn oracle_eval(entries: &[i64]) -> Option<BigRational> {
    let mut x: Option<BigRational> = None;
    for &a in entries.iter().rev() {
        let a = BigRational::from_integer(BigInt::from(a));
        x = match x {
            None => Some(a),
            Some(v) if v.is_zero() => None,
            Some(v) => Some(a + v.recip()),
        };
    }
    x
}

/// Letter-matrix product with plain `i128` arrays.
pub fn oracle_matrix(entries: &[i64]) -> [[i128; 2]; 2] {
    let mut acc = [[1i128, 0], [0, 1]];
    for &a in entries {
        let l = [[a as i128, 1], [1, 0]];
        let mut next = [[0i128; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                next[i][j] = acc[i][0] * l[0][j] + acc[i][1] * l[1][j];
            }
        }
        acc = next;
    }
    acc
}

/// `(num, den)` with `den ≥ 0`, ∞ as `(1, 0)`.
pub fn oracle_pair(entries: &[i64]) -> (BigInt, BigInt) {
    match oracle_eval(entries) {
        None => (BigInt::one(), BigInt::zero()),
        Some(r) => (r.numer().clone(), r.denom().clone()),
    }
}

pub fn brute_inverse(q: i64, p: i64) -> Option<i64> {
    (1..p).find(|r| (q * r).rem_euclid(p) == 1)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}
