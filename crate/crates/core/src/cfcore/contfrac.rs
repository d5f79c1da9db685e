use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{add, mul, parse_int, sub, Scalar};
use crate::sign::Sign;

use super::matrix::Mat2;
use super::rational::ExtendedRational;

/// A finite continued fraction `[a₁, …, aₙ] = a₁ + 1/(a₂ + 1/(… + 1/aₙ))`
/// with every entry nonzero. The empty fraction is allowed and equals ∞.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction<T> {
    entries: Vec<T>,
}

/// Output of [`ContinuedFraction::symmetric_identity`]: `m/k` is the value of
/// the half fraction and `(p, q) = (σm², σmk + 1)` with `σ = ε(−1)ⁿ`, before
/// any sign normalisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricIdentity<T> {
    pub m: T,
    pub k: T,
    pub n: usize,
    pub epsilon: Sign,
    pub p: T,
    pub q: T,
}

impl<T: Scalar> ContinuedFraction<T> {
    pub fn new(entries: Vec<T>) -> Result<Self> {
        if let Some(index) = entries.iter().position(|a| a.is_zero()) {
            return Err(Error::Domain(format!(
                "continued fraction entries must be nonzero (entry {} is 0)",
                index + 1
            )));
        }
        Ok(ContinuedFraction { entries })
    }

    pub fn empty() -> Self {
        ContinuedFraction {
            entries: Vec::new(),
        }
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self> {
        let entries = entries
            .iter()
            .map(|&a| T::from_i64(a).ok_or_else(|| Error::Domain(format!("{a} does not fit"))))
            .collect::<Result<Vec<T>>>()?;
        Self::new(entries)
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Right-to-left fold `x ← aᵢ + 1/x` starting from `x = ∞`, reducing at
    /// every step. Intermediate zeros and infinities are ordinary values.
    pub fn eval(&self) -> ExtendedRational<T> {
        self.entries
            .iter()
            .rev()
            .fold(ExtendedRational::infinity(), |x, a| {
                x.recip().add_integer(a)
            })
    }

    /// Product of the letter matrices `(aᵢ 1; 1 0)` taken left to right.
    pub fn to_matrix(&self) -> Mat2<T> {
        self.entries
            .iter()
            .fold(Mat2::identity(), |acc, a| &acc * &Mat2::letter(a.clone()))
    }

    /// Floor-based Euclidean expansion of a positive finite rational.
    ///
    /// For `r ≥ 1` every entry is positive and the last one is at least 2
    /// whenever there is more than one. Values in `(0, 1)` get a leading 1
    /// followed by the expansion of `1/(r − 1) < −1`.
    pub fn expand(r: &ExtendedRational<T>) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::Domain(format!(
                "expansion needs a finite positive value, got {r}"
            )));
        }
        let (mut p, mut q) = (r.numer().clone(), r.denom().clone());
        let mut entries = Vec::new();
        if p < q {
            entries.push(T::one());
            // 1/(p/q − 1) = −q/(q − p)
            let next = sub(&q, &p);
            p = -q;
            q = next;
        }
        loop {
            let a = p.div_floor(&q);
            let rem = sub(&p, &mul(&a, &q));
            entries.push(a);
            if rem.is_zero() {
                break;
            }
            p = q;
            q = rem;
        }
        Ok(ContinuedFraction { entries })
    }

    /// `[a₁,…,aₙ, ε, −aₙ,…,−a₁]`.
    pub fn symmetric(&self, epsilon: Sign) -> Result<Self> {
        if self.is_empty() {
            return Err(Error::Domain(
                "symmetric union of an empty continued fraction".into(),
            ));
        }
        let mut entries = Vec::with_capacity(2 * self.len() + 1);
        entries.extend(self.entries.iter().cloned());
        entries.push(epsilon.to_scalar());
        entries.extend(self.entries.iter().rev().map(|a| -a.clone()));
        Ok(ContinuedFraction { entries })
    }

    /// Predict the value of [`symmetric`](Self::symmetric) from the value
    /// `m/k` of `self` and check the prediction against direct evaluation.
    pub fn symmetric_identity(&self, epsilon: Sign) -> Result<SymmetricIdentity<T>> {
        let value = self.eval();
        if value.is_infinite() {
            return Err(Error::Domain(format!("{self} evaluates to infinity")));
        }
        let (m, k) = (value.numer().clone(), value.denom().clone());
        let n = self.len();
        let sigma = epsilon * Sign::parity(n);
        let p = sigma.apply(mul(&m, &m));
        let q = add(&sigma.apply(mul(&m, &k)), &T::one());
        let full = self.symmetric(epsilon)?.eval();
        if !full.equals_pair(&p, &q) {
            return Err(Error::Verification(format!(
                "symmetric fraction of {self} with ε = {epsilon} is {full}, predicted {p}/{q}"
            )));
        }
        Ok(SymmetricIdentity {
            m,
            k,
            n,
            epsilon,
            p,
            q,
        })
    }
}

impl<T: Scalar> fmt::Display for ContinuedFraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// Parse comma-separated integers between the given delimiters, with
/// optional whitespace everywhere. Shared by the `[…]` and `C(…)` syntaxes.
pub(crate) fn parse_delimited<T: Scalar>(
    s: &str,
    open: &str,
    close: &str,
) -> Result<ContinuedFraction<T>> {
    let bad = |why: &str| Error::Parse(format!("{why} in {s:?}; expected {open}a1,...,an{close}"));
    let inner = s
        .trim()
        .strip_prefix(open)
        .ok_or_else(|| bad("missing opening delimiter"))?
        .trim_start()
        .strip_suffix(close)
        .ok_or_else(|| bad("missing closing delimiter"))?;
    if inner.trim().is_empty() {
        return Ok(ContinuedFraction::empty());
    }
    let entries = inner
        .split(',')
        .map(|tok| parse_int(tok).ok_or_else(|| bad(&format!("bad integer {:?}", tok.trim()))))
        .collect::<Result<Vec<T>>>()?;
    ContinuedFraction::new(entries)
}

/// `[a1,a2,...,an]` with optional whitespace.
impl<T: Scalar> FromStr for ContinuedFraction<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_delimited(s, "[", "]")
    }
}
