//! Exact arithmetic for two-bridge ribbon knots.
//!
//! The crate is organised bottom-up:
//!
//! * [`cfcore`] — extended rationals, continued fractions and the 2×2 integer
//!   matrices they correspond to, including the palindromic identity
//!   `[a₁,…,aₙ,ε,−aₙ,…,−a₁] = ε(−1)ⁿm² / (ε(−1)ⁿmk + 1)`.
//! * [`twobridge`] — Schubert normal forms `K(p,q)`, equivalence, and the
//!   three Lisca families of ribbon two-bridge knots.
//! * [`symunion`] — construction and independent verification of symmetric
//!   union presentations, plus the JSON presentation document.
//! * [`diagram`] — Conway notation text and schematic SVG output.
//!
//! Everything is generic over an exact integer type (see [`Scalar`]). The
//! aliases at the crate root fix it to [`BigInt`], which is what callers
//! normally want.

pub mod cfcore;
pub mod diagram;
mod error;
mod scalar;
mod sign;
pub mod symunion;
pub mod twobridge;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use scalar::Scalar;
pub use sign::Sign;

/// Arbitrary-precision extended rational.
pub type Rational = cfcore::ExtendedRational<BigInt>;
/// Continued fraction over arbitrary-precision integers.
pub type Cf = cfcore::ContinuedFraction<BigInt>;
/// 2×2 arbitrary-precision integer matrix.
pub type Matrix = cfcore::Mat2<BigInt>;
/// Two-bridge knot in Schubert normal form.
pub type Knot = twobridge::TwoBridge<BigInt>;
/// Result of normalising a fraction: a two-bridge knot or the unknot.
pub type KnotOrUnknot = twobridge::Knot<BigInt>;
/// Lisca family membership certificate.
pub type Witness = twobridge::RibbonWitness<BigInt>;
/// Symmetric union presentation over arbitrary-precision integers.
pub type Presentation = symunion::SymmetricUnionPresentation<BigInt>;
