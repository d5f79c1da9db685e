//! Symmetric union presentations of two-bridge ribbon knots.
//!
//! Family 1 (`K(m², mk ± 1)`) uses the palindromic fraction
//! `[a₁,…,aₙ, ε, −aₙ,…,−a₁]` over the expansion `m/k = [a₁,…,aₙ]`. Families 2
//! and 3 (`K(m², d(m ± 1))`) use fixed six-term fractions parameterised by
//! `d = 2s + 3` and `t ≥ 0`, with three- or two-term partial fractions.
//!
//! Every constructor re-evaluates what it builds and refuses to return an
//! object that does not check out; [`verify_presentation`] repeats those
//! checks from scratch on an arbitrary (possibly deserialised) value.

mod document;
mod families;
mod verify;

use std::fmt;
use std::str::FromStr;

use crate::cfcore::ContinuedFraction;
use crate::error::Error;
use crate::sign::Sign;
use crate::twobridge::{Family, TwoBridge};

pub use document::{from_json, to_json};
pub use families::{
    family_identity, find_presentation, present_family1, present_family2, present_family3,
    present_lisca, FamilyIdentity,
};
pub use verify::{verify_presentation, CheckOutcome, VerificationReport};

/// Which construction produced a presentation. Families 2 and 3 carry the
/// `±` of `d(m ± 1)` in the tag; family 1 keeps it in [`Provenance::sign`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    F1,
    F2Plus,
    F2Minus,
    F3Plus,
    F3Minus,
}

impl FamilyTag {
    pub const LISCA: [FamilyTag; 4] = [
        FamilyTag::F2Plus,
        FamilyTag::F2Minus,
        FamilyTag::F3Plus,
        FamilyTag::F3Minus,
    ];

    pub fn family(self) -> Family {
        match self {
            FamilyTag::F1 => Family::F1,
            FamilyTag::F2Plus | FamilyTag::F2Minus => Family::F2,
            FamilyTag::F3Plus | FamilyTag::F3Minus => Family::F3,
        }
    }

    /// The `±` of `d(m ± 1)`; `None` for family 1.
    pub fn sign(self) -> Option<Sign> {
        match self {
            FamilyTag::F1 => None,
            FamilyTag::F2Plus | FamilyTag::F3Plus => Some(Sign::Plus),
            FamilyTag::F2Minus | FamilyTag::F3Minus => Some(Sign::Minus),
        }
    }

    pub fn from_family(family: Family, sign: Sign) -> FamilyTag {
        match (family, sign) {
            (Family::F1, _) => FamilyTag::F1,
            (Family::F2, Sign::Plus) => FamilyTag::F2Plus,
            (Family::F2, Sign::Minus) => FamilyTag::F2Minus,
            (Family::F3, Sign::Plus) => FamilyTag::F3Plus,
            (Family::F3, Sign::Minus) => FamilyTag::F3Minus,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyTag::F1 => "F1",
            FamilyTag::F2Plus => "F2+",
            FamilyTag::F2Minus => "F2-",
            FamilyTag::F3Plus => "F3+",
            FamilyTag::F3Minus => "F3-",
        })
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "F1" => Ok(FamilyTag::F1),
            "F2+" => Ok(FamilyTag::F2Plus),
            "F2-" => Ok(FamilyTag::F2Minus),
            "F3+" => Ok(FamilyTag::F3Plus),
            "F3-" => Ok(FamilyTag::F3Minus),
            other => Err(Error::Parse(format!(
                "unknown family {other:?}; expected F1, F2+, F2-, F3+ or F3-"
            ))),
        }
    }
}

/// The tangles inserted on the symmetry axis: one `T(∞)` and one `T(ε)`.
///
/// `epsilon` is known for family 1. For families 2 and 3 the presentation is
/// certified through its continued fractions, which do not pin down the
/// crossing sign of the inserted twist, so it is left as `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwistInsertion {
    pub count_infinity: u32,
    pub epsilon: Option<Sign>,
}

impl TwistInsertion {
    pub fn new(epsilon: Option<Sign>) -> Self {
        TwistInsertion {
            count_infinity: 1,
            epsilon,
        }
    }
}

/// Family parameters. `aux` is `k` for family 1 and `d` otherwise; `s`, `t`
/// are only present for families 2 and 3.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Provenance<T> {
    pub tag: FamilyTag,
    pub m: T,
    pub aux: T,
    pub sign: Sign,
    pub s: Option<T>,
    pub t: Option<T>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricUnionPresentation<T> {
    pub partial_cf: ContinuedFraction<T>,
    pub partial_knot: TwoBridge<T>,
    pub insertion: TwistInsertion,
    pub full_cf: ContinuedFraction<T>,
    pub result: TwoBridge<T>,
    pub provenance: Provenance<T>,
    /// Set by [`find_presentation`] when the target knot is only reached
    /// through its mirror image.
    pub mirror_taken: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tag_text_round_trip() {
        for tag in [FamilyTag::F1].into_iter().chain(FamilyTag::LISCA) {
            assert_eq!(tag.to_string().parse::<FamilyTag>(), Ok(tag));
        }
        assert!("F4".parse::<FamilyTag>().is_err());
        assert_eq!(
            FamilyTag::from_family(Family::F3, Sign::Minus),
            FamilyTag::F3Minus
        );
    }
}
