//! The JSON presentation document.
//!
//! Keys are emitted in sorted order and integers are written as exact JSON
//! numbers of any size, so a document produced by [`to_json`] survives
//! `to_json(from_json(doc)) == doc` byte for byte.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::cfcore::ContinuedFraction;
use crate::error::{Error, Result};
use crate::scalar::{parse_int, Scalar};
use crate::sign::Sign;
use crate::twobridge::TwoBridge;

use super::{FamilyTag, Provenance, SymmetricUnionPresentation, TwistInsertion};

// Field order is alphabetical; serde emits fields in declaration order.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationDoc {
    epsilon: Option<Number>,
    family: String,
    full_cf: Vec<Number>,
    k_or_d: Number,
    m: Number,
    mirror_taken: bool,
    partial: PartialDoc,
    result: KnotDoc,
    s: Option<Number>,
    sign: Number,
    t: Option<Number>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartialDoc {
    cf: Vec<Number>,
    p: Number,
    q: Number,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct KnotDoc {
    p: Number,
    q: Number,
}

pub(crate) fn number<T: Scalar>(x: &T) -> Number {
    Number::from_str(&x.to_string()).expect("integer literal is a JSON number")
}

pub(crate) fn scalar<T: Scalar>(n: &Number, field: &str) -> Result<T> {
    parse_int(&n.to_string())
        .ok_or_else(|| Error::Parse(format!("{field}: expected an integer, got {n}")))
}

fn cf_numbers<T: Scalar>(cf: &ContinuedFraction<T>) -> Vec<Number> {
    cf.entries().iter().map(number).collect()
}

fn cf_from<T: Scalar>(ns: &[Number], field: &str) -> Result<ContinuedFraction<T>> {
    let entries = ns
        .iter()
        .map(|n| scalar(n, field))
        .collect::<Result<Vec<T>>>()?;
    ContinuedFraction::new(entries)
}

fn sign_from<T: Scalar>(n: &Number, field: &str) -> Result<Sign> {
    Sign::from_scalar(&scalar::<T>(n, field)?)
}

pub fn to_json<T: Scalar>(pres: &SymmetricUnionPresentation<T>) -> String {
    let prov = &pres.provenance;
    let doc = PresentationDoc {
        epsilon: pres.insertion.epsilon.map(|e| number(&e.to_scalar::<T>())),
        family: prov.tag.to_string(),
        full_cf: cf_numbers(&pres.full_cf),
        k_or_d: number(&prov.aux),
        m: number(&prov.m),
        mirror_taken: pres.mirror_taken,
        partial: PartialDoc {
            cf: cf_numbers(&pres.partial_cf),
            p: number(pres.partial_knot.p()),
            q: number(pres.partial_knot.q()),
        },
        result: KnotDoc {
            p: number(pres.result.p()),
            q: number(pres.result.q()),
        },
        s: prov.s.as_ref().map(number),
        sign: number(&prov.sign.to_scalar::<T>()),
        t: prov.t.as_ref().map(number),
    };
    serde_json::to_string_pretty(&doc).expect("document serialises")
}

/// Parse a document into a presentation without re-deriving anything; use
/// [`super::verify_presentation`] to check it.
pub fn from_json<T: Scalar>(text: &str) -> Result<SymmetricUnionPresentation<T>> {
    let doc: PresentationDoc = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("presentation document: {e}")))?;
    let tag: FamilyTag = doc.family.parse()?;
    let opt =
        |n: &Option<Number>, field: &str| n.as_ref().map(|n| scalar::<T>(n, field)).transpose();
    Ok(SymmetricUnionPresentation {
        partial_cf: cf_from(&doc.partial.cf, "partial.cf")?,
        partial_knot: TwoBridge::new(
            scalar(&doc.partial.p, "partial.p")?,
            scalar(&doc.partial.q, "partial.q")?,
        )?,
        insertion: TwistInsertion::new(
            doc.epsilon
                .as_ref()
                .map(|n| sign_from::<T>(n, "epsilon"))
                .transpose()?,
        ),
        full_cf: cf_from(&doc.full_cf, "full_cf")?,
        result: TwoBridge::new(
            scalar(&doc.result.p, "result.p")?,
            scalar(&doc.result.q, "result.q")?,
        )?,
        provenance: Provenance {
            tag,
            m: scalar(&doc.m, "m")?,
            aux: scalar(&doc.k_or_d, "k_or_d")?,
            sign: sign_from::<T>(&doc.sign, "sign")?,
            s: opt(&doc.s, "s")?,
            t: opt(&doc.t, "t")?,
        },
        mirror_taken: doc.mirror_taken,
    })
}
