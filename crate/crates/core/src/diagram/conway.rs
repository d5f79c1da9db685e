use std::fmt;

use crate::cfcore::{parse_delimited, ContinuedFraction};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Conway notation `C(a1,...,an)` for the 4-plat of a continued fraction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConwayNotation(String);

impl ConwayNotation {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// `C(int(,int)*)` or `C()`, whitespace allowed around every token.
    pub fn parse<T: Scalar>(text: &str) -> Result<ContinuedFraction<T>> {
        let rest = text
            .trim()
            .strip_prefix('C')
            .ok_or_else(|| Error::Parse(format!("expected C(a1,...,an), got {text:?}")))?;
        parse_delimited(rest, "(", ")")
    }
}

impl fmt::Display for ConwayNotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn conway_text<T: Scalar>(cf: &ContinuedFraction<T>) -> ConwayNotation {
    let body: Vec<String> = cf.entries().iter().map(T::to_string).collect();
    ConwayNotation(format!("C({})", body.join(",")))
}
