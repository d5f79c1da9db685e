use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text input that does not match the expected grammar.
    #[error("parse error: {0}")]
    Parse(String),
    /// Value outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Even determinant: the fraction describes a two-component link.
    #[error("{0} is a two-component link, not a knot")]
    Link(String),
    /// A family parameterisation produced an even `m`.
    #[error("even determinant root m = {0}; the construction describes a link")]
    EvenDeterminantRoot(String),
    #[error("no Lisca witness: {0} is not ribbon")]
    NotRibbon(String),
    /// A construction failed its own exact re-check.
    #[error("verification failure: {0}")]
    Verification(String),
}
