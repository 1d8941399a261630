use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("coordinates {0} do not sum to zero")]
    NotTraceless(String),
    #[error("{0} is not a table entry: {1}")]
    NotInTable(String, String),
    #[error("{0} is not an even root")]
    NotEven(String),
    #[error("{0} is not an isotropic simple root of the chosen simple system")]
    NotOddSimple(String),
    #[error("element {0} is not in the group {1}")]
    NotInGroup(String, String),
    #[error("weight {0} is typical; the request needs an atypical weight")]
    Typical(String),
    #[error("weight {0} lies outside the parameter range of the table ({1})")]
    OutOfRange(String, String),
    #[error("no starting choice determines the tilting character of {0}")]
    Underdetermined(String),
    #[error("translated character of {0} cannot be decomposed ({1})")]
    Inconsistent(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(what: &'static str, input: &str) -> Error {
    Error::Parse { what, input: input.to_string() }
}
