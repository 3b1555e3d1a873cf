use thiserror::Error;

/// Every failure the kernel can report.
///
/// The variant name doubles as the stable machine-readable code emitted by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value table has length {got}, expected 2^{n} = {expected}")]
    WrongLength {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("value on the empty set must be 0, got {0}")]
    NonzeroEmptySet(i64),
    #[error("subset mask {mask:#b} is not contained in a ground set of size {n}")]
    SubsetOutOfRange { mask: u64, n: usize },
    #[error("integer overflow while {0}")]
    Overflow(&'static str),
    #[error("parameters must differ, got q1 = q2 = {0}")]
    EqualParameters(i64),
    #[error("ground set of size {n} exceeds the cap of {cap} for {what}")]
    GroundSetTooLarge {
        n: usize,
        cap: usize,
        what: &'static str,
    },
    #[error("ground sets differ in size: {left} vs {right}")]
    MismatchedGroundSets { left: usize, right: usize },
    #[error("first partition does not refine the second")]
    NotARefinement,
    #[error("operation requires a nonempty ground set")]
    EmptyGroundSet,
    #[error("hypergraph has no vertices")]
    EmptyVertexSet,
    #[error("function is not a matroid rank function")]
    NotAMatroid,
    #[error("given set is not a basis: {0}")]
    NotABasis(String),
    #[error("function is not in Bool_max; use the unchecked mode to override")]
    NotInBoolMax,
    #[error("enumeration of {colors}^{n} colorings exceeds 2^24")]
    EnumerationTooLarge { n: usize, colors: u64 },
    #[error("invalid restricted-growth string: {0}")]
    InvalidPartition(String),
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("invalid multigraph: {0}")]
    InvalidGraph(String),
    #[error("invalid vector family: {0}")]
    InvalidVectorFamily(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::WrongLength { .. } => "WrongLength",
            Error::NonzeroEmptySet(_) => "NonzeroEmptySet",
            Error::SubsetOutOfRange { .. } => "SubsetOutOfRange",
            Error::Overflow(_) => "Overflow",
            Error::EqualParameters(_) => "EqualParameters",
            Error::GroundSetTooLarge { .. } => "GroundSetTooLarge",
            Error::MismatchedGroundSets { .. } => "MismatchedGroundSets",
            Error::NotARefinement => "NotARefinement",
            Error::EmptyGroundSet => "EmptyGroundSet",
            Error::EmptyVertexSet => "EmptyVertexSet",
            Error::NotAMatroid => "NotAMatroid",
            Error::NotABasis(_) => "NotABasis",
            Error::NotInBoolMax => "NotInBoolMax",
            Error::EnumerationTooLarge { .. } => "EnumerationTooLarge",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::InvalidHypergraph(_) => "InvalidHypergraph",
            Error::InvalidGraph(_) => "InvalidGraph",
            Error::InvalidVectorFamily(_) => "InvalidVectorFamily",
            Error::InvalidField(_) => "InvalidField",
            Error::InvalidPolynomial(_) => "InvalidPolynomial",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
