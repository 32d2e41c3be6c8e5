use thiserror::Error;

/// Errors for malformed inputs and violated preconditions.
///
/// Axiom failures on well-formed inputs are never errors; they are reported
/// as failed checks so falsification sweeps can keep running.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("E_NOT_GROUP: {reason}")]
    NotGroup { reason: String },

    #[error("E_NOT_PERMUTATION: generator {index} is not a permutation of 0..{degree}")]
    NotPermutation { index: usize, degree: usize },

    #[error("E_TOO_LARGE: closure exceeded the configured bound {bound}")]
    TooLarge { bound: usize },

    #[error("E_NOT_UNIQUELY_2DIV: {reason}")]
    NotUniquely2Divisible { reason: String },

    #[error("E_NOT_IN_Q: element {element} is not a point of the geometry")]
    NotInQ { element: usize },

    #[error("E_NO_MIDPOINT: no point conjugates {i} to {j}")]
    NoMidpoint { i: usize, j: usize },

    #[error("E_MIDPOINT_NOT_UNIQUE: points {witnesses:?} all conjugate {i} to {j}")]
    MidpointNotUnique {
        i: usize,
        j: usize,
        witnesses: Vec<usize>,
    },

    #[error("E_NOT_CLOSED: {0} is not closed under the line formula")]
    NotClosed(String),

    #[error("E_NOT_TWISTED: {reason}")]
    NotTwisted { reason: String },

    #[error("E_NOT_AUTOMORPHISM: {reason}")]
    NotAutomorphism { reason: String },

    #[error("E_NONTRIVIAL_CENTER: {reason}")]
    NontrivialCenter { reason: String },

    #[error("E_PRECESSION_NOT_IN_A: precession of pair ({a}, {b}) is missing from the automorphism group")]
    PrecessionNotInA { a: usize, b: usize },

    #[error("E_KERNEL_NOT_SUBGROUP: {reason}")]
    KernelNotSubgroup { reason: String },

    #[error("E_EVEN_ORDER: {reason}")]
    EvenOrder { reason: String },

    #[error("E_UNSUPPORTED_Q: no built-in field of order {q}")]
    UnsupportedQ { q: u64 },

    #[error("E_BAD_PARAMS: {reason}")]
    BadParams { reason: String },

    #[error("E_INCONSISTENT_CHAR: translations of different orders {orders:?}")]
    InconsistentChar { orders: Vec<usize> },

    #[error("E_COMPLEMENT_NOT_ABELIAN: complement elements {a} and {b} do not commute")]
    ComplementNotAbelian { a: usize, b: usize },

    #[error("E_NOT_FROBENIUS: {reason}")]
    NotFrobenius { reason: String },

    #[error("E_NOT_SUBGROUP: {reason}")]
    NotSubgroup { reason: String },

    #[error("E_NOT_CONJUGACY_CLASS: {reason}")]
    NotConjugacyClass { reason: String },

    #[error("E_NOT_INVARIANT: line {line:?} conjugated by {by} leaves the family")]
    LinesNotInvariant { line: Vec<usize>, by: usize },
}

impl Error {
    /// Stable machine-readable code, the token before the first `:` in `Display`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotGroup { .. } => "E_NOT_GROUP",
            Error::NotPermutation { .. } => "E_NOT_PERMUTATION",
            Error::TooLarge { .. } => "E_TOO_LARGE",
            Error::NotUniquely2Divisible { .. } => "E_NOT_UNIQUELY_2DIV",
            Error::NotInQ { .. } => "E_NOT_IN_Q",
            Error::NoMidpoint { .. } => "E_NO_MIDPOINT",
            Error::MidpointNotUnique { .. } => "E_MIDPOINT_NOT_UNIQUE",
            Error::NotClosed(_) => "E_NOT_CLOSED",
            Error::NotTwisted { .. } => "E_NOT_TWISTED",
            Error::NotAutomorphism { .. } => "E_NOT_AUTOMORPHISM",
            Error::NontrivialCenter { .. } => "E_NONTRIVIAL_CENTER",
            Error::PrecessionNotInA { .. } => "E_PRECESSION_NOT_IN_A",
            Error::KernelNotSubgroup { .. } => "E_KERNEL_NOT_SUBGROUP",
            Error::EvenOrder { .. } => "E_EVEN_ORDER",
            Error::UnsupportedQ { .. } => "E_UNSUPPORTED_Q",
            Error::BadParams { .. } => "E_BAD_PARAMS",
            Error::InconsistentChar { .. } => "E_INCONSISTENT_CHAR",
            Error::ComplementNotAbelian { .. } => "E_COMPLEMENT_NOT_ABELIAN",
            Error::NotFrobenius { .. } => "E_NOT_FROBENIUS",
            Error::NotSubgroup { .. } => "E_NOT_SUBGROUP",
            Error::NotConjugacyClass { .. } => "E_NOT_CONJUGACY_CLASS",
            Error::LinesNotInvariant { .. } => "E_NOT_INVARIANT",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
