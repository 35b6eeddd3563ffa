use thiserror::Error;

/// Errors raised by the library.
///
/// The variants are grouped by how a caller is expected to react: the first
/// block are caller mistakes (bad indices, mismatched shapes, broken
/// preconditions), [`Error::ResourceLimit`] means the request is valid but
/// larger than the configured enumeration cap, and [`Error::Overflow`] and
/// [`Error::Parity`] indicate an arithmetic condition that should not occur
/// for in-range inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value {value} out of range {lo}..={hi} for {what}")]
    Range {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    Dimension { left: usize, right: usize },

    #[error("invalid decomposition vector: {0}")]
    InvalidDecomposition(String),

    #[error("sum of decomposition vectors leaves {{-1,0,1}} at coordinate {coord}; sets are not disjoint or inputs are not decompositions")]
    NotDisjointOrInvalid { coord: usize },

    #[error("subset is not contained in superset: element {element} missing")]
    Containment { element: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} = {requested} exceeds the enumeration cap {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("non-integral quotient {numerator}/{denominator} in a parity branch")]
    Parity { numerator: i64, denominator: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
