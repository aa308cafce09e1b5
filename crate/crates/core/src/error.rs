use alloc::string::String;

use crate::partition::Category;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("partitions have different numbers of points ({left} vs {right})")]
    PointCountMismatch { left: usize, right: usize },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix shapes {left:?} and {right:?} are incompatible")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is singular: no nonzero pivot in column {stage}")]
    Singular { stage: usize },

    #[error("need at least {needed} distinct nodes, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("interpolating polynomial has a non-integer coefficient at degree {degree}")]
    NonIntegral { degree: usize },

    #[error("points are not fitted by any polynomial of degree <= {degree}")]
    DegreeExceeded { degree: usize },

    #[error("rational function has a zero denominator")]
    ZeroDenominator,

    #[error("rational function does not reduce to a polynomial")]
    NonPolynomial,

    #[error("{op} is not defined for category {category}")]
    UnsupportedCategory {
        op: &'static str,
        category: Category,
    },

    #[error("mobius function requires the first partition to refine the second")]
    NotRefinement,

    #[error("input is not a noncrossing pairing")]
    NotNoncrossingPairing,

    #[error("group size {n} exceeds the enumeration bound {max}")]
    BoundExceeded { n: usize, max: usize },

    #[error("invalid moment query: {0}")]
    InvalidQuery(String),

    #[error("moment functional is degenerate at index {index}")]
    Degenerate { index: usize },

    #[error("not enough moments: need {needed}, have {have}")]
    MissingMoments { needed: usize, have: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
