use crate::set::VertexSet;
use thiserror::Error;

/// Errors raised by the library's operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incomparable cardinalities")]
    IncomparableCardinalities,
    #[error("invalid shift direction")]
    InvalidShiftDirection,
    #[error("parameters out of range")]
    ParametersOutOfRange,
    #[error("formula valid only for n >= 3s")]
    ErdosGallaiRange,
    #[error("family not partitionable")]
    NotPartitionable,
    #[error("lemma requires s >= k")]
    LemmaRequiresSGeK,
    #[error("beyond desk scale")]
    BeyondDeskScale,
    #[error("vertex {0} outside ground set [{1}]")]
    VertexOutOfRange(u32, u32),
    #[error("empty set is not a valid member")]
    EmptyMember,
    #[error("member {0} violates {1}-uniformity")]
    NotUniform(VertexSet, u32),
    #[error("operation requires a uniform family")]
    UniformityRequired,
    #[error("family is not stable")]
    NotStable,
    #[error("matching number is {found}, expected {expected}")]
    WrongMatchingNumber { expected: u32, found: u32 },
    #[error("ground set too small: need n >= {0}")]
    GroundSetTooSmall(u32),
    #[error("trace members must have cardinality between 1 and k")]
    TraceMemberSize,
    #[error("restriction tuple larger than k")]
    RestrictionTooWide,
    #[error("invalid restriction tuple")]
    BadRestrictionTuple,
    #[error("pair classification requires k = 3")]
    PairNeedsK3,
    #[error("pair classification requires d_1 = 1")]
    PairNeedsDOne,
    #[error("side condition violated: {0}")]
    SideCondition(String),
    #[error("width-2 profile matches no structural case")]
    TrichotomyViolation,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
    #[error("naive search limited to C(n,k) <= 20")]
    NaiveTooLarge,
    #[error("matching number already exceeds s")]
    NuTooLarge,
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
