use thiserror::Error;

/// Errors raised by the library.
///
/// Variants split into input errors (bad data or violated preconditions) and
/// internal consistency failures; [`Error::is_internal`] tells them apart.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing")]
    InvalidPartition,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("multipartition has {components} components but charge has {charge} entries")]
    LengthMismatch { components: usize, charge: usize },
    #[error("insufficient abacus depth")]
    InsufficientDepth,
    #[error("rank must be at least {min}, got {got}")]
    InvalidRank { min: usize, got: usize },
    #[error("residue {residue} out of range for rank {rank}")]
    ResidueOutOfRange { residue: usize, rank: usize },
    #[error("partition {partition} is not {d}-regular")]
    NotRegular { partition: String, d: usize },
    #[error("vertex is not in the crystal component of the empty multipartition")]
    NotUglov,
    #[error("base charge not in fundamental domain")]
    BaseChargeNotInDomain,
    #[error("vertex is not doubly highest weight")]
    NotDoublyHighestWeight,
    #[error("period tops do not yield a partition")]
    NonPartitionTops,
    #[error("abacus is not totally periodic")]
    NotTotallyPeriodic,
    #[error("period insertion conflict")]
    PeriodInsertionConflict,
    #[error("coordinate invariant violated: {0}")]
    CoordinateInvariant(String),
    #[error("parameters are not asymptotic")]
    NotAsymptotic,
    #[error("parameters do not have integral difference")]
    NonIntegralDifference,
    #[error("charge is not in the orbit of the source charge")]
    ChargeNotInOrbit,
    #[error("vertex outside the supported domain: {0}")]
    OutsideDomain(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures that indicate a bug rather than a bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Internal(_) | Error::PeriodInsertionConflict | Error::NonPartitionTops
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
