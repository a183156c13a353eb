//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed group description (rank 0, non-square matrix, bad entries).
    #[error("invalid group specification: {0}")]
    InvalidSpec(String),

    /// The Cartan data describes an infinite Coxeter group.
    #[error("the specified Coxeter group is infinite: {0}")]
    InfiniteGroup(String),

    /// Elements from two different engines were mixed in one operation.
    #[error("elements belong to different group engines")]
    EngineMismatch,

    /// The two elements are not comparable in the required order.
    #[error("elements are not comparable: {0}")]
    NotComparable(String),

    /// The element does not lie in the interval.
    #[error("element {0} is not in the interval")]
    NotInInterval(String),

    /// The two intervals fail the isomorphism precondition.
    #[error("intervals are not isomorphic: {0}")]
    NotIsomorphic(String),

    /// The group order exceeds the configured cap for enumeration.
    #[error("group order {order} exceeds the cap {cap}")]
    GroupTooLarge { order: u128, cap: u128 },

    /// A verification pass found a counterexample to a structural fact that
    /// must hold. Reaching this indicates a bug in the engine, never a
    /// failure of the underlying mathematics.
    #[error("verification failure: {0}")]
    VerificationFailure(String),

    /// Text could not be parsed as an element or group description.
    #[error("parse error: {0}")]
    ParseError(String),
}
