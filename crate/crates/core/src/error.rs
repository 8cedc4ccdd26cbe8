//! Crate-wide error type.
//!
//! Numerical failure is always explicit: an evaluation that would overflow or
//! a quadrature that cannot reach its tolerance returns an error, never a
//! silent Inf or a silently inaccurate value.

use crate::transform::Direction;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The result (or a mandatory intermediate) exceeds the binary64 range.
    /// `log10_magnitude` names the magnitude class of the offending value.
    #[error("overflow: value magnitude ~1e{log10_magnitude:.0} exceeds the representable range")]
    Overflow { log10_magnitude: f64 },

    /// Adaptive quadrature exhausted its subdivision budget above tolerance.
    #[error(
        "quadrature did not converge: error estimate {achieved:.3e} > target {requested:.3e} \
         after {intervals} intervals"
    )]
    QuadratureDidNotConverge {
        requested: f64,
        achieved: f64,
        intervals: usize,
    },

    /// A scalar argument is outside the operation's domain (non-finite input,
    /// tolerance out of range, negative kernel width, and similar).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Samples do not belong to the configuration they are used with.
    #[error("sample/config mismatch: {0}")]
    ConfigMismatch(String),

    /// Sample index outside -N..N.
    #[error("sample index {index} outside -{half_count}..{half_count}")]
    IndexOutOfRange { index: i64, half_count: usize },

    /// Truncated formulations require trunc_depth <= N.
    #[error("truncation depth {depth} exceeds half sample count {half_count}")]
    TruncationDepthExceedsHalfCount { depth: usize, half_count: usize },

    /// A weight table built for one transform direction was used in the other.
    #[error("weight table direction is {table:?}, operation requires {requested:?}")]
    DirectionMismatch {
        table: Direction,
        requested: Direction,
    },

    /// Input samples violate the symmetry a specialized form requires.
    #[error("{kind} symmetry violated: max deviation {max_deviation:.3e} > 1e-12")]
    SymmetryViolation {
        kind: &'static str,
        max_deviation: f64,
    },

    /// A serialized weight table is malformed.
    #[error("weight table format error: {0}")]
    Format(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
