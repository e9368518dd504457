//! Error type shared across the crate.
//!
//! Everything here is exact arithmetic, so the only runtime failures are
//! structural: asking for a coefficient beyond a series' truncation,
//! inverting the zero series, or an internal cross-check disagreeing.

use thiserror::Error;

/// Errors produced by series, pairing, and family operations.
///
/// Contract violations (mixing contexts, multinomial part-sum mismatches)
/// panic instead; these variants are for conditions a caller can reach
/// with well-formed inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The zero series has no multiplicative inverse.
    #[error("cannot invert the zero series")]
    InvertZero,

    /// A coefficient beyond the known truncation was requested.
    /// Truncation shortfalls are hard errors, never silent zero-fill.
    #[error("coefficient of t^{wanted} requested, series only known up to t^{available}")]
    TruncationExceeded { wanted: i64, available: i64 },

    /// Argument scaling by zero is undefined on negative powers of t.
    #[error("cannot substitute t -> 0*t in a series with negative valuation")]
    ZeroArgumentScale,

    /// Infinite q-shifted products are out of scope; only finite orders
    /// are exact.
    #[error("infinite q-shifted factorial is not supported")]
    InfiniteProduct,

    /// The requested expansion basis cannot represent the input
    /// (e.g. the plain Genocchi sequence starts with the zero polynomial).
    #[error("basis is not orthonormal on the requested index range: {0}")]
    NotOrthonormal(String),

    /// Two supposedly equivalent computation routes disagreed. This
    /// indicates a bug in the kernel, not a falsified identity.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    /// A malformed rational, polynomial, or q token.
    #[error("parse error: {0}")]
    Parse(String),

    /// q outside (0, 1) and not the classical token.
    #[error("invalid q: {0} (need 0 < q < 1, or 1 for the classical limit)")]
    InvalidQ(String),
}

pub type Result<T> = std::result::Result<T, Error>;
