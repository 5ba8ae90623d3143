//! Exact-arithmetic computation and verification for the Boros-Moll
//! polynomial coefficients `d_i(m)`.
//!
//! The crate computes coefficient rows by independent routes (closed-form
//! double sum and a first-order recurrence), constructs the exact reference
//! bounds on the successive ratio `d_i(m+1)/d_i(m)`, and runs every
//! inequality, identity, and conjecture check as an exact verdict over
//! arbitrary-precision rationals and quadratic surds. Floating point is used
//! only for display strings and the quartic-integral cross-check, never for
//! a verdict.
//!
//! Module map:
//! - [`exact`]: arbitrary-precision rationals, quadratic surds `p + q*sqrt(D)`,
//!   exact sign/ordering, decimal rendering.
//! - [`rows`]: coefficient rows, the row cache and its file format, the
//!   recurrence residuals.
//! - [`bounds`]: the ratio bounds `T`, `Q`, `F` and the log-concavity
//!   reference ratios.
//! - [`integral`]: adaptive quadrature of the quartic integral, used as a
//!   floating-point oracle only.
//! - [`verify`]: verdict generators for the theorems, lemma, proof
//!   identities, conjecture scans, and the Bessel example.
//! - [`report`]: verdict records, scan reports, and the text/CSV/JSON
//!   emitters.

pub mod bounds;
pub mod exact;
pub mod integral;
pub mod report;
pub mod rows;
pub mod verify;

use std::fmt;

/// Largest supported row index. Index arithmetic outside the big-integer
/// identity checks uses 64-bit intermediates, which stay exact well below
/// this bound; constructors assert it.
pub const MAX_INDEX: u32 = 100_000;

/// A precondition violation: an index or range outside what an operation
/// is defined for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "usage error: {}", self.0)
    }
}

impl std::error::Error for UsageError {}

pub use exact::{Rational, Value};
pub use report::{CellVerdict, CheckId, ScanReport};
pub use rows::{CoeffRow, RowCache};
