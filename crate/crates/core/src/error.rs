//! Error type shared by every module in this crate.
//!
//! All arithmetic is exact; errors signal domain violations (zero
//! denominators, out-of-range indices), resource caps on brute-force
//! enumerations, and integrality failures in closed formulas.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A rational function or fraction was constructed with a zero denominator.
    #[error("zero denominator")]
    ZeroDenominator,

    /// A power-series expansion was requested for a rational function whose
    /// denominator vanishes at the origin.
    #[error("denominator vanishes at the origin; no power-series expansion")]
    PoleAtOrigin,

    /// An argument fell outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A brute-force enumeration or summation would exceed its resource cap.
    #[error("cap exceeded for {what}: requested {requested}, limit {limit}")]
    CapExceeded {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    /// A closed formula that must produce an integer produced a proper fraction.
    #[error("non-integer value from closed formula: {0}")]
    NonIntegral(String),

    /// A partial-fraction decomposition met a repeated or unaccounted pole.
    #[error("repeated or unaccounted pole: {0}")]
    RepeatedPole(String),
}

pub type Result<T> = std::result::Result<T, Error>;
