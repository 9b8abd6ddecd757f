//! Exact arithmetic for Stern polynomials `B_n(t)` and the sequences built
//! from them.
//!
//! The `exact` layer provides arbitrary-precision polynomials, rational
//! functions, and truncated power series (over ℚ and over F₂). On top of it:
//!
//! - [`stern`]: the polynomial family itself, its degree/order sequences, the
//!   three-term recurrence with Laurent coefficients, and the determinant
//!   representation;
//! - [`degree_stats`]: degree-counting polynomials `H_n`, their bivariate
//!   generating function, closed-form coefficient counts, and the Chebyshev
//!   decomposition of `H_n` at fixed arguments;
//! - [`power_sums`]: generating functions `G_k` of the power sums over degree
//!   level sets, with closed forms and partial-fraction decompositions;
//! - [`reciprocal_sums`]: closed forms for `Σ 1/(B_i·B_{i+1})` and the
//!   diatomic specialization at `t = 1`;
//! - [`series_props`]: sign sums of the degree sequence, functional equations
//!   of the generating functions `𝓔_k`, the mod-2 quartic, and bounded
//!   explorers for the open conjectures.
//!
//! Every quantity is exact — `BigInt`/`BigRational` coefficients throughout;
//! nothing is floated or truncated silently.

pub mod degree_stats;
pub mod error;
pub mod exact;
pub mod power_sums;
pub mod reciprocal_sums;
pub mod series_props;
pub mod stern;

pub use error::{Error, Result};
