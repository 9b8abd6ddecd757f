//! Exact arithmetic: big rationals, polynomials over Z and Q, Laurent
//! polynomials, rational functions in canonical form, truncated power series
//! over Q and over the two-element field, and Gaussian rationals.
//!
//! No floating point anywhere; every comparison in the crate reduces to
//! structural equality of canonical forms.

mod gaussian;
mod int_poly;
mod laurent;
mod rat_func;
mod rat_poly;
mod series;
mod series_f2;

pub use gaussian::GaussianRational;
pub use int_poly::IntPoly;
pub use laurent::LaurentPoly;
pub use rat_func::{determinant, RationalFunction};
pub use rat_poly::RatPoly;
pub use series::TruncatedSeries;
pub use series_f2::{rational_is_odd, SeriesF2};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Reduced rational n/d. Panics when d = 0.
pub fn bigrat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact integer square root when one exists.
pub fn sqrt_exact(c: &BigRational) -> Option<BigRational> {
    use num_traits::Signed;
    if c.is_negative() {
        return None;
    }
    let sn = c.numer().sqrt();
    let sd = c.denom().sqrt();
    (&sn * &sn == *c.numer() && &sd * &sd == *c.denom())
        .then(|| BigRational::new(sn, sd))
}
