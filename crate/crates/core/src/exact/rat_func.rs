//! Rational functions num/den over the rationals, kept in canonical form:
//! gcd(num, den) = 1, den monic, zero represented as 0/1.
//!
//! Canonical form makes structural equality mathematical equality, so the
//! identity checks in the higher modules are plain `==` comparisons.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::int_poly::IntPoly;
use super::rat_poly::RatPoly;
use super::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: RatPoly,
    den: RatPoly,
}

// ---- Construction ----

impl RationalFunction {
    /// Reduce num/den to canonical form. Errors on a zero denominator.
    pub fn new(num: RatPoly, den: RatPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let g = RatPoly::gcd_monic(&num, &den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let lc = den.leading_coeff().unwrap().recip();
        Ok(RationalFunction {
            num: num.scalar_mul(&lc),
            den: den.scalar_mul(&lc),
        })
    }

    pub fn new_int(num: IntPoly, den: IntPoly) -> Result<Self> {
        RationalFunction::new(RatPoly::from_int_poly(&num), RatPoly::from_int_poly(&den))
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: RatPoly::zero(),
            den: RatPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction::from_poly(RatPoly::one())
    }

    pub fn from_poly(p: RatPoly) -> Self {
        RationalFunction {
            num: p,
            den: RatPoly::one(),
        }
    }

    pub fn from_int_poly(p: &IntPoly) -> Self {
        RationalFunction::from_poly(RatPoly::from_int_poly(p))
    }

    pub fn from_rational(c: BigRational) -> Self {
        RationalFunction::from_poly(RatPoly::constant(c))
    }
}

// ---- Queries ----

impl RationalFunction {
    pub fn numerator(&self) -> &RatPoly {
        &self.num
    }

    pub fn denominator(&self) -> &RatPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Some(p) when the denominator is 1.
    pub fn to_poly(&self) -> Option<&RatPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// None at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn recip(&self) -> Result<Self> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    /// Coefficients of the Maclaurin expansion up to (excluding) x^order.
    /// Errors when the denominator vanishes at the origin.
    pub fn series_expand(&self, order: usize) -> Result<TruncatedSeries> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        let mut coeffs = Vec::with_capacity(order);
        for m in 0..order {
            let mut c = self.num.coeff(m);
            for j in 1..=m.min(self.den.degree().unwrap_or(0)) {
                c -= self.den.coeff(j) * &coeffs[m - j];
            }
            coeffs.push(c / &d0);
        }
        Ok(TruncatedSeries::from_coeffs(coeffs))
    }
}

// ---- Arithmetic ----

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl RationalFunction {
    pub fn div(&self, rhs: &RationalFunction) -> Result<RationalFunction> {
        Ok(self * &rhs.recip()?)
    }
}

// ---- Determinant ----

/// Determinant of a square matrix of rational functions, by fraction-free-ish
/// Gaussian elimination over the rational function field. Panics on a
/// non-square or empty matrix.
pub fn determinant(rows: &[Vec<RationalFunction>]) -> RationalFunction {
    let n = rows.len();
    assert!(n > 0, "determinant of empty matrix");
    for row in rows {
        assert_eq!(row.len(), n, "determinant of non-square matrix");
    }
    let mut m: Vec<Vec<RationalFunction>> = rows.to_vec();
    let mut det = RationalFunction::one();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return RationalFunction::zero();
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -&det;
        }
        let pivot = m[col][col].clone();
        det = &det * &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].div(&pivot).expect("nonzero pivot");
            for c in col + 1..n {
                let delta = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &delta;
            }
            m[r][col] = RationalFunction::zero();
        }
    }
    det
}

// ---- Display ----

impl RationalFunction {
    pub fn format_with_var(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.format_with_var(var)
        } else {
            format!(
                "({})/({})",
                self.num.format_with_var(var),
                self.den.format_with_var(var)
            )
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_var("x"))
    }
}

// ---- Tests ----
