//! Laurent polynomials over the integers: finitely many terms c·x^k with
//! k possibly negative.
//!
//! Representation: `base * x^shift` where `base` is an `IntPoly` with nonzero
//! constant term. The zero Laurent polynomial has zero base and shift 0, so
//! structural equality is canonical equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::int_poly::IntPoly;
use super::rat_func::RationalFunction;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    base: IntPoly,
    shift: i64,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            base: IntPoly::zero(),
            shift: 0,
        }
    }

    pub fn one() -> Self {
        LaurentPoly::from_poly(IntPoly::one())
    }

    /// base * x^shift, renormalized so the stored base has nonzero constant term.
    pub fn new(base: IntPoly, shift: i64) -> Self {
        match base.valuation() {
            None => LaurentPoly::zero(),
            Some(v) => {
                let coeffs = base.coeffs()[v..].to_vec();
                LaurentPoly {
                    base: IntPoly::from_coeffs(coeffs),
                    shift: shift + v as i64,
                }
            }
        }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        LaurentPoly::new(p, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero()
    }

    /// Polynomial part with the x^shift factor removed; nonzero constant term.
    pub fn base(&self) -> &IntPoly {
        &self.base
    }

    /// Lowest exponent present (0 for the zero polynomial).
    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Highest exponent present, None for zero.
    pub fn top_degree(&self) -> Option<i64> {
        self.base.degree().map(|d| self.shift + d as i64)
    }

    /// Some(p) when no negative exponent is present.
    pub fn to_poly(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        (self.shift >= 0).then(|| self.base.shift_up(self.shift as usize))
    }

    /// View as a rational function num/x^k.
    pub fn to_rational_function(&self) -> RationalFunction {
        if self.shift >= 0 {
            RationalFunction::from_int_poly(&self.base.shift_up(self.shift as usize))
        } else {
            RationalFunction::new_int(
                self.base.clone(),
                IntPoly::monomial(num_bigint::BigInt::from(1), (-self.shift) as usize),
            )
            .expect("x^k denominator is nonzero")
        }
    }

    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        LaurentPoly::new(&self.base * p, self.shift)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let shift = self.shift.min(rhs.shift);
        let a = self.base.shift_up((self.shift - shift) as usize);
        let b = rhs.base.shift_up((rhs.shift - shift) as usize);
        LaurentPoly::new(&a + &b, shift)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            base: &self.base * &rhs.base,
            shift: self.shift + rhs.shift,
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            base: -&self.base,
            shift: self.shift,
        }
    }
}

impl LaurentPoly {
    pub fn format_with_var(&self, var: &str) -> String {
        if self.shift >= 0 {
            return self
                .to_poly()
                .expect("nonnegative shift")
                .format_with_var(var);
        }
        let num = self.base.format_with_var(var);
        if self.shift == -1 {
            format!("({num})/{var}")
        } else {
            format!("({num})/{var}^{}", -self.shift)
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_var("x"))
    }
}
