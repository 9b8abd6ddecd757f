//! Dense univariate polynomials with exact rational coefficients.
//!
//! Same canonical form as `IntPoly`: no trailing zeros, zero is the empty
//! vector. Supports field division, which integer polynomials cannot.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gaussian::GaussianRational;
use super::int_poly::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

// ---- Construction ----

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly { coeffs: vec![c] }.normalized()
    }

    pub fn x() -> Self {
        RatPoly::monomial(BigRational::one(), 1)
    }

    pub fn monomial(c: BigRational, d: usize) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); d + 1];
        coeffs[d] = c;
        RatPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        RatPoly { coeffs }.normalized()
    }

    pub fn from_int_poly(p: &IntPoly) -> Self {
        RatPoly {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        }
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }
}

// ---- Queries ----

impl RatPoly {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_gaussian(&self, z: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + &GaussianRational::from_rational(c.clone());
        }
        acc
    }

    /// Some(p) when every coefficient is an integer.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(IntPoly::from_coeffs(out))
    }

    /// Primitive integer polynomial with positive leading coefficient sharing
    /// this polynomial's roots; zero maps to zero.
    pub fn primitive_int_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from(lcm.clone())).to_integer())
            .collect();
        IntPoly::from_coeffs(ints).primitive_part()
    }
}

// ---- Arithmetic ----

impl RatPoly {
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        RatPoly { coeffs }
    }

    pub fn scalar_mul(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = RatPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn make_monic(&self) -> Self {
        match self.leading_coeff() {
            None => RatPoly::zero(),
            Some(lc) => self.scalar_mul(&lc.recip()),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigRational::from(BigInt::from(i + 1)))
            .collect();
        RatPoly { coeffs }.normalized()
    }

    /// Quotient and remainder with deg r < deg d. Panics on a zero divisor.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading_coeff().unwrap().clone();
        let mut r = self.clone();
        let mut q = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let factor = r.leading_coeff().unwrap() / &lc;
            q[dr - dd] = factor.clone();
            r = &r - &d.shift_up(dr - dd).scalar_mul(&factor);
        }
        (RatPoly { coeffs: q }.normalized(), r)
    }

    /// Some(q) when d divides self exactly.
    pub fn div_exact(&self, d: &RatPoly) -> Option<RatPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (1 for coprime inputs, 0 only for gcd(0, 0)), reduced through
    /// a primitive integer pseudo-remainder sequence to keep coefficients small.
    pub fn gcd_monic(a: &RatPoly, b: &RatPoly) -> RatPoly {
        let g = IntPoly::gcd(&a.primitive_int_part(), &b.primitive_int_part());
        RatPoly::from_int_poly(&g).make_monic()
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        RatPoly { coeffs }.normalized()
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        RatPoly { coeffs }.normalized()
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly { coeffs }.normalized()
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

// ---- Display ----

impl RatPoly {
    /// Human-readable form, low degree first, coefficients as reduced fractions.
    pub fn format_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let unit = mag.is_one();
            if i == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !unit {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_var("x"))
    }
}

// ---- Tests ----

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::bigrat;

    fn p(coeffs: &[(i64, i64)]) -> RatPoly {
        RatPoly::from_coeffs(coeffs.iter().map(|&(n, d)| bigrat(n, d)).collect())
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[(1, 1), (0, 1), (2, 1), (1, 1)]);
        let d = p(&[(1, 2), (1, 1)]);
        let (q, r) = a.div_rem(&d);
        assert!(r.degree() < d.degree());
        assert_eq!(&(&q * &d) + &r, a);
    }

    #[test]
    fn exact_division() {
        let a = p(&[(1, 1), (1, 1)]);
        let b = p(&[(-2, 3), (1, 1)]);
        assert_eq!((&a * &b).div_exact(&a), Some(b.clone()));
        assert_eq!(a.div_exact(&b), None);
    }

    #[test]
    fn monic_gcd() {
        let a = p(&[(1, 2), (1, 1)]);
        let b = p(&[(3, 1), (1, 1)]);
        let g = RatPoly::gcd_monic(&(&a * &b), &(&a * &a));
        assert_eq!(g, a.make_monic());
        assert!(g.is_monic());
        assert_eq!(RatPoly::gcd_monic(&a, &b), RatPoly::one());
        assert_eq!(RatPoly::gcd_monic(&RatPoly::zero(), &RatPoly::zero()), RatPoly::zero());
    }

    #[test]
    fn derivative_and_eval() {
        let a = p(&[(5, 1), (-1, 2), (0, 1), (4, 1)]);
        assert_eq!(a.derivative(), p(&[(-1, 2), (0, 1), (12, 1)]));
        assert_eq!(a.eval(&bigrat(1, 1)), bigrat(17, 2));
        assert_eq!(RatPoly::zero().derivative(), RatPoly::zero());
    }

    #[test]
    fn integer_conversions() {
        let a = p(&[(2, 1), (3, 1)]);
        assert_eq!(a.to_int_poly(), Some(IntPoly::from_i64s(&[2, 3])));
        assert_eq!(p(&[(1, 2)]).to_int_poly(), None);
        assert_eq!(p(&[(1, 2), (1, 3)]).primitive_int_part(), IntPoly::from_i64s(&[3, 2]));
    }
}
