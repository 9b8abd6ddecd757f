//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Representation: `coeffs[i]` is the coefficient of x^i. Canonical form has
//! no trailing zero coefficient, so the zero polynomial is the empty vector
//! and equality is plain structural equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gaussian::GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

// ---- Construction ----

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly { coeffs: vec![c] }.normalized()
    }

    pub fn x() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    /// c * x^d.
    pub fn monomial(c: BigInt, d: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        IntPoly { coeffs }.normalized()
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// 1 + x + ... + x^(len-1); zero when len = 0.
    pub fn geometric(len: usize) -> Self {
        IntPoly {
            coeffs: vec![BigInt::one(); len],
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

impl IntPoly {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplicity of the root x = 0; None for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Largest coefficient; None for the zero polynomial.
    pub fn max_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.iter().max()
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn eval_gaussian(&self, z: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + &GaussianRational::from_int(c.clone());
        }
        acc
    }
}

// ---- Arithmetic ----

impl IntPoly {
    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    pub fn scalar_mul(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Gcd of all coefficients (nonnegative); zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divide out the content and force a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut content = self.content();
        if self.leading_coeff().unwrap().is_negative() {
            content = -content;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        }
    }

    /// Some(q) when d divides self exactly over the integers. For a primitive
    /// divisor this coincides with divisibility over the rationals.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let lc = d.leading_coeff().unwrap();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let (factor, rem) = r.leading_coeff().unwrap().div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            q[dr - dd] = factor.clone();
            r = &r - &d.shift_up(dr - dd).scalar_mul(&factor);
            if r.is_zero() {
                return Some(IntPoly::from_coeffs(q));
            }
        }
        None
    }

    /// Primitive gcd with positive leading coefficient, via a primitive
    /// pseudo-remainder sequence. gcd(0, 0) = 0.
    pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let mut a = a.primitive_part();
        let mut b = b.primitive_part();
        while !b.is_zero() {
            let r = IntPoly::pseudo_rem(&a, &b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Remainder of lc(b)^k * a under division by b, for k large enough that
    /// all divisions stay integral. Requires b nonzero.
    fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo_rem by zero polynomial");
        let lb = b.leading_coeff().unwrap().clone();
        let mut r = a.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading_coeff().unwrap().clone();
            r = &r.scalar_mul(&lb) - &b.shift_up(dr - db).scalar_mul(&lr);
        }
        r
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPoly { coeffs }.normalized()
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPoly { coeffs }.normalized()
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly { coeffs }.normalized()
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

// ---- Display ----

impl IntPoly {
    /// Human-readable form, low degree first: "1 + 2t + t^3".
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

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_var("x"))
    }
}

// ---- Tests ----
