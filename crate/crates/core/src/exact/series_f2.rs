//! Truncated formal power series over the two-element field.
//!
//! Coefficients are bits; addition is xor. The key structural fact used by
//! the algebraicity checks is the Frobenius identity f(x)^2 = f(x^2), which
//! holds for every series in characteristic two, so powers of the form 2^k
//! are computed by exponent substitution.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

use super::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesF2 {
    bits: Vec<bool>,
}

impl SeriesF2 {
    pub fn zero(order: usize) -> Self {
        SeriesF2 {
            bits: vec![false; order],
        }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        SeriesF2 { bits }
    }

    /// Reduce an integer-coefficient series mod 2. Errors when a coefficient
    /// is not an integer.
    pub fn from_series(s: &TruncatedSeries) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.order());
        for c in s.coeffs() {
            if !c.is_integer() {
                return Err(Error::NonIntegral(format!(
                    "coefficient {c} cannot be reduced mod 2"
                )));
            }
            bits.push(c.numer().bit(0));
        }
        Ok(SeriesF2 { bits })
    }

    pub fn order(&self) -> usize {
        self.bits.len()
    }

    pub fn coeff(&self, i: usize) -> bool {
        assert!(i < self.order(), "coefficient {i} beyond order {}", self.order());
        self.bits[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }

    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        SeriesF2 {
            bits: self.bits[..order].to_vec(),
        }
    }

    pub fn add(&self, rhs: &SeriesF2) -> Self {
        let n = self.order().min(rhs.order());
        SeriesF2 {
            bits: (0..n).map(|i| self.bits[i] ^ rhs.bits[i]).collect(),
        }
    }

    pub fn mul(&self, rhs: &SeriesF2) -> Self {
        let n = self.order().min(rhs.order());
        let mut bits = vec![false; n];
        for i in 0..n {
            if !self.bits[i] {
                continue;
            }
            for j in 0..n - i {
                bits[i + j] ^= rhs.bits[j];
            }
        }
        SeriesF2 { bits }
    }

    /// Multiply by an exactly known polynomial (bit i = coefficient of x^i),
    /// preserving order.
    pub fn mul_poly(&self, poly: &[bool]) -> Self {
        let n = self.order();
        let mut bits = vec![false; n];
        for (j, &b) in poly.iter().enumerate() {
            if !b || j >= n {
                continue;
            }
            for i in 0..n - j {
                bits[i + j] ^= self.bits[i];
            }
        }
        SeriesF2 { bits }
    }

    /// Substitute x -> x^k; for k = 2^m this equals the 2^m-th power.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        let n = self.order();
        let mut bits = vec![false; n];
        for (i, &b) in self.bits.iter().enumerate() {
            match i.checked_mul(k) {
                Some(ki) if ki < n => bits[ki] = b,
                _ => break,
            }
        }
        SeriesF2 { bits }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Divide by x^k; requires the low k bits to vanish, reduces order by k.
    pub fn div_by_x_pow(&self, k: usize) -> Result<Self> {
        if self.order() < k || self.bits[..k].iter().any(|&b| b) {
            return Err(Error::Domain(format!(
                "series is not divisible by x^{k} within its order"
            )));
        }
        Ok(SeriesF2 {
            bits: self.bits[k..].to_vec(),
        })
    }
}

/// True when the rational is an odd integer; panics on non-integers.
pub fn rational_is_odd(c: &BigRational) -> bool {
    assert!(c.is_integer(), "parity of a non-integer rational");
    assert!(c.denom().is_one());
    c.numer().bit(0)
}
