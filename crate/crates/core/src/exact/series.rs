//! Truncated formal power series with exact rational coefficients.
//!
//! A series stores exactly the coefficients of x^0 .. x^(order-1); its order
//! is the length of the coefficient vector. Binary operations are valid on
//! the mutually determined prefix, so they truncate to the minimum order,
//! mirroring how hand computation with partial expansions works.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::rat_poly::RatPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        TruncatedSeries {
            coeffs: coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        }
    }

    /// Number of known coefficients; the series is determined mod x^order.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        assert!(i < self.order(), "coefficient {i} beyond order {}", self.order());
        self.coeffs[i].clone()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries {
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> Self {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, rhs: &TruncatedSeries) -> Self {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, rhs: &TruncatedSeries) -> Self {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiply by a polynomial without losing order: the product of a series
    /// known mod x^N with an exactly known polynomial is determined mod x^N.
    pub fn mul_poly(&self, p: &RatPoly) -> Self {
        let n = self.order();
        let mut coeffs = vec![BigRational::zero(); n];
        for (j, b) in p.coeffs().iter().enumerate() {
            if b.is_zero() || j >= n {
                continue;
            }
            for (i, a) in self.coeffs.iter().enumerate().take(n - j) {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Substitute x -> x^k (k >= 1): coefficient of x^(k i) becomes coeff(i).
    /// Order is preserved: every coefficient below x^order of the result is
    /// determined by coefficients below x^order of the input.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        let n = self.order();
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            match i.checked_mul(k) {
                Some(ki) if ki < n => coeffs[ki] = a.clone(),
                _ => break,
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Divide by x^k. Requires the first k known coefficients to vanish and
    /// reduces the order by k (the top k coefficients become unknown).
    pub fn div_by_x_pow(&self, k: usize) -> Result<Self> {
        if self.order() < k {
            return Err(Error::Domain(format!(
                "cannot divide a series of order {} by x^{k}",
                self.order()
            )));
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::Domain(format!(
                "series has a nonzero coefficient below x^{k}; division would leave the ring"
            )));
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Equality of the mutually known prefix.
    pub fn eq_prefix(&self, rhs: &TruncatedSeries) -> bool {
        let n = self.order().min(rhs.order());
        self.coeffs[..n] == rhs.coeffs[..n]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::bigrat;

    fn s(coeffs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|&c| bigrat(c, 1)).collect())
    }

    #[test]
    fn truncating_semantics() {
        let a = s(&[1, 2, 3, 4]);
        let b = s(&[1, 1]);
        assert_eq!(a.add(&b).order(), 2);
        assert_eq!(a.mul(&b), s(&[1, 3]));
        assert!(a.sub(&a).is_zero());
        assert!(a.eq_prefix(&s(&[1, 2])));
        assert!(!a.eq_prefix(&s(&[1, 3])));
    }

    #[test]
    fn substitution_spreads_exponents() {
        let a = s(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(a.substitute_power(2), s(&[1, 0, 2, 0, 3, 0]));
        assert_eq!(a.substitute_power(1), a);
        assert_eq!(a.substitute_power(5), s(&[1, 0, 0, 0, 0, 2]));
    }

    #[test]
    fn division_by_x_power() {
        let a = s(&[0, 0, 7, 8]);
        assert_eq!(a.div_by_x_pow(2).unwrap(), s(&[7, 8]));
        assert_eq!(a.div_by_x_pow(0).unwrap(), a);
        assert!(s(&[0, 1]).div_by_x_pow(2).is_err());
        assert!(s(&[1, 0]).div_by_x_pow(1).is_err());
    }

    #[test]
    fn polynomial_multiplication_keeps_order() {
        let a = s(&[1, 1, 1, 1]);
        let p = RatPoly::from_coeffs(vec![bigrat(1, 1), bigrat(1, 1)]);
        assert_eq!(a.mul_poly(&p), s(&[1, 2, 2, 2]));
        assert_eq!(a.mul_poly(&RatPoly::zero()), TruncatedSeries::zero(4));
    }
}
