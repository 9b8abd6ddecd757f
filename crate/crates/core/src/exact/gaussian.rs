//! Gaussian rationals a + b·i with exact rational parts.
//!
//! Used to evaluate polynomials at purely imaginary points where square roots
//! of negative rationals arise; results that should be real are checked with
//! `is_real`, never rounded.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussianRational::new(BigRational::one(), BigRational::zero())
    }

    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussianRational::new(re, BigRational::zero())
    }

    pub fn from_int(n: BigInt) -> Self {
        GaussianRational::from_rational(BigRational::from(n))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        GaussianRational::new(&self.re * c, &self.im * c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = GaussianRational::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;

    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;

    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;

    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::bigrat;

    #[test]
    fn multiplication_and_powers_of_i() {
        let i = GaussianRational::i();
        assert_eq!(i.pow(2), GaussianRational::from_rational(bigrat(-1, 1)));
        assert_eq!(i.pow(3), -&i);
        assert_eq!(i.pow(4), GaussianRational::one());
        let z = GaussianRational::new(bigrat(1, 2), bigrat(-1, 4));
        let w = GaussianRational::new(bigrat(2, 1), bigrat(3, 1));
        assert_eq!(
            &z * &w,
            GaussianRational::new(bigrat(7, 4), bigrat(1, 1))
        );
    }

    #[test]
    fn conjugate_product_is_real_and_nonnegative() {
        let z = GaussianRational::new(bigrat(3, 5), bigrat(-7, 2));
        let n = &z * &z.conj();
        assert!(n.is_real());
        assert_eq!(n.re, bigrat(9, 25) + bigrat(49, 4));
    }
}
