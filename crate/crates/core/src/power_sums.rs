//! Power sums over degree level sets: S_k(n) = sum of i^k over the i with
//! e(i) = n.
//!
//! The generating functions G_k(x) = sum S_k(n) x^n satisfy the recurrence
//! G_k = (x sum_{j<k} C(k,j)(4^j + (-1)^k (-4)^j) G_j + 1) / (1 - T_k x)
//! with T_k = 2^k (2^(k+1) + 1). Only terms with j = k (mod 2) survive, which
//! is why the poles of G_k sit in a single parity class.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{IntPoly, RatPoly, RationalFunction};
use crate::stern::SternCache;

/// Memoized table of the generating functions G_k, built bottom-up in k.
pub struct GkTable {
    entries: Vec<RationalFunction>,
}

impl Default for GkTable {
    fn default() -> Self {
        Self::new()
    }
}

/// T_k = 2^k (2^(k+1) + 1), the growth rate of S_k(n).
pub fn t_constant(k: u32) -> BigInt {
    (BigInt::one() << k) * ((BigInt::one() << (k + 1)) + 1)
}

impl GkTable {
    pub fn new() -> Self {
        GkTable {
            entries: Vec::new(),
        }
    }

    /// G_k(x), built by the recurrence and memoized.
    pub fn gk(&mut self, k: usize) -> RationalFunction {
        while self.entries.len() <= k {
            let m = self.entries.len();
            let mut sum = RationalFunction::zero();
            for (j, gj) in self.entries.iter().enumerate() {
                let sign = if (m + j) % 2 == 0 {
                    BigInt::from(2)
                } else {
                    BigInt::zero()
                };
                // C(m,j) (4^j + (-1)^m (-4)^j) = 2 C(m,j) 4^j when j = m (mod 2).
                let c = num_integer::binomial(BigInt::from(m), BigInt::from(j))
                    * sign
                    * BigInt::from(4).pow(j as u32);
                if c.is_zero() {
                    continue;
                }
                sum = &sum + &(gj * &RationalFunction::from_int_poly(&IntPoly::constant(c)));
            }
            let num = &(&sum * &RationalFunction::from_int_poly(&IntPoly::x()))
                + &RationalFunction::one();
            let den = RationalFunction::from_int_poly(&IntPoly::from_coeffs(vec![
                BigInt::one(),
                -t_constant(m as u32),
            ]));
            let gm = num.div(&den).expect("1 - T_k x is nonzero");
            self.entries.push(gm);
        }
        self.entries[k].clone()
    }
}

/// S_k(n) as the coefficient of x^n in G_k; the recurrence guarantees a
/// nonnegative integer, which is asserted rather than trusted.
pub fn sk_value(k: usize, n: usize, table: &mut GkTable) -> BigInt {
    let g = table.gk(k);
    let series = g
        .series_expand(n + 1)
        .expect("G_k is regular at the origin");
    let c = series.coeff(n);
    assert!(
        c.is_integer() && !c.is_negative(),
        "S_{k}({n}) must be a nonnegative integer, got {c}"
    );
    c.to_integer()
}

const BRUTE_EXPONENT_CAP: u64 = 8;

/// Brute oracle: sum i^k over i in [2^n, (4^(n+1)-1)/3] with e(i) = n.
/// Capped at n = 8.
pub fn sk_brute(k: u32, n: u32, cache: &mut SternCache) -> Result<BigInt> {
    if u64::from(n) > BRUTE_EXPONENT_CAP {
        return Err(Error::CapExceeded {
            what: "sk_brute exponent",
            requested: n as u64,
            limit: BRUTE_EXPONENT_CAP,
        });
    }
    let mut sum = BigInt::zero();
    for i in 1u64 << n..=((1u64 << (2 * n + 2)) - 1) / 3 {
        if cache.degree(i)? == n {
            sum += BigInt::from(i).pow(k);
        }
    }
    Ok(sum)
}

/// Closed forms: S_1(n) = 10^n, S_2(n) = (35*36^n - 2*3^n)/33,
/// S_3(n) = (25*136^n - 4*10^n)/21. Divisibility is asserted. Errors for
/// k outside {1, 2, 3}.
pub fn sk_closed(k: u32, n: u32) -> Result<BigInt> {
    let exact_quotient = |num: BigInt, den: i64| {
        let (q, r) = num_integer::Integer::div_rem(&num, &BigInt::from(den));
        assert!(r.is_zero(), "closed form for S_{k}({n}) is not divisible by {den}");
        q
    };
    match k {
        1 => Ok(BigInt::from(10).pow(n)),
        2 => Ok(exact_quotient(
            BigInt::from(35) * BigInt::from(36).pow(n) - BigInt::from(2) * BigInt::from(3).pow(n),
            33,
        )),
        3 => Ok(exact_quotient(
            BigInt::from(25) * BigInt::from(136).pow(n) - BigInt::from(4) * BigInt::from(10).pow(n),
            21,
        )),
        _ => Err(Error::Domain(format!(
            "no closed form for S_{k}; only k in {{1, 2, 3}}"
        ))),
    }
}

/// True iff the reduced denominator of G_k divides the product of (1 - T_j x)
/// over j <= k with j = k (mod 2): all poles sit in the predicted parity class.
pub fn parity_structure_check(k: usize, table: &mut GkTable) -> bool {
    let g = table.gk(k);
    let mut product = RatPoly::one();
    let mut j = k % 2;
    while j <= k {
        let factor = RatPoly::from_int_poly(&IntPoly::from_coeffs(vec![
            BigInt::one(),
            -t_constant(j as u32),
        ]));
        product = &product * &factor;
        j += 2;
    }
    product.make_monic().div_exact(g.denominator()).is_some()
}

/// Partial fractions G_k = sum alpha_j / (1 - T_j x), returned as (T_j, alpha_j)
/// pairs sorted by decreasing T_j, with the reconstruction verified exactly.
/// Errors if any pole is repeated or falls outside the predicted set (either
/// would falsify the decomposition's shape).
pub fn alpha_decomposition(k: usize, table: &mut GkTable) -> Result<Vec<(BigInt, BigRational)>> {
    let g = table.gk(k);
    let den = g.denominator();
    let num = g.numerator();
    let simple = RatPoly::gcd_monic(den, &den.derivative());
    if simple.degree().unwrap_or(0) > 0 {
        return Err(Error::RepeatedPole(format!(
            "denominator of G_{k} has a repeated factor {simple}"
        )));
    }
    if num.degree() >= den.degree() {
        return Err(Error::Domain(format!(
            "G_{k} is not a proper fraction; no pole decomposition"
        )));
    }
    let den_deriv = den.derivative();
    let mut parts = Vec::new();
    let mut j = k % 2;
    while j <= k {
        let t = t_constant(j as u32);
        let x0 = BigRational::from(t.clone()).recip();
        if den.eval(&x0).is_zero() {
            // Residue at the simple pole x0, rescaled to the 1/(1 - T x) basis.
            let residue = num.eval(&x0) / den_deriv.eval(&x0);
            let alpha = -BigRational::from(t.clone()) * residue;
            parts.push((t, alpha));
        }
        j += 2;
    }
    if parts.len() != den.degree().unwrap_or(0) {
        return Err(Error::RepeatedPole(format!(
            "G_{k} has a pole outside the predicted parity class"
        )));
    }
    parts.sort_by(|a, b| b.0.cmp(&a.0));
    let mut rebuilt = RationalFunction::zero();
    for (t, alpha) in &parts {
        let term = RationalFunction::new(
            RatPoly::constant(alpha.clone()),
            RatPoly::from_coeffs(vec![BigRational::one(), -BigRational::from(t.clone())]),
        )
        .expect("1 - T x is nonzero");
        rebuilt = &rebuilt + &term;
    }
    if rebuilt != g {
        return Err(Error::Domain(format!(
            "partial fractions of G_{k} failed to reconstruct the original"
        )));
    }
    Ok(parts)
}

// ---- Tests ----

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::bigrat;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new_int(IntPoly::from_i64s(num), IntPoly::from_i64s(den)).unwrap()
    }

    #[test]
    fn growth_constants() {
        assert_eq!(t_constant(0), BigInt::from(3));
        assert_eq!(t_constant(1), BigInt::from(10));
        assert_eq!(t_constant(2), BigInt::from(36));
        assert_eq!(t_constant(3), BigInt::from(136));
    }

    #[test]
    fn generating_functions_match_displayed_forms() {
        let mut table = GkTable::new();
        assert_eq!(table.gk(0), rf(&[1], &[1, -3]));
        assert_eq!(table.gk(1), rf(&[1], &[1, -10]));
        // (1-x)/((1-3x)(1-36x)) = (1-x)/(1 - 39x + 108x^2).
        assert_eq!(table.gk(2), rf(&[1, -1], &[1, -39, 108]));
        // (1+14x)/((1-10x)(1-136x)) = (1+14x)/(1 - 146x + 1360x^2).
        assert_eq!(table.gk(3), rf(&[1, 14], &[1, -146, 1360]));
    }

    #[test]
    fn series_coefficients() {
        let mut table = GkTable::new();
        assert_eq!(sk_value(1, 1, &mut table), BigInt::from(10));
        assert_eq!(sk_value(2, 1, &mut table), BigInt::from(38));
        assert_eq!(sk_value(0, 3, &mut table), BigInt::from(27));
        for k in 0..=10 {
            assert_eq!(sk_value(k, 0, &mut table), BigInt::one(), "S_k(0)");
        }
    }

    #[test]
    fn brute_oracle_agrees() {
        let mut table = GkTable::new();
        let mut cache = SternCache::new();
        assert_eq!(sk_brute(3, 1, &mut cache).unwrap(), BigInt::from(160));
        assert_eq!(sk_brute(1, 0, &mut cache).unwrap(), BigInt::one());
        for k in 0..=4u32 {
            for n in 0..=6u32 {
                assert_eq!(
                    sk_brute(k, n, &mut cache).unwrap(),
                    sk_value(k as usize, n as usize, &mut table),
                    "S_{k}({n})"
                );
            }
        }
        assert!(sk_brute(1, 9, &mut cache).is_err());
    }

    #[test]
    fn closed_forms() {
        let mut table = GkTable::new();
        assert_eq!(sk_closed(1, 4).unwrap(), BigInt::from(10000));
        assert_eq!(sk_closed(2, 0).unwrap(), BigInt::one());
        assert_eq!(sk_closed(3, 2).unwrap(), BigInt::from(22000));
        assert!(sk_closed(4, 1).is_err());
        assert!(sk_closed(0, 1).is_err());
        for k in 1..=3u32 {
            for n in 0..=12u32 {
                assert_eq!(
                    sk_closed(k, n).unwrap(),
                    sk_value(k as usize, n as usize, &mut table),
                    "closed S_{k}({n})"
                );
            }
        }
    }

    #[test]
    fn poles_respect_parity() {
        let mut table = GkTable::new();
        for k in 0..=10 {
            assert!(parity_structure_check(k, &mut table), "parity of G_{k}");
        }
    }

    #[test]
    fn partial_fraction_values() {
        let mut table = GkTable::new();
        assert_eq!(
            alpha_decomposition(1, &mut table).unwrap(),
            vec![(BigInt::from(10), bigrat(1, 1))]
        );
        assert_eq!(
            alpha_decomposition(2, &mut table).unwrap(),
            vec![
                (BigInt::from(36), bigrat(35, 33)),
                (BigInt::from(3), bigrat(-2, 33))
            ]
        );
        assert_eq!(
            alpha_decomposition(3, &mut table).unwrap(),
            vec![
                (BigInt::from(136), bigrat(25, 21)),
                (BigInt::from(10), bigrat(-4, 21))
            ]
        );
    }

    #[test]
    fn partial_fractions_predict_sk() {
        let mut table = GkTable::new();
        for k in 0..=8usize {
            let parts = alpha_decomposition(k, &mut table).unwrap();
            for n in 0..=12u32 {
                let predicted: BigRational = parts
                    .iter()
                    .map(|(t, alpha)| alpha * BigRational::from(t.pow(n)))
                    .sum();
                assert!(predicted.is_integer());
                assert_eq!(
                    predicted.to_integer(),
                    sk_value(k, n as usize, &mut table),
                    "predicted S_{k}({n})"
                );
            }
        }
    }
}
