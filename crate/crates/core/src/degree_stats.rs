//! Degree statistics of the Stern polynomials on dyadic ranges.
//!
//! H_n(x) = sum of x^e(m) over m in [1, 2^n] counts how often each degree
//! occurs. This module carries the H_n recurrence, its brute-force oracle,
//! the closed formula for the coefficients e(i,n), the bivariate generating
//! function check, the Chebyshev-based pointwise decomposition of H_n, and
//! the min/max degree statistics on dyadic intervals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{sqrt_exact, GaussianRational, IntPoly, RatPoly};
use crate::stern::SternCache;

/// Degree histogram on [1, 2^n]: counts[i] = |{m : e(m) = i}|.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeHistogram {
    pub n: u32,
    pub counts: Vec<BigInt>,
}

impl DegreeHistogram {
    /// Histogram read off H_n; the defining invariants are asserted.
    pub fn new(n: u32) -> Self {
        let h = h_poly(n);
        let mut counts = h.coeffs().to_vec();
        counts.resize(n as usize + 1, BigInt::zero());
        let total: BigInt = counts.iter().sum();
        assert_eq!(total, BigInt::one() << n, "histogram total is 2^n");
        assert!(counts[n as usize].is_one(), "exactly one m with e(m) = n");
        DegreeHistogram { n, counts }
    }
}

// ---- H_n and its oracle ----

/// H_n(x) by the recurrence H_{n+2} = x H_{n+1} + 2x H_n - x^{n+1} + 1,
/// H_0 = 1, H_1 = x + 1.
pub fn h_poly(n: u32) -> IntPoly {
    let mut prev = IntPoly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = IntPoly::from_i64s(&[1, 1]);
    let two_x = IntPoly::from_i64s(&[0, 2]);
    let x = IntPoly::x();
    for m in 2..=n {
        let next = &(&(&x * &cur) + &(&two_x * &prev))
            - &(&IntPoly::monomial(BigInt::one(), m as usize - 1) - &IntPoly::one());
        prev = cur;
        cur = next;
    }
    cur
}

const ENUMERATION_CAP: u32 = 20;

fn enumeration_guard(n: u32, what: &'static str) -> Result<()> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what,
            requested: n as u64,
            limit: ENUMERATION_CAP as u64,
        });
    }
    Ok(())
}

/// Direct-summation oracle for H_n: walk every m in [1, 2^n]. Capped at
/// n = 20 (cost 2^n).
pub fn h_poly_brute(n: u32, cache: &mut SternCache) -> Result<IntPoly> {
    enumeration_guard(n, "h_poly_brute exponent")?;
    let mut counts = vec![BigInt::zero(); n as usize + 1];
    for m in 1..=1u64 << n {
        counts[cache.degree(m)? as usize] += 1;
    }
    Ok(IntPoly::from_coeffs(counts))
}

/// Degree counts over odd arguments: H_{n+1}(x) - x H_n(x), whose coefficient
/// of x^i counts m in [0, 2^n - 1] with e(2m+1) = i.
pub fn odd_degree_poly(n: u32) -> IntPoly {
    &h_poly(n + 1) - &h_poly(n).shift_up(1)
}

// ---- Closed formula for e(i,n) ----

fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(a), BigInt::from(b))
}

/// e(i,n) = |{m in [1, 2^n] : e(m) = i}| by the three-case closed formula:
/// 3^i on the low range, a rational expression that must collapse to an
/// integer on the middle range, and 1 at i = n. Returns 0 outside [0, n].
/// Errors only if the middle-range expression fails to be a nonnegative
/// integer (surfacing a formula discrepancy instead of rounding).
pub fn e_count_closed(i: i64, n: i64) -> Result<BigInt> {
    if i < 0 || n < 0 || i > n {
        return Ok(BigInt::zero());
    }
    if i == n {
        return Ok(BigInt::one());
    }
    let low_top = n - n / 2 - 1;
    if i <= low_top {
        return Ok(BigInt::from(3).pow(i as u32));
    }
    // Middle range n - floor(n/2) <= i <= n - 1:
    // 2^n C(i, n-i) / 2^(i+1) + 3^i (1 + 2^n sum_j (2n-5j) C(j, n-j) / (j 6^j)).
    let pow2n = BigRational::from(BigInt::one() << (n as u32));
    let first = &pow2n * BigRational::new(binom(i, n - i), BigInt::one() << (i as u32 + 1));
    let mut sum = BigRational::zero();
    for j in (n - n / 2)..=i {
        let term = BigRational::new(
            BigInt::from(2 * n - 5 * j) * binom(j, n - j),
            BigInt::from(j) * BigInt::from(6).pow(j as u32),
        );
        sum += term;
    }
    let inner = BigRational::one() + &pow2n * sum;
    let value = first + BigRational::from(BigInt::from(3).pow(i as u32)) * inner;
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegral(format!(
            "e({i},{n}) evaluated to {value}"
        )));
    }
    Ok(value.to_integer())
}

/// Brute count of m in [1, 2^n] with e(m) - d(m) = i. Capped at n = 20.
pub fn c_count(i: i64, n: u32, cache: &mut SternCache) -> Result<BigInt> {
    enumeration_guard(n, "c_count exponent")?;
    let mut count = BigInt::zero();
    for m in 1..=1u64 << n {
        let diff = cache.degree(m)? as i64 - cache.order(m)? as i64;
        if diff == i {
            count += 1;
        }
    }
    Ok(count)
}

/// Closed form of c_count. Both e and d grow by one under doubling, so
/// e(m) - d(m) equals e of the odd part of m; splitting m = 2^j * (odd)
/// collects the odd-argument degree counts of every dyadic level:
/// c(i,n) = [i=0] + sum over r in [1,n] of (e(i,r) - e(i-1,r-1)).
/// At i = 0 this grows like n (every power of two lands there), so the
/// set count is NOT the coefficient of x^i in H_n.
pub fn c_count_via_histograms(i: i64, n: u32) -> Result<BigInt> {
    let mut count = if i == 0 { BigInt::one() } else { BigInt::zero() };
    for r in 1..=n as i64 {
        count += e_count_closed(i, r)? - e_count_closed(i - 1, r - 1)?;
    }
    Ok(count)
}

// ---- Dyadic extrema ----

/// Brute (min, max) of e over [2^(n-1), 2^n]. Requires 2 <= n <= 20.
pub fn stats_extrema(n: u32, cache: &mut SternCache) -> Result<(u32, u32)> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "dyadic extrema need n >= 2, got {n}"
        )));
    }
    enumeration_guard(n, "stats_extrema exponent")?;
    let mut min = u32::MAX;
    let mut max = 0;
    for m in 1u64 << (n - 1)..=1u64 << n {
        let e = cache.degree(m)?;
        min = min.min(e);
        max = max.max(e);
    }
    Ok((min, max))
}

const DEGREE_RANGE_CAP: u32 = 10;

fn degree_range_guard(n: u32, what: &'static str) -> Result<()> {
    if n > DEGREE_RANGE_CAP {
        return Err(Error::CapExceeded {
            what,
            requested: n as u64,
            limit: DEGREE_RANGE_CAP as u64,
        });
    }
    Ok(())
}

/// Brute (min, max) solution of e(i) = n, scanned over [1, 4^(n+1)]. The
/// window is safe: on [2^(m-1), 2^m] the minimum of e is floor(m/2), so any
/// i > 4^(n+1) has e(i) > n; the found maximum (4^(n+1)-1)/3 sits well inside
/// the window. Requires n <= 10.
pub fn stats_degree_range(n: u32, cache: &mut SternCache) -> Result<(u64, u64)> {
    degree_range_guard(n, "stats_degree_range exponent")?;
    let mut min = None;
    let mut max = None;
    for i in 1..=1u64 << (2 * n + 2) {
        if cache.degree(i)? == n {
            min.get_or_insert(i);
            max = Some(i);
        }
    }
    let (Some(min), Some(max)) = (min, max) else {
        return Err(Error::Domain(format!("no i with e(i) = {n} in the window")));
    };
    Ok((min, max))
}

/// Brute count of |{i : e(i) = n}|, over the same safe window. Requires n <= 10.
pub fn degree_level_count(n: u32, cache: &mut SternCache) -> Result<u64> {
    degree_range_guard(n, "degree_level_count exponent")?;
    let mut count = 0;
    for i in 1..=1u64 << (2 * n + 2) {
        if cache.degree(i)? == n {
            count += 1;
        }
    }
    Ok(count)
}

// ---- Bivariate generating function ----

fn x_truncated(p: &RatPoly, order_x: usize) -> RatPoly {
    RatPoly::from_coeffs(p.coeffs()[..p.coeffs().len().min(order_x)].to_vec())
}

/// Expand (1 - xy(1+y-y^2)) / ((1-y)(1-xy)(1-xy-2xy^2)) as a power series in
/// y with polynomial coefficients in x, truncating x-degrees at order_x and
/// keeping order_y coefficients; true iff every coefficient matches h_poly.
pub fn bivariate_genfunc_check(order_x: usize, order_y: usize) -> bool {
    let xp = |coeffs: &[i64]| RatPoly::from_int_poly(&IntPoly::from_i64s(coeffs));
    // Numerator in y: 1 - xy - xy^2 + xy^3.
    let num_y = [xp(&[1]), xp(&[0, -1]), xp(&[0, -1]), xp(&[0, 1])];
    // Denominator in y: the product of the three factors, expanded by hand:
    // 1 - (1+2x)y + x^2 y^2 + (2x+x^2) y^3 - 2x^2 y^4.
    let den_y = [
        xp(&[1]),
        xp(&[-1, -2]),
        xp(&[0, 0, 1]),
        xp(&[0, 2, 1]),
        xp(&[0, 0, -2]),
    ];
    let mut coeffs: Vec<RatPoly> = Vec::with_capacity(order_y);
    for m in 0..order_y {
        let mut c = num_y.get(m).cloned().unwrap_or_else(RatPoly::zero);
        for j in 1..den_y.len().min(m + 1) {
            c = &c - &(&den_y[j] * &coeffs[m - j]);
        }
        coeffs.push(x_truncated(&c, order_x));
    }
    coeffs.iter().enumerate().all(|(m, c)| {
        *c == x_truncated(&RatPoly::from_int_poly(&h_poly(m as u32)), order_x)
    })
}

// ---- Chebyshev decomposition ----

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebyshevKind {
    First,
    Second,
}

/// Chebyshev polynomial by the explicit coefficient formulas
/// T_n = (n/2) sum_k (-1)^k C(n-k,k) (2x)^(n-2k) / (n-k) and
/// U_n = sum_k (-1)^k C(n-k,k) (2x)^(n-2k); n = 0 gives 1 for both kinds.
pub fn chebyshev_poly(kind: ChebyshevKind, n: u32) -> IntPoly {
    if n == 0 {
        return IntPoly::one();
    }
    let n = n as i64;
    let mut coeffs = vec![BigRational::zero(); n as usize + 1];
    for k in 0..=n / 2 {
        let pow2 = BigRational::from(BigInt::one() << ((n - 2 * k) as u32));
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let base = BigRational::from(BigInt::from(sign) * binom(n - k, k)) * &pow2;
        let term = match kind {
            ChebyshevKind::First => {
                base * BigRational::new(BigInt::from(n), BigInt::from(2 * (n - k)))
            }
            ChebyshevKind::Second => base,
        };
        coeffs[(n - 2 * k) as usize] = term;
    }
    RatPoly::from_coeffs(coeffs)
        .to_int_poly()
        .expect("Chebyshev coefficients are integers")
}

/// Verify H_n(x0) = 1/(1-3x0) + x0^n/2 + h_n(x0) exactly, where
/// h_n(x) = (sqrt(2x) i)^n / (2(1-3x)) * (8 T_n(z) - 3(x+3) U_n(z)) at
/// z = -sqrt(2x) i / 4. Requires 2*x0 to be a rational square (so sqrt(2x0)
/// is rational and z is a Gaussian rational) and x0 != 1/3 (pole).
pub fn h_decomposition_check(n: u32, x0: &BigRational) -> Result<bool> {
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    if *x0 == third {
        return Err(Error::Domain("x0 = 1/3 is a pole of the decomposition".into()));
    }
    let r = sqrt_exact(&(x0 * BigRational::from(BigInt::from(2)))).ok_or_else(|| {
        Error::Domain(format!("2*x0 = {} is not the square of a rational", x0 * BigRational::from(BigInt::from(2))))
    })?;
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let z = GaussianRational::new(BigRational::zero(), -(&r * quarter));
    let t = chebyshev_poly(ChebyshevKind::First, n).eval_gaussian(&z);
    let u = chebyshev_poly(ChebyshevKind::Second, n).eval_gaussian(&z);
    let three_x_plus_9 = BigRational::from(BigInt::from(3)) * (x0 + BigRational::from(BigInt::from(3)));
    let inner = &t.scale(&BigRational::from(BigInt::from(8))) - &u.scale(&three_x_plus_9);
    let one_minus_3x = BigRational::one() - BigRational::from(BigInt::from(3)) * x0;
    let factor = GaussianRational::new(BigRational::zero(), r)
        .pow(n)
        .scale(&(BigRational::from(BigInt::from(2)) * one_minus_3x.clone()).recip());
    let h = &factor * &inner;
    let real_part = one_minus_3x.recip()
        + x0.pow(n as i32) / BigRational::from(BigInt::from(2));
    let rhs = &GaussianRational::from_rational(real_part) + &h;
    let lhs = h_poly(n).eval_rational(x0);
    Ok(rhs.is_real() && rhs.re == lhs)
}

// ---- Coefficient transform ----

/// b[i] = c^i * sum_{j<=i} a[j]/c^j, the inverse of multiplying a coefficient
/// list by (1 - cx); computed by the equivalent recurrence b[i] = c b[i-1] + a[i].
/// Errors when c = 0.
pub fn geometric_prefix_transform(
    a: &[BigRational],
    c: &BigRational,
) -> Result<Vec<BigRational>> {
    if c.is_zero() {
        return Err(Error::Domain("geometric prefix transform needs c != 0".into()));
    }
    let mut out: Vec<BigRational> = Vec::with_capacity(a.len());
    for (i, ai) in a.iter().enumerate() {
        let prev = if i == 0 {
            BigRational::zero()
        } else {
            c * &out[i - 1]
        };
        out.push(prev + ai);
    }
    Ok(out)
}

// ---- Tests ----

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::bigrat;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    #[test]
    fn h_poly_small_values() {
        assert_eq!(h_poly(0), p(&[1]));
        assert_eq!(h_poly(1), p(&[1, 1]));
        assert_eq!(h_poly(2), p(&[1, 2, 1]));
        assert_eq!(h_poly(3), p(&[1, 3, 3, 1]));
        assert_eq!(h_poly(4), p(&[1, 3, 7, 4, 1]));
    }

    #[test]
    fn h_poly_matches_brute_oracle() {
        let mut cache = SternCache::new();
        for n in 0..=10 {
            assert_eq!(h_poly(n), h_poly_brute(n, &mut cache).unwrap(), "H_{n}");
            let total = h_poly(n).eval_int(&BigInt::one());
            assert_eq!(total, BigInt::one() << n);
            assert!(h_poly(n).coeff(0).is_one());
            assert!(h_poly(n).leading_coeff().unwrap().is_one());
        }
        assert!(h_poly_brute(21, &mut cache).is_err());
    }

    #[test]
    fn histogram_invariants() {
        for n in 0..=12 {
            let h = DegreeHistogram::new(n);
            assert_eq!(h.counts.len(), n as usize + 1);
        }
    }

    #[test]
    fn odd_degree_counts() {
        assert_eq!(odd_degree_poly(0), p(&[1]));
        assert_eq!(odd_degree_poly(1), p(&[1, 1]));
        let mut cache = SternCache::new();
        for n in 0..=10u32 {
            let poly = odd_degree_poly(n);
            let mut counts = vec![BigInt::zero(); n as usize + 2];
            for m in 0..1u64 << n {
                counts[cache.degree(2 * m + 1).unwrap() as usize] += 1;
            }
            assert_eq!(poly, IntPoly::from_coeffs(counts), "odd degrees at {n}");
            assert!(poly.coeffs().iter().all(|c| !c.is_negative()));
            assert_eq!(poly.eval_int(&BigInt::one()), BigInt::one() << n);
        }
    }

    #[test]
    fn closed_count_examples() {
        assert_eq!(e_count_closed(0, 9).unwrap(), BigInt::one());
        assert_eq!(e_count_closed(5, 5).unwrap(), BigInt::one());
        assert_eq!(e_count_closed(1, 2).unwrap(), BigInt::from(2));
        assert_eq!(e_count_closed(-1, 5).unwrap(), BigInt::zero());
        assert_eq!(e_count_closed(6, 5).unwrap(), BigInt::zero());
        for n in 0..=14i64 {
            for i in 0..=(n - n / 2 - 1) {
                assert_eq!(e_count_closed(i, n).unwrap(), BigInt::from(3).pow(i as u32));
            }
        }
    }

    #[test]
    fn closed_count_matches_h_poly() {
        for n in 0..=10i64 {
            let h = h_poly(n as u32);
            for i in 0..=n {
                let closed = e_count_closed(i, n).unwrap();
                assert_eq!(closed, h.coeff(i as usize), "e({i},{n}) vs H_n");
            }
        }
    }

    #[test]
    fn set_count_matches_level_sums() {
        let mut cache = SternCache::new();
        for n in 0..=10u32 {
            for i in 0..=n as i64 {
                assert_eq!(
                    c_count(i, n, &mut cache).unwrap(),
                    c_count_via_histograms(i, n).unwrap(),
                    "c({i},{n}) brute vs closed"
                );
            }
        }
    }

    #[test]
    fn set_count_is_not_the_degree_histogram() {
        // e - d is invariant under doubling, so every power of two sits in
        // the i = 0 class: c(0,n) = n + 1, while H_n has constant term 1.
        let mut cache = SternCache::new();
        for n in 1..=8u32 {
            assert_eq!(c_count(0, n, &mut cache).unwrap(), BigInt::from(n + 1));
            assert_eq!(h_poly(n).coeff(0), BigInt::one());
        }
    }

    #[test]
    fn coefficient_recurrence() {
        // e(i, n+2) = e(i-1, n+1) + 2 e(i-1, n) - [i = n+1].
        for n in 0..=12i64 {
            for i in 1..=n + 2 {
                let lhs = e_count_closed(i, n + 2).unwrap();
                let delta = if i == n + 1 { BigInt::one() } else { BigInt::zero() };
                let rhs = e_count_closed(i - 1, n + 1).unwrap()
                    + BigInt::from(2) * e_count_closed(i - 1, n).unwrap()
                    - delta;
                assert_eq!(lhs, rhs, "coefficient recurrence at ({i},{n})");
            }
        }
    }

    #[test]
    fn c_count_examples() {
        let mut cache = SternCache::new();
        // n = 3: {1, 2, 4, 8} all have e = d; n = 2: only m = 3 has e - d = 1.
        assert_eq!(c_count(0, 3, &mut cache).unwrap(), BigInt::from(4));
        assert_eq!(c_count(1, 2, &mut cache).unwrap(), BigInt::one());
        assert!(c_count(0, 21, &mut cache).is_err());
    }

    #[test]
    fn extrema_on_dyadic_intervals() {
        let mut cache = SternCache::new();
        assert_eq!(stats_extrema(2, &mut cache).unwrap(), (1, 2));
        assert_eq!(stats_extrema(4, &mut cache).unwrap(), (2, 4));
        assert_eq!(stats_extrema(5, &mut cache).unwrap(), (2, 5));
        assert!(stats_extrema(1, &mut cache).is_err());
        assert!(stats_extrema(21, &mut cache).is_err());
        for n in 2..=12 {
            assert_eq!(stats_extrema(n, &mut cache).unwrap(), (n / 2, n));
        }
    }

    #[test]
    fn degree_level_ranges_and_counts() {
        let mut cache = SternCache::new();
        assert_eq!(stats_degree_range(0, &mut cache).unwrap(), (1, 1));
        assert_eq!(stats_degree_range(1, &mut cache).unwrap(), (2, 5));
        assert_eq!(stats_degree_range(2, &mut cache).unwrap(), (4, 21));
        assert!(stats_degree_range(11, &mut cache).is_err());
        for n in 0..=6u32 {
            assert_eq!(
                stats_degree_range(n, &mut cache).unwrap(),
                (1 << n, ((1u64 << (2 * n + 2)) - 1) / 3)
            );
            assert_eq!(degree_level_count(n, &mut cache).unwrap(), 3u64.pow(n));
        }
    }

    #[test]
    fn bivariate_generating_function() {
        assert!(bivariate_genfunc_check(1, 1));
        assert!(bivariate_genfunc_check(8, 8));
        assert!(bivariate_genfunc_check(12, 10));
    }

    #[test]
    fn chebyshev_values() {
        use ChebyshevKind::{First, Second};
        assert_eq!(chebyshev_poly(First, 0), p(&[1]));
        assert_eq!(chebyshev_poly(Second, 0), p(&[1]));
        assert_eq!(chebyshev_poly(First, 1), p(&[0, 1]));
        assert_eq!(chebyshev_poly(Second, 1), p(&[0, 2]));
        assert_eq!(chebyshev_poly(First, 2), p(&[-1, 0, 2]));
        assert_eq!(chebyshev_poly(Second, 2), p(&[-1, 0, 4]));
    }

    #[test]
    fn chebyshev_matches_recurrence_oracle() {
        // Independent oracle: P_{n+1} = 2x P_n - P_{n-1} with the two seeds.
        let two_x = p(&[0, 2]);
        for (kind, p1) in [
            (ChebyshevKind::First, p(&[0, 1])),
            (ChebyshevKind::Second, p(&[0, 2])),
        ] {
            let mut prev = p(&[1]);
            let mut cur = p1;
            for n in 2..=12u32 {
                let next = &(&two_x * &cur) - &prev;
                prev = cur;
                cur = next;
                assert_eq!(chebyshev_poly(kind, n), cur, "{kind:?} at {n}");
            }
        }
    }

    #[test]
    fn decomposition_at_rational_points() {
        assert!(h_decomposition_check(0, &bigrat(1, 2)).unwrap());
        assert!(h_decomposition_check(3, &bigrat(1, 2)).unwrap());
        for n in 0..=10 {
            for x0 in [bigrat(1, 2), bigrat(2, 1), bigrat(9, 2), bigrat(0, 1)] {
                assert!(
                    h_decomposition_check(n, &x0).unwrap(),
                    "decomposition at n={n}, x0={x0}"
                );
            }
        }
        assert!(h_decomposition_check(3, &bigrat(1, 3)).is_err());
        assert!(h_decomposition_check(3, &bigrat(3, 2)).is_err());
    }

    #[test]
    fn prefix_transform_examples() {
        let a = vec![bigrat(1, 1), bigrat(0, 1), bigrat(0, 1)];
        assert_eq!(
            geometric_prefix_transform(&a, &bigrat(3, 1)).unwrap(),
            vec![bigrat(1, 1), bigrat(3, 1), bigrat(9, 1)]
        );
        assert_eq!(
            geometric_prefix_transform(&[bigrat(1, 1)], &bigrat(1, 1)).unwrap(),
            vec![bigrat(1, 1)]
        );
        assert!(geometric_prefix_transform(&a, &bigrat(0, 1)).is_err());
    }

    proptest! {
        #[test]
        fn prefix_transform_inverts_one_minus_cx(
            a in prop::collection::vec((-9i64..=9, 1i64..=4).prop_map(|(n, d)| bigrat(n, d)), 1..8),
            cn in 1i64..=5,
        ) {
            let c = bigrat(cn, 1);
            let b = geometric_prefix_transform(&a, &c).unwrap();
            let bp = RatPoly::from_coeffs(b);
            let factor = RatPoly::from_coeffs(vec![bigrat(1, 1), -c]);
            let product = &factor * &bp;
            for (i, ai) in a.iter().enumerate() {
                prop_assert_eq!(&product.coeff(i), ai);
            }
        }
    }
}
