//! Closed forms for the reciprocal sums `Σ 1/(B_i(t)·B_{i+1}(t))`.
//!
//! The auxiliary polynomial family `S_k(t)` drives the closed form. This
//! module verifies the supporting bilinear identities, the closed-form
//! theorem over exact sweeps, the proof-level recurrences of the partial
//! sums, and the diatomic specialization at `t = 1`.

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{IntPoly, RationalFunction};
use crate::stern::SternCache;

/// Default bound on the largest Stern index a reciprocal sum may touch.
pub const DEFAULT_RECIPROCAL_CAP: u64 = 1 << 14;

/// Hard bound on the index range of [`urbiha_sum`].
pub const URBIHA_CAP: u64 = 1 << 20;

// ---- Auxiliary polynomial family ----

/// Memoized table of the auxiliary polynomials `S_k(t)` defined by
/// `S_1 = S_2 = 0`, `S_2k = t·S_k`, `S_{2k+1} = S_k + S_{k+1} + t^⌊log₂ k⌋`.
#[derive(Debug, Default)]
pub struct AuxSternFamily {
    spoly: HashMap<u64, IntPoly>,
}

impl AuxSternFamily {
    /// Creates an empty table.
    pub fn new() -> Self {
        Self::default()
    }

    fn ensure(&mut self, k: u64) {
        if self.spoly.contains_key(&k) {
            return;
        }
        let value = if k <= 2 {
            IntPoly::zero()
        } else if k % 2 == 0 {
            self.ensure(k / 2);
            self.spoly[&(k / 2)].shift_up(1)
        } else {
            let m = k / 2;
            self.ensure(m);
            self.ensure(m + 1);
            let sum = &self.spoly[&m] + &self.spoly[&(m + 1)];
            &sum + &IntPoly::monomial(BigInt::one(), floor_log2(m) as usize)
        };
        self.spoly.insert(k, value);
    }

    /// Returns `S_k(t)`; `k` must be positive.
    pub fn poly(&mut self, k: u64) -> Result<IntPoly> {
        if k == 0 {
            return Err(Error::Domain(
                "auxiliary polynomials are defined for k >= 1".into(),
            ));
        }
        self.ensure(k);
        Ok(self.spoly[&k].clone())
    }
}

fn floor_log2(n: u64) -> u32 {
    assert!(n > 0, "floor_log2 requires a positive argument");
    n.ilog2()
}

/// Largest index `k·2^(n+1)` of a reciprocal sum, guarded by `cap`.
fn scaled_index(k: u64, n: u32, cap: u64) -> Result<u64> {
    let shift = n.saturating_add(1);
    let end = (k as u128).checked_shl(shift).unwrap_or(u128::MAX);
    if end > cap as u128 {
        return Err(Error::CapExceeded {
            what: "reciprocal-sum index range",
            requested: end.min(u64::MAX as u128) as u64,
            limit: cap,
        });
    }
    Ok(end as u64)
}

// ---- Bilinear identities ----

/// Verifies `(2−t)(B_n·S_{n+1} − S_n·B_{n+1}) = t^⌊log₂ n⌋(B_{n+1} − B_n − t + 1)`.
pub fn lemma_identity_check(
    cache: &mut SternCache,
    family: &mut AuxSternFamily,
    n: u64,
) -> Result<bool> {
    if n == 0 {
        return Err(Error::Domain("the bilinear identity starts at n = 1".into()));
    }
    let bn = cache.poly(n);
    let bn1 = cache.poly(n + 1);
    let sn = family.poly(n)?;
    let sn1 = family.poly(n + 1)?;
    let two_minus_t = IntPoly::from_i64s(&[2, -1]);
    let lhs = &two_minus_t * &(&(&bn * &sn1) - &(&sn * &bn1));
    let scale = IntPoly::monomial(BigInt::one(), floor_log2(n) as usize);
    let delta = &(&bn1 - &bn) + &IntPoly::from_i64s(&[1, -1]);
    Ok(lhs == &scale * &delta)
}

/// Verifies the denominator-cleared halving identity
/// `(2−t)·S_{2k+1}·B_k = (2−t)·S_k·B_{2k+1} + t^⌊log₂ k⌋(B_{k+1} − (t−1)(B_k + 1))`.
pub fn corollary_identity_check(
    cache: &mut SternCache,
    family: &mut AuxSternFamily,
    k: u64,
) -> Result<bool> {
    if k == 0 {
        return Err(Error::Domain("the halving identity starts at k = 1".into()));
    }
    let bk = cache.poly(k);
    let bk1 = cache.poly(k + 1);
    let b2k1 = cache.poly(2 * k + 1);
    let sk = family.poly(k)?;
    let s2k1 = family.poly(2 * k + 1)?;
    let two_minus_t = IntPoly::from_i64s(&[2, -1]);
    let lhs = &two_minus_t * &(&s2k1 * &bk);
    let scale = IntPoly::monomial(BigInt::one(), floor_log2(k) as usize);
    let t_minus_one = IntPoly::from_i64s(&[-1, 1]);
    let tail = &bk1 - &(&t_minus_one * &(&bk + &IntPoly::one()));
    let rhs = &(&two_minus_t * &(&sk * &b2k1)) + &(&scale * &tail);
    Ok(lhs == rhs)
}

// ---- Fraction accumulator ----

/// Degree at which the accumulator falls back to a full gcd normalization.
const NORMALIZE_DEGREE: usize = 96;

/// Running sum of polynomial reciprocals kept as an integer-coefficient
/// numerator/denominator pair.
///
/// Addition cancels the shared factor between the incoming denominator and
/// the accumulated one (Henrici's scheme). Consecutive terms share a known
/// Stern factor, passed as a hint so the common case avoids a polynomial gcd
/// entirely; any factor the hint misses is caught by the drift guard or the
/// final canonicalization in [`RationalFunction::new_int`].
struct RatAccum {
    num: IntPoly,
    den: IntPoly,
}

impl RatAccum {
    fn zero() -> Self {
        RatAccum {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    fn split(a: &IntPoly, b: &IntPoly) -> (IntPoly, IntPoly, IntPoly) {
        let g = IntPoly::gcd(a, b);
        let qa = a.div_exact(&g).expect("gcd divides its first argument");
        let qb = b.div_exact(&g).expect("gcd divides its second argument");
        (g, qa, qb)
    }

    /// Adds `1/d`. `hint` is a probable common factor of `d` and the current
    /// denominator; correctness does not depend on it.
    fn add_recip(&mut self, d: &IntPoly, hint: Option<&IntPoly>) {
        assert!(!d.is_zero(), "reciprocal of the zero polynomial");
        let (g, den_g, d_g) = match hint {
            Some(h) if !h.is_one() => match (self.den.div_exact(h), d.div_exact(h)) {
                (Some(a), Some(b)) => (h.clone(), a, b),
                _ => Self::split(&self.den, d),
            },
            _ => Self::split(&self.den, d),
        };
        let mut num = &(&self.num * &d_g) + &den_g;
        let mut den = &self.den * &d_g;
        if !g.is_one() {
            if let (Some(nq), Some(dq)) = (num.div_exact(&g), den.div_exact(&g)) {
                num = nq;
                den = dq;
            } else {
                let g2 = IntPoly::gcd(&num, &g);
                if !g2.is_one() {
                    num = num.div_exact(&g2).expect("common factor divides numerator");
                    den = den.div_exact(&g2).expect("common factor divides denominator");
                }
            }
        }
        let v = num
            .valuation()
            .unwrap_or(0)
            .min(den.valuation().unwrap_or(0));
        if v > 0 {
            num = IntPoly::from_coeffs(num.coeffs()[v..].to_vec());
            den = IntPoly::from_coeffs(den.coeffs()[v..].to_vec());
        }
        if den.degree().unwrap_or(0) > NORMALIZE_DEGREE {
            let g3 = IntPoly::gcd(&num, &den);
            if !g3.is_one() {
                num = num.div_exact(&g3).expect("gcd divides numerator");
                den = den.div_exact(&g3).expect("gcd divides denominator");
            }
        }
        self.num = num;
        self.den = den;
    }

    fn into_rational_function(self) -> Result<RationalFunction> {
        RationalFunction::new_int(self.num, self.den)
    }
}

// ---- Closed-form theorem ----

/// Exact value of `Σ_{i=k·2ⁿ}^{k·2^(n+1)} 1/(B_i(t)·B_{i+1}(t))`.
pub fn reciprocal_sum_lhs(
    cache: &mut SternCache,
    k: u64,
    n: u32,
    cap: u64,
) -> Result<RationalFunction> {
    if k == 0 {
        return Err(Error::Domain("reciprocal sums require k >= 1".into()));
    }
    let end = scaled_index(k, n, cap)?;
    let start = end >> 1;
    let mut acc = RatAccum::zero();
    let mut prev: Option<IntPoly> = None;
    for i in start..=end {
        let d = cache.poly_product(i, i + 1);
        acc.add_recip(&d, prev.as_ref());
        prev = Some(cache.poly(i + 1));
    }
    acc.into_rational_function()
}

/// Closed form for the same sum:
/// `(2−t)·S_k / (t^(n+⌊log₂ k⌋+1)·B_k) + (1 + B_M) / (t^(n+1)·B_k·B_M)`
/// with `M = k·2^(n+1) + 1`.
pub fn reciprocal_sum_rhs(
    cache: &mut SternCache,
    family: &mut AuxSternFamily,
    k: u64,
    n: u32,
    cap: u64,
) -> Result<RationalFunction> {
    if k == 0 {
        return Err(Error::Domain("reciprocal sums require k >= 1".into()));
    }
    let end = scaled_index(k, n, cap)?;
    let m = end.checked_add(1).ok_or(Error::CapExceeded {
        what: "reciprocal-sum index range",
        requested: u64::MAX,
        limit: cap,
    })?;
    let bk = cache.poly(k);
    let bm = cache.poly(m);
    let sk = family.poly(k)?;
    let two_minus_t = IntPoly::from_i64s(&[2, -1]);
    let exp1 = n as usize + floor_log2(k) as usize + 1;
    let term1 = RationalFunction::new_int(&two_minus_t * &sk, bk.shift_up(exp1))?;
    let num2 = &IntPoly::one() + &bm;
    let den2 = (&bk * &bm).shift_up(n as usize + 1);
    let term2 = RationalFunction::new_int(num2, den2)?;
    Ok(&term1 + &term2)
}

/// Checks `lhs = rhs` for every pair `(k, n)` with `k·2^(n+1) ≤ cap`;
/// returns `(pairs_checked, failures)`.
///
/// Two pairs whose index ranges coincide (`(k, n)` and `(k/2, n+1)` for even
/// `k`) denote the same sum term for term, so the left side is computed once
/// per distinct range; every pair is still compared against its own right side.
pub fn reciprocal_theorem_batch(
    cache: &mut SternCache,
    family: &mut AuxSternFamily,
    cap: u64,
) -> Result<(u64, u64)> {
    let mut lhs_memo: HashMap<(u64, u32), RationalFunction> = HashMap::new();
    let mut checked = 0u64;
    let mut failures = 0u64;
    let mut k = 1u64;
    while k.checked_mul(2).is_some_and(|e| e <= cap) {
        let mut n = 0u32;
        while scaled_index(k, n, cap).is_ok() {
            let tz = k.trailing_zeros();
            let key = (k >> tz, n + tz);
            let lhs = match lhs_memo.entry(key) {
                Entry::Occupied(entry) => entry.into_mut(),
                Entry::Vacant(entry) => {
                    entry.insert(reciprocal_sum_lhs(cache, key.0, key.1, cap)?)
                }
            };
            let rhs = reciprocal_sum_rhs(cache, family, k, n, cap)?;
            checked += 1;
            if *lhs != rhs {
                failures += 1;
            }
            n += 1;
        }
        k += 1;
    }
    Ok((checked, failures))
}

// ---- Pointwise verification ----

/// Number of evaluation points that make a pointwise comparison of
/// `lhs(k, n)` against the closed form conclusive.
pub fn required_pointwise_points(
    cache: &mut SternCache,
    family: &mut AuxSternFamily,
    k: u64,
    n: u32,
) -> Result<usize> {
    let rhs = reciprocal_sum_rhs(cache, family, k, n, u64::MAX)?;
    let num_deg = rhs.numerator().degree().unwrap_or(0);
    let den_deg = rhs.denominator().degree().unwrap_or(0);
    Ok(num_deg + den_deg + 1)
}

/// Value of `B_n` at a fixed point, memoized over `n`.
fn stern_value(memo: &mut HashMap<u64, BigRational>, x: &BigRational, n: u64) -> BigRational {
    if let Some(v) = memo.get(&n) {
        return v.clone();
    }
    let v = if n % 2 == 0 {
        x * &stern_value(memo, x, n / 2)
    } else {
        stern_value(memo, x, n / 2) + stern_value(memo, x, n / 2 + 1)
    };
    memo.insert(n, v.clone());
    v
}

/// Compares the reciprocal sum against its closed form by exact evaluation
/// at the supplied points.
///
/// The points must be positive (so every `B_i` evaluates to a positive
/// number and no denominator vanishes), pairwise distinct, and at least as
/// many as [`required_pointwise_points`] — enough to separate the two sides
/// as rational functions once denominators are cleared.
pub fn reciprocal_identity_pointwise(
    cache: &mut SternCache,
    family: &mut AuxSternFamily,
    k: u64,
    n: u32,
    points: &[BigRational],
    cap: u64,
) -> Result<bool> {
    if k == 0 {
        return Err(Error::Domain("reciprocal sums require k >= 1".into()));
    }
    let end = scaled_index(k, n, cap)?;
    let start = end >> 1;
    let rhs = reciprocal_sum_rhs(cache, family, k, n, cap)?;
    let required = {
        let num_deg = rhs.numerator().degree().unwrap_or(0);
        let den_deg = rhs.denominator().degree().unwrap_or(0);
        num_deg + den_deg + 1
    };
    if points.len() < required {
        return Err(Error::Domain(format!(
            "pointwise check needs at least {required} evaluation points, got {}",
            points.len()
        )));
    }
    let mut seen = BTreeSet::new();
    for x in points {
        if *x <= BigRational::zero() {
            return Err(Error::Domain(
                "pointwise evaluation points must be positive".into(),
            ));
        }
        if !seen.insert(x.clone()) {
            return Err(Error::Domain(
                "pointwise evaluation points must be distinct".into(),
            ));
        }
    }
    for x in points {
        let mut memo: HashMap<u64, BigRational> = HashMap::new();
        memo.insert(0, BigRational::zero());
        memo.insert(1, BigRational::one());
        let mut lhs_value = BigRational::zero();
        let mut prev = stern_value(&mut memo, x, start);
        for i in start..=end {
            let next = stern_value(&mut memo, x, i + 1);
            lhs_value += (&prev * &next).recip();
            prev = next;
        }
        let rhs_value = rhs
            .eval(x)
            .expect("positive points cannot hit a denominator zero");
        if lhs_value != rhs_value {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---- Partial-sum recurrences ----

/// Verifies the three halving recurrences satisfied by the partial sums
/// `P_{k,n} = Σ_{i=k·2ⁿ}^{k·2^(n+1)} 1/(B_i·B_{i+1})`:
/// stepping `n → n+1` (checked for `n ∈ {0, 1}`), doubling `k → 2k`, and the
/// odd step `k → 2k+1`.
pub fn p_q_recurrence_checks(cache: &mut SternCache, k: u64, cap: u64) -> Result<bool> {
    if k == 0 {
        return Err(Error::Domain("partial-sum recurrences require k >= 1".into()));
    }
    let p0 = reciprocal_sum_lhs(cache, k, 0, cap)?;
    let p1 = reciprocal_sum_lhs(cache, k, 1, cap)?;
    let p2 = reciprocal_sum_lhs(cache, k, 2, cap)?;
    let q2k = reciprocal_sum_lhs(cache, 2 * k, 0, cap)?;
    let p2k1 = reciprocal_sum_lhs(cache, 2 * k + 1, 0, cap)?;
    let t = RationalFunction::from_int_poly(&IntPoly::x());

    let correction = |cache: &mut SternCache, a: u64, b: u64| -> Result<RationalFunction> {
        RationalFunction::new_int(IntPoly::one(), cache.poly_product(a, b).shift_up(1))
    };

    let step1 = &p0.div(&t)? - &correction(cache, 2 * k + 1, 4 * k + 1)?;
    if p1 != step1 {
        return Ok(false);
    }
    let step2 = &p1.div(&t)? - &correction(cache, 4 * k + 1, 8 * k + 1)?;
    if p2 != step2 {
        return Ok(false);
    }
    if q2k != step1 {
        return Ok(false);
    }
    let num3 = &IntPoly::from_i64s(&[1, 1]) * &cache.poly(k + 1);
    let den3 = (&cache.poly_product(k, 2 * k + 1) * &cache.poly(4 * k + 3)).shift_up(1);
    let odd_step = &p0.div(&t)? - &RationalFunction::new_int(num3, den3)?;
    Ok(p2k1 == odd_step)
}

// ---- Diatomic specialization ----

/// Exact value of `Σ_{i=m}^{2m−1} 1/(s(i)·s(i+1))`; equals 1 for every `m ≥ 1`.
pub fn urbiha_sum(cache: &mut SternCache, m: u64) -> Result<BigRational> {
    if m == 0 {
        return Err(Error::Domain("the diatomic reciprocal sum requires m >= 1".into()));
    }
    let end = m
        .checked_mul(2)
        .filter(|&e| e <= URBIHA_CAP)
        .ok_or(Error::CapExceeded {
            what: "diatomic reciprocal-sum index range",
            requested: m.saturating_mul(2),
            limit: URBIHA_CAP,
        })?;
    let mut sum = BigRational::zero();
    for i in m..end {
        let d = cache.number(i) * cache.number(i + 1);
        sum += BigRational::new(BigInt::one(), d);
    }
    Ok(sum)
}

/// Checks `urbiha_sum(m) = 1` for every `m ≤ max_m` by sliding the window
/// one index at a time; returns `(checked, failures)`.
pub fn urbiha_batch(cache: &mut SternCache, max_m: u64) -> Result<(u64, u64)> {
    if max_m == 0 {
        return Err(Error::Domain("the diatomic reciprocal sum requires m >= 1".into()));
    }
    if max_m.saturating_mul(2) > URBIHA_CAP {
        return Err(Error::CapExceeded {
            what: "diatomic reciprocal-sum index range",
            requested: max_m.saturating_mul(2),
            limit: URBIHA_CAP,
        });
    }
    let term = |cache: &mut SternCache, i: u64| -> BigRational {
        let d = cache.number(i) * cache.number(i + 1);
        BigRational::new(BigInt::one(), d)
    };
    let one = BigRational::one();
    let mut checked = 0u64;
    let mut failures = 0u64;
    let mut sum = term(cache, 1);
    for m in 1..=max_m {
        if m > 1 {
            // window [m−1, 2m−3] → [m, 2m−1]
            sum = sum - term(cache, m - 1) + term(cache, 2 * m - 2) + term(cache, 2 * m - 1);
        }
        checked += 1;
        if sum != one {
            failures += 1;
        }
    }
    Ok((checked, failures))
}

// ---- Tests ----
