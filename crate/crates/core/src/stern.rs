//! Stern polynomials and the integer sequences they carry.
//!
//! B_0 = 0, B_1 = 1, B_2n = t*B_n, B_2n+1 = B_n + B_n+1. Evaluation at t = 1
//! recovers the diatomic sequence s(n). The degree sequence e(n) = deg B_n
//! satisfies its own three-branch recurrence, computed here without touching
//! polynomials so it can cross-check the polynomial path. The order sequence
//! d(n) = ord_{t=0} B_n is read off the polynomial, so comparing it with the
//! 2-adic valuation is a genuine two-route check.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{determinant, IntPoly, LaurentPoly, RationalFunction};

/// Memo tables for the polynomial, degree, order, and diatomic sequences.
///
/// For every cached n: deg[n] is the degree of bpoly[n], ord[n] its order at
/// t = 0, diatomic[n] its value at t = 1. The degree table is filled by the
/// integer recurrence, never from the polynomial.
pub struct SternCache {
    bpoly: HashMap<u64, IntPoly>,
    deg: HashMap<u64, u32>,
    ord: HashMap<u64, u32>,
    diatomic: HashMap<u64, BigInt>,
}

impl Default for SternCache {
    fn default() -> Self {
        Self::new()
    }
}

impl SternCache {
    pub fn new() -> Self {
        SternCache {
            bpoly: HashMap::new(),
            deg: HashMap::new(),
            ord: HashMap::new(),
            diatomic: HashMap::new(),
        }
    }

    fn ensure_poly(&mut self, n: u64) {
        if self.bpoly.contains_key(&n) {
            return;
        }
        let p = match n {
            0 => IntPoly::zero(),
            1 => IntPoly::one(),
            _ if n % 2 == 0 => self.poly(n / 2).shift_up(1),
            _ => &self.poly(n / 2) + &self.poly(n / 2 + 1),
        };
        self.bpoly.insert(n, p);
    }

    /// B_n(t).
    pub fn poly(&mut self, n: u64) -> IntPoly {
        self.ensure_poly(n);
        self.bpoly[&n].clone()
    }

    /// B_a(t) * B_b(t) without cloning the cached factors.
    pub fn poly_product(&mut self, a: u64, b: u64) -> IntPoly {
        self.ensure_poly(a);
        self.ensure_poly(b);
        &self.bpoly[&a] * &self.bpoly[&b]
    }

    /// Diatomic value s(n) = B_n(1), by its own recurrence.
    pub fn number(&mut self, n: u64) -> BigInt {
        if let Some(v) = self.diatomic.get(&n) {
            return v.clone();
        }
        let v = match n {
            0 => BigInt::from(0),
            1 => BigInt::from(1),
            _ if n % 2 == 0 => self.number(n / 2),
            _ => self.number(n / 2) + self.number(n / 2 + 1),
        };
        self.diatomic.insert(n, v.clone());
        v
    }

    /// Degree e(n) = deg B_n, by the integer recurrence
    /// e(2n) = e(n)+1, e(4n+1) = e(n)+1, e(4n+3) = e(n+1)+1.
    /// Errors for n = 0 (the zero polynomial has no degree).
    pub fn degree(&mut self, n: u64) -> Result<u32> {
        if n == 0 {
            return Err(Error::Domain("degree of B_0 = 0 is undefined".into()));
        }
        if let Some(&v) = self.deg.get(&n) {
            return Ok(v);
        }
        let v = match n {
            1 => 0,
            2 => 1,
            _ if n % 2 == 0 => self.degree(n / 2)? + 1,
            _ if n % 4 == 1 => self.degree(n / 4)? + 1,
            _ => self.degree(n / 4 + 1)? + 1,
        };
        self.deg.insert(n, v);
        Ok(v)
    }

    /// Order d(n) = multiplicity of the root t = 0 of B_n, read off the
    /// polynomial itself. Errors for n = 0.
    pub fn order(&mut self, n: u64) -> Result<u32> {
        if n == 0 {
            return Err(Error::Domain("order of B_0 = 0 is undefined".into()));
        }
        if let Some(&v) = self.ord.get(&n) {
            return Ok(v);
        }
        self.ensure_poly(n);
        let v = self.bpoly[&n]
            .valuation()
            .expect("B_n is nonzero for n >= 1") as u32;
        self.ord.insert(n, v);
        Ok(v)
    }
}

// ---- Closed forms and identities ----

/// 2-adic valuation of n. Errors for n = 0.
pub fn nu(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::Domain("2-adic valuation of 0 is undefined".into()));
    }
    Ok(n.trailing_zeros())
}

/// Which neighbor of a power of two a closed form describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pow2Sign {
    Minus,
    Plus,
}

/// Closed form for B at 2^n - 1 or 2^n + 1 (n >= 1):
/// B_{2^n-1} = 1 + t + ... + t^(n-1), and B_{2^n+1} adds one extra t.
pub fn closed_form_pow2(n: u32, sign: Pow2Sign) -> IntPoly {
    assert!(n >= 1, "closed form needs n >= 1");
    let geo = IntPoly::geometric(n as usize);
    match sign {
        Pow2Sign::Minus => geo,
        Pow2Sign::Plus => &geo + &IntPoly::x(),
    }
}

/// Middle coefficient A_n of the three-term recurrence
/// B_{n+1} = A_n * B_n - B_{n-1}, with nu = nu(n):
/// A_n = t^(-nu) * (2(1 + t + ... + t^(nu-1)) + t). Requires n >= 1.
pub fn a_coefficient(n: u64) -> LaurentPoly {
    assert!(n >= 1, "A_n needs n >= 1");
    let mu = n.trailing_zeros() as usize;
    let base = &IntPoly::geometric(mu).scalar_mul(&BigInt::from(2)) + &IntPoly::x();
    LaurentPoly::new(base, -(mu as i64))
}

/// Verify B_{n+1} = A_n * B_n - B_{n-1} as Laurent polynomials. Requires n >= 1.
pub fn three_term_check(cache: &mut SternCache, n: u64) -> bool {
    assert!(n >= 1, "three-term identity needs n >= 1");
    let lhs = LaurentPoly::from_poly(cache.poly(n + 1));
    let rhs = &a_coefficient(n).mul_poly(&cache.poly(n))
        - &LaurentPoly::from_poly(cache.poly(n - 1));
    lhs == rhs
}

/// B_n as the determinant of the n-by-n system built from the three-term
/// recurrence: unknowns (B_n, ..., B_1), one row per recurrence step plus the
/// normalization row B_1 = 1, with the first column replaced by the right-hand
/// side constants (Cramer's rule with unit system determinant). Errors for
/// n < 2.
pub fn stern_poly_determinant(n: u64) -> Result<RationalFunction> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "determinant representation needs n >= 2, got {n}"
        )));
    }
    let n = usize::try_from(n).expect("determinant size fits usize");
    let zero = RationalFunction::zero();
    let one = RationalFunction::one();
    let mut m = vec![vec![zero; n]; n];
    // Rows 0..n-2: B_k - A_{k-1} B_{k-1} + B_{k-2} = 0 for k = n-i. The k = 3
    // row's B_1 term is a known constant and lives in the right-hand side.
    for i in 0..n - 2 {
        let k = (n - i) as u64;
        m[i][i] = one.clone();
        m[i][i + 1] = -&a_coefficient(k - 1).to_rational_function();
        if k > 3 {
            m[i][i + 2] = one.clone();
        }
    }
    // Row n-2: B_2 - A_1 B_1 = 0.
    m[n - 2][n - 2] = one.clone();
    m[n - 2][n - 1] = -&a_coefficient(1).to_rational_function();
    // Row n-1: B_1 = 1.
    m[n - 1][n - 1] = one.clone();
    // First column <- right-hand side constants.
    for (r, row) in m.iter_mut().enumerate() {
        row[0] = RationalFunction::zero();
        if n >= 3 && r == n - 3 {
            row[0] = -&one;
        }
        if r == n - 1 {
            row[0] = one.clone();
        }
    }
    Ok(determinant(&m))
}

/// Smallest-witness preimage of (p, q) under n -> (d(n), e(n)):
/// 2^p when p = q, otherwise 2^p * (2^(q-p+1) + 1). Errors when p > q or the
/// witness overflows u64.
pub fn phi_preimage(p: u32, q: u32) -> Result<u64> {
    if p > q {
        return Err(Error::Domain(format!(
            "order cannot exceed degree: ({p}, {q}) has no preimage"
        )));
    }
    let overflow = || Error::Domain(format!("witness for ({p}, {q}) exceeds u64"));
    if p == q {
        return 1u64.checked_shl(p).ok_or_else(overflow);
    }
    let inner = 1u64
        .checked_shl(q - p + 1)
        .and_then(|v| v.checked_add(1))
        .ok_or_else(overflow)?;
    inner.checked_shl(p).ok_or_else(overflow)
}

// ---- Tests ----
