//! Heavier cross-checks that exercise the identity machinery on wider ranges
//! than the unit tests: window decompositions of B over dyadic blocks, the
//! partial-sum recurrences, the auxiliary family's structure, and exact vs
//! pointwise agreement for a reciprocal-sum pair beyond the batch sweep.

use num_rational::BigRational;

use stern_poly::exact::IntPoly;
use stern_poly::reciprocal_sums::{
    p_q_recurrence_checks, reciprocal_identity_pointwise, reciprocal_sum_lhs,
    reciprocal_sum_rhs, required_pointwise_points, AuxSternFamily, DEFAULT_RECIPROCAL_CAP,
};
use stern_poly::stern::SternCache;

#[test]
fn window_decompositions_hold_across_blocks() {
    // B_{4k+1} = (1+t) B_k + B_{k+1} and B_{4k+3} = B_k + (1+t) B_{k+1}:
    // both follow by unfolding the defining recurrence twice.
    let mut cache = SternCache::new();
    let one_plus_t = IntPoly::from_i64s(&[1, 1]);
    for k in 1..=4096u64 {
        let b_k = cache.poly(k);
        let b_k1 = cache.poly(k + 1);
        let lhs1 = cache.poly(4 * k + 1);
        assert_eq!(lhs1, &(&one_plus_t * &b_k) + &b_k1, "B_(4k+1) at k = {k}");
        let lhs3 = cache.poly(4 * k + 3);
        assert_eq!(lhs3, &b_k + &(&one_plus_t * &b_k1), "B_(4k+3) at k = {k}");
    }
}

#[test]
fn partial_sum_recurrences_hold_widely() {
    let mut cache = SternCache::new();
    for k in 1..=256u64 {
        assert!(
            p_q_recurrence_checks(&mut cache, k, DEFAULT_RECIPROCAL_CAP).unwrap(),
            "partial-sum recurrences fail at k = {k}"
        );
    }
}

#[test]
fn aux_family_structure() {
    let mut family = AuxSternFamily::new();
    for k in 2..=1024u64 {
        let doubled = family.poly(2 * k).unwrap();
        let base = family.poly(k).unwrap();
        assert_eq!(doubled, base.shift_up(1), "S_(2k) = t S_k at k = {k}");
    }
    for k in 3..=2048u64 {
        let s = family.poly(k).unwrap();
        if let Some(d) = s.degree() {
            assert!((d as u32) < k.ilog2(), "deg S_{k} breaks the log bound");
        }
    }
}

#[test]
fn pointwise_check_agrees_with_exact_beyond_the_sweep() {
    // (k, n) = (3, 11) spans indices up to 3 * 2^12 = 12288, past the batch
    // sweep bound, but still inside the per-call cap: compare the exact
    // rational-function verdict against the pointwise one.
    let mut cache = SternCache::new();
    let mut family = AuxSternFamily::new();
    let (k, n) = (3u64, 11u32);
    let lhs = reciprocal_sum_lhs(&mut cache, k, n, DEFAULT_RECIPROCAL_CAP).unwrap();
    let rhs = reciprocal_sum_rhs(&mut cache, &mut family, k, n, DEFAULT_RECIPROCAL_CAP).unwrap();
    assert_eq!(lhs, rhs, "exact identity fails at (k, n) = ({k}, {n})");

    let required = required_pointwise_points(&mut cache, &mut family, k, n).unwrap();
    let points: Vec<BigRational> = (1..=required as i64)
        .map(|i| BigRational::from_integer(i.into()))
        .collect();
    assert!(
        reciprocal_identity_pointwise(&mut cache, &mut family, k, n, &points, DEFAULT_RECIPROCAL_CAP)
            .unwrap(),
        "pointwise verdict disagrees at (k, n) = ({k}, {n})"
    );
}
