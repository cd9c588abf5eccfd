mod common;

use chaincodes::distance::min_hamming_exact;
use chaincodes::factor::galois_extension;
use chaincodes::qc::{block_shift, canonical_decompose, field_construction, module_bound, QcCode, RowMode};
use chaincodes::{factor_xn_minus_1, BaseRing, PolyOps};
use common::*;
use proptest::prelude::*;

const BUDGET: u128 = 1 << 20;

fn qc_code(r: &BaseRing, n: usize, ell: usize, seeds: &[Vec<Vec<u64>>]) -> QcCode<BaseRing> {
    let gens = seeds.iter().map(|t| t[..ell].iter().map(|s| r.preduce_cyclic(&poly_from(r, s), n)).collect()).collect();
    QcCode::new(r, n, ell, gens).unwrap()
}

fn tuples() -> impl Strategy<Value = Vec<Vec<Vec<u64>>>> {
    prop::collection::vec(prop::collection::vec(prop::collection::vec(any::<u64>(), 0..8), 3), 1..3)
}

const CASES: &[(&str, usize, usize)] =
    &[("F2[u]/u^2", 7, 2), ("F2[u]/u^2", 3, 2), ("GR(4,1)", 3, 3), ("F3[u]/u^2", 4, 2), ("F2", 7, 3), ("F4", 3, 2), ("GR(9,1)", 2, 2)];

#[test]
fn block_shift_rotates_whole_blocks() {
    let w: Vec<u8> = (0..6).collect();
    assert_eq!(block_shift(&w, 2), vec![4, 5, 0, 1, 2, 3]);
    assert_eq!(block_shift(&block_shift(&block_shift(&w, 2), 2), 2), w);
}

#[test]
fn field_construction_is_quasi_cyclic() {
    for (lit, n, v) in [
        ("F2[u]/u^3", 7usize, "x^4+x^3+(1+u+u^2)x^2+u^2x+(1+u^2)"),
        ("F2[u]/u^2", 7, "x^3+x+1"),
        ("F2[u]/u^2", 7, "(x+1)(x^3+x^2+1)"),
        ("F3[u]/u^2", 4, "x^2+1"),
        ("F2[u]/u^3", 5, "x^2+ux+1"),
    ] {
        let r = ring(lit);
        let v = poly(&r, v);
        let divides = r.prem(&r.xn_minus_1(n), &v).unwrap().is_zero();
        for mode in [RowMode::Basis, RowMode::AllShifts] {
            let fc = field_construction(&r, &v, n, mode, BUDGET).unwrap();
            assert_eq!(fc.code.length(), n * r.s());
            let invariant = fc.code.rows().iter().all(|w| fc.code.contains(&block_shift(w, fc.ell)));
            if mode == RowMode::AllShifts || divides {
                assert!(invariant, "{lit} {mode:?}");
            }
            let d = min_hamming_exact(&fc.code, BUDGET).unwrap().unwrap();
            assert!(d >= fc.product.bound, "{lit} {mode:?}: {d} < {}", fc.product.bound);
            if mode == RowMode::AllShifts {
                assert!(d >= fc.bound(), "{lit}: {d} < {}", fc.bound());
            }
        }
    }
    assert!(field_construction(&ring("GR(4,1)"), &poly(&ring("GR(4,1)"), "x+1"), 3, RowMode::Basis, BUDGET).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn views_round_trip(ci in 0..CASES.len(), seeds in tuples()) {
        let (lit, n, ell) = CASES[ci];
        let r = ring(lit);
        let qc = qc_code(&r, n, ell, &seeds);
        for g in qc.generators() {
            let w = qc.vector_of(g);
            prop_assert_eq!(w.len(), n * ell);
            prop_assert_eq!(&qc.tuple_of(&w), g);
            prop_assert!(qc.linear_code().contains(&w));
            prop_assert!(qc.linear_code().contains(&block_shift(&w, ell)));
        }
        let ext = galois_extension(&r, ell).unwrap();
        let packed = qc.to_extension(&ext).unwrap();
        let back = QcCode::from_extension(&ext, n, &packed).unwrap();
        prop_assert!(back.linear_code().same_code(&qc.linear_code()));
    }

    #[test]
    fn decomposition_is_faithful(ci in 0..CASES.len(), seeds in tuples(), pick in any::<u64>()) {
        let (lit, n, ell) = CASES[ci];
        let r = ring(lit);
        let qc = qc_code(&r, n, ell, &seeds);
        let lc = qc.linear_code();
        let fac = factor_xn_minus_1(&r, n).unwrap();
        let dec = canonical_decompose(&qc, &fac).unwrap();
        prop_assert_eq!(dec.constituents().len(), fac.len());
        prop_assert_eq!(dec.log_size(), lc.log_size());
        let span = lc.span();
        let size = span.size().unwrap();
        for k in 0..8u128 {
            let w = span.codeword((pick as u128).wrapping_mul(k + 1) % size);
            let parts = dec.split(&qc, &w);
            for (c, p) in dec.constituents().iter().zip(&parts) {
                prop_assert!(c.code.contains(p));
            }
            prop_assert_eq!(&dec.reconstruct(&parts).unwrap(), &w);
            prop_assert_eq!(&dec.reconstruct_via_splitting_ring(&parts).unwrap(), &w);
        }
    }

    #[test]
    fn module_bound_is_sound(ci in 0..CASES.len(), seeds in tuples()) {
        let (lit, n, ell) = CASES[ci];
        let r = ring(lit);
        let qc = qc_code(&r, n, ell, &seeds);
        let Ok(Some(d)) = min_hamming_exact(&qc.linear_code(), BUDGET) else { return Ok(()) };
        if let Ok(mb) = module_bound(&qc, &galois_extension(&r, ell).unwrap(), BUDGET) {
            prop_assert!(d >= mb.bound, "module {} > {d}", mb.bound);
        }
    }

    #[test]
    fn layered_terms_follow_the_distance_order(ci in 0..CASES.len(), seeds in tuples()) {
        let (lit, n, ell) = CASES[ci];
        let r = ring(lit);
        let qc = qc_code(&r, n, ell, &seeds);
        let fac = factor_xn_minus_1(&r, n).unwrap();
        let Ok(lb) = canonical_decompose(&qc, &fac).unwrap().layered_bound(BUDGET) else { return Ok(()) };
        let d = &lb.constituent_distances;
        prop_assert!(lb.order.windows(2).all(|w| d[w[0]] >= d[w[1]]));
        prop_assert_eq!(lb.terms.len(), lb.order.len());
        prop_assert_eq!(lb.bound, lb.terms.iter().map(|t| t.1).min().unwrap_or(0));
        if let Some((set, v)) = lb.terms.first() {
            let c = canonical_decompose(&qc, &fac).unwrap();
            let db = chaincodes::distance::min_distance(&c.column_code(set).unwrap().linear_code(), BUDGET).unwrap();
            prop_assert_eq!(*v, d[set[0]] * db);
        }
    }
}
