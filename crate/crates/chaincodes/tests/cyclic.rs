mod common;

use chaincodes::cyclic::{
    bch_bound, ms_inverse, ms_inverse_base, ms_transform, trace_codeword, trace_coordinate_vanishes, zero_coord_criterion,
    zero_exponents, CyclicCode,
};
use chaincodes::distance::min_hamming_exact;
use chaincodes::factor::minimal_polynomial;
use chaincodes::{factor_xn_minus_1, BaseRing, ChainRing, CommRing, PolyOps};
use common::*;
use proptest::prelude::*;

fn divisors(r: &BaseRing, n: usize) -> Vec<P> {
    let fac = factor_xn_minus_1(r, n).unwrap();
    (0u32..1 << fac.len())
        .map(|mask| {
            let idx: Vec<usize> = (0..fac.len()).filter(|i| mask >> i & 1 == 1).collect();
            fac.product_of(&idx)
        })
        .collect()
}

#[test]
fn bch_bound_is_sound_for_free_codes() {
    let mut checked = 0;
    for lit in ["F2[u]/u^2", "GR(4,1)", "GR(8,1)", "F3[u]/u^2", "GR(9,1)", "F4", "F7", "F2[u]/u^3"] {
        let r = ring(lit);
        for n in coprime_lengths(&r, 15).into_iter().filter(|n| *n > 1) {
            let fac = factor_xn_minus_1(&r, n).unwrap();
            for g in divisors(&r, n) {
                let code = CyclicCode::free(&r, n, &g).unwrap();
                let Ok(d) = min_hamming_exact(&code.linear_code(), 1 << 18) else { continue };
                let bound = bch_bound(&code, fac.splitting_ring(), fac.xi()).unwrap();
                if let Some(d) = d {
                    assert!(d >= bound, "{lit} n={n} g={}: d={d} < {bound}", r.pformat(&g, "x"));
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn duals_of_free_codes_are_orthogonal() {
    for lit in ["F2[u]/u^2", "GR(4,1)", "F3[u]/u^2", "F5[u]/u^2"] {
        let r = ring(lit);
        for n in coprime_lengths(&r, 12) {
            for g in divisors(&r, n) {
                let c = CyclicCode::free(&r, n, &g).unwrap();
                let d = c.dual_free().unwrap();
                let (rows, drows) = (c.generator_matrix_free().unwrap(), d.generator_matrix_free().unwrap());
                for a in &rows {
                    for b in &drows {
                        let dot = a.iter().zip(b).fold(r.zero(), |acc, (x, y)| r.add(&acc, &r.mul(x, y)));
                        assert!(r.is_zero(&dot), "{lit} n={n}");
                    }
                }
                assert_eq!(c.log_size() + d.log_size(), n * r.s());
            }
        }
    }
}

#[test]
fn family_codes_have_the_expected_size() {
    let r = ring("F2[u]/u^2");
    let fam = vec![poly(&r, "x^3+x+1"), poly(&r, "x+1"), poly(&r, "x^3+x^2+1")];
    let c = CyclicCode::from_family(&r, fam).unwrap();
    let lc = c.linear_code();
    assert_eq!(lc.log_size(), c.log_size());
    assert_eq!(lc.cardinality(), Some(32));
    assert!(c.contains(&c.single_generator()));
    let words = chaincodes::distance::enumerate_codewords(&lc, 1 << 10).unwrap();
    assert_eq!(words.len(), 32);
    assert!(CyclicCode::from_family(&r, vec![poly(&r, "x+1"), poly(&r, "x+1")]).is_err());
}

#[test]
fn trace_codewords_are_annihilated_by_the_check_polynomial() {
    for (lit, n, exps) in [("F2[u]/u^2", 7usize, vec![1u64]), ("F2[u]/u^2", 15, vec![1, 3, 5]), ("GR(4,1)", 7, vec![0, 3]), ("F5[u]/u^2", 8, vec![1, 2])] {
        let r = ring(lit);
        let fac = factor_xn_minus_1(&r, n).unwrap();
        let (ext, xi) = (fac.splitting_ring(), fac.xi());
        let h = r.pproduct(&exps.iter().map(|&i| minimal_polynomial(ext, xi, (n as u64 - i) % n as u64).unwrap()).collect::<Vec<_>>());
        for seed in 0..25u128 {
            let coeffs: Vec<_> = (0..exps.len()).map(|j| ext.element((seed * 7919 + j as u128 * 104_729) % ext.cardinality())).collect();
            let c = r.poly(trace_codeword(ext, xi, n, &coeffs, &exps).unwrap());
            assert!(r.pmul_cyclic(&c, &h, n).is_zero(), "{lit} n={n}");
        }
    }
    let r = ring("F2[u]/u^2");
    let fac = factor_xn_minus_1(&r, 7).unwrap();
    let one = fac.splitting_ring().one();
    assert!(trace_codeword(fac.splitting_ring(), fac.xi(), 7, &[one.clone(), one], &[1, 2]).is_err());
}

#[test]
fn zero_coordinate_criterion_implies_vanishing() {
    for (lit, m) in [("F2", 4), ("F2[u]/u^2", 3), ("GR(4,1)", 2), ("F4", 2)] {
        let r = ring(lit);
        let ext = chaincodes::factor::galois_extension(&r, m).unwrap();
        let n = (r.residue_size().pow(m as u32) - 1) as usize;
        let xi = ext.find_unit_of_order(n as u128).unwrap();
        for idx in 0..ext.cardinality() {
            let a = ext.element(idx);
            for v in 0..n as u64 {
                for i in [0u64, 1, 3, 5] {
                    if zero_coord_criterion(&ext, n, &a, v, i) {
                        assert!(trace_coordinate_vanishes(&ext, &xi, n, &a, v, i));
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn mattson_solomon_round_trip(ri in 0..RINGS.len(), ni in 0usize..5, seeds in prop::collection::vec(any::<u64>(), 0..16)) {
        let r = ring(RINGS[ri]);
        let lengths: Vec<usize> = coprime_lengths(&r, 15).into_iter().filter(|n| *n > 1).collect();
        let n = lengths[ni % lengths.len()];
        let fac = factor_xn_minus_1(&r, n).unwrap();
        let c = r.preduce_cyclic(&poly_from(&r, &seeds), n);
        let spec = ms_transform(fac.splitting_ring(), fac.xi(), n, &c).unwrap();
        prop_assert_eq!(ms_inverse_base(fac.splitting_ring(), &spec).unwrap(), Some(c.clone()));
        prop_assert_eq!(ms_inverse(fac.splitting_ring(), &spec).unwrap().len(), n);
    }

    #[test]
    fn spectra_of_codewords_vanish_on_generator_zeros(ri in 0..4usize, gi in any::<u32>(), m in prop::collection::vec(any::<u64>(), 0..8)) {
        let r = ring(["F2[u]/u^2", "GR(4,1)", "F3[u]/u^2", "GR(9,1)"][ri]);
        let n = if r.p() == 2 { 7 } else { 8 };
        let fac = factor_xn_minus_1(&r, n).unwrap();
        let all = divisors(&r, n);
        let g = &all[gi as usize % all.len()];
        let zeros = zero_exponents(fac.splitting_ring(), fac.xi(), n, g);
        prop_assert_eq!(zeros.len(), g.degree().unwrap_or(0));
        let spec_g = ms_transform(fac.splitting_ring(), fac.xi(), n, g).unwrap();
        let vanish: Vec<usize> = (0..n).filter(|k| fac.splitting_ring().is_zero(&spec_g.values[*k])).collect();
        prop_assert_eq!(&vanish, &zeros);
        let c = r.pmul_cyclic(&poly_from(&r, &m), g, n);
        let spec = ms_transform(fac.splitting_ring(), fac.xi(), n, &c).unwrap();
        for k in zeros {
            prop_assert!(fac.splitting_ring().is_zero(&spec.values[k]));
        }
    }
}
