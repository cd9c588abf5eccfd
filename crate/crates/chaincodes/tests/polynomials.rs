mod common;

use chaincodes::crt::idempotents;
use chaincodes::factor::{coprime_over_ring, hensel_lift_factor, minimal_polynomial};
use chaincodes::{cyclotomic_cosets, factor_xn_minus_1, PolyOps, ResidueOps};
use common::*;
use proptest::prelude::*;

#[test]
fn factorizations_multiply_back_and_lift_their_residues() {
    for lit in RINGS {
        let r = ring(lit);
        let f = r.residue_field();
        for n in coprime_lengths(&r, 16) {
            let fac = factor_xn_minus_1(&r, n).unwrap();
            let target = r.xn_minus_1(n);
            assert_eq!(r.pproduct(fac.factors()), target, "{lit} n={n}");
            assert_eq!(fac.len(), fac.cosets().len());
            for (g, c) in fac.factors().iter().zip(fac.cosets()) {
                assert_eq!(g.degree(), Some(c.len()));
                assert!(r.prem(&target, g).unwrap().is_zero());
                let gbar = f.poly(g.coeffs().iter().map(|c| r.residue(c)).collect());
                assert_eq!(&hensel_lift_factor(&r, &gbar, &target).unwrap(), g, "{lit} n={n}");
            }
        }
    }
}

#[test]
fn cosets_partition_and_match_minimal_polynomials() {
    for lit in ["F2[u]/u^2", "GR(4,1)", "F3[u]/u^2", "F4", "F5[u]/u^2"] {
        let r = ring(lit);
        for n in coprime_lengths(&r, 26) {
            let q = r.q();
            let cosets = cyclotomic_cosets(n as u64, q).unwrap();
            let mut seen = vec![false; n];
            for c in &cosets {
                for &k in &c.members {
                    assert!(!seen[k as usize]);
                    seen[k as usize] = true;
                    assert!(c.contains(k * q % n as u64));
                }
            }
            assert!(seen.iter().all(|s| *s));
            if n > 13 {
                continue;
            }
            let fac = factor_xn_minus_1(&r, n).unwrap();
            for c in &cosets {
                let m = minimal_polynomial(fac.splitting_ring(), fac.xi(), c.representative()).unwrap();
                assert_eq!(m.degree(), Some(c.len()));
                assert!(fac.factors().contains(&m));
            }
        }
    }
    assert!(cyclotomic_cosets(10, 5).is_err());
}

#[test]
fn crt_systems_are_orthogonal_complete_idempotents() {
    for lit in ["F2[u]/u^2", "GR(4,1)", "F5[u]/u^2", "GR(9,1)", "F2[u]/u^3"] {
        let r = ring(lit);
        for n in [1usize, 3, 7, 9, 15].into_iter().filter(|n| !(*n as u64).is_multiple_of(r.p())) {
            let fac = factor_xn_minus_1(&r, n).unwrap();
            let sys = idempotents(&r, fac.factors(), &r.xn_minus_1(n)).unwrap();
            let e = sys.idempotents();
            let mut sum = r.pzero();
            for i in 0..e.len() {
                sum = r.padd(&sum, &e[i]);
                for j in 0..e.len() {
                    let want = if i == j { e[i].clone() } else { r.pzero() };
                    assert_eq!(r.pmul_cyclic(&e[i], &e[j], n), want, "{lit} n={n}");
                }
            }
            assert_eq!(r.preduce_cyclic(&sum, n), r.pone());
        }
    }
    let r = ring("F2[u]/u^2");
    let f = r.xn_minus_1(7);
    assert!(idempotents(&r, &[poly(&r, "x+1")], &f).is_err());
    assert!(idempotents(&r, &[poly(&r, "x+1"), poly(&r, "x+1"), poly(&r, "x^5+x^4+x^3+x^2+x+1")], &r.pmul(&poly(&r, "x+1"), &f)).is_err());
}

proptest! {
    #[test]
    fn coprime_witnesses_are_exact(ri in 0..RINGS.len(), f in prop::collection::vec(any::<u64>(), 1..6), g in prop::collection::vec(any::<u64>(), 1..6)) {
        let r = ring(RINGS[ri]);
        let (f, g) = (poly_from(&r, &f), poly_from(&r, &g));
        if let Some((a, b)) = coprime_over_ring(&r, &f, &g) {
            prop_assert_eq!(r.padd(&r.pmul(&a, &f), &r.pmul(&b, &g)), r.pone());
        } else {
            prop_assert!(r.res_gcd(&f, &g) != r.pone());
        }
    }

    #[test]
    fn crt_decomposition_is_a_ring_isomorphism(
        ri in 0..RINGS.len(),
        ni in 0usize..4,
        a in prop::collection::vec(any::<u64>(), 0..16),
        b in prop::collection::vec(any::<u64>(), 0..16),
    ) {
        let r = ring(RINGS[ri]);
        let lengths = coprime_lengths(&r, 13);
        let n = lengths[ni % lengths.len()].max(2);
        prop_assume!(!(n as u64).is_multiple_of(r.p()));
        let fac = factor_xn_minus_1(&r, n).unwrap();
        let sys = idempotents(&r, fac.factors(), &r.xn_minus_1(n)).unwrap();
        let a = r.preduce_cyclic(&poly_from(&r, &a), n);
        let b = r.preduce_cyclic(&poly_from(&r, &b), n);
        let (da, db) = (sys.decompose(&a), sys.decompose(&b));
        prop_assert_eq!(sys.recompose(&da).unwrap(), a.clone());
        let prod = sys.decompose(&r.pmul_cyclic(&a, &b, n));
        for (i, f) in sys.factors().iter().enumerate() {
            prop_assert_eq!(&prod[i], &r.prem(&r.pmul(&da[i], &db[i]), f).unwrap());
        }
        prop_assert_eq!(sys.decompose(&sys.recompose(&da).unwrap()), da);
    }
}
