mod common;

use chaincodes::distance::{gray_map, lee_weight_f2u};
use chaincodes::literal::{format_poly, parse_element};
use chaincodes::{ChainRing, CommRing, RingElement};
use common::*;
use proptest::prelude::*;

#[test]
fn digits_units_and_inverses_exhaustive() {
    for lit in RINGS {
        let r = ring(lit);
        let q = r.residue_size();
        let s = r.s();
        let mut non_units = 0u128;
        for i in 0..r.cardinality() {
            let a = r.element(i);
            let d = r.gamma_decompose(&a);
            assert_eq!(d.len(), s);
            assert_eq!(r.gamma_recompose(&d), a, "{lit}");
            let f = r.residue_field();
            assert_eq!(r.is_unit(&a), !f.is_zero(&d[0]), "{lit}");
            if r.is_unit(&a) {
                assert!(r.is_one(&r.mul(&a, &r.inv_unit(&a).unwrap())));
            } else {
                non_units += 1;
                assert!(r.inv_unit(&a).is_err());
            }
        }
        assert_eq!(non_units, q.pow(s as u32 - 1), "{lit}");
        assert!(!r.is_zero(&r.gamma_pow(s - 1)));
        assert!(r.is_zero(&r.gamma_pow(s)));
    }
}

#[test]
fn reductions_mod_gamma_j_are_homomorphisms() {
    for lit in ["F2[u]/u^3", "GR(8,1)", "F3[u]/u^2", "GR(9,1)", "F4[u]/u^2"] {
        let r = ring(lit);
        for j in 1..=r.s() {
            let t = r.mu_ring(j).unwrap();
            assert_eq!(t.s(), j);
            let mu = |a: &RingElement| r.project_into(a, &t);
            for i in 0..r.cardinality() {
                let a = r.element(i);
                assert_eq!(mu(&r.lift_from(&mu(&a), &t)), mu(&a));
                for k in 0..r.cardinality() {
                    let b = r.element(k);
                    assert_eq!(mu(&r.add(&a, &b)), t.add(&mu(&a), &mu(&b)));
                    assert_eq!(mu(&r.mul(&a, &b)), t.mul(&mu(&a), &mu(&b)));
                }
            }
        }
    }
}

#[test]
fn gray_map_is_an_isometry() {
    let r = ring("F2[u]/u^2");
    let words: Vec<Vec<RingElement>> = (0..256u32).map(|w| (0..4).map(|k| r.element(((w >> (2 * k)) & 3) as u128)).collect()).collect();
    for a in &words {
        let g = gray_map(&r, a).unwrap();
        assert_eq!(lee_weight_f2u(&r, a).unwrap(), g.iter().filter(|b| **b != 0).count());
        for b in words.iter().step_by(7) {
            let sum: Vec<RingElement> = a.iter().zip(b).map(|(x, y)| r.add(x, y)).collect();
            let gb = gray_map(&r, b).unwrap();
            let xor: Vec<u8> = g.iter().zip(&gb).map(|(x, y)| x ^ y).collect();
            assert_eq!(gray_map(&r, &sum).unwrap(), xor);
        }
    }
    assert!(gray_map(&ring("GR(4,1)"), &[]).is_err());
}

proptest! {
    #[test]
    fn ring_axioms(ri in 0..RINGS.len(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let r = ring(RINGS[ri]);
        let (a, b, c) = (elem(&r, a), elem(&r, b), elem(&r, c));
        prop_assert_eq!(r.add(&a, &b), r.add(&b, &a));
        prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert!(r.is_zero(&r.add(&a, &r.neg(&a))));
        prop_assert_eq!(r.valuation(&r.mul(&a, &b)).min(r.s()), (r.valuation(&a) + r.valuation(&b)).min(r.s()));
    }

    #[test]
    fn element_and_polynomial_literals_round_trip(ri in 0..RINGS.len(), seeds in prop::collection::vec(any::<u64>(), 0..9)) {
        let r = ring(RINGS[ri]);
        let f = poly_from(&r, &seeds);
        let text = format_poly(&r, &f);
        prop_assert_eq!(poly(&r, &text), f);
        if let Some(s) = seeds.first() {
            let a = elem(&r, *s);
            prop_assert_eq!(parse_element(&r, &r.format(&a)).unwrap(), a);
        }
    }

    #[test]
    fn teichmuller_digits_round_trip(ri in 0..RINGS.len(), a in any::<u64>()) {
        let r = ring(RINGS[ri]);
        let a = elem(&r, a);
        let d = r.teich_digits(&a);
        prop_assert_eq!(r.from_digits(&d), a);
        for t in &d {
            prop_assert_eq!(&r.teichmuller(t), t);
        }
    }
}
