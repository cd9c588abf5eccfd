mod common;

use chaincodes::factor::galois_extension;
use chaincodes::{ChainRing, CommRing, ExtRing, PolyOps};
use common::*;
use proptest::prelude::*;

const SMALL: &[(&str, usize)] =
    &[("F2", 2), ("F2", 3), ("F2", 4), ("F3", 2), ("F2[u]/u^2", 2), ("F2[u]/u^2", 3), ("GR(4,1)", 2), ("GR(4,1)", 3), ("GR(9,1)", 2), ("F4", 2), ("F2[u]/u^3", 2)];

#[test]
fn frobenius_and_trace_exhaustive() {
    for &(lit, m) in SMALL {
        let r = ring(lit);
        let ext = galois_extension(&r, m).unwrap();
        assert!(ext.cardinality() <= 10_000);
        let mut fixed = 0u128;
        let mut kernel = 0u128;
        let mut image = std::collections::HashSet::new();
        let elems: Vec<_> = (0..ext.cardinality()).map(|i| ext.element(i)).collect();
        for (i, a) in elems.iter().enumerate() {
            let fa = ext.frobenius(a, 1);
            if &fa == a {
                fixed += 1;
                assert!(ext.as_base(a).is_some(), "{lit} m={m}");
            }
            assert_eq!(&ext.frobenius(a, m), a);
            let b = &elems[(i * 31 + 7) % elems.len()];
            assert_eq!(ext.frobenius(&ext.mul(a, b), 1), ext.mul(&fa, &ext.frobenius(b, 1)));
            assert_eq!(ext.frobenius(&ext.add(a, b), 1), ext.add(&fa, &ext.frobenius(b, 1)));

            let t = ext.trace(a);
            image.insert(t);
            if r.is_zero(&t) {
                kernel += 1;
            }
            let c = r.element(i as u128 % r.cardinality());
            assert_eq!(ext.trace(&ext.add(&ext.mul(&ext.embed(&c), a), b)), r.add(&r.mul(&c, &t), &ext.trace(b)));
            let by_digits = ext
                .teich_digits(a)
                .iter()
                .enumerate()
                .fold(r.zero(), |acc, (k, d)| r.add(&acc, &r.mul(&r.gamma_pow(k), &ext.trace(d))));
            assert_eq!(by_digits, t);
            for tau in (1..=m).filter(|tau| m % tau == 0) {
                let inner = ext.trace_to(a, tau).unwrap();
                assert_eq!(ext.frobenius(&inner, tau), inner);
                let outer = (0..tau).fold(ext.zero(), |acc, k| ext.add(&acc, &ext.frobenius(&inner, k)));
                assert_eq!(outer, ext.trace_to(a, 1).unwrap());
            }
        }
        let q = r.residue_size();
        let s = r.s() as u32;
        assert_eq!(fixed, r.cardinality(), "{lit} m={m}");
        assert_eq!(kernel, q.pow((m as u32 - 1) * s), "{lit} m={m}");
        assert_eq!(image.len() as u128, r.cardinality());
    }
}

#[test]
fn subextensions_embed() {
    let r = ring("F2[u]/u^2");
    let big = galois_extension(&r, 4).unwrap();
    let sub = galois_extension(&r, 2).unwrap();
    let emb = big.embedding_of(&sub).unwrap();
    for i in 0..sub.cardinality() {
        let a = sub.element(i);
        let b = sub.element((i * 5 + 3) % sub.cardinality());
        assert_eq!(emb.map(&sub.mul(&a, &b)), big.mul(&emb.map(&a), &emb.map(&b)));
        assert_eq!(emb.preimage(&emb.map(&a)), Some(a.clone()));
    }
    for i in (0..big.cardinality()).step_by(37) {
        let a = big.element(i);
        let t = big.trace_into(&a, &emb).unwrap();
        assert_eq!(emb.map(&t), big.trace_to(&a, 2).unwrap());
    }
    assert!(galois_extension(&r, 3).unwrap().embedding_of(&sub).is_err());
}

#[test]
fn towers_are_chain_rings() {
    let r = ring("F2[u]/u^2");
    let inner = galois_extension(&r, 2).unwrap();
    let outer = ExtRing::new(inner.clone(), inner.poly(vec![inner.one(), inner.one(), inner.zero(), inner.one()])).unwrap();
    assert_eq!(outer.cardinality(), 4u128.pow(6));
    assert_eq!(outer.residue_size(), 64);
    assert_eq!(outer.nilpotency(), 2);
    let z = outer.find_unit_of_order(63).unwrap();
    assert_eq!(outer.order(&z), Some(63));
    for k in [0u128, 1, 5, 62] {
        let a = outer.pow(&z, k);
        assert_eq!(outer.mul(&a, &outer.inv(&a).unwrap()), outer.one());
        assert!(outer.as_base(&outer.trace_to(&a, 1).unwrap()).is_some());
    }
}

proptest! {
    #[test]
    fn pack_and_unpack_are_inverse_and_additive(
        si in 0..SMALL.len(),
        a in prop::collection::vec(prop::collection::vec(any::<u64>(), 0..6), 4),
        b in prop::collection::vec(prop::collection::vec(any::<u64>(), 0..6), 4),
    ) {
        let (lit, m) = SMALL[si];
        let r = ring(lit);
        let ext = galois_extension(&r, m).unwrap();
        let va: Vec<P> = a[..m].iter().map(|s| poly_from(&r, s)).collect();
        let vb: Vec<P> = b[..m].iter().map(|s| poly_from(&r, s)).collect();
        let pa = ext.pack(&va).unwrap();
        let pb = ext.pack(&vb).unwrap();
        prop_assert_eq!(ext.unpack(&pa), va.clone());
        let sum: Vec<P> = va.iter().zip(&vb).map(|(x, y)| r.padd(x, y)).collect();
        prop_assert_eq!(ext.pack(&sum).unwrap(), ext.padd(&pa, &pb));
        prop_assert!(ext.pack(&va[..m - 1]).is_err());
    }
}
