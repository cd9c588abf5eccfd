mod common;

use chaincodes::distance::{
    enumerate_codewords, gray_map, lee_weight_f2u, min_distance, min_hamming_exact, min_lee_f2u, sampled_upper_bound,
    socle_min_hamming, weight_profile, Method,
};
use chaincodes::linear::{hamming_weight, LinearCode};
use chaincodes::{BaseRing, Error};
use common::*;
use proptest::prelude::*;

const BUDGET: u128 = 1 << 18;

fn code(r: &BaseRing, len: usize, seeds: &[Vec<u64>]) -> LinearCode<BaseRing> {
    let rows: Vec<Vec<_>> = seeds.iter().map(|s| (0..len).map(|i| elem(r, *s.get(i).unwrap_or(&0))).collect()).collect();
    LinearCode::from_generators(r, len, &rows).unwrap()
}

fn rows() -> impl Strategy<Value = Vec<Vec<u64>>> {
    prop::collection::vec(prop::collection::vec(any::<u64>(), 0..7), 0..4)
}

#[test]
fn zero_code_has_no_distance() {
    let r = ring("GR(4,1)");
    let z = LinearCode::zero(&r, 5);
    assert_eq!(min_hamming_exact(&z, BUDGET).unwrap(), None);
    assert_eq!(socle_min_hamming(&z, BUDGET).unwrap(), None);
    assert_eq!(sampled_upper_bound(&z, 50, 1), None);
    assert_eq!(min_distance(&z, BUDGET).unwrap(), 0);
    assert_eq!(enumerate_codewords(&z, BUDGET).unwrap().len(), 1);
}

#[test]
fn budgets_are_enforced() {
    let r = ring("F5[u]/u^2");
    let full = code(&r, 6, &(0..6).map(|i| (0..6).map(|j| u64::from(i == j)).collect()).collect::<Vec<_>>());
    assert!(matches!(min_hamming_exact(&full, 1000), Err(Error::BudgetExceeded { .. })));
    assert!(matches!(enumerate_codewords(&full, 1000), Err(Error::BudgetExceeded { .. })));
    assert_eq!(socle_min_hamming(&full, 1 << 14).unwrap(), Some(1));
}

#[test]
fn profiles_are_tagged_by_method() {
    let r = ring("F2[u]/u^2");
    let c = code(&r, 6, &[vec![1, 3, 2, 1, 0, 1], vec![0, 2, 1, 3, 1, 1]]);
    let p = weight_profile(&c, Method::Auto, BUDGET, 100, 7).unwrap();
    assert_eq!((p.method, p.exact), (Method::Exhaustive, true));
    assert_eq!(p.min_lee, min_lee_f2u(&c, BUDGET).unwrap());
    assert_eq!(p.codewords_examined, c.cardinality().unwrap());

    let g = ring("GR(8,1)");
    let cg = code(&g, 6, &[vec![1, 3, 2, 1, 0, 1], vec![0, 2, 1, 3, 1, 1]]);
    let p = weight_profile(&cg, Method::Auto, BUDGET, 100, 7).unwrap();
    assert_eq!((p.method, p.exact, p.min_lee), (Method::Socle, true, None));
    assert_eq!(p.min_hamming, min_hamming_exact(&cg, BUDGET).unwrap());

    let p = weight_profile(&cg, Method::Auto, 2, 100, 7).unwrap();
    assert_eq!((p.method, p.exact), (Method::Sample, false));
    assert!(p.min_hamming.unwrap() >= min_hamming_exact(&cg, BUDGET).unwrap().unwrap());
    assert_eq!(Method::Sample.as_str(), "sampled");
    assert!(weight_profile(&cg, Method::Exhaustive, 2, 100, 7).is_err());
}

#[test]
fn lee_weights_use_the_gray_image() {
    let r = ring("F2[u]/u^2");
    let c = code(&r, 5, &[vec![1, 2, 3, 0, 1], vec![2, 2, 0, 2, 0]]);
    let best = c
        .span()
        .collect()
        .iter()
        .filter(|w| hamming_weight(&r, w) > 0)
        .map(|w| gray_map(&r, w).unwrap().iter().filter(|b| **b != 0).count())
        .min();
    assert_eq!(min_lee_f2u(&c, BUDGET).unwrap(), best);
    for w in c.span().collect() {
        assert_eq!(lee_weight_f2u(&r, &w).unwrap(), gray_map(&r, &w).unwrap().iter().filter(|b| **b != 0).count());
    }
    assert!(min_lee_f2u(&code(&ring("GR(4,1)"), 3, &[vec![1, 1, 1]]), BUDGET).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn socle_search_is_exact(ri in 0..RINGS.len(), len in 1usize..6, seeds in rows()) {
        let r = ring(RINGS[ri]);
        let c = code(&r, len, &seeds);
        prop_assume!(c.cardinality().is_some_and(|n| n <= BUDGET));
        let exact = min_hamming_exact(&c, BUDGET).unwrap();
        prop_assert_eq!(socle_min_hamming(&c, BUDGET).unwrap(), exact);
        let words = enumerate_codewords(&c, BUDGET).unwrap();
        prop_assert_eq!(Some(words.len() as u128), c.cardinality());
        prop_assert_eq!(exact, words.iter().map(|w| hamming_weight(&r, w)).filter(|w| *w > 0).min());
    }

    #[test]
    fn sampling_never_undercuts(ri in 0..RINGS.len(), len in 1usize..6, seeds in rows(), seed in any::<u64>()) {
        let r = ring(RINGS[ri]);
        let c = code(&r, len, &seeds);
        prop_assume!(c.cardinality().is_some_and(|n| n <= BUDGET));
        let exact = min_hamming_exact(&c, BUDGET).unwrap();
        let sampled = sampled_upper_bound(&c, 200, seed);
        match (exact, sampled) {
            (Some(d), Some(s)) => prop_assert!(s >= d),
            (None, s) => prop_assert_eq!(s, None),
            (Some(_), None) => {}
        }
        prop_assert_eq!(sampled, sampled_upper_bound(&c, 200, seed));
    }
}
