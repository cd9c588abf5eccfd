#![allow(dead_code)]

use chaincodes::literal::{parse_poly, parse_ring};
use chaincodes::{BaseRing, CommRing, Poly, PolyOps, RingElement};

pub type P = Poly<RingElement>;

/// Small rings covering both families, both parities and m > 1.
pub const RINGS: &[&str] =
    &["F2[u]/u^2", "F2[u]/u^3", "GR(4,1)", "GR(8,1)", "GR(9,1)", "F3[u]/u^2", "F4[u]/u^2", "F5[u]/u^2", "GR(4,2)", "F4", "F7"];

pub fn ring(lit: &str) -> BaseRing {
    parse_ring(lit).unwrap()
}

pub fn poly(r: &BaseRing, lit: &str) -> P {
    parse_poly(r, lit).unwrap()
}

pub fn elem(r: &BaseRing, seed: u64) -> RingElement {
    r.element(seed as u128 % r.cardinality())
}

pub fn poly_from(r: &BaseRing, seeds: &[u64]) -> P {
    r.poly(seeds.iter().map(|&s| elem(r, s)).collect())
}

/// Lengths coprime to the residue characteristic.
pub fn coprime_lengths(r: &BaseRing, max: usize) -> Vec<usize> {
    (1..=max).filter(|n| !(*n as u64).is_multiple_of(r.p())).collect()
}
