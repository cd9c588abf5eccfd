//! Minimum distance: exhaustive, socle, sampled; Lee weight and Gray map over F_2 + uF_2.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chainring::{BaseRing, RingElement};
use crate::error::{Error, Result};
use crate::linear::{hamming_weight, LinearCode, Span};
use crate::ring::{ChainRing, CommRing};

pub const DEFAULT_BUDGET: u128 = 1 << 26;
pub const DEFAULT_SEED: u64 = 0x5eed_c0de;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Auto,
    Exhaustive,
    Socle,
    Sample,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Exhaustive => "exhaustive",
            Method::Socle => "socle",
            Method::Sample => "sampled",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightProfile {
    /// None for the zero code (or when no nonzero word was sampled).
    pub min_hamming: Option<usize>,
    pub min_lee: Option<usize>,
    pub method: Method,
    pub codewords_examined: u128,
    /// Sampled results are only upper bounds.
    pub exact: bool,
}

fn within_budget<S: ChainRing>(span: &Span<S>, budget: u128) -> Result<u128> {
    match span.size() {
        Some(n) if n <= budget => Ok(n),
        Some(n) => Err(Error::BudgetExceeded { needed: n, budget }),
        None => Err(Error::BudgetExceeded { needed: u128::MAX, budget }),
    }
}

pub fn enumerate_codewords<S: ChainRing>(code: &LinearCode<S>, budget: u128) -> Result<Vec<Vec<S::Elem>>> {
    let span = code.span();
    within_budget(&span, budget)?;
    Ok(span.collect())
}

pub fn min_hamming_exact<S: ChainRing>(code: &LinearCode<S>, budget: u128) -> Result<Option<usize>> {
    let span = code.span();
    within_budget(&span, budget)?;
    let r = code.ring();
    Ok(span.min_over_nonzero(|w| hamming_weight(r, w)))
}

pub fn socle_min_hamming<S: ChainRing>(code: &LinearCode<S>, budget: u128) -> Result<Option<usize>> {
    let span = code.socle();
    within_budget(&span, budget)?;
    let r = code.ring();
    Ok(span.min_over_nonzero(|w| hamming_weight(r, w)))
}

/// Exact minimum distance through the socle, 0 for the zero code.
pub fn min_distance<S: ChainRing>(code: &LinearCode<S>, budget: u128) -> Result<usize> {
    Ok(socle_min_hamming(code, budget)?.unwrap_or(0))
}

pub fn sampled_upper_bound<S: ChainRing>(code: &LinearCode<S>, trials: u64, seed: u64) -> Option<usize> {
    let span = code.span();
    let r = code.ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<usize> = None;
    for _ in 0..trials {
        let w = span.random_codeword(&mut rng);
        let wt = hamming_weight(r, &w);
        if wt > 0 {
            best = Some(best.map_or(wt, |b| b.min(wt)));
        }
    }
    best
}

fn require_f2u(ring: &BaseRing) -> Result<()> {
    if ring.is_f2u() {
        Ok(())
    } else {
        Err(Error::UnsupportedRing)
    }
}

/// Gray image bits of 0, 1, u, 1+u (raw indices 0..4).
const GRAY: [[u8; 2]; 4] = [[0, 0], [0, 1], [1, 1], [1, 0]];

fn f2u_index(ring: &BaseRing, a: &RingElement) -> usize {
    ring.index_of(a) as usize
}

pub fn lee_weight_f2u(ring: &BaseRing, word: &[RingElement]) -> Result<usize> {
    require_f2u(ring)?;
    Ok(word.iter().map(|a| GRAY[f2u_index(ring, a)].iter().map(|&b| b as usize).sum::<usize>()).sum())
}

pub fn gray_map(ring: &BaseRing, word: &[RingElement]) -> Result<Vec<u8>> {
    require_f2u(ring)?;
    Ok(word.iter().flat_map(|a| GRAY[f2u_index(ring, a)]).collect())
}

pub fn min_lee_f2u(code: &LinearCode<BaseRing>, budget: u128) -> Result<Option<usize>> {
    let ring = code.ring();
    require_f2u(ring)?;
    let span = code.span();
    within_budget(&span, budget)?;
    let lee: Vec<usize> = (0..4).map(|i| GRAY[i].iter().map(|&b| b as usize).sum()).collect();
    Ok(span.min_over_nonzero(|w| w.iter().map(|a| lee[f2u_index(ring, a)]).sum()))
}

/// Full profile for a code over a base ring; Lee weight is added over F_2 + uF_2.
pub fn weight_profile(
    code: &LinearCode<BaseRing>,
    method: Method,
    budget: u128,
    trials: u64,
    seed: u64,
) -> Result<WeightProfile> {
    let ring = code.ring();
    let lee = ring.is_f2u();
    let full = code.span().size();
    let socle = code.socle().size();
    let method = match method {
        Method::Auto if lee && full.is_some_and(|n| n <= budget) => Method::Exhaustive,
        Method::Auto if socle.is_some_and(|n| n <= budget) => Method::Socle,
        Method::Auto => Method::Sample,
        m => m,
    };
    Ok(match method {
        Method::Exhaustive => WeightProfile {
            min_hamming: min_hamming_exact(code, budget)?,
            min_lee: if lee { min_lee_f2u(code, budget)? } else { None },
            method,
            codewords_examined: full.unwrap_or(u128::MAX),
            exact: true,
        },
        Method::Socle => WeightProfile {
            min_hamming: socle_min_hamming(code, budget)?,
            min_lee: None,
            method,
            codewords_examined: socle.unwrap_or(u128::MAX),
            exact: true,
        },
        _ => WeightProfile {
            min_hamming: sampled_upper_bound(code, trials, seed),
            min_lee: None,
            method: Method::Sample,
            codewords_examined: trials as u128,
            exact: false,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gray_table() {
        let r = BaseRing::eisenstein(2, 1, 2).unwrap();
        let w: Vec<RingElement> = (0..4).map(|i| r.element(i)).collect();
        assert_eq!(r.format(&w[2]), "u");
        assert_eq!(gray_map(&r, &w).unwrap(), vec![0, 0, 0, 1, 1, 1, 1, 0]);
        assert_eq!(lee_weight_f2u(&r, &w).unwrap(), 4);
        let z4 = BaseRing::galois(2, 2, 1).unwrap();
        assert!(matches!(gray_map(&z4, &[]), Err(Error::UnsupportedRing)));
    }

    #[test]
    fn sentinels() {
        let r = BaseRing::eisenstein(2, 1, 2).unwrap();
        let zero = LinearCode::zero(&r, 5);
        assert_eq!(min_hamming_exact(&zero, DEFAULT_BUDGET).unwrap(), None);
        assert_eq!(sampled_upper_bound(&zero, 100, 1), None);
        let one = r.one();
        let c = LinearCode::from_generators(&r, 2, &[vec![one, one]]).unwrap();
        assert_eq!(sampled_upper_bound(&c, 0, 1), None);
        assert!(matches!(min_hamming_exact(&c, 2), Err(Error::BudgetExceeded { .. })));
    }
}
