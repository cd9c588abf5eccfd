//! CRT idempotents for pairwise coprime monic factorizations.

use crate::error::{Error, Result};
use crate::factor::coprime_over_ring;
use crate::poly::{Poly, PolyOps};
use crate::ring::ChainRing;

#[derive(Clone, Debug)]
pub struct CrtSystem<R: ChainRing> {
    ring: R,
    modulus: Poly<R::Elem>,
    factors: Vec<Poly<R::Elem>>,
    cofactors: Vec<Poly<R::Elem>>,
    idempotents: Vec<Poly<R::Elem>>,
}

/// e_i = b_i·f̂_i mod f from a_i f_i + b_i f̂_i = 1.
pub fn idempotents<R: ChainRing>(
    ring: &R,
    factors: &[Poly<R::Elem>],
    f: &Poly<R::Elem>,
) -> Result<CrtSystem<R>> {
    if factors.iter().any(|g| !ring.is_monic(g)) || !ring.is_monic(f) {
        return Err(Error::NonMonicDivisor);
    }
    if ring.pproduct(factors) != *f {
        return Err(Error::ProductMismatch);
    }
    let mut cofactors = Vec::with_capacity(factors.len());
    let mut idem = Vec::with_capacity(factors.len());
    for fi in factors {
        let hat = ring.pdiv_exact(f, fi)?;
        let (_, b) = coprime_over_ring(ring, fi, &hat).ok_or(Error::NotCoprimeFactors)?;
        idem.push(ring.prem(&ring.pmul(&b, &hat), f)?);
        cofactors.push(hat);
    }
    Ok(CrtSystem {
        ring: ring.clone(),
        modulus: f.clone(),
        factors: factors.to_vec(),
        cofactors,
        idempotents: idem,
    })
}

impl<R: ChainRing> CrtSystem<R> {
    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn modulus(&self) -> &Poly<R::Elem> {
        &self.modulus
    }

    pub fn factors(&self) -> &[Poly<R::Elem>] {
        &self.factors
    }

    pub fn cofactors(&self) -> &[Poly<R::Elem>] {
        &self.cofactors
    }

    pub fn idempotents(&self) -> &[Poly<R::Elem>] {
        &self.idempotents
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn decompose(&self, c: &Poly<R::Elem>) -> Vec<Poly<R::Elem>> {
        self.factors.iter().map(|fi| self.ring.prem(c, fi).expect("monic factor")).collect()
    }

    pub fn recompose(&self, comps: &[Poly<R::Elem>]) -> Result<Poly<R::Elem>> {
        if comps.len() != self.factors.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} components for {} factors",
                comps.len(),
                self.factors.len()
            )));
        }
        let r = &self.ring;
        let mut acc = r.pzero();
        for (i, (c, e)) in comps.iter().zip(&self.idempotents).enumerate() {
            if c.len() > self.factors[i].len() - 1 {
                return Err(Error::ComponentDegreeTooHigh(i));
            }
            acc = r.padd(&acc, &r.pmul(c, e));
        }
        r.prem(&acc, &self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainring::BaseRing;
    use crate::factor::factor_xn_minus_1;
    use crate::ring::CommRing;

    #[test]
    fn f2u_seven() {
        let r = BaseRing::eisenstein(2, 1, 2).unwrap();
        let fac = factor_xn_minus_1(&r, 7).unwrap();
        let sys = idempotents(&r, fac.factors(), &r.xn_minus_1(7)).unwrap();
        assert_eq!(r.pformat(&sys.idempotents()[0], "x"), "x^6+x^5+x^4+x^3+x^2+x+1");
        let sum = sys.idempotents().iter().fold(r.pzero(), |a, e| r.padd(&a, e));
        assert_eq!(sum, r.pone());
    }

    #[test]
    fn single_factor() {
        let r = BaseRing::galois(2, 2, 1).unwrap();
        let f = r.xn_minus_1(1);
        let sys = idempotents(&r, std::slice::from_ref(&f), &f).unwrap();
        assert_eq!(sys.idempotents()[0], r.pone());
    }

    #[test]
    fn rejects_bad_systems() {
        let r = BaseRing::eisenstein(2, 1, 2).unwrap();
        let x1 = r.poly(vec![r.one(), r.one()]);
        let sq = r.pmul(&x1, &x1);
        assert!(matches!(idempotents(&r, &[x1.clone(), x1.clone()], &sq), Err(Error::NotCoprimeFactors)));
        assert!(matches!(idempotents(&r, std::slice::from_ref(&x1), &sq), Err(Error::ProductMismatch)));
    }
}
