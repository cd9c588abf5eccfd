//! Cyclic codes as ideals of R[x]/⟨x^n − 1⟩.

use crate::error::{Error, Result};
use crate::extension::{ExtElem, ExtRing};
use crate::factor::coset_of;
use crate::linear::LinearCode;
use crate::poly::{Poly, PolyOps, ResidueOps};
use crate::ring::{ChainRing, CommRing};

/// C = ⟨F̂_1, γF̂_2, …, γ^{s−1}F̂_s⟩ for a family F_0, …, F_s with ∏F_i = x^n − 1.
#[derive(Clone, Debug)]
pub struct CyclicCode<R: ChainRing> {
    ring: R,
    n: usize,
    family: Vec<Poly<R::Elem>>,
}

pub(crate) fn check_family<R: ChainRing>(ring: &R, n: usize, family: &[Poly<R::Elem>]) -> Result<()> {
    let s = ring.nilpotency();
    if family.len() != s + 1 {
        return Err(Error::DimensionMismatch(format!("family of {} polynomials, expected {}", family.len(), s + 1)));
    }
    if family.iter().any(|f| !ring.is_monic(f)) {
        return Err(Error::NonMonicDivisor);
    }
    if ring.pproduct(family) != ring.xn_minus_1(n) {
        return Err(Error::ProductMismatch);
    }
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            if ring.res_gcd(&family[i], &family[j]).degree() != Some(0) {
                return Err(Error::NotCoprime);
            }
        }
    }
    Ok(())
}

/// Rows x^k·g for k < n − deg g.
pub(crate) fn shift_rows<R: ChainRing>(ring: &R, g: &Poly<R::Elem>, n: usize, count: usize) -> Vec<Vec<R::Elem>> {
    (0..count).map(|k| ring.pvector(&ring.preduce_cyclic(&ring.pshift(g, k), n), n)).collect()
}

impl<R: ChainRing> CyclicCode<R> {
    pub fn from_family(ring: &R, family: Vec<Poly<R::Elem>>) -> Result<CyclicCode<R>> {
        let n = family.iter().map(|f| f.len().saturating_sub(1)).sum();
        check_family(ring, n, &family)?;
        Ok(CyclicCode { ring: ring.clone(), n, family })
    }

    /// The free code ⟨g⟩ for a monic divisor g of x^n − 1.
    pub fn free(ring: &R, n: usize, g: &Poly<R::Elem>) -> Result<CyclicCode<R>> {
        if !ring.is_monic(g) {
            return Err(Error::NonMonicDivisor);
        }
        let h = ring.pdiv_exact(&ring.xn_minus_1(n), g)?;
        let mut family = vec![ring.pone(); ring.nilpotency() + 1];
        family[0] = g.clone();
        family[1] = h;
        CyclicCode::from_family(ring, family)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> &[Poly<R::Elem>] {
        &self.family
    }

    pub fn hat(&self, i: usize) -> Poly<R::Elem> {
        self.ring.pdiv_exact(&self.ring.xn_minus_1(self.n), &self.family[i]).expect("family divides")
    }

    /// γ^{i−1}F̂_i for i = 1..s.
    pub fn generators(&self) -> Vec<Poly<R::Elem>> {
        let r = &self.ring;
        (1..self.family.len()).map(|i| r.pscale(&r.gamma_pow(i - 1), &self.hat(i))).collect()
    }

    pub fn single_generator(&self) -> Poly<R::Elem> {
        let r = &self.ring;
        self.generators().iter().fold(r.pzero(), |acc, g| r.padd(&acc, g))
    }

    /// log_Q |C| = Σ_i (s − i + 1)·deg F_i.
    pub fn log_size(&self) -> usize {
        let s = self.ring.nilpotency();
        (1..=s).map(|i| (s - i + 1) * (self.family[i].len() - 1)).sum()
    }

    pub fn is_free_rank(&self) -> (bool, Option<usize>) {
        let free = self.family[2..].iter().all(|f| f.len() == 1);
        (free, free.then(|| self.family[1].len() - 1))
    }

    pub fn generator_poly(&self) -> Result<Poly<R::Elem>> {
        match self.is_free_rank() {
            (true, _) => Ok(self.hat(1)),
            _ => Err(Error::NotFree),
        }
    }

    /// Rows x^k·γ^{i−1}F̂_i for k < deg F_i.
    pub fn generator_rows(&self) -> Vec<Vec<R::Elem>> {
        let r = &self.ring;
        let mut rows = Vec::new();
        for (i, g) in self.generators().iter().enumerate() {
            rows.extend(shift_rows(r, g, self.n, self.family[i + 1].len() - 1));
        }
        rows
    }

    pub fn linear_code(&self) -> LinearCode<R> {
        LinearCode::from_generators(&self.ring, self.n, &self.generator_rows()).expect("rows have length n")
    }

    pub fn contains(&self, c: &Poly<R::Elem>) -> bool {
        let r = &self.ring;
        self.linear_code().contains(&r.pvector(&r.preduce_cyclic(c, self.n), self.n))
    }

    pub fn generator_matrix_free(&self) -> Result<Vec<Vec<R::Elem>>> {
        let g = self.generator_poly()?;
        let k = self.family[1].len() - 1;
        Ok(shift_rows(&self.ring, &g, self.n, k))
    }

    /// Dual of a free code ⟨g⟩, gh = x^n − 1: generated by the monic reciprocal of h.
    pub fn dual_free(&self) -> Result<CyclicCode<R>> {
        let h = &self.family[1];
        self.generator_poly()?;
        let r = &self.ring;
        let rev: Vec<R::Elem> = h.coeffs().iter().rev().cloned().collect();
        let c0 = r.inv(&h.coeffs()[0]).ok_or(Error::NotAUnit)?;
        let hstar = r.pscale(&c0, &r.poly(rev));
        CyclicCode::free(r, self.n, &hstar)
    }
}

fn check_root<R: ChainRing>(ext: &ExtRing<R>, xi: &ExtElem<R::Elem>, n: usize) -> Result<()> {
    if ext.order(xi) != Some(n as u128) {
        return Err(Error::NotARootOfUnity);
    }
    Ok(())
}

/// Exponents k in 0..n with g(ξ^k) = 0.
pub fn zero_exponents<R: ChainRing>(ext: &ExtRing<R>, xi: &ExtElem<R::Elem>, n: usize, g: &Poly<R::Elem>) -> Vec<usize> {
    let lifted = ext.lift_poly(g);
    (0..n).filter(|&k| ext.is_zero(&ext.peval(&lifted, &ext.pow(xi, k as u128)))).collect()
}

/// Longest cyclic run of consecutive exponents among the zeros of g.
pub fn longest_zero_run<R: ChainRing>(
    ext: &ExtRing<R>,
    xi: &ExtElem<R::Elem>,
    n: usize,
    g: &Poly<R::Elem>,
) -> Result<usize> {
    check_root(ext, xi, n)?;
    let zeros = zero_exponents(ext, xi, n, g);
    let mut is_zero = vec![false; n];
    for k in zeros {
        is_zero[k] = true;
    }
    if is_zero.iter().all(|&z| z) {
        return Ok(n);
    }
    let mut best = 0;
    for start in 0..n {
        let mut len = 0;
        while len < n && is_zero[(start + len) % n] {
            len += 1;
        }
        best = best.max(len);
    }
    Ok(best)
}

/// δ with d(C) ≥ δ: one more than the longest run of consecutive zeros of the generator.
pub fn bch_bound<R: ChainRing>(code: &CyclicCode<R>, ext: &ExtRing<R>, xi: &ExtElem<R::Elem>) -> Result<usize> {
    let g = code.generator_poly()?;
    Ok(longest_zero_run(ext, xi, code.n(), &g)? + 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralVector<E> {
    pub values: Vec<E>,
    pub xi: E,
}

/// A_i = c(ξ^i).
pub fn ms_transform<R: ChainRing>(
    ext: &ExtRing<R>,
    xi: &ExtElem<R::Elem>,
    n: usize,
    c: &Poly<R::Elem>,
) -> Result<SpectralVector<ExtElem<R::Elem>>> {
    check_root(ext, xi, n)?;
    if (n as u64).is_multiple_of(ext.characteristic_prime()) {
        return Err(Error::NonInvertibleN);
    }
    let lifted = ext.lift_poly(&ext.base().preduce_cyclic(c, n));
    let values = (0..n).map(|i| ext.peval(&lifted, &ext.pow(xi, i as u128))).collect();
    Ok(SpectralVector { values, xi: xi.clone() })
}

/// c_j = n^{−1} Σ_k A_k ξ^{−jk}, as coefficients in ℛ.
pub fn ms_inverse<R: ChainRing>(ext: &ExtRing<R>, spec: &SpectralVector<ExtElem<R::Elem>>) -> Result<Vec<ExtElem<R::Elem>>> {
    let n = spec.values.len();
    let ninv = ext.inv(&ext.from_int(n as i64)).ok_or(Error::NonInvertibleN)?;
    let xinv = ext.inv(&spec.xi).ok_or(Error::NotARootOfUnity)?;
    Ok((0..n)
        .map(|j| {
            let w = ext.pow(&xinv, j as u128);
            let mut acc = ext.zero();
            let mut wk = ext.one();
            for a in &spec.values {
                acc = ext.add(&acc, &ext.mul(a, &wk));
                wk = ext.mul(&wk, &w);
            }
            ext.mul(&acc, &ninv)
        })
        .collect())
}

/// The inverse transform as a polynomial over R, when every coefficient lies in R.
pub fn ms_inverse_base<R: ChainRing>(
    ext: &ExtRing<R>,
    spec: &SpectralVector<ExtElem<R::Elem>>,
) -> Result<Option<Poly<R::Elem>>> {
    let coeffs = ms_inverse(ext, spec)?;
    let base: Option<Vec<R::Elem>> = coeffs.iter().map(|c| ext.as_base(c)).collect();
    Ok(base.map(|v| ext.base().poly(v)))
}

/// c_v = Σ_j Tr(a_j ξ^{v·i_j}) for v = 0..n−1.
pub fn trace_codeword<R: ChainRing>(
    ext: &ExtRing<R>,
    xi: &ExtElem<R::Elem>,
    n: usize,
    coeffs: &[ExtElem<R::Elem>],
    exponents: &[u64],
) -> Result<Vec<R::Elem>> {
    check_root(ext, xi, n)?;
    if coeffs.len() != exponents.len() {
        return Err(Error::DimensionMismatch(format!("{} coefficients, {} exponents", coeffs.len(), exponents.len())));
    }
    let q = ext.base().residue_size() as u64;
    for a in 0..exponents.len() {
        let ca = coset_of(n as u64, q, exponents[a]);
        for &eb in &exponents[a + 1..] {
            if ca.contains(eb) {
                return Err(Error::CosetCollision(exponents[a], eb));
            }
        }
    }
    let b = ext.base();
    Ok((0..n as u64)
        .map(|v| {
            let terms: Vec<R::Elem> = coeffs
                .iter()
                .zip(exponents)
                .map(|(a, &i)| ext.trace(&ext.mul(a, &ext.pow(xi, ((v * i) % n as u64) as u128))))
                .collect();
            b.sum(&terms)
        })
        .collect())
}

/// Tr(a ξ^{v·i}) = 0, evaluated directly.
pub fn trace_coordinate_vanishes<R: ChainRing>(ext: &ExtRing<R>, xi: &ExtElem<R::Elem>, n: usize, a: &ExtElem<R::Elem>, v: u64, i: u64) -> bool {
    let t = ext.trace(&ext.mul(a, &ext.pow(xi, ((v * i) % n as u64) as u128)));
    ext.base().is_zero(&t)
}

/// The stated zero-coordinate criterion: τ = |U_{v·i}| ≠ m and Tr_{ℛ/R̃}(a) = 0 with [R̃ : R] = τ.
pub fn zero_coord_criterion<R: ChainRing>(ext: &ExtRing<R>, n: usize, a: &ExtElem<R::Elem>, v: u64, i: u64) -> bool {
    let q = ext.base().residue_size() as u64;
    let tau = coset_of(n as u64, q, v * i % n as u64).len();
    let m = ext.degree();
    tau != m && ext.trace_to(a, tau).map(|t| ext.is_zero(&t)).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainring::BaseRing;
    use crate::factor::factor_xn_minus_1;

    fn example_code() -> (BaseRing, CyclicCode<BaseRing>) {
        let r = BaseRing::eisenstein(2, 1, 2).unwrap();
        let fac = factor_xn_minus_1(&r, 7).unwrap();
        let g = fac.product_of(&[0, 1]);
        (r.clone(), CyclicCode::free(&r, 7, &g).unwrap())
    }

    #[test]
    fn free_code_and_matrix() {
        let (r, c) = example_code();
        assert_eq!(c.is_free_rank(), (true, Some(3)));
        let m = c.generator_matrix_free().unwrap();
        let rows: Vec<String> = m.iter().map(|row| row.iter().map(|e| r.format(e)).collect()).collect();
        assert_eq!(rows, vec!["1011100", "0101110", "0010111"]);
        assert_eq!(c.linear_code().cardinality(), Some(64));
    }

    #[test]
    fn bch_of_example() {
        let (r, c) = example_code();
        let fac = factor_xn_minus_1(&r, 7).unwrap();
        assert_eq!(bch_bound(&c, fac.splitting_ring(), fac.xi()).unwrap(), 4);
    }

    #[test]
    fn dual_is_involution() {
        let (_, c) = example_code();
        let dd = c.dual_free().unwrap().dual_free().unwrap();
        assert!(dd.linear_code().same_code(&c.linear_code()));
    }

    #[test]
    fn non_free_family() {
        let r = BaseRing::eisenstein(2, 1, 2).unwrap();
        let fam = vec![r.pone(), r.pone(), r.xn_minus_1(3)];
        let c = CyclicCode::from_family(&r, fam).unwrap();
        assert_eq!(c.is_free_rank(), (false, None));
        assert!(matches!(c.dual_free(), Err(Error::NotFree)));
        assert_eq!(c.linear_code().cardinality(), Some(8));
    }
}
