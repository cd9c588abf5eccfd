//! Dense univariate polynomials over any `CommRing`, lowest degree first.

use crate::error::{Error, Result};
use crate::ring::{ChainRing, CommRing};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Polynomial arithmetic, available on every ring.
pub trait PolyOps: CommRing {
    fn poly(&self, mut coeffs: Vec<Self::Elem>) -> Poly<Self::Elem> {
        while coeffs.last().is_some_and(|c| self.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    fn pzero(&self) -> Poly<Self::Elem> {
        Poly { coeffs: Vec::new() }
    }

    fn pconst(&self, c: Self::Elem) -> Poly<Self::Elem> {
        self.poly(vec![c])
    }

    fn pone(&self) -> Poly<Self::Elem> {
        self.pconst(self.one())
    }

    fn pmonomial(&self, c: Self::Elem, k: usize) -> Poly<Self::Elem> {
        let mut v = vec![self.zero(); k + 1];
        v[k] = c;
        self.poly(v)
    }

    fn px(&self) -> Poly<Self::Elem> {
        self.pmonomial(self.one(), 1)
    }

    /// x^n − 1.
    fn xn_minus_1(&self, n: usize) -> Poly<Self::Elem> {
        let mut v = vec![self.zero(); n + 1];
        v[0] = self.neg(&self.one());
        v[n] = self.add(&v[n], &self.one());
        self.poly(v)
    }

    /// Coefficient k (zero beyond the degree).
    fn coeff(&self, f: &Poly<Self::Elem>, k: usize) -> Self::Elem {
        f.coeffs.get(k).cloned().unwrap_or_else(|| self.zero())
    }

    fn is_monic(&self, f: &Poly<Self::Elem>) -> bool {
        f.lead().is_some_and(|c| self.is_one(c))
    }

    fn padd(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        let n = f.len().max(g.len());
        let v = (0..n).map(|i| self.add(&self.coeff(f, i), &self.coeff(g, i))).collect();
        self.poly(v)
    }

    fn psub(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        let n = f.len().max(g.len());
        let v = (0..n).map(|i| self.sub(&self.coeff(f, i), &self.coeff(g, i))).collect();
        self.poly(v)
    }

    fn pneg(&self, f: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        self.poly(f.coeffs.iter().map(|c| self.neg(c)).collect())
    }

    fn pscale(&self, c: &Self::Elem, f: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        self.poly(f.coeffs.iter().map(|x| self.mul(c, x)).collect())
    }

    /// Multiplication by x^k.
    fn pshift(&self, f: &Poly<Self::Elem>, k: usize) -> Poly<Self::Elem> {
        if f.is_zero() {
            return f.clone();
        }
        let mut v = vec![self.zero(); k];
        v.extend(f.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    fn pmul(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        if f.is_zero() || g.is_zero() {
            return self.pzero();
        }
        let mut v = vec![self.zero(); f.len() + g.len() - 1];
        for (i, a) in f.coeffs.iter().enumerate() {
            if self.is_zero(a) {
                continue;
            }
            for (j, b) in g.coeffs.iter().enumerate() {
                v[i + j] = self.add(&v[i + j], &self.mul(a, b));
            }
        }
        self.poly(v)
    }

    fn pproduct<'a, I>(&self, items: I) -> Poly<Self::Elem>
    where
        I: IntoIterator<Item = &'a Poly<Self::Elem>>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.pone(), |acc, f| self.pmul(&acc, f))
    }

    /// Division by a monic divisor: f = q·g + r with deg r < deg g.
    fn pdivrem(
        &self,
        f: &Poly<Self::Elem>,
        g: &Poly<Self::Elem>,
    ) -> Result<(Poly<Self::Elem>, Poly<Self::Elem>)> {
        if !self.is_monic(g) {
            return Err(Error::NonMonicDivisor);
        }
        let dg = g.len() - 1;
        if f.len() <= dg {
            return Ok((self.pzero(), f.clone()));
        }
        let mut r = f.coeffs.clone();
        let mut q = vec![self.zero(); f.len() - dg];
        for k in (dg..r.len()).rev() {
            let c = r[k].clone();
            if self.is_zero(&c) {
                continue;
            }
            q[k - dg] = c.clone();
            for (i, gi) in g.coeffs.iter().enumerate() {
                r[k - dg + i] = self.sub(&r[k - dg + i], &self.mul(&c, gi));
            }
        }
        r.truncate(dg);
        Ok((self.poly(q), self.poly(r)))
    }

    fn prem(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>) -> Result<Poly<Self::Elem>> {
        Ok(self.pdivrem(f, g)?.1)
    }

    /// Exact quotient by a monic divisor.
    fn pdiv_exact(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>) -> Result<Poly<Self::Elem>> {
        let (q, r) = self.pdivrem(f, g)?;
        if !r.is_zero() {
            return Err(Error::NotADivisor);
        }
        Ok(q)
    }

    /// Reduction modulo x^n − 1.
    fn preduce_cyclic(&self, f: &Poly<Self::Elem>, n: usize) -> Poly<Self::Elem> {
        if f.len() <= n {
            return f.clone();
        }
        let mut v = vec![self.zero(); n];
        for (i, c) in f.coeffs.iter().enumerate() {
            v[i % n] = self.add(&v[i % n], c);
        }
        self.poly(v)
    }

    /// Product in R[x]/⟨x^n − 1⟩.
    fn pmul_cyclic(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>, n: usize) -> Poly<Self::Elem> {
        if f.is_zero() || g.is_zero() {
            return self.pzero();
        }
        let mut v = vec![self.zero(); n];
        for (i, a) in f.coeffs.iter().enumerate() {
            if self.is_zero(a) {
                continue;
            }
            for (j, b) in g.coeffs.iter().enumerate() {
                let k = (i + j) % n;
                v[k] = self.add(&v[k], &self.mul(a, b));
            }
        }
        self.poly(v)
    }

    fn peval(&self, f: &Poly<Self::Elem>, x: &Self::Elem) -> Self::Elem {
        f.coeffs
            .iter()
            .rev()
            .fold(self.zero(), |acc, c| self.add(&self.mul(&acc, x), c))
    }

    fn pderiv(&self, f: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        let v = f
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.mul(&self.from_int(i as i64), c))
            .collect();
        self.poly(v)
    }

    /// Coefficient vector of length n (zero-padded).
    fn pvector(&self, f: &Poly<Self::Elem>, n: usize) -> Vec<Self::Elem> {
        (0..n).map(|i| self.coeff(f, i)).collect()
    }

    /// Canonical text: descending powers, zero terms omitted.
    fn pformat(&self, f: &Poly<Self::Elem>, var: &str) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (k, c) in f.coeffs.iter().enumerate().rev() {
            if self.is_zero(c) {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let cs = self.format(c);
            let cs = if cs.contains('+') { format!("({cs})") } else { cs };
            terms.push(match (k, self.is_one(c)) {
                (0, _) => cs,
                (_, true) => mono,
                _ => format!("{cs}*{mono}"),
            });
        }
        terms.join("+")
    }
}

impl<R: CommRing> PolyOps for R {}

/// Coefficient-wise ring map.
pub fn pmap<A: CommRing, B: CommRing>(
    target: &B,
    f: &Poly<A::Elem>,
    map: impl Fn(&A::Elem) -> B::Elem,
) -> Poly<B::Elem> {
    target.poly(f.coeffs.iter().map(map).collect())
}

/// Arithmetic of residue polynomials F_Q[x] carried inside R[x]: every coefficient is
/// kept as its residue representative.
pub trait ResidueOps: ChainRing {
    fn res_elem(&self, a: &Self::Elem) -> Self::Elem {
        self.residue_rep(self.residue_index(a))
    }

    /// f̄ with coefficients replaced by residue representatives.
    fn residue_poly(&self, f: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        self.poly(f.coeffs.iter().map(|c| self.res_elem(c)).collect())
    }

    fn res_inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.inv(a).map(|b| self.res_elem(&b))
    }

    fn res_monic(&self, f: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        match f.lead() {
            None => f.clone(),
            Some(l) => {
                let inv = self.res_inv(l).expect("leading residue is nonzero");
                self.residue_poly(&self.pscale(&inv, f))
            }
        }
    }

    fn res_divrem(
        &self,
        f: &Poly<Self::Elem>,
        g: &Poly<Self::Elem>,
    ) -> (Poly<Self::Elem>, Poly<Self::Elem>) {
        let f = self.residue_poly(f);
        let g = self.residue_poly(g);
        let lc = self.res_inv(g.lead().expect("nonzero divisor")).expect("unit lead");
        let gm = self.residue_poly(&self.pscale(&lc, &g));
        let (q, r) = self.pdivrem(&f, &gm).expect("monic");
        (self.residue_poly(&self.pscale(&lc, &q)), self.residue_poly(&r))
    }

    fn res_mul(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        self.residue_poly(&self.pmul(f, g))
    }

    /// Monic gcd over the residue field.
    fn res_gcd(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        self.res_xgcd(f, g).0
    }

    /// (d, a, b) with a·f + b·g ≡ d, d monic (or zero when f̄ = ḡ = 0).
    fn res_xgcd(
        &self,
        f: &Poly<Self::Elem>,
        g: &Poly<Self::Elem>,
    ) -> (Poly<Self::Elem>, Poly<Self::Elem>, Poly<Self::Elem>) {
        let (mut r0, mut r1) = (self.residue_poly(f), self.residue_poly(g));
        let (mut a0, mut a1) = (self.pone(), self.pzero());
        let (mut b0, mut b1) = (self.pzero(), self.pone());
        while !r1.is_zero() {
            let (q, r) = self.res_divrem(&r0, &r1);
            let a2 = self.residue_poly(&self.psub(&a0, &self.pmul(&q, &a1)));
            let b2 = self.residue_poly(&self.psub(&b0, &self.pmul(&q, &b1)));
            (r0, r1) = (r1, r);
            (a0, a1) = (a1, a2);
            (b0, b1) = (b1, b2);
        }
        match r0.lead() {
            None => (r0, a0, b0),
            Some(l) => {
                let inv = self.res_inv(l).unwrap();
                (
                    self.residue_poly(&self.pscale(&inv, &r0)),
                    self.residue_poly(&self.pscale(&inv, &a0)),
                    self.residue_poly(&self.pscale(&inv, &b0)),
                )
            }
        }
    }

    /// Divisibility of residues: ḡ | f̄.
    fn res_divides(&self, g: &Poly<Self::Elem>, f: &Poly<Self::Elem>) -> bool {
        let g = self.residue_poly(g);
        if g.is_zero() {
            return self.residue_poly(f).is_zero();
        }
        self.res_divrem(f, &g).1.is_zero()
    }

    /// Exact residue quotient f̄ / ḡ.
    fn res_div_exact(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        let (q, r) = self.res_divrem(f, g);
        debug_assert!(r.is_zero());
        q
    }
}

impl<R: ChainRing> ResidueOps for R {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainring::BaseRing;

    #[test]
    fn example_products() {
        let r = BaseRing::eisenstein(2, 1, 2).unwrap();
        let one = r.one();
        let x1 = r.poly(vec![one, one]);
        let m1 = r.poly(vec![one, one, r.zero(), one]);
        let g = r.pmul(&x1, &m1);
        assert_eq!(r.pformat(&g, "x"), "x^4+x^3+x^2+1");
        let (q, rem) = r.pdivrem(&r.xn_minus_1(7), &x1).unwrap();
        assert!(rem.is_zero());
        assert_eq!(r.pformat(&q, "x"), "x^6+x^5+x^4+x^3+x^2+x+1");
        assert!(r.prem(&m1, &m1).unwrap().is_zero());
    }

    #[test]
    fn non_monic_divisor_rejected() {
        let r = BaseRing::eisenstein(2, 1, 2).unwrap();
        let u = r.gamma();
        let g = r.poly(vec![r.one(), u]);
        assert_eq!(r.pdivrem(&r.px(), &g).unwrap_err(), Error::NonMonicDivisor);
    }

    #[test]
    fn residue_map() {
        let r = BaseRing::eisenstein(5, 1, 2).unwrap();
        let u = r.gamma();
        let c = r.add(&r.from_int(3), &r.mul(&r.from_int(2), &u));
        let f = r.poly(vec![c, r.one()]);
        assert_eq!(r.pformat(&r.residue_poly(&f), "x"), "x+3");
        let g = r.poly(vec![u, u]);
        assert!(r.residue_poly(&g).is_zero());
    }
}
