//! Coprimality, cyclotomic cosets, Hensel lifting and the factorization of x^n − 1.

use crate::arith::{gcd, mult_order};
use crate::chainring::{BaseRing, RingElement};
use crate::error::{Error, Result};
use crate::extension::{ExtElem, ExtRing};
use crate::poly::{pmap, Poly, PolyOps, ResidueOps};
use crate::ring::{ChainRing, CommRing};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicCoset {
    pub n: u64,
    pub q: u64,
    /// Sorted members; the first is the representative.
    pub members: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn representative(&self) -> u64 {
        self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, k: u64) -> bool {
        self.members.binary_search(&(k % self.n)).is_ok()
    }
}

pub fn cyclotomic_cosets(n: u64, q: u64) -> Result<Vec<CyclotomicCoset>> {
    if n == 0 || gcd(n, q) != 1 {
        return Err(Error::NotCoprimeLength { n, q });
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        let mut members = Vec::new();
        let mut k = start;
        while !seen[k as usize] {
            seen[k as usize] = true;
            members.push(k);
            k = k * q % n;
        }
        members.sort_unstable();
        out.push(CyclotomicCoset { n, q, members });
    }
    Ok(out)
}

/// The coset of k.
pub fn coset_of(n: u64, q: u64, k: u64) -> CyclotomicCoset {
    let mut members = Vec::new();
    let mut j = k % n;
    loop {
        members.push(j);
        j = j * q % n;
        if j == k % n {
            break;
        }
    }
    members.sort_unstable();
    CyclotomicCoset { n, q, members }
}

/// Bézout witness (a, b) with a·f + b·g = 1 exactly, when gcd(f̄, ḡ) = 1.
pub fn coprime_over_ring<R: ChainRing>(
    r: &R,
    f: &Poly<R::Elem>,
    g: &Poly<R::Elem>,
) -> Option<(Poly<R::Elem>, Poly<R::Elem>)> {
    let (d, a, b) = r.res_xgcd(f, g);
    if d != r.pone() {
        return None;
    }
    // a f + b g = 1 − e with e ∈ γR[x]; multiply through by 1 + e + … + e^{s−1}.
    let e = r.psub(&r.pone(), &r.padd(&r.pmul(&a, f), &r.pmul(&b, g)));
    let mut geo = r.pone();
    let mut ek = r.pone();
    for _ in 1..r.nilpotency() {
        ek = r.pmul(&ek, &e);
        geo = r.padd(&geo, &ek);
    }
    let mut a = r.pmul(&a, &geo);
    let mut b = r.pmul(&b, &geo);
    if r.is_monic(g) && g.degree().unwrap_or(0) > 0 {
        let (quo, rem) = r.pdivrem(&a, g).ok()?;
        a = rem;
        b = r.padd(&b, &r.pmul(&quo, f));
    }
    debug_assert_eq!(r.padd(&r.pmul(&a, f), &r.pmul(&b, g)), r.pone());
    Some((a, b))
}

/// The monic factor of `target` over R reducing to `fbar` (given by residue representatives).
pub fn hensel_lift<R: ChainRing>(
    r: &R,
    fbar: &Poly<R::Elem>,
    target: &Poly<R::Elem>,
) -> Result<Poly<R::Elem>> {
    if !r.is_monic(target) {
        return Err(Error::NonMonicDivisor);
    }
    let tbar = r.residue_poly(target);
    if r.res_gcd(&tbar, &r.pderiv(&tbar)).degree() != Some(0) {
        return Err(Error::NonSquareFreeResidue);
    }
    let fbar = r.residue_poly(fbar);
    if !r.is_monic(&fbar) || !r.res_divides(&fbar, &tbar) {
        return Err(Error::NotADivisor);
    }
    let gbar = r.res_div_exact(&tbar, &fbar);
    let (d, mut a, mut b) = r.res_xgcd(&fbar, &gbar);
    if d != r.pone() {
        return Err(Error::NonSquareFreeResidue);
    }
    let (mut f, mut g) = (fbar.clone(), gbar);
    let s = r.nilpotency();
    let mut prec = 1;
    while prec < s {
        let e = r.psub(target, &r.pmul(&f, &g));
        let (q, rem) = r.pdivrem(&r.pmul(&b, &e), &f)?;
        let f2 = r.padd(&f, &rem);
        let g2 = r.padd(&g, &r.padd(&r.pmul(&a, &e), &r.pmul(&q, &g)));
        let err = r.psub(&r.padd(&r.pmul(&a, &f2), &r.pmul(&b, &g2)), &r.pone());
        let (c, dd) = r.pdivrem(&r.pmul(&b, &err), &f2)?;
        b = r.psub(&b, &dd);
        a = r.psub(&a, &r.padd(&r.pmul(&a, &err), &r.pmul(&c, &g2)));
        f = f2;
        g = g2;
        prec *= 2;
    }
    if !r.is_monic(&f) || !r.prem(target, &f)?.is_zero() || r.residue_poly(&f) != fbar {
        return Err(Error::NotADivisor);
    }
    Ok(f)
}

/// Hensel lift of a residue-field polynomial given over `ring.residue_field()`.
pub fn hensel_lift_factor(
    ring: &BaseRing,
    fbar: &Poly<RingElement>,
    target: &Poly<RingElement>,
) -> Result<Poly<RingElement>> {
    let lifted = pmap::<BaseRing, BaseRing>(ring, fbar, |c| ring.embed_residue(c));
    hensel_lift(ring, &lifted, target)
}

/// Lexicographically smallest monic primitive polynomial of degree t over the field `f`
/// (coefficient indices read as base-q digits, top coefficient most significant).
pub fn smallest_primitive<F: ChainRing>(f: &F, t: usize) -> Poly<F::Elem> {
    assert_eq!(f.nilpotency(), 1, "needs a field");
    let q = f.residue_size();
    let order = q.pow(t as u32) - 1;
    let total = q.pow(t as u32);
    for v in 0..total {
        let mut coeffs: Vec<F::Elem> = (0..t as u32).map(|i| f.residue_rep(v / q.pow(i) % q)).collect();
        coeffs.push(f.one());
        let cand = f.poly(coeffs);
        if f.is_zero(&cand.coeffs()[0]) {
            continue;
        }
        if let Ok(ext) = ExtRing::new(f.clone(), cand.clone()) {
            if ext.order(&ext.gen()) == Some(order) {
                return cand;
            }
        }
    }
    unreachable!("primitive polynomials exist")
}

/// Minimal polynomial over the base of ξ^power for an n-th primitive root ξ in `ext`.
pub fn minimal_polynomial<B: ChainRing>(
    ext: &ExtRing<B>,
    xi: &ExtElem<B::Elem>,
    power: u64,
) -> Result<Poly<B::Elem>> {
    let n = ext.order(xi).ok_or(Error::NotARootOfUnity)?;
    let q = ext.base().residue_size();
    if !ext.is_one(&ext.teichmuller(xi)) && ext.teichmuller(xi) != *xi {
        return Err(Error::NotARootOfUnity);
    }
    let coset = coset_of(n as u64, q as u64, power);
    let x = ext.px();
    let mut m = ext.pone();
    for &k in &coset.members {
        let root = ext.pow(xi, k as u128);
        m = ext.pmul(&m, &ext.psub(&x, &ext.pconst(root)));
    }
    let b = ext.base();
    let coeffs: Option<Vec<B::Elem>> = m.coeffs().iter().map(|c| ext.as_base(c)).collect();
    Ok(b.poly(coeffs.ok_or(Error::NotARootOfUnity)?))
}

/// Basic irreducible factorization of x^n − 1 over R, with matching cosets and a fixed
/// Teichmüller n-th root ξ in the smallest Galois extension containing one.
#[derive(Clone, Debug)]
pub struct Factorization {
    ring: BaseRing,
    n: usize,
    factors: Vec<Poly<RingElement>>,
    cosets: Vec<CyclotomicCoset>,
    ext: ExtRing<BaseRing>,
    xi: ExtElem<RingElement>,
}

impl Factorization {
    pub fn ring(&self) -> &BaseRing {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[Poly<RingElement>] {
        &self.factors
    }

    pub fn cosets(&self) -> &[CyclotomicCoset] {
        &self.cosets
    }

    pub fn representatives(&self) -> Vec<u64> {
        self.cosets.iter().map(|c| c.representative()).collect()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// ℛ ⊇ R containing the n-th roots of unity.
    pub fn splitting_ring(&self) -> &ExtRing<BaseRing> {
        &self.ext
    }

    /// The fixed primitive n-th root of unity ξ ∈ ℛ.
    pub fn xi(&self) -> &ExtElem<RingElement> {
        &self.xi
    }

    /// Index of the factor whose coset contains k.
    pub fn factor_of_exponent(&self, k: u64) -> usize {
        self.cosets.iter().position(|c| c.contains(k)).expect("cosets partition Z_n")
    }

    /// Indices of the factors whose residues divide f̄.
    pub fn support_of(&self, f: &Poly<RingElement>) -> Vec<usize> {
        let r = &self.ring;
        (0..self.factors.len()).filter(|&i| r.res_divides(&self.factors[i], f)).collect()
    }

    pub fn product_of(&self, idx: &[usize]) -> Poly<RingElement> {
        self.ring.pproduct(idx.iter().map(|&i| &self.factors[i]))
    }
}

/// Degree-d Galois extension of R whose modulus lifts the smallest primitive polynomial.
pub fn galois_extension(ring: &BaseRing, d: usize) -> Result<ExtRing<BaseRing>> {
    let prim = smallest_primitive(&ring.residue_field(), d);
    let lifted = pmap::<BaseRing, BaseRing>(ring, &prim, |c| ring.embed_residue(c));
    ExtRing::new(ring.clone(), lifted)
}

pub fn factor_xn_minus_1(ring: &BaseRing, n: usize) -> Result<Factorization> {
    let q = ring.q();
    let cosets = cyclotomic_cosets(n as u64, q)?;
    let t = mult_order(q % n as u64, n as u64).max(1) as usize;
    let field = ring.residue_field();
    let prim = smallest_primitive(&field, t);
    let field_ext = ExtRing::new(field.clone(), prim.clone())?;
    let big = field.residue_size().pow(t as u32) - 1;
    let alpha = field_ext.pow(&field_ext.gen(), big / n as u128);

    let target = ring.xn_minus_1(n);
    let mut pairs = Vec::with_capacity(cosets.len());
    for coset in cosets {
        let x = field_ext.px();
        let mut m = field_ext.pone();
        for &k in &coset.members {
            let root = field_ext.pow(&alpha, k as u128);
            m = field_ext.pmul(&m, &field_ext.psub(&x, &field_ext.pconst(root)));
        }
        let coeffs: Vec<RingElement> =
            m.coeffs().iter().map(|c| field_ext.as_base(c).expect("coefficients in F_q")).collect();
        let mbar = field.poly(coeffs);
        let f = hensel_lift_factor(ring, &mbar, &target)?;
        pairs.push((f, coset));
    }
    pairs.sort_by(|(f, _), (g, _)| {
        let key = |p: &Poly<RingElement>| -> (usize, Vec<u128>) {
            let res = ring.residue_poly(p);
            (p.len(), res.coeffs().iter().rev().map(|c| ring.residue_index(c)).collect())
        };
        key(f).cmp(&key(g))
    });
    let (factors, cosets): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    if ring.pproduct(&factors) != target {
        return Err(Error::ProductMismatch);
    }

    let ext = galois_extension(ring, t)?;
    let zeta = ext.teichmuller(&ext.gen());
    let xi = ext.pow(&zeta, big / n as u128);
    Ok(Factorization { ring: ring.clone(), n, factors, cosets, ext, xi })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosets_of_7_over_2() {
        let c = cyclotomic_cosets(7, 2).unwrap();
        let m: Vec<Vec<u64>> = c.iter().map(|c| c.members.clone()).collect();
        assert_eq!(m, vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]]);
        assert!(matches!(cyclotomic_cosets(2, 2), Err(Error::NotCoprimeLength { .. })));
    }

    #[test]
    fn factor_7_over_f2u() {
        let r = BaseRing::eisenstein(2, 1, 2).unwrap();
        let fac = factor_xn_minus_1(&r, 7).unwrap();
        let shown: Vec<String> = fac.factors().iter().map(|f| r.pformat(f, "x")).collect();
        assert_eq!(shown, vec!["x+1", "x^3+x+1", "x^3+x^2+1"]);
        assert_eq!(fac.representatives(), vec![0, 1, 3]);
    }

    #[test]
    fn z4_lift_is_nontrivial() {
        let r = BaseRing::galois(2, 2, 1).unwrap();
        let fac = factor_xn_minus_1(&r, 7).unwrap();
        let shown: Vec<String> = fac.factors().iter().map(|f| r.pformat(f, "x")).collect();
        // the classical Z4 lifts of x^3+x+1 and x^3+x^2+1
        assert_eq!(shown, vec!["x+3", "x^3+2*x^2+x+3", "x^3+3*x^2+2*x+3"]);
    }
}
