//! Galois extensions ℛ = B[x]/⟨f⟩ over a chain ring B, with Frobenius and traces.
//!
//! `ExtRing<B>` is itself a chain ring, so towers like (R[ξ]/h)[x]/f compose.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith::prime_factors;
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyOps, ResidueOps};
use crate::ring::{ChainRing, CommRing};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtElem<E> {
    coords: Vec<E>,
}

impl<E> ExtElem<E> {
    /// Power-basis coordinates.
    pub fn coords(&self) -> &[E] {
        &self.coords
    }
}

struct ExtInner<B: ChainRing> {
    base: B,
    modulus: Poly<B::Elem>,
    d: usize,
    /// φ(x^i) for i < d.
    frob: Vec<ExtElem<B::Elem>>,
    var: String,
}

#[derive(Clone)]
pub struct ExtRing<B: ChainRing> {
    inner: Arc<ExtInner<B>>,
}

impl<B: ChainRing> fmt::Debug for ExtRing<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.inner.base.pformat(&self.inner.modulus, "x");
        write!(f, "ExtRing({:?}[x]/({m}))", self.inner.base)
    }
}

/// Powers modulo a residue polynomial, all coefficients kept as residue representatives.
fn res_powmod<B: ChainRing>(b: &B, base: &Poly<B::Elem>, mut e: u128, f: &Poly<B::Elem>) -> Poly<B::Elem> {
    let mut acc = b.pone();
    let mut cur = b.res_divrem(base, f).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = b.res_divrem(&b.res_mul(&acc, &cur), f).1;
        }
        e >>= 1;
        if e > 0 {
            cur = b.res_divrem(&b.res_mul(&cur, &cur), f).1;
        }
    }
    acc
}

/// Rabin's test for f̄ over the residue field of `b`.
pub fn residue_irreducible<B: ChainRing>(b: &B, f: &Poly<B::Elem>) -> bool {
    let f = b.residue_poly(f);
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    let q = b.residue_size();
    let x = b.px();
    // x^{q^k} by repeated q-th powering
    let mut pows = vec![b.res_divrem(&x, &f).1];
    for _ in 0..d {
        let last = pows.last().unwrap().clone();
        pows.push(res_powmod(b, &last, q, &f));
    }
    if pows[d] != pows[0] {
        return false;
    }
    prime_factors(d as u128).into_iter().all(|r| {
        let g = b.residue_poly(&b.psub(&pows[d / r as usize], &x));
        b.res_gcd(&g, &f).degree() == Some(0)
    })
}

impl<B: ChainRing> ExtRing<B> {
    /// B[x]/⟨f⟩ for monic basic irreducible f.
    pub fn new(base: B, f: Poly<B::Elem>) -> Result<ExtRing<B>> {
        ExtRing::with_var(base, f, "xi")
    }

    pub fn with_var(base: B, f: Poly<B::Elem>, var: &str) -> Result<ExtRing<B>> {
        if !base.is_monic(&f) {
            return Err(Error::NonMonicDivisor);
        }
        if !residue_irreducible(&base, &f) {
            return Err(Error::NotBasicIrreducible);
        }
        let d = f.degree().unwrap();
        let inner = ExtInner { base, modulus: f, d, frob: Vec::new(), var: var.to_string() };
        let mut ext = ExtRing { inner: Arc::new(inner) };
        let root = ext.frobenius_root();
        let mut frob = Vec::with_capacity(d);
        let mut acc = ext.one();
        for _ in 0..d {
            frob.push(acc.clone());
            acc = ext.mul(&acc, &root);
        }
        Arc::get_mut(&mut ext.inner).unwrap().frob = frob;
        Ok(ext)
    }

    /// The root of f congruent to x^q, by Newton iteration from x^q.
    fn frobenius_root(&self) -> ExtElem<B::Elem> {
        let b = &self.inner.base;
        let f = self.lift_poly(&self.inner.modulus);
        let df = self.lift_poly(&b.pderiv(&self.inner.modulus));
        let mut r = self.pow(&self.gen(), b.residue_size());
        for _ in 0..=b.nilpotency() {
            let fr = self.peval(&f, &r);
            if self.is_zero(&fr) {
                break;
            }
            let inv = self.inv(&self.peval(&df, &r)).expect("separable modulus");
            r = self.sub(&r, &self.mul(&fr, &inv));
        }
        debug_assert!(self.is_zero(&self.peval(&f, &r)));
        r
    }

    pub fn base(&self) -> &B {
        &self.inner.base
    }

    pub fn modulus(&self) -> &Poly<B::Elem> {
        &self.inner.modulus
    }

    pub fn degree(&self) -> usize {
        self.inner.d
    }

    pub fn var(&self) -> &str {
        &self.inner.var
    }

    /// Element from power-basis coordinates (padded or reduced as needed).
    pub fn from_coords(&self, coords: Vec<B::Elem>) -> ExtElem<B::Elem> {
        let b = &self.inner.base;
        if coords.len() <= self.inner.d {
            let mut c = coords;
            c.resize(self.inner.d, b.zero());
            return ExtElem { coords: c };
        }
        self.reduce(&b.poly(coords))
    }

    /// Class of a polynomial over B.
    pub fn reduce(&self, f: &Poly<B::Elem>) -> ExtElem<B::Elem> {
        let b = &self.inner.base;
        let r = b.prem(f, &self.inner.modulus).expect("monic modulus");
        ExtElem { coords: b.pvector(&r, self.inner.d) }
    }

    pub fn to_poly(&self, a: &ExtElem<B::Elem>) -> Poly<B::Elem> {
        self.inner.base.poly(a.coords.clone())
    }

    pub fn embed(&self, c: &B::Elem) -> ExtElem<B::Elem> {
        let b = &self.inner.base;
        let mut coords = vec![b.zero(); self.inner.d];
        coords[0] = c.clone();
        ExtElem { coords }
    }

    /// The class ξ of x.
    pub fn gen(&self) -> ExtElem<B::Elem> {
        self.reduce(&self.inner.base.px())
    }

    /// Polynomial over B viewed over ℛ.
    pub fn lift_poly(&self, f: &Poly<B::Elem>) -> Poly<ExtElem<B::Elem>> {
        self.poly(f.coeffs().iter().map(|c| self.embed(c)).collect())
    }

    /// Inverse of `embed` on elements of B; `None` if a ∉ B.
    pub fn as_base(&self, a: &ExtElem<B::Elem>) -> Option<B::Elem> {
        let b = &self.inner.base;
        a.coords[1..].iter().all(|c| b.is_zero(c)).then(|| a.coords[0].clone())
    }

    pub fn frobenius(&self, a: &ExtElem<B::Elem>, times: usize) -> ExtElem<B::Elem> {
        let b = &self.inner.base;
        let mut cur = a.clone();
        for _ in 0..times % self.inner.d.max(1) {
            let mut acc = self.zero();
            for (c, img) in cur.coords.iter().zip(&self.inner.frob) {
                if b.is_zero(c) {
                    continue;
                }
                let term = ExtElem { coords: img.coords.iter().map(|x| b.mul(c, x)).collect() };
                acc = self.add(&acc, &term);
            }
            cur = acc;
        }
        cur
    }

    /// Tr over the subring fixed by φ^τ (τ | d), as an element of ℛ.
    pub fn trace_to(&self, a: &ExtElem<B::Elem>, tau: usize) -> Result<ExtElem<B::Elem>> {
        let d = self.inner.d;
        if tau == 0 || !d.is_multiple_of(tau) {
            return Err(Error::NotASubextension(tau));
        }
        let mut acc = self.zero();
        let mut cur = a.clone();
        for _ in 0..d / tau {
            acc = self.add(&acc, &cur);
            cur = self.frobenius(&cur, tau);
        }
        Ok(acc)
    }

    /// Tr_{ℛ/B}.
    pub fn trace(&self, a: &ExtElem<B::Elem>) -> B::Elem {
        let t = self.trace_to(a, 1).expect("1 divides d");
        self.as_base(&t).expect("trace lies in the base ring")
    }

    /// Tr from ℛ to an intermediate extension given by an embedding.
    pub fn trace_into(&self, a: &ExtElem<B::Elem>, emb: &Embedding<B>) -> Result<ExtElem<B::Elem>> {
        let t = self.trace_to(a, emb.sub.degree())?;
        emb.preimage(&t).ok_or(Error::NotASubextension(emb.sub.degree()))
    }

    /// First element of exact multiplicative order `order`, Teichmüller elements first.
    pub fn find_unit_of_order(&self, order: u128) -> Result<ExtElem<B::Elem>> {
        let q = self.residue_size();
        if order == 0 {
            return Err(Error::NoSuchOrder(order));
        }
        if (q - 1).is_multiple_of(order) {
            for idx in 1..q {
                let t = self.teichmuller(&self.residue_rep(idx));
                if self.order(&t) == Some(order) {
                    return Ok(t);
                }
            }
        } else if self.unit_group_order().is_multiple_of(order) && self.cardinality() <= 1 << 20 {
            for idx in 1..self.cardinality() {
                let a = self.element(idx);
                if self.order(&a) == Some(order) {
                    return Ok(a);
                }
            }
        }
        Err(Error::NoSuchOrder(order))
    }

    /// R-module map R^d → ℛ on polynomials: (v_0(x), …, v_{d−1}(x)) ↦ Σ v_i(x) ξ^i.
    pub fn pack(&self, v: &[Poly<B::Elem>]) -> Result<Poly<ExtElem<B::Elem>>> {
        let d = self.inner.d;
        if v.len() != d {
            return Err(Error::DegreeMismatch { expected: d, got: v.len() });
        }
        let b = &self.inner.base;
        let n = v.iter().map(|p| p.len()).max().unwrap_or(0);
        let coeffs = (0..n)
            .map(|k| ExtElem { coords: v.iter().map(|p| b.coeff(p, k)).collect() })
            .collect();
        Ok(self.poly(coeffs))
    }

    pub fn unpack(&self, a: &Poly<ExtElem<B::Elem>>) -> Vec<Poly<B::Elem>> {
        let b = &self.inner.base;
        (0..self.inner.d)
            .map(|i| b.poly(a.coeffs().iter().map(|c| c.coords[i].clone()).collect()))
            .collect()
    }

    /// Embedding of a subextension B[y]/⟨g⟩ with deg g | d, by matching a root of g.
    pub fn embedding_of(&self, sub: &ExtRing<B>) -> Result<Embedding<B>> {
        let tau = sub.degree();
        if tau == 0 || !self.inner.d.is_multiple_of(tau) {
            return Err(Error::NotASubextension(tau));
        }
        let g = self.lift_poly(sub.modulus());
        let dg = self.pderiv(&g);
        let q = self.residue_size();
        for idx in 0..q {
            let mut r = self.teichmuller(&self.residue_rep(idx));
            if self.valuation(&self.peval(&g, &r)) == 0 {
                continue;
            }
            for _ in 0..=self.nilpotency() {
                let gr = self.peval(&g, &r);
                if self.is_zero(&gr) {
                    break;
                }
                let inv = self.inv(&self.peval(&dg, &r)).ok_or(Error::NotBasicIrreducible)?;
                r = self.sub(&r, &self.mul(&gr, &inv));
            }
            let mut powers = Vec::with_capacity(tau);
            let mut acc = self.one();
            for _ in 0..tau {
                powers.push(acc.clone());
                acc = self.mul(&acc, &r);
            }
            return Ok(Embedding { sub: sub.clone(), sup: self.clone(), powers, table: OnceLock::new() });
        }
        Err(Error::NotASubextension(tau))
    }

    /// Embedding x ↦ `root` for a given root of the subextension's modulus.
    pub fn embedding_at(&self, sub: &ExtRing<B>, root: &ExtElem<B::Elem>) -> Result<Embedding<B>> {
        let tau = sub.degree();
        if tau == 0 || !self.inner.d.is_multiple_of(tau) {
            return Err(Error::NotASubextension(tau));
        }
        if !self.is_zero(&self.peval(&self.lift_poly(sub.modulus()), root)) {
            return Err(Error::NotASubextension(tau));
        }
        let powers = (0..tau).map(|k| self.pow(root, k as u128)).collect();
        Ok(Embedding { sub: sub.clone(), sup: self.clone(), powers, table: OnceLock::new() })
    }
}

/// Ring embedding of a subextension into ℛ, x ↦ root.
#[derive(Clone, Debug)]
pub struct Embedding<B: ChainRing> {
    sub: ExtRing<B>,
    sup: ExtRing<B>,
    powers: Vec<ExtElem<B::Elem>>,
    table: OnceLock<HashMap<ExtElem<B::Elem>, ExtElem<B::Elem>>>,
}

impl<B: ChainRing> Embedding<B> {
    pub fn sub(&self) -> &ExtRing<B> {
        &self.sub
    }

    pub fn root(&self) -> &ExtElem<B::Elem> {
        &self.powers[1.min(self.powers.len() - 1)]
    }

    pub fn map(&self, a: &ExtElem<B::Elem>) -> ExtElem<B::Elem> {
        let b = self.sup.base();
        let mut acc = self.sup.zero();
        for (c, p) in a.coords.iter().zip(&self.powers) {
            let term = ExtElem { coords: p.coords.iter().map(|x| b.mul(c, x)).collect() };
            acc = self.sup.add(&acc, &term);
        }
        acc
    }

    /// Inverse image of an element of the embedded subring.
    pub fn preimage(&self, a: &ExtElem<B::Elem>) -> Option<ExtElem<B::Elem>> {
        let table = self.table.get_or_init(|| {
            (0..self.sub.cardinality())
                .map(|i| {
                    let e = self.sub.element(i);
                    (self.map(&e), e)
                })
                .collect()
        });
        table.get(a).cloned()
    }
}

impl<B: ChainRing> CommRing for ExtRing<B> {
    type Elem = ExtElem<B::Elem>;

    fn zero(&self) -> Self::Elem {
        ExtElem { coords: vec![self.inner.base.zero(); self.inner.d] }
    }

    fn one(&self) -> Self::Elem {
        self.embed(&self.inner.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.inner.base;
        ExtElem { coords: a.coords.iter().zip(&b.coords).map(|(x, y)| r.add(x, y)).collect() }
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        let r = &self.inner.base;
        ExtElem { coords: a.coords.iter().map(|x| r.neg(x)).collect() }
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.inner.base;
        ExtElem { coords: a.coords.iter().zip(&b.coords).map(|(x, y)| r.sub(x, y)).collect() }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.inner.base;
        let d = self.inner.d;
        let mut prod = vec![r.zero(); 2 * d - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if r.is_zero(x) {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                prod[i + j] = r.add(&prod[i + j], &r.mul(x, y));
            }
        }
        let f = self.inner.modulus.coeffs();
        for k in (d..2 * d - 1).rev() {
            let c = prod[k].clone();
            if r.is_zero(&c) {
                continue;
            }
            for i in 0..d {
                prod[k - d + i] = r.sub(&prod[k - d + i], &r.mul(&c, &f[i]));
            }
        }
        prod.truncate(d);
        ExtElem { coords: prod }
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coords.iter().all(|c| self.inner.base.is_zero(c))
    }

    fn cardinality(&self) -> u128 {
        self.inner.base.cardinality().pow(self.inner.d as u32)
    }

    fn element(&self, mut idx: u128) -> Self::Elem {
        let b = &self.inner.base;
        let n = b.cardinality();
        let coords = (0..self.inner.d)
            .map(|_| {
                let c = b.element(idx % n);
                idx /= n;
                c
            })
            .collect();
        ExtElem { coords }
    }

    fn index_of(&self, a: &Self::Elem) -> u128 {
        let b = &self.inner.base;
        let n = b.cardinality();
        a.coords.iter().rev().fold(0, |acc, c| acc * n + b.index_of(c))
    }

    fn from_int(&self, k: i64) -> Self::Elem {
        self.embed(&self.inner.base.from_int(k))
    }

    fn format(&self, a: &Self::Elem) -> String {
        let b = &self.inner.base;
        b.pformat(&b.poly(a.coords.clone()), &self.inner.var)
    }
}

impl<B: ChainRing> ChainRing for ExtRing<B> {
    fn nilpotency(&self) -> usize {
        self.inner.base.nilpotency()
    }

    fn residue_size(&self) -> u128 {
        self.inner.base.residue_size().pow(self.inner.d as u32)
    }

    fn characteristic_prime(&self) -> u64 {
        self.inner.base.characteristic_prime()
    }

    fn gamma(&self) -> Self::Elem {
        self.embed(&self.inner.base.gamma())
    }

    fn valuation(&self, a: &Self::Elem) -> usize {
        let b = &self.inner.base;
        a.coords.iter().map(|c| b.valuation(c)).min().unwrap_or(b.nilpotency())
    }

    fn div_gamma(&self, a: &Self::Elem) -> Self::Elem {
        let b = &self.inner.base;
        ExtElem { coords: a.coords.iter().map(|c| b.div_gamma(c)).collect() }
    }

    fn residue_rep(&self, mut idx: u128) -> Self::Elem {
        let b = &self.inner.base;
        let q = b.residue_size();
        let coords = (0..self.inner.d)
            .map(|_| {
                let c = b.residue_rep(idx % q);
                idx /= q;
                c
            })
            .collect();
        ExtElem { coords }
    }

    fn residue_index(&self, a: &Self::Elem) -> u128 {
        let b = &self.inner.base;
        let q = b.residue_size();
        a.coords.iter().rev().fold(0, |acc, c| acc * q + b.residue_index(c))
    }
}
