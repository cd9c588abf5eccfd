//! The two supported chain ring families: F_{p^m}[u]/⟨u^s⟩ and GR(p^s, m).

use std::fmt;
use std::sync::Arc;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::gf::{is_irreducible_mod_p, smallest_primitive_mod_p, Gf};
use crate::ring::{ChainRing, CommRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// F_{p^m}[u]/⟨u^s⟩ with γ = u.
    EisensteinU,
    /// GR(p^s, m) = Z_{p^s}[w]/⟨h⟩ with γ = p.
    GaloisRing,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    pub family: Family,
    pub p: u64,
    pub m: u32,
    pub s: u32,
    /// Monic defining polynomial over F_p, low degree first; `None` picks the default.
    pub h: Option<Vec<u64>>,
}

impl RingSpec {
    pub fn eisenstein(p: u64, m: u32, s: u32) -> RingSpec {
        RingSpec { family: Family::EisensteinU, p, m, s, h: None }
    }

    pub fn galois(p: u64, s: u32, m: u32) -> RingSpec {
        RingSpec { family: Family::GaloisRing, p, m, s, h: None }
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.m)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::EisensteinU if self.s == 1 => write!(f, "F{}", self.q()),
            Family::EisensteinU => write!(f, "F{}[u]/u^{}", self.q(), self.s),
            Family::GaloisRing => write!(f, "GR({},{})", self.p.pow(self.s), self.m),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    v: u32,
    ring: u32,
}

impl RingElement {
    /// Canonical index of the element inside its ring.
    pub fn raw(self) -> u32 {
        self.v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

const TABLE_LIMIT: u64 = 1024;

struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
}

struct Inner {
    spec: RingSpec,
    h: Vec<u64>,
    id: u32,
    gf: Gf,
    q: u64,
    s: u32,
    size: u64,
    /// p^s, the coordinate modulus for Galois rings.
    pk: u64,
    tables: Option<Tables>,
    teich: Vec<u32>,
    residue: Option<BaseRing>,
}

/// Arithmetic context for a base chain ring. Cheap to clone.
#[derive(Clone)]
pub struct BaseRing {
    inner: Arc<Inner>,
}

impl fmt::Debug for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BaseRing({})", self.inner.spec)
    }
}

impl PartialEq for BaseRing {
    fn eq(&self, other: &Self) -> bool {
        self.inner.spec == other.inner.spec
    }
}

impl Eq for BaseRing {}

fn ring_id(spec: &RingSpec, h: &[u64]) -> u32 {
    let mut x: u64 = 0xcbf29ce484222325;
    let fam = match spec.family {
        Family::EisensteinU => 1,
        Family::GaloisRing => 2,
    };
    for v in [fam, spec.p, spec.m as u64, spec.s as u64].iter().chain(h) {
        x ^= *v;
        x = x.wrapping_mul(0x100000001b3);
    }
    (x ^ (x >> 32)) as u32
}

impl BaseRing {
    pub fn new(spec: RingSpec) -> Result<BaseRing> {
        if !is_prime(spec.p) {
            return Err(Error::NonPrimeP(spec.p));
        }
        if spec.m == 0 || spec.s == 0 {
            return Err(Error::AssumptionViolated("m and s must be at least 1".into()));
        }
        let h = match &spec.h {
            Some(h) => {
                let h: Vec<u64> = h.iter().map(|c| c % spec.p).collect();
                if h.len() != spec.m as usize + 1 || !is_irreducible_mod_p(&h, spec.p) {
                    return Err(Error::ReducibleDefiningPolynomial);
                }
                h
            }
            None => smallest_primitive_mod_p(spec.p, spec.m),
        };
        let q = spec.q();
        let size = (q as u128).pow(spec.s);
        if size > u32::MAX as u128 {
            return Err(Error::AssumptionViolated(format!("ring of size {size} is too large")));
        }
        let gf = Gf::new(spec.p as u32, h.iter().map(|&c| c as u32).collect());
        let residue = if spec.s > 1 {
            let mut rs = spec.clone();
            rs.s = 1;
            rs.h = Some(h.clone());
            Some(BaseRing::new(rs)?)
        } else {
            None
        };
        let mut spec = spec;
        spec.h = Some(h.clone());
        let inner = Inner {
            id: ring_id(&spec, &h),
            h,
            gf,
            q,
            s: spec.s,
            size: size as u64,
            pk: spec.p.pow(spec.s),
            tables: None,
            teich: Vec::new(),
            residue,
            spec,
        };
        let mut ring = BaseRing { inner: Arc::new(inner) };
        let teich: Vec<u32> = (0..q as u128)
            .map(|i| {
                let r = ring.residue_rep(i);
                ring.teichmuller(&r).v
            })
            .collect();
        Arc::get_mut(&mut ring.inner).unwrap().teich = teich;
        if ring.inner.size <= TABLE_LIMIT {
            let n = ring.inner.size as u32;
            let mut add = vec![0u16; (n * n) as usize];
            let mut mul = vec![0u16; (n * n) as usize];
            let mut neg = vec![0u16; n as usize];
            for a in 0..n {
                neg[a as usize] = ring.neg_raw(a) as u16;
                for b in 0..n {
                    add[(a * n + b) as usize] = ring.add_raw(a, b) as u16;
                    mul[(a * n + b) as usize] = ring.mul_raw(a, b) as u16;
                }
            }
            Arc::get_mut(&mut ring.inner).unwrap().tables = Some(Tables { add, mul, neg });
        }
        Ok(ring)
    }

    pub fn eisenstein(p: u64, m: u32, s: u32) -> Result<BaseRing> {
        BaseRing::new(RingSpec::eisenstein(p, m, s))
    }

    pub fn galois(p: u64, s: u32, m: u32) -> Result<BaseRing> {
        BaseRing::new(RingSpec::galois(p, s, m))
    }

    pub fn spec(&self) -> &RingSpec {
        &self.inner.spec
    }

    pub fn family(&self) -> Family {
        self.inner.spec.family
    }

    pub fn p(&self) -> u64 {
        self.inner.spec.p
    }

    pub fn m(&self) -> u32 {
        self.inner.spec.m
    }

    pub fn q(&self) -> u64 {
        self.inner.q
    }

    pub fn s(&self) -> usize {
        self.inner.s as usize
    }

    pub fn size(&self) -> u64 {
        self.inner.size
    }

    /// Defining polynomial over F_p, low degree first.
    pub fn defining_poly(&self) -> &[u64] {
        &self.inner.h
    }

    pub fn gf(&self) -> &Gf {
        &self.inner.gf
    }

    pub fn is_f2u(&self) -> bool {
        let sp = &self.inner.spec;
        sp.family == Family::EisensteinU && sp.p == 2 && sp.m == 1 && sp.s == 2
    }

    fn mk(&self, v: u32) -> RingElement {
        RingElement { v, ring: self.inner.id }
    }

    /// Element from its canonical index.
    pub fn from_raw(&self, v: u32) -> RingElement {
        assert!((v as u64) < self.inner.size);
        self.mk(v)
    }

    pub fn contains(&self, a: &RingElement) -> bool {
        a.ring == self.inner.id
    }

    /// The residue field F_q as a ring with s = 1.
    pub fn residue_field(&self) -> BaseRing {
        self.inner.residue.clone().unwrap_or_else(|| self.clone())
    }

    // Raw digit/coordinate views.

    fn parts(&self, v: u32) -> Vec<u64> {
        let (base, len) = match self.family() {
            Family::EisensteinU => (self.inner.q, self.inner.s as usize),
            Family::GaloisRing => (self.inner.pk, self.inner.spec.m as usize),
        };
        let mut out = Vec::with_capacity(len);
        let mut v = v as u64;
        for _ in 0..len {
            out.push(v % base);
            v /= base;
        }
        out
    }

    fn unparts(&self, parts: &[u64]) -> u32 {
        let base = match self.family() {
            Family::EisensteinU => self.inner.q,
            Family::GaloisRing => self.inner.pk,
        };
        parts.iter().rev().fold(0u64, |acc, &x| acc * base + x) as u32
    }

    fn add_raw(&self, a: u32, b: u32) -> u32 {
        let (pa, pb) = (self.parts(a), self.parts(b));
        let out: Vec<u64> = match self.family() {
            Family::EisensteinU => pa
                .iter()
                .zip(&pb)
                .map(|(&x, &y)| self.inner.gf.add(x as u32, y as u32) as u64)
                .collect(),
            Family::GaloisRing => {
                pa.iter().zip(&pb).map(|(&x, &y)| (x + y) % self.inner.pk).collect()
            }
        };
        self.unparts(&out)
    }

    fn neg_raw(&self, a: u32) -> u32 {
        let pa = self.parts(a);
        let out: Vec<u64> = match self.family() {
            Family::EisensteinU => pa.iter().map(|&x| self.inner.gf.neg(x as u32) as u64).collect(),
            Family::GaloisRing => pa.iter().map(|&x| (self.inner.pk - x) % self.inner.pk).collect(),
        };
        self.unparts(&out)
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        let (pa, pb) = (self.parts(a), self.parts(b));
        match self.family() {
            Family::EisensteinU => {
                let s = self.inner.s as usize;
                let gf = &self.inner.gf;
                let mut out = vec![0u64; s];
                for i in 0..s {
                    if pa[i] == 0 {
                        continue;
                    }
                    for j in 0..s - i {
                        let t = gf.mul(pa[i] as u32, pb[j] as u32);
                        out[i + j] = gf.add(out[i + j] as u32, t) as u64;
                    }
                }
                self.unparts(&out)
            }
            Family::GaloisRing => {
                let m = self.inner.spec.m as usize;
                let pk = self.inner.pk as u128;
                let mut prod = vec![0u128; 2 * m];
                for i in 0..m {
                    for j in 0..m {
                        prod[i + j] = (prod[i + j] + pa[i] as u128 * pb[j] as u128) % pk;
                    }
                }
                let h = &self.inner.h;
                for k in (m..2 * m).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    for i in 0..m {
                        prod[k - m + i] = (prod[k - m + i] + (pk - c) * h[i] as u128) % pk;
                    }
                }
                let out: Vec<u64> = prod[..m].iter().map(|&x| x as u64).collect();
                self.unparts(&out)
            }
        }
    }

    /// Checked arithmetic rejecting foreign operands.
    pub fn arith(&self, a: RingElement, b: RingElement, op: ArithOp) -> Result<RingElement> {
        if !self.contains(&a) || !self.contains(&b) {
            return Err(Error::RingMismatch);
        }
        Ok(match op {
            ArithOp::Add => self.add(&a, &b),
            ArithOp::Sub => self.sub(&a, &b),
            ArithOp::Mul => self.mul(&a, &b),
        })
    }

    pub fn inv_unit(&self, a: &RingElement) -> Result<RingElement> {
        self.inv(a).ok_or(Error::NotAUnit)
    }

    /// γ-adic digits as residue-field elements.
    pub fn gamma_decompose(&self, a: &RingElement) -> Vec<RingElement> {
        let f = self.residue_field();
        match self.family() {
            Family::EisensteinU => self.parts(a.v).into_iter().map(|d| f.mk(d as u32)).collect(),
            Family::GaloisRing => self
                .teich_digits(a)
                .iter()
                .map(|t| f.mk(self.residue_index(t) as u32))
                .collect(),
        }
    }

    /// Inverse of `gamma_decompose`.
    pub fn gamma_recompose(&self, digits: &[RingElement]) -> RingElement {
        let lifted: Vec<RingElement> =
            digits.iter().map(|d| self.mk(self.inner.teich[d.v as usize])).collect();
        self.from_digits(&lifted)
    }

    /// The canonical digit set (Teichmüller representatives), indexed by residue class.
    pub fn teichmuller_digits(&self) -> Vec<RingElement> {
        self.inner.teich.iter().map(|&v| self.mk(v)).collect()
    }

    /// ζ: the first Teichmüller digit of order q − 1.
    pub fn zeta(&self) -> RingElement {
        let q = self.inner.q as u128;
        self.inner.teich[1..]
            .iter()
            .map(|&v| self.mk(v))
            .find(|t| self.order(t) == Some(q - 1))
            .expect("F_q^* is cyclic")
    }

    /// The class of w, a root of the defining polynomial.
    pub fn w(&self) -> RingElement {
        if self.inner.spec.m == 1 {
            return self.from_int(-(self.inner.h[0] as i64));
        }
        match self.family() {
            Family::EisensteinU => self.mk(self.inner.gf.p()),
            Family::GaloisRing => {
                let mut c = vec![0u64; self.inner.spec.m as usize];
                c[1] = 1;
                self.mk(self.unparts(&c))
            }
        }
    }

    /// The chain ring R^{(j)} = R/⟨γ^j⟩ of the same family.
    pub fn mu_ring(&self, j: usize) -> Result<BaseRing> {
        let s = self.s();
        if j == 0 || j > s {
            return Err(Error::IndexOutOfRange { index: j, max: s });
        }
        if j == s {
            return Ok(self.clone());
        }
        let mut spec = self.inner.spec.clone();
        spec.s = j as u32;
        spec.h = Some(self.inner.h.clone());
        BaseRing::new(spec)
    }

    /// μ_j(a) as an element of `target = mu_ring(j)`.
    pub fn project_into(&self, a: &RingElement, target: &BaseRing) -> RingElement {
        let j = target.s();
        let parts = self.parts(a.v);
        let out: Vec<u64> = match self.family() {
            Family::EisensteinU => parts[..j].to_vec(),
            Family::GaloisRing => parts.iter().map(|&c| c % target.inner.pk).collect(),
        };
        target.mk(target.unparts(&out))
    }

    pub fn project_mod_gamma_j(&self, a: &RingElement, j: usize) -> Result<(BaseRing, RingElement)> {
        let t = self.mu_ring(j)?;
        let img = self.project_into(a, &t);
        Ok((t, img))
    }

    /// Digit-preserving preimage of an element of a quotient ring R^{(j)}.
    pub fn lift_from(&self, a: &RingElement, small: &BaseRing) -> RingElement {
        let digits = small.gamma_decompose(a);
        let mut padded = digits;
        let f = self.residue_field();
        padded.resize(self.s(), f.zero());
        self.gamma_recompose(&padded)
    }

    /// Image of a residue-field element under the digit embedding F_q → R.
    pub fn embed_residue(&self, a: &RingElement) -> RingElement {
        self.mk(self.inner.teich[a.v as usize])
    }

    /// Residue-field image of a.
    pub fn residue(&self, a: &RingElement) -> RingElement {
        self.residue_field().mk(self.residue_index(a) as u32)
    }

    fn raw_valuation(&self, v: u32) -> usize {
        let parts = self.parts(v);
        match self.family() {
            Family::EisensteinU => parts.iter().position(|&d| d != 0).unwrap_or(self.s()),
            Family::GaloisRing => {
                let p = self.inner.spec.p;
                parts
                    .iter()
                    .map(|&c| {
                        if c == 0 {
                            return self.s();
                        }
                        let mut c = c;
                        let mut k = 0;
                        while c % p == 0 {
                            c /= p;
                            k += 1;
                        }
                        k
                    })
                    .min()
                    .unwrap_or(self.s())
            }
        }
    }
}

impl CommRing for BaseRing {
    type Elem = RingElement;

    fn zero(&self) -> RingElement {
        self.mk(0)
    }

    fn one(&self) -> RingElement {
        self.mk(1)
    }

    fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        debug_assert!(self.contains(a) && self.contains(b));
        match &self.inner.tables {
            Some(t) => self.mk(t.add[(a.v as u64 * self.inner.size + b.v as u64) as usize] as u32),
            None => self.mk(self.add_raw(a.v, b.v)),
        }
    }

    fn neg(&self, a: &RingElement) -> RingElement {
        match &self.inner.tables {
            Some(t) => self.mk(t.neg[a.v as usize] as u32),
            None => self.mk(self.neg_raw(a.v)),
        }
    }

    fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        debug_assert!(self.contains(a) && self.contains(b));
        match &self.inner.tables {
            Some(t) => self.mk(t.mul[(a.v as u64 * self.inner.size + b.v as u64) as usize] as u32),
            None => self.mk(self.mul_raw(a.v, b.v)),
        }
    }

    fn is_zero(&self, a: &RingElement) -> bool {
        a.v == 0
    }

    fn cardinality(&self) -> u128 {
        self.inner.size as u128
    }

    fn element(&self, idx: u128) -> RingElement {
        self.from_raw(idx as u32)
    }

    fn index_of(&self, a: &RingElement) -> u128 {
        a.v as u128
    }

    fn from_int(&self, k: i64) -> RingElement {
        match self.family() {
            Family::EisensteinU => self.mk(self.inner.gf.from_int(k)),
            Family::GaloisRing => {
                let mut c = vec![0u64; self.inner.spec.m as usize];
                c[0] = k.rem_euclid(self.inner.pk as i64) as u64;
                self.mk(self.unparts(&c))
            }
        }
    }

    fn format(&self, a: &RingElement) -> String {
        let parts = self.parts(a.v);
        let mut terms = Vec::new();
        match self.family() {
            Family::EisensteinU => {
                let gf = &self.inner.gf;
                for (i, &d) in parts.iter().enumerate() {
                    if d == 0 {
                        continue;
                    }
                    let c = gf.format(d as u32);
                    let c = if c.contains('+') { format!("({c})") } else { c };
                    let var = if i == 1 { "u".to_string() } else { format!("u^{i}") };
                    terms.push(match (i, d) {
                        (0, _) => c,
                        (_, 1) => var,
                        _ => format!("{c}*{var}"),
                    });
                }
            }
            Family::GaloisRing => {
                for (i, &c) in parts.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let var = if i == 1 { "w".to_string() } else { format!("w^{i}") };
                    terms.push(match (i, c) {
                        (0, _) => c.to_string(),
                        (_, 1) => var,
                        _ => format!("{c}*{var}"),
                    });
                }
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

impl ChainRing for BaseRing {
    fn nilpotency(&self) -> usize {
        self.s()
    }

    fn residue_size(&self) -> u128 {
        self.inner.q as u128
    }

    fn characteristic_prime(&self) -> u64 {
        self.inner.spec.p
    }

    fn gamma(&self) -> RingElement {
        if self.s() == 1 {
            return self.zero();
        }
        match self.family() {
            Family::EisensteinU => self.mk(self.inner.q as u32),
            Family::GaloisRing => self.from_int(self.inner.spec.p as i64),
        }
    }

    fn valuation(&self, a: &RingElement) -> usize {
        self.raw_valuation(a.v)
    }

    fn div_gamma(&self, a: &RingElement) -> RingElement {
        let parts = self.parts(a.v);
        let out: Vec<u64> = match self.family() {
            Family::EisensteinU => {
                let mut out = parts[1..].to_vec();
                out.push(0);
                out
            }
            Family::GaloisRing => parts.iter().map(|&c| c / self.inner.spec.p).collect(),
        };
        self.mk(self.unparts(&out))
    }

    fn residue_rep(&self, idx: u128) -> RingElement {
        match self.family() {
            Family::EisensteinU => self.mk(idx as u32),
            Family::GaloisRing => {
                let c: Vec<u64> = self.inner.gf.coeffs(idx as u32).into_iter().map(u64::from).collect();
                self.mk(self.unparts(&c))
            }
        }
    }

    fn residue_index(&self, a: &RingElement) -> u128 {
        let parts = self.parts(a.v);
        match self.family() {
            Family::EisensteinU => parts[0] as u128,
            Family::GaloisRing => {
                let p = self.inner.spec.p;
                let c: Vec<u32> = parts.iter().map(|&x| (x % p) as u32).collect();
                self.inner.gf.from_coeffs(&c) as u128
            }
        }
    }

    fn teichmuller(&self, a: &RingElement) -> RingElement {
        if !self.inner.teich.is_empty() {
            return self.mk(self.inner.teich[self.residue_index(a) as usize]);
        }
        if !self.is_unit(a) {
            return self.zero();
        }
        let q = self.residue_size();
        self.pow(a, q.pow(self.nilpotency() as u32 - 1))
    }

    fn inv(&self, a: &RingElement) -> Option<RingElement> {
        if !self.is_unit(a) {
            return None;
        }
        // Newton iteration from the residue inverse: b ← b(2 − ab).
        let f = self.residue_field();
        let r0 = f.inner.gf.inv(self.residue_index(a) as u32)?;
        let mut b = self.residue_rep(r0 as u128);
        let two = self.from_int(2);
        for _ in 0..=self.s() {
            b = self.mul(&b, &self.sub(&two, &self.mul(a, &b)));
        }
        debug_assert!(self.is_one(&self.mul(a, &b)));
        Some(b)
    }
}
