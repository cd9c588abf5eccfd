//! Ring abstractions shared by base rings, extensions and towers.

use std::fmt::Debug;
use std::hash::Hash;

use crate::arith::prime_factors;

pub trait CommRing: Clone + Debug + Send + Sync {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Number of elements.
    fn cardinality(&self) -> u128;

    /// Enumeration by index in `0..cardinality()`; `element(0)` is zero.
    fn element(&self, idx: u128) -> Self::Elem;

    fn index_of(&self, a: &Self::Elem) -> u128;

    fn format(&self, a: &Self::Elem) -> String;

    fn from_int(&self, k: i64) -> Self::Elem {
        let mut acc = self.zero();
        let mut base = self.one();
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            e >>= 1;
        }
        if k < 0 {
            self.neg(&acc)
        } else {
            acc
        }
    }

    fn pow(&self, a: &Self::Elem, mut e: u128) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// A finite chain ring: local, principal maximal ideal ⟨γ⟩, γ^s = 0.
pub trait ChainRing: CommRing {
    fn nilpotency(&self) -> usize;

    /// Size Q of the residue field.
    fn residue_size(&self) -> u128;

    fn characteristic_prime(&self) -> u64;

    fn gamma(&self) -> Self::Elem;

    /// Largest k with a ∈ ⟨γ^k⟩; `nilpotency()` for zero.
    fn valuation(&self, a: &Self::Elem) -> usize;

    /// Canonical b with γb = a. Requires valuation(a) ≥ 1.
    fn div_gamma(&self, a: &Self::Elem) -> Self::Elem;

    /// Representative of residue class `idx` (`0..residue_size()`); class 0 is zero, class 1 is one.
    fn residue_rep(&self, idx: u128) -> Self::Elem;

    fn residue_index(&self, a: &Self::Elem) -> u128;

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.valuation(a) == 0
    }

    fn unit_group_order(&self) -> u128 {
        let q = self.residue_size();
        (q - 1) * q.pow(self.nilpotency() as u32 - 1)
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if !self.is_unit(a) {
            return None;
        }
        // a^{Q−2} inverts the residue; Newton steps b ← b(2 − ab) lift it.
        let mut b = self.pow(a, self.residue_size() - 2);
        let two = self.from_int(2);
        for _ in 0..self.nilpotency() {
            b = self.mul(&b, &self.sub(&two, &self.mul(a, &b)));
        }
        Some(b)
    }

    /// Teichmüller representative of the residue class of `a`.
    fn teichmuller(&self, a: &Self::Elem) -> Self::Elem {
        if !self.is_unit(a) {
            return self.zero();
        }
        let q = self.residue_size();
        self.pow(a, q.pow(self.nilpotency() as u32 - 1))
    }

    /// γ-adic expansion with Teichmüller digits.
    fn teich_digits(&self, a: &Self::Elem) -> Vec<Self::Elem> {
        let s = self.nilpotency();
        let mut out = Vec::with_capacity(s);
        let mut cur = a.clone();
        for i in 0..s {
            let t = self.teichmuller(&cur);
            out.push(t.clone());
            if i + 1 < s {
                cur = self.div_gamma(&self.sub(&cur, &t));
            }
        }
        out
    }

    fn from_digits(&self, digits: &[Self::Elem]) -> Self::Elem {
        let g = self.gamma();
        let mut acc = self.zero();
        for d in digits.iter().rev() {
            acc = self.add(&self.mul(&acc, &g), d);
        }
        acc
    }

    fn gamma_pow(&self, k: usize) -> Self::Elem {
        self.pow(&self.gamma(), k as u128)
    }

    fn div_gamma_pow(&self, a: &Self::Elem, k: usize) -> Self::Elem {
        let mut cur = a.clone();
        for _ in 0..k {
            cur = self.div_gamma(&cur);
        }
        cur
    }

    /// Multiplicative order of a unit.
    fn order(&self, a: &Self::Elem) -> Option<u128> {
        if !self.is_unit(a) {
            return None;
        }
        let mut ord = self.unit_group_order();
        for r in prime_factors(ord) {
            while ord.is_multiple_of(r) && self.is_one(&self.pow(a, ord / r)) {
                ord /= r;
            }
        }
        Some(ord)
    }

    /// Transversal of R/γ^k: all Σ_{i<k} r_i γ^i with residue representatives r_i.
    fn transversal(&self, k: usize) -> Vec<Self::Elem> {
        let q = self.residue_size();
        let reps: Vec<_> = (0..q).map(|i| self.residue_rep(i)).collect();
        let mut out = vec![self.zero()];
        let mut gp = self.one();
        for _ in 0..k {
            let mut next = Vec::with_capacity(out.len() * reps.len());
            for r in &reps {
                let term = self.mul(r, &gp);
                for x in &out {
                    next.push(self.add(x, &term));
                }
            }
            out = next;
            gp = self.mul(&gp, &self.gamma());
        }
        out
    }
}
