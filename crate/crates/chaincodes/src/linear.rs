//! Linear codes over a chain ring: standard form, membership, socle and enumeration.

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::ChainRing;

/// A submodule of S^N kept in γ-adic standard form: row i has the entry γ^{v_i} at
/// column `pivots[i]`, every later row vanishes there, and all its entries lie in ⟨γ^{v_i}⟩.
#[derive(Clone, Debug)]
pub struct LinearCode<S: ChainRing> {
    ring: S,
    length: usize,
    rows: Vec<Vec<S::Elem>>,
    pivots: Vec<usize>,
    vals: Vec<usize>,
}

impl<S: ChainRing> LinearCode<S> {
    pub fn zero(ring: &S, length: usize) -> LinearCode<S> {
        LinearCode { ring: ring.clone(), length, rows: vec![], pivots: vec![], vals: vec![] }
    }

    pub fn from_generators(ring: &S, length: usize, gens: &[Vec<S::Elem>]) -> Result<LinearCode<S>> {
        if let Some(g) = gens.iter().find(|g| g.len() != length) {
            return Err(Error::DimensionMismatch(format!("vector of length {} in a code of length {length}", g.len())));
        }
        let r = ring;
        let s = r.nilpotency();
        let mut pool: Vec<Vec<S::Elem>> = gens.to_vec();
        let mut used = vec![false; length];
        let mut out = LinearCode::zero(ring, length);
        loop {
            let mut best: Option<(usize, usize, usize)> = None;
            for (ri, row) in pool.iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    if used[c] {
                        continue;
                    }
                    let v = r.valuation(e);
                    if v < s && best.is_none_or(|(bv, _, _)| v < bv) {
                        best = Some((v, ri, c));
                    }
                }
                if matches!(best, Some((0, _, _))) {
                    break;
                }
            }
            let Some((v, ri, c)) = best else { break };
            let mut row = pool.swap_remove(ri);
            let unit = r.div_gamma_pow(&row[c], v);
            let inv = r.inv(&unit).expect("pivot unit");
            for e in row.iter_mut() {
                *e = r.mul(e, &inv);
            }
            row[c] = r.gamma_pow(v);
            for other in pool.iter_mut() {
                if r.is_zero(&other[c]) {
                    continue;
                }
                let t = r.div_gamma_pow(&other[c], v);
                for (o, x) in other.iter_mut().zip(&row) {
                    *o = r.sub(o, &r.mul(&t, x));
                }
            }
            pool.retain(|w| w.iter().any(|e| !r.is_zero(e)));
            used[c] = true;
            out.rows.push(row);
            out.pivots.push(c);
            out.vals.push(v);
        }
        Ok(out)
    }

    pub fn ring(&self) -> &S {
        &self.ring
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn rows(&self) -> &[Vec<S::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn valuations(&self) -> &[usize] {
        &self.vals
    }

    /// Number of standard-form rows (the rank of the socle over the residue field).
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_free(&self) -> bool {
        self.vals.iter().all(|&v| v == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// log_Q |C|.
    pub fn log_size(&self) -> usize {
        let s = self.ring.nilpotency();
        self.vals.iter().map(|v| s - v).sum()
    }

    pub fn cardinality(&self) -> Option<u128> {
        self.ring.residue_size().checked_pow(self.log_size() as u32)
    }

    /// Message m with Σ m_i·row_i = w, each m_i in the transversal of S/γ^{s−v_i}.
    pub fn coordinates(&self, w: &[S::Elem]) -> Option<Vec<S::Elem>> {
        if w.len() != self.length {
            return None;
        }
        let r = &self.ring;
        let s = r.nilpotency();
        let mut cur = w.to_vec();
        let mut msg = Vec::with_capacity(self.rows.len());
        for ((row, &c), &v) in self.rows.iter().zip(&self.pivots).zip(&self.vals) {
            if r.valuation(&cur[c]) < v {
                return None;
            }
            let t = r.div_gamma_pow(&cur[c], v);
            let digits = r.teich_digits(&t);
            let t = r.from_digits(&digits[..s - v]);
            for (o, x) in cur.iter_mut().zip(row) {
                *o = r.sub(o, &r.mul(&t, x));
            }
            msg.push(t);
        }
        cur.iter().all(|e| r.is_zero(e)).then_some(msg)
    }

    pub fn contains(&self, w: &[S::Elem]) -> bool {
        self.coordinates(w).is_some()
    }

    pub fn contains_code(&self, other: &LinearCode<S>) -> bool {
        other.rows.iter().all(|w| self.contains(w))
    }

    pub fn same_code(&self, other: &LinearCode<S>) -> bool {
        self.length == other.length && self.log_size() == other.log_size() && self.contains_code(other)
    }

    /// Enumeration of the whole code.
    pub fn span(&self) -> Span<S> {
        let s = self.ring.nilpotency();
        let alph = self.vals.iter().map(|&v| self.ring.transversal(s - v)).collect();
        Span::new(&self.ring, self.length, self.rows.clone(), alph)
    }

    /// The socle {c : γc = 0} as a residue-field span of γ^{s−1−v_i}·row_i.
    pub fn socle(&self) -> Span<S> {
        let r = &self.ring;
        let s = r.nilpotency();
        let rows = self
            .rows
            .iter()
            .zip(&self.vals)
            .map(|(row, &v)| {
                let g = r.gamma_pow(s - 1 - v);
                row.iter().map(|e| r.mul(&g, e)).collect()
            })
            .collect();
        let reps = r.transversal(1);
        Span::new(r, self.length, rows, vec![reps; self.rows.len()])
    }
}

/// Coefficients λ with Σ λ_i·gens_i = w, if any.
pub fn solve_combination<S: ChainRing>(ring: &S, gens: &[Vec<S::Elem>], w: &[S::Elem]) -> Result<Option<Vec<S::Elem>>> {
    let r = ring;
    let len = w.len();
    if let Some(g) = gens.iter().find(|g| g.len() != len) {
        return Err(Error::DimensionMismatch(format!("vector of length {} against a target of length {len}", g.len())));
    }
    let k = gens.len();
    let s = r.nilpotency();
    let mut pool: Vec<Vec<S::Elem>> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut row = g.clone();
            row.extend((0..k).map(|j| if i == j { r.one() } else { r.zero() }));
            row
        })
        .collect();
    let mut used = vec![false; len];
    let mut reduced: Vec<(Vec<S::Elem>, usize, usize)> = Vec::new();
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for (ri, row) in pool.iter().enumerate() {
            for c in (0..len).filter(|&c| !used[c]) {
                let v = r.valuation(&row[c]);
                if v < s && best.is_none_or(|(bv, _, _)| v < bv) {
                    best = Some((v, ri, c));
                }
            }
        }
        let Some((v, ri, c)) = best else { break };
        let row = pool.swap_remove(ri);
        let unit = r.div_gamma_pow(&row[c], v);
        let inv = r.inv(&unit).expect("pivot unit");
        let row: Vec<S::Elem> = row.iter().map(|e| r.mul(e, &inv)).collect();
        for other in pool.iter_mut() {
            if r.is_zero(&other[c]) {
                continue;
            }
            let t = r.div_gamma_pow(&other[c], v);
            for (o, x) in other.iter_mut().zip(&row) {
                *o = r.sub(o, &r.mul(&t, x));
            }
        }
        pool.retain(|row| row[..len].iter().any(|e| !r.is_zero(e)));
        used[c] = true;
        reduced.push((row, c, v));
    }
    let mut cur: Vec<S::Elem> = w.to_vec();
    cur.extend((0..k).map(|_| r.zero()));
    for (row, c, v) in &reduced {
        if r.valuation(&cur[*c]) < *v {
            return Ok(None);
        }
        let t = r.div_gamma_pow(&cur[*c], *v);
        for (o, x) in cur.iter_mut().zip(row) {
            *o = r.sub(o, &r.mul(&t, x));
        }
    }
    if cur[..len].iter().any(|e| !r.is_zero(e)) {
        return Ok(None);
    }
    Ok(Some(cur[len..].iter().map(|e| r.neg(e)).collect()))
}

/// Codewords Σ m_i·row_i with m_i drawn from per-row alphabets (each containing zero first).
#[derive(Clone, Debug)]
pub struct Span<S: ChainRing> {
    ring: S,
    length: usize,
    rows: Vec<Vec<S::Elem>>,
    alph: Vec<Vec<S::Elem>>,
    // deltas[i][k] = (alph[i][k+1 mod len] − alph[i][k])·row_i
    deltas: Vec<Vec<Vec<S::Elem>>>,
}

impl<S: ChainRing> Span<S> {
    pub fn new(ring: &S, length: usize, rows: Vec<Vec<S::Elem>>, alph: Vec<Vec<S::Elem>>) -> Span<S> {
        let r = ring;
        let deltas = rows
            .iter()
            .zip(&alph)
            .map(|(row, a)| {
                (0..a.len())
                    .map(|k| {
                        let d = r.sub(&a[(k + 1) % a.len()], &a[k]);
                        row.iter().map(|x| r.mul(&d, x)).collect()
                    })
                    .collect()
            })
            .collect();
        Span { ring: ring.clone(), length, rows, alph, deltas }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Number of messages; None on overflow.
    pub fn size(&self) -> Option<u128> {
        self.alph.iter().try_fold(1u128, |acc, a| acc.checked_mul(a.len() as u128))
    }

    fn digits_of(&self, mut idx: u128) -> Vec<usize> {
        self.alph
            .iter()
            .map(|a| {
                let d = (idx % a.len() as u128) as usize;
                idx /= a.len() as u128;
                d
            })
            .collect()
    }

    fn word_of(&self, digits: &[usize]) -> Vec<S::Elem> {
        let r = &self.ring;
        let mut w = vec![r.zero(); self.length];
        for ((row, a), &d) in self.rows.iter().zip(&self.alph).zip(digits) {
            if r.is_zero(&a[d]) {
                continue;
            }
            for (o, x) in w.iter_mut().zip(row) {
                *o = r.add(o, &r.mul(&a[d], x));
            }
        }
        w
    }

    pub fn codeword(&self, idx: u128) -> Vec<S::Elem> {
        self.word_of(&self.digits_of(idx))
    }

    pub fn random_codeword<G: Rng>(&self, rng: &mut G) -> Vec<S::Elem> {
        let digits: Vec<usize> = self.alph.iter().map(|a| rng.gen_range(0..a.len())).collect();
        self.word_of(&digits)
    }

    /// Visit messages `start..end` in order.
    pub fn for_each_in(&self, start: u128, end: u128, mut f: impl FnMut(&[S::Elem])) {
        if start >= end {
            return;
        }
        let r = &self.ring;
        let mut digits = self.digits_of(start);
        let mut w = self.word_of(&digits);
        let mut idx = start;
        loop {
            f(&w);
            idx += 1;
            if idx >= end {
                break;
            }
            for i in 0..digits.len() {
                let delta = &self.deltas[i][digits[i]];
                for (o, x) in w.iter_mut().zip(delta) {
                    *o = r.add(o, x);
                }
                digits[i] += 1;
                if digits[i] < self.alph[i].len() {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    pub fn for_each(&self, f: impl FnMut(&[S::Elem])) {
        self.for_each_in(0, self.size().expect("span too large"), f)
    }

    pub fn collect(&self) -> Vec<Vec<S::Elem>> {
        let mut out = Vec::new();
        self.for_each(|w| out.push(w.to_vec()));
        out
    }

    /// Minimum of `weight` over nonzero codewords, scanning in parallel chunks.
    pub fn min_over_nonzero(&self, weight: impl Fn(&[S::Elem]) -> usize + Sync) -> Option<usize> {
        let total = self.size().expect("span too large");
        let chunks = (rayon::current_num_threads() as u128 * 8).clamp(1, total.max(1));
        let step = total.div_ceil(chunks);
        let r = &self.ring;
        (0..chunks)
            .into_par_iter()
            .filter_map(|k| {
                let start = k * step;
                let end = (start + step).min(total);
                let mut best: Option<usize> = None;
                self.for_each_in(start, end, |w| {
                    if w.iter().any(|e| !r.is_zero(e)) {
                        let wt = weight(w);
                        best = Some(best.map_or(wt, |b| b.min(wt)));
                    }
                });
                best
            })
            .min()
    }
}

pub fn hamming_weight<S: ChainRing>(ring: &S, w: &[S::Elem]) -> usize {
    w.iter().filter(|e| !ring.is_zero(e)).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainring::BaseRing;
    use crate::ring::CommRing;

    #[test]
    fn z4_standard_form() {
        let r = BaseRing::galois(2, 2, 1).unwrap();
        let e = |k| r.from_int(k);
        let gens = vec![vec![e(2), e(2), e(0)], vec![e(0), e(2), e(2)], vec![e(2), e(0), e(2)]];
        let c = LinearCode::from_generators(&r, 3, &gens).unwrap();
        assert_eq!(c.valuations(), &[1, 1]);
        assert_eq!(c.cardinality(), Some(4));
        assert!(c.contains(&[e(0), e(0), e(0)]));
        assert!(!c.contains(&[e(2), e(0), e(0)]));
        assert_eq!(c.span().collect().len(), 4);
        assert_eq!(c.span().min_over_nonzero(|w| hamming_weight(&r, w)), Some(2));
    }

    #[test]
    fn socle_of_free_code() {
        let r = BaseRing::eisenstein(2, 1, 2).unwrap();
        let one = r.one();
        let c = LinearCode::from_generators(&r, 2, &[vec![one, one]]).unwrap();
        assert!(c.is_free());
        assert_eq!(c.socle().size(), Some(2));
        assert_eq!(c.span().size(), Some(4));
    }
}
