//! Quasi-cyclic codes: tuple and extension views, product bounds, the field
//! construction, canonical decomposition and the layered bound.

use std::sync::OnceLock;

use crate::chainring::{BaseRing, RingElement};
use crate::cyclic::{longest_zero_run, shift_rows, CyclicCode};
use crate::distance::min_distance;
use crate::error::{Error, Result};
use crate::extension::{Embedding, ExtElem, ExtRing};
use crate::factor::{factor_xn_minus_1, Factorization};
use crate::linear::LinearCode;
use crate::poly::{Poly, PolyOps, ResidueOps};
use crate::ring::{ChainRing, CommRing};

/// An R_n-submodule of R_n^ℓ given by generator tuples. Codewords are laid out
/// as (c_{0,0}, …, c_{0,ℓ−1}, c_{1,0}, …, c_{n−1,ℓ−1}).
#[derive(Clone, Debug)]
pub struct QcCode<R: ChainRing> {
    ring: R,
    n: usize,
    ell: usize,
    gens: Vec<Vec<Poly<R::Elem>>>,
}

impl<R: ChainRing> QcCode<R> {
    pub fn new(ring: &R, n: usize, ell: usize, gens: Vec<Vec<Poly<R::Elem>>>) -> Result<QcCode<R>> {
        for g in &gens {
            if g.len() != ell {
                return Err(Error::DimensionMismatch(format!("tuple of length {}, index {ell}", g.len())));
            }
            if g.iter().any(|p| p.len() > n) {
                return Err(Error::DimensionMismatch(format!("component of degree ≥ {n}")));
            }
        }
        Ok(QcCode { ring: ring.clone(), n, ell, gens })
    }

    /// Generators A(x) ∈ ℛ[x]/⟨x^n − 1⟩ for an extension ℛ of degree ℓ.
    pub fn from_extension(ext: &ExtRing<R>, n: usize, gens: &[Poly<ExtElem<R::Elem>>]) -> Result<QcCode<R>> {
        let tuples = gens.iter().map(|a| ext.unpack(a)).collect();
        QcCode::new(ext.base(), n, ext.degree(), tuples)
    }

    pub fn to_extension(&self, ext: &ExtRing<R>) -> Result<Vec<Poly<ExtElem<R::Elem>>>> {
        self.gens.iter().map(|g| ext.pack(g)).collect()
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn generators(&self) -> &[Vec<Poly<R::Elem>>] {
        &self.gens
    }

    pub fn vector_of(&self, tuple: &[Poly<R::Elem>]) -> Vec<R::Elem> {
        let r = &self.ring;
        let mut out = vec![r.zero(); self.n * self.ell];
        for (j, p) in tuple.iter().enumerate() {
            let p = r.preduce_cyclic(p, self.n);
            for (i, c) in p.coeffs().iter().enumerate() {
                out[i * self.ell + j] = c.clone();
            }
        }
        out
    }

    pub fn tuple_of(&self, w: &[R::Elem]) -> Vec<Poly<R::Elem>> {
        let r = &self.ring;
        (0..self.ell).map(|j| r.poly((0..self.n).map(|i| w[i * self.ell + j].clone()).collect())).collect()
    }

    /// x^k·g for every generator g and k < n.
    pub fn linear_code(&self) -> LinearCode<R> {
        let r = &self.ring;
        let mut rows = Vec::with_capacity(self.gens.len() * self.n);
        for g in &self.gens {
            for k in 0..self.n {
                let shifted: Vec<_> = g.iter().map(|p| r.preduce_cyclic(&r.pshift(p, k), self.n)).collect();
                rows.push(self.vector_of(&shifted));
            }
        }
        LinearCode::from_generators(r, self.n * self.ell, &rows).expect("uniform length")
    }
}

/// T^ℓ: the shift by one block.
pub fn block_shift<E: Clone>(w: &[E], ell: usize) -> Vec<E> {
    let n = w.len();
    (0..n).map(|i| w[(i + n - ell) % n].clone()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductBound {
    pub d_cyclic: usize,
    pub d_coeff: usize,
    pub bound: usize,
}

/// d(C̃)·d(B) for the cyclic code C̃ over S generated by `gens` and the code B over R
/// spanned by the coefficient vectors.
pub fn product_bound<S: ChainRing, R: ChainRing>(
    big: &S,
    n: usize,
    gens: &[Poly<S::Elem>],
    base: &R,
    ell: usize,
    coeff_vectors: &[Vec<R::Elem>],
    budget: u128,
) -> Result<ProductBound> {
    let mut rows = Vec::new();
    for g in gens {
        rows.extend(shift_rows(big, &big.preduce_cyclic(g, n), n, n));
    }
    let ct = LinearCode::from_generators(big, n, &rows)?;
    let b = LinearCode::from_generators(base, ell, coeff_vectors)?;
    let d_cyclic = min_distance(&ct, budget)?;
    let d_coeff = min_distance(&b, budget)?;
    Ok(ProductBound { d_cyclic, d_coeff, bound: d_cyclic * d_coeff })
}

/// d(C̃)·d(B) with C̃ over an extension ℛ of degree ℓ.
pub fn module_bound<R: ChainRing>(code: &QcCode<R>, ext: &ExtRing<R>, budget: u128) -> Result<ProductBound> {
    if ext.degree() != code.ell() {
        return Err(Error::DegreeMismatch { expected: code.ell(), got: ext.degree() });
    }
    let packed = code.to_extension(ext)?;
    let vecs: Vec<Vec<R::Elem>> =
        packed.iter().flat_map(|a| a.coeffs().iter().map(|c| c.coords().to_vec())).collect();
    product_bound(ext, code.n(), &packed, code.ring(), code.ell(), &vecs, budget)
}

/// Which multiples of v span the field construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowMode {
    /// v, xv, …, x^{n−deg v−1}v.
    Basis,
    /// v, xv, …, x^{n−1}v.
    AllShifts,
}

#[derive(Clone, Debug)]
pub struct FieldConstruction {
    pub field: BaseRing,
    pub n: usize,
    pub ell: usize,
    pub matrix: Vec<Vec<RingElement>>,
    pub code: LinearCode<BaseRing>,
    pub product: ProductBound,
    /// δ·ε when C̃ is free and B is cyclic.
    pub delta_epsilon: Option<(usize, usize)>,
}

impl FieldConstruction {
    pub fn bound(&self) -> usize {
        let de = self.delta_epsilon.map_or(0, |(d, e)| d * e);
        self.product.bound.max(de)
    }
}

/// F_q-span of multiples of v ∈ (F_q[u]/u^ℓ)[x]/⟨x^n − 1⟩, each coefficient read in the
/// basis {1, u, …, u^{ℓ−1}}.
pub fn field_construction(ring: &BaseRing, v: &Poly<RingElement>, n: usize, mode: RowMode, budget: u128) -> Result<FieldConstruction> {
    if ring.family() != crate::chainring::Family::EisensteinU {
        return Err(Error::UnsupportedRing);
    }
    let field = ring.residue_field();
    let ell = ring.s();
    let v = ring.preduce_cyclic(v, n);
    let coords = |c: &RingElement| ring.gamma_decompose(c);
    let word = |p: &Poly<RingElement>| -> Vec<RingElement> {
        let mut out = Vec::with_capacity(n * ell);
        for k in 0..n {
            out.extend(coords(&ring.coeff(p, k)));
        }
        out
    };
    let count = match (mode, v.degree()) {
        (_, None) => 0,
        (RowMode::Basis, Some(d)) => n - d,
        (RowMode::AllShifts, _) => n,
    };
    let matrix: Vec<Vec<RingElement>> =
        (0..count).map(|k| word(&ring.preduce_cyclic(&ring.pshift(&v, k), n))).collect();
    let code = LinearCode::from_generators(&field, n * ell, &matrix)?;
    let coeff_vectors: Vec<Vec<RingElement>> = v.coeffs().iter().map(coords).collect();
    let product = product_bound(ring, n, std::slice::from_ref(&v), &field, ell, &coeff_vectors, budget)?;
    let delta_epsilon = bch_product(ring, &field, &v, n, ell, &coeff_vectors)?;
    Ok(FieldConstruction { field, n, ell, matrix, code, product, delta_epsilon })
}

fn bch_product(
    ring: &BaseRing,
    field: &BaseRing,
    v: &Poly<RingElement>,
    n: usize,
    ell: usize,
    coeff_vectors: &[Vec<RingElement>],
) -> Result<Option<(usize, usize)>> {
    let q = ring.q();
    if !ring.is_monic(v) || crate::arith::gcd(ell as u64, q) != 1 {
        return Ok(None);
    }
    let Ok(free) = CyclicCode::free(ring, n, v) else { return Ok(None) };
    let fac = factor_xn_minus_1(ring, n)?;
    let g = free.generator_poly()?;
    let delta = longest_zero_run(fac.splitting_ring(), fac.xi(), n, &g)? + 1;
    // B is cyclic iff its span is shift invariant; its generator is gcd(b_i(y), y^ℓ − 1).
    let b = LinearCode::from_generators(field, ell, coeff_vectors)?;
    if !b.rows().iter().all(|w| b.contains(&block_shift(w, 1))) {
        return Ok(None);
    }
    let mut gb = field.xn_minus_1(ell);
    for w in coeff_vectors {
        gb = field.res_gcd(&gb, &field.poly(w.clone()));
    }
    let ffac = factor_xn_minus_1(field, ell)?;
    let eps = if gb.degree() == Some(0) {
        1
    } else {
        longest_zero_run(ffac.splitting_ring(), ffac.xi(), ell, &gb)? + 1
    };
    Ok(Some((delta, eps)))
}

#[derive(Clone, Debug)]
pub struct Constituent {
    pub index: usize,
    pub ext: ExtRing<BaseRing>,
    pub representative: u64,
    pub code: LinearCode<ExtRing<BaseRing>>,
}

#[derive(Clone, Debug)]
pub struct CanonicalDecomposition {
    fac: Factorization,
    n: usize,
    ell: usize,
    constituents: Vec<Constituent>,
    lifts: OnceLock<Vec<(Embedding<BaseRing>, ExtElem<RingElement>)>>,
}

pub fn canonical_decompose(code: &QcCode<BaseRing>, fac: &Factorization) -> Result<CanonicalDecomposition> {
    if fac.n() != code.n() || fac.ring() != code.ring() {
        return Err(Error::RingMismatch);
    }
    let r = code.ring();
    let mut constituents = Vec::with_capacity(fac.len());
    for (i, f) in fac.factors().iter().enumerate() {
        let ext = ExtRing::with_var(r.clone(), f.clone(), "x")?;
        let gens: Vec<Vec<ExtElem<RingElement>>> =
            code.generators().iter().map(|g| g.iter().map(|p| ext.reduce(p)).collect()).collect();
        let c = LinearCode::from_generators(&ext, code.ell(), &gens)?;
        constituents.push(Constituent { index: i, ext, representative: fac.cosets()[i].representative(), code: c });
    }
    Ok(CanonicalDecomposition { fac: fac.clone(), n: code.n(), ell: code.ell(), constituents, lifts: OnceLock::new() })
}

impl CanonicalDecomposition {
    pub fn factorization(&self) -> &Factorization {
        &self.fac
    }

    pub fn constituents(&self) -> &[Constituent] {
        &self.constituents
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// log_q |C| = Σ_i deg f_i · log_{q^{deg f_i}} |C_i|.
    pub fn log_size(&self) -> usize {
        self.constituents.iter().map(|c| c.ext.degree() * c.code.log_size()).sum()
    }

    /// Per-constituent vectors c̃_i = n^{−1}·(c mod f_i) of a codeword.
    pub fn split(&self, code: &QcCode<BaseRing>, word: &[RingElement]) -> Vec<Vec<ExtElem<RingElement>>> {
        let tuple = code.tuple_of(word);
        self.constituents
            .iter()
            .map(|c| {
                let ninv = c.ext.inv(&c.ext.from_int(self.n as i64)).expect("n is a unit");
                tuple.iter().map(|p| c.ext.mul(&ninv, &c.ext.reduce(p))).collect()
            })
            .collect()
    }

    /// c_j = Σ_i Tr_{ℛ_i/R}(c̃_i x^{−j}).
    pub fn reconstruct(&self, parts: &[Vec<ExtElem<RingElement>>]) -> Result<Vec<RingElement>> {
        if parts.len() != self.constituents.len() || parts.iter().any(|p| p.len() != self.ell) {
            return Err(Error::DimensionMismatch("constituent selection".into()));
        }
        let r = self.fac.ring();
        let mut out = vec![r.zero(); self.n * self.ell];
        for (c, part) in self.constituents.iter().zip(parts) {
            let xinv = c.ext.inv(&c.ext.gen()).expect("x is a unit");
            let mut w = c.ext.one();
            for j in 0..self.n {
                for (k, a) in part.iter().enumerate() {
                    let t = c.ext.trace(&c.ext.mul(a, &w));
                    out[j * self.ell + k] = r.add(&out[j * self.ell + k], &t);
                }
                w = c.ext.mul(&w, &xinv);
            }
        }
        Ok(out)
    }

    /// The embedding ℛ_i → ℛ sending x to ξ^{u_i}.
    pub fn embedding(&self, i: usize) -> Result<Embedding<BaseRing>> {
        let big = self.fac.splitting_ring();
        let c = &self.constituents[i];
        let root = big.pow(self.fac.xi(), c.representative as u128);
        big.embedding_at(&c.ext, &root)
    }

    /// First ω (Teichmüller elements first) with Tr_{ℛ/ℛ_i}(ω) = 1.
    pub fn trace_unity(&self, i: usize) -> Result<ExtElem<RingElement>> {
        let big = self.fac.splitting_ring();
        let tau = self.constituents[i].ext.degree();
        let one = big.one();
        let hit = |w: &ExtElem<RingElement>| big.trace_to(w, tau).map(|t| t == one).unwrap_or(false);
        for idx in 1..big.residue_size() {
            let t = big.teichmuller(&big.residue_rep(idx));
            if hit(&t) {
                return Ok(t);
            }
        }
        (1..big.cardinality()).map(|k| big.element(k)).find(hit).ok_or(Error::NoTraceUnityElement)
    }

    /// c_j = Σ_i Tr_{ℛ/R}(c̃_i ω_i ξ^{−j u_i}) computed inside the splitting ring.
    pub fn reconstruct_via_splitting_ring(&self, parts: &[Vec<ExtElem<RingElement>>]) -> Result<Vec<RingElement>> {
        if parts.len() != self.constituents.len() || parts.iter().any(|p| p.len() != self.ell) {
            return Err(Error::DimensionMismatch("constituent selection".into()));
        }
        let big = self.fac.splitting_ring();
        let r = self.fac.ring();
        let xinv = big.inv(self.fac.xi()).expect("unit");
        let lifts = match self.lifts.get() {
            Some(l) => l,
            None => {
                let l = (0..self.constituents.len())
                    .map(|i| Ok((self.embedding(i)?, self.trace_unity(i)?)))
                    .collect::<Result<Vec<_>>>()?;
                self.lifts.get_or_init(|| l)
            }
        };
        let mut out = vec![r.zero(); self.n * self.ell];
        for (i, part) in parts.iter().enumerate() {
            let (emb, omega) = &lifts[i];
            let step = big.pow(&xinv, self.constituents[i].representative as u128);
            let lifted: Vec<_> = part.iter().map(|a| big.mul(&emb.map(a), omega)).collect();
            let mut w = big.one();
            for j in 0..self.n {
                for (k, a) in lifted.iter().enumerate() {
                    let t = big.trace(&big.mul(a, &w));
                    out[j * self.ell + k] = r.add(&out[j * self.ell + k], &t);
                }
                w = big.mul(&w, &step);
            }
        }
        Ok(out)
    }

    /// B_I: the free cyclic code whose dual has the roots ξ^{−u_i}, i ∈ I.
    pub fn column_code(&self, set: &[usize]) -> Result<CyclicCode<BaseRing>> {
        let r = self.fac.ring();
        let n = self.n as u64;
        let mut idx: Vec<usize> = set
            .iter()
            .map(|&i| self.fac.factor_of_exponent((n - self.constituents[i].representative % n) % n))
            .collect();
        idx.sort_unstable();
        idx.dedup();
        let h = self.fac.product_of(&idx);
        let dual = CyclicCode::free(r, self.n, &h)?;
        dual.dual_free()
    }

    pub fn layered_bound(&self, budget: u128) -> Result<LayeredBound> {
        let dists: Vec<usize> =
            self.constituents.iter().map(|c| min_distance(&c.code, budget)).collect::<Result<_>>()?;
        let mut order: Vec<usize> = (0..dists.len()).filter(|&i| dists[i] > 0).collect();
        order.sort_by(|&a, &b| dists[b].cmp(&dists[a]).then(a.cmp(&b)));
        let mut terms = Vec::new();
        for start in (0..order.len()).rev() {
            let set = &order[start..];
            let mut d = 0;
            for k in 0..set.len() {
                let next = if k + 1 < set.len() { dists[set[k + 1]] } else { 0 };
                let db = min_distance(&self.column_code(&set[..=k])?.linear_code(), budget)?;
                d += (dists[set[k]] - next) * db;
            }
            terms.push((set.to_vec(), d));
        }
        let bound = terms.iter().map(|t| t.1).min().unwrap_or(0);
        Ok(LayeredBound { constituent_distances: dists, order, terms, bound })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayeredBound {
    pub constituent_distances: Vec<usize>,
    /// Nonzero constituents by decreasing distance, ties by index.
    pub order: Vec<usize>,
    /// (I, d_I) for the suffixes I of `order`, shortest first.
    pub terms: Vec<(Vec<usize>, usize)>,
    pub bound: usize,
}
