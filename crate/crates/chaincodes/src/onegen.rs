//! One-generator quasi-cyclic codes R_n·(a_0, …, a_{ℓ−1}): annihilators, freeness,
//! equality, the enumeration count and one generator per code.

use rayon::prelude::*;

use crate::arith::{gcd, mult_order};
use crate::chainring::{BaseRing, RingElement};
use crate::crt;
use crate::cyclic::{check_family, zero_exponents, CyclicCode};
use crate::error::{Error, Result};
use crate::extension::{ExtElem, ExtRing};
use crate::factor::{coprime_over_ring, factor_xn_minus_1, galois_extension, hensel_lift, Factorization};
use crate::linear::{solve_combination, LinearCode};
use crate::poly::{pmap, Poly, PolyOps, ResidueOps};
use crate::qc::QcCode;
use crate::ring::{ChainRing, CommRing};

type P = Poly<RingElement>;
type E1 = ExtElem<RingElement>;
type E2 = ExtElem<E1>;

/// Ann(C) = ⟨F̂_0, γF̂_s, …, γ^{s−1}F̂_2⟩ for a family F_0, …, F_s.
#[derive(Clone, Debug, PartialEq)]
pub struct Annihilator {
    ring: BaseRing,
    n: usize,
    family: Vec<P>,
}

impl Annihilator {
    pub fn from_family(ring: &BaseRing, n: usize, family: Vec<P>) -> Result<Annihilator> {
        check_family(ring, n, &family)?;
        Ok(Annihilator { ring: ring.clone(), n, family })
    }

    pub fn ring(&self) -> &BaseRing {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> &[P] {
        &self.family
    }

    pub fn hat(&self, i: usize) -> P {
        self.ring.pdiv_exact(&self.ring.xn_minus_1(self.n), &self.family[i]).expect("family divides x^n-1")
    }

    /// Generators reduced mod x^n − 1.
    pub fn generators(&self) -> Vec<P> {
        let r = &self.ring;
        let s = r.s();
        let mut out = vec![self.hat(0)];
        for k in 1..s {
            out.push(r.pscale(&r.gamma_pow(k), &self.hat(s + 1 - k)));
        }
        let m = r.xn_minus_1(self.n);
        out.into_iter().map(|g| r.prem(&g, &m).expect("monic modulus")).collect()
    }

    /// F = F̂_0 + γF̂_s + … + γ^{s−1}F̂_2.
    pub fn single_generator(&self) -> P {
        let r = &self.ring;
        self.generators().iter().fold(r.pzero(), |acc, g| r.padd(&acc, g))
    }

    /// The annihilator as a cyclic code.
    pub fn as_cyclic(&self) -> CyclicCode<BaseRing> {
        let s = self.ring.s();
        let mut fam = vec![self.family[1].clone(), self.family[0].clone()];
        fam.extend((2..=s).rev().map(|i| self.family[i].clone()));
        CyclicCode::from_family(&self.ring, fam).expect("permuted family")
    }

    /// log_q |Ann| = Σ_{i=1}^{s} i·deg F_{i+1}, with F_{s+1} = F_0.
    pub fn log_size(&self) -> usize {
        let s = self.ring.s();
        (1..=s).map(|i| i * deg(&self.family[(i + 1) % (s + 1)])).sum()
    }

    /// F_2 = … = F_s = 1.
    pub fn is_free_form(&self) -> bool {
        self.family[2..].iter().all(|f| deg(f) == 0)
    }

    /// Identity e_j of ⟨F̂_j⟩ in R_n; zero when F_j = 1.
    pub fn block_identity(&self, j: usize) -> P {
        block_identity(&self.ring, self.n, &self.family[j])
    }
}

fn deg(f: &P) -> usize {
    f.degree().unwrap_or(0)
}

fn block_identity<R: ChainRing>(r: &R, n: usize, f: &Poly<R::Elem>) -> Poly<R::Elem> {
    if f.degree().unwrap_or(0) == 0 {
        return r.pzero();
    }
    let target = r.xn_minus_1(n);
    let hat = r.pdiv_exact(&target, f).expect("factor of x^n-1");
    let (_, b) = coprime_over_ring(r, f, &hat).expect("x^n-1 is square-free");
    r.prem(&r.pmul(&b, &hat), &target).expect("monic")
}

fn div_gamma_poly<R: ChainRing>(r: &R, f: &Poly<R::Elem>, k: usize) -> Poly<R::Elem> {
    r.poly(f.coeffs().iter().map(|c| r.div_gamma_pow(c, k)).collect())
}

/// Annihilator of R_n·a through the residue gcd chain.
pub fn annihilator_of(ring: &BaseRing, n: usize, a: &[P]) -> Result<Annihilator> {
    let r = ring;
    let s = r.s();
    let target = r.xn_minus_1(n);
    let tbar = r.residue_poly(&target);
    let mut cur: Vec<P> = a.iter().map(|p| r.preduce_cyclic(p, n)).collect();
    let mut fam = Vec::with_capacity(s + 1);
    fam.push(r.pone());
    for k in 1..=s {
        let g = cur.iter().fold(tbar.clone(), |g, c| r.res_gcd(&g, c));
        let fbar = r.res_div_exact(&tbar, &g);
        let fk = if deg(&fbar) == 0 { r.pone() } else { hensel_lift(r, &fbar, &target)? };
        if k < s {
            cur = cur.iter().map(|c| div_gamma_poly(r, &r.pmul_cyclic(c, &fk, n), 1)).collect();
        }
        fam.push(fk);
    }
    fam[0] = r.pdiv_exact(&target, &r.pproduct(&fam[1..]))?;
    Annihilator::from_family(r, n, fam)
}

/// log_q |C| = s·n − log_q |Ann|.
pub fn log_code_size(ann: &Annihilator) -> usize {
    ann.ring.s() * ann.n - ann.log_size()
}

pub fn code_size(ann: &Annihilator) -> Option<u128> {
    ann.ring.residue_size().checked_pow(log_code_size(ann) as u32)
}

/// The Galois extension ℛ of degree ℓ used to pack a tuple as A(x) = Σ a_i ξ^i.
pub fn basis_ring(ring: &BaseRing, ell: usize) -> Result<ExtRing<BaseRing>> {
    galois_extension(ring, ell)
}

#[derive(Clone, Debug)]
pub struct OneGenQc {
    ring: BaseRing,
    n: usize,
    gens: Vec<P>,
    ann: Annihilator,
}

impl OneGenQc {
    pub fn new(ring: &BaseRing, n: usize, gens: Vec<P>) -> Result<OneGenQc> {
        if gens.is_empty() {
            return Err(Error::DimensionMismatch("empty generator tuple".into()));
        }
        let gens: Vec<P> = gens.iter().map(|p| ring.preduce_cyclic(p, n)).collect();
        let ann = annihilator_of(ring, n, &gens)?;
        Ok(OneGenQc { ring: ring.clone(), n, gens, ann })
    }

    pub fn ring(&self) -> &BaseRing {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[P] {
        &self.gens
    }

    pub fn annihilator(&self) -> &Annihilator {
        &self.ann
    }

    pub fn qc_code(&self) -> QcCode<BaseRing> {
        QcCode::new(&self.ring, self.n, self.ell(), vec![self.gens.clone()]).expect("consistent tuple")
    }

    pub fn linear_code(&self) -> LinearCode<BaseRing> {
        self.qc_code().linear_code()
    }

    pub fn log_size(&self) -> usize {
        log_code_size(&self.ann)
    }

    /// A(x) = Σ a_i(x) ξ^i in ℛ_n.
    pub fn packed(&self, ext: &ExtRing<BaseRing>) -> Result<Poly<E1>> {
        ext.pack(&self.gens)
    }

    /// A_1, …, A_s with γ^{j−1}A_j = A·e_j.
    pub fn split(&self, ext: &ExtRing<BaseRing>) -> Result<Vec<Poly<E1>>> {
        let a = self.packed(ext)?;
        let s = self.ring.s();
        Ok((1..=s)
            .map(|j| {
                let e = ext.lift_poly(&self.ann.block_identity(j));
                div_gamma_poly(ext, &ext.pmul_cyclic(&a, &e, self.n), j - 1)
            })
            .collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeBound {
    pub is_free: bool,
    pub rank: usize,
    /// Designed distance δ of ⟨F_0⟩ when every gcd(b̄_i, F̄_1) = 1.
    pub delta: Option<usize>,
    /// ℓ·δ.
    pub bound: Option<usize>,
}

/// Longest run of consecutive powers of ξ^k among the zeros, maximised over k coprime to n.
fn best_zero_run(zeros: &[usize], n: usize) -> usize {
    if zeros.len() == n {
        return n;
    }
    let mut is_zero = vec![false; n];
    for &z in zeros {
        is_zero[z] = true;
    }
    let mut best = 0;
    for k in (1..n.max(2)).filter(|&k| gcd(k as u64, n as u64) == 1) {
        for start in 0..n {
            let mut len = 0;
            while len < n && is_zero[(start + len) * k % n] {
                len += 1;
            }
            best = best.max(len);
        }
    }
    best
}

/// Freeness, rank and the ℓδ bound for an annihilator of the form ⟨F_1⟩.
pub fn free_bound(code: &OneGenQc, fac: &Factorization) -> Result<FreeBound> {
    let ann = code.annihilator();
    if !ann.is_free_form() {
        return Err(Error::NotFreeForm);
    }
    let r = code.ring();
    let f0 = &ann.family()[0];
    let f1 = &ann.family()[1];
    let rank = deg(f1);
    let coprime = code.generators().iter().try_fold(true, |ok, a| -> Result<bool> {
        let b = r.pdiv_exact(a, f0)?;
        Ok(ok && r.res_gcd(&b, f1).degree() == Some(0))
    })?;
    let delta = coprime.then(|| {
        let zeros = zero_exponents(fac.splitting_ring(), fac.xi(), code.n(), f0);
        best_zero_run(&zeros, code.n()) + 1
    });
    Ok(FreeBound {
        is_free: code.linear_code().is_free(),
        rank,
        delta,
        bound: delta.map(|d| d * code.ell()),
    })
}

/// h with c = h·a and h coprime to the annihilator's generator, if one exists.
pub fn equality_witness(ring: &BaseRing, n: usize, a: &[P], c: &[P]) -> Result<Option<P>> {
    if a.len() != c.len() {
        return Err(Error::DimensionMismatch(format!("tuples of length {} and {}", a.len(), c.len())));
    }
    let r = ring;
    let one = OneGenQc::new(r, n, a.to_vec())?;
    let qc = one.qc_code();
    let shifts: Vec<Vec<RingElement>> = (0..n)
        .map(|k| qc.vector_of(&a.iter().map(|p| r.pmul_cyclic(p, &r.pmonomial(r.one(), k), n)).collect::<Vec<_>>()))
        .collect();
    let target = qc.vector_of(&c.iter().map(|p| r.preduce_cyclic(p, n)).collect::<Vec<_>>());
    let Some(h) = solve_combination(r, &shifts, &target)? else { return Ok(None) };
    let h = r.poly(h);
    // F ≡ F̂_0 mod γ; the unreduced F̂_0 keeps x^n − 1 for the zero ideal.
    let f = one.annihilator().hat(0);
    Ok((r.res_gcd(&h, &f).degree() == Some(0)).then_some(h))
}

/// R_n·a = R_n·c by double inclusion of the spanned codes.
pub fn equal_by_inclusion(ring: &BaseRing, n: usize, a: &[P], c: &[P]) -> Result<bool> {
    if a.len() != c.len() {
        return Err(Error::DimensionMismatch(format!("tuples of length {} and {}", a.len(), c.len())));
    }
    let ca = QcCode::new(ring, n, a.len(), vec![a.to_vec()])?.linear_code();
    let cc = QcCode::new(ring, n, c.len(), vec![c.to_vec()])?.linear_code();
    Ok(ca.contains_code(&cc) && cc.contains_code(&ca))
}

/// Both equality tests; they are expected to agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EqualityCheck {
    pub witness: bool,
    pub inclusion: bool,
}

pub fn generators_equal(ring: &BaseRing, n: usize, a: &[P], c: &[P]) -> Result<EqualityCheck> {
    Ok(EqualityCheck {
        witness: equality_witness(ring, n, a, c)?.is_some(),
        inclusion: equal_by_inclusion(ring, n, a, c)?,
    })
}

/// Both formulations of the annihilator test on a split A = Σ γ^{j−1}A_j.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriterionCheck {
    /// Every A_j coprime with F_j.
    pub coprime: bool,
    /// Every μ_j(A_{s−j+1}) a unit of ⟨μ_j(F̂_{s−j+1})⟩.
    pub unit: bool,
}

fn project_ext(ring: &BaseRing, small: &ExtRing<BaseRing>, a: &E1) -> E1 {
    let rj = small.base();
    small.from_coords(a.coords().iter().map(|c| ring.project_into(c, rj)).collect())
}

fn level_ring(ext: &ExtRing<BaseRing>, j: usize) -> Result<ExtRing<BaseRing>> {
    let ring = ext.base();
    let rj = ring.mu_ring(j)?;
    let m = pmap::<BaseRing, BaseRing>(&rj, ext.modulus(), |c| ring.project_into(c, &rj));
    ExtRing::with_var(rj, m, ext.var())
}

pub fn annihilator_criterion(ext: &ExtRing<BaseRing>, split: &[Poly<E1>], ann: &Annihilator) -> Result<CriterionCheck> {
    let ring = ann.ring();
    let s = ring.s();
    let n = ann.n();
    if split.len() != s {
        return Err(Error::DimensionMismatch(format!("{} blocks for s = {s}", split.len())));
    }
    let idem: Vec<P> = (0..=s).map(|j| ann.block_identity(j)).collect();
    for j in 1..=s {
        let y = ext.pscale(&ext.gamma_pow(j - 1), &ext.preduce_cyclic(&split[j - 1], n));
        if ext.pmul_cyclic(&y, &ext.lift_poly(&idem[j]), n) != y {
            return Err(Error::BlockMembershipViolated(j));
        }
    }
    let coprime = (1..=s).all(|j| {
        let f = &ann.family()[j];
        deg(f) == 0 || ext.res_gcd(&split[j - 1], &ext.lift_poly(f)).degree() == Some(0)
    });
    let mut unit = true;
    for j in 1..=s {
        let k = s - j + 1;
        let f = &ann.family()[k];
        if deg(f) == 0 {
            continue;
        }
        let lj = level_ring(ext, j)?;
        let rj = lj.base().clone();
        let down = |p: &P| lj.lift_poly(&pmap::<BaseRing, BaseRing>(&rj, p, |c| ring.project_into(c, &rj)));
        let e = down(&idem[k]);
        let fk = down(f);
        let a = lj.poly(split[k - 1].coeffs().iter().map(|c| project_ext(ring, &lj, c)).collect());
        let y = lj.pmul_cyclic(&a, &e, n);
        let ok = match coprime_over_ring(&lj, &lj.prem(&y, &fk)?, &fk) {
            Some((inv, _)) => lj.pmul_cyclic(&y, &lj.pmul_cyclic(&inv, &e, n), n) == e,
            None => false,
        };
        unit &= ok;
    }
    Ok(CriterionCheck { coprime, unit })
}

fn assumptions(ring: &BaseRing, n: usize, ell: usize) -> Result<Factorization> {
    let q = ring.q();
    if n == 0 || gcd(n as u64, q) != 1 {
        return Err(Error::AssumptionViolated(format!("gcd(n, q) = gcd({n}, {q}) != 1")));
    }
    let t = mult_order(q % n as u64, n as u64).max(1);
    if ell == 0 || gcd(t, ell as u64) != 1 {
        return Err(Error::AssumptionViolated(format!("gcd(ord_n(q), ell) = gcd({t}, {ell}) != 1")));
    }
    factor_xn_minus_1(ring, n)
}

/// (q^{jℓe} − q^{(j−1)ℓe}) / (q^{je} − q^{(j−1)e}) = q^{(j−1)(ℓ−1)e}·(q^{ℓe} − 1)/(q^e − 1).
fn local_count(q: u128, j: usize, ell: usize, e: usize) -> Option<u128> {
    let qe = q.checked_pow(e as u32)?;
    let qle = q.checked_pow((ell * e) as u32)?;
    let lift = q.checked_pow(((j - 1) * (ell - 1) * e) as u32)?;
    lift.checked_mul((qle - 1) / (qe - 1))
}

fn overflow() -> Error {
    Error::AssumptionViolated("count exceeds 128 bits".into())
}

/// Number of one-generator QC codes of index ℓ with annihilator given by the family.
pub fn count_codes(ring: &BaseRing, n: usize, family: &[P], ell: usize) -> Result<u128> {
    let fac = assumptions(ring, n, ell)?;
    check_family(ring, n, family)?;
    let s = ring.s();
    let q = ring.residue_size();
    let mut total: u128 = 1;
    for j in 1..=s {
        for p in fac.support_of(&family[s - j + 1]) {
            let e = deg(&fac.factors()[p]);
            total = total.checked_mul(local_count(q, j, ell, e).ok_or_else(overflow)?).ok_or_else(overflow)?;
        }
    }
    Ok(total)
}

/// Coset representatives of (ℛ^{(j)}[x]/⟨f⟩)^* modulo (R^{(j)}[x]/⟨f⟩)^*.
#[derive(Clone, Debug)]
pub struct CosetRepSet {
    pub level: usize,
    pub factor: P,
    /// K = ℛ^{(j)}[x]/⟨f⟩.
    pub field: ExtRing<ExtRing<BaseRing>>,
    /// An element of K of order q^{ℓe} − 1.
    pub xi: E2,
    /// (a, [b_1, …, b_{j−1}]) with `None` for ∞.
    pub exponents: Vec<(u128, Vec<Option<u128>>)>,
    pub reps: Vec<E2>,
}

impl CosetRepSet {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Coordinates of K over R^{(j)}[x]/⟨f⟩ on the basis {1, ξ, …}: zero on 1 means "in T".
    pub fn in_complement(&self, z: &E2) -> bool {
        let lj = self.field.base();
        let rj = lj.base();
        z.coords().iter().all(|c| rj.valuation(&c.coords()[0]) >= 1)
    }
}

pub fn coset_reps(ring: &BaseRing, level: usize, factor: &P, ell: usize) -> Result<CosetRepSet> {
    let ext = basis_ring(ring, ell)?;
    coset_reps_in(&ext, level, factor)
}

fn coset_reps_in(ext: &ExtRing<BaseRing>, level: usize, factor: &P) -> Result<CosetRepSet> {
    let ring = ext.base();
    let ell = ext.degree();
    let e = deg(factor);
    if e == 0 || !ring.is_monic(factor) {
        return Err(Error::NonMonicDivisor);
    }
    if gcd(e as u64, ell as u64) != 1 {
        return Err(Error::AssumptionViolated(format!("gcd(deg f, ell) = gcd({e}, {ell}) != 1")));
    }
    let lj = level_ring(ext, level)?;
    let rj = lj.base().clone();
    let f = lj.lift_poly(&pmap::<BaseRing, BaseRing>(&rj, factor, |c| ring.project_into(c, &rj)));
    let field = ExtRing::with_var(lj, f, "x").map_err(|_| Error::AssumptionViolated("factor splits over the extension".into()))?;
    let q = ring.residue_size();
    let order = q.pow((ell * e) as u32) - 1;
    let xi = field.find_unit_of_order(order)?;
    let powers: Vec<E2> = {
        let mut out = Vec::with_capacity(order as usize);
        let mut cur = field.one();
        for _ in 0..order {
            out.push(cur.clone());
            cur = field.mul(&cur, &xi);
        }
        out
    };
    let mut set = CosetRepSet { level, factor: factor.clone(), field, xi, exponents: vec![], reps: vec![] };
    let mut digits: Vec<Option<u128>> = (0..order).filter(|&b| set.in_complement(&powers[b as usize])).map(Some).collect();
    digits.push(None);
    let a_count = order / (q.pow(e as u32) - 1);
    let tail = level - 1;
    let combos = (digits.len() as u128).pow(tail as u32);
    let k = &set.field;
    for a in 0..a_count {
        for idx in 0..combos {
            let mut rest = idx;
            let mut bs = vec![None; tail];
            for slot in (0..tail).rev() {
                bs[slot] = digits[(rest % digits.len() as u128) as usize];
                rest /= digits.len() as u128;
            }
            let mut z = powers[a as usize].clone();
            for (i, b) in bs.iter().enumerate() {
                if let Some(b) = b {
                    let term = &powers[((a + b) % order) as usize];
                    z = k.add(&z, &k.mul(&k.gamma_pow(i + 1), term));
                }
            }
            set.exponents.push((a, bs));
            set.reps.push(z);
        }
    }
    Ok(set)
}

/// One slot of the synthesis: a level j and a factor of F_{s−j+1}.
#[derive(Clone, Debug)]
pub struct SynthesisSlot {
    pub level: usize,
    pub factor_index: usize,
    pub reps: CosetRepSet,
}

/// Representative sets for every (level, factor) pair, levels from s down to 1.
pub fn synthesis_slots(ring: &BaseRing, n: usize, family: &[P], ell: usize) -> Result<Vec<SynthesisSlot>> {
    let fac = assumptions(ring, n, ell)?;
    check_family(ring, n, family)?;
    let ext = basis_ring(ring, ell)?;
    let s = ring.s();
    let mut slots = Vec::new();
    for j in (1..=s).rev() {
        for p in fac.support_of(&family[s - j + 1]) {
            let reps = coset_reps_in(&ext, j, &fac.factors()[p])?;
            slots.push(SynthesisSlot { level: j, factor_index: p, reps });
        }
    }
    Ok(slots)
}

/// One generator tuple per code with the given annihilator, in mixed-radix order over
/// the slots (first slot most significant).
pub fn synthesize_generators(ring: &BaseRing, n: usize, family: &[P], ell: usize) -> Result<Vec<Vec<P>>> {
    let fac = assumptions(ring, n, ell)?;
    let slots = synthesis_slots(ring, n, family, ell)?;
    let ext = basis_ring(ring, ell)?;
    let s = ring.s();
    let sys = crt::idempotents(ring, fac.factors(), &ring.xn_minus_1(n))?;
    let contributions: Vec<Vec<Poly<E1>>> = slots
        .iter()
        .map(|slot| {
            let j = slot.level;
            let lj = slot.reps.field.base().clone();
            let rj = lj.base().clone();
            let idem = &sys.idempotents()[slot.factor_index];
            let e = lj.lift_poly(&pmap::<BaseRing, BaseRing>(&rj, idem, |c| ring.project_into(c, &rj)));
            let scale = ext.gamma_pow(s - j);
            slot.reps
                .reps
                .iter()
                .map(|eps| {
                    let local = lj.poly(eps.coords().to_vec());
                    let block = lj.pmul_cyclic(&local, &e, n);
                    let lifted = ext.poly(
                        block
                            .coeffs()
                            .iter()
                            .map(|c| ext.from_coords(c.coords().iter().map(|d| ring.lift_from(d, &rj)).collect()))
                            .collect(),
                    );
                    ext.pscale(&scale, &lifted)
                })
                .collect()
        })
        .collect();
    let radices: Vec<u128> = contributions.iter().map(|c| c.len() as u128).collect();
    let total = radices.iter().try_fold(1u128, |acc, &r| acc.checked_mul(r)).ok_or_else(overflow)?;
    let out = (0..total)
        .into_par_iter()
        .map(|idx| {
            let mut rest = idx;
            let mut a = ext.pzero();
            for (slot, &radix) in contributions.iter().zip(&radices).rev() {
                a = ext.padd(&a, &slot[(rest % radix) as usize]);
                rest /= radix;
            }
            let mut tuple = ext.unpack(&a);
            tuple.resize(ell, ring.pzero());
            tuple
        })
        .collect();
    Ok(out)
}
