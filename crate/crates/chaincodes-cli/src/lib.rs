//! Command-line front end for `chaincodes`: argument model, commands and reports.

pub mod report;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use chaincodes::cyclic::{longest_zero_run, CyclicCode};
use chaincodes::distance::{weight_profile, Method, WeightProfile, DEFAULT_BUDGET, DEFAULT_SEED};
use chaincodes::linear::LinearCode;
use chaincodes::literal::{format_poly, parse_list, parse_poly, parse_ring, parse_tuple};
use chaincodes::onegen::{self, free_bound, OneGenQc};
use chaincodes::qc::{block_shift, canonical_decompose, field_construction, module_bound, QcCode, RowMode};
use chaincodes::{factor_xn_minus_1, BaseRing, ChainRing, CommRing, Error, Poly, RingElement};

use report::*;

type P = Poly<RingElement>;

#[derive(Parser, Debug)]
#[command(name = "chaincodes", version, about = "Cyclic and quasi-cyclic codes over finite chain rings")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Factor x^n - 1 into basic irreducibles.
    Factor(FactorArgs),
    /// Build a cyclic, quasi-cyclic or field-construction code and report its bounds.
    Build(BuildArgs),
    /// Count and list all one-generator QC codes with a given annihilator family.
    Enumerate(EnumerateArgs),
    /// Minimum Hamming (and Lee, over F2[u]/u^2) distance of a QC code.
    Distance(DistanceArgs),
}

#[derive(Args, Debug)]
pub struct Target {
    /// Ring literal: F<q>[u]/u^<s>, F<q>, GR(<p^s>,<m>) or Z<p^s>.
    #[arg(long)]
    pub ring: String,
    /// Cyclic length n.
    #[arg(long)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct Search {
    /// Largest number of codewords to enumerate.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    /// Distance method; auto picks exhaustive, socle or sampling by size
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Random codewords drawn by the sampling method.
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    /// Seed for the sampling method
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Exhaustive,
    Socle,
    Sample,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Exhaustive => Method::Exhaustive,
            MethodArg::Socle => Method::Socle,
            MethodArg::Sample => Method::Sample,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Rows {
    Basis,
    Shifts,
}

#[derive(Args, Debug)]
pub struct FactorArgs {
    #[command(flatten)]
    pub target: Target,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[command(flatten)]
    pub target: Target,
    /// Index ℓ (checked against the generator tuples).
    #[arg(long)]
    pub ell: Option<usize>,
    /// Generator tuple "(a_0, …, a_{ℓ-1})"; repeat for several generators.
    #[arg(long = "gen")]
    pub gens: Vec<String>,
    /// Cyclic code from its family "F_0; F_1; …; F_s".
    #[arg(long, conflicts_with_all = ["gens", "field"])]
    pub family: Option<String>,
    /// Field construction from v over F_q[u]/u^ℓ.
    #[arg(long, conflicts_with = "gens")]
    pub field: Option<String>,
    /// Multiples of v used by the field construction.
    #[arg(long, value_enum, default_value_t = Rows::Basis)]
    pub rows: Rows,
    #[command(flatten)]
    pub search: Search,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub target: Target,
    /// Index ℓ, coprime to the multiplicative order of q mod n
    #[arg(long)]
    pub ell: usize,
    /// Annihilator family "F_0; F_1; …; F_s".
    #[arg(long)]
    pub family: String,
    #[command(flatten)]
    pub search: Search,
}

#[derive(Args, Debug)]
pub struct DistanceArgs {
    #[command(flatten)]
    pub target: Target,
    /// Index ℓ (checked against the generator tuples)
    #[arg(long)]
    pub ell: Option<usize>,
    /// Generator tuple; repeat for several generators
    #[arg(long = "gen", required = true)]
    pub gens: Vec<String>,
    #[command(flatten)]
    pub search: Search,
}

/// Exit status for a failed run: 3 when an enumeration budget was exceeded, else 2.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. }) => 3,
        _ => 2,
    }
}

/// Machine-readable error object.
pub fn error_json(err: &anyhow::Error) -> String {
    let (kind, position) = match err.downcast_ref::<Error>() {
        Some(e) => {
            let dbg = format!("{e:?}");
            let kind = dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string();
            let pos = match e {
                Error::Parse { pos, .. } => Some(*pos),
                _ => None,
            };
            (kind, pos)
        }
        None => ("Spec".to_string(), None),
    };
    let v = serde_json::json!({
        "schema": SCHEMA,
        "error": { "kind": kind, "message": format!("{err:#}"), "position": position },
    });
    format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
}

pub fn render(report: &Report, format: Format) -> Result<String> {
    Ok(match format {
        Format::Table => report.table(),
        Format::Json => report.json(),
        Format::Csv => report.csv()?,
    })
}

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Factor(a) => cmd_factor(a),
        Command::Build(a) => cmd_build(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Distance(a) => cmd_distance(a),
    }
}

fn ring_of(t: &Target) -> Result<BaseRing> {
    if t.n == 0 {
        bail!("n must be positive");
    }
    parse_ring(&t.ring).with_context(|| format!("ring {:?}", t.ring))}

fn report(command: &'static str, ring: &BaseRing, n: usize, body: Body) -> Report {
    Report { schema: SCHEMA, command, ring: ring.spec().to_string(), n, body }
}

fn row_string<S: ChainRing>(ring: &S, row: &[S::Elem]) -> String {
    let parts: Vec<String> = row.iter().map(|e| ring.format(e)).collect();
    if parts.iter().all(|p| p.chars().count() == 1) {
        parts.concat()
    } else {
        parts.join(" ")
    }
}

fn polys(ring: &BaseRing, ps: &[P]) -> Vec<String> {
    ps.iter().map(|p| format_poly(ring, p)).collect()
}

fn summary(p: &WeightProfile) -> DistanceSummary {
    DistanceSummary {
        min_hamming: p.min_hamming,
        min_lee: p.min_lee,
        method: p.method.as_str(),
        exact: p.exact,
        codewords_examined: p.codewords_examined,
    }
}

fn profile(code: &LinearCode<BaseRing>, s: &Search) -> Result<DistanceSummary> {
    Ok(summary(&weight_profile(code, s.method.into(), s.budget, s.trials, s.seed)?))
}

/// Budget overruns inside optional bounds become notes.
fn soft<T>(r: chaincodes::Result<T>, what: &str, notes: &mut Vec<String>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ Error::BudgetExceeded { .. }) => {
            notes.push(format!("{what} skipped: {e}"));
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

fn parse_gens(ring: &BaseRing, gens: &[String], ell: Option<usize>) -> Result<(usize, Vec<Vec<P>>)> {
    if gens.is_empty() {
        bail!("at least one --gen is required");
    }
    let tuples: Vec<Vec<P>> =
        gens.iter().map(|g| parse_tuple(ring, g).with_context(|| format!("generator {g:?}"))).collect::<Result<_>>()?;
    let width = tuples[0].len();
    if tuples.iter().any(|t| t.len() != width) {
        bail!("generator tuples have different lengths");
    }
    if let Some(l) = ell {
        if l != width {
            bail!("--ell {l} does not match generator tuples of length {width}");
        }
    }
    Ok((width, tuples))
}

pub fn cmd_factor(a: &FactorArgs) -> Result<Report> {
    let ring = ring_of(&a.target)?;
    let fac = factor_xn_minus_1(&ring, a.target.n)?;
    let factors = fac
        .factors()
        .iter()
        .zip(fac.cosets())
        .map(|(f, c)| FactorRow {
            poly: format_poly(&ring, f),
            degree: f.degree().unwrap_or(0),
            representative: c.representative(),
            coset: c.members.clone(),
        })
        .collect();
    let body = FactorReport { splitting_degree: fac.splitting_ring().degree(), factors };
    Ok(report("factor", &ring, a.target.n, Body::Factor(body)))
}

pub fn cmd_build(a: &BuildArgs) -> Result<Report> {
    let ring = ring_of(&a.target)?;
    let n = a.target.n;
    let body = if let Some(v) = &a.field {
        let v = parse_poly(&ring, v).context("field polynomial")?;
        build_field(&ring, n, &v, a)?
    } else if let Some(f) = &a.family {
        let fam = parse_list(&ring, f).context("family")?;
        let code = CyclicCode::from_family(&ring, fam)?;
        build_cyclic(&ring, n, code, vec![], &a.search)?
    } else {
        let (ell, tuples) = parse_gens(&ring, &a.gens, a.ell)?;
        if ell == 1 && tuples.len() == 1 {
            let ann = onegen::annihilator_of(&ring, n, &tuples[0])?;
            let code = CyclicCode::from_family(&ring, ann.family().to_vec())?;
            build_cyclic(&ring, n, code, tuples, &a.search)?
        } else {
            build_qc(&ring, n, ell, tuples, &a.search)?
        }
    };
    Ok(report("build", &ring, n, Body::Build(body)))
}

fn bch_of(ring: &BaseRing, n: usize, f0: &P, notes: &mut Vec<String>) -> Result<Option<BoundRow>> {
    if f0.degree() == Some(n) {
        return Ok(None);
    }
    let fac = match factor_xn_minus_1(ring, n) {
        Ok(f) => f,
        Err(e) => {
            notes.push(format!("bch skipped: {e}"));
            return Ok(None);
        }
    };
    let run = longest_zero_run(fac.splitting_ring(), fac.xi(), n, f0)?;
    Ok(Some(BoundRow { name: "bch", value: run + 1, detail: format!("{run} consecutive zeros of {}", format_poly(ring, f0)) }))
}

fn build_cyclic(ring: &BaseRing, n: usize, code: CyclicCode<BaseRing>, gens: Vec<Vec<P>>, s: &Search) -> Result<BuildReport> {
    let lc = code.linear_code();
    let mut notes = Vec::new();
    let bounds: Vec<BoundRow> = bch_of(ring, n, &code.family()[0], &mut notes)?.into_iter().collect();
    let gens = if gens.is_empty() { vec![vec![code.single_generator()]] } else { gens };
    Ok(BuildReport {
        construction: "cyclic",
        alphabet: ring.spec().to_string(),
        length: n,
        index: 1,
        generators: gens.iter().map(|g| polys(ring, g)).collect(),
        log_size: lc.log_size(),
        size: lc.cardinality(),
        free: lc.is_free(),
        rank: lc.rank(),
        quasi_cyclic: true,
        family: Some(polys(ring, code.family())),
        annihilator: None,
        generator_matrix: code.generator_rows().iter().map(|r| row_string(ring, r)).collect(),
        bounds,
        constituents: vec![],
        distance: Some(profile(&lc, s)?),
        notes,
    })
}

fn build_qc(ring: &BaseRing, n: usize, ell: usize, tuples: Vec<Vec<P>>, s: &Search) -> Result<BuildReport> {
    let qc = QcCode::new(ring, n, ell, tuples.clone())?;
    let lc = qc.linear_code();
    let mut notes = Vec::new();
    let mut bounds = Vec::new();
    let mut constituents = Vec::new();
    let mut annihilator = None;
    match factor_xn_minus_1(ring, n) {
        Ok(fac) => {
            let dec = canonical_decompose(&qc, &fac)?;
            let dists: Vec<Option<usize>> = dec
                .constituents()
                .iter()
                .map(|c| chaincodes::distance::min_distance(&c.code, s.budget).ok())
                .collect();
            for (c, d) in dec.constituents().iter().zip(&dists) {
                constituents.push(ConstituentRow {
                    factor: format_poly(ring, c.ext.modulus()),
                    representative: c.representative,
                    generators: c.code.rows().iter().map(|r| format!("({})", row_vec(&c.ext, r))).collect(),
                    log_size: c.code.log_size(),
                    min_distance: if c.code.log_size() == 0 { None } else { *d },
                });
            }
            if let Some(lb) = soft(dec.layered_bound(s.budget), "layered bound", &mut notes)? {
                let terms: Vec<String> = lb.terms.iter().map(|(set, d)| format!("{set:?}:{d}")).collect();
                bounds.push(BoundRow { name: "layered", value: lb.bound, detail: format!("min over {}", terms.join(" ")) });
            }
            if tuples.len() == 1 {
                let one = OneGenQc::new(ring, n, tuples[0].clone())?;
                let ann = one.annihilator();
                annihilator = Some(AnnihilatorRow {
                    family: polys(ring, ann.family()),
                    generators: polys(ring, &ann.generators()),
                    log_size: ann.log_size(),
                });
                if ann.is_free_form() {
                    let fb = free_bound(&one, &fac)?;
                    if let (Some(b), Some(d)) = (fb.bound, fb.delta) {
                        bounds.push(BoundRow { name: "ell_delta", value: b, detail: format!("{ell}·{d}, rank {}", fb.rank) });
                    }
                }
            }
        }
        Err(e) => notes.push(format!("decomposition skipped: {e}")),
    }
    let ext = onegen::basis_ring(ring, ell)?;
    if let Some(pb) = soft(module_bound(&qc, &ext, s.budget), "module bound", &mut notes)? {
        bounds.push(BoundRow { name: "module", value: pb.bound, detail: format!("d(C~) = {}, d(B) = {}", pb.d_cyclic, pb.d_coeff) });
    }
    Ok(BuildReport {
        construction: "quasi_cyclic",
        alphabet: ring.spec().to_string(),
        length: n * ell,
        index: ell,
        generators: tuples.iter().map(|g| polys(ring, g)).collect(),
        log_size: lc.log_size(),
        size: lc.cardinality(),
        free: lc.is_free(),
        rank: lc.rank(),
        quasi_cyclic: lc.rows().iter().all(|w| lc.contains(&block_shift(w, ell))),
        family: None,
        annihilator,
        generator_matrix: lc.rows().iter().map(|r| row_string(ring, r)).collect(),
        bounds,
        constituents,
        distance: Some(profile(&lc, s)?),
        notes,
    })
}

fn row_vec<S: ChainRing>(ring: &S, row: &[S::Elem]) -> String {
    row.iter().map(|e| ring.format(e)).collect::<Vec<_>>().join(", ")
}

fn build_field(ring: &BaseRing, n: usize, v: &P, a: &BuildArgs) -> Result<BuildReport> {
    let mode = match a.rows {
        Rows::Basis => RowMode::Basis,
        Rows::Shifts => RowMode::AllShifts,
    };
    let fc = field_construction(ring, v, n, mode, a.search.budget)?;
    let mut bounds = vec![BoundRow {
        name: "product",
        value: fc.product.bound,
        detail: format!("d(C~) = {}, d(B) = {}", fc.product.d_cyclic, fc.product.d_coeff),
    }];
    if let Some((d, e)) = fc.delta_epsilon {
        bounds.push(BoundRow { name: "delta_epsilon", value: d * e, detail: format!("{d}·{e}") });
    }
    let code = &fc.code;
    Ok(BuildReport {
        construction: "field",
        alphabet: fc.field.spec().to_string(),
        length: n * fc.ell,
        index: fc.ell,
        generators: vec![vec![format_poly(ring, v)]],
        log_size: code.log_size(),
        size: code.cardinality(),
        free: code.is_free(),
        rank: code.rank(),
        quasi_cyclic: code.rows().iter().all(|w| code.contains(&block_shift(w, fc.ell))),
        family: None,
        annihilator: None,
        generator_matrix: fc.matrix.iter().map(|r| row_string(&fc.field, r)).collect(),
        bounds,
        constituents: vec![],
        distance: Some(profile(code, &a.search)?),
        notes: vec![],
    })
}

pub fn cmd_enumerate(a: &EnumerateArgs) -> Result<Report> {
    let ring = ring_of(&a.target)?;
    let n = a.target.n;
    let family = parse_list(&ring, &a.family).context("family")?;
    let count = onegen::count_codes(&ring, n, &family, a.ell)?;
    let ann = onegen::Annihilator::from_family(&ring, n, family.clone())?;
    let slots = onegen::synthesis_slots(&ring, n, &family, a.ell)?;
    let coset_sets = slots
        .iter()
        .map(|s| CosetSetRow {
            level: s.level,
            factor: format_poly(&ring, &s.reps.factor),
            size: s.reps.len(),
            reps: s.reps.reps.iter().map(|z| s.reps.field.format(z)).collect(),
        })
        .collect();
    let tuples = onegen::synthesize_generators(&ring, n, &family, a.ell)?;
    let codes = tuples
        .par_iter()
        .enumerate()
        .map(|(i, t)| -> Result<CodeRow> {
            let lc = QcCode::new(&ring, n, a.ell, vec![t.clone()])?.linear_code();
            let p = profile(&lc, &a.search)?;
            Ok(CodeRow {
                index: i,
                generators: polys(&ring, t),
                size: lc.cardinality(),
                min_lee: p.min_lee,
                min_hamming: p.min_hamming,
                exact: p.exact,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let body = EnumerateReport {
        index: a.ell,
        family: polys(&ring, &family),
        count,
        code_size: onegen::code_size(&ann),
        coset_sets,
        codes,
    };
    Ok(report("enumerate", &ring, n, Body::Enumerate(body)))
}

pub fn cmd_distance(a: &DistanceArgs) -> Result<Report> {
    let ring = ring_of(&a.target)?;
    let n = a.target.n;
    let (ell, tuples) = parse_gens(&ring, &a.gens, a.ell)?;
    let qc = QcCode::new(&ring, n, ell, tuples.clone())?;
    let prof = profile(&qc.linear_code(), &a.search)?;
    let body = DistanceReport {
        length: n * ell,
        index: ell,
        generators: tuples.iter().map(|t| polys(&ring, t)).collect(),
        budget: a.search.budget,
        trials: a.search.trials,
        seed: a.search.seed,
        profile: prof,
    };
    Ok(report("distance", &ring, n, Body::Distance(body)))
}

/// Parse arguments, run, and return (stdout text, exit code); errors go to stderr text.
pub fn main_with(args: impl IntoIterator<Item = String>) -> (String, String, i32) {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return if code == 0 { (e.to_string(), String::new(), 0) } else { (String::new(), e.to_string(), 2) };
        }
    };
    if let Some(t) = cli.threads {
        // A second initialisation in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(&cli).and_then(|r| render(&r, cli.format)) {
        Ok(out) => (out, String::new(), 0),
        Err(e) => {
            let code = exit_code(&e);
            let out = if cli.format == Format::Json { error_json(&e) } else { String::new() };
            (out, format!("error: {e:#}\n"), code)
        }
    }
}
