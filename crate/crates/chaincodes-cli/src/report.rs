//! One report model rendered as a table, JSON or CSV.

use std::fmt::Write as _;

use serde::Serialize;

pub const SCHEMA: &str = "chaincodes-report/1";

#[derive(Serialize, Debug)]
pub struct Report {
    pub schema: &'static str,
    pub command: &'static str,
    pub ring: String,
    pub n: usize,
    #[serde(flatten)]
    pub body: Body,
}

#[derive(Serialize, Debug)]
#[serde(rename_all = "snake_case")]
pub enum Body {
    Factor(FactorReport),
    Build(BuildReport),
    Enumerate(EnumerateReport),
    Distance(DistanceReport),
}

#[derive(Serialize, Debug)]
pub struct FactorReport {
    pub splitting_degree: usize,
    pub factors: Vec<FactorRow>,
}

#[derive(Serialize, Debug)]
pub struct FactorRow {
    pub poly: String,
    pub degree: usize,
    pub representative: u64,
    pub coset: Vec<u64>,
}

#[derive(Serialize, Debug)]
pub struct BuildReport {
    pub construction: &'static str,
    pub alphabet: String,
    pub length: usize,
    pub index: usize,
    pub generators: Vec<Vec<String>>,
    pub log_size: usize,
    pub size: Option<u128>,
    pub free: bool,
    pub rank: usize,
    pub quasi_cyclic: bool,
    pub family: Option<Vec<String>>,
    pub annihilator: Option<AnnihilatorRow>,
    pub generator_matrix: Vec<String>,
    pub bounds: Vec<BoundRow>,
    pub constituents: Vec<ConstituentRow>,
    pub distance: Option<DistanceSummary>,
    pub notes: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct AnnihilatorRow {
    pub family: Vec<String>,
    pub generators: Vec<String>,
    pub log_size: usize,
}

#[derive(Serialize, Debug)]
pub struct BoundRow {
    pub name: &'static str,
    pub value: usize,
    pub detail: String,
}

#[derive(Serialize, Debug)]
pub struct ConstituentRow {
    pub factor: String,
    pub representative: u64,
    pub generators: Vec<String>,
    pub log_size: usize,
    pub min_distance: Option<usize>,
}

#[derive(Serialize, Debug, Clone)]
pub struct DistanceSummary {
    pub min_hamming: Option<usize>,
    pub min_lee: Option<usize>,
    pub method: &'static str,
    pub exact: bool,
    pub codewords_examined: u128,
}

#[derive(Serialize, Debug)]
pub struct EnumerateReport {
    pub index: usize,
    pub family: Vec<String>,
    pub count: u128,
    pub code_size: Option<u128>,
    pub coset_sets: Vec<CosetSetRow>,
    pub codes: Vec<CodeRow>,
}

#[derive(Serialize, Debug)]
pub struct CosetSetRow {
    pub level: usize,
    pub factor: String,
    pub size: usize,
    pub reps: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct CodeRow {
    pub index: usize,
    pub generators: Vec<String>,
    pub size: Option<u128>,
    pub min_lee: Option<usize>,
    pub min_hamming: Option<usize>,
    pub exact: bool,
}

#[derive(Serialize, Debug)]
pub struct DistanceReport {
    pub length: usize,
    pub index: usize,
    pub generators: Vec<Vec<String>>,
    pub budget: u128,
    pub trials: u64,
    pub seed: u64,
    #[serde(flatten)]
    pub profile: DistanceSummary,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn tuple(t: &[String]) -> String {
    format!("({})", t.join(", "))
}

impl Report {
    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable report");
        s.push('\n');
        s
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} over {}, n = {}", self.command, self.ring, self.n);
        match &self.body {
            Body::Factor(f) => {
                let _ = writeln!(out, "splitting degree: {}", f.splitting_degree);
                let width = f.factors.iter().map(|r| r.poly.len()).max().unwrap_or(0).max(6);
                let _ = writeln!(out, "{:<width$}  deg  rep  coset", "factor");
                for r in &f.factors {
                    let coset: Vec<String> = r.coset.iter().map(|c| c.to_string()).collect();
                    let _ = writeln!(out, "{:<width$}  {:>3}  {:>3}  {{{}}}", r.poly, r.degree, r.representative, coset.join(","));
                }
            }
            Body::Build(b) => {
                let _ = writeln!(out, "construction: {}", b.construction);
                let _ = writeln!(out, "alphabet: {}, length {}, index {}", b.alphabet, b.length, b.index);
                for g in &b.generators {
                    let _ = writeln!(out, "generator: {}", tuple(g));
                }
                let _ = writeln!(out, "size: {} (log {}), rank {}, free {}", opt(&b.size), b.log_size, b.rank, b.free);
                let _ = writeln!(out, "quasi-cyclic: {}", b.quasi_cyclic);
                if let Some(f) = &b.family {
                    let _ = writeln!(out, "family: {}", f.join("; "));
                }
                if let Some(a) = &b.annihilator {
                    let _ = writeln!(out, "annihilator family: {}", a.family.join("; "));
                    let _ = writeln!(out, "annihilator generators: {}", a.generators.join(", "));
                }
                let _ = writeln!(out, "generator matrix:");
                for row in &b.generator_matrix {
                    let _ = writeln!(out, "  {row}");
                }
                for c in &b.constituents {
                    let _ = writeln!(
                        out,
                        "constituent mod {} (rep {}): <{}>, log size {}, d = {}",
                        c.factor,
                        c.representative,
                        c.generators.join("; "),
                        c.log_size,
                        opt(&c.min_distance)
                    );
                }
                for bd in &b.bounds {
                    let _ = writeln!(out, "bound {}: {} {}", bd.name, bd.value, bd.detail);
                }
                if let Some(d) = &b.distance {
                    write_distance(&mut out, d);
                }
                for note in &b.notes {
                    let _ = writeln!(out, "note: {note}");
                }
            }
            Body::Enumerate(e) => {
                let _ = writeln!(out, "index {}, family {}", e.index, e.family.join("; "));
                let _ = writeln!(out, "count: {}, |C| = {}", e.count, opt(&e.code_size));
                for c in &e.coset_sets {
                    let _ = writeln!(out, "Q level {} factor {}: {} reps", c.level, c.factor, c.size);
                    for r in &c.reps {
                        let _ = writeln!(out, "  {r}");
                    }
                }
                let _ = writeln!(out, "{:>4}  {:>6}  {:>4}  {:>4}  generators", "#", "|C|", "lee", "ham");
                for c in &e.codes {
                    let _ = writeln!(
                        out,
                        "{:>4}  {:>6}  {:>4}  {:>4}  {}",
                        c.index,
                        opt(&c.size),
                        opt(&c.min_lee),
                        opt(&c.min_hamming),
                        tuple(&c.generators)
                    );
                }
            }
            Body::Distance(d) => {
                let _ = writeln!(out, "length {}, index {}", d.length, d.index);
                for g in &d.generators {
                    let _ = writeln!(out, "generator: {}", tuple(g));
                }
                write_distance(&mut out, &d.profile);
            }
        }
        out
    }

    pub fn csv(&self) -> anyhow::Result<String> {
        let mut w = csv::Writer::from_writer(vec![]);
        match &self.body {
            Body::Factor(f) => {
                w.write_record(["factor", "degree", "representative", "coset"])?;
                for r in &f.factors {
                    let coset: Vec<String> = r.coset.iter().map(|c| c.to_string()).collect();
                    w.write_record([r.poly.clone(), r.degree.to_string(), r.representative.to_string(), coset.join(" ")])?;
                }
            }
            Body::Build(b) => {
                w.write_record(["key", "value"])?;
                w.write_record(["construction", b.construction])?;
                w.write_record(["alphabet", &b.alphabet])?;
                w.write_record(["length", &b.length.to_string()])?;
                w.write_record(["index", &b.index.to_string()])?;
                w.write_record(["size", &opt(&b.size)])?;
                w.write_record(["rank", &b.rank.to_string()])?;
                w.write_record(["free", &b.free.to_string()])?;
                for row in &b.generator_matrix {
                    w.write_record(["matrix_row", row])?;
                }
                for bd in &b.bounds {
                    w.write_record([format!("bound_{}", bd.name), bd.value.to_string()])?;
                }
                if let Some(d) = &b.distance {
                    w.write_record(["min_hamming", &opt(&d.min_hamming)])?;
                    w.write_record(["min_lee", &opt(&d.min_lee)])?;
                    w.write_record(["method", d.method])?;
                }
            }
            Body::Enumerate(e) => {
                w.write_record(["index", "generators", "size", "min_lee", "min_hamming"])?;
                for c in &e.codes {
                    w.write_record([
                        c.index.to_string(),
                        tuple(&c.generators),
                        opt(&c.size),
                        opt(&c.min_lee),
                        opt(&c.min_hamming),
                    ])?;
                }
            }
            Body::Distance(d) => {
                w.write_record(["length", "index", "method", "exact", "min_hamming", "min_lee", "codewords_examined"])?;
                let p = &d.profile;
                w.write_record([
                    d.length.to_string(),
                    d.index.to_string(),
                    p.method.to_string(),
                    p.exact.to_string(),
                    opt(&p.min_hamming),
                    opt(&p.min_lee),
                    p.codewords_examined.to_string(),
                ])?;
            }
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}

fn write_distance(out: &mut String, d: &DistanceSummary) {
    let kind = if d.exact { "exact" } else { "upper bound" };
    let _ = writeln!(
        out,
        "distance ({}, {kind}, {} words): hamming {}, lee {}",
        d.method,
        d.codewords_examined,
        opt(&d.min_hamming),
        opt(&d.min_lee)
    );
}
