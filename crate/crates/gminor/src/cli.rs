//! Command-line interface. Every command writes one JSON report (or a CSV
//! table) and exits with 0 (ok), 1 (violation found), 2 (bad config or IO)
//! or 3 (resource limit).

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gminor_core::arrangement::{chromatic_polynomial, conf_poincare, os_presentation, os_rank_check, OSPresentation, Parity};
use gminor_core::commalg::{betti_table, edge_ideal_lc, hochster_betti_of_ideal, koszul_betti_oracle, max_nonzero_degree, squarefree_degree};
use gminor_core::complex::{ComplexKind, SimplicialComplex};
use gminor_core::families::{
    complete_family, corpus, dyck_words, growth_fit, module_by_name, small_minors, bound_record, generation_record,
    torsion_record, BoundReport, GenerationReport, Growth, ModuleEvaluator, NamedGraph, TorsionReport, UCT_PRIMES,
};
use gminor_core::homology::{homology, uct_consistency, Coefficients};
use gminor_core::minors::{enumerate, validate};
use gminor_core::util::combinations;
use gminor_core::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::edgelist::parse_edge_list;
use crate::error::CliError;
use crate::json::{big, unwrap_result, ComplexJson, GraphJson, MorphismJson};

pub const TOOL: &str = "gminor";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser, Serialize)]
#[command(name = "gminor", version, about = "Graph minor complexes, homology, Betti tables and arrangement ranks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for scans; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Seed for sampled checks; recorded in every report.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output format. CSV is available for Betti tables and scan records.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Matching,
    Dmatching,
    Flag,
}

impl Kind {
    fn complex_kind(self, d: usize) -> ComplexKind {
        match self {
            Kind::Matching => ComplexKind::Matching,
            Kind::Dmatching => ComplexKind::DMatching(d),
            Kind::Flag => ComplexKind::FlagOfLineGraph,
        }
    }
}

#[derive(Debug, Subcommand, Serialize)]
pub enum Command {
    /// Build graph complexes.
    #[command(subcommand)]
    Complex(ComplexCommand),
    /// Homology of a complex, or of a graph complex built on the fly.
    Homology(HomologyArgs),
    /// Enumerate or validate minor morphisms.
    #[command(subcommand)]
    Morphisms(MorphismsCommand),
    /// Multigraded Betti numbers of the edge ideal of the complement line graph.
    Betti(BettiArgs),
    /// Cohomology ranks of the graphical configuration space of L^c(G).
    Conf(ConfArgs),
    /// Scans over graph families. Reported maxima are observations only.
    #[command(subcommand)]
    Scan(ScanCommand),
    /// Convert an edge-list text file to the JSON graph format.
    Convert(ConvertArgs),
}

#[derive(Debug, Subcommand, Serialize)]
pub enum ComplexCommand {
    /// Write the complex of a graph as {"ground", "facets"}.
    Build {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Matching)]
        kind: Kind,
        /// Degree bound for d-matchings.
        #[arg(long, default_value_t = 2)]
        d: usize,
    },
}

#[derive(Debug, Args, Serialize)]
pub struct HomologyArgs {
    /// Graph JSON; the complex is built with --kind.
    #[arg(long, conflicts_with = "complex", required_unless_present = "complex")]
    pub graph: Option<PathBuf>,
    /// Complex JSON.
    #[arg(long)]
    pub complex: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Kind::Matching)]
    pub kind: Kind,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Inclusive range `a..b`, or a single degree.
    #[arg(long, default_value = "0..2")]
    pub degrees: String,
    /// Z, Q, or a prime field as `F<p>`.
    #[arg(long, default_value = "Z")]
    pub coeff: String,
    /// Unreduced homology (reduced is the default).
    #[arg(long)]
    pub unreduced: bool,
    /// Also check universal coefficients for p in {2, 3, 5, 7}.
    #[arg(long)]
    pub uct: bool,
}

#[derive(Debug, Subcommand, Serialize)]
pub enum MorphismsCommand {
    /// All minor morphisms between two graphs.
    Enumerate {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        /// Report the count only.
        #[arg(long)]
        count_only: bool,
    },
    /// Check a morphism JSON against every axiom.
    Validate {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long)]
        morphism: PathBuf,
    },
}

#[derive(Debug, Args, Serialize)]
pub struct BettiArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, default_value_t = 3)]
    pub max_i: usize,
    /// Field characteristic, 0 for Q.
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u64,
    /// Compare with the Koszul complex computation, including sampled
    /// non-squarefree degrees.
    #[arg(long)]
    pub oracle: bool,
    /// Non-squarefree degrees sampled per homological degree with --oracle.
    #[arg(long, default_value_t = 8)]
    pub samples: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct ConfArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    /// Report degrees up to this one.
    #[arg(long)]
    pub max_degree: Option<usize>,
    /// List generators and cycle relations.
    #[arg(long)]
    pub presentation: bool,
    /// Compare presentation ranks with chromatic ranks.
    #[arg(long)]
    pub check: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Only {
    /// Complete graphs K_3 .. K_n with n = max-edges.
    Complete,
    /// Simple graphs only.
    Simple,
}

#[derive(Debug, Subcommand, Serialize)]
pub enum ScanCommand {
    /// Torsion of H̃_i of (d-)matching complexes.
    Torsion {
        #[arg(long)]
        i: i64,
        /// 1 for matchings, larger for d-matchings.
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, default_value_t = 6)]
        max_edges: usize,
        #[arg(long, value_enum)]
        only: Option<Only>,
        /// Recompute each graph under a random relabeling drawn from --seed.
        #[arg(long)]
        relabel_check: bool,
    },
    /// Span of images from small minors.
    Generation {
        #[arg(long, default_value = "matching-h0")]
        module: String,
        #[arg(long = "N")]
        n: usize,
        #[arg(long, default_value_t = 5)]
        max_edges: usize,
    },
    /// |Hom(G, G')| against |Aut(G')| C(e, e') C(e - e', g - g').
    Bound {
        /// Target graph JSON; the point when omitted.
        #[arg(long)]
        target: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        max_edges: usize,
    },
    /// Polynomial growth under sprouting or subdivision.
    Growth {
        #[arg(long)]
        base: PathBuf,
        /// Comma-separated vertex ids.
        #[arg(long, conflicts_with = "subdivide", required_unless_present = "subdivide")]
        sprout: Option<String>,
        /// Comma-separated edge ids.
        #[arg(long)]
        subdivide: Option<String>,
        /// Inclusive parameter window `a..b`.
        #[arg(long, default_value = "2..5")]
        window: String,
        #[arg(long, default_value = "matching-h1")]
        module: String,
        /// Values past the window the fit must predict.
        #[arg(long, default_value_t = 2)]
        extra: usize,
    },
    /// Truncated series over Dyck-path trees.
    Hd {
        #[arg(long, default_value = "constant")]
        module: String,
        #[arg(long = "N", default_value_t = 5)]
        n: usize,
    },
    /// Largest |σ| with nonzero coarse Betti number β_{i,|σ|}.
    Regularity {
        #[arg(long)]
        i: usize,
        #[arg(long, default_value_t = 5)]
        max_edges: usize,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
}

#[derive(Debug, Args, Serialize)]
pub struct ConvertArgs {
    /// Edge-list text file.
    #[arg(long)]
    pub input: PathBuf,
}

/// A finished report before serialization.
pub struct Outcome {
    pub command: String,
    pub result: Value,
    pub violations: Vec<String>,
    /// Header and rows, when the command has a table form.
    pub table: Option<(Vec<String>, Vec<Vec<String>>)>,
    /// Write `result` alone, as a file in one of the input formats.
    pub bare: bool,
}

impl Outcome {
    fn new(command: &str, result: Value) -> Self {
        Outcome {
            command: command.to_string(),
            result,
            violations: Vec::new(),
            table: None,
            bare: false,
        }
    }
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(unwrap_result(serde_json::from_str(&text)?))
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let g: GraphJson = serde_json::from_value(read_json(path)?)?;
    g.to_graph()
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    let c: ComplexJson = serde_json::from_value(read_json(path)?)?;
    c.to_complex()
}

/// `a..b` (inclusive) or a single number.
pub fn parse_range(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Config(format!("bad range `{s}`"));
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let x = parse(s)?;
            (x, x)
        }
    };
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn parse_coefficients(s: &str) -> Result<Coefficients, CliError> {
    match s {
        "Z" | "z" => Ok(Coefficients::Integers),
        "Q" | "q" => Ok(Coefficients::Rationals),
        _ => {
            let p = s
                .trim_start_matches(['F', 'f'])
                .parse::<u64>()
                .map_err(|_| CliError::Config(format!("bad coefficients `{s}`")))?;
            if !gminor_core::util::is_prime(p) {
                return Err(gminor_core::Error::NotPrime(p).into());
            }
            Ok(Coefficients::Prime(p))
        }
    }
}

fn group_json(degree: i64, coeff: Coefficients, group: &gminor_core::homology::HomologyGroup) -> Value {
    json!({
        "degree": degree,
        "coefficients": coeff.label(),
        "free_rank": group.free_rank,
        "torsion": group.torsion.iter().map(big).collect::<Vec<_>>(),
    })
}

fn module(name: &str) -> Result<Box<dyn ModuleEvaluator>, CliError> {
    module_by_name(name).ok_or_else(|| {
        CliError::Config(format!(
            "unknown module `{name}` (constant, edge, point-projective, matching-h0, matching-h1, matching-h2)"
        ))
    })
}

fn graph_record(g: &Graph) -> Value {
    serde_json::to_value(GraphJson::from_graph(g)).expect("graph serializes")
}

fn run_complex(cmd: &ComplexCommand) -> Result<Outcome, CliError> {
    let ComplexCommand::Build { graph, kind, d } = cmd;
    let g = read_graph(graph)?;
    let c = kind.complex_kind(*d).build(&g);
    let mut result = serde_json::to_value(ComplexJson::from_complex(&c))?;
    result["f_vector"] = json!(c.f_vector());
    Ok(Outcome::new("complex build", result))
}

fn run_homology(args: &HomologyArgs) -> Result<Outcome, CliError> {
    let c = match (&args.graph, &args.complex) {
        (Some(g), _) => args.kind.complex_kind(args.d).build(&read_graph(g)?),
        (None, Some(c)) => read_complex(c)?,
        (None, None) => return Err(CliError::Config("need --graph or --complex".into())),
    };
    let coeff = parse_coefficients(&args.coeff)?;
    let (lo, hi) = parse_range(&args.degrees)?;
    let reduced = !args.unreduced;
    let mut groups = Vec::new();
    for i in lo..=hi {
        groups.push(group_json(i, coeff, &homology(&c, i, coeff, reduced)?));
    }
    let mut out = Outcome::new("homology", json!({ "reduced": reduced, "f_vector": c.f_vector(), "groups": groups }));
    if args.uct {
        for i in lo.max(0)..=hi {
            for p in [2, 3, 5, 7] {
                if !uct_consistency(&c, i, p)? {
                    out.violations.push(format!("universal coefficients fail at i = {i}, p = {p}"));
                }
            }
        }
    }
    Ok(out)
}

fn run_morphisms(cmd: &MorphismsCommand) -> Result<Outcome, CliError> {
    match cmd {
        MorphismsCommand::Enumerate { from, to, count_only } => {
            let g = Arc::new(read_graph(from)?);
            let h = Arc::new(read_graph(to)?);
            let all = enumerate(&g, &h)?;
            let mut result = json!({ "count": all.len() });
            if !count_only {
                result["morphisms"] = serde_json::to_value(all.iter().map(MorphismJson::from_morphism).collect::<Vec<_>>())?;
            }
            Ok(Outcome::new("morphisms enumerate", result))
        }
        MorphismsCommand::Validate { from, to, morphism } => {
            let g = Arc::new(read_graph(from)?);
            let h = Arc::new(read_graph(to)?);
            let m: MorphismJson = serde_json::from_value(read_json(morphism)?)?;
            let candidate = m.to_candidate(&g, &h)?;
            let violations = validate(&candidate);
            let listed: Vec<Value> = violations
                .iter()
                .map(|v| json!({ "axiom": format!("{:?}", v.axiom), "witness": v.witness }))
                .collect();
            let mut out = Outcome::new("morphisms validate", json!({ "valid": violations.is_empty(), "violations": listed }));
            for v in &violations {
                out.violations.push(format!("{:?}: {}", v.axiom, v.witness));
            }
            Ok(out)
        }
    }
}

fn labels_of(vars: &[String], sigma: &[usize]) -> Vec<String> {
    sigma.iter().map(|&v| vars[v].clone()).collect()
}

fn run_betti(args: &BettiArgs, seed: u64) -> Result<Outcome, CliError> {
    let g = read_graph(&args.graph)?;
    let table = betti_table(&g, args.max_i, args.characteristic)?;
    let vars = table.variables.clone();
    let mut rows = Vec::new();
    let mut csv = Vec::new();
    let mut out = Outcome::new("betti", Value::Null);
    if args.oracle {
        let ideal = edge_ideal_lc(&g);
        let n = vars.len();
        for i in 0..=args.max_i {
            for k in 0..=n {
                for sigma in combinations(n, k) {
                    let hochster = hochster_betti_of_ideal(&ideal, i, &sigma, args.characteristic)?;
                    let koszul = koszul_betti_oracle(&ideal, i, &squarefree_degree(n, &sigma), args.characteristic)?;
                    if hochster != koszul {
                        out.violations.push(format!("β_{i},{:?}: Hochster {hochster}, Koszul {koszul}", labels_of(&vars, &sigma)));
                    }
                    if hochster != 0 || koszul != 0 {
                        rows.push(json!({ "i": i, "sigma": labels_of(&vars, &sigma), "value": hochster, "oracle": koszul }));
                        csv.push(vec![i.to_string(), labels_of(&vars, &sigma).join(" "), hochster.to_string(), koszul.to_string()]);
                    }
                }
            }
        }
        // the oracle must also vanish off squarefree degrees
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sampled = 0;
        if n > 0 {
            for i in 0..=args.max_i {
                for _ in 0..args.samples {
                    let mut a: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
                    a[rng.gen_range(0..n)] = 2;
                    sampled += 1;
                    let b = koszul_betti_oracle(&ideal, i, &a, args.characteristic)?;
                    if b != 0 {
                        out.violations.push(format!("β_{i} in non-squarefree degree {a:?} is {b}"));
                    }
                }
            }
        }
        out.result = json!({ "variables": vars, "characteristic": args.characteristic, "rows": rows, "non_squarefree_samples": sampled });
        out.table = Some((vec!["i".into(), "sigma".into(), "hochster".into(), "koszul".into()], csv));
    } else {
        for ((i, sigma), v) in &table.entries {
            rows.push(json!({ "i": i, "sigma": labels_of(&vars, sigma), "value": v }));
            csv.push(vec![i.to_string(), labels_of(&vars, sigma).join(" "), v.to_string()]);
        }
        out.result = json!({ "variables": vars, "characteristic": args.characteristic, "rows": rows });
        out.table = Some((vec!["i".into(), "sigma".into(), "value".into()], csv));
    }
    Ok(out)
}

fn presentation_json(p: &OSPresentation) -> Value {
    json!({
        "generators": p.generator_labels.iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
        "generator_degree": p.generator_degree,
        "algebra": match p.parity { Parity::Even => "exterior", Parity::Odd => "symmetric, squares zero" },
        "cycle_cap": p.cycle_cap,
        "relations": p.relations.iter().map(|r| json!({
            "cycle": r.cycle,
            "terms": r.terms.iter().map(|(s, m)| json!({ "sign": s, "monomial": m })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

fn run_conf(args: &ConfArgs) -> Result<Outcome, CliError> {
    let g = read_graph(&args.graph)?;
    let pv = conf_poincare(&g, args.d)?;
    let r = pv.generator_degree;
    let max_degree = args.max_degree.unwrap_or((pv.ranks.len().max(1) - 1) * r);
    let ranks: Vec<Value> = (0..=max_degree / r)
        .map(|j| json!({ "degree": j * r, "rank": big(&pv.rank_at(j * r)) }))
        .collect();
    let chi = chromatic_polynomial(&g.complement_line_graph())?;
    let mut result = json!({
        "d": args.d,
        "generator_degree": r,
        "ranks": ranks,
        "total_rank": big(&pv.total()),
        "chromatic_polynomial": chi.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    });
    let mut out = Outcome::new("conf", Value::Null);
    if args.presentation {
        result["presentation"] = presentation_json(&os_presentation(&g, args.d, Some(max_degree / r + 1))?);
    }
    if args.check {
        let report = os_rank_check(&g, args.d, max_degree)?;
        for row in &report.rows {
            if num_bigint::BigUint::from(row.presented) != row.chromatic {
                out.violations.push(format!("degree {}: presentation {} vs chromatic {}", row.degree, row.presented, row.chromatic));
            }
        }
        result["presentation_ranks"] = report.rows.iter().map(|row| json!({ "degree": row.degree, "rank": row.presented })).collect();
    }
    out.result = result;
    Ok(out)
}

fn relabel_randomly(g: &Graph, rng: &mut ChaCha8Rng) -> Result<Graph, CliError> {
    let mut vs: Vec<String> = (0..g.vertex_count()).map(|i| format!("r{i}")).collect();
    let mut es: Vec<String> = (0..g.edge_count()).map(|i| format!("s{i}")).collect();
    vs.shuffle(rng);
    es.shuffle(rng);
    Ok(g.relabeled(&vs, &es)?)
}

fn torsion_family(max_edges: usize, only: Option<Only>) -> Result<Vec<NamedGraph>, CliError> {
    Ok(match only {
        Some(Only::Complete) => complete_family(max_edges)?,
        Some(Only::Simple) => corpus(max_edges, true)?,
        None => corpus(max_edges, false)?,
    })
}

const OBSERVATION: &str = "observed over the scanned family only; not a bound";

fn run_scan(cmd: &ScanCommand, seed: u64) -> Result<Outcome, CliError> {
    match cmd {
        ScanCommand::Torsion { i, d, max_edges, only, relabel_check } => {
            let kind = if *d == 1 { ComplexKind::Matching } else { ComplexKind::DMatching(*d) };
            let family = torsion_family(*max_edges, *only)?;
            let records = family
                .par_iter()
                .map(|g| torsion_record(kind, *i, g, &UCT_PRIMES).map_err(CliError::from))
                .collect::<Result<Vec<_>, _>>()?;
            let report = TorsionReport { complex: kind.name(), degree: *i, records };
            let mut out = Outcome::new("scan torsion", Value::Null);
            for r in report.records.iter().filter(|r| !r.uct_failures.is_empty()) {
                out.violations.push(format!("{}: universal coefficients fail for p in {:?}", r.name, r.uct_failures));
            }
            if *relabel_check {
                let checks = family
                    .par_iter()
                    .enumerate()
                    .map(|(k, g)| {
                        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
                        let h = NamedGraph { name: g.name.clone(), graph: Arc::new(relabel_randomly(&g.graph, &mut rng)?) };
                        Ok(torsion_record(kind, *i, &h, &[])?.group)
                    })
                    .collect::<Result<Vec<_>, CliError>>()?;
                for (r, group) in report.records.iter().zip(checks) {
                    if r.group != group {
                        out.violations.push(format!("{}: homology changed under relabeling", r.name));
                    }
                }
            }
            let records: Vec<Value> = report
                .records
                .iter()
                .zip(&family)
                .map(|(r, g)| {
                    json!({
                        "name": r.name,
                        "edges": r.edges,
                        "free_rank": r.group.free_rank,
                        "torsion": r.group.torsion.iter().map(big).collect::<Vec<_>>(),
                        "uct_failures": r.uct_failures,
                        "graph": graph_record(&g.graph),
                    })
                })
                .collect();
            out.table = Some((
                vec!["name".into(), "edges".into(), "free_rank".into(), "torsion".into()],
                report
                    .records
                    .iter()
                    .map(|r| {
                        vec![
                            r.name.clone(),
                            r.edges.to_string(),
                            r.group.free_rank.to_string(),
                            r.group.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" "),
                        ]
                    })
                    .collect(),
            ));
            out.result = json!({
                "complex": report.complex,
                "reduced_degree": i,
                "graphs": report.records.len(),
                "observed_exponent": big(&report.observed_exponent()),
                "max_free_rank": report.records.iter().map(|r| r.group.free_rank).max().unwrap_or(0),
                "note": OBSERVATION,
                "records": records,
            });
            Ok(out)
        }
        ScanCommand::Generation { module: name, n, max_edges } => {
            let m = module(name)?;
            let minors = small_minors(*n)?;
            let family: Vec<NamedGraph> = corpus(*max_edges, false)?.into_iter().filter(|g| g.graph.edge_count() > *n).collect();
            let records = family
                .par_iter()
                .map(|g| generation_record(m.as_ref(), g, &minors).map_err(CliError::from))
                .collect::<Result<Vec<_>, _>>()?;
            let report = GenerationReport { module: m.name(), generator_edges: *n, max_edges: *max_edges, records };
            let deficits: Vec<Value> = report
                .deficits()
                .iter()
                .map(|r| json!({ "name": r.name, "dimension": r.dimension, "span_rank": r.span_rank }))
                .collect();
            let mut out = Outcome::new("scan generation", json!({
                "module": report.module,
                "generator_edges": n,
                "max_edges": max_edges,
                "graphs": report.records.len(),
                "deficit_count": deficits.len(),
                "deficits": deficits,
                "note": OBSERVATION,
                "records": report.records.iter().map(|r| json!({
                    "name": r.name, "edges": r.edges, "dimension": r.dimension,
                    "span_rank": r.span_rank, "morphisms_used": r.morphisms_used,
                })).collect::<Vec<_>>(),
            }));
            out.table = Some((
                vec!["name".into(), "edges".into(), "dimension".into(), "span_rank".into()],
                report.records.iter().map(|r| vec![r.name.clone(), r.edges.to_string(), r.dimension.to_string(), r.span_rank.to_string()]).collect(),
            ));
            Ok(out)
        }
        ScanCommand::Bound { target, max_edges } => {
            let t = Arc::new(match target {
                Some(p) => read_graph(p)?,
                None => Graph::point(),
            });
            let family = corpus(*max_edges, false)?;
            let records = family
                .par_iter()
                .map(|g| bound_record(g, &t).map_err(CliError::from))
                .collect::<Result<Vec<_>, _>>()?;
            let report = BoundReport { target_edges: t.edge_count(), target_automorphisms: t.automorphism_count()?, records };
            let mut out = Outcome::new("scan bound", json!({
                "target": graph_record(&t),
                "target_automorphisms": report.target_automorphisms.to_string(),
                "max_edges": max_edges,
                "graphs": report.records.len(),
                "records": report.records.iter().map(|r| json!({
                    "name": r.name, "morphisms": r.morphisms, "bound": r.bound.to_string(), "holds": r.holds(),
                })).collect::<Vec<_>>(),
            }));
            for r in report.violations() {
                out.violations.push(format!("{}: {} morphisms exceed the bound {}", r.name, r.morphisms, r.bound));
            }
            out.table = Some((
                vec!["name".into(), "morphisms".into(), "bound".into()],
                report.records.iter().map(|r| vec![r.name.clone(), r.morphisms.to_string(), r.bound.to_string()]).collect(),
            ));
            Ok(out)
        }
        ScanCommand::Growth { base, sprout, subdivide, window, module: name, extra } => {
            let g = read_graph(base)?;
            let m = module(name)?;
            let split = |s: &str| s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect::<Vec<_>>();
            let growth = match (sprout, subdivide) {
                (Some(v), _) => Growth::Sprout(split(v)),
                (None, Some(e)) => Growth::Subdivide(split(e)),
                (None, None) => return Err(CliError::Config("need --sprout or --subdivide".into())),
            };
            let (lo, hi) = parse_range(window)?;
            if lo < 0 {
                return Err(CliError::Config("window must be nonnegative".into()));
            }
            let mut out = Outcome::new("scan growth", Value::Null);
            match growth_fit(m.as_ref(), &g, &growth, (lo as usize, hi as usize), *extra) {
                Ok(fit) => {
                    out.result = json!({
                        "module": m.name(),
                        "window": [lo, hi],
                        "degree": fit.degree(),
                        "coefficients": fit.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "observed": fit.observed,
                        "predictions": fit.predictions.iter().map(|(n, p, a)| json!({ "n": n, "predicted": p.to_string(), "actual": a })).collect::<Vec<_>>(),
                    });
                }
                Err(gminor_core::Error::NoFit(reason)) => {
                    out.result = json!({ "module": m.name(), "window": [lo, hi], "fit": Value::Null, "reason": reason });
                    out.violations.push(format!("no fit: {reason}"));
                }
                Err(e) => return Err(e.into()),
            }
            Ok(out)
        }
        ScanCommand::Hd { module: name, n } => {
            let m = module(name)?;
            let series = gminor_core::families::hd_series(m.as_ref(), *n)?;
            let words: Vec<usize> = (0..=*n).map(|k| dyck_words(k).len()).collect();
            Ok(Outcome::new("scan hd", json!({ "module": m.name(), "coefficients": series, "words": words })))
        }
        ScanCommand::Regularity { i, max_edges, characteristic } => {
            let family = corpus(*max_edges, false)?;
            let degrees = family
                .par_iter()
                .map(|g| max_nonzero_degree(&g.graph, *i, *characteristic).map_err(CliError::from))
                .collect::<Result<Vec<_>, _>>()?;
            let records: Vec<Value> = family.iter().zip(&degrees).map(|(g, d)| json!({ "name": g.name, "edges": g.graph.edge_count(), "max_degree": d })).collect();
            let mut out = Outcome::new("scan regularity", json!({
                "i": i,
                "characteristic": characteristic,
                "graphs": family.len(),
                "observed_max_degree": degrees.iter().max().copied().unwrap_or(-1),
                "note": OBSERVATION,
                "records": records,
            }));
            out.table = Some((
                vec!["name".into(), "edges".into(), "max_degree".into()],
                family.iter().zip(&degrees).map(|(g, d)| vec![g.name.clone(), g.graph.edge_count().to_string(), d.to_string()]).collect(),
            ));
            Ok(out)
        }
    }
}

fn run_convert(args: &ConvertArgs) -> Result<Outcome, CliError> {
    let text = fs::read_to_string(&args.input).map_err(|e| CliError::Io(format!("{}: {e}", args.input.display())))?;
    let g = parse_edge_list(&text)?;
    let mut out = Outcome::new("convert", graph_record(&g));
    out.bare = true;
    Ok(out)
}

/// Runs the command and renders the report.
pub fn execute(cli: &Cli) -> Result<(String, bool), CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .map_err(|e| CliError::Config(e.to_string()))?;
    let outcome = pool.install(|| match &cli.command {
        Command::Complex(c) => run_complex(c),
        Command::Homology(a) => run_homology(a),
        Command::Morphisms(m) => run_morphisms(m),
        Command::Betti(a) => run_betti(a, cli.seed),
        Command::Conf(a) => run_conf(a),
        Command::Scan(s) => run_scan(s, cli.seed),
        Command::Convert(a) => run_convert(a),
    })?;
    let ok = outcome.violations.is_empty();
    let text = match cli.format {
        Format::Json if outcome.bare => serde_json::to_string_pretty(&outcome.result)? + "\n",
        Format::Json => {
            let report = json!({
                "tool": TOOL,
                "version": VERSION,
                "command": outcome.command,
                "config": serde_json::to_value(cli)?,
                "seed": cli.seed,
                "violations": outcome.violations,
                "result": outcome.result,
            });
            serde_json::to_string_pretty(&report)? + "\n"
        }
        Format::Csv => {
            let Some((header, rows)) = outcome.table else {
                return Err(CliError::Config(format!("`{}` has no CSV form", outcome.command)));
            };
            let mut s = format!("# {TOOL} {VERSION} {} seed={}\n", outcome.command, cli.seed);
            s.push_str(&header.join(","));
            s.push('\n');
            for r in rows {
                s.push_str(&r.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","));
                s.push('\n');
            }
            s
        }
    };
    Ok((text, ok))
}

fn csv_field(f: &str) -> String {
    if f.contains([',', '"', '\n']) {
        format!("\"{}\"", f.replace('"', "\"\""))
    } else {
        f.to_string()
    }
}

/// Parses arguments, runs, writes the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok((text, ok)) => {
            let written = match &cli.output {
                Some(p) => fs::write(p, &text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Err(e) => {
                    eprintln!("error: {e}");
                    e.exit_code()
                }
                Ok(()) if ok => 0,
                Ok(()) => 1,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
