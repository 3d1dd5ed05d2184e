//! Command-line front end.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use domset_core::algorithms::{AlgorithmConfig, AlgorithmRegistry, RunContext};
use domset_core::arboricity::ArboricityEstimate;
use domset_core::exact::OracleLimits;
use domset_core::generators::FamilyParams;
use domset_core::greedy::TiePolicy;
use domset_core::ingest::{read_graph, write_graph, GraphFormat, LoadedGraph};
use domset_core::lp::{build_lp1, decomposition_lower_bound, solve_lp_with, LpEngineRegistry};
use domset_core::rounding::VariantKind;
use domset_core::VertexSet;

use crate::experiment::{prefix_separation, run_suite};
use crate::report::render;
use crate::suites::{BenchConfig, Suite};

#[derive(Debug, Parser)]
#[command(name = "domset", version, about = "Approximate minimum dominating sets and compare them to LP lower bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated graph.
    Generate(GenerateArgs),
    /// Run algorithms on a graph file.
    Solve(SolveArgs),
    /// Compute L*, or max{M*, N*} over a greedy-prefix separation.
    Lowerbound(LowerboundArgs),
    /// Run a benchmark suite and print its table.
    Bench(BenchArgs),
    /// Check that a vertex set dominates a graph.
    Validate(ValidateArgs),
    /// List registered algorithms and LP engines.
    List,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file.
    #[arg(short = 'i', long = "input")]
    pub input: PathBuf,
    /// edge-list, metis or snap.
    #[arg(long, default_value = "edge-list")]
    pub format: String,
}

impl InputArgs {
    pub fn format(&self) -> Result<GraphFormat> {
        Ok(self.format.parse()?)
    }

    pub fn load(&self) -> Result<LoadedGraph> {
        let format = self.format()?;
        let file = File::open(&self.input).with_context(|| format!("cannot open {}", self.input.display()))?;
        let loaded = read_graph(BufReader::new(file), format)
            .with_context(|| format!("cannot read {} as {format}", self.input.display()))?;
        for d in &loaded.diagnostics {
            log::warn!("{}: {d}", self.input.display());
        }
        Ok(loaded)
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// hypercube, queens, ktree, trap-stars or trap-clique.
    pub family: String,
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Output file; standard output when omitted.
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
    #[arg(long, default_value = "edge-list")]
    pub format: String,
}

impl GenerateArgs {
    fn params(&self) -> Result<FamilyParams> {
        fn need<T: Copy>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
            v.with_context(|| format!("{family} needs --{flag}"))
        }
        let f = self.family.as_str();
        Ok(match f {
            "hypercube" => FamilyParams::Hypercube { d: need(self.d, "d", f)? },
            "queens" => FamilyParams::Queens { k: need(self.k, "k", f)? },
            "ktree" | "k-tree" => FamilyParams::KTree {
                n: need(self.n, "n", f)?,
                k: need(self.k, "k", f)? as usize,
                seed: self.seed,
            },
            "trap-stars" => FamilyParams::TrapStars { p: need(self.p, "p", f)? },
            "trap-clique" => FamilyParams::TrapClique { p: need(self.p, "p", f)? },
            other => bail!("unknown family `{other}` (expected hypercube, queens, ktree, trap-stars or trap-clique)"),
        })
    }
}

#[derive(Debug, Args)]
pub struct AlgoArgs {
    #[arg(long, default_value = "min-id")]
    pub tie: String,
    #[arg(long, default_value_t = 0.5)]
    pub alpha: f64,
    /// Rounding variant used by plain `hybrid`: a1, a2, a1p, a2p or a3.
    #[arg(long, default_value = "a1")]
    pub variant: String,
    /// Arboricity upper bound; overrides any computed estimate.
    #[arg(long)]
    pub arboricity: Option<u32>,
    /// Largest graph the exact oracle accepts.
    #[arg(long = "max-n", default_value_t = 32)]
    pub max_n: usize,
    #[arg(long = "lp-engine", default_value = "highs")]
    pub lp_engine: String,
}

impl AlgoArgs {
    fn config(&self) -> Result<AlgorithmConfig> {
        if !(0.0..=1.0).contains(&self.alpha) {
            bail!("--alpha must lie in [0, 1], got {}", self.alpha);
        }
        if self.arboricity == Some(0) {
            bail!("--arboricity must be at least 1");
        }
        Ok(AlgorithmConfig {
            tie: self.tie.parse::<TiePolicy>()?,
            alpha: self.alpha,
            arboricity: self.arboricity,
            variant: VariantKind::parse(&self.variant)?,
            oracle: OracleLimits {
                max_vertices: self.max_n,
                ..OracleLimits::default()
            },
        })
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Algorithm name; repeatable. `lp-only` prints L* alone.
    #[arg(long = "algo", default_value = "greedy")]
    pub algos: Vec<String>,
    #[command(flatten)]
    pub algo: AlgoArgs,
    /// Write the chosen vertices (input labels, one per line); needs a single
    /// algorithm.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LowerboundArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Separate on the first ⌈f·d⌉ greedy picks and report max{M*, N*}.
    #[arg(long = "prefix-fraction")]
    pub prefix_fraction: Option<f64>,
    #[arg(long = "lp-engine", default_value = "highs")]
    pub lp_engine: String,
    /// Write LP1 in the row-oriented text format.
    #[arg(long = "dump-lp")]
    pub dump_lp: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub suite: Option<String>,
    /// key=value settings applied before the flags below.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub emit: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long = "algo")]
    pub algos: Vec<String>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub tie: Option<String>,
    #[arg(long)]
    pub variant: Option<String>,
    #[arg(long)]
    pub arboricity: Option<u32>,
    #[arg(long = "prefix-fraction")]
    pub prefix_fraction: Option<f64>,
    #[arg(long)]
    pub threads: Option<usize>,
    /// Add per-algorithm wall-clock columns (output is then not reproducible).
    #[arg(long)]
    pub timings: bool,
    /// Add per-algorithm size columns.
    #[arg(long)]
    pub sizes: bool,
}

impl BenchArgs {
    pub fn config(&self) -> Result<BenchConfig> {
        let mut cfg = BenchConfig::new(Suite::Hypercubes);
        let mut suite_set = false;
        if let Some(path) = &self.config {
            let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
            suite_set = text
                .lines()
                .any(|l| l.split('#').next().unwrap_or("").trim_start().starts_with("suite"));
            cfg.apply_text(&text)
                .with_context(|| format!("in {}", path.display()))?;
        }
        let mut set = |k: &str, v: Option<String>| -> Result<()> {
            match v {
                Some(v) => cfg.set(k, &v),
                None => Ok(()),
            }
        };
        if self.suite.is_none() && !suite_set {
            bail!("bench needs --suite (hypercubes, queens, ktrees or traps) or a config with suite=");
        }
        set("suite", self.suite.clone())?;
        set("emit", self.emit.clone())?;
        set("seed", self.seed.map(|x| x.to_string()))?;
        set("alpha", self.alpha.map(|x| x.to_string()))?;
        set("tie", self.tie.clone())?;
        set("variant", self.variant.clone())?;
        set("arboricity", self.arboricity.map(|x| x.to_string()))?;
        set("prefix_fraction", self.prefix_fraction.map(|x| x.to_string()))?;
        set("threads", self.threads.map(|x| x.to_string()))?;
        if !self.algos.is_empty() {
            cfg.set("algos", &self.algos.join(","))?;
        }
        if self.timings {
            cfg.render.timings = true;
        }
        if self.sizes {
            cfg.render.sizes = true;
        }
        Ok(cfg)
    }
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Vertex labels separated by whitespace; `#` starts a comment.
    #[arg(long)]
    pub set: PathBuf,
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(std::io::stdout().lock()),
    })
}

pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Generate(a) => generate(a, out),
        Command::Solve(a) => solve(a, out),
        Command::Lowerbound(a) => lowerbound(a, out),
        Command::Bench(a) => bench(a, out),
        Command::Validate(a) => validate(a, out),
        Command::List => list(out),
    }
}

fn generate(a: GenerateArgs, out: &mut dyn Write) -> Result<()> {
    let params = a.params()?;
    let g = params.generate()?;
    let format: GraphFormat = a.format.parse()?;
    match &a.out {
        Some(p) => {
            let mut w = open_output(&a.out)?;
            write_graph(&g, &mut w, format).with_context(|| format!("cannot write {}", p.display()))?;
            w.flush()?;
            writeln!(out, "{params}: n={} m={} -> {}", g.n(), g.m(), p.display())?;
        }
        None => write_graph(&g, out, format)?,
    }
    Ok(())
}

fn solve(a: SolveArgs, out: &mut dyn Write) -> Result<()> {
    let loaded = a.input.load()?;
    let g = &loaded.graph;
    let cfg = a.algo.config()?;
    let engine = LpEngineRegistry::default().create(&a.algo.lp_engine)?;
    if a.out.is_some() && a.algos.len() != 1 {
        bail!("--out needs exactly one --algo");
    }
    let registry = AlgorithmRegistry::default();
    let mut ctx = RunContext::new(g, engine.as_ref());
    if let Some(v) = a.algo.arboricity {
        ctx = ctx.with_arboricity(ArboricityEstimate::user(v)?);
    }
    writeln!(out, "graph: n={} m={}", g.n(), g.m())?;
    for name in &a.algos {
        if name == "lp-only" {
            let sol = solve_lp_with(&build_lp1(g), engine.as_ref())?;
            writeln!(out, "L* = {:.4}", sol.objective())?;
            continue;
        }
        let algo = registry.create(name, &cfg)?;
        let r = algo.run(&ctx).with_context(|| format!("{name} failed"))?;
        let valid = g.is_dominating(&r.set);
        writeln!(
            out,
            "{}: size {} dominating {} time {:.3}s",
            r.algorithm,
            r.size(),
            if valid { "yes" } else { "no" },
            r.elapsed_secs()
        )?;
        if !valid {
            bail!("{name} returned a set that does not dominate the graph");
        }
        if a.out.is_some() {
            let mut w = open_output(&a.out)?;
            for v in r.set.to_sorted_vec() {
                writeln!(w, "{}", loaded.label(v))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn lowerbound(a: LowerboundArgs, out: &mut dyn Write) -> Result<()> {
    let loaded = a.input.load()?;
    let g = &loaded.graph;
    let engine = LpEngineRegistry::default().create(&a.lp_engine)?;
    if let Some(path) = &a.dump_lp {
        let mut w = open_output(&Some(path.clone()))?;
        build_lp1(g).dump(&mut w)?;
        w.flush()?;
    }
    match a.prefix_fraction {
        None => {
            let sol = solve_lp_with(&build_lp1(g), engine.as_ref())
                .context("LP1 could not be solved; try --prefix-fraction for the decomposition bound")?;
            writeln!(out, "L* = {:.4}", sol.objective())?;
        }
        Some(f) => {
            if !(f > 0.0 && f < 1.0) {
                bail!("--prefix-fraction must lie in (0, 1), got {f}");
            }
            let sep = prefix_separation(g, f);
            let b = decomposition_lower_bound(g, &sep, engine.as_ref())?;
            writeln!(
                out,
                "|A| = {} |B| = {} |C| = {}",
                sep.a.len(),
                sep.b.len(),
                sep.c.len()
            )?;
            writeln!(out, "M* = {:.4}", b.m_star)?;
            writeln!(out, "N* = {:.4}", b.n_star)?;
            writeln!(out, "max{{M*,N*}} = {:.4}", b.value())?;
        }
    }
    Ok(())
}

fn bench(a: BenchArgs, out: &mut dyn Write) -> Result<()> {
    let cfg = a.config()?;
    let specs = cfg.specs()?;
    let report = run_suite(&specs, cfg.threads)?;
    let text = render(&report, cfg.emit, cfg.render)?;
    match &a.out {
        Some(p) => {
            std::fs::write(p, &text).with_context(|| format!("cannot write {}", p.display()))?;
            writeln!(out, "{} rows -> {}", report.rows.len(), p.display())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn validate(a: ValidateArgs, out: &mut dyn Write) -> Result<()> {
    let loaded = a.input.load()?;
    let g = &loaded.graph;
    let text = std::fs::read_to_string(&a.set).with_context(|| format!("cannot read {}", a.set.display()))?;
    let mut set = VertexSet::new(g.n());
    for tok in text.lines().flat_map(|l| l.split('#').next().unwrap_or("").split_whitespace()) {
        let v = loaded
            .id_of(tok)
            .with_context(|| format!("vertex `{tok}` in {} is not in the graph", a.set.display()))?;
        set.insert(v);
    }
    if let Some(v) = g.vertices().find(|&v| !set.contains(v) && !g.neighbors(v).iter().any(|&u| set.contains(u))) {
        bail!("not dominating: vertex {} has no neighbor in the set", loaded.label(v));
    }
    writeln!(out, "dominating set of size {}", set.len())?;
    Ok(())
}

fn list(out: &mut dyn Write) -> Result<()> {
    writeln!(out, "algorithms:")?;
    writeln!(out, "  {:<12} LP1 optimum only", "lp-only")?;
    for (name, about) in AlgorithmRegistry::default().describe() {
        writeln!(out, "  {name:<12} {about}")?;
    }
    writeln!(out, "lp engines:")?;
    for (name, about) in LpEngineRegistry::default().describe() {
        writeln!(out, "  {name:<12} {about}")?;
    }
    writeln!(out, "suites: {}", Suite::ALL.map(|s| s.name()).join(", "))?;
    Ok(())
}
