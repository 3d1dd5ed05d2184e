//! One experiment row: build or load a graph, compute a lower bound, run the
//! requested algorithms and check every set they return.

use std::fmt;
use std::path::PathBuf;
use std::thread;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use domset_core::algorithms::{AlgorithmConfig, AlgorithmRegistry, RunContext};
use domset_core::arboricity::{density_lower_bound, family_upper_bound_for, ArboricityEstimate};
use domset_core::generators::FamilyParams;
use domset_core::greedy::{greedy_dominating_set, TiePolicy};
use domset_core::hybrid::prefix_length;
use domset_core::ingest::{read_graph, GraphFormat};
use domset_core::lp::{
    build_lp1, decomposition_lower_bound, solve_lp_with, LpEngine, LpEngineRegistry, Separation,
};
use domset_core::{Graph, VertexSet};

/// Prefix fraction used when LP1 is abandoned for the decomposition bound.
pub const FALLBACK_PREFIX_FRACTION: f64 = 0.75;

#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    Generated(FamilyParams),
    File { path: PathBuf, format: GraphFormat },
}

impl GraphSource {
    pub fn load(&self) -> Result<Graph> {
        match self {
            GraphSource::Generated(p) => Ok(p.generate()?),
            GraphSource::File { path, format } => {
                let file = std::fs::File::open(path)
                    .with_context(|| format!("cannot open {}", path.display()))?;
                let loaded = read_graph(std::io::BufReader::new(file), *format)
                    .with_context(|| format!("cannot parse {} as {format}", path.display()))?;
                for d in &loaded.diagnostics {
                    log::warn!("{}: {d}", path.display());
                }
                Ok(loaded.graph)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ArboricitySource {
    /// The generator family's proven upper bound.
    Family,
    /// `⌈m/(n−1)⌉`; a lower bound, so A1/A2 guarantees no longer apply.
    Density,
    User(u32),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LowerBoundMode {
    /// LP1's optimum. With `fallback`, an LP failure or an LP over
    /// `max_nonzeros` switches to the decomposition bound instead of failing.
    Lp1 { fallback: bool, max_nonzeros: Option<usize> },
    Decomposition { prefix_fraction: f64 },
}

impl Default for LowerBoundMode {
    fn default() -> Self {
        LowerBoundMode::Lp1 {
            fallback: true,
            max_nonzeros: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct AlgorithmSpec {
    /// Registry name, e.g. `greedy` or `hybrid-a1`.
    pub name: String,
    pub config: AlgorithmConfig,
}

impl AlgorithmSpec {
    pub fn new(name: &str, config: AlgorithmConfig) -> Self {
        AlgorithmSpec {
            name: name.to_owned(),
            config,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub graph_id: String,
    pub source: GraphSource,
    pub algorithms: Vec<AlgorithmSpec>,
    pub arboricity: ArboricitySource,
    pub bound: LowerBoundMode,
    pub lp_engine: String,
}

impl ExperimentSpec {
    pub fn new(graph_id: impl Into<String>, source: GraphSource, algorithms: Vec<AlgorithmSpec>) -> Self {
        ExperimentSpec {
            graph_id: graph_id.into(),
            source,
            algorithms,
            arboricity: ArboricitySource::Family,
            bound: LowerBoundMode::default(),
            lp_engine: "highs".into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.algorithms.is_empty() {
            bail!("experiment `{}` lists no algorithms", self.graph_id);
        }
        if let LowerBoundMode::Decomposition { prefix_fraction } = self.bound {
            if !(prefix_fraction > 0.0 && prefix_fraction < 1.0) {
                bail!("prefix fraction must lie in (0, 1), got {prefix_fraction}");
            }
        }
        if let ArboricitySource::User(0) = self.arboricity {
            bail!("arboricity must be at least 1");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundKind {
    Lp1,
    Decomposition { prefix_fraction: f64, m_star: f64, n_star: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowerBound {
    pub value: f64,
    pub kind: BoundKind,
}

impl LowerBound {
    /// Column header for the bound: `L*` or `max{M*,N*}`.
    pub fn label(&self) -> &'static str {
        match self.kind {
            BoundKind::Lp1 => "L*",
            BoundKind::Decomposition { .. } => "max{M*,N*}",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmOutcome {
    pub name: String,
    pub label: String,
    pub size: usize,
    pub ratio: f64,
    pub elapsed_secs: f64,
    pub valid: bool,
    pub set: VertexSet,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub bound: LowerBound,
    /// Estimate handed to A1/A2-style thresholds; `None` means each algorithm
    /// fell back to the density bound.
    pub arboricity: Option<ArboricityEstimate>,
    pub outcomes: Vec<AlgorithmOutcome>,
}

impl ReportRow {
    pub fn outcome(&self, name: &str) -> Option<&AlgorithmOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ExperimentReport {
    pub rows: Vec<ReportRow>,
}

/// An algorithm returned a set that does not dominate the graph.
#[derive(Debug)]
pub struct InvalidOutput {
    pub graph_id: String,
    pub algorithm: String,
}

impl fmt::Display for InvalidOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} returned a non-dominating set on {}; refusing to report it",
            self.algorithm, self.graph_id
        )
    }
}

impl std::error::Error for InvalidOutput {}

pub fn lower_bound(g: &Graph, mode: LowerBoundMode, engine: &dyn LpEngine) -> Result<LowerBound> {
    match mode {
        LowerBoundMode::Decomposition { prefix_fraction } => decomposition(g, prefix_fraction, engine),
        LowerBoundMode::Lp1 { fallback, max_nonzeros } => {
            let model = build_lp1(g);
            if let Some(cap) = max_nonzeros.filter(|&c| model.num_nonzeros() > c) {
                if fallback {
                    log::info!(
                        "LP1 has {} nonzeros (budget {cap}); using the decomposition bound",
                        model.num_nonzeros()
                    );
                    return decomposition(g, FALLBACK_PREFIX_FRACTION, engine);
                }
                bail!(
                    "LP1 has {} nonzeros, over the budget of {cap}; use the decomposition bound (--prefix-fraction)",
                    model.num_nonzeros()
                );
            }
            match solve_lp_with(&model, engine) {
                Ok(sol) => Ok(LowerBound {
                    value: sol.objective(),
                    kind: BoundKind::Lp1,
                }),
                Err(e) if fallback => {
                    log::warn!("LP1 failed ({e}); using the decomposition bound");
                    decomposition(g, FALLBACK_PREFIX_FRACTION, engine)
                }
                Err(e) => Err(anyhow!(e))
                    .context("LP1 could not be solved; try the decomposition bound (--prefix-fraction)"),
            }
        }
    }
}

/// Separation whose `A` is a greedy prefix of the given fraction.
pub fn prefix_separation(g: &Graph, prefix_fraction: f64) -> Separation {
    let greedy = greedy_dominating_set(g, TiePolicy::MinId);
    let s = greedy.prefix(prefix_length(prefix_fraction, greedy.size()));
    Separation::from_set(g, &s)
}

fn decomposition(g: &Graph, prefix_fraction: f64, engine: &dyn LpEngine) -> Result<LowerBound> {
    let sep = prefix_separation(g, prefix_fraction);
    let b = decomposition_lower_bound(g, &sep, engine)?;
    Ok(LowerBound {
        value: b.value(),
        kind: BoundKind::Decomposition {
            prefix_fraction,
            m_star: b.m_star,
            n_star: b.n_star,
        },
    })
}

fn arboricity_estimate(spec: &ExperimentSpec, g: &Graph) -> Result<Option<ArboricityEstimate>> {
    Ok(match (spec.arboricity, &spec.source) {
        (ArboricitySource::User(v), _) => Some(ArboricityEstimate::user(v)?),
        (ArboricitySource::Density, _) => Some(density_lower_bound(g)),
        (ArboricitySource::Family, GraphSource::Generated(p)) => Some(family_upper_bound_for(p)?),
        // No family for a file: algorithms fall back to the density bound.
        (ArboricitySource::Family, GraphSource::File { .. }) => None,
    })
}

/// Builds the graph once, computes the bound, runs and checks every
/// algorithm. Timing covers each algorithm call only.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentReport> {
    Ok(ExperimentReport {
        rows: vec![run_row(spec, &AlgorithmRegistry::default(), &LpEngineRegistry::default())?],
    })
}

pub fn run_row(spec: &ExperimentSpec, algos: &AlgorithmRegistry, engines: &LpEngineRegistry) -> Result<ReportRow> {
    spec.validate()?;
    let engine = engines.create(&spec.lp_engine)?;
    let g = spec.source.load()?;
    let bound = lower_bound(&g, spec.bound, engine.as_ref())
        .with_context(|| format!("lower bound for {}", spec.graph_id))?;
    let mut ctx = RunContext::new(&g, engine.as_ref());
    let arboricity = arboricity_estimate(spec, &g)?;
    if let Some(est) = arboricity.clone() {
        ctx = ctx.with_arboricity(est);
    }
    let mut outcomes = Vec::with_capacity(spec.algorithms.len());
    for a in &spec.algorithms {
        let algo = algos.create(&a.name, &a.config)?;
        let start = Instant::now();
        let result = algo
            .run(&ctx)
            .with_context(|| format!("{} on {}", a.name, spec.graph_id))?;
        let elapsed_secs = start.elapsed().as_secs_f64();
        if !g.is_dominating(&result.set) {
            return Err(InvalidOutput {
                graph_id: spec.graph_id.clone(),
                algorithm: a.name.clone(),
            }
            .into());
        }
        let size = result.size();
        outcomes.push(AlgorithmOutcome {
            name: a.name.clone(),
            label: algo.label(),
            size,
            ratio: ratio(size, bound.value),
            elapsed_secs,
            valid: true,
            set: result.set,
        });
    }
    Ok(ReportRow {
        graph_id: spec.graph_id.clone(),
        n: g.n(),
        m: g.m(),
        bound,
        arboricity,
        outcomes,
    })
}

/// `size / bound`; a zero bound only arises for the empty graph, where the
/// empty set is optimal.
pub fn ratio(size: usize, bound: f64) -> f64 {
    if bound <= 0.0 {
        if size == 0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        size as f64 / bound
    }
}

/// Runs every spec, up to `threads` at a time, and returns rows in input
/// order.
pub fn run_suite(specs: &[ExperimentSpec], threads: usize) -> Result<ExperimentReport> {
    let algos = AlgorithmRegistry::default();
    let engines = LpEngineRegistry::default();
    let threads = threads.max(1).min(specs.len().max(1));
    let mut slots: Vec<Option<Result<ReportRow>>> = (0..specs.len()).map(|_| None).collect();
    let next = std::sync::atomic::AtomicUsize::new(0);
    let done = std::sync::Mutex::new(&mut slots);
    thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= specs.len() {
                    break;
                }
                let row = run_row(&specs[i], &algos, &engines);
                done.lock().expect("result lock poisoned")[i] = Some(row);
            });
        }
    });
    let rows = slots
        .into_iter()
        .map(|r| r.expect("every spec is processed"))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentReport { rows })
}
