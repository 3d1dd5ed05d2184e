//! Name-addressable dominating-set algorithms.
//!
//! Every algorithm implements [`DominatingSetAlgorithm`] and is registered in
//! an [`AlgorithmRegistry`] under the name used on the command line. The
//! registry builds instances from an [`AlgorithmConfig`], so callers pick
//! algorithms at runtime without knowing their concrete types.

use std::time::Instant;

use crate::arboricity::{density_lower_bound, ArboricityEstimate, EstimateKind};
use crate::error::{InputError, Result};
use crate::exact::{exact_gamma, OracleLimits};
use crate::graph::{DominatingSetResult, Graph};
use crate::greedy::{greedy_dominating_set, TiePolicy};
use crate::hybrid::{hybrid_dominating_set, HybridConfig};
use crate::lp::LpEngine;
use crate::rounding::{lp_round, VariantKind};

/// Inputs shared by all algorithms run on one graph.
pub struct RunContext<'a> {
    pub graph: &'a Graph,
    pub engine: &'a dyn LpEngine,
    /// Arboricity upper bound for A1/A2-style thresholds, when one is known.
    pub arboricity: Option<ArboricityEstimate>,
    pub density: ArboricityEstimate,
}

impl<'a> RunContext<'a> {
    pub fn new(graph: &'a Graph, engine: &'a dyn LpEngine) -> Self {
        RunContext {
            graph,
            engine,
            arboricity: None,
            density: density_lower_bound(graph),
        }
    }

    pub fn with_arboricity(mut self, estimate: ArboricityEstimate) -> Self {
        self.arboricity = Some(estimate);
        self
    }

    /// Estimate a rounding variant would use: an explicit override first,
    /// then the density bound for the primed variants, then the context's
    /// upper bound, falling back to the density bound.
    pub fn estimate_for(&self, kind: VariantKind, overridden: Option<u32>) -> ArboricityEstimate {
        if let Some(value) = overridden {
            return ArboricityEstimate {
                value,
                kind: EstimateKind::UserSupplied,
                family: None,
            };
        }
        if kind.uses_density() {
            return self.density.clone();
        }
        self.arboricity.clone().unwrap_or_else(|| self.density.clone())
    }
}

pub trait DominatingSetAlgorithm: Send + Sync {
    /// Column label, e.g. `Greedy` or `A2 Hybrid`.
    fn label(&self) -> String;

    fn run(&self, ctx: &RunContext<'_>) -> Result<DominatingSetResult>;
}

/// Knobs an algorithm may read; each ignores the ones it has no use for.
#[derive(Debug, Clone)]
pub struct AlgorithmConfig {
    pub tie: TiePolicy,
    pub alpha: f64,
    pub arboricity: Option<u32>,
    /// Rounding variant for the bare `hybrid` name.
    pub variant: VariantKind,
    pub oracle: OracleLimits,
}

impl Default for AlgorithmConfig {
    fn default() -> Self {
        AlgorithmConfig {
            tie: TiePolicy::MinId,
            alpha: 0.5,
            arboricity: None,
            variant: VariantKind::A1,
            oracle: OracleLimits::default(),
        }
    }
}

pub struct Greedy {
    pub tie: TiePolicy,
}

impl DominatingSetAlgorithm for Greedy {
    fn label(&self) -> String {
        "Greedy".into()
    }

    fn run(&self, ctx: &RunContext<'_>) -> Result<DominatingSetResult> {
        let r = greedy_dominating_set(ctx.graph, self.tie).into_result();
        Ok(DominatingSetResult {
            algorithm: self.label(),
            ..r
        })
    }
}

pub struct LpRounding {
    pub kind: VariantKind,
    pub arboricity: Option<u32>,
}

impl DominatingSetAlgorithm for LpRounding {
    fn label(&self) -> String {
        self.kind.label().into()
    }

    fn run(&self, ctx: &RunContext<'_>) -> Result<DominatingSetResult> {
        let est = ctx.estimate_for(self.kind, self.arboricity);
        let r = lp_round(ctx.graph, self.kind.with_value(est.value), ctx.engine)?;
        Ok(r.with_detail("arboricity", est.value as f64))
    }
}

pub struct Hybrid {
    pub kind: VariantKind,
    pub alpha: f64,
    pub tie: TiePolicy,
    pub arboricity: Option<u32>,
}

impl DominatingSetAlgorithm for Hybrid {
    fn label(&self) -> String {
        format!("{} Hybrid", self.kind.label())
    }

    fn run(&self, ctx: &RunContext<'_>) -> Result<DominatingSetResult> {
        let est = ctx.estimate_for(self.kind, self.arboricity);
        let cfg = HybridConfig {
            alpha: self.alpha,
            variant: self.kind.with_value(est.value),
            tie: self.tie,
        };
        let out = hybrid_dominating_set(ctx.graph, &cfg, ctx.engine)?;
        Ok(out.result.with_detail("arboricity", est.value as f64))
    }
}

pub struct Exact {
    pub limits: OracleLimits,
}

impl DominatingSetAlgorithm for Exact {
    fn label(&self) -> String {
        "Exact".into()
    }

    fn run(&self, ctx: &RunContext<'_>) -> Result<DominatingSetResult> {
        let start = Instant::now();
        let r = exact_gamma(ctx.graph, &self.limits)?;
        if !r.complete {
            log::warn!("exact search hit its time budget; reporting best set found");
        }
        Ok(DominatingSetResult::new(r.set, self.label(), start.elapsed())
            .with_detail("complete", if r.complete { 1.0 } else { 0.0 }))
    }
}

type Factory = Box<dyn Fn(&AlgorithmConfig) -> Result<Box<dyn DominatingSetAlgorithm>> + Send + Sync>;

struct Entry {
    name: String,
    about: String,
    factory: Factory,
}

pub struct AlgorithmRegistry {
    entries: Vec<Entry>,
}

impl AlgorithmRegistry {
    pub fn empty() -> Self {
        AlgorithmRegistry { entries: Vec::new() }
    }

    pub fn with_builtins() -> Self {
        let mut r = Self::empty();
        r.register("greedy", "linear-time greedy", |cfg| Ok(Box::new(Greedy { tie: cfg.tie })));
        for kind in VariantKind::ALL {
            r.register(
                kind.cli_name(),
                &format!("LP relaxation rounded with the {} threshold", kind.label()),
                move |cfg| {
                    Ok(Box::new(LpRounding {
                        kind,
                        arboricity: cfg.arboricity,
                    }))
                },
            );
        }
        for kind in VariantKind::ALL {
            r.register(
                &format!("hybrid-{}", kind.cli_name()),
                &format!("greedy prefix plus {} rounding of the rest", kind.label()),
                move |cfg| {
                    Ok(Box::new(Hybrid {
                        kind,
                        alpha: cfg.alpha,
                        tie: cfg.tie,
                        arboricity: cfg.arboricity,
                    }))
                },
            );
        }
        r.register("hybrid", "hybrid with the variant from the configuration", |cfg| {
            Ok(Box::new(Hybrid {
                kind: cfg.variant,
                alpha: cfg.alpha,
                tie: cfg.tie,
                arboricity: cfg.arboricity,
            }))
        });
        r.register("exact", "branch and bound, tiny graphs only", |cfg| {
            Ok(Box::new(Exact { limits: cfg.oracle }))
        });
        r
    }

    /// Registers `factory` under `name`, replacing any previous entry.
    pub fn register<F>(&mut self, name: &str, about: &str, factory: F)
    where
        F: Fn(&AlgorithmConfig) -> Result<Box<dyn DominatingSetAlgorithm>> + Send + Sync + 'static,
    {
        self.entries.retain(|e| e.name != name);
        self.entries.push(Entry {
            name: name.to_owned(),
            about: about.to_owned(),
            factory: Box::new(factory),
        });
    }

    pub fn create(&self, name: &str, cfg: &AlgorithmConfig) -> Result<Box<dyn DominatingSetAlgorithm>> {
        match self.entries.iter().find(|e| e.name == name) {
            Some(e) => (e.factory)(cfg),
            None => Err(InputError::new(format!(
                "unknown algorithm `{name}` (available: {})",
                self.names().join(", ")
            ))
            .into()),
        }
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.name.as_str()).collect()
    }

    pub fn describe(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|e| (e.name.as_str(), e.about.as_str()))
    }
}

impl Default for AlgorithmRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}
