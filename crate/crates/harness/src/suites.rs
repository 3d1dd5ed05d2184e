//! Benchmark suites over the generated families, and the `key=value`
//! configuration that tunes them.

use std::str::FromStr;

use anyhow::{bail, Context, Result};
use domset_core::algorithms::AlgorithmConfig;
use domset_core::generators::FamilyParams;
use domset_core::greedy::TiePolicy;
use domset_core::rounding::VariantKind;

use crate::experiment::{AlgorithmSpec, ArboricitySource, ExperimentSpec, GraphSource, LowerBoundMode};
use crate::report::{Emit, RenderOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Hypercubes,
    Queens,
    KTrees,
    Traps,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Hypercubes, Suite::Queens, Suite::KTrees, Suite::Traps];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hypercubes => "hypercubes",
            Suite::Queens => "queens",
            Suite::KTrees => "ktrees",
            Suite::Traps => "traps",
        }
    }

    /// Inclusive range and step of the size parameter (d, k, n or p).
    fn default_range(self) -> (usize, usize, usize) {
        match self {
            Suite::Hypercubes => (5, 12, 1),
            Suite::Queens => (15, 30, 1),
            Suite::KTrees => (2000, 20000, 2000),
            Suite::Traps => (2, 10, 1),
        }
    }

    fn default_algorithms(self) -> &'static [&'static str] {
        match self {
            Suite::Traps => &["greedy", "a1", "a2", "a1p", "a2p", "a3"],
            _ => &["greedy", "a1", "hybrid-a1", "a2", "hybrid-a2"],
        }
    }
}

impl FromStr for Suite {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .with_context(|| format!("unknown suite `{s}` (expected hypercubes, queens, ktrees or traps)"))
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub suite: Suite,
    pub seed: u64,
    pub algorithms: Option<Vec<String>>,
    pub alpha: f64,
    pub tie: TiePolicy,
    pub variant: VariantKind,
    pub arboricity: Option<u32>,
    /// Use the decomposition bound with this prefix fraction instead of LP1.
    pub prefix_fraction: Option<f64>,
    /// LP1 size budget (nonzeros) before falling back to the decomposition
    /// bound.
    pub max_nonzeros: Option<usize>,
    pub from: Option<usize>,
    pub to: Option<usize>,
    pub step: Option<usize>,
    /// Tree width for the `ktrees` suite.
    pub k: usize,
    pub lp_engine: String,
    pub threads: usize,
    pub emit: Emit,
    pub render: RenderOptions,
}

impl BenchConfig {
    pub fn new(suite: Suite) -> Self {
        BenchConfig {
            suite,
            seed: 1,
            algorithms: None,
            alpha: 0.5,
            tie: TiePolicy::MinId,
            variant: VariantKind::A1,
            arboricity: None,
            prefix_fraction: None,
            max_nonzeros: None,
            from: None,
            to: None,
            step: None,
            k: 5,
            lp_engine: "highs".into(),
            threads: 1,
            emit: Emit::Csv,
            render: RenderOptions::default(),
        }
    }

    /// Applies one `key=value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        fn num<T: FromStr>(key: &str, value: &str) -> Result<T>
        where
            T::Err: std::fmt::Display,
        {
            value
                .parse()
                .map_err(|e| anyhow::anyhow!("bad value `{value}` for `{key}`: {e}"))
        }
        fn flag(key: &str, value: &str) -> Result<bool> {
            match value {
                "true" | "yes" | "1" | "on" => Ok(true),
                "false" | "no" | "0" | "off" => Ok(false),
                _ => bail!("bad value `{value}` for `{key}`: expected true or false"),
            }
        }
        match key {
            "suite" => self.suite = value.parse()?,
            "seed" => self.seed = num(key, value)?,
            "algos" | "algorithms" => {
                let names: Vec<String> = value
                    .split(',')
                    .map(|s| s.trim().to_owned())
                    .filter(|s| !s.is_empty())
                    .collect();
                if names.is_empty() {
                    bail!("`{key}` needs at least one algorithm");
                }
                self.algorithms = Some(names);
            }
            "alpha" => self.alpha = num(key, value)?,
            "tie" => self.tie = value.parse()?,
            "variant" => self.variant = VariantKind::parse(value)?,
            "arboricity" => self.arboricity = Some(num(key, value)?),
            "prefix_fraction" | "prefix-fraction" => self.prefix_fraction = Some(num(key, value)?),
            "max_nonzeros" | "max-nonzeros" => self.max_nonzeros = Some(num(key, value)?),
            "from" => self.from = Some(num(key, value)?),
            "to" => self.to = Some(num(key, value)?),
            "step" => self.step = Some(num(key, value)?),
            "k" => self.k = num(key, value)?,
            "lp_engine" | "lp-engine" => self.lp_engine = value.to_owned(),
            "threads" => self.threads = num(key, value)?,
            "emit" => self.emit = value.parse()?,
            "timings" => self.render.timings = flag(key, value)?,
            "sizes" => self.render.sizes = flag(key, value)?,
            other => bail!("unknown configuration key `{other}`"),
        }
        Ok(())
    }

    /// Applies a `key=value` file: one setting per line, `#` starts a
    /// comment.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .with_context(|| format!("line {}: expected key=value, found `{line}`", i + 1))?;
            self.set(key.trim(), value.trim())
                .with_context(|| format!("line {}", i + 1))?;
        }
        Ok(())
    }

    fn algorithm_config(&self) -> AlgorithmConfig {
        AlgorithmConfig {
            tie: self.tie,
            alpha: self.alpha,
            arboricity: self.arboricity,
            variant: self.variant,
            ..AlgorithmConfig::default()
        }
    }

    fn parameters(&self) -> Result<Vec<usize>> {
        let (lo, hi, st) = self.suite.default_range();
        let (lo, hi, st) = (self.from.unwrap_or(lo), self.to.unwrap_or(hi), self.step.unwrap_or(st));
        if st == 0 {
            bail!("step must be positive");
        }
        if lo > hi {
            bail!("empty range {lo}..={hi}");
        }
        Ok((lo..=hi).step_by(st).collect())
    }

    pub fn specs(&self) -> Result<Vec<ExperimentSpec>> {
        let names: Vec<String> = match &self.algorithms {
            Some(v) => v.clone(),
            None => self.suite.default_algorithms().iter().map(|s| s.to_string()).collect(),
        };
        let cfg = self.algorithm_config();
        let algos: Vec<AlgorithmSpec> = names.iter().map(|n| AlgorithmSpec::new(n, cfg.clone())).collect();
        let bound = match self.prefix_fraction {
            Some(f) => LowerBoundMode::Decomposition { prefix_fraction: f },
            None => LowerBoundMode::Lp1 {
                fallback: true,
                max_nonzeros: self.max_nonzeros,
            },
        };
        let mut families = Vec::new();
        for x in self.parameters()? {
            match self.suite {
                Suite::Hypercubes => families.push(FamilyParams::Hypercube { d: x as u32 }),
                Suite::Queens => families.push(FamilyParams::Queens { k: x as u32 }),
                Suite::KTrees => families.push(FamilyParams::KTree {
                    n: x,
                    k: self.k,
                    seed: self.seed.wrapping_add(x as u64),
                }),
                Suite::Traps => {
                    families.push(FamilyParams::TrapStars { p: x as u32 });
                    families.push(FamilyParams::TrapClique { p: x as u32 });
                }
            }
        }
        let specs = families
            .into_iter()
            .map(|p| {
                let mut spec = ExperimentSpec::new(p.to_string(), GraphSource::Generated(p), algos.clone());
                spec.bound = bound;
                spec.lp_engine = self.lp_engine.clone();
                spec.arboricity = match (self.arboricity, p) {
                    (Some(v), _) => ArboricitySource::User(v),
                    (None, FamilyParams::TrapClique { .. }) => ArboricitySource::Density,
                    (None, _) => ArboricitySource::Family,
                };
                spec
            })
            .collect::<Vec<_>>();
        for s in &specs {
            s.validate()?;
        }
        Ok(specs)
    }
}
