//! Greedy prefix forcing followed by LP rounding of what the prefix leaves
//! undominated.
//!
//! 1. Run greedy and keep the first `⌈α·d⌉` selections as `S`.
//! 2. Solve the partial program with `S` forced in.
//! 3. With `A = S`, `B = N(S) \ S`, `C = V \ (A ∪ B)`, round the partial
//!    solution on `C` only.
//! 4. Return `S ∪ H ∪ U`.

use std::time::Instant;

use crate::error::{InputError, Result};
use crate::graph::{DominatingSetResult, Graph};
use crate::greedy::{greedy_dominating_set, TiePolicy};
use crate::lp::{build_partial_lp, solve_lp_with, LpEngine, Separation};
use crate::rounding::{restricted_round, threshold_for, RoundingVariant};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HybridConfig {
    pub alpha: f64,
    pub variant: RoundingVariant,
    pub tie: TiePolicy,
}

impl HybridConfig {
    pub fn new(alpha: f64, variant: RoundingVariant) -> Self {
        HybridConfig {
            alpha,
            variant,
            tie: TiePolicy::default(),
        }
    }
}

/// Everything a hybrid run measured besides the output set.
#[derive(Debug, Clone)]
pub struct HybridOutcome {
    pub result: DominatingSetResult,
    pub greedy_size: usize,
    /// `|S| = |A|`
    pub prefix_len: usize,
    pub separator_len: usize,
    pub remainder_len: usize,
    /// Optimum of the partial program.
    pub partial_objective: f64,
    /// `X(C)`: partial-program weight on `C`.
    pub weight_on_remainder: f64,
    pub heavy_len: usize,
    pub uncovered_len: usize,
    pub threshold: f64,
}

/// `⌈α·d⌉`, computed so that exact products such as `0.75 · 4` do not round up.
pub fn prefix_length(alpha: f64, d: usize) -> usize {
    let raw = (alpha * d as f64 - 1e-9).ceil();
    (raw.max(0.0) as usize).min(d)
}

pub fn hybrid_dominating_set(
    g: &Graph,
    cfg: &HybridConfig,
    engine: &dyn LpEngine,
) -> Result<HybridOutcome> {
    if !(0.0..=1.0).contains(&cfg.alpha) {
        return Err(InputError::new(format!("alpha must lie in [0, 1], got {}", cfg.alpha)).into());
    }
    let t = threshold_for(cfg.variant)?;
    let start = Instant::now();

    let greedy = greedy_dominating_set(g, cfg.tie);
    let d = greedy.size();
    let prefix_len = prefix_length(cfg.alpha, d);
    let s = greedy.prefix(prefix_len);

    let x = solve_lp_with(&build_partial_lp(g, &s), engine)?;
    let sep = Separation::from_set(g, &s);
    let rounded = restricted_round(g, &x, t, &sep.c)?;

    let mut set = s;
    set.union_with(&rounded.heavy);
    set.union_with(&rounded.uncovered);
    let elapsed = start.elapsed();

    let weight_on_remainder = x.weight_of(&sep.c);
    let label = format!("{} Hybrid", cfg.variant.label());
    let result = DominatingSetResult::new(set, label, elapsed)
        .with_detail("alpha", cfg.alpha)
        .with_detail("prefix_len", prefix_len as f64)
        .with_detail("partial_objective", x.objective())
        .with_detail("weight_on_c", weight_on_remainder)
        .with_detail("threshold", t);
    Ok(HybridOutcome {
        result,
        greedy_size: d,
        prefix_len,
        separator_len: sep.b.len(),
        remainder_len: sep.c.len(),
        partial_objective: x.objective(),
        weight_on_remainder,
        heavy_len: rounded.heavy.len(),
        uncovered_len: rounded.uncovered.len(),
        threshold: t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{hypercube, random_ktree};
    use crate::lp::default_engine;
    use crate::rounding::lp_round;

    #[test]
    fn prefix_length_rounding() {
        assert_eq!(prefix_length(0.75, 4), 3);
        assert_eq!(prefix_length(0.5, 5), 3);
        assert_eq!(prefix_length(0.0, 5), 0);
        assert_eq!(prefix_length(1.0, 5), 5);
        assert_eq!(prefix_length(0.01, 5), 1);
        assert_eq!(prefix_length(0.5, 0), 0);
    }

    #[test]
    fn alpha_out_of_range() {
        let g = hypercube(3).unwrap();
        let cfg = HybridConfig::new(1.5, RoundingVariant::A1 { arboricity: 2 });
        assert!(hybrid_dominating_set(&g, &cfg, default_engine()).is_err());
        let cfg = HybridConfig::new(f64::NAN, RoundingVariant::A1 { arboricity: 2 });
        assert!(hybrid_dominating_set(&g, &cfg, default_engine()).is_err());
    }

    #[test]
    fn alpha_one_is_greedy() {
        let g = random_ktree(200, 3, 4).unwrap();
        let cfg = HybridConfig::new(1.0, RoundingVariant::A1 { arboricity: 3 });
        let out = hybrid_dominating_set(&g, &cfg, default_engine()).unwrap();
        let greedy = greedy_dominating_set(&g, TiePolicy::MinId);
        assert_eq!(out.result.set, greedy.set);
        assert_eq!(out.remainder_len, 0);
        assert_eq!(out.partial_objective, 0.0);
    }

    #[test]
    fn alpha_zero_is_lp_round() {
        let g = random_ktree(200, 3, 4).unwrap();
        let variant = RoundingVariant::A2 { arboricity: 3 };
        let out = hybrid_dominating_set(&g, &HybridConfig::new(0.0, variant), default_engine()).unwrap();
        let plain = lp_round(&g, variant, default_engine()).unwrap();
        assert_eq!(out.result.set, plain.set);
        assert_eq!(out.prefix_len, 0);
        assert!((out.partial_objective - plain.detail("lp_objective").unwrap()).abs() < 1e-9);
    }

    #[test]
    fn half_prefix_is_valid() {
        let g = hypercube(6).unwrap();
        let cfg = HybridConfig::new(0.5, RoundingVariant::A1 { arboricity: 4 });
        let out = hybrid_dominating_set(&g, &cfg, default_engine()).unwrap();
        assert!(g.is_dominating(&out.result.set));
        assert_eq!(out.prefix_len, prefix_length(0.5, out.greedy_size));
        assert_eq!(out.prefix_len + out.separator_len + out.remainder_len, g.n());
        assert_eq!(out.result.algorithm, "A1 Hybrid");
    }
}
