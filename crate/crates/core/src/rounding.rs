//! Threshold rounding of fractional dominating sets.
//!
//! Every vertex whose weight reaches the threshold goes into `H`; every vertex
//! `H` leaves undominated is added as `U`. Variants differ only in how the
//! threshold is derived from an arboricity value.

use std::fmt;
use std::time::Instant;

use crate::error::{InputError, Result};
use crate::graph::{DominatingSetResult, Graph, VertexSet};
use crate::lp::{build_lp1, solve_lp_with, FractionalSolution, LpEngine};

/// Weights within this distance below the threshold still count as reaching it.
pub const THRESHOLD_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RoundingVariant {
    /// `1 / (3a)`
    A1 { arboricity: u32 },
    /// `1 / (2a + 1)`
    A2 { arboricity: u32 },
    /// `1 / (3a')` with `a'` the density lower bound.
    A1Prime { density: u32 },
    /// `1 / (2a' + 1)`
    A2Prime { density: u32 },
    /// `min(2 / a', 1)`
    A3 { density: u32 },
    Custom { threshold: f64 },
}

/// Variant names without their parameters, as used on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VariantKind {
    A1,
    A2,
    A1Prime,
    A2Prime,
    A3,
}

impl VariantKind {
    pub const ALL: [VariantKind; 5] = [
        VariantKind::A1,
        VariantKind::A2,
        VariantKind::A1Prime,
        VariantKind::A2Prime,
        VariantKind::A3,
    ];

    pub fn cli_name(self) -> &'static str {
        match self {
            VariantKind::A1 => "a1",
            VariantKind::A2 => "a2",
            VariantKind::A1Prime => "a1p",
            VariantKind::A2Prime => "a2p",
            VariantKind::A3 => "a3",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            VariantKind::A1 => "A1",
            VariantKind::A2 => "A2",
            VariantKind::A1Prime => "A1'",
            VariantKind::A2Prime => "A2'",
            VariantKind::A3 => "A3",
        }
    }

    pub fn parse(s: &str) -> std::result::Result<Self, InputError> {
        VariantKind::ALL
            .into_iter()
            .find(|k| k.cli_name() == s)
            .ok_or_else(|| {
                InputError::new(format!(
                    "unknown rounding variant `{s}` (expected a1, a2, a1p, a2p or a3)"
                ))
            })
    }

    /// Whether the variant's parameter is the density lower bound rather than
    /// an arboricity upper bound.
    pub fn uses_density(self) -> bool {
        matches!(self, VariantKind::A1Prime | VariantKind::A2Prime | VariantKind::A3)
    }

    pub fn with_value(self, value: u32) -> RoundingVariant {
        match self {
            VariantKind::A1 => RoundingVariant::A1 { arboricity: value },
            VariantKind::A2 => RoundingVariant::A2 { arboricity: value },
            VariantKind::A1Prime => RoundingVariant::A1Prime { density: value },
            VariantKind::A2Prime => RoundingVariant::A2Prime { density: value },
            VariantKind::A3 => RoundingVariant::A3 { density: value },
        }
    }
}

impl RoundingVariant {
    pub fn label(&self) -> String {
        match self {
            RoundingVariant::A1 { .. } => "A1".into(),
            RoundingVariant::A2 { .. } => "A2".into(),
            RoundingVariant::A1Prime { .. } => "A1'".into(),
            RoundingVariant::A2Prime { .. } => "A2'".into(),
            RoundingVariant::A3 { .. } => "A3".into(),
            RoundingVariant::Custom { threshold } => format!("t={threshold}"),
        }
    }
}

impl fmt::Display for RoundingVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

pub fn threshold_for(variant: RoundingVariant) -> std::result::Result<f64, InputError> {
    let positive = |a: u32| {
        if a == 0 {
            Err(InputError::new("arboricity must be a positive integer"))
        } else {
            Ok(a as f64)
        }
    };
    let t = match variant {
        RoundingVariant::A1 { arboricity: a } | RoundingVariant::A1Prime { density: a } => {
            1.0 / (3.0 * positive(a)?)
        }
        RoundingVariant::A2 { arboricity: a } | RoundingVariant::A2Prime { density: a } => {
            1.0 / (2.0 * positive(a)? + 1.0)
        }
        RoundingVariant::A3 { density } => (2.0 / positive(density)?).min(1.0),
        RoundingVariant::Custom { threshold } => {
            if threshold.is_nan() || threshold <= 0.0 {
                return Err(InputError::new(format!(
                    "custom threshold must be positive, got {threshold}"
                )));
            }
            threshold.min(1.0)
        }
    };
    Ok(t)
}

fn check_threshold(t: f64) -> std::result::Result<(), InputError> {
    if t > 0.0 && t <= 1.0 {
        Ok(())
    } else {
        Err(InputError::new(format!("threshold {t} outside (0, 1]")))
    }
}

#[inline]
fn heavy(x: f64, t: f64) -> bool {
    x >= t - THRESHOLD_SLACK
}

/// `H ∪ U` with `H = {v : x_v ≥ t}` and `U` the vertices with no member of `H`
/// in their closed neighborhood.
pub fn threshold_round(
    g: &Graph,
    x: &FractionalSolution,
    t: f64,
) -> std::result::Result<VertexSet, InputError> {
    check_threshold(t)?;
    let mut h = VertexSet::new(g.n());
    for v in g.vertices() {
        let w = x
            .weight(v)
            .ok_or_else(|| InputError::new(format!("no weight for vertex {v}")))?;
        if heavy(w, t) {
            h.insert(v);
        }
    }
    let mut out = h.clone();
    for v in g.vertices() {
        if !h.contains(v) && !g.neighbors(v).iter().any(|&u| h.contains(u)) {
            out.insert(v);
        }
    }
    Ok(out)
}

/// The rounding step restricted to `C`: `H = {v ∈ C : x_v ≥ t}` and
/// `U = C \ (H ∪ N(H))`, where `N(H)` is taken in the whole graph.
pub fn restricted_round(
    g: &Graph,
    x: &FractionalSolution,
    t: f64,
    c: &VertexSet,
) -> std::result::Result<RestrictedRounding, InputError> {
    check_threshold(t)?;
    let mut h = VertexSet::new(g.n());
    for v in c.iter() {
        let w = x
            .weight(v)
            .ok_or_else(|| InputError::new(format!("no weight for vertex {v} of C")))?;
        if heavy(w, t) {
            h.insert(v);
        }
    }
    let mut u = VertexSet::new(g.n());
    for v in c.iter() {
        if !h.contains(v) && !g.neighbors(v).iter().any(|&w| h.contains(w)) {
            u.insert(v);
        }
    }
    Ok(RestrictedRounding { heavy: h, uncovered: u })
}

#[derive(Debug, Clone)]
pub struct RestrictedRounding {
    pub heavy: VertexSet,
    pub uncovered: VertexSet,
}

impl RestrictedRounding {
    pub fn union(&self) -> VertexSet {
        let mut s = self.heavy.clone();
        s.union_with(&self.uncovered);
        s
    }
}

/// Solve the relaxation and round it: the whole A1/A2-style pipeline.
/// The result carries `lp_objective` and `threshold` details.
pub fn lp_round(
    g: &Graph,
    variant: RoundingVariant,
    engine: &dyn LpEngine,
) -> Result<DominatingSetResult> {
    let t = threshold_for(variant)?;
    let start = Instant::now();
    let x = solve_lp_with(&build_lp1(g), engine)?;
    let set = threshold_round(g, &x, t)?;
    Ok(DominatingSetResult::new(set, variant.label(), start.elapsed())
        .with_detail("lp_objective", x.objective())
        .with_detail("threshold", t))
}
