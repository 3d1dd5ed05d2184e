//! Arboricity estimates used to set rounding thresholds. Exact arboricity is
//! never computed; callers pick between the density lower bound, a per-family
//! upper bound, or a value they supply.

use std::fmt;

use crate::error::InputError;
use crate::generators::FamilyParams;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstimateKind {
    DensityLowerBound,
    FamilyUpperBound,
    UserSupplied,
}

impl EstimateKind {
    pub fn name(self) -> &'static str {
        match self {
            EstimateKind::DensityLowerBound => "density",
            EstimateKind::FamilyUpperBound => "family",
            EstimateKind::UserSupplied => "user",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArboricityEstimate {
    pub value: u32,
    pub kind: EstimateKind,
    /// Family the bound came from, for family upper bounds.
    pub family: Option<String>,
}

impl ArboricityEstimate {
    pub fn user(value: u32) -> Result<Self, InputError> {
        if value == 0 {
            return Err(InputError::new("arboricity must be a positive integer"));
        }
        Ok(ArboricityEstimate {
            value,
            kind: EstimateKind::UserSupplied,
            family: None,
        })
    }
}

impl fmt::Display for ArboricityEstimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Some(fam) => write!(f, "{} ({} {})", self.value, self.kind.name(), fam),
            None => write!(f, "{} ({})", self.value, self.kind.name()),
        }
    }
}

/// Families with a known arboricity upper bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundedFamily {
    Planar,
    KPlanar { k: u32 },
    KTree { n: usize, k: usize },
    Hypercube { d: u32 },
    Queens { k: u32 },
}

impl BoundedFamily {
    /// Generated families that carry a bound. The trap constructions do not:
    /// trap-clique's arboricity grows with `p`.
    pub fn from_params(params: &FamilyParams) -> Option<Self> {
        match *params {
            FamilyParams::Hypercube { d } => Some(BoundedFamily::Hypercube { d }),
            FamilyParams::Queens { k } => Some(BoundedFamily::Queens { k }),
            FamilyParams::KTree { n, k, .. } => Some(BoundedFamily::KTree { n, k }),
            FamilyParams::TrapStars { .. } => Some(BoundedFamily::Planar),
            FamilyParams::TrapClique { .. } => None,
        }
    }

    fn describe(&self) -> String {
        match self {
            BoundedFamily::Planar => "planar".into(),
            BoundedFamily::KPlanar { k } => format!("{k}-planar"),
            BoundedFamily::KTree { n, k } => format!("{k}-tree on {n} vertices"),
            BoundedFamily::Hypercube { d } => format!("hypercube d={d}"),
            BoundedFamily::Queens { k } => format!("queens k={k}"),
        }
    }
}

/// `⌈m / (n - 1)⌉`, at least 1. Graphs with fewer than two vertices get 1.
pub fn density_lower_bound(g: &Graph) -> ArboricityEstimate {
    let (n, m) = (g.n(), g.m());
    let value = if n <= 1 { 1 } else { m.div_ceil(n - 1).max(1) };
    ArboricityEstimate {
        value: value as u32,
        kind: EstimateKind::DensityLowerBound,
        family: None,
    }
}

pub fn family_upper_bound(family: BoundedFamily) -> Result<ArboricityEstimate, InputError> {
    let value: u32 = match family {
        BoundedFamily::Planar => 3,
        BoundedFamily::KPlanar { k } => (8.0 * (k as f64).sqrt()).ceil() as u32,
        BoundedFamily::KTree { n, k } => {
            if n < 2 {
                return Err(InputError::new("k-tree bound needs n >= 2"));
            }
            // ⌈k − (k/2)(k−1)/(n−1)⌉ = ⌈(2k(n−1) − k(k−1)) / (2(n−1))⌉
            let (n, k) = (n as i64, k as i64);
            let num = 2 * k * (n - 1) - k * (k - 1);
            let den = 2 * (n - 1);
            num.div_euclid(den) as u32 + u32::from(num.rem_euclid(den) != 0)
        }
        BoundedFamily::Hypercube { d } => d / 2 + 1,
        BoundedFamily::Queens { k } => 3 * k.saturating_sub(1),
    };
    Ok(ArboricityEstimate {
        value: value.max(1),
        kind: EstimateKind::FamilyUpperBound,
        family: Some(family.describe()),
    })
}

/// Family bound for generated graphs; families without one must be given an
/// explicit value.
pub fn family_upper_bound_for(params: &FamilyParams) -> Result<ArboricityEstimate, InputError> {
    match BoundedFamily::from_params(params) {
        Some(f) => family_upper_bound(f),
        None => Err(InputError::new(format!(
            "no arboricity bound is known for {}; pass --arboricity",
            params.family_name()
        ))),
    }
}
