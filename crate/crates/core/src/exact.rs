//! Exact domination number for tiny graphs by branch and bound.
//!
//! Every dominating set meets `N[u]` for every `u`, so the search repeatedly
//! picks the lowest undominated vertex and branches on the members of its
//! closed neighborhood. Neighborhoods are `u128` masks, which caps the graph
//! at 128 vertices.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::greedy::{greedy_dominating_set, TiePolicy};

pub const HARD_VERTEX_CAP: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleLimits {
    pub max_vertices: usize,
    pub time_budget: Option<Duration>,
    /// A known lower bound on γ, typically `⌈L*⌉`; the search stops as soon
    /// as it finds a set this small.
    pub lower_bound: Option<usize>,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 32,
            time_budget: Some(Duration::from_secs(60)),
            lower_bound: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExactResult {
    pub size: usize,
    pub set: VertexSet,
    /// False when the time budget ran out before optimality was proven; `set`
    /// is then the best dominating set found.
    pub complete: bool,
    pub nodes: u64,
}

struct Search<'a> {
    closed: &'a [u128],
    full: u128,
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
}

impl Search<'_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    /// Vertices still needed to dominate `undominated`, at least.
    fn lower_bound(&self, undominated: u128, allowed: u128) -> usize {
        let need = undominated.count_ones() as usize;
        if need == 0 {
            return 0;
        }
        let mut best = 0;
        let mut bits = allowed;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            best = best.max((self.closed[v] & undominated).count_ones() as usize);
        }
        if best == 0 {
            return usize::MAX;
        }
        need.div_ceil(best)
    }

    /// Improves `best` (size, mask) if a smaller dominating set extends
    /// `chosen`.
    fn minimize(&mut self, dominated: u128, chosen: u128, best: &mut (usize, u128), floor: usize) {
        if self.tick() || best.0 <= floor {
            return;
        }
        let count = chosen.count_ones() as usize;
        let undominated = self.full & !dominated;
        if undominated == 0 {
            if count < best.0 {
                *best = (count, chosen);
            }
            return;
        }
        let lb = self.lower_bound(undominated, self.full & !chosen);
        if lb == usize::MAX || count + lb >= best.0 {
            return;
        }
        let u = undominated.trailing_zeros() as usize;
        let mut cands = self.closed[u] & !chosen;
        while cands != 0 {
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            self.minimize(dominated | self.closed[w], chosen | (1 << w), best, floor);
        }
    }

    /// Whether at most `budget` more vertices from `allowed` complete a
    /// dominating set.
    fn completes(&mut self, dominated: u128, allowed: u128, budget: usize) -> bool {
        if self.tick() {
            return false;
        }
        let undominated = self.full & !dominated;
        if undominated == 0 {
            return true;
        }
        let lb = self.lower_bound(undominated, allowed);
        if lb == usize::MAX || lb > budget {
            return false;
        }
        let u = undominated.trailing_zeros() as usize;
        let mut cands = self.closed[u] & allowed;
        while cands != 0 {
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if self.completes(dominated | self.closed[w], allowed & !(1 << w), budget - 1) {
                return true;
            }
        }
        false
    }
}

fn mask_to_set(n: usize, mask: u128) -> VertexSet {
    VertexSet::from_iter(n, (0..n as Vertex).filter(|&v| mask >> v & 1 == 1))
}

/// Minimum dominating set of `g`; among minimum sets, the lexicographically
/// smallest sorted one.
pub fn exact_gamma(g: &Graph, limits: &OracleLimits) -> Result<ExactResult> {
    let n = g.n();
    let cap = limits.max_vertices.min(HARD_VERTEX_CAP);
    if n > cap {
        return Err(Error::OracleRefused { n, cap });
    }
    if n == 0 {
        return Ok(ExactResult {
            size: 0,
            set: VertexSet::new(0),
            complete: true,
            nodes: 0,
        });
    }
    let closed: Vec<u128> = g
        .vertices()
        .map(|v| g.closed_neighbors(v).fold(0u128, |m, u| m | 1 << u))
        .collect();
    let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut search = Search {
        closed: &closed,
        full,
        deadline: limits.time_budget.map(|b| Instant::now() + b),
        nodes: 0,
        timed_out: false,
    };

    let greedy = greedy_dominating_set(g, TiePolicy::MinId);
    let greedy_mask = greedy.order.iter().fold(0u128, |m, &v| m | 1 << v);
    let mut best = (greedy.size(), greedy_mask);
    let floor = limits.lower_bound.unwrap_or(0);
    search.minimize(0, 0, &mut best, floor);
    if search.timed_out {
        return Ok(ExactResult {
            size: best.0,
            set: mask_to_set(n, best.1),
            complete: false,
            nodes: search.nodes,
        });
    }
    let gamma = best.0;

    // Fix members one at a time, each the smallest id that still admits a
    // completion of size gamma using only larger ids.
    let mut chosen = 0u128;
    let mut dominated = 0u128;
    let mut next = 0usize;
    for slot in 0..gamma {
        let remaining = gamma - slot - 1;
        let mut fixed = false;
        for (v, &closed_v) in closed.iter().enumerate().skip(next) {
            let allowed_after = if v + 1 >= 128 { 0 } else { full & !((1u128 << (v + 1)) - 1) };
            if search.completes(dominated | closed_v, allowed_after, remaining) {
                chosen |= 1 << v;
                dominated |= closed_v;
                next = v + 1;
                fixed = true;
                break;
            }
            if search.timed_out {
                break;
            }
        }
        if !fixed {
            // Out of time: the search result is still a minimum set.
            chosen = best.1;
            break;
        }
    }
    debug_assert_eq!(chosen.count_ones() as usize, gamma);

    Ok(ExactResult {
        size: gamma,
        set: mask_to_set(n, chosen),
        complete: true,
        nodes: search.nodes,
    })
}
