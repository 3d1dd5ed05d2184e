//! Linear-time greedy dominating set.
//!
//! The gain of a vertex is the number of still-uncovered vertices in its
//! closed neighborhood. Vertices sit in buckets keyed by gain; gains only
//! decrease, so the highest non-empty bucket only moves down and each covered
//! vertex costs one decrement per member of its closed neighborhood.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::error::InputError;
use crate::graph::{DominatingSetResult, Graph, Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TiePolicy {
    #[default]
    MinId,
    MaxId,
}

impl TiePolicy {
    pub fn name(self) -> &'static str {
        match self {
            TiePolicy::MinId => "min-id",
            TiePolicy::MaxId => "max-id",
        }
    }
}

impl fmt::Display for TiePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TiePolicy {
    type Err = InputError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min-id" | "min" => Ok(TiePolicy::MinId),
            "max-id" | "max" => Ok(TiePolicy::MaxId),
            other => Err(InputError::new(format!(
                "unknown tie policy `{other}` (expected min-id or max-id)"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GreedyResult {
    /// Selected vertices in selection order.
    pub order: Vec<Vertex>,
    /// Coverage gain of each selection at the moment it was made.
    pub gains: Vec<usize>,
    pub set: VertexSet,
    pub elapsed: Duration,
    pub tie: TiePolicy,
}

impl GreedyResult {
    pub fn size(&self) -> usize {
        self.order.len()
    }

    /// The first `len` selections as a set.
    pub fn prefix(&self, len: usize) -> VertexSet {
        VertexSet::from_iter(self.set.universe(), self.order[..len].iter().copied())
    }

    pub fn into_result(self) -> DominatingSetResult {
        DominatingSetResult::new(self.set, "greedy", self.elapsed)
    }
}

pub fn greedy_dominating_set(g: &Graph, tie: TiePolicy) -> GreedyResult {
    let start = Instant::now();
    let n = g.n();
    let mut gain: Vec<usize> = g.vertices().map(|v| g.degree(v) + 1).collect();
    let max_gain = gain.iter().copied().max().unwrap_or(0);

    // Buckets hold possibly stale entries; an entry (v in bucket b) is live iff
    // v is unselected and gain[v] == b. Filling in id order keeps each initial
    // bucket sorted.
    let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); max_gain + 1];
    for v in g.vertices() {
        buckets[gain[v as usize]].push(v);
    }

    let mut covered = vec![false; n];
    let mut selected = VertexSet::new(n);
    let mut uncovered = n;
    let mut order = Vec::new();
    let mut gains = Vec::new();

    let mut level = max_gain;
    // Entries of the current level in tie order, and a cursor into them. Once
    // `level` is the maximum, nothing can enter its bucket (entries only arrive
    // from level + 1), so it is sorted once on arrival.
    let mut queue: Vec<Vertex> = Vec::new();
    let mut cursor = 0;
    let mut loaded = false;

    while uncovered > 0 {
        if !loaded {
            queue = std::mem::take(&mut buckets[level]);
            queue.retain(|&v| !selected.contains(v) && gain[v as usize] == level);
            match tie {
                TiePolicy::MinId => queue.sort_unstable(),
                TiePolicy::MaxId => queue.sort_unstable_by(|a, b| b.cmp(a)),
            }
            queue.dedup();
            cursor = 0;
            loaded = true;
        }
        let next = queue[cursor..]
            .iter()
            .position(|&v| !selected.contains(v) && gain[v as usize] == level);
        let Some(offset) = next else {
            // Level exhausted. A positive level always exists while something
            // is uncovered: an uncovered vertex has gain >= 1 itself.
            debug_assert!(level > 1);
            level -= 1;
            loaded = false;
            continue;
        };
        cursor += offset;
        let v = queue[cursor];
        cursor += 1;

        selected.insert(v);
        order.push(v);
        gains.push(level);
        for u in g.closed_neighbors(v) {
            if covered[u as usize] {
                continue;
            }
            covered[u as usize] = true;
            uncovered -= 1;
            for w in g.closed_neighbors(u) {
                let gw = &mut gain[w as usize];
                *gw -= 1;
                // Entries at the current level stay in `queue` and are
                // filtered there; lower levels get a fresh bucket entry.
                if !selected.contains(w) && *gw < level && *gw > 0 {
                    buckets[*gw].push(w);
                }
            }
        }
    }

    GreedyResult {
        order,
        gains,
        set: selected,
        elapsed: start.elapsed(),
        tie,
    }
}
