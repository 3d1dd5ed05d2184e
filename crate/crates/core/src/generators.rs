//! Synthetic graph families: hypercubes, k-Queens graphs, random k-trees and
//! the two greedy-trap constructions.
//!
//! Vertex numbering is fixed per family:
//! - hypercube: vertex id is the binary code of the corner;
//! - queens: row-major, square `(r, c)` is `r * k + c`;
//! - trap-stars: stars `S_1..S_p` in order (root first, then leaves), then
//!   `t_1 = n - 2`, `t_2 = n - 1`;
//! - trap-clique: blocks `W_1..W_p` of the independent side in order, then
//!   `s_1..s_p`, then `t_1 = n - 2`, `t_2 = n - 1`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::InputError;
use crate::graph::{Graph, Vertex};

/// Parameters for one member of a generated family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyParams {
    Hypercube { d: u32 },
    Queens { k: u32 },
    KTree { n: usize, k: usize, seed: u64 },
    TrapStars { p: u32 },
    TrapClique { p: u32 },
}

impl FamilyParams {
    pub fn generate(&self) -> Result<Graph, InputError> {
        match *self {
            FamilyParams::Hypercube { d } => hypercube(d),
            FamilyParams::Queens { k } => queens(k),
            FamilyParams::KTree { n, k, seed } => random_ktree(n, k, seed),
            FamilyParams::TrapStars { p } => trap_stars(p),
            FamilyParams::TrapClique { p } => trap_clique(p),
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            FamilyParams::Hypercube { .. } => "hypercube",
            FamilyParams::Queens { .. } => "queens",
            FamilyParams::KTree { .. } => "ktree",
            FamilyParams::TrapStars { .. } => "trap-stars",
            FamilyParams::TrapClique { .. } => "trap-clique",
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyParams::Hypercube { d } => write!(f, "hypercube(d={d})"),
            FamilyParams::Queens { k } => write!(f, "queens(k={k})"),
            FamilyParams::KTree { n, k, seed } => write!(f, "ktree(n={n},k={k},seed={seed})"),
            FamilyParams::TrapStars { p } => write!(f, "trap-stars(p={p})"),
            FamilyParams::TrapClique { p } => write!(f, "trap-clique(p={p})"),
        }
    }
}

/// Largest dimension whose vertex count still fits a `u32` id.
const MAX_HYPERCUBE_DIM: u32 = 31;

pub fn hypercube(d: u32) -> Result<Graph, InputError> {
    if d == 0 {
        return Err(InputError::new("hypercube dimension must be at least 1"));
    }
    if d > MAX_HYPERCUBE_DIM {
        return Err(InputError::new(format!(
            "hypercube dimension {d} overflows the vertex id range (max {MAX_HYPERCUBE_DIM})"
        )));
    }
    let n = 1usize << d;
    let mut edges = Vec::with_capacity(d as usize * n / 2);
    for v in 0..n as Vertex {
        for b in 0..d {
            let u = v ^ (1 << b);
            if v < u {
                edges.push((v, u));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("hypercube endpoints are in range"))
}

pub fn queens(k: u32) -> Result<Graph, InputError> {
    if k == 0 {
        return Err(InputError::new("queens board side must be at least 1"));
    }
    let side = k as usize;
    let n = side
        .checked_mul(side)
        .filter(|&n| n <= Vertex::MAX as usize)
        .ok_or_else(|| InputError::new(format!("queens board side {k} overflows")))?;
    let id = |r: usize, c: usize| (r * side + c) as Vertex;
    let mut edges = Vec::new();
    for r in 0..side {
        for c in 0..side {
            let me = id(r, c);
            // Only look "forward" so each pair is emitted once.
            for c2 in c + 1..side {
                edges.push((me, id(r, c2)));
            }
            for r2 in r + 1..side {
                edges.push((me, id(r2, c)));
                let step = r2 - r;
                if c + step < side {
                    edges.push((me, id(r2, c + step)));
                }
                if step <= c {
                    edges.push((me, id(r2, c - step)));
                }
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("queens endpoints are in range"))
}

/// Random k-tree: a `(k+1)`-clique, then each new vertex joined to a k-clique
/// chosen uniformly among all k-cliques materialized so far.
pub fn random_ktree(n: usize, k: usize, seed: u64) -> Result<Graph, InputError> {
    if k == 0 {
        return Err(InputError::new("k-tree parameter k must be at least 1"));
    }
    if n < k + 1 {
        return Err(InputError::new(format!(
            "a k-tree with k={k} needs at least {} vertices, got {n}",
            k + 1
        )));
    }
    if n > Vertex::MAX as usize {
        return Err(InputError::new(format!("{n} vertices overflow the id range")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(k * n);
    for u in 0..=k as Vertex {
        for v in u + 1..=k as Vertex {
            edges.push((u, v));
        }
    }
    // Flat storage: clique i is cliques[i*k..(i+1)*k].
    let mut cliques: Vec<Vertex> = Vec::with_capacity(k * k * n);
    for skip in 0..=k as Vertex {
        cliques.extend((0..=k as Vertex).filter(|&v| v != skip));
    }
    let mut base = vec![0 as Vertex; k];
    for v in (k + 1) as Vertex..n as Vertex {
        let count = cliques.len() / k;
        let pick = rng.gen_range(0..count);
        base.copy_from_slice(&cliques[pick * k..(pick + 1) * k]);
        for &u in &base {
            edges.push((u, v));
        }
        for drop in 0..k {
            for (i, &u) in base.iter().enumerate() {
                if i != drop {
                    cliques.push(u);
                }
            }
            cliques.push(v);
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("k-tree endpoints are in range"))
}

fn check_trap_scale(p: u32) -> Result<(), InputError> {
    if p < 2 {
        return Err(InputError::new(format!("trap families need p >= 2, got {p}")));
    }
    if p > 30 {
        return Err(InputError::new(format!("trap scale p={p} overflows the id range")));
    }
    Ok(())
}

/// Stars `S_i` on `2^i` vertices (i = 1..p) plus `t_1`, `t_2`; `t_1` sees the
/// first half of every star (root included), `t_2` the second half.
pub fn trap_stars(p: u32) -> Result<Graph, InputError> {
    check_trap_scale(p)?;
    let n = 1usize << (p + 1);
    let t1 = (n - 2) as Vertex;
    let t2 = (n - 1) as Vertex;
    let mut edges = Vec::new();
    let mut start: Vertex = 0;
    for i in 1..=p {
        let size: Vertex = 1 << i;
        let root = start;
        for leaf in root + 1..root + size {
            edges.push((root, leaf));
        }
        for j in 0..size {
            let t = if j < size / 2 { t1 } else { t2 };
            edges.push((t, start + j));
        }
        start += size;
    }
    debug_assert_eq!(start, t1);
    Ok(Graph::from_edges(n, &edges).expect("trap endpoints are in range"))
}

/// Clique `{s_1..s_p, t_1, t_2}` over an independent set split into blocks
/// `W_i` of size `2^i`; `s_i` sees all of `W_i`, `t_1`/`t_2` its halves.
pub fn trap_clique(p: u32) -> Result<Graph, InputError> {
    check_trap_scale(p)?;
    let independent = (1usize << (p + 1)) - 2;
    let n = independent + p as usize + 2;
    let s = |i: u32| (independent + i as usize - 1) as Vertex;
    let t1 = (n - 2) as Vertex;
    let t2 = (n - 1) as Vertex;
    let clique: Vec<Vertex> = (independent as Vertex..n as Vertex).collect();
    let mut edges = Vec::new();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            edges.push((u, v));
        }
    }
    let mut start: Vertex = 0;
    for i in 1..=p {
        let size: Vertex = 1 << i;
        for j in 0..size {
            let w = start + j;
            edges.push((s(i), w));
            edges.push((if j < size / 2 { t1 } else { t2 }, w));
        }
        start += size;
    }
    Ok(Graph::from_edges(n, &edges).expect("trap endpoints are in range"))
}

/// The `(t_1, t_2)` pair of either trap family.
pub fn trap_terminals(g: &Graph) -> (Vertex, Vertex) {
    let n = g.n() as Vertex;
    (n - 2, n - 1)
}

impl FromStr for FamilyParams {
    type Err = InputError;

    /// Parses `hypercube:5`, `queens:8`, `ktree:2000:5[:seed]`,
    /// `trap-stars:3`, `trap-clique:3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> Result<u64, InputError> {
            parts
                .get(i)
                .ok_or_else(|| InputError::new(format!("`{s}`: missing parameter {i}")))?
                .parse::<u64>()
                .map_err(|_| InputError::new(format!("`{s}`: parameter {i} is not an integer")))
        };
        let small = |i: usize| -> Result<u32, InputError> {
            u32::try_from(num(i)?).map_err(|_| InputError::new(format!("`{s}`: parameter {i} too large")))
        };
        match parts[0] {
            "hypercube" => Ok(FamilyParams::Hypercube { d: small(1)? }),
            "queens" => Ok(FamilyParams::Queens { k: small(1)? }),
            "ktree" => Ok(FamilyParams::KTree {
                n: num(1)? as usize,
                k: num(2)? as usize,
                seed: if parts.len() > 3 { num(3)? } else { 0 },
            }),
            "trap-stars" => Ok(FamilyParams::TrapStars { p: small(1)? }),
            "trap-clique" => Ok(FamilyParams::TrapClique { p: small(1)? }),
            other => Err(InputError::new(format!("unknown graph family `{other}`"))),
        }
    }
}
