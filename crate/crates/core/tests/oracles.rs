//! Checks against references that share no code with the implementation:
//! subset enumeration for γ, pair counting for queens, the dense simplex
//! against HiGHS, and closed forms for vertex-transitive relaxations.

use domset_core::exact::{exact_gamma, OracleLimits};
use domset_core::generators::{hypercube, queens, random_ktree, trap_clique, trap_stars};
use domset_core::lp::{build_lp1, build_partial_lp, solve_lp, solve_lp_with, DenseSimplex, HighsEngine};
use domset_core::{Graph, Vertex, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Smallest dominating set by trying subsets in order of size, then
/// lexicographically (as sorted lists).
fn naive_gamma(g: &Graph) -> (usize, Vec<Vertex>) {
    let n = g.n();
    let closed: Vec<u32> = (0..n)
        .map(|v| {
            let mut m = 1u32 << v;
            for &u in g.neighbors(v as Vertex) {
                m |= 1 << u;
            }
            m
        })
        .collect();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for k in 0..=n {
        let mut best: Option<Vec<Vertex>> = None;
        for mask in 0u32..(1u32 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let covered = (0..n).filter(|&v| mask >> v & 1 == 1).fold(0, |c, v| c | closed[v]);
            if covered == full {
                let set: Vec<Vertex> = (0..n as Vertex).filter(|&v| mask >> v & 1 == 1).collect();
                if best.as_ref().is_none_or(|b| set < *b) {
                    best = Some(set);
                }
            }
        }
        if let Some(b) = best {
            return (k, b);
        }
    }
    unreachable!("V dominates")
}

fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn exact_matches_subset_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd0_5e7);
    for trial in 0..300 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.0..0.7);
        let g = random_graph(&mut rng, n, p);
        let r = exact_gamma(&g, &OracleLimits::default()).unwrap();
        let (gamma, lex) = naive_gamma(&g);
        assert_eq!(r.size, gamma, "trial {trial}: {:?}", g.edge_list());
        assert_eq!(r.set.to_sorted_vec(), lex, "trial {trial}: {:?}", g.edge_list());
        assert!(g.is_dominating(&r.set));
    }
}

#[test]
fn trap_gamma_by_enumeration() {
    // 16 and 19 vertices: still cheap to enumerate.
    assert_eq!(naive_gamma(&trap_stars(3).unwrap()).0, 2);
    assert_eq!(naive_gamma(&trap_clique(3).unwrap()).0, 2);
    assert_eq!(exact_gamma(&trap_stars(3).unwrap(), &OracleLimits::default()).unwrap().size, 2);
    assert_eq!(exact_gamma(&trap_clique(3).unwrap(), &OracleLimits::default()).unwrap().size, 2);
}

fn attacks(a: (i64, i64), b: (i64, i64)) -> bool {
    a != b && (a.0 == b.0 || a.1 == b.1 || (a.0 - b.0).abs() == (a.1 - b.1).abs())
}

#[test]
fn queens_matches_pair_counting() {
    for k in 1..=8u32 {
        let g = queens(k).unwrap();
        let squares: Vec<(i64, i64)> = (0..k as i64)
            .flat_map(|r| (0..k as i64).map(move |c| (r, c)))
            .collect();
        let mut m = 0;
        for (i, &a) in squares.iter().enumerate() {
            for (j, &b) in squares.iter().enumerate().skip(i + 1) {
                let adjacent = attacks(a, b);
                assert_eq!(g.has_edge(i as Vertex, j as Vertex), adjacent, "k={k} {a:?} {b:?}");
                m += adjacent as usize;
            }
        }
        assert_eq!(g.m(), m, "k={k}");
    }
}

#[test]
fn hypercube_relaxation_is_uniform() {
    // Uniform 1/(d+1) is feasible for the primal and, with the same value on
    // every row, for the dual; so L* = 2^d / (d+1).
    for d in 1..=9u32 {
        let g = hypercube(d).unwrap();
        let sol = solve_lp(&build_lp1(&g)).unwrap();
        let expected = (1u64 << d) as f64 / (d as f64 + 1.0);
        assert!((sol.objective() - expected).abs() < 1e-4, "d={d}: {}", sol.objective());
    }
}

#[test]
fn dense_simplex_agrees_with_highs() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let dense = DenseSimplex::default();
    let highs = HighsEngine::default();
    for _ in 0..60 {
        let n = rng.gen_range(1..=40);
        let p = rng.gen_range(0.02..0.4);
        let g = random_graph(&mut rng, n, p);
        let models = [
            build_lp1(&g),
            build_partial_lp(&g, &VertexSet::from_iter(n, (0..n as Vertex).filter(|v| v % 5 == 0))),
        ];
        for model in &models {
            let a = solve_lp_with(model, &dense).unwrap();
            let b = solve_lp_with(model, &highs).unwrap();
            let scale = a.objective().abs().max(1.0);
            assert!(
                (a.objective() - b.objective()).abs() <= 1e-6 * scale,
                "dense {} vs highs {}",
                a.objective(),
                b.objective()
            );
        }
    }
    for g in [hypercube(6).unwrap(), queens(6).unwrap(), random_ktree(60, 3, 1).unwrap()] {
        let a = solve_lp_with(&build_lp1(&g), &dense).unwrap().objective();
        let b = solve_lp_with(&build_lp1(&g), &highs).unwrap().objective();
        assert!((a - b).abs() < 1e-6, "{g:?}: {a} vs {b}");
    }
}

#[test]
fn relaxation_sandwiches_gamma() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let n = rng.gen_range(1..=14);
        let p = rng.gen_range(0.05..0.6);
        let g = random_graph(&mut rng, n, p);
        let l = solve_lp(&build_lp1(&g)).unwrap().objective();
        let gamma = naive_gamma(&g).0;
        assert!(l <= gamma as f64 + 1e-6, "L*={l} > gamma={gamma}");
    }
}
