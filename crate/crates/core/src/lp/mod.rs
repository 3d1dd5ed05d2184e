//! Covering linear programs over closed neighborhoods.
//!
//! Every model here has the same shape: some vertices own a variable in
//! `[0, 1]`, some vertices own a constraint `Σ_{u ∈ N[v], u has a variable}
//! x_u ≥ 1`, and the objective is the plain sum of the variables. The LP
//! relaxation of domination, the hybrid's partial program and both halves of a
//! separation bound are all instances.

mod dense;
mod engine;
mod highs_engine;

use std::io::{self, Write};
use std::thread;

pub use dense::DenseSimplex;
pub use engine::{default_engine, LpEngine, LpEngineRegistry};
pub use highs_engine::HighsEngine;

use crate::error::{InputError, LpError};
use crate::graph::{Graph, Vertex, VertexSet};

/// Constraint activity must reach `1 - FEASIBILITY_TOL`.
pub const FEASIBILITY_TOL: f64 = 1e-6;

const NO_VAR: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq)]
pub struct LpModel {
    universe: usize,
    variables: Vec<Vertex>,
    constraints: Vec<Vertex>,
    /// Row `r` holds variable positions `row_terms[row_offsets[r]..row_offsets[r + 1]]`.
    row_offsets: Vec<usize>,
    row_terms: Vec<u32>,
}

impl LpModel {
    /// Model with a variable for every vertex of `variables` and a covering
    /// row for every vertex of `constraints`. Both lists must be ascending.
    fn from_graph(g: &Graph, variables: Vec<Vertex>, constraints: Vec<Vertex>) -> Self {
        debug_assert!(variables.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(constraints.windows(2).all(|w| w[0] < w[1]));
        let mut position = vec![NO_VAR; g.n()];
        for (i, &v) in variables.iter().enumerate() {
            position[v as usize] = i as u32;
        }
        let mut row_offsets = Vec::with_capacity(constraints.len() + 1);
        let mut row_terms = Vec::new();
        row_offsets.push(0);
        for &v in &constraints {
            row_terms.extend(
                g.closed_neighbors(v)
                    .map(|u| position[u as usize])
                    .filter(|&p| p != NO_VAR),
            );
            assert!(
                row_terms.len() > *row_offsets.last().unwrap(),
                "constraint of vertex {v} has no variables"
            );
            row_offsets.push(row_terms.len());
        }
        LpModel {
            universe: g.n(),
            variables,
            constraints,
            row_offsets,
            row_terms,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn num_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn num_nonzeros(&self) -> usize {
        self.row_terms.len()
    }

    /// Vertex owning each variable, in variable order.
    pub fn variable_vertices(&self) -> &[Vertex] {
        &self.variables
    }

    /// Vertex owning each constraint row, in row order.
    pub fn constraint_vertices(&self) -> &[Vertex] {
        &self.constraints
    }

    /// Variable positions appearing in row `r`.
    pub fn row(&self, r: usize) -> &[u32] {
        &self.row_terms[self.row_offsets[r]..self.row_offsets[r + 1]]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.num_constraints()).map(move |r| self.row(r))
    }

    pub fn is_empty(&self) -> bool {
        self.variables.is_empty() && self.constraints.is_empty()
    }

    /// Smallest row activity under `values` (one per variable) and the vertex
    /// owning that row; `None` when there are no rows.
    pub fn min_activity(&self, values: &[f64]) -> Option<(Vertex, f64)> {
        self.rows()
            .zip(&self.constraints)
            .map(|(row, &v)| (v, row.iter().map(|&p| values[p as usize]).sum::<f64>()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
    }

    /// Debug dump: one line per constraint, `vertex: term term ...`, with term
    /// vertices (not positions).
    pub fn dump<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(
            out,
            "# variables {} constraints {}",
            self.num_variables(),
            self.num_constraints()
        )?;
        for (row, v) in self.rows().zip(&self.constraints) {
            write!(out, "{v}:")?;
            for &p in row {
                write!(out, " {}", self.variables[p as usize])?;
            }
            writeln!(out)?;
        }
        Ok(())
    }
}

/// Optimal weights of an [`LpModel`], addressable by vertex.
#[derive(Debug, Clone)]
pub struct FractionalSolution {
    variables: Vec<Vertex>,
    values: Vec<f64>,
    position: Vec<u32>,
    objective: f64,
    engine: String,
}

impl FractionalSolution {
    fn new(model: &LpModel, values: Vec<f64>, engine: &str) -> Self {
        let mut position = vec![NO_VAR; model.universe];
        for (i, &v) in model.variables.iter().enumerate() {
            position[v as usize] = i as u32;
        }
        let objective = values.iter().sum();
        FractionalSolution {
            variables: model.variables.clone(),
            values,
            position,
            objective,
            engine: engine.to_owned(),
        }
    }

    /// Builds a solution from explicit `(vertex, weight)` pairs, e.g. for
    /// rounding an externally produced point. Weights are not checked against
    /// any model.
    pub fn from_weights(universe: usize, weights: &[(Vertex, f64)]) -> Self {
        let mut position = vec![NO_VAR; universe];
        let mut variables = Vec::with_capacity(weights.len());
        let mut values = Vec::with_capacity(weights.len());
        for (i, &(v, w)) in weights.iter().enumerate() {
            position[v as usize] = i as u32;
            variables.push(v);
            values.push(w);
        }
        FractionalSolution {
            objective: values.iter().sum(),
            variables,
            values,
            position,
            engine: "external".into(),
        }
    }

    /// Dense weights for every vertex of a graph with `values.len()` vertices.
    pub fn from_dense(values: Vec<f64>) -> Self {
        let n = values.len();
        FractionalSolution {
            objective: values.iter().sum(),
            variables: (0..n as Vertex).collect(),
            position: (0..n as u32).collect(),
            values,
            engine: "external".into(),
        }
    }

    pub fn objective(&self) -> f64 {
        self.objective
    }

    pub fn engine(&self) -> &str {
        &self.engine
    }

    pub fn weight(&self, v: Vertex) -> Option<f64> {
        match self.position.get(v as usize) {
            Some(&p) if p != NO_VAR => Some(self.values[p as usize]),
            _ => None,
        }
    }

    /// `X(S)`: total weight on the vertices of `s` that own a variable.
    pub fn weight_of(&self, s: &VertexSet) -> f64 {
        s.iter().filter_map(|v| self.weight(v)).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, f64)> + '_ {
        self.variables.iter().copied().zip(self.values.iter().copied())
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Partition `A ∪ B ∪ C` of the vertices with no edge between `A` and `C`.
#[derive(Debug, Clone)]
pub struct Separation {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
}

impl Separation {
    pub fn new(g: &Graph, a: VertexSet, b: VertexSet, c: VertexSet) -> Result<Self, InputError> {
        let sep = Separation { a, b, c };
        sep.validate(g)?;
        Ok(sep)
    }

    /// `A = S`, `B = N(S) \ S`, `C` = the rest. Always a valid separation.
    pub fn from_set(g: &Graph, s: &VertexSet) -> Self {
        let b = g.open_neighborhood_of_set(s);
        let c = VertexSet::from_iter(
            g.n(),
            g.vertices().filter(|&v| !s.contains(v) && !b.contains(v)),
        );
        Separation { a: s.clone(), b, c }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), InputError> {
        let n = g.n();
        if [&self.a, &self.b, &self.c].iter().any(|s| s.universe() != n) {
            return Err(InputError::new("separation sets do not match the graph's vertex count"));
        }
        for v in g.vertices() {
            let hits = [&self.a, &self.b, &self.c]
                .iter()
                .filter(|s| s.contains(v))
                .count();
            if hits != 1 {
                return Err(InputError::new(format!(
                    "vertex {v} lies in {hits} of the parts A, B, C (expected exactly 1)"
                )));
            }
        }
        for v in self.a.iter() {
            if let Some(&u) = g.neighbors(v).iter().find(|&&u| self.c.contains(u)) {
                return Err(InputError::new(format!(
                    "edge ({v}, {u}) joins A and C; not a separation"
                )));
            }
        }
        Ok(())
    }
}

/// The LP relaxation of domination: a variable and a row for every vertex.
pub fn build_lp1(g: &Graph) -> LpModel {
    let all: Vec<Vertex> = g.vertices().collect();
    LpModel::from_graph(g, all.clone(), all)
}

/// Hybrid program with the vertices of `s` forced into the solution:
/// variables over `V \ S`, rows for the vertices `s` leaves undominated.
pub fn build_partial_lp(g: &Graph, s: &VertexSet) -> LpModel {
    let mut dominated = vec![false; g.n()];
    for v in s.iter() {
        for u in g.closed_neighbors(v) {
            dominated[u as usize] = true;
        }
    }
    let variables = g.vertices().filter(|&v| !s.contains(v)).collect();
    let constraints = g.vertices().filter(|&v| !dominated[v as usize]).collect();
    LpModel::from_graph(g, variables, constraints)
}

/// The two halves of a separation bound: variables `A ∪ B` with rows for `A`,
/// and variables `B ∪ C` with rows for `C`.
pub fn build_separation_lps(g: &Graph, sep: &Separation) -> Result<(LpModel, LpModel), InputError> {
    sep.validate(g)?;
    let ab = g.vertices().filter(|&v| !sep.c.contains(v)).collect();
    let bc = g.vertices().filter(|&v| !sep.a.contains(v)).collect();
    let a = sep.a.to_sorted_vec();
    let c = sep.c.to_sorted_vec();
    Ok((LpModel::from_graph(g, ab, a), LpModel::from_graph(g, bc, c)))
}

/// Solves `model` with `engine`, then checks every row independently of the
/// engine. Engine output is clamped into `[0, 1]`; rows short of 1 by less
/// than `FEASIBILITY_TOL` are repaired by scaling the point up.
pub fn solve_lp_with(model: &LpModel, engine: &dyn LpEngine) -> Result<FractionalSolution, LpError> {
    if model.num_variables() == 0 {
        if let Some(&v) = model.constraint_vertices().first() {
            return Err(LpError::Infeasibility { vertex: v, activity: 0.0 });
        }
        return Ok(FractionalSolution::new(model, Vec::new(), engine.name()));
    }
    let mut values = engine.solve(model)?;
    if values.len() != model.num_variables() {
        return Err(LpError::Solver {
            engine: engine.name().into(),
            message: format!(
                "returned {} values for {} variables",
                values.len(),
                model.num_variables()
            ),
        });
    }
    for x in &mut values {
        *x = x.clamp(0.0, 1.0);
    }
    if let Some((vertex, activity)) = model.min_activity(&values) {
        if activity < 1.0 - FEASIBILITY_TOL {
            return Err(LpError::Infeasibility { vertex, activity });
        }
        if activity < 1.0 {
            // Any row containing a variable clipped to 1 is satisfied by that
            // term alone; every other row is scaled up to at least 1.
            for x in &mut values {
                *x = (*x / activity).min(1.0);
            }
        }
    }
    Ok(FractionalSolution::new(model, values, engine.name()))
}

/// [`solve_lp_with`] on the default engine.
pub fn solve_lp(model: &LpModel) -> Result<FractionalSolution, LpError> {
    solve_lp_with(model, default_engine())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecompositionBound {
    /// Optimum of the `A ∪ B` half.
    pub m_star: f64,
    /// Optimum of the `B ∪ C` half.
    pub n_star: f64,
}

impl DecompositionBound {
    pub fn value(&self) -> f64 {
        self.m_star.max(self.n_star)
    }
}

/// `max{M*, N*}` over a separation: a lower bound on the LP relaxation's
/// optimum that needs only the two smaller programs. The halves are solved on
/// separate threads.
pub fn decomposition_lower_bound(
    g: &Graph,
    sep: &Separation,
    engine: &dyn LpEngine,
) -> crate::Result<DecompositionBound> {
    let (left, right) = build_separation_lps(g, sep)?;
    let (m, n) = thread::scope(|scope| {
        let h = scope.spawn(|| solve_lp_with(&left, engine));
        let n = solve_lp_with(&right, engine);
        (h.join().expect("LP worker panicked"), n)
    });
    Ok(DecompositionBound {
        m_star: m?.objective(),
        n_star: n?.objective(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n as Vertex).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn rows_as_vertices(m: &LpModel) -> Vec<(Vertex, Vec<Vertex>)> {
        m.rows()
            .zip(m.constraint_vertices())
            .map(|(r, &v)| (v, r.iter().map(|&p| m.variable_vertices()[p as usize]).collect()))
            .collect()
    }

    #[test]
    fn lp1_triangle() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let m = build_lp1(&g);
        assert_eq!(m.num_variables(), 3);
        assert_eq!(m.num_constraints(), 3);
        assert!(m.rows().all(|r| r.len() == 3));
    }

    #[test]
    fn lp1_isolated_vertex() {
        let m = build_lp1(&Graph::empty(1));
        assert_eq!(rows_as_vertices(&m), vec![(0, vec![0])]);
        let sol = solve_lp(&m).unwrap();
        assert!((sol.objective() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn partial_lp_examples() {
        let g = path(5);
        assert_eq!(build_partial_lp(&g, &VertexSet::new(5)), build_lp1(&g));

        let m = build_partial_lp(&g, &VertexSet::from_iter(5, [2]));
        assert_eq!(m.variable_vertices(), &[0, 1, 3, 4]);
        assert_eq!(rows_as_vertices(&m), vec![(0, vec![0, 1]), (4, vec![3, 4])]);

        let m = build_partial_lp(&g, &VertexSet::full(5));
        assert!(m.is_empty());
        assert_eq!(solve_lp(&m).unwrap().objective(), 0.0);
    }

    #[test]
    fn separation_lps_on_p3() {
        let g = path(3);
        let sep = Separation::new(
            &g,
            VertexSet::from_iter(3, [0]),
            VertexSet::from_iter(3, [1]),
            VertexSet::from_iter(3, [2]),
        )
        .unwrap();
        let (lp2, lp3) = build_separation_lps(&g, &sep).unwrap();
        assert_eq!(rows_as_vertices(&lp2), vec![(0, vec![0, 1])]);
        assert_eq!(rows_as_vertices(&lp3), vec![(2, vec![1, 2])]);
        let bound = decomposition_lower_bound(&g, &sep, default_engine()).unwrap();
        assert!((bound.m_star - 1.0).abs() < 1e-6);
        assert!((bound.n_star - 1.0).abs() < 1e-6);
        assert!((bound.value() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn separator_everything() {
        let g = path(4);
        let sep = Separation::new(&g, VertexSet::new(4), VertexSet::full(4), VertexSet::new(4)).unwrap();
        let (lp2, lp3) = build_separation_lps(&g, &sep).unwrap();
        assert_eq!(lp2.num_constraints(), 0);
        assert_eq!(lp3.num_constraints(), 0);
        let bound = decomposition_lower_bound(&g, &sep, default_engine()).unwrap();
        assert_eq!(bound.value(), 0.0);
    }

    #[test]
    fn invalid_separation_names_edge() {
        let g = path(3);
        let err = Separation::new(
            &g,
            VertexSet::from_iter(3, [0, 1]),
            VertexSet::new(3),
            VertexSet::from_iter(3, [2]),
        )
        .unwrap_err();
        assert!(err.0.contains("(1, 2)"), "{err}");

        let err = Separation::new(
            &g,
            VertexSet::from_iter(3, [0]),
            VertexSet::from_iter(3, [0, 1]),
            VertexSet::from_iter(3, [2]),
        )
        .unwrap_err();
        assert!(err.0.contains("vertex 0"), "{err}");
    }

    #[test]
    fn triangle_optimum_is_one() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let sol = solve_lp(&build_lp1(&g)).unwrap();
        assert!((sol.objective() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn dump_lists_rows() {
        let mut buf = Vec::new();
        build_partial_lp(&path(5), &VertexSet::from_iter(5, [2]))
            .dump(&mut buf)
            .unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "# variables 4 constraints 2\n0: 0 1\n4: 3 4\n"
        );
    }

    #[test]
    fn repair_scales_slightly_short_rows() {
        struct Short;
        impl LpEngine for Short {
            fn name(&self) -> &str {
                "short"
            }
            fn solve(&self, model: &LpModel) -> Result<Vec<f64>, LpError> {
                Ok(vec![0.5 - 1e-8; model.num_variables()])
            }
        }
        let m = build_lp1(&Graph::from_edges(2, &[(0, 1)]).unwrap());
        let sol = solve_lp_with(&m, &Short).unwrap();
        assert!(m.min_activity(sol.values()).unwrap().1 >= 1.0 - 1e-12);

        struct Bad;
        impl LpEngine for Bad {
            fn name(&self) -> &str {
                "bad"
            }
            fn solve(&self, model: &LpModel) -> Result<Vec<f64>, LpError> {
                Ok(vec![0.25; model.num_variables()])
            }
        }
        assert!(matches!(solve_lp_with(&m, &Bad), Err(LpError::Infeasibility { .. })));
    }
}
