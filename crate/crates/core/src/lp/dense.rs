//! Small-model engine: textbook tableau simplex with Bland's rule, applied to
//! the dual of the covering program.
//!
//! Primal: `min Σ x_i` s.t. `Σ_{i ∈ row r} x_i ≥ 1`, `0 ≤ x ≤ 1`.
//! Dual:   `max Σ y_r − Σ z_i` s.t. `Σ_{r ∋ i} y_r − z_i ≤ 1`, `y, z ≥ 0`.
//!
//! The dual has the origin as a feasible basis (all slacks), so no phase one
//! is needed. The primal point is read off the reduced costs of the slack
//! columns at the optimum.

use super::{LpEngine, LpModel};
use crate::error::LpError;

const EPS: f64 = 1e-10;

#[derive(Debug, Clone)]
pub struct DenseSimplex {
    /// Refuse tableaux with more cells than this.
    pub max_cells: usize,
    pub max_pivots: usize,
}

impl Default for DenseSimplex {
    fn default() -> Self {
        DenseSimplex {
            max_cells: 16_000_000,
            max_pivots: 200_000,
        }
    }
}

impl LpEngine for DenseSimplex {
    fn name(&self) -> &str {
        "dense-simplex"
    }

    fn solve(&self, model: &LpModel) -> Result<Vec<f64>, LpError> {
        let fail = |message: String| LpError::Solver {
            engine: "dense-simplex".into(),
            message,
        };
        let nv = model.num_variables();
        let nc = model.num_constraints();
        // Columns: y (nc), z (nv), slack (nv), rhs.
        let width = nc + 2 * nv + 1;
        let rhs = width - 1;
        if nv.saturating_mul(width) > self.max_cells {
            return Err(fail(format!(
                "{nv}x{width} tableau exceeds the {} cell budget",
                self.max_cells
            )));
        }

        let mut t = vec![0.0; nv * width];
        for (r, row) in model.rows().enumerate() {
            for &p in row {
                t[p as usize * width + r] = 1.0;
            }
        }
        for i in 0..nv {
            t[i * width + nc + i] = -1.0;
            t[i * width + nc + nv + i] = 1.0;
            t[i * width + rhs] = 1.0;
        }
        // Reduced costs of the maximization; positive entries may enter.
        let mut cost = vec![0.0; width];
        cost[..nc].fill(1.0);
        cost[nc..nc + nv].fill(-1.0);
        let mut basis: Vec<usize> = (nc + nv..nc + 2 * nv).collect();

        let mut pivots = 0;
        while let Some(enter) = (0..rhs).find(|&j| cost[j] > EPS) {
            let mut leave: Option<(usize, f64)> = None;
            for i in 0..nv {
                let a = t[i * width + enter];
                if a > EPS {
                    let ratio = t[i * width + rhs] / a;
                    let better = match leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < lr - EPS || (ratio <= lr + EPS && basis[i] < basis[li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            // An unbounded dual means an empty primal row, i.e. infeasible.
            let Some((row, _)) = leave else {
                return Err(LpError::Infeasible);
            };

            let piv = t[row * width + enter];
            for x in &mut t[row * width..(row + 1) * width] {
                *x /= piv;
            }
            let pivot_row: Vec<f64> = t[row * width..(row + 1) * width].to_vec();
            for i in 0..nv {
                if i == row {
                    continue;
                }
                let f = t[i * width + enter];
                if f != 0.0 {
                    for (x, &p) in t[i * width..(i + 1) * width].iter_mut().zip(&pivot_row) {
                        *x -= f * p;
                    }
                }
            }
            let f = cost[enter];
            for (c, &p) in cost.iter_mut().zip(&pivot_row) {
                *c -= f * p;
            }
            basis[row] = enter;

            pivots += 1;
            if pivots > self.max_pivots {
                return Err(fail(format!("no optimum after {} pivots", self.max_pivots)));
            }
        }

        Ok((0..nv).map(|i| -cost[nc + nv + i]).collect())
    }
}
