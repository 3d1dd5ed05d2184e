use std::time::Duration;

use highs::{HighsModelStatus, RowProblem, Sense};

use super::{LpEngine, LpModel};
use crate::error::LpError;

/// HiGHS, run with its interior-point solver followed by crossover. Simplex
/// stalls on the heavily degenerate relaxations of vertex-transitive graphs
/// such as hypercubes; the interior-point path does not.
#[derive(Debug, Clone, Default)]
pub struct HighsEngine {
    pub time_limit: Option<Duration>,
}

impl LpEngine for HighsEngine {
    fn name(&self) -> &str {
        "highs"
    }

    fn solve(&self, model: &LpModel) -> Result<Vec<f64>, LpError> {
        let fail = |message: String| LpError::Solver {
            engine: "highs".into(),
            message,
        };
        let mut pb = RowProblem::default();
        let cols: Vec<_> = (0..model.num_variables())
            .map(|_| pb.add_column(1.0, 0.0..=1.0))
            .collect();
        for row in model.rows() {
            pb.add_row(1.0.., row.iter().map(|&p| (cols[p as usize], 1.0)));
        }
        let mut m = pb
            .try_optimise(Sense::Minimise)
            .map_err(|s| fail(format!("model setup failed: {s:?}")))?;
        m.make_quiet();
        m.set_option("solver", "ipm");
        if let Some(limit) = self.time_limit {
            m.set_option("time_limit", limit.as_secs_f64());
        }
        let solved = m.try_solve().map_err(|s| fail(format!("solve failed: {s:?}")))?;
        match solved.status() {
            HighsModelStatus::Optimal => Ok(solved.get_solution().columns().to_vec()),
            HighsModelStatus::Infeasible => Err(LpError::Infeasible),
            other => Err(fail(format!("terminated with status {other:?}"))),
        }
    }
}
