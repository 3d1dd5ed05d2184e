use std::sync::OnceLock;

use super::{DenseSimplex, HighsEngine, LpModel};
use crate::error::{InputError, LpError};

/// A backend that finds an optimal point of a covering [`LpModel`].
///
/// Engines only produce values; feasibility is re-checked by
/// [`super::solve_lp_with`] regardless of what the engine reports.
pub trait LpEngine: Send + Sync {
    fn name(&self) -> &str;

    /// One value per model variable, in variable order.
    fn solve(&self, model: &LpModel) -> Result<Vec<f64>, LpError>;
}

type EngineFactory = fn() -> Box<dyn LpEngine>;

/// Engines selectable by name.
pub struct LpEngineRegistry {
    entries: Vec<(&'static str, &'static str, EngineFactory)>,
}

impl LpEngineRegistry {
    pub fn empty() -> Self {
        LpEngineRegistry { entries: Vec::new() }
    }

    pub fn with_builtins() -> Self {
        let mut r = Self::empty();
        r.register("highs", "HiGHS interior point with crossover (default)", || {
            Box::new(HighsEngine::default())
        });
        r.register("dense-simplex", "dense tableau simplex on the dual, small models only", || {
            Box::new(DenseSimplex::default())
        });
        r
    }

    /// Later registrations under an existing name replace the earlier one.
    pub fn register(&mut self, name: &'static str, about: &'static str, factory: EngineFactory) {
        self.entries.retain(|(n, _, _)| *n != name);
        self.entries.push((name, about, factory));
    }

    pub fn create(&self, name: &str) -> Result<Box<dyn LpEngine>, InputError> {
        self.entries
            .iter()
            .find(|(n, _, _)| *n == name)
            .map(|(_, _, f)| f())
            .ok_or_else(|| {
                InputError::new(format!(
                    "unknown LP engine `{name}` (available: {})",
                    self.names().join(", ")
                ))
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|(n, _, _)| *n).collect()
    }

    pub fn describe(&self) -> impl Iterator<Item = (&'static str, &'static str)> + '_ {
        self.entries.iter().map(|(n, a, _)| (*n, *a))
    }
}

impl Default for LpEngineRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}

pub fn default_engine() -> &'static dyn LpEngine {
    static ENGINE: OnceLock<HighsEngine> = OnceLock::new();
    ENGINE.get_or_init(HighsEngine::default)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lookup() {
        let r = LpEngineRegistry::default();
        assert_eq!(r.names(), vec!["highs", "dense-simplex"]);
        assert_eq!(r.create("dense-simplex").unwrap().name(), "dense-simplex");
        let err = r.create("cplex").err().unwrap();
        assert!(err.0.contains("highs"), "{err}");
    }
}
