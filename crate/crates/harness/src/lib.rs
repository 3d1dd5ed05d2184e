//! Experiment harness for the dominating set toolkit: runs algorithms on
//! generated or loaded graphs, measures them against LP lower bounds and
//! renders the results as CSV or markdown tables.

pub mod cli;
pub mod experiment;
pub mod report;
pub mod suites;

pub use experiment::{run_experiment, run_suite, ExperimentReport, ExperimentSpec};
