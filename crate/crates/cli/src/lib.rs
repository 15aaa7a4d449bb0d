//! Command-line frontend for `qtangle` and the acceptance grid behind `selftest`.

pub mod app;
pub mod grid;

pub use app::{run, Outcome, FORMAT_ENV};
pub use grid::{CriterionResult, Grid, CRITERIA};
