//! Closed-form partial homology tables of positive 3-braid closures.

mod golden;
mod partial;
mod positivity;
mod shape;

pub use golden::{golden, golden_tables, parse_golden, render_golden, GoldenError, GoldenTable};
pub use partial::{PartialRecord, PartialTable, Region};
pub use positivity::{matches_positive3, PatternKind, Verdict};
pub use shape::{delta_power_even_table, extended_shape, jaeger_step, lshape_theorem1, r_of, RWord};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TablesError {
    #[error("block not a summand at ({i},{j})")]
    NotASummand { i: i64, j: i64 },
    #[error("cell ({i},{j}) lies outside the determined region")]
    Undetermined { i: i64, j: i64 },
    #[error("not conjugate to a positive braid (summit infimum {summit_infimum})")]
    NotPositive { summit_infimum: i64 },
    #[error("word is not positive")]
    NotPositiveWord,
}
