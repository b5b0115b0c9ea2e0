//! Integral Khovanov homology of link diagrams.

mod complex;
mod group;
mod poly;
mod scan;
mod smith;
mod table;

pub use complex::KhovanovComplex;
pub use group::AbelianGroup;
pub use poly::{bracket_jones, LaurentPoly};
pub use scan::{khovanov_homology_scanned, MAX_BOUNDARY};
pub use smith::{smith_normal_form, IntegerMatrix, SmithForm};
pub use table::{CellRecord, HomologyTable, TableRecord, SCHEMA_VERSION};

pub(crate) use table::render_grid;

use thiserror::Error;

use crate::diagram::LinkDiagram;

/// Default guard on the number of crossings.
pub const DEFAULT_MAX_CROSSINGS: usize = 18;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KhovanovError {
    #[error("diagram has {crossings} crossings, limit is {limit}")]
    TooManyCrossings { crossings: usize, limit: usize },
    #[error("torsion coefficient at ({i},{j}) does not fit in 64 bits")]
    TorsionTooLarge { i: i64, j: i64 },
    #[error("scan boundary has {width} points, limit is {limit}")]
    BoundaryTooWide { width: usize, limit: usize },
}

pub fn khovanov_homology(d: &LinkDiagram) -> Result<HomologyTable, KhovanovError> {
    khovanov_homology_limited(d, DEFAULT_MAX_CROSSINGS)
}

pub fn khovanov_homology_limited(d: &LinkDiagram, max_crossings: usize) -> Result<HomologyTable, KhovanovError> {
    KhovanovComplex::new(d, max_crossings)?.homology()
}
