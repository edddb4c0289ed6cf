//! Gorenstein codimension four resolutions in isotropic format: structure
//! checks, the symmetrizer and the exactness criterion.

mod exactness;
mod gor;
mod symmetrize;


pub use exactness::{ExactnessReport, RankDrop, RankSequence, DEFAULT_SUBSETS, FULL_MINOR_LIMIT, GREEDY_RESTARTS};
pub use gor::GorResolution;
pub use symmetrize::{symmetrize, Symmetrized};
