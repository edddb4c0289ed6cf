//! Gröbner bases of ideals and submodules, syzygies and free resolutions.

mod engine;
mod ideal;
mod module;
mod resolution;

pub use engine::{GbOptions, DEFAULT_LIMIT};
pub use ideal::{lift, syzygies, syzygies_with_order, GBasis, Ideal, ModuleGB};
pub use module::{FreeModule, ModuleOrder, Term, Vector};
pub use resolution::{minimal_resolution, minimize, FreeResolution, ResolutionOptions};
