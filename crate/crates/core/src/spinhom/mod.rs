//! Spinor combinatorics: coordinate sets, Cramer spinors, the `D_k` Weyl
//! group and the torus acting on columns, and tangent spaces.

mod cramer;
mod sets;
mod tangent;
mod weyl;

#[cfg(test)]
mod tests;

pub use cramer::{
    conjecture_check, cramer_spinor, spinor_table, spinor_table_of, Census, ConjectureReport, SpinorClass,
    SpinorRecord, SpinorTable,
};
pub use sets::{enumerate_nonspinor_sets, enumerate_spinor_sets, spinor_submatrix, NonspinorSet, SpinorSet};
pub use tangent::{
    expected_tangent_dim, frame_minor, isotropy_defect, m0, sample_frame, spinor_minor, tangent_dim_vk, Component,
};
pub use weyl::{apply_weyl, coxeter_exponent, torus_scale, verify_coxeter, weyl_generators, WeylElement};
