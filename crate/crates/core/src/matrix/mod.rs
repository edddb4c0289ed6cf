//! Polynomial and constant matrices.

mod constant;
mod det;
mod poly_matrix;
mod rank;

pub use constant::{ConstMatrix, Echelon};
pub use det::combinations;
pub use poly_matrix::PolyMatrix;
pub use rank::{random_point, RankCertificate, POINT_BOUND};
