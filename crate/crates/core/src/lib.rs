//! Exact polynomial algebra for codimension four Gorenstein ideals.
//!
//! The core is generic over a coefficient [`Field`]; the aliases below fix
//! the exact rationals used throughout the examples and the command line.

pub mod error;
pub mod families;
pub mod field;
pub mod groebner;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod resolution;
pub mod spinhom;

pub use error::{ArithError, FamilyError, GroebnerError, MatrixError, ResolutionError, SpinorError};
pub use field::{Field, Fp, Fp31, Rational};
pub use groebner::{FreeResolution, GBasis, Ideal};
pub use matrix::{ConstMatrix, PolyMatrix};
pub use poly::{Homogeneity, Monomial, MonomialOrder, PolyRing, Polynomial};
pub use report::{Check, Report};
pub use resolution::GorResolution;
pub use spinhom::{NonspinorSet, SpinorSet};

/// Polynomials with exact rational coefficients.
pub type QPoly = Polynomial<Rational>;

/// Matrices over ℚ[x₁..xₙ].
pub type QMatrix = PolyMatrix<Rational>;

/// Constant rational matrices.
pub type QConstMatrix = ConstMatrix<Rational>;

/// Ideals of ℚ[x₁..xₙ].
pub type QIdeal = Ideal<Rational>;

/// Gorenstein resolutions over ℚ.
pub type QGorResolution = GorResolution<Rational>;
