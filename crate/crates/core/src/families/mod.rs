//! Builders for the worked example families, each emitting a
//! [`GorResolution`] in isotropic standard form.

mod koszul;
mod ogr24;
mod pfh;
mod points;
mod rolling;
mod tom;

#[cfg(test)]
mod tests;

pub use koszul::{build_koszul, koszul_matrices, koszul_on, koszul_variables};
pub use ogr24::{build_ogr24, Ogr24};
pub use pfh::{build_pfaffian_hypersurface, generic_pfaffian_data, generic_pfaffian_hypersurface, signed_pfaffians};
pub use points::{koszul_points, tom_points};
pub use rolling::{build_rolling_factors, rolling_default, rolling_default_data, RollingFactors};
pub use tom::{build_tom, tom_ring, TomLambda, TOM_GENERATORS, TOM_SYZYGIES, TOM_WEDGES};

use crate::error::FamilyError;
use crate::field::Field;
use crate::groebner::ResolutionOptions;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::resolution::GorResolution;

/// Input data for one of the example families.
#[derive(Clone, Debug)]
pub enum FamilySpec<F: Field> {
    KoszulCI([Polynomial<F>; 4]),
    PfaffianHypersurface { m: PolyMatrix<F>, h: Polynomial<F> },
    TomExtrasymmetric(TomLambda<F>),
    RollingFactors { a: PolyMatrix<F>, m: [Polynomial<F>; 4], n: [Polynomial<F>; 4] },
    Ogr24Baby,
}

/// A built family.
#[derive(Clone, Debug)]
pub enum Family<F: Field> {
    Resolution(GorResolution<F>),
    Rolling(Box<RollingFactors<F>>),
    Ogr24(Box<Ogr24<F>>),
}

impl<F: Field> Family<F> {
    /// The Gorenstein resolution, for every family except the baby case.
    pub fn resolution(&self) -> Option<&GorResolution<F>> {
        match self {
            Family::Resolution(r) => Some(r),
            Family::Rolling(r) => Some(&r.symmetrized.resolution),
            Family::Ogr24(_) => None,
        }
    }
}

impl<F: Field> FamilySpec<F> {
    pub fn build(&self, options: ResolutionOptions, seed: u64) -> Result<Family<F>, FamilyError> {
        Ok(match self {
            FamilySpec::KoszulCI(f) => Family::Resolution(build_koszul(f)?),
            FamilySpec::PfaffianHypersurface { m, h } => Family::Resolution(build_pfaffian_hypersurface(m, h)?),
            FamilySpec::TomExtrasymmetric(lambda) => {
                if matches!(lambda, TomLambda::Scalar(v) if v.is_zero()) {
                    return Err(FamilyError::Invalid("lambda must be nonzero".into()));
                }
                Family::Resolution(build_tom(lambda.clone()))
            }
            FamilySpec::RollingFactors { a, m, n } => {
                Family::Rolling(Box::new(build_rolling_factors(a, m, n, options, seed)?))
            }
            FamilySpec::Ogr24Baby => Family::Ogr24(Box::new(build_ogr24())),
        })
    }
}
