use std::sync::Arc;

use crate::error::FamilyError;
use crate::field::Field;
use crate::groebner::Ideal;
use crate::matrix::PolyMatrix;
use crate::poly::{PolyRing, Polynomial};
use crate::resolution::GorResolution;

/// The Koszul complex of a homogeneous regular sequence `f₁..f₄`, with
/// `L = (f₁..f₄)` and
///
/// ```text
/// (A B) = ( -f₄   .    .  |   .   f₃  -f₂ )
///         (  .  -f₄    .  | -f₃    .   f₁ )
///         (  .    .  -f₄  |  f₂  -f₁    . )
///         ( f₁   f₂   f₃  |   .    .    . )
/// ```
pub fn build_koszul<F: Field>(f: &[Polynomial<F>; 4]) -> Result<GorResolution<F>, FamilyError> {
    let ring = f[0].ring().clone();
    for p in f {
        if !p.same_ring(&f[0]) {
            return Err(FamilyError::Invalid("generators live in different rings".into()));
        }
        if p.is_zero() || !p.homogeneity().is_homogeneous() {
            return Err(FamilyError::Invalid(format!("generator {p} is not a nonzero homogeneous polynomial")));
        }
    }
    let codim = Ideal::new(&ring, f.iter().cloned()).codimension().unwrap_or(ring.nvars() + 1);
    if codim != 4 {
        return Err(FamilyError::NotRegularSequence { codim });
    }
    let (l, m1) = koszul_matrices(f)?;
    Ok(GorResolution::standard(l, m1)?)
}

/// `L` and `M₁` of the pattern above, without checking the sequence.
pub fn koszul_matrices<F: Field>(f: &[Polynomial<F>; 4]) -> Result<(PolyMatrix<F>, PolyMatrix<F>), FamilyError> {
    let ring = f[0].ring().clone();
    let z = Polynomial::zero(&ring);
    let n = |p: &Polynomial<F>| -p;
    let rows = vec![
        vec![n(&f[3]), z.clone(), z.clone(), z.clone(), f[2].clone(), n(&f[1])],
        vec![z.clone(), n(&f[3]), z.clone(), n(&f[2]), z.clone(), f[0].clone()],
        vec![z.clone(), z.clone(), n(&f[3]), f[1].clone(), n(&f[0]), z.clone()],
        vec![f[0].clone(), f[1].clone(), f[2].clone(), z.clone(), z.clone(), z],
    ];
    let m1 = PolyMatrix::from_rows(&ring, rows)?;
    let l = PolyMatrix::from_rows(&ring, vec![f.to_vec()])?;
    Ok((l, m1))
}

/// `ℚ[x₁..x₄]` with its variables as the regular sequence.
pub fn koszul_variables<F: Field>() -> GorResolution<F> {
    let ring = PolyRing::standard(["x1", "x2", "x3", "x4"]);
    koszul_on(&ring, &[0, 1, 2, 3])
}

/// The Koszul resolution of four distinct variables of `ring`.
pub fn koszul_on<F: Field>(ring: &Arc<PolyRing>, vars: &[usize; 4]) -> GorResolution<F> {
    let f = vars.map(|v| Polynomial::var(ring, v));
    build_koszul(&f).expect("variables form a regular sequence")
}
