use crate::error::FamilyError;
use crate::field::Field;
use crate::groebner::{minimal_resolution, FreeResolution, Ideal, ResolutionOptions};
use crate::matrix::PolyMatrix;
use crate::poly::{PolyRing, Polynomial};
use crate::resolution::{symmetrize, Symmetrized};

/// An elephant of the rank 1 locus of a 2×4 matrix in rolling factors format.
#[derive(Clone, Debug)]
pub struct RollingFactors<F: Field> {
    /// The 6 minors of `A` followed by `Σaᵢmᵢ`, `Σbᵢmᵢ`, `Σbᵢnᵢ`.
    pub ideal: Ideal<F>,
    pub raw: FreeResolution<F>,
    pub symmetrized: Symmetrized<F>,
}

fn dot<F: Field>(x: &[Polynomial<F>], y: &[Polynomial<F>]) -> Polynomial<F> {
    let ring = x[0].ring().clone();
    Polynomial::sum(&ring, x.iter().zip(y).map(|(a, b)| a * b))
}

/// The ideal and symmetrized resolution of `∧²A = 0` together with the
/// rolling factors equations, assuming `Σaᵢnᵢ = Σbᵢmᵢ`.
pub fn build_rolling_factors<F: Field>(
    a: &PolyMatrix<F>,
    m: &[Polynomial<F>; 4],
    n: &[Polynomial<F>; 4],
    options: ResolutionOptions,
    seed: u64,
) -> Result<RollingFactors<F>, FamilyError> {
    if a.rows() != 2 || a.cols() != 4 {
        return Err(FamilyError::Invalid(format!("A must be 2x4, got {}x{}", a.rows(), a.cols())));
    }
    let ring = a.ring().clone();
    let top: Vec<_> = (0..4).map(|j| a.get(0, j).clone()).collect();
    let bottom: Vec<_> = (0..4).map(|j| a.get(1, j).clone()).collect();
    let bm = dot(&bottom, m);
    if dot(&top, n) != bm {
        return Err(FamilyError::IdentityFails);
    }
    let mut gens = Vec::with_capacity(9);
    for i in 0..4 {
        for j in i + 1..4 {
            gens.push(&(&top[i] * &bottom[j]) - &(&top[j] * &bottom[i]));
        }
    }
    gens.extend([dot(&top, m), bm, dot(&bottom, n)]);
    let ideal = Ideal::new(&ring, gens);
    let codim = ideal.codimension().unwrap_or(ring.nvars() + 1);
    if codim != 4 {
        return Err(FamilyError::WrongCodimension { expected: 4, found: codim });
    }
    let raw = minimal_resolution(&ideal, 4, options)?;
    let symmetrized = symmetrize(&raw, seed)?;
    Ok(RollingFactors { ideal, raw, symmetrized })
}

/// The default instance over `ℚ[a₁..a₄, b₁..b₄]`: `A` generic and
/// `m = S·a`, `n = S·b` with `S` the antidiagonal unit matrix, so the
/// identity holds because `S` is symmetric. It is the cone over a divisor
/// of bidegree `(0, 2)` on the Segre embedding of `P¹ × P³`.
pub fn rolling_default_data<F: Field>() -> (PolyMatrix<F>, [Polynomial<F>; 4], [Polynomial<F>; 4]) {
    let ring = PolyRing::standard(["a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"]);
    let a = PolyMatrix::from_fn(&ring, 2, 4, |i, j| Polynomial::var(&ring, 4 * i + j));
    let m = [3, 2, 1, 0].map(|j| Polynomial::var(&ring, j));
    let n = [7, 6, 5, 4].map(|j| Polynomial::var(&ring, j));
    (a, m, n)
}

/// [`build_rolling_factors`] on [`rolling_default_data`].
pub fn rolling_default<F: Field>(seed: u64) -> Result<RollingFactors<F>, FamilyError> {
    let (a, m, n) = rolling_default_data();
    build_rolling_factors(&a, &m, &n, ResolutionOptions::default(), seed)
}
