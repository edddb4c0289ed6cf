use std::sync::Arc;

use crate::error::{FamilyError, MatrixError};
use crate::field::Field;
use crate::groebner::Ideal;
use crate::matrix::PolyMatrix;
use crate::poly::{PolyRing, Polynomial};
use crate::resolution::GorResolution;

/// Signed submaximal Pfaffians `pᵢ = (-1)^{i} Pf(M without row and column i)`
/// (0-based `i`) of an odd skew matrix; they satisfy `p·M = 0`.
pub fn signed_pfaffians<F: Field>(m: &PolyMatrix<F>) -> Result<Vec<Polynomial<F>>, MatrixError> {
    let n = m.rows();
    (0..n)
        .map(|i| {
            let idx: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            let pf = m.submatrix(&idx, &idx)?.pfaffian()?;
            Ok(if i % 2 == 0 { pf } else { -&pf })
        })
        .collect()
}

/// The hypersurface section `h = 0` of the Pfaffian ideal of a
/// `(2l+1)×(2l+1)` skew matrix `M`:
///
/// ```text
/// (A B) = ( -h·I   M   )      L = (Pf₁, …, Pf_{2l+1}, h)
///         (  Pf    0…0 )
/// ```
///
/// with the Pfaffians signed as in [`signed_pfaffians`], so `L·(A B) = 0`.
pub fn build_pfaffian_hypersurface<F: Field>(
    m: &PolyMatrix<F>,
    h: &Polynomial<F>,
) -> Result<GorResolution<F>, FamilyError> {
    let n = m.rows();
    if !m.is_skew() {
        return Err(FamilyError::NotSkew);
    }
    if n.is_multiple_of(2) || n < 3 {
        return Err(FamilyError::Invalid(format!("M must have odd size at least 3, got {n}")));
    }
    if h.is_zero() || h.is_constant() || !h.homogeneity().is_homogeneous() {
        return Err(FamilyError::Invalid(format!("h = {h} must be homogeneous of positive degree")));
    }
    let ring = m.ring().clone();
    let pf = signed_pfaffians(m)?;
    let mut gens = pf.clone();
    gens.push(h.clone());
    let codim = Ideal::new(&ring, gens.iter().cloned()).codimension().unwrap_or(ring.nvars() + 1);
    if codim != 4 {
        return Err(FamilyError::WrongCodimension { expected: 4, found: codim });
    }
    let m1 = PolyMatrix::from_fn(&ring, n + 1, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) if i == j => -h,
        (true, true) => Polynomial::zero(&ring),
        (true, false) => m.get(i, j - n).clone(),
        (false, true) => pf[j].clone(),
        (false, false) => Polynomial::zero(&ring),
    });
    let l = PolyMatrix::from_rows(&ring, vec![gens])?;
    Ok(GorResolution::standard(l, m1)?)
}

/// A generic `(2l+1)×(2l+1)` skew matrix with entries `m_ij` (`i < j`)
/// and a further variable `h`, in a standard graded ring.
pub fn generic_pfaffian_data<F: Field>(l: usize) -> (Arc<PolyRing>, PolyMatrix<F>, Polynomial<F>) {
    let n = 2 * l + 1;
    let mut names = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            names.push(format!("m{i}_{j}"));
        }
    }
    names.push("h".to_string());
    let ring = PolyRing::standard(names);
    let var = |i: usize, j: usize| Polynomial::named(&ring, &format!("m{}_{}", i + 1, j + 1));
    let m = PolyMatrix::from_fn(&ring, n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => var(i, j),
        std::cmp::Ordering::Greater => -&var(j, i),
        std::cmp::Ordering::Equal => Polynomial::zero(&ring),
    });
    let h = Polynomial::named(&ring, "h");
    (ring, m, h)
}

/// [`build_pfaffian_hypersurface`] on [`generic_pfaffian_data`].
pub fn generic_pfaffian_hypersurface<F: Field>(l: usize) -> GorResolution<F> {
    let (_, m, h) = generic_pfaffian_data(l);
    build_pfaffian_hypersurface(&m, &h).expect("generic data has codimension 4")
}
