use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::SpinorError;
use crate::field::Field;
use crate::matrix::ConstMatrix;

use super::sets::SpinorSet;

/// Which component of the isotropic frames to sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Component {
    Plus,
    Minus,
}

/// `A·ᵗB + B·ᵗA` for `M = (A B)` with `2k` columns.
pub fn isotropy_defect<F: Field>(m: &ConstMatrix<F>) -> ConstMatrix<F> {
    let k = m.cols() / 2;
    ConstMatrix::from_fn(m.rows(), m.rows(), |i, j| {
        let mut s = F::zero();
        for c in 0..k {
            s += &m.get(i, c).mul_ref(m.get(j, k + c));
            s += &m.get(i, k + c).mul_ref(m.get(j, c));
        }
        s
    })
}

/// `M₀ = (I_k 0; 0 0)` of shape `(k+1)×2k`.
pub fn m0<F: Field>(k: usize) -> ConstMatrix<F> {
    ConstMatrix::from_fn(k + 1, 2 * k, |i, j| if i == j && i < k { F::one() } else { F::zero() })
}

/// Dimension of the tangent space at `M` to the variety of `(k+1)×2k`
/// matrices with `A·ᵗB` skew: the nullity of the Jacobian of the
/// equations `(A·ᵗB + B·ᵗA)_{ij} = 0`, `i ≤ j`.
pub fn tangent_dim_vk<F: Field>(m: &ConstMatrix<F>) -> Result<usize, SpinorError> {
    let (rows, cols) = (m.rows(), m.cols());
    if cols % 2 != 0 || rows != cols / 2 + 1 {
        return Err(crate::error::MatrixError::ShapeMismatch(format!("{rows}x{cols} is not (k+1)x2k")).into());
    }
    if !isotropy_defect(m).is_zero() {
        return Err(SpinorError::NotOnVariety);
    }
    let k = cols / 2;
    let var = |r: usize, c: usize| r * cols + c;
    let neq = rows * (rows + 1) / 2;
    let mut jac = ConstMatrix::<F>::zero(neq, rows * cols);
    let mut e = 0;
    for i in 0..rows {
        for j in i..rows {
            let mut bump = |v: usize, x: &F| {
                let y = jac.get(e, v).add_ref(x);
                jac.set(e, v, y);
            };
            for c in 0..k {
                bump(var(i, c), m.get(j, k + c));
                bump(var(j, k + c), m.get(i, c));
                bump(var(i, k + c), m.get(j, c));
                bump(var(j, c), m.get(i, k + c));
            }
            e += 1;
        }
    }
    Ok(rows * cols - jac.rank())
}

/// `(3k² + k)/2`.
pub fn expected_tangent_dim(k: usize) -> usize {
    (3 * k * k + k) / 2
}

/// A random `k×2k` frame whose rows span a maximal isotropic subspace:
/// `g·(I X)` with `X` skew and `g` invertible, with columns `k` and `2k`
/// interchanged for [`Component::Minus`]. Even `k` only.
pub fn sample_frame<F: Field>(k: usize, component: Component, seed: u64) -> Result<ConstMatrix<F>, SpinorError> {
    if k == 0 || !k.is_multiple_of(2) {
        return Err(SpinorError::Unsupported(format!("frames are sampled for even k only, got k = {k}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = ConstMatrix::<F>::zero(k, k);
    for i in 0..k {
        for j in i + 1..k {
            let v = F::from_i64(rng.gen_range(-9..=9));
            x.set(i, j, v.clone());
            x.set(j, i, -v);
        }
    }
    let g = loop {
        let g = ConstMatrix::from_fn(k, k, |_, _| F::from_i64(rng.gen_range(-9..=9)));
        if !g.det().expect("square").is_zero() {
            break g;
        }
    };
    let base = ConstMatrix::from_fn(k, 2 * k, |i, j| {
        if j < k {
            if i == j {
                F::one()
            } else {
                F::zero()
            }
        } else {
            x.get(i, j - k).clone()
        }
    });
    let mut frame = g.mul(&base).expect("shapes");
    if component == Component::Minus {
        for i in 0..k {
            let (a, b) = (frame.get(i, k - 1).clone(), frame.get(i, 2 * k - 1).clone());
            frame.set(i, k - 1, b);
            frame.set(i, 2 * k - 1, a);
        }
    }
    Ok(frame)
}

/// The `k×k` minor of a `k×2k` frame on the columns of a coordinate set.
pub fn frame_minor<F: Field>(frame: &ConstMatrix<F>, columns: &[usize]) -> F {
    let rows: Vec<usize> = (0..frame.rows()).collect();
    frame.submatrix(&rows, columns).det().expect("square")
}

/// `Δ_J` of a frame for a spinor set.
pub fn spinor_minor<F: Field>(frame: &ConstMatrix<F>, set: &SpinorSet) -> F {
    frame_minor(frame, &set.columns())
}
