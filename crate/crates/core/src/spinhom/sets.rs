use std::fmt;

use crate::error::SpinorError;
use crate::field::Field;
use crate::matrix::PolyMatrix;

/// Validate a 1-based member list and return its bitmask.
fn mask_of(k: usize, members: &[usize]) -> Result<u64, SpinorError> {
    if k == 0 || k > 63 {
        return Err(SpinorError::InvalidSet(format!("k = {k} is out of range")));
    }
    let mut mask = 0u64;
    for &j in members {
        if j == 0 || j > k {
            return Err(SpinorError::InvalidSet(format!("index {j} outside 1..={k}")));
        }
        if mask & (1 << (j - 1)) != 0 {
            return Err(SpinorError::InvalidSet(format!("index {j} repeated")));
        }
        mask |= 1 << (j - 1);
    }
    Ok(mask)
}

fn columns_of(k: usize, mask: u64) -> Vec<usize> {
    (0..k).map(|j| if mask >> j & 1 == 1 { j } else { k + j }).collect()
}

fn members_of(k: usize, mask: u64) -> Vec<usize> {
    (0..k).filter(|j| mask >> j & 1 == 1).map(|j| j + 1).collect()
}

fn fmt_set(mask: u64, k: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let ms: Vec<String> = members_of(k, mask).iter().map(usize::to_string).collect();
    write!(f, "{{{}}}", ms.join(","))
}

macro_rules! coordinate_set {
    ($(#[$doc:meta])* $name:ident, $parity:expr) => {
        $(#[$doc])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name {
            k: usize,
            mask: u64,
        }

        impl $name {
            /// From 1-based members of `J ⊆ {1..k}`.
            pub fn new(k: usize, members: &[usize]) -> Result<Self, SpinorError> {
                Self::from_mask(k, mask_of(k, members)?)
            }

            /// Bit `j-1` of `mask` records `j ∈ J`.
            pub fn from_mask(k: usize, mask: u64) -> Result<Self, SpinorError> {
                if k == 0 || k > 63 || mask >> k != 0 {
                    return Err(SpinorError::InvalidSet(format!("mask {mask:#b} for k = {k}")));
                }
                let parity: fn(usize, usize) -> bool = $parity;
                if !parity(mask.count_ones() as usize, k) {
                    return Err(SpinorError::WrongParity { k });
                }
                Ok($name { k, mask })
            }

            pub fn k(&self) -> usize {
                self.k
            }

            pub fn mask(&self) -> u64 {
                self.mask
            }

            pub fn contains(&self, j: usize) -> bool {
                j >= 1 && j <= self.k && self.mask >> (j - 1) & 1 == 1
            }

            /// Members of `J`, 1-based and ascending.
            pub fn members(&self) -> Vec<usize> {
                members_of(self.k, self.mask)
            }

            /// 0-based columns of `M₁` in slot order: slot `j` holds `e_j` for
            /// `j ∈ J` and `f_j` otherwise.
            pub fn columns(&self) -> Vec<usize> {
                columns_of(self.k, self.mask)
            }

            /// All sets of this parity, ordered by bitmask.
            pub fn enumerate(k: usize) -> Vec<Self> {
                (0..1u64 << k).filter_map(|m| Self::from_mask(k, m).ok()).collect()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt_set(self.mask, self.k, f)
            }
        }
    };
}

coordinate_set!(
    /// A spinor subset: `#J ≡ k (mod 2)`.
    SpinorSet,
    |n, k| n % 2 == k % 2
);

coordinate_set!(
    /// A nonspinor subset: `#J ≡ k - 1 (mod 2)`.
    NonspinorSet,
    |n, k| n % 2 != k % 2
);

/// The `2^{k-1}` spinor sets, ordered by bitmask.
pub fn enumerate_spinor_sets(k: usize) -> Vec<SpinorSet> {
    SpinorSet::enumerate(k)
}

pub fn enumerate_nonspinor_sets(k: usize) -> Vec<NonspinorSet> {
    NonspinorSet::enumerate(k)
}

/// The `(k+1)×k` submatrix `N_J` of `M₁` on the columns of `J`.
pub fn spinor_submatrix<F: Field>(m1: &PolyMatrix<F>, set: &SpinorSet) -> Result<PolyMatrix<F>, SpinorError> {
    let k = set.k();
    if m1.cols() != 2 * k {
        return Err(crate::error::MatrixError::ShapeMismatch(format!(
            "M1 has {} columns, a spinor set for k = {k} needs {}",
            m1.cols(),
            2 * k
        ))
        .into());
    }
    Ok(m1.select_columns(&set.columns())?)
}
