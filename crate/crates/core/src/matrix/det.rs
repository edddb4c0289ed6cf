//! Determinants, minors, maximal wedges and Pfaffians of polynomial matrices.

use std::collections::HashMap;

use crate::error::MatrixError;
use crate::field::Field;
use crate::poly::Polynomial;

use super::poly_matrix::PolyMatrix;

/// Largest size evaluated by cofactor expansion; Bareiss above it.
const EXPANSION_LIMIT: usize = 4;

/// All `s × s` determinants with a fixed ordered list of `s` lines and every
/// `s`-subset of `npool` other lines, keyed by the subset's bitmask.
///
/// `entry(p, f)` is the entry on pool line `p` and fixed line `f`. The
/// expansion runs along the fixed lines one at a time, memoizing over the
/// pool lines used so far, so every subset determinant is produced by one
/// pass.
pub(crate) fn subset_determinants<'a, F: Field>(
    ring: &std::sync::Arc<crate::poly::PolyRing>,
    nfixed: usize,
    npool: usize,
    entry: impl Fn(usize, usize) -> &'a Polynomial<F>,
) -> HashMap<u64, Polynomial<F>> {
    assert!(npool <= 64, "subset expansion supports at most 64 lines");
    let mut layer: HashMap<u64, Polynomial<F>> = HashMap::new();
    layer.insert(0, Polynomial::one(ring));
    for c in 0..nfixed {
        let mut next: HashMap<u64, Vec<Polynomial<F>>> = HashMap::new();
        for (&mask, val) in &layer {
            for r in 0..npool {
                let bit = 1u64 << r;
                if mask & bit != 0 {
                    continue;
                }
                let a = entry(r, c);
                if a.is_zero() {
                    continue;
                }
                let below = (mask & (bit - 1)).count_ones() as usize;
                let mut t = val * a;
                if (below + c) % 2 == 1 {
                    t = -t;
                }
                next.entry(mask | bit).or_default().push(t);
            }
        }
        layer = next
            .into_iter()
            .map(|(m, parts)| (m, Polynomial::sum(ring, parts)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
    }
    layer
}

fn mask_of(idx: &[usize]) -> u64 {
    idx.iter().fold(0, |m, &i| m | (1u64 << i))
}

impl<F: Field> PolyMatrix<F> {
    fn require_square(&self) -> Result<(), MatrixError> {
        if self.rows() != self.cols() {
            return Err(MatrixError::ShapeMismatch(format!(
                "determinant of a {}×{} matrix",
                self.rows(),
                self.cols()
            )));
        }
        Ok(())
    }

    /// Determinant; cofactor expansion for small sizes, Bareiss otherwise.
    pub fn det(&self) -> Result<Polynomial<F>, MatrixError> {
        self.require_square()?;
        if self.rows() <= EXPANSION_LIMIT {
            self.det_expansion()
        } else {
            self.det_bareiss()
        }
    }

    /// Determinant by memoized cofactor expansion along columns.
    pub fn det_expansion(&self) -> Result<Polynomial<F>, MatrixError> {
        self.require_square()?;
        if self.rows() > 64 {
            return self.det_bareiss();
        }
        let n = self.rows();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut dets = subset_determinants(self.ring(), n, n, |r, c| self.get(r, c));
        Ok(dets.remove(&full).unwrap_or_else(|| Polynomial::zero(self.ring())))
    }

    /// Fraction-free Gaussian elimination; every division is exact.
    pub fn det_bareiss(&self) -> Result<Polynomial<F>, MatrixError> {
        self.require_square()?;
        let n = self.rows();
        let ring = self.ring().clone();
        if n == 0 {
            return Ok(Polynomial::one(&ring));
        }
        let mut a: Vec<Vec<Polynomial<F>>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut prev = Polynomial::one(&ring);
        let mut negate = false;
        for k in 0..n - 1 {
            // Prefer the sparsest nonzero pivot in the column.
            let Some(p) = (k..n).filter(|&i| !a[i][k].is_zero()).min_by_key(|&i| a[i][k].len()) else {
                return Ok(Polynomial::zero(&ring));
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.divide_exact(&prev)?;
                }
                a[i][k] = Polynomial::zero(&ring);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Determinant of the submatrix on `rows × cols`; equal-length, distinct,
    /// in-range index lists. The empty minor is 1.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Polynomial<F>, MatrixError> {
        if rows.len() != cols.len() {
            return Err(MatrixError::IndexError(format!(
                "{} rows and {} columns",
                rows.len(),
                cols.len()
            )));
        }
        self.submatrix(rows, cols)?.det()
    }

    /// The signed maximal minors of a `(k+1) × k` matrix:
    /// `w_i = (-1)^i · det(N without row i)` (rows counted from 0), so `w·N = 0`.
    pub fn top_wedge(&self) -> Result<Vec<Polynomial<F>>, MatrixError> {
        let (r, k) = self.shape();
        if r != k + 1 {
            return Err(MatrixError::ShapeMismatch(format!("top wedge of a {r}×{k} matrix")));
        }
        let mut dets = subset_determinants(self.ring(), k, r, |p, f| self.get(p, f));
        let full = mask_of(&(0..r).collect::<Vec<_>>());
        Ok((0..r)
            .map(|i| {
                let d = dets.remove(&(full & !(1u64 << i))).unwrap_or_else(|| Polynomial::zero(self.ring()));
                if i % 2 == 1 {
                    -d
                } else {
                    d
                }
            })
            .collect())
    }

    /// Every nonzero `s × s` minor as `(rows, cols, value)`, rows and columns ascending.
    pub fn minors(&self, s: usize) -> Vec<(Vec<usize>, Vec<usize>, Polynomial<F>)> {
        let mut out = Vec::new();
        if s > self.rows() || s > self.cols() {
            return out;
        }
        for rows in combinations(self.rows(), s) {
            let dets = subset_determinants(self.ring(), s, self.cols(), |p, f| self.get(rows[f], p));
            let mut found: Vec<_> = dets.into_iter().collect();
            found.sort_by_key(|(m, _)| *m);
            for (mask, p) in found {
                let cols = (0..self.cols()).filter(|j| mask >> j & 1 == 1).collect();
                out.push((rows.clone(), cols, p));
            }
        }
        out
    }

    /// Pfaffian of a skew matrix by expansion along the first row.
    pub fn pfaffian(&self) -> Result<Polynomial<F>, MatrixError> {
        if !self.is_skew() {
            return Err(MatrixError::NotSkew);
        }
        let n = self.rows();
        if n % 2 == 1 {
            return Ok(Polynomial::zero(self.ring()));
        }
        let mut memo = HashMap::new();
        let idx: Vec<usize> = (0..n).collect();
        Ok(self.pfaffian_rec(&idx, &mut memo))
    }

    fn pfaffian_rec(&self, idx: &[usize], memo: &mut HashMap<Vec<usize>, Polynomial<F>>) -> Polynomial<F> {
        if idx.is_empty() {
            return Polynomial::one(self.ring());
        }
        if let Some(p) = memo.get(idx) {
            return p.clone();
        }
        let first = idx[0];
        let mut parts = Vec::new();
        for pos in 1..idx.len() {
            let a = self.get(first, idx[pos]);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx[1..].iter().copied().filter(|&j| j != idx[pos]).collect();
            let mut t = a * &self.pfaffian_rec(&rest, memo);
            if pos % 2 == 0 {
                t = -t;
            }
            parts.push(t);
        }
        let p = Polynomial::sum(self.ring(), parts);
        memo.insert(idx.to_vec(), p.clone());
        p
    }
}

/// All `s`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(s);
    fn go(start: usize, n: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < s - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, s, cur, out);
            cur.pop();
        }
    }
    go(0, n, s, &mut cur, &mut out);
    out
}
