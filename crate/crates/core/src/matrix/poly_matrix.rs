use std::fmt;
use std::sync::Arc;

use crate::error::MatrixError;
use crate::field::Field;
use crate::poly::{Homogeneity, PolyRing, Polynomial};

use super::constant::ConstMatrix;

/// Matrix with polynomial entries, row-major.
///
/// Optional degree lists describe a graded map: entry `(i, j)` is then
/// homogeneous of degree `col_degrees[j] - row_degrees[i]`.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix<F> {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<F>>,
    row_degrees: Option<Vec<i64>>,
    col_degrees: Option<Vec<i64>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn new(
        ring: &Arc<PolyRing>,
        rows: usize,
        cols: usize,
        entries: Vec<Polynomial<F>>,
    ) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::ShapeMismatch(format!(
                "{} entries for a {rows}×{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|p| p.ring() != ring) {
            return Err(MatrixError::Arith(crate::error::ArithError::RingMismatch));
        }
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, entries, row_degrees: None, col_degrees: None })
    }

    pub fn zero(ring: &Arc<PolyRing>, rows: usize, cols: usize) -> Self {
        Self::from_fn(ring, rows, cols, |_, _| Polynomial::zero(ring))
    }

    pub fn identity(ring: &Arc<PolyRing>, n: usize) -> Self {
        Self::from_fn(ring, n, n, |i, j| {
            if i == j {
                Polynomial::one(ring)
            } else {
                Polynomial::zero(ring)
            }
        })
    }

    pub fn from_fn(
        ring: &Arc<PolyRing>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial<F>,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { ring: ring.clone(), rows, cols, entries, row_degrees: None, col_degrees: None }
    }

    pub fn from_rows(ring: &Arc<PolyRing>, rows: Vec<Vec<Polynomial<F>>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::ShapeMismatch("ragged rows".into()));
        }
        Self::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    /// Build from a fixed literal such as `"[a, b; c, d]"`; panics on malformed input.
    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> Self {
        let rows = crate::poly::parse::parse_matrix_literal(ring, text)
            .unwrap_or_else(|e| panic!("bad matrix literal: {e}"));
        Self::from_rows(ring, rows).expect("ragged matrix literal")
    }

    /// Embed a constant matrix.
    pub fn from_const(ring: &Arc<PolyRing>, m: &ConstMatrix<F>) -> Self {
        Self::from_fn(ring, m.rows(), m.cols(), |i, j| Polynomial::constant(ring, m.get(i, j).clone()))
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<F>) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial<F>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial<F>> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Polynomial<F>] {
        &self.entries
    }

    pub fn row_degrees(&self) -> Option<&[i64]> {
        self.row_degrees.as_deref()
    }

    pub fn col_degrees(&self) -> Option<&[i64]> {
        self.col_degrees.as_deref()
    }

    /// Attach degree lists, checking that every nonzero entry has the prescribed degree.
    pub fn with_degrees(mut self, row_degrees: Vec<i64>, col_degrees: Vec<i64>) -> Result<Self, MatrixError> {
        if row_degrees.len() != self.rows || col_degrees.len() != self.cols {
            return Err(MatrixError::ShapeMismatch("degree list lengths".into()));
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = col_degrees[j] - row_degrees[i];
                match self.get(i, j).homogeneity() {
                    Homogeneity::Zero => {}
                    Homogeneity::Degree(d) if d as i64 == want => {}
                    _ => {
                        return Err(MatrixError::ShapeMismatch(format!(
                            "entry ({i}, {j}) is not homogeneous of degree {want}"
                        )))
                    }
                }
            }
        }
        self.row_degrees = Some(row_degrees);
        self.col_degrees = Some(col_degrees);
        Ok(self)
    }

    pub fn without_degrees(mut self) -> Self {
        self.row_degrees = None;
        self.col_degrees = None;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn is_skew(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                self.get(i, i).is_zero() && (0..i).all(|j| self.get(i, j) == &-self.get(j, i))
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone());
        if let (Some(r), Some(c)) = (&self.row_degrees, &self.col_degrees) {
            t.row_degrees = Some(c.iter().map(|d| -d).collect());
            t.col_degrees = Some(r.iter().map(|d| -d).collect());
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch(format!(
                "{}×{} times {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.ring != other.ring {
            return Err(MatrixError::Arith(crate::error::ArithError::RingMismatch));
        }
        let mut out = Self::from_fn(&self.ring, self.rows, other.cols, |i, j| {
            let parts = (0..self.cols).filter_map(|l| {
                let (a, b) = (self.get(i, l), other.get(l, j));
                if a.is_zero() || b.is_zero() {
                    None
                } else {
                    Some(a * b)
                }
            });
            Polynomial::sum(&self.ring, parts)
        });
        if self.col_degrees.is_some() && self.col_degrees == other.row_degrees {
            out.row_degrees = self.row_degrees.clone();
            out.col_degrees = other.col_degrees.clone();
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(
        &self,
        other: &Self,
        f: impl Fn(&Polynomial<F>, &Polynomial<F>) -> Polynomial<F>,
    ) -> Result<Self, MatrixError> {
        if self.shape() != other.shape() {
            return Err(MatrixError::ShapeMismatch("entrywise operation on different shapes".into()));
        }
        let mut out = Self::from_fn(&self.ring, self.rows, self.cols, |i, j| f(self.get(i, j), other.get(i, j)));
        if self.row_degrees == other.row_degrees && self.col_degrees == other.col_degrees {
            out.row_degrees = self.row_degrees.clone();
            out.col_degrees = self.col_degrees.clone();
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.map(|p| -p);
        out.row_degrees = self.row_degrees.clone();
        out.col_degrees = self.col_degrees.clone();
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = self.map(|p| p.scale(c));
        out.row_degrees = self.row_degrees.clone();
        out.col_degrees = self.col_degrees.clone();
        out
    }

    /// Entrywise map; degree lists are dropped.
    pub fn map(&self, f: impl Fn(&Polynomial<F>) -> Polynomial<F>) -> Self {
        Self::from_fn(&self.ring, self.rows, self.cols, |i, j| f(self.get(i, j)))
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> PolyMatrix<G> {
        PolyMatrix::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j).map_coeffs(&f))
    }

    fn check_indices(&self, rows: &[usize], cols: &[usize]) -> Result<(), MatrixError> {
        for (idx, bound, what) in [(rows, self.rows, "row"), (cols, self.cols, "column")] {
            for (n, &i) in idx.iter().enumerate() {
                if i >= bound {
                    return Err(MatrixError::IndexError(format!("{what} {i} out of range 0..{bound}")));
                }
                if idx[..n].contains(&i) {
                    return Err(MatrixError::IndexError(format!("repeated {what} index {i}")));
                }
            }
        }
        Ok(())
    }

    /// Submatrix on the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self, MatrixError> {
        self.check_indices(rows, cols)?;
        let mut out = Self::from_fn(&self.ring, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone());
        if let (Some(r), Some(c)) = (&self.row_degrees, &self.col_degrees) {
            out.row_degrees = Some(rows.iter().map(|&i| r[i]).collect());
            out.col_degrees = Some(cols.iter().map(|&j| c[j]).collect());
        }
        Ok(out)
    }

    pub fn select_columns(&self, cols: &[usize]) -> Result<Self, MatrixError> {
        self.submatrix(&(0..self.rows).collect::<Vec<_>>(), cols)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Result<Self, MatrixError> {
        self.submatrix(rows, &(0..self.cols).collect::<Vec<_>>())
    }

    /// Horizontal concatenation `(self other)`.
    pub fn hcat(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.rows != other.rows {
            return Err(MatrixError::ShapeMismatch("hcat of different row counts".into()));
        }
        Ok(Self::from_fn(&self.ring, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    /// Vertical concatenation.
    pub fn vcat(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.cols {
            return Err(MatrixError::ShapeMismatch("vcat of different column counts".into()));
        }
        Ok(Self::from_fn(&self.ring, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        }))
    }

    /// Entrywise evaluation at a point.
    pub fn evaluate(&self, point: &[F]) -> Result<ConstMatrix<F>, MatrixError> {
        let vals = self
            .entries
            .iter()
            .map(|p| p.evaluate(point))
            .collect::<Result<Vec<_>, _>>()?;
        ConstMatrix::new(self.rows, self.cols, vals)
    }

    /// Multiply by a constant matrix on the left: `C·self`.
    pub fn left_mul_const(&self, c: &ConstMatrix<F>) -> Result<Self, MatrixError> {
        Self::from_const(&self.ring, c).mul(self)
    }

    /// Multiply by a constant matrix on the right: `self·C`.
    pub fn right_mul_const(&self, c: &ConstMatrix<F>) -> Result<Self, MatrixError> {
        self.mul(&Self::from_const(&self.ring, c))
    }

    /// Constant matrix of coefficients, if every entry is constant.
    pub fn to_const(&self) -> Option<ConstMatrix<F>> {
        if self.entries.iter().all(Polynomial::is_constant) {
            let vals = self.entries.iter().map(Polynomial::constant_term).collect();
            ConstMatrix::new(self.rows, self.cols, vals).ok()
        } else {
            None
        }
    }
}

impl<F: Field> fmt::Display for PolyMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, p) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{p}")?;
            }
        }
        write!(f, "]")
    }
}

impl<F: Field> fmt::Debug for PolyMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix{}x{}{self}", self.rows, self.cols)
    }
}
