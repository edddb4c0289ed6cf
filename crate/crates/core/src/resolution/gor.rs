use std::collections::HashMap;
use std::sync::Arc;

use crate::error::ResolutionError;
use crate::field::Field;
use crate::matrix::{ConstMatrix, PolyMatrix};
use crate::poly::{PolyRing, Polynomial};
use crate::report::Report;

/// A Gorenstein codimension four resolution in isotropic format
///
/// ```text
/// 0 ← S ←L― P₁ ←M₁― P₂ ←Q·ᵗM₁― P₃ ←ᵗL― P₄ ← 0
/// ```
///
/// with `L` of shape `1×(k+1)`, `M₁` of shape `(k+1)×2k` and `Q` a
/// symmetric nondegenerate form on `P₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorResolution<F: Field> {
    ring: Arc<PolyRing>,
    k: usize,
    l: PolyMatrix<F>,
    m1: PolyMatrix<F>,
    q: ConstMatrix<F>,
    d1: Vec<i64>,
    d2: Vec<i64>,
    alpha: i64,
}

fn entry_degree<F: Field>(p: &Polynomial<F>) -> Option<i64> {
    p.homogeneity().degree().map(i64::from)
}

impl<F: Field> GorResolution<F> {
    /// Assemble from explicit data, checking only shapes.
    pub fn from_parts(
        l: PolyMatrix<F>,
        m1: PolyMatrix<F>,
        q: ConstMatrix<F>,
        d1: Vec<i64>,
        d2: Vec<i64>,
        alpha: i64,
    ) -> Result<Self, ResolutionError> {
        let k = m1.cols() / 2;
        if k < 2 || m1.cols() != 2 * k {
            return Err(ResolutionError::Invalid(format!("M1 has {} columns, expected 2k with k ≥ 2", m1.cols())));
        }
        if l.shape() != (1, k + 1) || m1.rows() != k + 1 {
            return Err(ResolutionError::Invalid(format!(
                "L is {}x{} and M1 is {}x{}; expected 1x{} and {}x{}",
                l.rows(),
                l.cols(),
                m1.rows(),
                m1.cols(),
                k + 1,
                k + 1,
                2 * k
            )));
        }
        if q.rows() != 2 * k || q.cols() != 2 * k {
            return Err(ResolutionError::Invalid(format!("Q must be {0}x{0}", 2 * k)));
        }
        if d1.len() != k + 1 || d2.len() != 2 * k {
            return Err(ResolutionError::Invalid("degree lists do not match the module ranks".into()));
        }
        if !Arc::ptr_eq(l.ring(), m1.ring()) && l.ring() != m1.ring() {
            return Err(ResolutionError::Invalid("L and M1 live in different rings".into()));
        }
        let ring = l.ring().clone();
        let l = l.without_degrees();
        let m1 = m1.without_degrees();
        Ok(GorResolution { ring, k, l, m1, q, d1, d2, alpha })
    }

    /// Standard form `Q = J`, with degrees read off the entries.
    ///
    /// `d₁` are the degrees of the generators, `d₂[j]` the degree of column
    /// `j` of `M₁`, and `α = d₂[j] + d₂[j+k]` for the first pair where both
    /// are known.
    pub fn standard(l: PolyMatrix<F>, m1: PolyMatrix<F>) -> Result<Self, ResolutionError> {
        let k = m1.cols() / 2;
        let d1: Vec<i64> = (0..l.cols()).map(|j| entry_degree(l.get(0, j)).unwrap_or(0)).collect();
        let d2: Vec<i64> = (0..m1.cols())
            .map(|j| {
                (0..m1.rows())
                    .find_map(|i| {
                        let p = m1.get(i, j);
                        if p.is_zero() {
                            None
                        } else {
                            entry_degree(p).map(|d| d + d1.get(i).copied().unwrap_or(0))
                        }
                    })
                    .unwrap_or(0)
            })
            .collect();
        let alpha = if d2.len() == 2 * k && k > 0 { d2[0] + d2[k] } else { 0 };
        Self::from_parts(l, m1, ConstMatrix::hyperbolic(k), d1, d2, alpha)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The generator row `L = φ₁`.
    pub fn l(&self) -> &PolyMatrix<F> {
        &self.l
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        self.l.row(0)
    }

    /// First syzygies `M₁ = (A B) = φ₂`.
    pub fn m1(&self) -> &PolyMatrix<F> {
        &self.m1
    }

    pub fn q(&self) -> &ConstMatrix<F> {
        &self.q
    }

    pub fn d1(&self) -> &[i64] {
        &self.d1
    }

    pub fn d2(&self) -> &[i64] {
        &self.d2
    }

    /// Adjunction number: `P₄ = S(-α)`.
    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    /// Canonical weight `κ = α - Σ wt xᵢ`.
    pub fn kappa(&self) -> i64 {
        self.alpha - self.ring.weights().iter().map(|&w| i64::from(w)).sum::<i64>()
    }

    /// `A`, the first `k` columns of `M₁`.
    pub fn a_block(&self) -> PolyMatrix<F> {
        self.m1.select_columns(&(0..self.k).collect::<Vec<_>>()).expect("in range")
    }

    /// `B`, the last `k` columns of `M₁`.
    pub fn b_block(&self) -> PolyMatrix<F> {
        self.m1.select_columns(&(self.k..2 * self.k).collect::<Vec<_>>()).expect("in range")
    }

    /// `φ₃ = Q·ᵗM₁`.
    pub fn phi3(&self) -> PolyMatrix<F> {
        self.m1.transpose().left_mul_const(&self.q).expect("shapes agree")
    }

    /// `φ₄ = ᵗL`.
    pub fn phi4(&self) -> PolyMatrix<F> {
        self.l.transpose()
    }

    /// The four differentials `φ₁..φ₄`.
    pub fn differentials(&self) -> [PolyMatrix<F>; 4] {
        [self.l.clone(), self.m1.clone(), self.phi3(), self.phi4()]
    }

    /// A copy with `M₁` replaced, for symmetry actions and perturbations.
    pub fn with_m1(&self, m1: PolyMatrix<F>) -> Result<Self, ResolutionError> {
        Self::from_parts(self.l.clone(), m1, self.q.clone(), self.d1.clone(), self.d2.clone(), self.alpha)
    }

    /// Structural checks: the complex property, isotropy, the form,
    /// grading, degree symmetry and minimality.
    pub fn verify_structure(&self) -> Report {
        let mut r = Report::new();
        let lm = self.l.mul(&self.m1).expect("shapes");
        r.push("complex L·M1 = 0", lm.is_zero(), nonzero_witness(&lm));

        let iso = self.m1.mul(&self.phi3()).expect("shapes");
        r.push("isotropy M1·Q·tM1 = 0", iso.is_zero(), nonzero_witness(&iso));

        let tail = self.phi3().mul(&self.phi4()).expect("shapes");
        r.push("complex (Q·tM1)·tL = 0", tail.is_zero(), nonzero_witness(&tail));

        let det = self.q.det().expect("square");
        let form_ok = self.q.is_symmetric() && !det.is_zero();
        r.push("form Q symmetric and nondegenerate", form_ok, format!("det Q = {det}"));

        r.push("graded entries", self.grading_error().is_none(), self.grading_error().unwrap_or_default());

        let sym = self.degree_symmetry_error();
        r.push("degree symmetry against alpha", sym.is_none(), sym.unwrap_or_else(|| format!("alpha = {}", self.alpha)));

        let unit = self.unit_entry();
        r.push(
            "minimal (no unit entries)",
            unit.is_none(),
            unit.map(|(m, i, j)| format!("Nonminimal: unit entry in {m} at ({}, {})", i + 1, j + 1)).unwrap_or_default(),
        );
        r
    }

    fn grading_error(&self) -> Option<String> {
        for (j, p) in self.l.row(0).iter().enumerate() {
            if !p.is_zero() && entry_degree(p) != Some(self.d1[j]) {
                return Some(format!("L_{} is not homogeneous of degree {}", j + 1, self.d1[j]));
            }
        }
        for i in 0..=self.k {
            for j in 0..2 * self.k {
                let p = self.m1.get(i, j);
                if !p.is_zero() && entry_degree(p) != Some(self.d2[j] - self.d1[i]) {
                    return Some(format!(
                        "M1 entry ({}, {}) is not homogeneous of degree {}",
                        i + 1,
                        j + 1,
                        self.d2[j] - self.d1[i]
                    ));
                }
            }
        }
        None
    }

    fn degree_symmetry_error(&self) -> Option<String> {
        for i in 0..2 * self.k {
            for j in 0..2 * self.k {
                if !self.q.get(i, j).is_zero() && self.d2[i] + self.d2[j] != self.alpha {
                    return Some(format!(
                        "Q pairs columns {} and {} of degrees {} and {}, but alpha = {}",
                        i + 1,
                        j + 1,
                        self.d2[i],
                        self.d2[j],
                        self.alpha
                    ));
                }
            }
        }
        let mut counts: HashMap<i64, i64> = HashMap::new();
        for &d in &self.d2 {
            *counts.entry(d).or_default() += 1;
            *counts.entry(self.alpha - d).or_default() -= 1;
        }
        if counts.values().any(|&c| c != 0) {
            return Some(format!("degrees of P2 {:?} are not symmetric about alpha/2", self.d2));
        }
        None
    }

    fn unit_entry(&self) -> Option<(&'static str, usize, usize)> {
        let is_unit = |p: &Polynomial<F>| !p.is_zero() && p.is_constant();
        if let Some(j) = self.l.row(0).iter().position(is_unit) {
            return Some(("L", 0, j));
        }
        for i in 0..self.m1.rows() {
            if let Some(j) = self.m1.row(i).iter().position(is_unit) {
                return Some(("M1", i, j));
            }
        }
        None
    }
}

/// First nonzero entry of a matrix that should vanish, as a witness.
pub(crate) fn nonzero_witness<F: Field>(m: &PolyMatrix<F>) -> String {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let p = m.get(i, j);
            if !p.is_zero() {
                return format!("entry ({}, {}) = {}", i + 1, j + 1, p);
            }
        }
    }
    String::new()
}
