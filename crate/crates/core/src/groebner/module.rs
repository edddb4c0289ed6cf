//! Free modules `⊕ S(-d_c)` and their sparse elements.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::field::Field;
use crate::matrix::PolyMatrix;
use crate::poly::{Monomial, PolyRing, Polynomial};

/// How module terms are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ModuleOrder {
    /// Position over term: the component decides first, lower index is larger.
    #[default]
    Pot,
    /// Term over position: shifted degree, then the ring order, then the component.
    Top,
}

/// A free module over a polynomial ring with graded component shifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    ring: Arc<PolyRing>,
    shifts: Vec<i64>,
    order: ModuleOrder,
}

/// One term `c · m · e_comp`.
pub type Term<F> = (usize, Monomial, F);

/// Element of a free module, terms strictly descending in the module order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector<F> {
    pub(crate) terms: Vec<Term<F>>,
}

impl FreeModule {
    pub fn new(ring: &Arc<PolyRing>, shifts: Vec<i64>, order: ModuleOrder) -> Self {
        FreeModule { ring: ring.clone(), shifts, order }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    /// Degree of `m · e_comp`.
    pub fn degree(&self, comp: usize, m: &Monomial) -> i64 {
        self.ring.degree(m) as i64 + self.shifts[comp]
    }

    pub fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        match self.order {
            ModuleOrder::Pot => b.0.cmp(&a.0).then_with(|| self.ring.cmp(a.1, b.1)),
            ModuleOrder::Top => self
                .degree(a.0, a.1)
                .cmp(&self.degree(b.0, b.1))
                .then_with(|| self.ring.cmp(a.1, b.1))
                .then_with(|| b.0.cmp(&a.0)),
        }
    }

    pub fn vector_from_terms<F: Field>(&self, mut terms: Vec<Term<F>>) -> Vector<F> {
        terms.sort_by(|x, y| self.cmp((y.0, &y.1), (x.0, &x.1)));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.0 == t.0 && last.1 == t.1 => last.2 += &t.2,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.2.is_zero());
        Vector { terms: out }
    }

    /// The vector whose components are the given polynomials.
    pub fn vector_from_polys<F: Field>(&self, polys: &[Polynomial<F>]) -> Vector<F> {
        let terms = polys
            .iter()
            .enumerate()
            .flat_map(|(c, p)| p.terms().iter().map(move |(m, k)| (c, m.clone(), k.clone())))
            .collect();
        self.vector_from_terms(terms)
    }

    /// Columns of a matrix with `rank` rows.
    pub fn columns<F: Field>(&self, m: &PolyMatrix<F>) -> Vec<Vector<F>> {
        (0..m.cols()).map(|j| self.vector_from_polys(&m.column(j))).collect()
    }

    /// The basis vector `e_comp`.
    pub fn basis_vector<F: Field>(&self, comp: usize) -> Vector<F> {
        Vector { terms: vec![(comp, Monomial::one(self.ring.nvars()), F::one())] }
    }

    pub fn to_polys<F: Field>(&self, v: &Vector<F>) -> Vec<Polynomial<F>> {
        let mut buckets: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); self.rank()];
        for (c, m, k) in &v.terms {
            buckets[*c].push((m.clone(), k.clone()));
        }
        buckets.into_iter().map(|b| Polynomial::from_terms(&self.ring, b)).collect()
    }

    /// Matrix whose columns are the given vectors.
    pub fn to_matrix<F: Field>(&self, vs: &[Vector<F>]) -> PolyMatrix<F> {
        let cols: Vec<Vec<Polynomial<F>>> = vs.iter().map(|v| self.to_polys(v)).collect();
        PolyMatrix::from_fn(&self.ring, self.rank(), vs.len(), |i, j| cols[j][i].clone())
    }

    /// `a + c·m·b` (or `a - c·m·b` with `negate`), merging by the module order.
    pub fn add_scaled<F: Field>(&self, a: &[Term<F>], b: &Vector<F>, m: &Monomial, c: &F, negate: bool) -> Vec<Term<F>> {
        let coeff = if negate { -c.clone() } else { c.clone() };
        let mut out = Vec::with_capacity(a.len() + b.terms.len());
        let mut i = 0;
        let mut bi = b.terms.iter().map(|(bc, bm, bk)| (*bc, bm.mul(m), bk.mul_ref(&coeff))).peekable();
        while i < a.len() {
            let Some(next) = bi.peek() else { break };
            match self.cmp((a[i].0, &a[i].1), (next.0, &next.1)) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => out.push(bi.next().expect("peeked")),
                Ordering::Equal => {
                    let (_, _, k) = bi.next().expect("peeked");
                    let s = a[i].2.add_ref(&k);
                    if !s.is_zero() {
                        out.push((a[i].0, a[i].1.clone(), s));
                    }
                    i += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(bi);
        out
    }

    pub fn add<F: Field>(&self, a: &Vector<F>, b: &Vector<F>) -> Vector<F> {
        let one = Monomial::one(self.ring.nvars());
        Vector { terms: self.add_scaled(&a.terms, b, &one, &F::one(), false) }
    }

    pub fn sub<F: Field>(&self, a: &Vector<F>, b: &Vector<F>) -> Vector<F> {
        let one = Monomial::one(self.ring.nvars());
        Vector { terms: self.add_scaled(&a.terms, b, &one, &F::one(), true) }
    }

    /// `p · v` for a polynomial `p`.
    pub fn scale_poly<F: Field>(&self, v: &Vector<F>, p: &Polynomial<F>) -> Vector<F> {
        let mut acc: Vec<Term<F>> = Vec::new();
        for (m, c) in p.terms() {
            acc = self.add_scaled(&acc, v, m, c, false);
        }
        Vector { terms: acc }
    }

    /// Linear combination `Σ p_i · v_i`.
    pub fn combine<F: Field>(&self, coeffs: &[Polynomial<F>], vs: &[Vector<F>]) -> Vector<F> {
        let mut acc = Vector::zero();
        for (p, v) in coeffs.iter().zip(vs) {
            if !p.is_zero() && !v.is_zero() {
                acc = self.add(&acc, &self.scale_poly(v, p));
            }
        }
        acc
    }

    /// Homogeneous degree of a nonzero vector, if it is homogeneous.
    pub fn homogeneous_degree<F: Field>(&self, v: &Vector<F>) -> Option<i64> {
        let mut it = v.terms.iter().map(|(c, m, _)| self.degree(*c, m));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }
}

impl<F: Field> Vector<F> {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn leading_term(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Vector { terms: self.terms.iter().map(|(i, m, k)| (*i, m.clone(), k.mul_ref(c))).collect() }
    }

    pub fn monic(&self) -> Self {
        match self.terms.first() {
            Some((_, _, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    /// Whether any term lies in a component below `bound`.
    pub fn touches_below(&self, bound: usize) -> bool {
        self.terms.iter().any(|t| t.0 < bound)
    }
}
