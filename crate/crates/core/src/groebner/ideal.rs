use std::sync::Arc;

use crate::error::GroebnerError;
use crate::field::Field;
use crate::matrix::PolyMatrix;
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

use super::engine::{Engine, GbOptions};
use super::module::{FreeModule, ModuleOrder, Vector};

/// An ideal given by generators; zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal<F: Field> {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial<F>>,
}

/// Reduced Gröbner basis of an ideal under its ring's order.
#[derive(Clone)]
pub struct GBasis<F: Field> {
    ideal: Ideal<F>,
    engine: Arc<Engine<F>>,
}

/// Gröbner basis of a submodule of a free module. When built with
/// representations, each basis vector remembers how it was obtained from
/// the generators.
#[derive(Clone)]
pub struct ModuleGB<F: Field> {
    engine: Arc<Engine<F>>,
    ngens: usize,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Arc<PolyRing>, gens: impl IntoIterator<Item = Polynomial<F>>) -> Self {
        Ideal { ring: ring.clone(), gens: gens.into_iter().filter(|g| !g.is_zero()).collect() }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.homogeneity().is_homogeneous())
    }

    /// The same ideal in a copy of the ring with another order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        let ring = self.ring.with_order(order);
        Ideal { gens: self.gens.iter().map(|g| g.with_ring(&ring)).collect(), ring }
    }

    fn module(&self) -> FreeModule {
        FreeModule::new(&self.ring, vec![0], ModuleOrder::Pot)
    }

    pub fn groebner_basis(&self) -> Result<GBasis<F>, GroebnerError> {
        self.groebner_basis_with(GbOptions::default())
    }

    pub fn groebner_basis_with(&self, options: GbOptions) -> Result<GBasis<F>, GroebnerError> {
        let module = self.module();
        let mut engine = Engine::new(&module, self.gens.len(), false, options);
        for (i, g) in self.gens.iter().enumerate() {
            engine.add_input(module.vector_from_polys(std::slice::from_ref(g)), i);
        }
        engine.complete()?;
        let reduced = engine.reduced();
        let engine = Engine::from_basis(&module, self.gens.len(), false, reduced);
        Ok(GBasis { ideal: self.clone(), engine: Arc::new(engine) })
    }

    /// Whether `p` lies in the ideal.
    pub fn contains(&self, p: &Polynomial<F>) -> Result<bool, GroebnerError> {
        Ok(self.groebner_basis()?.contains(p))
    }

    /// Krull dimension of `S/I`.
    pub fn dimension(&self) -> Result<usize, GroebnerError> {
        self.groebner_basis()?.dimension()
    }

    /// Codimension of the ideal, `n - dim S/I`.
    pub fn codimension(&self) -> Result<usize, GroebnerError> {
        Ok(self.ring.nvars() - self.dimension()?)
    }

    /// `(I : f) = {g : g·f ∈ I}`, returned by its reduced Gröbner basis.
    pub fn quotient(&self, f: &Polynomial<F>) -> Result<Ideal<F>, GroebnerError> {
        self.quotient_with(f, GbOptions::default())
    }

    pub fn quotient_with(&self, f: &Polynomial<F>, options: GbOptions) -> Result<Ideal<F>, GroebnerError> {
        if f.is_zero() {
            return Ok(Ideal::new(&self.ring, [Polynomial::one(&self.ring)]));
        }
        let row: Vec<Polynomial<F>> = std::iter::once(f.clone()).chain(self.gens.iter().cloned()).collect();
        let m = PolyMatrix::from_fn(&self.ring, 1, row.len(), |_, j| row[j].clone());
        let syz = syzygy_columns(&m, ModuleOrder::Pot, options)?;
        let first = Ideal::new(&self.ring, syz.into_iter().map(|mut c| c.swap_remove(0)));
        let gb = first.groebner_basis_with(options)?;
        Ok(Ideal::new(&self.ring, gb.basis()))
    }

    /// Generators of the sum of two ideals.
    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        Ideal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned())
    }
}

/// Size of a largest set of variables containing the support of no leading monomial.
fn max_independent_set(nvars: usize, leads: &[Monomial]) -> usize {
    let supports: Vec<u128> = leads
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .fold(0u128, |acc, (i, &e)| if e > 0 { acc | (1 << i) } else { acc })
        })
        .collect();
    fn go(i: usize, n: usize, chosen: u128, size: usize, supports: &[u128], best: &mut usize) {
        if size + (n - i) <= *best {
            return;
        }
        if i == n {
            *best = size;
            return;
        }
        let with = chosen | (1 << i);
        if supports.iter().all(|s| s & !with != 0) {
            go(i + 1, n, with, size + 1, supports, best);
        }
        go(i + 1, n, chosen, size, supports, best);
    }
    assert!(nvars <= 128, "dimension search supports at most 128 variables");
    let mut best = 0;
    go(0, nvars, 0, 0, &supports, &mut best);
    best
}

impl<F: Field> GBasis<F> {
    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    /// The reduced basis, monic, descending by leading monomial.
    pub fn basis(&self) -> Vec<Polynomial<F>> {
        let module = &self.engine.module;
        self.engine.elems.iter().map(|e| module.to_polys(&e.v).swap_remove(0)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.engine.elems.iter().map(|e| e.lead.clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.engine.elems.iter().any(|e| e.lead.is_one())
    }

    /// Unique remainder of `p` modulo the ideal.
    pub fn normal_form(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let module = &self.engine.module;
        let v = module.vector_from_polys(std::slice::from_ref(p));
        let (r, _) = self.engine.reduce(v, Vector::zero(), false, |_, _, _| {});
        module.to_polys(&r).swap_remove(0)
    }

    pub fn contains(&self, p: &Polynomial<F>) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn dimension(&self) -> Result<usize, GroebnerError> {
        if self.is_unit() {
            return Err(GroebnerError::UnitIdeal);
        }
        Ok(max_independent_set(self.ideal.ring.nvars(), &self.leading_monomials()))
    }
}

impl<F: Field> ModuleGB<F> {
    /// Gröbner basis of the submodule generated by the columns of `m`.
    pub fn columns(m: &PolyMatrix<F>, order: ModuleOrder, options: GbOptions) -> Result<Self, GroebnerError> {
        let shifts = m.row_degrees().map(<[i64]>::to_vec).unwrap_or_else(|| vec![0; m.rows()]);
        let module = FreeModule::new(m.ring(), shifts, order);
        let gens = module.columns(m);
        let mut engine = Engine::new(&module, gens.len(), true, options);
        for (i, g) in gens.into_iter().enumerate() {
            engine.add_input(g, i);
        }
        engine.complete()?;
        Ok(ModuleGB { engine: Arc::new(engine), ngens: m.cols() })
    }

    pub fn module(&self) -> &FreeModule {
        &self.engine.module
    }

    /// Leading terms of a minimal basis, as `(component, monomial)`.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.engine
            .minimal_indices()
            .into_iter()
            .map(|i| (self.engine.elems[i].comp, self.engine.elems[i].lead.clone()))
            .collect()
    }

    /// Remainder of `target` after full reduction.
    pub fn normal_form(&self, target: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
        let module = &self.engine.module;
        let (r, _) = self.engine.reduce(module.vector_from_polys(target), Vector::zero(), false, |_, _, _| {});
        module.to_polys(&r)
    }

    pub fn contains(&self, target: &[Polynomial<F>]) -> bool {
        self.normal_form(target).iter().all(Polynomial::is_zero)
    }

    /// Coefficients `v` with `Σ v_j · column_j = target`.
    pub fn lift(&self, target: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>, GroebnerError> {
        let module = &self.engine.module;
        let (r, repr) = self.engine.reduce(module.vector_from_polys(target), Vector::zero(), false, |_, _, _| {});
        if !r.is_zero() {
            return Err(GroebnerError::NoSolution);
        }
        let tags = &self.engine.tags;
        let mut v = tags.to_polys(&repr);
        for p in &mut v {
            *p = -&*p;
        }
        debug_assert_eq!(v.len(), self.ngens);
        Ok(v)
    }
}

/// Generators of the kernel of `m` (as a map on column space), one vector per entry.
pub(crate) fn syzygy_columns<F: Field>(
    m: &PolyMatrix<F>,
    order: ModuleOrder,
    options: GbOptions,
) -> Result<Vec<Vec<Polynomial<F>>>, GroebnerError> {
    let ring = m.ring();
    let n = m.cols();
    let shifts = m.row_degrees().map(<[i64]>::to_vec).unwrap_or_else(|| vec![0; m.rows()]);
    let module = FreeModule::new(ring, shifts, order);
    let gens = module.columns(m);
    let mut engine = Engine::new(&module, n, true, options);
    let mut out = Vec::new();
    for (j, g) in gens.into_iter().enumerate() {
        if g.is_zero() {
            let mut e = vec![Polynomial::zero(ring); n];
            e[j] = Polynomial::one(ring);
            out.push(e);
        } else {
            engine.add_input(g, j);
        }
    }
    engine.complete()?;
    let tags = &engine.tags;
    let reprs: Vec<Vector<F>> = engine.elems.iter().map(|e| e.repr.clone()).collect();
    for s in engine.schreyer_syzygies() {
        let v = tags.combine(&s, &reprs);
        if !v.is_zero() {
            out.push(tags.to_polys(&v));
        }
    }
    Ok(out)
}

/// Matrix whose columns generate the kernel of `m`.
pub fn syzygies<F: Field>(m: &PolyMatrix<F>, options: GbOptions) -> Result<PolyMatrix<F>, GroebnerError> {
    syzygies_with_order(m, ModuleOrder::Pot, options)
}

pub fn syzygies_with_order<F: Field>(
    m: &PolyMatrix<F>,
    order: ModuleOrder,
    options: GbOptions,
) -> Result<PolyMatrix<F>, GroebnerError> {
    let cols = syzygy_columns(m, order, options)?;
    Ok(PolyMatrix::from_fn(m.ring(), m.cols(), cols.len(), |i, j| cols[j][i].clone()))
}

/// A solution `v` of `m·v = target`.
pub fn lift<F: Field>(m: &PolyMatrix<F>, target: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>, GroebnerError> {
    if target.len() != m.rows() {
        return Err(crate::error::MatrixError::ShapeMismatch(format!(
            "target of length {} for a matrix with {} rows",
            target.len(),
            m.rows()
        ))
        .into());
    }
    ModuleGB::columns(m, ModuleOrder::Pot, GbOptions::default())?.lift(target)
}
