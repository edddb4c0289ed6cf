//! Minimal graded free resolutions by iterated syzygies.

use crate::error::GroebnerError;
use crate::field::Field;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;

use super::engine::{Engine, GbOptions};
use super::ideal::{syzygy_columns, Ideal};
use super::module::{FreeModule, ModuleOrder, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ResolutionOptions {
    pub order: ModuleOrder,
    pub gb: GbOptions,
}

/// A graded free resolution `F_0 ← F_1 ← … ← F_c`.
///
/// `differentials[i]` is the matrix of `F_{i+1} → F_i`, carrying the degree
/// lists of both modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeResolution<F: Field> {
    differentials: Vec<PolyMatrix<F>>,
}

impl<F: Field> FreeResolution<F> {
    pub fn new(differentials: Vec<PolyMatrix<F>>) -> Self {
        FreeResolution { differentials }
    }

    pub fn differentials(&self) -> &[PolyMatrix<F>] {
        &self.differentials
    }

    pub fn into_differentials(self) -> Vec<PolyMatrix<F>> {
        self.differentials
    }

    /// The differential `φ_i : F_i → F_{i-1}`, counting from 1.
    pub fn phi(&self, i: usize) -> &PolyMatrix<F> {
        &self.differentials[i - 1]
    }

    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    /// Ranks `b_0, …, b_c`.
    pub fn betti(&self) -> Vec<usize> {
        let mut b: Vec<usize> = self.differentials.iter().map(PolyMatrix::rows).collect();
        b.push(self.differentials.last().map_or(1, PolyMatrix::cols));
        b
    }

    /// Generator degrees of each `F_i`.
    pub fn shifts(&self) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = self
            .differentials
            .iter()
            .map(|d| d.row_degrees().map(<[i64]>::to_vec).unwrap_or_default())
            .collect();
        if let Some(last) = self.differentials.last() {
            out.push(last.col_degrees().map(<[i64]>::to_vec).unwrap_or_default());
        }
        out
    }

    /// Whether consecutive differentials compose to zero.
    pub fn is_complex(&self) -> bool {
        self.differentials
            .windows(2)
            .all(|w| w[0].mul(&w[1]).map(|p| p.is_zero()).unwrap_or(false))
    }

    /// Whether some differential has a nonzero constant entry.
    pub fn has_unit_entries(&self) -> bool {
        self.differentials
            .iter()
            .any(|d| d.entries().iter().any(|p| !p.is_zero() && p.is_constant()))
    }
}

/// Keep the vectors not already in the span of those kept before them,
/// scanning in order of increasing degree. For homogeneous input this
/// leaves a minimal generating set.
fn prune<F: Field>(
    module: &FreeModule,
    mut cols: Vec<(i64, Vec<Polynomial<F>>)>,
    options: GbOptions,
) -> Result<Vec<(i64, Vec<Polynomial<F>>)>, GroebnerError> {
    cols.sort_by_key(|(d, _)| *d);
    let mut engine = Engine::new(module, cols.len(), false, options);
    let mut kept = Vec::new();
    for (d, c) in cols {
        let v = module.vector_from_polys(&c);
        if engine.add_reduced(v, Vector::zero()) {
            engine.complete()?;
            kept.push((d, c));
        }
    }
    Ok(kept)
}

fn degree_of<F: Field>(module: &FreeModule, col: &[Polynomial<F>]) -> Result<i64, GroebnerError> {
    module
        .homogeneous_degree(&module.vector_from_polys(col))
        .ok_or_else(|| GroebnerError::NotHomogeneous("syzygy is not homogeneous".into()))
}

fn matrix_of<F: Field>(
    ring: &std::sync::Arc<crate::poly::PolyRing>,
    rows: &[i64],
    cols: &[(i64, Vec<Polynomial<F>>)],
) -> Result<PolyMatrix<F>, GroebnerError> {
    let m = PolyMatrix::from_fn(ring, rows.len(), cols.len(), |i, j| cols[j].1[i].clone());
    Ok(m.with_degrees(rows.to_vec(), cols.iter().map(|c| c.0).collect())?)
}

/// Minimal graded free resolution of `S/I` of length at most `max_length`.
pub fn minimal_resolution<F: Field>(
    ideal: &Ideal<F>,
    max_length: usize,
    options: ResolutionOptions,
) -> Result<FreeResolution<F>, GroebnerError> {
    let ring = ideal.ring();
    for g in ideal.generators() {
        if !g.homogeneity().is_homogeneous() {
            return Err(GroebnerError::NotHomogeneous(g.to_string()));
        }
    }
    let base = FreeModule::new(ring, vec![0], options.order);
    let gens: Vec<(i64, Vec<Polynomial<F>>)> = ideal
        .generators()
        .iter()
        .map(|g| (g.degree().unwrap_or(0) as i64, vec![g.clone()]))
        .collect();
    let gens = prune(&base, gens, options.gb)?;
    let mut differentials = Vec::new();
    if gens.is_empty() || max_length == 0 {
        return Ok(FreeResolution::new(differentials));
    }
    let mut current = matrix_of(ring, &[0], &gens)?;
    loop {
        let col_degrees = current.col_degrees().expect("graded").to_vec();
        differentials.push(current.clone());
        if differentials.len() == max_length {
            break;
        }
        let kernel = syzygy_columns(&current, options.order, options.gb)?;
        let module = FreeModule::new(ring, col_degrees.clone(), options.order);
        let with_deg = kernel
            .into_iter()
            .map(|c| Ok((degree_of(&module, &c)?, c)))
            .collect::<Result<Vec<_>, GroebnerError>>()?;
        let kept = prune(&module, with_deg, options.gb)?;
        if kept.is_empty() {
            break;
        }
        current = matrix_of(ring, &col_degrees, &kept)?;
    }
    Ok(FreeResolution::new(minimize(differentials)))
}

/// Remove unit entries by the standard change of basis, one at a time:
/// a unit `u` at `(r, c)` of `φ_i` cancels basis element `c` of `F_i`
/// against basis element `r` of `F_{i-1}`.
pub fn minimize<F: Field>(mut ds: Vec<PolyMatrix<F>>) -> Vec<PolyMatrix<F>> {
    'outer: loop {
        for i in 0..ds.len() {
            let d = &ds[i];
            let found = (0..d.cols())
                .flat_map(|c| (0..d.rows()).map(move |r| (r, c)))
                .find(|&(r, c)| {
                    let p = d.get(r, c);
                    !p.is_zero() && p.is_constant()
                });
            let Some((r, c)) = found else { continue };
            let u_inv = d.get(r, c).constant_term().inv().expect("unit");
            let rows: Vec<usize> = (0..d.rows()).filter(|&k| k != r).collect();
            let cols: Vec<usize> = (0..d.cols()).filter(|&k| k != c).collect();
            let mut reduced = d.submatrix(&rows, &cols).expect("valid indices");
            for (a, &k) in rows.iter().enumerate() {
                let lead = d.get(k, c);
                if lead.is_zero() {
                    continue;
                }
                let f = lead.scale(&u_inv);
                for (b, &l) in cols.iter().enumerate() {
                    let t = d.get(r, l);
                    if !t.is_zero() {
                        let v = reduced.get(a, b) - &(&f * t);
                        reduced.set(a, b, v);
                    }
                }
            }
            ds[i] = reduced;
            if i > 0 {
                let prev = &ds[i - 1];
                let keep: Vec<usize> = (0..prev.cols()).filter(|&k| k != r).collect();
                ds[i - 1] = prev.select_columns(&keep).expect("valid indices");
            }
            if i + 1 < ds.len() {
                let next = &ds[i + 1];
                let keep: Vec<usize> = (0..next.rows()).filter(|&k| k != c).collect();
                ds[i + 1] = next.select_rows(&keep).expect("valid indices");
            }
            while ds.last().is_some_and(|m| m.cols() == 0) {
                ds.pop();
            }
            continue 'outer;
        }
        return ds;
    }
}
