use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::ResolutionError;
use crate::field::Field;
use crate::groebner::FreeResolution;
use crate::matrix::{random_point, ConstMatrix, PolyMatrix};
use crate::poly::{Monomial, Polynomial};
use crate::spinhom::{enumerate_nonspinor_sets, enumerate_spinor_sets};

use super::gor::GorResolution;

/// Number of random combinations of the pairing solutions tried before
/// giving up on finding a nondegenerate one.
const PAIRING_TRIALS: usize = 24;

/// Output of [`symmetrize`].
#[derive(Clone, Debug)]
pub struct Symmetrized<F: Field> {
    pub resolution: GorResolution<F>,
    /// The symmetric form found on `P₂` in the input basis.
    pub q: ConstMatrix<F>,
    /// Base change of `P₂`: the new `M₁` is `φ₂·g2`.
    pub g2: ConstMatrix<F>,
    /// Base change of `P₃` with `φ₃·g3 = Q·ᵗφ₂`.
    pub g3: ConstMatrix<F>,
    /// Scalar `s` with `g3⁻¹·φ₄ = s·ᵗφ₁`.
    pub p4_scale: F,
}

fn degrees<F: Field>(m: &PolyMatrix<F>, rows: bool) -> Result<Vec<i64>, ResolutionError> {
    let d = if rows { m.row_degrees() } else { m.col_degrees() };
    d.map(<[i64]>::to_vec).ok_or_else(|| ResolutionError::Invalid("differentials must carry degree data".into()))
}

/// Put a minimal resolution with Betti numbers `(1, k+1, 2k, k+1, 1)` into
/// isotropic standard form.
///
/// A symmetric `Q` and a base change `C` of `P₃` with `φ₃·C = Q·ᵗφ₂` are
/// found by linear algebra, entries restricted by degree; then `Q` is
/// brought to the hyperbolic form `J` by a degree-preserving congruence.
pub fn symmetrize<F: Field>(raw: &FreeResolution<F>, seed: u64) -> Result<Symmetrized<F>, ResolutionError> {
    let betti = raw.betti();
    let k = betti.get(2).map_or(0, |b| b / 2);
    if betti.len() != 5 || k < 2 || betti != [1, k + 1, 2 * k, k + 1, 1] {
        return Err(ResolutionError::NotSymmetricBetti(betti));
    }
    let (phi1, phi2, phi3, phi4) = (raw.phi(1), raw.phi(2), raw.phi(3), raw.phi(4));
    let ring = phi1.ring().clone();
    let d1 = degrees(phi1, false)?;
    let d2 = degrees(phi2, false)?;
    let d3 = degrees(phi3, false)?;
    let alpha = degrees(phi4, false)?[0];
    let n = 2 * k;

    // Unknowns: Q_rs (r ≤ s) and C_ab, where allowed by degrees.
    let mut unknowns: Vec<Unknown> = Vec::new();
    for r in 0..n {
        for s in r..n {
            if d2[r] + d2[s] == alpha {
                unknowns.push(Unknown::Q(r, s));
            }
        }
    }
    let nq = unknowns.len();
    for a in 0..=k {
        for b in 0..=k {
            if d3[a] == alpha - d1[b] {
                unknowns.push(Unknown::C(a, b));
            }
        }
    }
    if nq == 0 {
        return Err(ResolutionError::NoPairingSolution("degrees allow no constant form on P2".into()));
    }

    // Entry (r, b) of Q·ᵗφ₂ - φ₃·C, coefficient by coefficient.
    let mut rows: HashMap<(usize, usize, Monomial), Vec<(usize, F)>> = HashMap::new();
    let mut add = |r: usize, b: usize, p: &Polynomial<F>, u: usize, negate: bool| {
        for (m, c) in p.terms() {
            let c = if negate { -c.clone() } else { c.clone() };
            rows.entry((r, b, m.clone())).or_default().push((u, c));
        }
    };
    for (u, unk) in unknowns.iter().enumerate() {
        match *unk {
            Unknown::Q(r, s) => {
                for b in 0..=k {
                    add(r, b, phi2.get(b, s), u, false);
                    if r != s {
                        add(s, b, phi2.get(b, r), u, false);
                    }
                }
            }
            Unknown::C(a, b) => {
                for r in 0..n {
                    add(r, b, phi3.get(r, a), u, true);
                }
            }
        }
    }
    let mut keys: Vec<_> = rows.keys().cloned().collect();
    keys.sort_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)).then_with(|| x.2.exponents().cmp(y.2.exponents())));
    let mut system = ConstMatrix::<F>::zero(keys.len(), unknowns.len());
    for (i, key) in keys.iter().enumerate() {
        for (u, c) in &rows[key] {
            let v = system.get(i, *u).add_ref(c);
            system.set(i, *u, v);
        }
    }
    let kernel = system.nullspace();
    if kernel.iter().all(|v| v[..nq].iter().all(Zero::is_zero)) {
        return Err(ResolutionError::NoPairingSolution("the duality system forces Q = 0".into()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = None;
    for trial in 0..PAIRING_TRIALS {
        let coeffs: Vec<F> = (0..kernel.len())
            .map(|_| if trial == 0 && kernel.len() == 1 { F::one() } else { F::from_i64(rng.gen_range(-7..=7)) })
            .collect();
        let mut q = ConstMatrix::zero(n, n);
        let mut c = ConstMatrix::zero(k + 1, k + 1);
        for (u, unk) in unknowns.iter().enumerate() {
            let mut val = F::zero();
            for (coef, v) in coeffs.iter().zip(&kernel) {
                val += &coef.mul_ref(&v[u]);
            }
            match *unk {
                Unknown::Q(r, s) => {
                    q.set(r, s, val.clone());
                    q.set(s, r, val);
                }
                Unknown::C(a, b) => c.set(a, b, val),
            }
        }
        if !q.det().expect("square").is_zero() && !c.det().expect("square").is_zero() {
            found = Some((q, c));
            break;
        }
    }
    let (q, g3) = found
        .ok_or_else(|| ResolutionError::NoPairingSolution("no solution has Q and C both invertible".into()))?;

    // φ₄ must become a multiple of ᵗφ₁ in the new basis of P₃.
    let c_inv = g3.inverse().expect("invertible");
    let phi4_new = phi4.left_mul_const(&c_inv)?;
    let p4_scale = scalar_ratio(&phi4_new.transpose(), phi1).ok_or_else(|| {
        ResolutionError::NoPairingSolution("the last differential is not dual to the first".into())
    })?;

    let mut g2 = hyperbolic_basis(&q.inverse().expect("invertible"), &d2, alpha)?;
    let mut m1 = phi2.clone().without_degrees().right_mul_const(&g2)?;
    if in_twin_component(&m1, k, &mut rng)? {
        // Exchanging e_k and f_k preserves J and moves M₁ to the other component.
        let swap = |j: usize| if j == k - 1 { n - 1 } else if j == n - 1 { k - 1 } else { j };
        g2 = ConstMatrix::from_fn(n, n, |i, j| g2.get(i, swap(j)).clone());
        m1 = phi2.clone().without_degrees().right_mul_const(&g2)?;
    }
    let new_d2: Vec<i64> = (0..n)
        .map(|j| {
            let i = (0..n).find(|&i| !g2.get(i, j).is_zero()).expect("invertible");
            d2[i]
        })
        .collect();
    let resolution = GorResolution::from_parts(
        PolyMatrix::from_fn(&ring, 1, k + 1, |_, j| phi1.get(0, j).clone()),
        m1,
        ConstMatrix::hyperbolic(k),
        d1,
        new_d2,
        alpha,
    )?;
    Ok(Symmetrized { resolution, q, g2, g3, p4_scale })
}

/// Whether every spinor wedge of `m1` vanishes while some nonspinor wedge
/// does not, tested at a random point.
fn in_twin_component<F: Field>(m1: &PolyMatrix<F>, k: usize, rng: &mut ChaCha8Rng) -> Result<bool, ResolutionError> {
    let point: Vec<F> = random_point(rng, m1.ring().nvars());
    let at = m1.evaluate(&point)?;
    let full_rank = |cols: Vec<usize>| ConstMatrix::from_fn(at.rows(), k, |i, j| at.get(i, cols[j]).clone()).rank() == k;
    if enumerate_spinor_sets(k).into_iter().any(|s| full_rank(s.columns())) {
        return Ok(false);
    }
    Ok(enumerate_nonspinor_sets(k).into_iter().any(|s| full_rank(s.columns())))
}

enum Unknown {
    Q(usize, usize),
    C(usize, usize),
}

/// `s` with `a = s·b` entrywise, for nonzero `b`.
fn scalar_ratio<F: Field>(a: &PolyMatrix<F>, b: &PolyMatrix<F>) -> Option<F> {
    if a.shape() != b.shape() {
        return None;
    }
    let (i, j) = (0..b.rows()).flat_map(|i| (0..b.cols()).map(move |j| (i, j))).find(|&(i, j)| !b.get(i, j).is_zero())?;
    let lb = b.get(i, j).leading_term()?;
    let la = a.get(i, j).terms().iter().find(|(m, _)| *m == lb.0)?;
    let s = la.1.div_ref(&lb.1);
    (a.sub(&b.scale(&s)).ok()?.is_zero()).then_some(s)
}

fn bilinear<F: Field>(b: &ConstMatrix<F>, x: &[F], y: &[F]) -> F {
    let by = b.mul_vec(y);
    x.iter().zip(&by).fold(F::zero(), |acc, (p, q)| acc + p.mul_ref(q))
}

/// Columns `u₁..u_k, v₁..v_k` of a basis in which the form `b` is `J`,
/// each column supported in a single degree.
fn hyperbolic_basis<F: Field>(b: &ConstMatrix<F>, d2: &[i64], alpha: i64) -> Result<ConstMatrix<F>, ResolutionError> {
    let n = d2.len();
    let mut classes: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, &d) in d2.iter().enumerate() {
        classes.entry(d).or_default().push(i);
    }
    let unit = |i: usize| -> Vec<F> { (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect() };
    let mut pairs: Vec<(Vec<F>, Vec<F>)> = Vec::new();
    for (&d, idx) in &classes {
        let e = alpha - d;
        if e < d {
            continue;
        }
        if e > d {
            let other = classes.get(&e).cloned().unwrap_or_default();
            if other.len() != idx.len() {
                return Err(ResolutionError::NoPairingSolution(format!(
                    "{} generators of degree {d} against {} of degree {e}",
                    idx.len(),
                    other.len()
                )));
            }
            let r = ConstMatrix::from_fn(idx.len(), other.len(), |p, q| b.get(idx[p], other[q]).clone());
            let r_inv = r
                .inverse()
                .ok_or_else(|| ResolutionError::NoPairingSolution(format!("degree {d} block of the form is singular")))?;
            for p in 0..idx.len() {
                let mut v = vec![F::zero(); n];
                for (q, &o) in other.iter().enumerate() {
                    v[o] = r_inv.get(q, p).clone();
                }
                pairs.push((unit(idx[p]), v));
            }
        } else {
            pairs.extend(split_hyperbolic(b, idx.iter().map(|&i| unit(i)).collect())?);
        }
    }
    let k = n / 2;
    if pairs.len() != k {
        return Err(ResolutionError::NoPairingSolution("form does not split into k hyperbolic planes".into()));
    }
    let mut g = ConstMatrix::zero(n, n);
    for (p, (u, v)) in pairs.iter().enumerate() {
        for i in 0..n {
            g.set(i, p, u[i].clone());
            g.set(i, k + p, v[i].clone());
        }
    }
    Ok(g)
}

/// Split the span of `basis` into hyperbolic planes for `b`.
fn split_hyperbolic<F: Field>(b: &ConstMatrix<F>, mut basis: Vec<Vec<F>>) -> Result<Vec<(Vec<F>, Vec<F>)>, ResolutionError> {
    let mut out = Vec::new();
    while !basis.is_empty() {
        let u = match basis.iter().position(|x| bilinear(b, x, x).is_zero()) {
            Some(i) => basis[i].clone(),
            None => isotropic_from_diagonal(b, &basis)?,
        };
        let w = basis
            .iter()
            .find(|x| !bilinear(b, &u, x).is_zero())
            .cloned()
            .ok_or_else(|| ResolutionError::NoPairingSolution("form is degenerate on a degree class".into()))?;
        let buw = bilinear(b, &u, &w);
        let t = bilinear(b, &w, &w).div_ref(&buw.mul_ref(&F::from_i64(2)));
        let inv = buw.inv().expect("nonzero");
        let v: Vec<F> = w.iter().zip(&u).map(|(wi, ui)| (wi.clone() - t.mul_ref(ui)).mul_ref(&inv)).collect();
        let projected: Vec<Vec<F>> = basis
            .iter()
            .map(|x| {
                let (xv, xu) = (bilinear(b, x, &v), bilinear(b, x, &u));
                x.iter().zip(u.iter().zip(&v)).map(|(xi, (ui, vi))| xi.clone() - xv.mul_ref(ui) - xu.mul_ref(vi)).collect()
            })
            .collect();
        basis = independent_subset(projected, basis.len() - 2);
        out.push((u, v));
    }
    Ok(out)
}

/// An isotropic vector in an anisotropic-looking basis: diagonalize and
/// look for two entries `dᵢ`, `dⱼ` with `-dᵢ/dⱼ` a square.
fn isotropic_from_diagonal<F: Field>(b: &ConstMatrix<F>, basis: &[Vec<F>]) -> Result<Vec<F>, ResolutionError> {
    let mut orth: Vec<(Vec<F>, F)> = Vec::new();
    for x in basis {
        let mut y = x.clone();
        for (o, d) in &orth {
            let c = bilinear(b, &y, o).div_ref(d);
            for (yi, oi) in y.iter_mut().zip(o) {
                *yi -= &c.mul_ref(oi);
            }
        }
        let d = bilinear(b, &y, &y);
        if d.is_zero() {
            if y.iter().all(Zero::is_zero) {
                continue;
            }
            return Ok(y);
        }
        orth.push((y, d));
    }
    for i in 0..orth.len() {
        for j in i + 1..orth.len() {
            let ratio = -orth[i].1.div_ref(&orth[j].1);
            if let Some(t) = ratio.sqrt() {
                return Ok(orth[i].0.iter().zip(&orth[j].0).map(|(a, c)| a.clone() + t.mul_ref(c)).collect());
            }
        }
    }
    Err(ResolutionError::SquareClassObstruction { diagonal: orth.iter().map(|(_, d)| d.to_string()).collect() })
}

fn independent_subset<F: Field>(vs: Vec<Vec<F>>, want: usize) -> Vec<Vec<F>> {
    let mut kept: Vec<Vec<F>> = Vec::new();
    for v in vs {
        if kept.len() == want {
            break;
        }
        let mut trial = kept.clone();
        trial.push(v.clone());
        let m = ConstMatrix::from_fn(trial.len(), trial[0].len(), |i, j| trial[i][j].clone());
        if m.rank() == trial.len() {
            kept.push(v);
        }
    }
    kept
}
