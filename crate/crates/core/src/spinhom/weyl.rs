use std::collections::{HashSet, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::SpinorError;
use crate::field::Field;
use crate::matrix::PolyMatrix;
use crate::report::Report;

use super::sets::SpinorSet;

/// A signed permutation of the basis `e₁..e_k, f₁..f_k` of `k^{2k}`,
/// stored as images of the 0-based indices (`e_i ↦ i-1`, `f_i ↦ k+i-1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    k: usize,
    images: Vec<usize>,
}

impl WeylElement {
    pub fn identity(k: usize) -> Self {
        WeylElement { k, images: (0..2 * k).collect() }
    }

    /// `e_i ↦ e_{π(i)}` and `f_i ↦ f_{π(i)}`, with `e` and `f` interchanged
    /// for `i ∈ swaps`. `perm` is 0-based; `swaps` is a bitmask with an even
    /// number of bits.
    pub fn new(perm: &[usize], swaps: u64) -> Result<Self, SpinorError> {
        let k = perm.len();
        let mut seen = vec![false; k];
        for &p in perm {
            if p >= k || std::mem::replace(&mut seen[p], true) {
                return Err(SpinorError::InvalidSet(format!("{perm:?} is not a permutation")));
            }
        }
        if swaps >> k != 0 || !swaps.count_ones().is_multiple_of(2) {
            return Err(SpinorError::InvalidSet(format!("swap set {swaps:#b} must be an even subset of 1..={k}")));
        }
        let mut images = vec![0; 2 * k];
        for i in 0..k {
            let swapped = swaps >> i & 1 == 1;
            images[i] = if swapped { k + perm[i] } else { perm[i] };
            images[k + i] = if swapped { perm[i] } else { k + perm[i] };
        }
        Ok(WeylElement { k, images })
    }

    /// A uniformly random element of `D_k`.
    pub fn random(k: usize, rng: &mut impl Rng) -> Self {
        let mut perm: Vec<usize> = (0..k).collect();
        perm.shuffle(rng);
        let mut swaps: u64 = rng.gen::<u64>() & ((1u64 << k) - 1);
        if swaps.count_ones() % 2 == 1 {
            swaps ^= 1;
        }
        Self::new(&perm, swaps).expect("valid by construction")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        WeylElement { k: self.k, images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Smallest `n ≥ 1` with `selfⁿ = 1`.
    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut n = 1;
        while !p.is_identity() {
            p = self.compose(&p);
            n += 1;
        }
        n
    }

    /// Image of the coordinate subspace indexed by `set`.
    pub fn act_on_set(&self, set: &SpinorSet) -> SpinorSet {
        let k = self.k;
        let mut mask = 0u64;
        for c in set.columns() {
            let img = self.images[c];
            if img < k {
                mask |= 1 << img;
            }
        }
        SpinorSet::from_mask(k, mask).expect("even swaps preserve parity")
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.k;
        let name = |i: usize| if i < k { format!("e{}", i + 1) } else { format!("f{}", i - k + 1) };
        let parts: Vec<String> = (0..2 * k).filter(|&i| self.images[i] != i).map(|i| format!("{}->{}", name(i), name(self.images[i]))).collect();
        if parts.is_empty() {
            write!(f, "id")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// `s₁..s_{k-1}` swapping `e_i, e_{i+1}` and `f_i, f_{i+1}`, and
/// `s_k = (e_{k-1} f_k)(e_k f_{k-1})`.
pub fn weyl_generators(k: usize) -> Vec<WeylElement> {
    let mut gens = Vec::with_capacity(k);
    for i in 0..k.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..k).collect();
        perm.swap(i, i + 1);
        gens.push(WeylElement::new(&perm, 0).expect("permutation"));
    }
    if k >= 2 {
        let mut perm: Vec<usize> = (0..k).collect();
        perm.swap(k - 2, k - 1);
        gens.push(WeylElement::new(&perm, 0b11 << (k - 2)).expect("even swap"));
    }
    gens
}

/// Coxeter exponent `m_ij` of the `D_k` diagram, 0-based nodes, node
/// `k-1` attached to node `k-3`.
pub fn coxeter_exponent(k: usize, i: usize, j: usize) -> usize {
    if i == j {
        return 1;
    }
    let (a, b) = (i.min(j), i.max(j));
    let edge = if b == k - 1 { a + 3 == k } else { b == a + 1 && b < k - 1 };
    if edge {
        3
    } else {
        2
    }
}

/// Check the `D_k` Coxeter presentation of [`weyl_generators`] and the
/// order `2^{k-1}·k!` of the group they generate.
pub fn verify_coxeter(k: usize) -> Report {
    let gens = weyl_generators(k);
    let mut r = Report::new();
    let mut bad = Vec::new();
    for i in 0..k {
        for j in i..k {
            let m = coxeter_exponent(k, i, j);
            let order = gens[i].compose(&gens[j]).order();
            if order != m {
                bad.push(format!("(s{} s{}) has order {order}, expected {m}", i + 1, j + 1));
            }
        }
    }
    r.push(format!("D_{k} Coxeter relations"), bad.is_empty(), bad.join("; "));
    if k >= 3 {
        let p = gens[k - 2].compose(&gens[k - 1]);
        r.push("(s_{k-1} s_k)^2 = 1", p.compose(&p).is_identity(), format!("order {}", p.order()));
        let q = gens[k - 3].compose(&gens[k - 1]);
        r.push("(s_{k-2} s_k)^3 = 1", q.compose(&q).compose(&q).is_identity(), format!("order {}", q.order()));
    }
    if k <= 7 {
        let size = group_order(&gens, k);
        let expected = (1..=k).product::<usize>() << (k - 1);
        r.push("group order 2^(k-1) k!", size == expected, format!("{size} elements"));
    }
    r
}

fn group_order(gens: &[WeylElement], k: usize) -> usize {
    let id = WeylElement::identity(k);
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.images.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = s.compose(&g);
            if seen.insert(h.images.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.len()
}

/// Move column `b` of `M₁` to position `w(b)`.
pub fn apply_weyl<F: Field>(m1: &PolyMatrix<F>, w: &WeylElement) -> Result<PolyMatrix<F>, SpinorError> {
    let n = 2 * w.k();
    if m1.cols() != n {
        return Err(crate::error::MatrixError::ShapeMismatch(format!("M1 has {} columns, expected {n}", m1.cols())).into());
    }
    let mut source = vec![0; n];
    for (b, &img) in w.images().iter().enumerate() {
        source[img] = b;
    }
    Ok(m1.select_columns(&source)?)
}

/// Scale column `i` by `λᵢ` and column `k+i` by `λᵢ⁻¹`.
pub fn torus_scale<F: Field>(m1: &PolyMatrix<F>, lambdas: &[F]) -> Result<PolyMatrix<F>, SpinorError> {
    let k = lambdas.len();
    if m1.cols() != 2 * k {
        return Err(crate::error::MatrixError::ShapeMismatch(format!("{} scale factors for {} columns", k, m1.cols())).into());
    }
    let inv = lambdas.iter().map(|l| l.inv().ok_or(SpinorError::ZeroScale)).collect::<Result<Vec<_>, _>>()?;
    let mut out = m1.clone();
    for j in 0..2 * k {
        let s = if j < k { &lambdas[j] } else { &inv[j - k] };
        for i in 0..m1.rows() {
            out.set(i, j, m1.get(i, j).scale(s));
        }
    }
    Ok(out)
}
