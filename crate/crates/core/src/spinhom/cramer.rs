use rayon::prelude::*;

use crate::error::{ArithError, SpinorError};
use crate::field::Field;
use crate::groebner::{GbOptions, Ideal};
use crate::poly::Polynomial;
use crate::resolution::GorResolution;

use super::sets::{enumerate_spinor_sets, spinor_submatrix, SpinorSet};

/// How a spinor relates to the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpinorClass<F: Field> {
    Zero,
    /// `σ = monomial · L_index`, with `index` counted from 1.
    MonomialTimesRelation { index: usize, monomial: Polynomial<F> },
    Other,
}

impl<F: Field> SpinorClass<F> {
    pub fn name(&self) -> &'static str {
        match self {
            SpinorClass::Zero => "zero",
            SpinorClass::MonomialTimesRelation { .. } => "monomial_times_relation",
            SpinorClass::Other => "other",
        }
    }
}

/// One Cramer spinor with the data used to extract it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorRecord<F: Field> {
    pub set: SpinorSet,
    /// The spinor, with positive leading coefficient.
    pub sigma: Polynomial<F>,
    pub class: SpinorClass<F>,
    /// 0-based generator index divided by; `None` for a zero wedge.
    pub pivot: Option<usize>,
    /// `ε = ±1` with `top_wedge(N_J) = ε·s·σ²·L`.
    pub sign: i8,
    /// The positive constant `s`: one unless the content of the quotient
    /// is not a square in the field, in which case `σ` is taken monic.
    pub scale: F,
}

/// Counts per spinor class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Census {
    pub zero: usize,
    pub monomial_times_relation: usize,
    pub other: usize,
}

impl Census {
    pub fn total(&self) -> usize {
        self.zero + self.monomial_times_relation + self.other
    }
}

#[derive(Clone, Debug)]
pub struct SpinorTable<F: Field> {
    pub records: Vec<SpinorRecord<F>>,
    pub census: Census,
}

/// Extract `σ_J` from `⋀ᵏ N_J = ±σ_J²·L`.
pub fn cramer_spinor<F: Field>(res: &GorResolution<F>, set: &SpinorSet) -> Result<SpinorRecord<F>, SpinorError> {
    let ring = res.ring();
    let n = spinor_submatrix(res.m1(), set)?;
    let w = n.top_wedge()?;
    let l = res.generators();
    if w.iter().all(Polynomial::is_zero) {
        return Ok(SpinorRecord {
            set: *set,
            sigma: Polynomial::zero(ring),
            class: SpinorClass::Zero,
            pivot: None,
            sign: 1,
            scale: F::one(),
        });
    }
    let pivot = l.iter().position(|p| !p.is_zero()).ok_or(SpinorError::NotDivisible { index: 1 })?;
    let c = w[pivot].divide_exact(&l[pivot]).map_err(|_| SpinorError::NotDivisible { index: pivot + 1 })?;
    for (j, (wj, lj)) in w.iter().zip(l).enumerate() {
        if *wj != &c * lj {
            return Err(SpinorError::InconsistentFactorization { index: j + 1 });
        }
    }
    let (sigma, sign, scale) = match c.sqrt_exact() {
        Ok(s) => (s, 1, F::one()),
        Err(ArithError::NotAPerfectSquare) => match (-&c).sqrt_exact() {
            Ok(s) => (s, -1, F::one()),
            Err(_) => {
                let lc = c.leading_term().map(|(_, k)| k.clone()).expect("nonzero");
                let sign = if lc.is_negative() { -1 } else { 1 };
                let scale = if sign < 0 { -lc.clone() } else { lc.clone() };
                let root = c.scale(&lc.inv().expect("nonzero")).sqrt_exact().map_err(|_| SpinorError::NotAPerfectSquare)?;
                (root, sign, scale)
            }
        },
        Err(e) => return Err(e.into()),
    };
    let class = classify(&sigma, l);
    Ok(SpinorRecord { set: *set, sigma, class, pivot: Some(pivot), sign, scale })
}

/// `MonomialTimesRelation` when dividing by some `L_i` leaves a single term.
fn classify<F: Field>(sigma: &Polynomial<F>, l: &[Polynomial<F>]) -> SpinorClass<F> {
    if sigma.is_zero() {
        return SpinorClass::Zero;
    }
    for (i, li) in l.iter().enumerate() {
        if li.is_zero() {
            continue;
        }
        if let Ok(q) = sigma.divide_exact(li) {
            if q.is_monomial() {
                return SpinorClass::MonomialTimesRelation { index: i + 1, monomial: q };
            }
        }
    }
    SpinorClass::Other
}

/// Every spinor of `res`, in bitmask order, with the census.
pub fn spinor_table<F: Field>(res: &GorResolution<F>) -> Result<SpinorTable<F>, SpinorError> {
    spinor_table_of(res, &enumerate_spinor_sets(res.k()))
}

/// Spinors for a chosen list of sets.
pub fn spinor_table_of<F: Field>(res: &GorResolution<F>, sets: &[SpinorSet]) -> Result<SpinorTable<F>, SpinorError> {
    let records = sets.par_iter().map(|s| cramer_spinor(res, s)).collect::<Result<Vec<_>, _>>()?;
    let mut census = Census::default();
    for r in &records {
        match r.class {
            SpinorClass::Zero => census.zero += 1,
            SpinorClass::MonomialTimesRelation { .. } => census.monomial_times_relation += 1,
            SpinorClass::Other => census.other += 1,
        }
    }
    Ok(SpinorTable { records, census })
}

/// Membership of each nonzero spinor in the ideal of the generators.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub verdicts: Vec<(SpinorSet, bool)>,
}

impl ConjectureReport {
    pub fn all_in_ideal(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| *v)
    }

    pub fn counterexamples(&self) -> Vec<SpinorSet> {
        self.verdicts.iter().filter(|(_, v)| !v).map(|(s, _)| *s).collect()
    }
}

/// Test `σ_J ∈ (L)` by Gröbner normal form for every nonzero spinor.
pub fn conjecture_check<F: Field>(
    res: &GorResolution<F>,
    table: &SpinorTable<F>,
    options: GbOptions,
) -> Result<ConjectureReport, SpinorError> {
    let gb = Ideal::new(res.ring(), res.generators().iter().cloned()).groebner_basis_with(options)?;
    let verdicts = table
        .records
        .par_iter()
        .filter(|r| !r.sigma.is_zero())
        .map(|r| (r.set, gb.contains(&r.sigma)))
        .collect();
    Ok(ConjectureReport { verdicts })
}
