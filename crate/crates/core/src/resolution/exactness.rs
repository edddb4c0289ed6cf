use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{GroebnerError, ResolutionError};
use crate::field::Field;
use crate::groebner::{GbOptions, Ideal, ModuleGB, ModuleOrder};
use crate::matrix::RankCertificate;
use crate::poly::Polynomial;
use crate::report::Report;
use crate::spinhom::{cramer_spinor, enumerate_spinor_sets, SpinorClass, SpinorSet};

use super::gor::GorResolution;

/// Largest `k` for which the exactness check uses every `k×k` minor of `M₁`.
pub const FULL_MINOR_LIMIT: usize = 4;

/// Default number of spinor subsets tried by [`GorResolution::exactness_check`].
pub const DEFAULT_SUBSETS: usize = 4;

/// Shuffles tried by the greedy subset search before reporting `Inconclusive`.
pub const GREEDY_RESTARTS: u64 = 8;

impl<F: Field> GorResolution<F> {
    /// The Koszul target `e_i·L_j - e_j·L_i`, indices counted from 1.
    pub fn koszul_target(&self, i: usize, j: usize) -> Result<Vec<Polynomial<F>>, ResolutionError> {
        let n = self.k() + 1;
        if i == 0 || j == 0 || i > n || j > n {
            return Err(ResolutionError::Invalid(format!("Koszul indices ({i}, {j}) outside 1..={n}")));
        }
        let mut t = vec![Polynomial::zero(self.ring()); n];
        if i != j {
            t[i - 1] = self.generators()[j - 1].clone();
            t[j - 1] = -&self.generators()[i - 1];
        }
        Ok(t)
    }

    /// A vector `v` with `M₁·v = e_i·L_j - e_j·L_i`.
    pub fn koszul_lift(&self, i: usize, j: usize) -> Result<Vec<Polynomial<F>>, ResolutionError> {
        let gb = ModuleGB::columns(self.m1(), ModuleOrder::Pot, GbOptions::default())?;
        self.koszul_lift_with(&gb, i, j)
    }

    /// As [`koszul_lift`](Self::koszul_lift), reusing a Gröbner basis of the columns of `M₁`.
    pub fn koszul_lift_with(
        &self,
        gb: &ModuleGB<F>,
        i: usize,
        j: usize,
    ) -> Result<Vec<Polynomial<F>>, ResolutionError> {
        let t = self.koszul_target(i, j)?;
        if i == j {
            return Ok(vec![Polynomial::zero(self.ring()); 2 * self.k()]);
        }
        Ok(gb.lift(&t)?)
    }

    /// Certified generic ranks of `φ₁..φ₄` against `(1, k, k, 1)`.
    pub fn rank_sequence(&self, seed: u64) -> RankSequence<F> {
        let k = self.k();
        let expected = [1, k, k, 1];
        let certificates: Vec<RankCertificate<F>> =
            self.differentials().iter().enumerate().map(|(i, d)| d.generic_rank(seed.wrapping_add(i as u64))).collect();
        let ranks: Vec<usize> = certificates.iter().map(|c| c.rank).collect();
        let mut report = Report::new();
        for (i, c) in certificates.iter().enumerate() {
            report.push(
                format!("rank phi{} = {}", i + 1, expected[i]),
                c.rank == expected[i],
                format!("rank {} certified by rows {:?}, cols {:?}", c.rank, one_based(&c.rows), one_based(&c.cols)),
            );
        }
        let modules = [1, k + 1, 2 * k, k + 1, 1];
        let shapes = [self.l().rows(), self.l().cols(), self.m1().cols(), self.phi3().cols(), self.phi4().cols()];
        report.push("module ranks (1, k+1, 2k, k+1, 1)", shapes == modules, format!("{shapes:?}"));
        RankSequence { ranks, certificates, report }
    }

    /// The exactness criterion: certified ranks, then the heights of the
    /// ideals of minors.
    ///
    /// For `k ≤ 4` the full ideal of `k×k` minors of `M₁` is tested. For
    /// larger `k`, spinor sets are drawn in seeded random order and kept
    /// when their `σ_J` raises the codimension, up to `subset_count` of
    /// them, with up to [`GREEDY_RESTARTS`] reshuffles; the entries
    /// `σ_J²·Lᵢ` of their wedges generate a subideal of the minor ideal whose zero set is
    /// `V(L) ∪ V(σ_J, …)`, so its codimension is the smaller of the two.
    pub fn exactness_check(&self, subset_count: usize, seed: u64) -> Result<ExactnessReport, ResolutionError> {
        self.exactness_check_with(subset_count, seed, GbOptions::default())
    }

    pub fn exactness_check_with(
        &self,
        subset_count: usize,
        seed: u64,
        options: GbOptions,
    ) -> Result<ExactnessReport, ResolutionError> {
        let k = self.k();
        let mut out = ExactnessReport::default();
        let ranks = self.rank_sequence(seed);
        let ranks_ok = ranks.report.passed();
        out.report.extend(ranks.report);
        if !ranks_ok {
            return Ok(out);
        }

        let ideal_l = Ideal::new(self.ring(), self.generators().iter().cloned());
        let codim_l = codim_or_full(&ideal_l, options)?;
        out.codim_l = Some(codim_l);
        out.report.push("codim I(phi1) = 4", codim_l == 4, format!("codim {codim_l}"));
        if codim_l != 4 {
            return Ok(out);
        }

        if k <= FULL_MINOR_LIMIT {
            let minors = Ideal::new(self.ring(), self.m1().minors(k).into_iter().map(|(_, _, p)| p));
            let c = codim_or_full(&minors, options)?;
            out.codim_minors = Some(c);
            out.report.push(format!("codim I_{k}(M1) >= 4"), c >= 4, format!("all {k}x{k} minors, codim {c}"));
            out.exact = c >= 4;
            return Ok(out);
        }

        let all_sets = enumerate_spinor_sets(k);
        let mut cache: HashMap<SpinorSet, Option<Polynomial<F>>> = HashMap::new();
        let mut reached = 0;
        for attempt in 0..GREEDY_RESTARTS {
            let mut sets = all_sets.clone();
            sets.shuffle(&mut ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt)));
            let mut sigmas = Vec::new();
            let mut chosen = Vec::new();
            let mut here = 0;
            for set in sets {
                if chosen.len() == subset_count || here >= 4 {
                    break;
                }
                let sigma = match cache.get(&set) {
                    Some(s) => s.clone(),
                    None => {
                        let rec = cramer_spinor(self, &set)
                            .map_err(|e| ResolutionError::Invalid(format!("spinor {set}: {e}")))?;
                        let s = (!matches!(rec.class, SpinorClass::Zero)).then_some(rec.sigma);
                        cache.insert(set, s.clone());
                        s
                    }
                };
                let Some(sigma) = sigma else { continue };
                sigmas.push(sigma);
                let c = codim_or_full(&Ideal::new(self.ring(), sigmas.iter().cloned()), options)?;
                if c > here {
                    here = c;
                    chosen.push(set);
                } else {
                    sigmas.pop();
                }
            }
            if here > reached || out.subsets.is_empty() {
                reached = here;
                out.subsets = chosen;
            }
            if reached >= 4 {
                break;
            }
        }
        out.codim_minors = Some(reached.min(codim_l));
        let c = out.codim_minors.unwrap_or(0);
        let names: Vec<String> = out.subsets.iter().map(|s| s.to_string()).collect();
        if c < 4 {
            return Err(ResolutionError::Inconclusive(format!(
                "spinor subsets {} give codimension {c} < 4",
                names.join(" ")
            )));
        }
        out.report.push("codim of spinor wedge ideal >= 4", true, format!("subsets {}, codim {c}", names.join(" ")));
        out.exact = true;
        Ok(out)
    }

    /// Ranks of `M₁` at points of `V(I)`, against the bound `k - 3`.
    pub fn rank_drop_profile(&self, points: &[Vec<F>]) -> Result<RankDrop, ResolutionError> {
        let bound = self.k().saturating_sub(3);
        let mut ranks = Vec::with_capacity(points.len());
        for (n, pt) in points.iter().enumerate() {
            for l in self.generators() {
                if !l.evaluate(pt)?.is_zero() {
                    return Err(ResolutionError::PointNotOnVariety(n));
                }
            }
            ranks.push(self.m1().evaluate(pt)?.rank());
        }
        let within = ranks.iter().all(|&r| r <= bound);
        Ok(RankDrop { ranks, bound, within_bound: within })
    }
}

/// Codimension of an ideal, where the unit ideal counts as the whole ring.
fn codim_or_full<F: Field>(i: &Ideal<F>, options: GbOptions) -> Result<usize, ResolutionError> {
    let n = i.ring().nvars();
    match i.groebner_basis_with(options)?.dimension() {
        Ok(d) => Ok(n - d),
        Err(GroebnerError::UnitIdeal) => Ok(n + 1),
        Err(e) => Err(e.into()),
    }
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

#[derive(Clone, Debug)]
pub struct RankSequence<F: Field> {
    pub ranks: Vec<usize>,
    pub certificates: Vec<RankCertificate<F>>,
    pub report: Report,
}

#[derive(Clone, Debug, Default)]
pub struct ExactnessReport {
    pub report: Report,
    pub exact: bool,
    pub codim_l: Option<usize>,
    /// Codimension reached by the tested ideal of minors.
    pub codim_minors: Option<usize>,
    /// The spinor sets used, when `k` exceeds [`FULL_MINOR_LIMIT`].
    pub subsets: Vec<SpinorSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankDrop {
    pub ranks: Vec<usize>,
    pub bound: usize,
    pub within_bound: bool,
}
