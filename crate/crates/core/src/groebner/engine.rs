//! Buchberger's algorithm on submodules of a free module.
//!
//! Ideals are the rank-one case. Pairs are processed by sugar degree, with
//! the Gebauer–Möller installation of new pairs. Each basis element can
//! carry its expression in terms of the input generators.

use crate::error::GroebnerError;
use crate::field::Field;
use crate::poly::{Monomial, Polynomial};

use super::module::{FreeModule, ModuleOrder, Term, Vector};

/// Default budget of S-pair reductions.
pub const DEFAULT_LIMIT: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbOptions {
    /// Maximum number of S-pair reductions before giving up.
    pub limit: usize,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions { limit: DEFAULT_LIMIT }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Element<F: Field> {
    pub v: Vector<F>,
    /// Coefficients expressing `v` in the input generators.
    pub repr: Vector<F>,
    pub sugar: i64,
    pub comp: usize,
    pub lead: Monomial,
    mask: u64,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: i64,
    degree: i64,
}

fn support_mask(m: &Monomial) -> u64 {
    m.exponents()
        .iter()
        .enumerate()
        .fold(0, |acc, (i, &e)| if e > 0 { acc | (1u64 << (i % 64)) } else { acc })
}

pub(crate) struct Engine<F: Field> {
    pub module: FreeModule,
    /// Free module indexing the input generators, used for representations.
    pub tags: FreeModule,
    pub elems: Vec<Element<F>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    options: GbOptions,
    reductions: usize,
    track: bool,
}

impl<F: Field> Engine<F> {
    pub fn new(module: &FreeModule, ninputs: usize, track: bool, options: GbOptions) -> Self {
        let tags = FreeModule::new(module.ring(), vec![0; ninputs], ModuleOrder::Pot);
        Engine { module: module.clone(), tags, elems: Vec::new(), active: Vec::new(), pairs: Vec::new(), options, reductions: 0, track }
    }

    /// An engine holding an already complete basis, used only for reduction.
    pub fn from_basis(
        module: &FreeModule,
        ninputs: usize,
        track: bool,
        basis: Vec<(Vector<F>, Vector<F>)>,
    ) -> Self {
        let mut e = Engine::new(module, ninputs, track, GbOptions::default());
        for (v, repr) in basis {
            let (comp, lead) = (v.terms[0].0, v.terms[0].1.clone());
            let mask = support_mask(&lead);
            e.elems.push(Element { v, repr, sugar: 0, comp, lead, mask });
            e.active.push(true);
        }
        e
    }

    fn sugar_of(&self, v: &Vector<F>) -> i64 {
        v.terms.iter().map(|(c, m, _)| self.module.degree(*c, m)).max().unwrap_or(0)
    }

    /// Install an input generator unreduced, tagged as input `index`.
    pub fn add_input(&mut self, v: Vector<F>, index: usize) {
        if v.is_zero() {
            return;
        }
        let repr = if self.track { self.tags.basis_vector(index) } else { Vector::zero() };
        let sugar = self.sugar_of(&v);
        self.insert(v, repr, sugar);
    }

    /// Reduce and, if nonzero, install a further generator tagged with `repr`.
    /// Returns whether the basis grew.
    pub fn add_reduced(&mut self, v: Vector<F>, repr: Vector<F>) -> bool {
        let sugar = self.sugar_of(&v);
        let (h, hr) = self.reduce(v, repr, false, |_, _, _| {});
        if h.is_zero() {
            return false;
        }
        self.insert(h, hr, sugar);
        true
    }

    fn insert(&mut self, v: Vector<F>, repr: Vector<F>, sugar: i64) {
        let lc_inv = v.terms[0].2.inv().expect("nonzero leading coefficient");
        let v = v.scale(&lc_inv);
        let repr = if self.track { repr.scale(&lc_inv) } else { repr };
        let (comp, lead) = (v.terms[0].0, v.terms[0].1.clone());
        let mask = support_mask(&lead);
        let t = self.elems.len();
        self.elems.push(Element { v, repr, sugar, comp, lead, mask });
        self.active.push(true);
        self.update_pairs(t);
    }

    /// Gebauer–Möller update for the new element `t`.
    fn update_pairs(&mut self, t: usize) {
        let rank_one = self.module.rank() == 1;
        let ring = self.module.ring().clone();
        let (tc, tl) = (self.elems[t].comp, self.elems[t].lead.clone());
        let tsugar = self.elems[t].sugar;
        let tdeg = ring.degree(&tl) as i64;
        let candidates: Vec<(usize, Monomial, bool)> = (0..t)
            .filter(|&i| self.active[i] && self.elems[i].comp == tc)
            .map(|i| {
                let li = &self.elems[i].lead;
                (i, li.lcm(&tl), rank_one && li.is_coprime(&tl))
            })
            .collect();
        let mut keep = vec![false; candidates.len()];
        let mut alive = vec![true; candidates.len()];
        for a in 0..candidates.len() {
            alive[a] = false;
            let (_, la, coprime) = &candidates[a];
            let dominated = (0..candidates.len())
                .any(|b| (alive[b] || keep[b]) && candidates[b].1.divides(la));
            if *coprime || !dominated {
                keep[a] = true;
            }
        }
        // Chain criterion on existing pairs.
        let elems = &self.elems;
        self.pairs.retain(|p| {
            if elems[p.i].comp != tc || !tl.divides(&p.lcm) {
                return true;
            }
            let lit = elems[p.i].lead.lcm(&tl);
            let ljt = elems[p.j].lead.lcm(&tl);
            lit == p.lcm || ljt == p.lcm
        });
        for (a, (i, lcm, coprime)) in candidates.into_iter().enumerate() {
            if !keep[a] || coprime {
                continue;
            }
            let ld = ring.degree(&lcm) as i64;
            let si = self.elems[i].sugar + ld - ring.degree(&self.elems[i].lead) as i64;
            let st = tsugar + ld - tdeg;
            let degree = ld + self.module.shifts()[tc];
            self.pairs.push(Pair { i, j: t, lcm, sugar: si.max(st), degree });
        }
        for i in 0..t {
            if self.active[i] && self.elems[i].comp == tc && tl.divides(&self.elems[i].lead) {
                self.active[i] = false;
            }
        }
    }

    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let module = &self.module;
        let elems = &self.elems;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let better = (a.sugar, a.degree)
                .cmp(&(b.sugar, b.degree))
                .then_with(|| module.cmp((elems[a.i].comp, &a.lcm), (elems[b.i].comp, &b.lcm)))
                .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
                .is_lt();
            if better {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    /// Index of a basis element whose leading term divides `c·m`.
    fn find_reducer(&self, comp: usize, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        let mask = support_mask(m);
        let mut best: Option<usize> = None;
        for (i, e) in self.elems.iter().enumerate() {
            if Some(i) == skip || e.comp != comp || e.mask & !mask != 0 || !e.lead.divides(m) {
                continue;
            }
            match best {
                Some(b) if self.elems[b].v.terms.len() <= e.v.terms.len() => {}
                _ => best = Some(i),
            }
        }
        best
    }

    /// Full reduction of `v` by the current basis. `record(i, q, c)` is told
    /// about every step `v -= c·q·g_i`.
    pub fn reduce(
        &self,
        v: Vector<F>,
        mut repr: Vector<F>,
        top_only: bool,
        mut record: impl FnMut(usize, &Monomial, &F),
    ) -> (Vector<F>, Vector<F>) {
        self.reduce_skipping(v, &mut repr, top_only, None, &mut record)
    }

    fn reduce_skipping(
        &self,
        v: Vector<F>,
        repr: &mut Vector<F>,
        top_only: bool,
        skip: Option<usize>,
        record: &mut impl FnMut(usize, &Monomial, &F),
    ) -> (Vector<F>, Vector<F>) {
        let mut terms: Vec<Term<F>> = v.terms;
        let mut pos = 0;
        while pos < terms.len() {
            let (c, m) = (terms[pos].0, &terms[pos].1);
            match self.find_reducer(c, m, skip) {
                Some(g) => {
                    let e = &self.elems[g];
                    let q = e.lead.quotient_of(m).expect("reducer divides");
                    let coef = terms[pos].2.clone();
                    record(g, &q, &coef);
                    let tail = terms.split_off(pos);
                    terms.extend(self.module.add_scaled(&tail, &e.v, &q, &coef, true));
                    if self.track {
                        repr.terms = self.tags.add_scaled(&repr.terms, &e.repr, &q, &coef, true);
                    }
                }
                None if top_only => break,
                None => pos += 1,
            }
        }
        (Vector { terms }, std::mem::replace(repr, Vector::zero()))
    }

    fn spair(&self, p: &Pair) -> (Vector<F>, Vector<F>) {
        let (a, b) = (&self.elems[p.i], &self.elems[p.j]);
        let qa = a.lead.quotient_of(&p.lcm).expect("lcm");
        let qb = b.lead.quotient_of(&p.lcm).expect("lcm");
        let one = F::one();
        let s = self.module.add_scaled(&self.module.add_scaled(&[], &a.v, &qa, &one, false), &b.v, &qb, &one, true);
        let r = if self.track {
            let ra = self.tags.add_scaled(&[], &a.repr, &qa, &one, false);
            Vector { terms: self.tags.add_scaled(&ra, &b.repr, &qb, &one, true) }
        } else {
            Vector::zero()
        };
        (Vector { terms: s }, r)
    }

    /// Run until every pair has been processed.
    pub fn complete(&mut self) -> Result<(), GroebnerError> {
        while let Some(p) = self.select_pair() {
            self.reductions += 1;
            if self.reductions > self.options.limit {
                return Err(GroebnerError::ResourceLimit { limit: self.options.limit });
            }
            let (s, r) = self.spair(&p);
            let (h, hr) = self.reduce(s, r, false, |_, _, _| {});
            if !h.is_zero() {
                self.insert(h, hr, p.sugar);
            }
        }
        Ok(())
    }

    /// Indices of a minimal basis: leading terms pairwise non-dividing,
    /// ties broken towards earlier elements.
    pub fn minimal_indices(&self) -> Vec<usize> {
        (0..self.elems.len())
            .filter(|&i| {
                let e = &self.elems[i];
                !self.elems.iter().enumerate().any(|(j, f)| {
                    j != i && f.comp == e.comp && f.lead.divides(&e.lead) && (f.lead != e.lead || j < i)
                })
            })
            .collect()
    }

    /// The reduced basis, each element with its representation, in
    /// descending order of leading terms.
    pub fn reduced(&self) -> Vec<(Vector<F>, Vector<F>)> {
        let keep = self.minimal_indices();
        let sub = Engine::from_basis(
            &self.module,
            self.tags.rank(),
            self.track,
            keep.iter().map(|&i| (self.elems[i].v.clone(), self.elems[i].repr.clone())).collect(),
        );
        let mut out: Vec<(Vector<F>, Vector<F>)> = (0..sub.elems.len())
            .map(|k| {
                let e = &sub.elems[k];
                let mut repr = e.repr.clone();
                let lead = Vector { terms: vec![e.v.terms[0].clone()] };
                let tail = Vector { terms: e.v.terms[1..].to_vec() };
                let (rt, rr) = sub.reduce_skipping(tail, &mut repr, false, Some(k), &mut |_, _, _| {});
                let v = Vector { terms: [lead.terms, rt.terms].concat() };
                (v, rr)
            })
            .collect();
        out.sort_by(|a, b| {
            let (x, y) = (&a.0.terms[0], &b.0.terms[0]);
            self.module.cmp((y.0, &y.1), (x.0, &x.1))
        });
        out
    }

    /// Generators of the syzygies among the current basis elements, as
    /// vectors in `S^{elems}`, by Schreyer's construction from a minimal set
    /// of leading-term syzygies.
    pub fn schreyer_syzygies(&self) -> Vec<Vec<Polynomial<F>>> {
        let ring = self.module.ring();
        let n = self.elems.len();
        let mut out = Vec::new();
        for j in 0..n {
            let quotients: Vec<(usize, Monomial)> = (0..j)
                .filter(|&i| self.elems[i].comp == self.elems[j].comp)
                .map(|i| {
                    let l = self.elems[i].lead.lcm(&self.elems[j].lead);
                    (i, self.elems[j].lead.quotient_of(&l).expect("lcm"))
                })
                .collect();
            for (a, (i, u)) in quotients.iter().enumerate() {
                let redundant = quotients.iter().enumerate().any(|(b, (_, w))| {
                    b != a && w.divides(u) && (w != u || b < a)
                });
                if redundant {
                    continue;
                }
                let lcm = self.elems[*i].lead.lcm(&self.elems[j].lead);
                let p = Pair { i: *i, j, lcm, sugar: 0, degree: 0 };
                let (s, _) = self.spair(&p);
                let mut coeffs: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); n];
                let qi = self.elems[*i].lead.quotient_of(&p.lcm).expect("lcm");
                coeffs[*i].push((qi, F::one()));
                coeffs[j].push((u.clone(), -F::one()));
                let (rem, _) = self.reduce(s, Vector::zero(), false, |g, q, c| {
                    coeffs[g].push((q.clone(), -c.clone()));
                });
                debug_assert!(rem.is_zero(), "S-pair of a Gröbner basis reduces to zero");
                out.push(coeffs.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect());
            }
        }
        out
    }
}
