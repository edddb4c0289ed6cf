use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::ArithError;
use crate::field::Field;

use super::ring::{Monomial, PolyRing};

/// Result of a homogeneity test. The zero polynomial is homogeneous of every degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(u32),
    Inhomogeneous,
}

impl Homogeneity {
    /// Degree if homogeneous and nonzero.
    pub fn degree(self) -> Option<u32> {
        match self {
            Homogeneity::Degree(d) => Some(d),
            _ => None,
        }
    }

    pub fn is_homogeneous(self) -> bool {
        !matches!(self, Homogeneity::Inhomogeneous)
    }
}

/// Sparse polynomial; terms are kept strictly descending in the ring's order
/// with no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<F> {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: F) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, F::one())
    }

    pub fn from_i64(ring: &Arc<PolyRing>, c: i64) -> Self {
        Self::constant(ring, F::from_i64(c))
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i), F::one())
    }

    /// Variable by name; panics if the ring does not have it.
    pub fn named(ring: &Arc<PolyRing>, name: &str) -> Self {
        let i = ring
            .var_index(name)
            .unwrap_or_else(|| panic!("ring has no variable `{name}`"));
        Self::var(ring, i)
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: F) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Build from unordered terms, merging duplicates and dropping zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, F)>) -> Self {
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Wrap terms already in canonical order.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, F)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_term(&self) -> F {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => F::zero(),
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    fn check_ring(&self, other: &Self) -> Result<(), ArithError> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(ArithError::RingMismatch)
        }
    }

    /// Largest weighted degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| self.ring.degree(m)).max()
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut it = self.terms.iter().map(|(m, _)| self.ring.degree(m));
        match it.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if it.all(|e| e == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.0[var]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.0[var] > 0)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul_ref(c))).collect(),
        }
    }

    /// Multiply by the single term `c·m`; term order is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, b)| (a.mul(m), b.mul_ref(c))).collect(),
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let ring = &self.ring;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let take_b = |c: &F| if negate_other { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match ring.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), take_b(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let mut c = a[i].1.clone();
                    if negate_other {
                        c -= &b[j].1;
                    } else {
                        c += &b[j].1;
                    }
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), take_b(c))));
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.is_zero() {
            return Self::zero(&self.ring);
        }
        let parts: Vec<Self> = small.terms.iter().map(|(m, c)| big.mul_term(m, c)).collect();
        Self::sum_tree(parts)
    }

    /// Balanced pairwise merge of many polynomials.
    fn sum_tree(mut parts: Vec<Self>) -> Self {
        while parts.len() > 1 {
            let mut next = Vec::with_capacity(parts.len().div_ceil(2));
            let mut it = parts.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(a.merge(&b, false)),
                    None => next.push(a),
                }
            }
            parts = next;
        }
        parts.pop().expect("sum_tree on empty input")
    }

    /// Sum of many polynomials in the same ring.
    pub fn sum(ring: &Arc<PolyRing>, parts: impl IntoIterator<Item = Self>) -> Self {
        let parts: Vec<Self> = parts.into_iter().filter(|p| !p.is_zero()).collect();
        if parts.is_empty() {
            Self::zero(ring)
        } else {
            Self::sum_tree(parts)
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn evaluate(&self, point: &[F]) -> Result<F, ArithError> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(ArithError::PointLength { expected: n, got: point.len() });
        }
        // powers[i][e] = point[i]^e, built lazily up to the needed exponent
        let mut powers: Vec<Vec<F>> = point.iter().map(|x| vec![F::one(), x.clone()]).collect();
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = &mut powers[i];
                while p.len() <= e as usize {
                    let next = p[p.len() - 1].mul_ref(&point[i]);
                    p.push(next);
                }
                t *= &p[e as usize];
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / d`.
    pub fn divide_exact(&self, d: &Self) -> Result<Self, ArithError> {
        self.check_ring(d)?;
        let (dm, dc) = d.leading_term().ok_or(ArithError::DivisionByZero)?;
        let dc_inv = dc.inv().expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.leading_term() {
            let m = dm.quotient_of(rm).ok_or(ArithError::NotDivisible)?;
            let c = rc.mul_ref(&dc_inv);
            rem = rem.merge(&d.mul_term(&m, &c), true);
            quot.push((m, c));
        }
        Ok(Polynomial::from_sorted_terms(&self.ring, quot))
    }

    /// Square root with positive leading coefficient, by leading-term recursion.
    pub fn sqrt_exact(&self) -> Result<Self, ArithError> {
        let Some((lm, lc)) = self.leading_term() else {
            return Ok(self.clone());
        };
        let root_m = lm.sqrt().ok_or(ArithError::NotAPerfectSquare)?;
        let mut root_c = lc.sqrt().ok_or(ArithError::NotAPerfectSquare)?;
        if root_c.is_negative() {
            root_c = -root_c;
        }
        // Newton-polytope bound: exponents of a square root are at most half
        // of the exponent-wise maxima of `self`.
        let n = self.ring.nvars();
        let bound: Vec<u16> = (0..n).map(|i| self.degree_in(i) / 2).collect();
        let two_lead_inv = (root_c.add_ref(&root_c)).inv().expect("characteristic two");
        let mut root = Polynomial::term(&self.ring, root_m.clone(), root_c);
        let mut rem = self.merge(&(&root * &root), true);
        while let Some((rm, rc)) = rem.leading_term() {
            let m = root_m.quotient_of(rm).ok_or(ArithError::NotAPerfectSquare)?;
            if m.0.iter().zip(&bound).any(|(e, b)| e > b) {
                return Err(ArithError::NotAPerfectSquare);
            }
            let c = rc.mul_ref(&two_lead_inv);
            let t = Polynomial::term(&self.ring, m, c);
            // (σ + t)² = σ² + t(2σ + t)
            let twice_plus = root.merge(&root, false).merge(&t, false);
            rem = rem.merge(&(&t * &twice_plus), true);
            root = root.merge(&t, false);
        }
        Ok(root)
    }

    /// Multiply by ±1 so the leading coefficient is positive.
    pub fn normalize_sign(&self) -> Self {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(c) => self.scale(&c.inv().expect("nonzero")),
            None => self.clone(),
        }
    }

    /// The coefficients of `self` viewed as a polynomial in variable `var`,
    /// indexed by the exponent of `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut mm = m.clone();
            mm.0[var] = 0;
            buckets[e].push((mm, c.clone()));
        }
        // Zeroing one exponent can reorder terms under grevlex.
        buckets
            .into_iter()
            .map(|b| Polynomial::from_terms(&self.ring, b))
            .collect()
    }

    /// Substitute a value for one variable.
    pub fn substitute(&self, var: usize, value: &F) -> Self {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut mm = m.clone();
            let e = mm.0[var];
            mm.0[var] = 0;
            let mut cc = c.clone();
            for _ in 0..e {
                cc *= value;
            }
            out.push((mm, cc));
        }
        Polynomial::from_terms(&self.ring, out)
    }

    /// Move to another ring with the same variables (typically a different order).
    pub fn with_ring(&self, ring: &Arc<PolyRing>) -> Self {
        assert_eq!(ring.nvars(), self.ring.nvars(), "rings must share variables");
        Polynomial::from_terms(ring, self.terms.clone())
    }

    /// Map coefficients into another field over the same ring.
    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::from_terms(
            &self.ring,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect(),
        )
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                self.ring.fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.checked_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.checked_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.checked_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

impl<F: Field> Add for Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        &self * &rhs
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(&self)
    }
}
