//! Multivariate gcd by recursive primitive parts and subresultant remainder
//! sequences, eliminating the last occurring variable first.

use crate::error::ArithError;
use crate::field::Field;

use super::polynomial::Polynomial;
use super::ring::Monomial;

/// Dense univariate polynomial in one variable of the ring, coefficients free of it.
type Univariate<F> = Vec<Polynomial<F>>;

fn trim<F: Field>(u: &mut Univariate<F>) {
    while u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
}

fn deg<F: Field>(u: &Univariate<F>) -> usize {
    u.len() - 1
}

fn to_univariate<F: Field>(p: &Polynomial<F>, var: usize) -> Univariate<F> {
    let mut u = p.coefficients_in(var);
    trim(&mut u);
    u
}

fn from_univariate<F: Field>(u: &Univariate<F>, var: usize, proto: &Polynomial<F>) -> Polynomial<F> {
    let ring = proto.ring();
    let parts = u.iter().enumerate().map(|(e, c)| {
        let mut m = Monomial::one(ring.nvars());
        m.0[var] = e as u16;
        c.mul_term(&m, &F::one())
    });
    Polynomial::sum(ring, parts)
}

fn map_exact_div<F: Field>(u: &Univariate<F>, d: &Polynomial<F>) -> Univariate<F> {
    u.iter()
        .map(|c| c.divide_exact(d).expect("exact division in subresultant sequence"))
        .collect()
}

fn scalar_mul<F: Field>(u: &Univariate<F>, s: &Polynomial<F>) -> Univariate<F> {
    u.iter().map(|c| c * s).collect()
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) · a mod b`.
fn prem<F: Field>(a: &Univariate<F>, b: &Univariate<F>) -> Univariate<F> {
    let db = deg(b);
    let lb = b[db].clone();
    let mut r = a.clone();
    let mut e = (deg(a) + 1 - db) as u32;
    while !r.is_empty() && deg(&r) >= db {
        let dr = deg(&r);
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Univariate<F> = r.iter().map(|c| c * &lb).collect();
        for (i, bc) in b.iter().enumerate() {
            next[i + shift] = &next[i + shift] - &(bc * &lr);
        }
        r = next;
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e);
        r = scalar_mul(&r, &f);
    }
    r
}

fn content_in<F: Field>(u: &Univariate<F>) -> Polynomial<F> {
    let mut g = Polynomial::zero(u[0].ring());
    for c in u {
        g = gcd_rec(&g, c);
        if g.is_unit() {
            break;
        }
    }
    g
}

fn last_var<F: Field>(p: &Polynomial<F>, q: &Polynomial<F>) -> Option<usize> {
    (0..p.ring().nvars()).rev().find(|&i| p.uses_var(i) || q.uses_var(i))
}

fn gcd_rec<F: Field>(p: &Polynomial<F>, q: &Polynomial<F>) -> Polynomial<F> {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    if p.is_constant() || q.is_constant() {
        return Polynomial::one(p.ring());
    }
    let var = last_var(p, q).expect("nonconstant input uses some variable");
    if !p.uses_var(var) {
        return gcd_rec(p, &content_in(&to_univariate(q, var)));
    }
    if !q.uses_var(var) {
        return gcd_rec(&content_in(&to_univariate(p, var)), q);
    }
    let up = to_univariate(p, var);
    let uq = to_univariate(q, var);
    let cp = content_in(&up);
    let cq = content_in(&uq);
    let d = gcd_rec(&cp, &cq);
    let (mut a, mut b) = (map_exact_div(&up, &cp), map_exact_div(&uq, &cq));
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = Polynomial::one(p.ring());
    let mut h = Polynomial::one(p.ring());
    let ring = p.ring().clone();
    let result = loop {
        let delta = (deg(&a) - deg(&b)) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            break b;
        }
        if deg(&r) == 0 {
            break vec![Polynomial::one(&ring)];
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = map_exact_div(&r, &divisor);
        g = a[deg(&a)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta).divide_exact(&h.pow(delta - 1)).expect("subresultant h update"),
        };
    };
    let c = content_in(&result);
    let prim = map_exact_div(&result, &c);
    &d * &from_univariate(&prim, var, p)
}

impl<F: Field> Polynomial<F> {
    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Result<Self, ArithError> {
        if !self.same_ring(other) {
            return Err(ArithError::RingMismatch);
        }
        Ok(gcd_rec(self, other).monic())
    }

    /// Gcd of a list; zero for an empty list.
    pub fn gcd_all<'a>(polys: impl IntoIterator<Item = &'a Self>) -> Option<Self> {
        let mut it = polys.into_iter();
        let first = it.next()?.clone();
        let mut g = first;
        for p in it {
            g = gcd_rec(&g, p);
            if g.is_unit() {
                break;
            }
        }
        Some(g.monic())
    }
}
