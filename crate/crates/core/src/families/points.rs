use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::Field;

use super::tom::TomLambda;

fn nonzero<F: Field>(rng: &mut ChaCha8Rng) -> F {
    loop {
        let v: i64 = rng.gen_range(-6..=6);
        if v != 0 {
            return F::from_i64(v);
        }
    }
}

/// Seeded rational points on the Tom variety.
///
/// With `u = (p, q)`, `v = (r, s)` in `F⁶`, `q = αp + βr`, `s = γp − αr` and
/// `λ = α² + βγ`, the rank 2 skew matrix `u·ᵗv − v·ᵗu` is extrasymmetric
/// and its upper-left entries give a point of `V(L)`.
pub fn tom_points<F: Field>(lambda: &TomLambda<F>, count: usize, seed: u64) -> Vec<Vec<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let alpha = F::from_i64(rng.gen_range(-4..=4));
        let beta: F = nonzero(&mut rng);
        let gamma = match lambda {
            TomLambda::Variable => F::from_i64(rng.gen_range(-4..=4)),
            TomLambda::Scalar(l) => l.sub_ref(&alpha.mul_ref(&alpha)).div_ref(&beta),
        };
        let p: [F; 3] = std::array::from_fn(|_| F::from_i64(rng.gen_range(-5..=5)));
        let r: [F; 3] = std::array::from_fn(|_| F::from_i64(rng.gen_range(-5..=5)));
        let q: [F; 3] = std::array::from_fn(|i| alpha.mul_ref(&p[i]).add_ref(&beta.mul_ref(&r[i])));
        let s: [F; 3] = std::array::from_fn(|i| gamma.mul_ref(&p[i]).sub_ref(&alpha.mul_ref(&r[i])));
        let u = [&p[..], &q[..]].concat();
        let v = [&r[..], &s[..]].concat();
        let m = |i: usize, j: usize| u[i - 1].mul_ref(&v[j - 1]).sub_ref(&v[i - 1].mul_ref(&u[j - 1]));
        let mut pt = vec![m(1, 2), m(1, 3), m(2, 3), m(1, 4), m(1, 5), m(1, 6), m(2, 5), m(2, 6), m(3, 6)];
        if pt.iter().all(|x| x.is_zero()) || out.iter().any(|o: &Vec<F>| o[..9] == pt[..]) {
            continue;
        }
        if let TomLambda::Variable = lambda {
            pt.push(alpha.mul_ref(&alpha).add_ref(&beta.mul_ref(&gamma)));
        }
        out.push(pt);
    }
    out
}

/// Seeded distinct points of `F^nvars` vanishing on the coordinates `vars`.
pub fn koszul_points<F: Field>(nvars: usize, vars: &[usize; 4], count: usize, seed: u64) -> Vec<Vec<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Vec<F>> = Vec::with_capacity(count);
    let free = nvars - vars.len();
    let mut attempts = 0;
    while out.len() < count && attempts < 64 * count.max(1) {
        attempts += 1;
        let pt: Vec<F> =
            (0..nvars).map(|i| if vars.contains(&i) { F::zero() } else { F::from_i64(rng.gen_range(-9..=9)) }).collect();
        if free == 0 || !out.contains(&pt) {
            out.push(pt);
        }
    }
    out
}
