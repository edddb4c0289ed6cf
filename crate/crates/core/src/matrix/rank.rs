use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::Field;
use crate::poly::Polynomial;

use super::poly_matrix::PolyMatrix;

/// Bound for random evaluation coordinates, drawn from `[-BOUND, BOUND]`.
pub const POINT_BOUND: i64 = 10_000;

const RANK_TRIALS: usize = 3;

/// A rank claim with a witnessing nonzero minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate<F: Field> {
    pub rank: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    /// The witnessing minor, verified to be a nonzero polynomial.
    pub minor: Polynomial<F>,
}

/// A seeded random point with integer coordinates in `[-POINT_BOUND, POINT_BOUND]`.
pub fn random_point<F: Field>(rng: &mut impl Rng, nvars: usize) -> Vec<F> {
    (0..nvars).map(|_| F::from_i64(rng.gen_range(-POINT_BOUND..=POINT_BOUND))).collect()
}

impl<F: Field> PolyMatrix<F> {
    /// Rank over the fraction field. Candidate minors are located at random
    /// points; the reported minor is then expanded symbolically and checked
    /// to be nonzero, so the lower bound is certain. The rank is the largest
    /// such certified size found over a few trials.
    pub fn generic_rank(&self, seed: u64) -> RankCertificate<F> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut best = RankCertificate { rank: 0, rows: vec![], cols: vec![], minor: Polynomial::one(self.ring()) };
        if self.is_zero() {
            return best;
        }
        for _ in 0..RANK_TRIALS {
            let pt = random_point::<F>(&mut rng, self.ring().nvars());
            let m = self.evaluate(&pt).expect("point has ring length");
            let (rows, cols) = m.pivot_minor();
            if rows.len() <= best.rank {
                continue;
            }
            let minor = self.minor(&rows, &cols).expect("pivot indices are valid");
            if !minor.is_zero() {
                best = RankCertificate { rank: rows.len(), rows, cols, minor };
            }
        }
        best
    }
}
