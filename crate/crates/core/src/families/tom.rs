use std::sync::Arc;

use crate::field::Field;
use crate::matrix::PolyMatrix;
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::resolution::GorResolution;

/// How the multiplier λ of the extrasymmetric matrix enters.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum TomLambda<F> {
    /// A tenth variable `lam`. The ideal is homogeneous for the weights
    /// `a, b, c ↦ 1` and `d, …, i, lam ↦ 2` (λ must have even weight).
    #[default]
    Variable,
    /// A fixed nonzero scalar, in the standard graded ring `ℚ[a..i]`.
    Scalar(F),
}

const NAMES: [&str; 9] = ["a", "b", "c", "d", "e", "f", "g", "h", "i"];

/// The nine Pfaffians `L` of the extrasymmetric matrix.
pub const TOM_GENERATORS: [&str; 9] = [
    "lam*a*c + e*h - f*g",
    "-lam*a*b - d*h + e*f",
    "lam*a^2 + d*g - e^2",
    "a*h - b*g + c*e",
    "-a*f + b*e - c*d",
    "lam*b^2 + d*i - f^2",
    "lam*b*c + e*i - f*h",
    "lam*c^2 + g*i - h^2",
    "a*i - b*h + c*f",
];

/// The 16×9 array whose transpose is `M₁`.
pub const TOM_SYZYGIES: [[&str; 9]; 16] = [
    ["0", "a", "b", "d", "e", "0", "0", "0", "0"],
    ["-a", "0", "c", "e", "g", "0", "0", "0", "0"],
    ["-b", "-c", "0", "f", "h", "0", "0", "0", "0"],
    ["-d", "-e", "-f", "0", "-lam*a", "0", "0", "0", "0"],
    ["-e", "-g", "-h", "lam*a", "0", "0", "0", "0", "0"],
    ["-h", "0", "0", "lam*c", "0", "0", "g", "-e", "0"],
    ["f", "-h", "0", "-lam*b", "lam*c", "-g", "0", "d", "0"],
    ["0", "f", "0", "0", "-lam*b", "e", "-d", "0", "0"],
    ["i", "0", "0", "0", "0", "0", "-h", "f", "-lam*c"],
    ["0", "i", "0", "0", "0", "h", "-f", "0", "lam*b"],
    ["0", "h", "i", "0", "-lam*c", "0", "e", "-d", "-lam*a"],
    ["0", "0", "0", "i", "0", "0", "-c", "b", "-h"],
    ["0", "0", "0", "0", "i", "c", "-b", "0", "f"],
    ["0", "-b", "0", "0", "f", "-a", "0", "0", "d"],
    ["0", "-c", "0", "0", "h", "0", "-a", "0", "e"],
    ["c", "0", "0", "-h", "0", "0", "0", "-a", "g"],
];

/// The ring of the Tom example for a given λ mode.
pub fn tom_ring<F: Field>(lambda: &TomLambda<F>) -> Arc<PolyRing> {
    match lambda {
        TomLambda::Variable => {
            let names = NAMES.iter().copied().chain(["lam"]);
            PolyRing::new(names, Some(vec![1, 1, 1, 2, 2, 2, 2, 2, 2, 2]), MonomialOrder::Grevlex).expect("valid ring")
        }
        TomLambda::Scalar(_) => PolyRing::standard(NAMES),
    }
}

/// Tom unprojection data with `Q = J` and `k = 8`.
pub fn build_tom<F: Field>(lambda: TomLambda<F>) -> GorResolution<F> {
    let ring = tom_ring(&lambda);
    let entry = |text: &str| -> Polynomial<F> {
        match &lambda {
            TomLambda::Variable => Polynomial::parse(&ring, text),
            TomLambda::Scalar(v) => {
                // Parse in the weighted ring with λ, then substitute the scalar.
                let full = tom_ring::<F>(&TomLambda::Variable);
                let p: Polynomial<F> = Polynomial::parse(&full, text).substitute(9, v);
                let terms = p
                    .terms()
                    .iter()
                    .map(|(m, c)| (Monomial::from_exponents(&m.exponents()[..9]), c.clone()))
                    .collect();
                Polynomial::from_terms(&ring, terms)
            }
        }
    };
    let l = PolyMatrix::from_fn(&ring, 1, 9, |_, j| entry(TOM_GENERATORS[j]));
    let m1 = PolyMatrix::from_fn(&ring, 9, 16, |i, j| entry(TOM_SYZYGIES[j][i]));
    GorResolution::standard(l, m1).expect("Tom data has the isotropic shape")
}

/// The five wedge identities: columns (1-based) of `M₁` and the Pfaffian
/// whose square times `a²` is the cofactor of `L`. Taken in slot order the
/// wedges share one sign; in increasing column order the signs alternate.
pub const TOM_WEDGES: [([usize; 8], &str); 5] = [
    ([1, 2, 3, 4, 13, 14, 15, 16], "a*f - b*e + c*d"),
    ([1, 2, 3, 5, 12, 14, 15, 16], "a*h - b*g + c*e"),
    ([1, 2, 4, 5, 11, 14, 15, 16], "-lam*a^2 - d*g + e^2"),
    ([1, 3, 4, 5, 10, 14, 15, 16], "-lam*a*b - d*h + e*f"),
    ([2, 3, 4, 5, 9, 14, 15, 16], "-lam*a*c - e*h + f*g"),
];
