use std::sync::Arc;

use crate::field::Field;
use crate::groebner::Ideal;
use crate::poly::{PolyRing, Polynomial};

/// Isotropic 2×4 matrices `N = (a b x y; c d z t)` for the split form in
/// four variables, with the two maximal minors and the two nonspinor
/// minors of the resulting spinor bundle.
#[derive(Clone, Debug)]
pub struct Ogr24<F: Field> {
    pub ring: Arc<PolyRing>,
    /// `(ax + by, az + bt + cx + dy, cz + dt)`.
    pub i_w: Ideal<F>,
    /// `ad − bc`.
    pub delta1: Polynomial<F>,
    /// `xt − yz`.
    pub delta2: Polynomial<F>,
    /// `dx − bz` and `at − cy`.
    pub nonspinors: [Polynomial<F>; 2],
    /// `[I_W : Δ₁]`.
    pub colon: Ideal<F>,
}

impl<F: Field> Ogr24<F> {
    /// `Δ₁Δ₂ − (az − cx)²`.
    pub fn square_relation(&self) -> Polynomial<F> {
        Polynomial::parse(&self.ring, "(a*d - b*c)*(x*t - y*z) - (a*z - c*x)^2")
    }
}

pub fn build_ogr24<F: Field>() -> Ogr24<F> {
    let ring = PolyRing::standard(["a", "b", "c", "d", "x", "y", "z", "t"]);
    let p = |s: &str| Polynomial::parse(&ring, s);
    let i_w = Ideal::new(&ring, [p("a*x + b*y"), p("a*z + b*t + c*x + d*y"), p("c*z + d*t")]);
    let delta1 = p("a*d - b*c");
    let colon = i_w.quotient(&delta1).expect("small ideal");
    Ogr24 {
        i_w,
        delta1,
        delta2: p("x*t - y*z"),
        nonspinors: [p("d*x - b*z"), p("a*t - c*y")],
        colon,
        ring,
    }
}
