use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::error::ArithError;
use crate::field::{Field, Fp31, Rational};

type P = Polynomial<Rational>;

fn ring_xy() -> Arc<PolyRing> {
    PolyRing::standard(["x", "y"])
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn p(ring: &Arc<PolyRing>, s: &str) -> P {
    P::parse(ring, s)
}

#[test]
fn cancellation_and_product() {
    let r = ring_xy();
    assert_eq!(&p(&r, "x+y") + &p(&r, "x-y"), p(&r, "2*x"));
    assert_eq!(&p(&r, "x+y") * &p(&r, "x-y"), p(&r, "x^2-y^2"));
    assert!((&p(&r, "x+y") - &p(&r, "y+x")).is_zero());
}

#[test]
fn ring_mismatch_is_reported() {
    let a = p(&ring_xy(), "x");
    let b = p(&PolyRing::standard(["x", "z"]), "x");
    assert_eq!(a.checked_add(&b), Err(ArithError::RingMismatch));
    assert_eq!(a.gcd(&b), Err(ArithError::RingMismatch));
}

#[test]
fn tom_first_generator_matches_term_for_term() {
    let r = PolyRing::standard(["a", "b", "c", "d", "e", "f", "g", "h", "i", "l"]);
    let lhs = &(&p(&r, "l*a*c") + &p(&r, "e*h")) - &p(&r, "f*g");
    let rhs = p(&r, "l*a*c + e*h - f*g");
    assert_eq!(lhs.terms(), rhs.terms());
}

#[test]
fn exact_division() {
    let r = ring_xy();
    assert_eq!(p(&r, "x^2*y + x*y^2").divide_exact(&p(&r, "x*y")), Ok(p(&r, "x+y")));
    assert_eq!(p(&r, "x^2+y^2").divide_exact(&p(&r, "x")), Err(ArithError::NotDivisible));
    assert_eq!(p(&r, "x").divide_exact(&P::zero(&r)), Err(ArithError::DivisionByZero));
}

#[test]
fn gcd_examples() {
    let r = ring_xy();
    assert_eq!(p(&r, "x^2*y").gcd(&p(&r, "x*y^2")).unwrap(), p(&r, "x*y"));
    assert_eq!(p(&r, "-2*x+4").gcd(&P::zero(&r)).unwrap(), p(&r, "x-2"));
    assert!(P::zero(&r).gcd(&P::zero(&r)).unwrap().is_zero());
    let k = PolyRing::standard(["x1", "x2", "x3", "x4"]);
    let minors: Vec<P> = ["x1", "x2", "x3", "x4"]
        .iter()
        .map(|v| p(&k, &format!("-x4^2*{v}")))
        .collect();
    assert_eq!(P::gcd_all(&minors).unwrap(), p(&k, "x4^2"));
}

#[test]
fn gcd_of_shared_nonmonomial_factor() {
    let r = PolyRing::standard(["x", "y", "z"]);
    let g = p(&r, "x*y - z^2 + 3");
    let a = &g * &p(&r, "x + y*z");
    let b = &g * &p(&r, "x^2 - 2*z");
    assert_eq!(a.gcd(&b).unwrap(), g.monic());
}

#[test]
fn square_roots() {
    let r = ring_xy();
    assert_eq!(p(&r, "(x+y)^2").sqrt_exact(), Ok(p(&r, "x+y")));
    assert_eq!(p(&r, "(y-x)^2").sqrt_exact(), Ok(p(&r, "x-y")));
    assert_eq!(p(&r, "x^2+y^2").sqrt_exact(), Err(ArithError::NotAPerfectSquare));
    assert_eq!(p(&r, "-x^2").sqrt_exact(), Err(ArithError::NotAPerfectSquare));
    assert!(P::zero(&r).sqrt_exact().unwrap().is_zero());
    let t = PolyRing::standard(["a", "b", "c", "d", "e", "f"]);
    let s = p(&t, "a^2*(a*f-b*e+c*d)^2").sqrt_exact().unwrap();
    assert_eq!(s, p(&t, "a*(a*f-b*e+c*d)"));
}

#[test]
fn evaluation() {
    let r = ring_xy();
    let v = p(&r, "x^2 - 1/2*y").evaluate(&[q(3, 1), q(4, 1)]).unwrap();
    assert_eq!(v, q(7, 1));
    assert_eq!(
        p(&r, "x").evaluate(&[q(1, 1)]),
        Err(ArithError::PointLength { expected: 2, got: 1 })
    );
}

#[test]
fn homogeneity_respects_weights() {
    let w = PolyRing::new(vec!["x", "y"], Some(vec![1, 2]), MonomialOrder::Grevlex).unwrap();
    assert_eq!(p(&w, "x^2 + y").homogeneity(), Homogeneity::Degree(2));
    assert_eq!(p(&w, "x + y").homogeneity(), Homogeneity::Inhomogeneous);
    assert_eq!(P::zero(&w).homogeneity(), Homogeneity::Zero);
}

#[test]
fn ring_construction_errors() {
    assert!(PolyRing::new(vec!["x", "x"], None, MonomialOrder::Lex).is_err());
    assert!(PolyRing::new(vec!["x", "y"], Some(vec![1]), MonomialOrder::Lex).is_err());
    assert!(PolyRing::new(vec!["x"], Some(vec![0]), MonomialOrder::Lex).is_err());
}

#[test]
fn orders_pick_different_leaders() {
    let names = ["x", "y", "z"];
    let text = "x*z + y^2";
    let lead = |order| {
        let r = PolyRing::new(names.to_vec(), None, order).unwrap();
        let f = p(&r, text);
        f.leading_monomial().unwrap().exponents().to_vec()
    };
    assert_eq!(lead(MonomialOrder::Lex), vec![1, 0, 1]);
    assert_eq!(lead(MonomialOrder::Grlex), vec![1, 0, 1]);
    assert_eq!(lead(MonomialOrder::Grevlex), vec![0, 2, 0]);
}

#[test]
fn display_round_trips() {
    let r = ring_xy();
    for s in ["3*x^2 - 1/2*y", "-x*y + 7", "0", "x^3*y^2 - x - 1"] {
        let f = p(&r, s);
        assert_eq!(p(&r, &f.to_string()), f, "{s}");
    }
}

#[test]
fn parse_errors_point_at_the_token() {
    let r = ring_xy();
    let e = parse_polynomial::<Rational>(&r, "x**2").unwrap_err();
    assert_eq!((e.line, e.col), (1, 3));
    assert!(e.expected.iter().any(|t| t == "identifier"));
    let e = parse_polynomial::<Rational>(&r, "2 x").unwrap_err();
    assert_eq!((e.line, e.col), (1, 3));
    let e = parse_polynomial::<Rational>(&r, "x +\n  w").unwrap_err();
    assert_eq!((e.line, e.col), (2, 3));
    assert!(parse_polynomial::<Rational>(&r, "1/0").is_err());
    assert!(parse_polynomial::<Rational>(&r, "x # trailing comment").is_ok());
}

#[test]
fn prime_field_coefficients() {
    let r = ring_xy();
    let f = Polynomial::<Fp31>::parse(&r, "(x + 1/2*y)^2");
    let s = f.sqrt_exact().unwrap();
    assert_eq!(&s * &s, f);
}

fn arb_poly(nvars: usize, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u16..3, nvars), -5i64..=5), 0..max_terms)
}

fn build(ring: &Arc<PolyRing>, entries: &[(Vec<u16>, i64)]) -> P {
    let terms = entries
        .iter()
        .map(|(e, c)| (Monomial::from_exponents(e), Rational::from_i64(*c)))
        .collect();
    P::from_terms(ring, terms)
}

fn ring3() -> Arc<PolyRing> {
    PolyRing::standard(["x", "y", "z"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sqrt_of_square_is_normalized_input(a in arb_poly(3, 5)) {
        let r = ring3();
        let f = build(&r, &a);
        prop_assert_eq!((&f * &f).sqrt_exact().unwrap(), f.normalize_sign());
    }

    #[test]
    fn division_undoes_multiplication(a in arb_poly(3, 5), d in arb_poly(3, 4)) {
        let r = ring3();
        let (f, g) = (build(&r, &a), build(&r, &d));
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).divide_exact(&g).unwrap(), f);
    }

    #[test]
    fn gcd_extracts_common_factor(a in arb_poly(3, 3), b in arb_poly(3, 3), g in arb_poly(3, 3)) {
        let r = ring3();
        let (f1, f2, h) = (build(&r, &a), build(&r, &b), build(&r, &g));
        prop_assume!(!h.is_zero() && !(f1.is_zero() && f2.is_zero()));
        let lhs = (&f1 * &h).gcd(&(&f2 * &h)).unwrap();
        let rhs = (&h * &f1.gcd(&f2).unwrap()).monic();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_divides_both(a in arb_poly(3, 4), b in arb_poly(3, 4)) {
        let r = ring3();
        let (f1, f2) = (build(&r, &a), build(&r, &b));
        let g = f1.gcd(&f2).unwrap();
        prop_assume!(!g.is_zero());
        prop_assert!(f1.divide_exact(&g).is_ok());
        prop_assert!(f2.divide_exact(&g).is_ok());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in arb_poly(3, 5), b in arb_poly(3, 5),
                                pt in prop::collection::vec(-4i64..=4, 3)) {
        let r = ring3();
        let (f, g) = (build(&r, &a), build(&r, &b));
        let pt: Vec<Rational> = pt.into_iter().map(Rational::from_i64).collect();
        let (fv, gv) = (f.evaluate(&pt).unwrap(), g.evaluate(&pt).unwrap());
        prop_assert_eq!((&f * &g).evaluate(&pt).unwrap(), fv.mul_ref(&gv));
        prop_assert_eq!((&f + &g).evaluate(&pt).unwrap(), fv.add_ref(&gv));
    }

    #[test]
    fn terms_stay_sorted_and_nonzero(a in arb_poly(3, 6), b in arb_poly(3, 6)) {
        let r = ring3();
        let h = &build(&r, &a) * &build(&r, &b);
        for w in h.terms().windows(2) {
            prop_assert_eq!(r.cmp(&w[0].0, &w[1].0), std::cmp::Ordering::Greater);
        }
        prop_assert!(h.terms().iter().all(|(_, c)| !num_traits::Zero::is_zero(c)));
    }
}
