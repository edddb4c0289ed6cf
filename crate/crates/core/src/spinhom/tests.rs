use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::error::SpinorError;
use crate::families::{build_tom, generic_pfaffian_hypersurface, koszul_variables, TomLambda, TOM_WEDGES};
use crate::field::{Field, Rational};
use crate::groebner::GbOptions;
use crate::matrix::ConstMatrix;
use crate::poly::Polynomial;
use crate::resolution::GorResolution;

type Q = Rational;

#[test]
fn subset_counts_and_parity() {
    for k in 1..=8 {
        assert_eq!(enumerate_spinor_sets(k).len(), 1 << (k - 1));
        assert_eq!(enumerate_nonspinor_sets(k).len(), 1 << (k - 1));
    }
    assert!(enumerate_spinor_sets(4).iter().all(|s| s.members().len() % 2 == 0));
    assert!(matches!(SpinorSet::new(4, &[1]), Err(SpinorError::WrongParity { k: 4 })));
    assert!(matches!(SpinorSet::new(3, &[4]), Err(SpinorError::InvalidSet(_))));
    assert!(NonspinorSet::new(4, &[2]).is_ok());
}

#[test]
fn set_columns_and_display() {
    let s = SpinorSet::new(4, &[1, 3]).unwrap();
    assert_eq!(s.columns(), [0, 5, 2, 7]);
    assert_eq!(s.to_string(), "{1,3}");
    assert!(s.contains(3) && !s.contains(2) && !s.contains(0));
    assert_eq!(SpinorSet::new(4, &[]).unwrap().to_string(), "{}");
}

#[test]
fn koszul_spinors_are_the_variables() {
    let res = koszul_variables::<Q>();
    let x = |i: usize| Polynomial::var(res.ring(), i);
    let all_a = cramer_spinor(&res, &SpinorSet::new(3, &[1, 2, 3]).unwrap()).unwrap();
    assert_eq!(all_a.sigma, x(3));
    let one = cramer_spinor(&res, &SpinorSet::new(3, &[1]).unwrap()).unwrap();
    assert_eq!(one.sigma, x(0));
    let table = spinor_table(&res).unwrap();
    let mut sigmas: Vec<_> = table.records.iter().map(|r| r.sigma.clone()).collect();
    sigmas.sort_by_key(|p| p.to_string());
    assert_eq!(sigmas, [x(0), x(1), x(2), x(3)]);
    assert_eq!(table.census.monomial_times_relation, 4);
}

#[test]
fn signs_match_the_wedge() {
    let res = koszul_variables::<Q>();
    for set in enumerate_spinor_sets(3) {
        let rec = cramer_spinor(&res, &set).unwrap();
        let w = spinor_submatrix(res.m1(), &set).unwrap().top_wedge().unwrap();
        let s2 = rec.sigma.pow(2).scale(&Q::from_i64(rec.sign.into()));
        let expected: Vec<_> = res.generators().iter().map(|l| &s2 * l).collect();
        assert_eq!(w, expected, "{set}");
    }
}

#[test]
fn scaled_spinors_satisfy_the_wedge() {
    let rf = crate::families::rolling_default::<Q>(0).unwrap();
    let res = &rf.symmetrized.resolution;
    let mut scaled = 0;
    for set in enumerate_spinor_sets(8) {
        let rec = cramer_spinor(res, &set).unwrap();
        let w = spinor_submatrix(res.m1(), &set).unwrap().top_wedge().unwrap();
        let s2 = rec.sigma.pow(2).scale(&rec.scale.mul_ref(&Q::from_i64(rec.sign.into())));
        let expected: Vec<_> = res.generators().iter().map(|l| &s2 * l).collect();
        assert_eq!(w, expected, "{set}");
        scaled += usize::from(rec.scale != Q::from_i64(1));
    }
    assert!(scaled > 0);
    assert_eq!(spinor_table(res).unwrap().census, Census { zero: 28, monomial_times_relation: 76, other: 24 });
}

#[test]
fn tom_wedge_identities() {
    let tom = build_tom::<Q>(TomLambda::Variable);
    let mut signs = Vec::new();
    for (cols, pf) in TOM_WEDGES {
        let members: Vec<usize> = cols.iter().copied().filter(|&c| c <= 8).collect();
        let set = SpinorSet::new(8, &members).unwrap();
        let mut sorted = set.columns();
        sorted.sort();
        assert_eq!(sorted, cols.map(|c| c - 1));
        let w = spinor_submatrix(tom.m1(), &set).unwrap().top_wedge().unwrap();
        let a = Polynomial::parse(tom.ring(), "a");
        let c = (&a * &Polynomial::parse(tom.ring(), pf)).pow(2);
        let plus: Vec<_> = tom.generators().iter().map(|l| &c * l).collect();
        let minus: Vec<_> = plus.iter().map(|p| -p).collect();
        assert!(w == plus || w == minus, "{cols:?}");
        signs.push(w == plus);
    }
    assert!(signs.iter().all(|&s| s == signs[0]), "global sign differs: {signs:?}");
}

#[test]
fn tom_census() {
    let tom = build_tom::<Q>(TomLambda::Variable);
    let table = spinor_table(&tom).unwrap();
    assert_eq!(table.records.len(), 128);
    assert_eq!(table.census, Census { zero: 14, monomial_times_relation: 62, other: 52 });
}

#[test]
fn pfaffian_hypersurface_spinors() {
    let res = generic_pfaffian_hypersurface::<Q>(2);
    let h = Polynomial::named(res.ring(), "h");
    let all_a = cramer_spinor(&res, &SpinorSet::new(5, &[1, 2, 3, 4, 5]).unwrap()).unwrap();
    assert_eq!(all_a.sigma, h.pow(2));
    let mixed = cramer_spinor(&res, &SpinorSet::new(5, &[1, 2, 3]).unwrap()).unwrap();
    let m45 = Polynomial::named(res.ring(), "m4_5");
    assert_eq!(mixed.sigma, &h * &m45);
}

#[test]
fn conjecture_holds_on_koszul() {
    let res = koszul_variables::<Q>();
    let table = spinor_table(&res).unwrap();
    let report = conjecture_check(&res, &table, GbOptions::default()).unwrap();
    assert_eq!(report.verdicts.len(), 4);
    assert!(report.all_in_ideal());
    assert!(report.counterexamples().is_empty());
}

#[test]
fn coxeter_presentation() {
    for k in 3..=7 {
        let r = verify_coxeter(k);
        assert!(r.passed(), "k = {k}: {r}");
    }
    assert_eq!(coxeter_exponent(5, 3, 4), 2);
    assert_eq!(coxeter_exponent(5, 2, 4), 3);
    assert_eq!(coxeter_exponent(5, 0, 1), 3);
    assert_eq!(coxeter_exponent(5, 0, 2), 2);
}

#[test]
fn weyl_element_validation() {
    assert!(WeylElement::new(&[0, 0, 1], 0).is_err());
    assert!(WeylElement::new(&[0, 1, 2], 0b001).is_err());
    let w = WeylElement::new(&[1, 0, 2], 0b011).unwrap();
    assert_eq!(w.order(), 2);
    assert!(WeylElement::identity(3).is_identity());
    assert_eq!(WeylElement::identity(2).to_string(), "id");
}

fn isotropic(res: &GorResolution<Q>, m1: &crate::matrix::PolyMatrix<Q>) -> bool {
    res.with_m1(m1.clone()).unwrap().verify_structure().get("isotropy M1·Q·tM1 = 0").unwrap().passed
}

#[test]
fn weyl_and_torus_preserve_isotropy() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for res in [koszul_variables::<Q>(), build_tom(TomLambda::Variable)] {
        let k = res.k();
        for _ in 0..10 {
            let w = WeylElement::random(k, &mut rng);
            assert!(isotropic(&res, &apply_weyl(res.m1(), &w).unwrap()), "{w}");
        }
        let lambdas: Vec<Q> = (1..=k as i64).map(Q::from_i64).collect();
        assert!(isotropic(&res, &torus_scale(res.m1(), &lambdas).unwrap()));
        let mut zero = lambdas.clone();
        zero[0] = Q::from_i64(0);
        assert!(matches!(torus_scale(res.m1(), &zero), Err(SpinorError::ZeroScale)));
    }
}

#[test]
fn weyl_permutes_spinor_columns() {
    let res = koszul_variables::<Q>();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let table = spinor_table(&res).unwrap();
    for _ in 0..10 {
        let w = WeylElement::random(3, &mut rng);
        let moved = res.with_m1(apply_weyl(res.m1(), &w).unwrap()).unwrap();
        for rec in &table.records {
            let image = w.act_on_set(&rec.set);
            let after = cramer_spinor(&moved, &image).unwrap();
            assert_eq!(after.sigma, rec.sigma, "{w} on {}", rec.set);
        }
    }
}

#[test]
fn torus_weights_of_spinors() {
    let res = koszul_variables::<Q>();
    let mu = [2, 3, 5].map(Q::from_i64);
    let lambdas: Vec<Q> = mu.iter().map(|m| m.mul_ref(m)).collect();
    let scaled = res.with_m1(torus_scale(res.m1(), &lambdas).unwrap()).unwrap();
    for set in enumerate_spinor_sets(3) {
        let before = cramer_spinor(&res, &set).unwrap().sigma;
        let after = cramer_spinor(&scaled, &set).unwrap().sigma;
        let mut w = Q::from_i64(1);
        for (i, m) in mu.iter().enumerate() {
            if set.contains(i + 1) {
                w *= m;
            } else {
                w /= m;
            }
        }
        assert_eq!(after, before.scale(&w).normalize_sign(), "{set}");
    }
}

#[test]
fn tangent_dimension_at_the_special_point() {
    for k in 3..=8 {
        assert_eq!(tangent_dim_vk(&m0::<Q>(k)).unwrap(), expected_tangent_dim(k), "k = {k}");
    }
    assert_eq!([3, 4, 5].map(expected_tangent_dim), [15, 26, 40]);
    let mut bad = m0::<Q>(3);
    bad.set(0, 3, Q::from_i64(1));
    assert!(matches!(tangent_dim_vk(&bad), Err(SpinorError::NotOnVariety)));
}

#[test]
fn odd_frames_are_unsupported() {
    assert!(matches!(sample_frame::<Q>(3, Component::Plus, 0), Err(SpinorError::Unsupported(_))));
}

fn hyperbolic_defect(frame: &ConstMatrix<Q>) -> ConstMatrix<Q> {
    let k = frame.cols() / 2;
    frame.mul(&ConstMatrix::hyperbolic(k)).unwrap().mul(&frame.transpose()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn frames_are_isotropic_and_split_by_parity(seed in any::<u64>(), half in 1usize..4, minus in any::<bool>()) {
        let k = 2 * half;
        let comp = if minus { Component::Minus } else { Component::Plus };
        let frame = sample_frame::<Q>(k, comp, seed).unwrap();
        prop_assert!(hyperbolic_defect(&frame).is_zero());
        let nonspinor: Vec<Q> = enumerate_nonspinor_sets(k).iter().map(|s| frame_minor(&frame, &s.columns())).collect();
        let spinor: Vec<Q> = enumerate_spinor_sets(k).iter().map(|s| spinor_minor(&frame, s)).collect();
        let (vanishing, other) = if minus { (&spinor, &nonspinor) } else { (&nonspinor, &spinor) };
        prop_assert!(vanishing.iter().all(|d| d.is_zero()));
        prop_assert!(other.iter().any(|d| !d.is_zero()));
    }

    #[test]
    fn weyl_action_is_a_bijection_on_spinor_sets(seed in any::<u64>(), k in 2usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = WeylElement::random(k, &mut rng);
        let mut images: Vec<_> = enumerate_spinor_sets(k).iter().map(|s| w.act_on_set(s)).collect();
        images.sort();
        prop_assert_eq!(images, enumerate_spinor_sets(k));
        prop_assert_eq!(w.compose(&WeylElement::identity(k)), w.clone());
    }
}
