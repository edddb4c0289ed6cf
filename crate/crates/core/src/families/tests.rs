use num_traits::Zero;

use super::*;
use crate::error::FamilyError;
use crate::field::{Field, Rational};
use crate::groebner::{syzygies, GbOptions, ModuleGB, ModuleOrder};
use crate::poly::PolyRing;

type Q = Rational;

fn p(ring: &std::sync::Arc<PolyRing>, s: &str) -> Polynomial<Q> {
    Polynomial::parse(ring, s)
}

#[test]
fn koszul_pattern_is_exact() {
    let res = koszul_variables::<Q>();
    let expected = PolyMatrix::parse(
        res.ring(),
        "[-x4, 0, 0, 0, x3, -x2; 0, -x4, 0, -x3, 0, x1; 0, 0, -x4, x2, -x1, 0; x1, x2, x3, 0, 0, 0]",
    );
    assert_eq!(res.m1(), &expected);
}

#[test]
fn koszul_top_wedges() {
    let res = koszul_variables::<Q>();
    let x = |i| Polynomial::<Q>::var(res.ring(), i);
    for (cols, v) in [([0, 1, 2], 3), ([0, 4, 5], 0)] {
        let w = res.m1().select_columns(&cols).unwrap().top_wedge().unwrap();
        let s = x(v).pow(2);
        let plus: Vec<_> = res.generators().iter().map(|l| &s * l).collect();
        let minus: Vec<_> = plus.iter().map(|q| -q).collect();
        assert!(w == plus || w == minus, "{cols:?}");
    }
}

#[test]
fn koszul_rejects_dependent_sequences() {
    let ring = PolyRing::standard(["x1", "x2", "x3", "x4"]);
    let f = ["x1", "x2", "x3", "x1*x2"].map(|s| p(&ring, s));
    assert!(matches!(build_koszul(&f), Err(FamilyError::NotRegularSequence { codim: 3 })));
    let g = ["x1", "x2", "x3", "x4 + 1"].map(|s| p(&ring, s));
    assert!(matches!(build_koszul(&g), Err(FamilyError::Invalid(_))));
}

#[test]
fn koszul_of_squares() {
    let ring = PolyRing::standard(["x1", "x2", "x3", "x4"]);
    let f = ["x1^2", "x2^2", "x3^2", "x4^2"].map(|s| p(&ring, s));
    let res = build_koszul(&f).unwrap();
    assert!(res.verify_structure().passed());
    assert!(res.l().mul(res.m1()).unwrap().is_zero());
}

#[test]
fn pfaffian_signs_annihilate_the_matrix() {
    let (ring, m, _) = generic_pfaffian_data::<Q>(2);
    let pf = signed_pfaffians(&m).unwrap();
    let row = PolyMatrix::from_rows(&ring, vec![pf]).unwrap();
    assert!(row.mul(&m).unwrap().is_zero());
}

#[test]
fn pfaffian_hypersurface_structure() {
    let res = generic_pfaffian_hypersurface::<Q>(1);
    assert_eq!(res.k(), 3);
    assert!(res.verify_structure().passed(), "{}", res.verify_structure());
    let res = generic_pfaffian_hypersurface::<Q>(2);
    assert_eq!(res.k(), 5);
    let report = res.verify_structure();
    assert!(report.passed(), "{report}");
    assert_eq!(res.generators().last().unwrap(), &Polynomial::named(res.ring(), "h"));
}

#[test]
fn pfaffian_hypersurface_errors() {
    let (ring, m, h) = generic_pfaffian_data::<Q>(1);
    let mut bad = m.clone();
    bad.set(0, 1, Polynomial::one(&ring));
    assert!(matches!(build_pfaffian_hypersurface(&bad, &h), Err(FamilyError::NotSkew)));
    assert!(matches!(build_pfaffian_hypersurface(&m, &Polynomial::one(&ring)), Err(FamilyError::Invalid(_))));
    let inside = Polynomial::named(&ring, "m1_2");
    assert!(matches!(
        build_pfaffian_hypersurface(&m, &inside),
        Err(FamilyError::WrongCodimension { expected: 4, found: 3 })
    ));
}

#[test]
fn tom_structure_in_both_modes() {
    for lambda in [TomLambda::Variable, TomLambda::Scalar(Q::from_i64(3))] {
        let tom = build_tom::<Q>(lambda.clone());
        assert_eq!(tom.k(), 8);
        let report = tom.verify_structure();
        assert!(report.passed(), "{lambda:?}: {report}");
    }
    let scalar = build_tom::<Q>(TomLambda::Scalar(Q::from_i64(1)));
    assert_eq!(scalar.ring().nvars(), 9);
    assert_eq!(scalar.d1(), [2; 9]);
    assert_eq!(scalar.alpha(), 6);
    let weighted = build_tom::<Q>(TomLambda::Variable);
    assert_eq!(weighted.d1(), [4, 4, 4, 3, 3, 4, 4, 4, 3]);
}

#[test]
fn tom_syzygies_span_the_syzygy_module() {
    let tom = build_tom::<Q>(TomLambda::Variable);
    let syz = syzygies(tom.l(), GbOptions::default()).unwrap();
    let displayed = ModuleGB::columns(tom.m1(), ModuleOrder::Pot, GbOptions::default()).unwrap();
    let computed = ModuleGB::columns(&syz, ModuleOrder::Pot, GbOptions::default()).unwrap();
    for j in 0..syz.cols() {
        assert!(displayed.contains(&syz.column(j)), "computed syzygy {j}");
    }
    for j in 0..tom.m1().cols() {
        assert!(computed.contains(&tom.m1().column(j)), "displayed column {j}");
    }
}

#[test]
fn tom_points_lie_on_the_variety() {
    for lambda in [TomLambda::Variable, TomLambda::Scalar(Q::from_i64(-2))] {
        let tom = build_tom::<Q>(lambda.clone());
        let pts = tom_points(&lambda, 12, 4);
        assert_eq!(pts.len(), 12);
        for pt in &pts {
            assert_eq!(pt.len(), tom.ring().nvars());
            for l in tom.generators() {
                assert!(l.evaluate(pt).unwrap().is_zero());
            }
        }
        let profile = tom.rank_drop_profile(&pts).unwrap();
        assert!(profile.within_bound, "{profile:?}");
    }
}

#[test]
fn koszul_points_are_distinct() {
    let ring = PolyRing::standard(["x1", "x2", "x3", "x4", "x5", "x6"]);
    let res = koszul_on::<Q>(&ring, &[0, 1, 2, 3]);
    let pts = koszul_points::<Q>(6, &[0, 1, 2, 3], 20, 0);
    assert_eq!(pts.len(), 20);
    for (i, a) in pts.iter().enumerate() {
        assert!(pts[..i].iter().all(|b| b != a));
    }
    let profile = res.rank_drop_profile(&pts).unwrap();
    assert_eq!(profile.ranks, vec![0; 20]);
}

#[test]
fn rolling_factors_default_instance() {
    let rf = rolling_default::<Q>(0).unwrap();
    assert_eq!(rf.raw.betti(), [1, 9, 16, 9, 1]);
    assert_eq!(rf.ideal.generators().len(), 9);
    let report = rf.symmetrized.resolution.verify_structure();
    assert!(report.passed(), "{report}");
}

#[test]
fn rolling_factors_identity_is_checked() {
    let (a, m, mut n) = rolling_default_data::<Q>();
    n.swap(0, 1);
    let r = build_rolling_factors(&a, &m, &n, ResolutionOptions::default(), 0);
    assert!(matches!(r, Err(FamilyError::IdentityFails)));
}

#[test]
fn ogr24_baby_case() {
    let o = build_ogr24::<Q>();
    let gb = o.i_w.groebner_basis().unwrap();
    let [n1, n2] = &o.nonspinors;
    assert!(gb.contains(&(&o.delta1 * n1)));
    assert!(gb.contains(&(&o.delta2 * n2)));
    let sq = o.square_relation();
    assert!(gb.contains(&(&o.delta1 * &sq)));
    assert!(!gb.contains(&sq));
    assert!(o.colon.contains(n1).unwrap());
    assert!(!o.i_w.contains(n1).unwrap());
}

#[test]
fn family_spec_dispatch() {
    let fam = FamilySpec::<Q>::TomExtrasymmetric(TomLambda::Variable).build(ResolutionOptions::default(), 0).unwrap();
    assert_eq!(fam.resolution().unwrap().k(), 8);
    let baby = FamilySpec::<Q>::Ogr24Baby.build(ResolutionOptions::default(), 0).unwrap();
    assert!(baby.resolution().is_none());
    let zero = FamilySpec::<Q>::TomExtrasymmetric(TomLambda::Scalar(Q::from_i64(0)));
    assert!(zero.build(ResolutionOptions::default(), 0).is_err());
}
