use proptest::prelude::*;

use codim4_core::families::{build_koszul, build_tom, TomLambda};
use codim4_core::groebner::{minimal_resolution, GbOptions, Ideal, ModuleOrder, ResolutionOptions};
use codim4_core::resolution::symmetrize;
use codim4_core::spinhom::{conjecture_check, spinor_table};
use codim4_core::{PolyRing, QIdeal, QPoly};

fn resolve_and_standardize(ideal: &QIdeal, order: ModuleOrder, seed: u64) -> codim4_core::QGorResolution {
    let raw = minimal_resolution(ideal, 4, ResolutionOptions { order, gb: GbOptions::default() }).unwrap();
    assert!(raw.is_complex() && !raw.has_unit_entries());
    symmetrize(&raw, seed).unwrap().resolution
}

#[test]
fn complete_intersection_from_text() {
    let ring = PolyRing::standard(["x", "y", "z", "w"]);
    let gens = ["x^2 + y*z", "y^3 - w^3", "z^2 - x*w", "w^2 + x*y"].map(|s| QPoly::parse(&ring, s));
    let ideal = Ideal::new(&ring, gens);
    let res = resolve_and_standardize(&ideal, ModuleOrder::Pot, 0);
    assert_eq!(res.alpha(), 9);
    let report = res.verify_structure();
    assert!(report.passed(), "{report}");
    assert!(res.exactness_check(4, 0).unwrap().exact);
    let table = spinor_table(&res).unwrap();
    assert_eq!(table.records.len(), 4);
    assert!(conjecture_check(&res, &table, GbOptions::default()).unwrap().all_in_ideal());
}

#[test]
fn tom_resolved_from_its_generators() {
    let tom = build_tom(TomLambda::Variable);
    let ideal = Ideal::new(tom.ring(), tom.generators().iter().cloned());
    let res = resolve_and_standardize(&ideal, ModuleOrder::Top, 1);
    assert!(res.verify_structure().passed());
    let mut d1 = res.d1().to_vec();
    d1.sort();
    assert_eq!(d1, [3, 3, 3, 4, 4, 4, 4, 4, 4]);
    assert_eq!(res.alpha(), tom.alpha());
    assert!(res.exactness_check(4, 1).unwrap().exact);
    let census = spinor_table(&res).unwrap().census;
    assert_eq!(census.total(), 128);
    assert!(census.zero < 128);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn resolving_a_koszul_ideal_recovers_its_shape(e in prop::array::uniform4(1u32..3), seed in 0u64..100) {
        let ring = PolyRing::standard(["x1", "x2", "x3", "x4"]);
        let f: [QPoly; 4] = std::array::from_fn(|i| QPoly::var(&ring, i).pow(e[i]));
        let built = build_koszul(&f).unwrap();
        let res = resolve_and_standardize(&Ideal::new(&ring, f), ModuleOrder::Pot, seed);
        prop_assert!(res.verify_structure().passed());
        prop_assert_eq!(res.alpha(), built.alpha());
        let mut d2 = res.d2().to_vec();
        let mut expected = built.d2().to_vec();
        d2.sort();
        expected.sort();
        prop_assert_eq!(d2, expected);
    }
}
