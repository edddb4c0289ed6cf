//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any non-quarantined criterion fails.
//!
//! Set `CODIM4_CONJECTURE_STRICT=1` to count conjecture counterexamples as
//! failures instead of findings.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use codim4_core::families::*;
use codim4_core::groebner::{minimal_resolution, GbOptions, Ideal, ModuleOrder, ResolutionOptions};
use codim4_core::resolution::{symmetrize, GorResolution};
use codim4_core::spinhom::*;
use codim4_core::{ConstMatrix, Field, PolyMatrix, PolyRing, QGorResolution, QPoly, Rational, ResolutionError};

type Q = Rational;
type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn wedge_equals_up_to_sign(w: &[QPoly], scale: &QPoly, l: &[QPoly]) -> Option<i8> {
    let plus: Vec<QPoly> = l.iter().map(|g| scale * g).collect();
    if w == plus.as_slice() {
        return Some(1);
    }
    let minus: Vec<QPoly> = plus.iter().map(|p| -p).collect();
    (w == minus.as_slice()).then_some(-1)
}

fn isotropic(res: &QGorResolution, m1: &PolyMatrix<Q>) -> bool {
    let q = PolyMatrix::from_const(res.ring(), res.q());
    m1.mul(&q).and_then(|mq| mq.mul(&m1.transpose())).map(|p| p.is_zero()).unwrap_or(false)
}

fn koszul_family() -> Outcome {
    let res = koszul_variables::<Q>();
    let report = res.verify_structure();
    ensure!(report.get("complex L·M1 = 0").is_some_and(|c| c.passed), "L·M1 != 0");
    ensure!(report.get("isotropy M1·Q·tM1 = 0").is_some_and(|c| c.passed), "M1 not isotropic");
    let mut signs = Vec::new();
    for (cols, v) in [([0, 1, 2], 3), ([0, 4, 5], 0)] {
        let w = ok(ok(res.m1().select_columns(&cols))?.top_wedge())?;
        let s = QPoly::var(res.ring(), v).pow(2);
        let sign = wedge_equals_up_to_sign(&w, &s, res.generators()).ok_or(format!("wedge of columns {cols:?}"))?;
        signs.push(sign);
    }
    Ok(format!("both top wedges match, signs {signs:?}"))
}

fn tom_family() -> Outcome {
    let tom = build_tom::<Q>(TomLambda::Variable);
    ensure!(tom.l().mul(tom.m1()).map(|p| p.is_zero()).unwrap_or(false), "L·M1 != 0");
    ensure!(isotropic(&tom, tom.m1()), "M1 not isotropic");
    let a = QPoly::named(tom.ring(), "a");
    let mut signs = Vec::new();
    for (cols, pf) in TOM_WEDGES {
        let members: Vec<usize> = cols.iter().copied().filter(|&c| c <= 8).collect();
        let set = ok(SpinorSet::new(8, &members))?;
        let w = ok(ok(spinor_submatrix(tom.m1(), &set))?.top_wedge())?;
        let s = (&a * &QPoly::parse(tom.ring(), pf)).pow(2);
        signs.push(wedge_equals_up_to_sign(&w, &s, tom.generators()).ok_or(format!("wedge {set}"))?);
    }
    ensure!(signs.iter().all(|&s| s == signs[0]), "signs not global: {signs:?}");
    Ok(format!("five wedge identities with global sign {:+}", signs[0]))
}

fn tom_census() -> Outcome {
    let tom = build_tom::<Q>(TomLambda::Variable);
    let full = ok(spinor_table(&tom))?;
    ensure!(full.records.len() == 128, "{} spinor sets", full.records.len());
    let c = full.census;
    ensure!((c.zero, c.monomial_times_relation, c.other) == (14, 62, 52), "census {c:?}");
    let mut sets = enumerate_spinor_sets(8);
    sets.shuffle(&mut ChaCha8Rng::seed_from_u64(0));
    sets.truncate(16);
    let t = Instant::now();
    let smoke = ok(spinor_table_of(&tom, &sets))?;
    let smoke_time = t.elapsed();
    for rec in &smoke.records {
        let reference = full.records.iter().find(|r| r.set == rec.set).expect("full table covers every set");
        ensure!(reference == rec, "smoke record {} differs", rec.set);
    }
    Ok(format!("14 zero, 62 monomial times relation, 52 other; 16-set smoke agrees ({smoke_time:.2?})"))
}

fn pipeline() -> Outcome {
    let ring = PolyRing::standard(["x1", "x2", "x3", "x4"]);
    let ideal = Ideal::new(&ring, (0..4).map(|i| QPoly::var(&ring, i)));
    let raw = ok(minimal_resolution(&ideal, 4, ResolutionOptions::default()))?;
    ensure!(raw.betti() == [1, 4, 6, 4, 1], "betti {:?}", raw.betti());
    let sym = ok(symmetrize(&raw, 0))?;
    let j = ConstMatrix::<Q>::hyperbolic(3);
    let congruent = ok(sym.g2.mul(&j).and_then(|gj| gj.mul(&sym.g2.transpose())))? == sym.q;
    ensure!(congruent, "G·J·tG != Q");
    let report = sym.resolution.verify_structure();
    ensure!(report.passed(), "{report}");
    let ex = ok(sym.resolution.exactness_check(4, 0))?;
    ensure!(ex.exact, "{}", ex.report);
    Ok("Betti (1,4,6,4,1), Q congruent to J, standard form verified and exact".into())
}

fn tom_ideal() -> Outcome {
    let tom = build_tom::<Q>(TomLambda::Variable);
    let ideal = Ideal::new(tom.ring(), tom.generators().iter().cloned());
    let gb = GbOptions { limit: 5_000_000 };
    let raw = ok(minimal_resolution(&ideal, 4, ResolutionOptions { order: ModuleOrder::Top, gb }))?;
    ensure!(raw.betti() == [1, 9, 16, 9, 1], "betti {:?}", raw.betti());
    let codim = ok(ideal.codimension())?;
    ensure!(codim == 4, "codim {codim}");
    Ok(format!("Betti (1,9,16,9,1), codim 4 in {} variables", tom.ring().nvars()))
}

fn ogr24() -> Outcome {
    let o = build_ogr24::<Q>();
    let gb = ok(o.i_w.groebner_basis())?;
    let sq = o.square_relation();
    ensure!(gb.contains(&(&o.delta1 * &o.nonspinors[0])), "Delta1·(dx - bz) not in I_W");
    ensure!(gb.contains(&(&o.delta1 * &sq)), "Delta1·(Delta1·Delta2 - (az - cx)^2) not in I_W");
    ensure!(!gb.contains(&sq), "Delta1·Delta2 - (az - cx)^2 lies in I_W");
    ensure!(ok(o.colon.contains(&o.nonspinors[0]))?, "dx - bz not in the colon ideal");
    Ok("three memberships and one non-membership".into())
}

fn tangent() -> Outcome {
    let mut dims = Vec::new();
    for (k, expected) in (3..=8).zip([15, 26, 40, 57, 77, 100]) {
        let d = ok(tangent_dim_vk(&m0::<Q>(k)))?;
        ensure!(d == expected, "k = {k}: computed {d}, formula {expected}");
        dims.push(d);
    }
    Ok(format!("dimensions {dims:?} for k = 3..8"))
}

fn weyl_suite() -> Outcome {
    for k in 4..=6 {
        let r = verify_coxeter(k);
        ensure!(r.passed(), "k = {k}: {r}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for res in [koszul_variables::<Q>(), build_tom(TomLambda::Variable)] {
        let k = res.k();
        for n in 0..100 {
            let w = WeylElement::random(k, &mut rng);
            ensure!(isotropic(&res, &ok(apply_weyl(res.m1(), &w))?), "k = {k}, element {n}: {w}");
            let lambdas: Vec<Q> = (0..k).map(|_| Q::from_i64(rng.gen_range(1..50) * [1, -1][rng.gen_range(0..2)])).collect();
            ensure!(isotropic(&res, &ok(torus_scale(res.m1(), &lambdas))?), "k = {k}, torus element {n}");
        }
    }
    Ok("Coxeter relations for k = 4, 5, 6; 100 Weyl and 100 torus elements on each example".into())
}

fn pfaffian(m: &PolyMatrix<Q>, idx: &[usize]) -> QPoly {
    if idx.is_empty() {
        return QPoly::one(m.ring());
    }
    let mut total = QPoly::zero(m.ring());
    for j in 1..idx.len() {
        let rest: Vec<usize> = idx.iter().enumerate().filter(|&(t, _)| t != 0 && t != j).map(|(_, &v)| v).collect();
        let term = m.get(idx[0], idx[j]) * &pfaffian(m, &rest);
        total = if j % 2 == 1 { &total + &term } else { &total - &term };
    }
    total
}

fn pfaffian_hypersurface() -> Outcome {
    let l = 2;
    let (_, m, h) = generic_pfaffian_data::<Q>(l);
    let res = generic_pfaffian_hypersurface::<Q>(l);
    let m = PolyMatrix::from_fn(res.ring(), m.rows(), m.cols(), |i, j| QPoly::parse(res.ring(), &m.get(i, j).to_string()));
    let h = QPoly::parse(res.ring(), &h.to_string());
    let k = 2 * l + 1;
    for set in enumerate_spinor_sets(k) {
        let rec = ok(cramer_spinor(&res, &set))?;
        let complement: Vec<usize> = (0..k).filter(|&j| !set.contains(j + 1)).collect();
        let i = complement.len() / 2;
        let expected = (&h.pow((l - i) as u32) * &pfaffian(&m, &complement)).normalize_sign();
        ensure!(rec.sigma == expected, "{set}: sigma = {}, expected {expected}", rec.sigma);
    }
    Ok("all 16 spinors equal h^(2-i) times a diagonal Pfaffian; all-A spinor is h^2".into())
}

fn conjecture() -> Outcome {
    let mut cases: Vec<(String, QGorResolution)> = vec![
        ("koszul".into(), koszul_variables()),
        ("pfh l=1".into(), generic_pfaffian_hypersurface(1)),
        ("pfh l=2".into(), generic_pfaffian_hypersurface(2)),
        ("tom".into(), build_tom(TomLambda::Variable)),
        ("rolling".into(), ok(rolling_default::<Q>(0))?.symmetrized.resolution),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let ring = PolyRing::standard(["x1", "x2", "x3", "x4"]);
    for _ in 0..6 {
        let e: [u32; 4] = std::array::from_fn(|_| rng.gen_range(1..4));
        let f: [QPoly; 4] = std::array::from_fn(|i| QPoly::var(&ring, i).pow(e[i]));
        cases.push((format!("koszul {e:?}"), ok(build_koszul(&f))?));
    }
    for _ in 0..2 {
        let v = Q::from_i64(rng.gen_range(1..20) * [1, -1][rng.gen_range(0..2)]);
        cases.push((format!("tom lam={v}"), build_tom(TomLambda::Scalar(v))));
    }
    let mut tested = 0;
    let mut findings = Vec::new();
    for (name, res) in &cases {
        let table = ok(spinor_table(res))?;
        let report = ok(conjecture_check(res, &table, GbOptions::default()))?;
        tested += report.verdicts.len();
        for s in report.counterexamples() {
            findings.push(format!("{name} {s}"));
        }
    }
    ensure!(findings.is_empty(), "sigma_J outside I for {}", findings.join(", "));
    Ok(format!("{tested} nonzero spinors over {} examples lie in their ideals", cases.len()))
}

fn exactness() -> Outcome {
    let mut builders: Vec<(&str, QGorResolution)> = vec![
        ("koszul", koszul_variables()),
        ("pfh l=1", generic_pfaffian_hypersurface(1)),
        ("pfh l=2", generic_pfaffian_hypersurface(2)),
        ("tom", build_tom(TomLambda::Variable)),
        ("tom lam=3", build_tom(TomLambda::Scalar(Q::from_i64(3)))),
        ("rolling", ok(rolling_default::<Q>(0))?.symmetrized.resolution),
    ];
    let ring = PolyRing::standard(["x1", "x2", "x3", "x4"]);
    let squares: [QPoly; 4] = std::array::from_fn(|i| QPoly::var(&ring, i).pow(2));
    builders.push(("koszul squares", ok(build_koszul(&squares))?));
    for (name, res) in &builders {
        let ex = res.exactness_check(4, 0).map_err(|e| format!("{name}: {e}"))?;
        ensure!(ex.exact, "{name}: {}", ex.report);
        let ranks = res.rank_sequence(0).ranks;
        ensure!(ranks == [1, res.k(), res.k(), 1], "{name}: ranks {ranks:?}");
        ensure!(ex.subsets.len() <= 4, "{name}: {} subsets", ex.subsets.len());
    }
    let x = |i| QPoly::var(&ring, i);
    let (l, m1) = ok(koszul_matrices(&[x(0), x(1), x(2), &x(0) * &x(1)]))?;
    let degenerate = ok(GorResolution::standard(l, m1))?;
    let ex = ok(degenerate.exactness_check(4, 0))?;
    let failures: Vec<String> = ex.report.failures().map(|c| c.name.clone()).collect();
    ensure!(!ex.exact && failures == ["codim I(phi1) = 4"], "degenerate input: {failures:?}");
    Ok(format!("{} builders exact, codimension 3 input fails at the dimension check", builders.len()))
}

fn rank_drop() -> Outcome {
    let ring = PolyRing::standard(["x1", "x2", "x3", "x4", "x5", "x6"]);
    let koszul = koszul_on::<Q>(&ring, &[0, 1, 2, 3]);
    let kp = ok(koszul.rank_drop_profile(&koszul_points(6, &[0, 1, 2, 3], 20, 0)))?;
    ensure!(kp.within_bound && kp.ranks.len() == 20, "koszul {kp:?}");
    let mut maxima = vec![kp.ranks.iter().max().copied().unwrap_or(0)];
    for lambda in [TomLambda::Variable, TomLambda::Scalar(Q::from_i64(5))] {
        let tom = build_tom::<Q>(lambda.clone());
        let pts = tom_points(&lambda, 20, 1);
        for p in &pts {
            ensure!(tom.generators().iter().all(|g| g.evaluate(p).is_ok_and(|v| v.is_zero())), "point off V(I)");
        }
        let tp = ok(tom.rank_drop_profile(&pts))?;
        ensure!(tp.within_bound && tp.ranks.len() == 20, "tom {tp:?}");
        maxima.push(tp.ranks.iter().max().copied().unwrap_or(0));
    }
    match koszul.rank_drop_profile(&[vec![Q::from_i64(1); 6]]) {
        Err(ResolutionError::PointNotOnVariety(0)) => {}
        other => return Err(format!("point off V(I) accepted: {other:?}")),
    }
    Ok(format!("max rank on V(I): koszul {}, tom {}, tom lam=5 {} (bounds 0, 5, 5)", maxima[0], maxima[1], maxima[2]))
}

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
    quarantined: bool,
}

fn main() -> ExitCode {
    let strict = std::env::var("CODIM4_CONJECTURE_STRICT").is_ok_and(|v| v == "1");
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { name: "Koszul family", budget: secs(1), run: koszul_family, quarantined: false },
        Criterion { name: "Tom family", budget: secs(60), run: tom_family, quarantined: false },
        Criterion { name: "Tom spinor census", budget: secs(1800), run: tom_census, quarantined: false },
        Criterion { name: "Groebner pipeline", budget: secs(10), run: pipeline, quarantined: false },
        Criterion { name: "Tom ideal", budget: secs(600), run: tom_ideal, quarantined: false },
        Criterion { name: "OGr(2,4) baby case", budget: secs(1), run: ogr24, quarantined: false },
        Criterion { name: "tangent dimension", budget: secs(1), run: tangent, quarantined: false },
        Criterion { name: "D_k Weyl suite", budget: secs(30), run: weyl_suite, quarantined: false },
        Criterion { name: "Pfaffian hypersurface", budget: secs(60), run: pfaffian_hypersurface, quarantined: false },
        Criterion { name: "conjecture suite", budget: secs(1800), run: conjecture, quarantined: !strict },
        Criterion { name: "exactness criterion", budget: secs(300), run: exactness, quarantined: false },
        Criterion { name: "rank-drop profile", budget: secs(60), run: rank_drop, quarantined: false },
    ];
    let mut failed = 0;
    for (n, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => Err(format!("{detail}; over budget of {:?}", c.budget)),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {} ({elapsed:.2?}): {detail}", n + 1, c.name),
            Err(detail) if c.quarantined => {
                println!("criterion {:>2} FAIL {} ({elapsed:.2?}) [finding, quarantined]: {detail}", n + 1, c.name)
            }
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {} ({elapsed:.2?}): {detail}", n + 1, c.name);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
