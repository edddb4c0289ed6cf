use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use codim4_core::families::{
    build_koszul, build_ogr24, build_tom, generic_pfaffian_hypersurface, rolling_default, TomLambda,
};
use codim4_core::groebner::{minimal_resolution, GbOptions, Ideal, ModuleGB, ModuleOrder, ResolutionOptions};
use codim4_core::resolution::symmetrize;
use codim4_core::spinhom::{
    conjecture_check, enumerate_spinor_sets, expected_tangent_dim, m0, spinor_table_of, tangent_dim_vk, SpinorClass,
    SpinorTable,
};
use codim4_core::{PolyRing, QGorResolution, QMatrix, QPoly, Rational, ResolutionError};

use crate::document::{self, Document};
use crate::error::CliError;
use crate::report::CommandReport;

/// Settings shared by every command.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub seed: u64,
    pub gb: GbOptions,
}

pub fn load(path: &str) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_string(), source })?;
    document::parse(&text).map_err(|source| CliError::Parse { path: path.to_string(), source })
}

/// `L`, `M1` and an optional form `Q` from a document.
pub fn resolution_of(doc: &Document) -> Result<QGorResolution, CliError> {
    let (Some(l), Some(m1)) = (doc.matrix("L"), doc.matrix("M1")) else {
        return Err(CliError::Usage("a resolution document needs matrices `L` and `M1`".into()));
    };
    let standard = QGorResolution::standard(l.clone(), m1.clone())?;
    match doc.matrix("Q") {
        None => Ok(standard),
        Some(q) => {
            let q = q.to_const().ok_or_else(|| CliError::Usage("`Q` must have constant entries".into()))?;
            Ok(QGorResolution::from_parts(
                l.clone(),
                m1.clone(),
                q,
                standard.d1().to_vec(),
                standard.d2().to_vec(),
                standard.alpha(),
            )?)
        }
    }
}

fn resolution_document(res: &QGorResolution) -> String {
    Document::new(res.ring()).with_matrix("L", res.l().clone()).with_matrix("M1", res.m1().clone()).to_string()
}

fn ideal_of(doc: &Document, name: Option<&str>) -> Result<(String, Ideal<Rational>), CliError> {
    let (name, gens): (String, Vec<QPoly>) = match name {
        Some(n) => {
            let g = doc.ideal(n).ok_or_else(|| CliError::Usage(format!("no ideal named `{n}`")))?;
            (n.to_string(), g.to_vec())
        }
        None => match doc.first_ideal() {
            Some((n, g)) => (n.to_string(), g.to_vec()),
            None => match doc.matrix("L") {
                Some(l) => ("L".to_string(), l.row(0).to_vec()),
                None => return Err(CliError::Usage("the document defines no ideal".into())),
            },
        },
    };
    Ok((name, Ideal::new(&doc.ring, gens)))
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

pub fn resolve(doc: &Document, ideal: Option<&str>, order: ModuleOrder, s: Settings) -> Result<CommandReport, CliError> {
    let (name, ideal) = ideal_of(doc, ideal)?;
    let res = minimal_resolution(&ideal, doc.ring.nvars(), ResolutionOptions { order, gb: s.gb })?;
    let mut r = CommandReport::new(format!("resolve {name}"));
    r.check("complex", res.is_complex(), "consecutive differentials compose to zero");
    r.check("minimal", !res.has_unit_entries(), "no unit entries");
    r.value("betti", res.betti());
    r.value("shifts", res.shifts());
    Ok(r)
}

pub fn symmetrize_cmd(doc: &Document, ideal: Option<&str>, s: Settings) -> Result<CommandReport, CliError> {
    let (name, ideal) = ideal_of(doc, ideal)?;
    let raw = minimal_resolution(&ideal, 4, ResolutionOptions { order: ModuleOrder::Pot, gb: s.gb })?;
    let mut r = CommandReport::new(format!("symmetrize {name}"));
    r.value("betti", raw.betti());
    let sym = symmetrize(&raw, s.seed)?;
    r.absorb(&sym.resolution.verify_structure());
    r.value("alpha", sym.resolution.alpha());
    r.value("p4_scale", sym.p4_scale.to_string());
    r.value("form", (0..sym.q.rows()).map(|i| strings(sym.q.row(i))).collect::<Vec<_>>());
    r.document = Some(resolution_document(&sym.resolution));
    Ok(r)
}

pub fn verify(doc: &Document, s: Settings) -> Result<CommandReport, CliError> {
    let res = resolution_of(doc)?;
    let mut r = CommandReport::new("verify");
    r.absorb(&res.verify_structure());
    r.absorb(&res.rank_sequence(s.seed).report);
    r.value("k", res.k());
    r.value("alpha", res.alpha());
    r.value("d1", res.d1());
    r.value("d2", res.d2());
    Ok(r)
}

fn table_for(res: &QGorResolution, subsets: Option<usize>, seed: u64) -> Result<SpinorTable<Rational>, CliError> {
    let mut sets = enumerate_spinor_sets(res.k());
    if let Some(n) = subsets {
        sets.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        sets.truncate(n);
        sets.sort();
    }
    Ok(spinor_table_of(res, &sets)?)
}

pub fn spinors(
    doc: &Document,
    table: bool,
    census: bool,
    subsets: Option<usize>,
    s: Settings,
) -> Result<CommandReport, CliError> {
    let res = resolution_of(doc)?;
    let t = table_for(&res, subsets, s.seed)?;
    let mut r = CommandReport::new("spinors");
    r.check("spinors extracted", true, format!("{} spinor sets for k = {}", t.records.len(), res.k()));
    if census || !table {
        r.value(
            "census",
            serde_json::json!({
                "zero": t.census.zero,
                "monomial_times_relation": t.census.monomial_times_relation,
                "other": t.census.other,
            }),
        );
    }
    if table {
        let mut rows = Vec::new();
        for rec in &t.records {
            let pivot = rec.pivot.map(|p| p + 1);
            let factor = match &rec.class {
                SpinorClass::MonomialTimesRelation { index, monomial } => format!(" = {monomial} * L{index}"),
                _ => String::new(),
            };
            let pivot_text = pivot.map_or_else(|| "-".to_string(), |p| format!("L{p}"));
            let scale = if rec.scale == Rational::from_integer(1.into()) { String::new() } else { format!(" scale {}", rec.scale) };
            r.line(format!(
                "{} {} sign {:+}{scale} pivot {}: sigma = {}{}",
                rec.set,
                rec.class.name(),
                rec.sign,
                pivot_text,
                rec.sigma,
                factor
            ));
            rows.push(serde_json::json!({
                "set": rec.set.to_string(),
                "class": rec.class.name(),
                "sigma": rec.sigma.to_string(),
                "pivot": pivot,
                "sign": rec.sign,
                "scale": rec.scale.to_string(),
            }));
        }
        r.json_value("table", rows);
    }
    Ok(r)
}

pub fn conjecture(doc: &Document, subsets: Option<usize>, s: Settings) -> Result<CommandReport, CliError> {
    let res = resolution_of(doc)?;
    let t = table_for(&res, subsets, s.seed)?;
    let rep = conjecture_check(&res, &t, s.gb)?;
    let bad = rep.counterexamples();
    let mut r = CommandReport::new("conjecture");
    r.check(
        "sigma_J in I for every nonzero spinor",
        bad.is_empty(),
        format!("{} nonzero spinors tested, {} outside I", rep.verdicts.len(), bad.len()),
    );
    r.value("counterexamples", strings(&bad));
    Ok(r)
}

pub fn exactness(doc: &Document, subsets: usize, s: Settings) -> Result<CommandReport, CliError> {
    let res = resolution_of(doc)?;
    let mut r = CommandReport::new("exactness");
    match res.exactness_check_with(subsets, s.seed, s.gb) {
        Ok(ex) => {
            r.absorb(&ex.report);
            r.check("exact", ex.exact, "");
            r.value("codim_l", ex.codim_l);
            r.value("codim_minors", ex.codim_minors);
            r.value("subsets", strings(&ex.subsets));
        }
        Err(ResolutionError::Inconclusive(msg)) => {
            r.absorb(&res.rank_sequence(s.seed).report);
            r.check("codim of spinor wedge ideal >= 4", false, msg);
        }
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}

pub fn tangent(k: usize) -> Result<CommandReport, CliError> {
    if !(1..=16).contains(&k) {
        return Err(CliError::Usage(format!("--k must lie in 1..=16, got {k}")));
    }
    let dim = tangent_dim_vk(&m0::<Rational>(k))?;
    let expected = expected_tangent_dim(k);
    let mut r = CommandReport::new(format!("tangent --k {k}"));
    r.check("tangent dimension at M0 = (3k^2+k)/2", dim == expected, format!("computed {dim}, formula {expected}"));
    r.value("tangent_dim", dim);
    Ok(r)
}

#[derive(Clone, Debug)]
pub enum FamilyChoice {
    Koszul { degrees: Vec<u32> },
    Pfh { l: usize },
    Tom { lambda: Option<String> },
    Rolling,
    Ogr24,
}

pub fn family(choice: &FamilyChoice, s: Settings) -> Result<CommandReport, CliError> {
    match choice {
        FamilyChoice::Koszul { degrees } => {
            let [a, b, c, d] = degrees.as_slice() else {
                return Err(CliError::Usage("--degrees takes four comma-separated exponents".into()));
            };
            let ring = PolyRing::standard(["x1", "x2", "x3", "x4"]);
            let f: [QPoly; 4] = std::array::from_fn(|i| QPoly::var(&ring, i).pow([*a, *b, *c, *d][i]));
            finish_resolution("family koszul", build_koszul(&f)?)
        }
        FamilyChoice::Pfh { l } => {
            if !(1..=3).contains(l) {
                return Err(CliError::Usage(format!("--l must lie in 1..=3, got {l}")));
            }
            finish_resolution("family pfh", generic_pfaffian_hypersurface(*l))
        }
        FamilyChoice::Tom { lambda } => {
            let mode = match lambda {
                None => TomLambda::Variable,
                Some(text) => {
                    let v = Rational::from_str(text)
                        .map_err(|_| CliError::Usage(format!("--lambda expects a rational number, got `{text}`")))?;
                    if v == Rational::from_integer(0.into()) {
                        return Err(CliError::Usage("--lambda must be nonzero".into()));
                    }
                    TomLambda::Scalar(v)
                }
            };
            finish_resolution("family tom", build_tom(mode))
        }
        FamilyChoice::Rolling => {
            let rf = rolling_default::<Rational>(s.seed)?;
            let mut r = finish_resolution("family rolling", rf.symmetrized.resolution.clone())?;
            r.value("betti", rf.raw.betti());
            let doc = Document::new(rf.ideal.ring())
                .with_ideal("I", rf.ideal.generators().to_vec())
                .with_matrix("L", rf.symmetrized.resolution.l().clone())
                .with_matrix("M1", rf.symmetrized.resolution.m1().clone());
            r.document = Some(doc.to_string());
            Ok(r)
        }
        FamilyChoice::Ogr24 => {
            let o = build_ogr24::<Rational>();
            let gb = o.i_w.groebner_basis_with(s.gb)?;
            let [n1, n2] = &o.nonspinors;
            let sq = o.square_relation();
            let mut r = CommandReport::new("family ogr24");
            r.check("Delta1*(d*x - b*z) in I_W", gb.contains(&(&o.delta1 * n1)), "");
            r.check("Delta2*(a*t - c*y) in I_W", gb.contains(&(&o.delta2 * n2)), "");
            r.check("Delta1*(Delta1*Delta2 - (a*z - c*x)^2) in I_W", gb.contains(&(&o.delta1 * &sq)), "");
            r.check("Delta1*Delta2 - (a*z - c*x)^2 not in I_W", !gb.contains(&sq), "");
            r.check("d*x - b*z in [I_W : Delta1]", o.colon.groebner_basis_with(s.gb)?.contains(n1), "");
            let doc = Document::new(&o.ring)
                .with_ideal("IW", o.i_w.generators().to_vec())
                .with_ideal("Deltas", vec![o.delta1.clone(), o.delta2.clone()])
                .with_ideal("Nonspinors", o.nonspinors.to_vec())
                .with_ideal("Colon", o.colon.generators().to_vec());
            r.document = Some(doc.to_string());
            Ok(r)
        }
    }
}

fn finish_resolution(command: &str, res: QGorResolution) -> Result<CommandReport, CliError> {
    let mut r = CommandReport::new(command);
    r.absorb(&res.verify_structure());
    r.value("k", res.k());
    r.value("alpha", res.alpha());
    r.document = Some(resolution_document(&res));
    Ok(r)
}

pub fn lift(doc: &Document, i: usize, j: usize, s: Settings) -> Result<CommandReport, CliError> {
    let res = resolution_of(doc)?;
    let gb = ModuleGB::columns(res.m1(), ModuleOrder::Pot, s.gb)?;
    let v = res.koszul_lift_with(&gb, i, j)?;
    let col = QMatrix::from_fn(res.ring(), v.len(), 1, |r, _| v[r].clone());
    let image = res.m1().mul(&col)?.column(0);
    let mut r = CommandReport::new(format!("lift --i {i} --j {j}"));
    r.check(format!("M1*v = e{i}*L{j} - e{j}*L{i}"), image == res.koszul_target(i, j)?, "");
    r.value("v", strings(&v));
    Ok(r)
}
