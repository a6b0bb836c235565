//! One line per acceptance criterion. Exits nonzero when a criterion fails,
//! except for those listed in `KNOWN_RED`, which still print FAIL.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use common::{holomorphic, isometry, moved, normalized, normalized_tet, points, positive, unit};
use crh::complexes::golden::{self, same_tex, Rows};
use crh::complexes::{
    edge_cycles, edge_equations, figure_eight_dotted_scheme, figure_eight_fixture, figure_eight_scheme,
    picard_words_check, regular_params, symmetric_gluing_solver, whitehead_fixture, CornerConvention, HolonomyRep,
};
use crh::heisenberg::cocycle;
use crh::isometry::{
    check_unitary, classify, eval_word, matrix_in_ring, IsometryKind, Mat3, ProjIsometry, UnitaryCheck, Word,
};
use crh::scalars::{parse_scalar, Ring};
use crh::tetra::{
    cartan_tangents, face_invariants, faces_disjoint, params_from_normalized, params_from_points, special_tetrahedron,
    standard_tetrahedron, ts_from_params, whitehead_tetrahedron,
};
use crh::Cyclo;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRng, TestRunner};

/// Criteria expected to fail, with the reason printed next to them.
const KNOWN_RED: [(u8, &str); 1] = [(4, "two of the printed words do not evaluate to their targets")];

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn gold(rows: &Rows) -> ProjIsometry<Cyclo> {
    ProjIsometry::holomorphic(golden::matrix(rows))
}

fn env(pairs: &[(&str, &Rows)]) -> BTreeMap<String, ProjIsometry<Cyclo>> {
    pairs.iter().map(|(n, r)| (n.to_string(), gold(r))).collect()
}

fn word(w: &str, env: &BTreeMap<String, ProjIsometry<Cyclo>>) -> Result<ProjIsometry<Cyclo>, String> {
    eval_word(&Word::parse(w).map_err(|e| e.to_string())?, env).map_err(|e| e.to_string())
}

/// Projective equality; rebuilt generators carry an arbitrary scalar.
fn ratio(a: &ProjIsometry<Cyclo>, rows: &Rows) -> Option<Cyclo> {
    a.m.ratio_to(&golden::matrix(rows))
}

fn unit_ratio(a: &ProjIsometry<Cyclo>, rows: &Rows) -> Option<Cyclo> {
    a.m.ratio_to(&golden::matrix(rows)).filter(|l| l.abs2() == Cyclo::one())
}

/// M − rI.
fn shift(m: &Mat3<Cyclo>, r: i64) -> Mat3<Cyclo> {
    Mat3::from_fn(|i, j| if i == j { m.get(i, j).clone() - Cyclo::from_int(r) } else { m.get(i, j).clone() })
}

fn c(s: &str) -> Cyclo {
    parse_scalar(s).expect("constant parses")
}

fn criterion_1(fig8: &HolonomyRep) -> Outcome {
    for (name, rows) in [("G1", &golden::FIG8_G1), ("G2", &golden::FIG8_G2), ("G3", &golden::FIG8_G3)] {
        ratio(&fig8.derived[name], rows).ok_or(format!("derived {name} differs from the printed matrix"))?;
        let m = golden::matrix(rows);
        ensure(
            check_unitary(&m).map_err(|e| e.to_string())? == UnitaryCheck::Ok { lambda: Cyclo::one() },
            format!("{name} not unitary"),
        )?;
        ensure(m.det() == Cyclo::one(), format!("det {name} = {}", m.det()))?;
        ensure(matrix_in_ring(&gold(rows), Ring::Eisenstein), format!("{name} leaves Z[omega]"))?;
    }
    Ok("G1, G2, G3 rebuilt from the tetrahedra, unitary, det 1, entries in Z[omega]".into())
}

fn criterion_2() -> Outcome {
    let kind = |rows: &Rows| classify(&gold(rows)).map_err(|e| e.to_string());
    ensure(kind(&golden::FIG8_G1)?.kind == IsometryKind::Parabolic, "fig8 G1 not parabolic")?;
    ensure(kind(&golden::FIG8_G3)?.kind == IsometryKind::Parabolic, "fig8 G3 not parabolic")?;
    ensure(kind(&golden::FIG8_G2)?.kind.is_elliptic(), "fig8 G2 not elliptic")?;
    for (name, rows, trace) in [
        ("G1", &golden::WH_G1, "2 + i"),
        ("G3", &golden::WH_G3, "2 + i"),
        ("G2", &golden::WH_G2, "-1 - 2*i"),
        ("G4", &golden::WH_G4, "-1 - 2*i"),
    ] {
        let k = kind(rows)?;
        let m = golden::matrix(rows);
        ensure(m.trace() == c(trace), format!("whitehead {name} trace {}", m.trace()))?;
        if trace == "2 + i" {
            ensure(k.kind == IsometryKind::Loxodromic, format!("whitehead {name} is {:?}", k.kind))?;
        } else {
            ensure(k.kind.is_elliptic(), format!("whitehead {name} is {:?}", k.kind))?;
            ensure(
                m.pow(4).map_err(|e| e.to_string())?.scalar_value().is_some(),
                format!("whitehead {name}^4 not scalar"),
            )?;
        }
    }
    Ok("fig8 G1, G3 parabolic, G2 elliptic; whitehead G1, G3 loxodromic (trace 2+i), G2, G4 elliptic of order 4".into())
}

fn criterion_3(fig8: &HolonomyRep) -> Outcome {
    let e = env(&[("G1", &golden::FIG8_G1), ("G2", &golden::FIG8_G2), ("G3", &golden::FIG8_G3)]);
    let h1 = word("G1^-1 G3 G1^-1 G2 G3^-1 G1 G3^-1", &e)?;
    let h2 = word("G2^-1 G1", &e)?;
    let s1 = unit_ratio(&h1, &golden::FIG8_H1).ok_or("H1 differs from the printed matrix")?;
    unit_ratio(&h2, &golden::FIG8_H2).ok_or("H2 differs from the printed matrix")?;
    for (n, h) in [("H1", &h1), ("H2", &h2)] {
        ensure(classify(h).map_err(|e| e.to_string())?.kind == IsometryKind::Parabolic, format!("{n} not parabolic"))?;
    }
    let i = ProjIsometry::picard_i();
    ensure(i.compose(&gold(&golden::FIG8_H2)).compose(&i).m == golden::matrix(&golden::FIG8_G1), "I H2 I != G1")?;
    let cusp = fig8.cusps.first().ok_or("no cusp data")?;
    let expected = [(4, "2*sqrt3"), (1, "sqrt3"), (0, "4*sqrt3")];
    for (w, (abs2, t)) in cusp.words.iter().zip(expected) {
        let (z0, t0) = w.translation.as_ref().ok_or(format!("{} has no translation part", w.name))?;
        ensure(z0.abs2() == Cyclo::from_int(abs2) && *t0 == c(t), format!("{} translation ({z0}, {t0})", w.name))?;
    }
    ensure(
        cusp.faithful_window == Some(5) && cusp.faithful_counterexample.is_none(),
        "H1^a H2^b trivial in the window",
    )?;
    Ok(format!("H1 (scale {s1}), H2 match; I H2 I = G1; translations |z| 2, 1, 0 with t 2sqrt3, sqrt3, 4sqrt3; faithful for max(|a|,|b|) <= 5"))
}

fn criterion_4() -> Outcome {
    let r = picard_words_check().map_err(|e| e.to_string())?;
    let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
    ensure(failed.is_empty(), format!("failing: {}", failed.join(", ")))?;
    Ok("all word identities hold up to unit scalar".into())
}

fn criterion_5(wh: &HolonomyRep) -> Outcome {
    let pairs = [("G1", &golden::WH_G1), ("G2", &golden::WH_G2), ("G3", &golden::WH_G3), ("G4", &golden::WH_G4)];
    for (name, rows) in pairs {
        ratio(&wh.derived[name], rows).ok_or(format!("derived {name} differs from the printed matrix"))?;
        ensure(matrix_in_ring(&gold(rows), Ring::Gaussian), format!("{name} leaves Z[i]"))?;
    }
    let e = env(&pairs);
    for (w, rows, trace) in [("G3^-1 G1^-1", &golden::WH_H1, -1), ("G3 G1^-2 G3", &golden::WH_H1_PRIME, 3)] {
        let h = word(w, &e)?;
        unit_ratio(&h, rows).ok_or(format!("{w} differs from the printed matrix"))?;
        let g = gold(rows);
        ensure(g.m.trace() == Cyclo::from_int(trace), format!("trace of {w} is {}", g.m.trace()))?;
        let k = classify(&g).map_err(|e| e.to_string())?;
        ensure(k.discriminant == Cyclo::zero() && k.kind == IsometryKind::Parabolic, format!("{w} is {:?}", k.kind))?;
        // eigenvalues −1, −1, 1 and 1, 1, 1: the squarefree part of the
        // characteristic polynomial must not kill M
        let squarefree = if trace == -1 { shift(&g.m, -1).mul(&shift(&g.m, 1)) } else { shift(&g.m, 1) };
        let roots = if trace == -1 { vec![-1, 1] } else { vec![1] };
        ensure(roots.iter().all(|&r| shift(&g.m, r).det().is_zero()), format!("{w} has other eigenvalues"))?;
        ensure(!squarefree.0.iter().flatten().all(Cyclo::is_zero), format!("{w} is semisimple"))?;
    }
    Ok("G1..G4 match, entries in Z[i]; H1, H'1 match with traces -1 and 3, discriminant 0, parabolic".into())
}

fn criterion_6() -> Outcome {
    let std = params_from_points(&standard_tetrahedron()).map_err(|e| e.to_string())?;
    let wh = params_from_points(&whitehead_tetrahedron()).map_err(|e| e.to_string())?;
    let wbar = Cyclo::omega().conj();
    ensure(std.z == wbar && std.z_tilde == wbar, format!("standard z1 = {}, z~1 = {}", std.z, std.z_tilde))?;
    ensure(wh.z == Cyclo::i() && wh.z_tilde == Cyclo::i(), format!("whitehead z1 = {}, z~1 = {}", wh.z, wh.z_tilde))?;
    for (h, expected) in [(c("2 + sqrt3"), wbar), (c("1 + sqrt2"), Cyclo::i())] {
        let (a, b) = (h.clone() + Cyclo::i(), h - Cyclo::i());
        let q = (a.clone() * &a).checked_div(&(b.clone() * &b)).map_err(|e| e.to_string())?;
        ensure(q == expected, format!("height identity gives {q}"))?;
    }
    Ok("standard z1 = z~1 = conj(omega); whitehead z1 = z~1 = i; both height identities exact".into())
}

fn criterion_7() -> Outcome {
    let cycles = edge_cycles(&figure_eight_scheme(), &CornerConvention::PINNED).map_err(|e| e.to_string())?;
    ensure(cycles.len() == 4, format!("{} cycles", cycles.len()))?;
    for (k, cyc) in cycles.iter().enumerate() {
        ensure(same_tex(&cyc.latex(), golden::FIG8_EDGE_PRODUCTS[k]), format!("equation {k}: {}", cyc.latex()))?;
        ensure(same_tex(&cyc.simplified_latex(), golden::FIG8_EDGE_SIMPLIFIED[k]), format!("simplified {k}"))?;
    }
    let scheme = figure_eight_dotted_scheme();
    let w = Cyclo::zeta_pow(4);
    let p = regular_params(&w).map_err(|e| e.to_string())?;
    let params: BTreeMap<_, _> = scheme.tetrahedra.iter().map(|t| (t.letter.clone(), p.clone())).collect();
    for conv in [CornerConvention::PINNED, CornerConvention::FROM_FORMULAS] {
        for e in edge_equations(&scheme, &conv, &params).map_err(|e| e.to_string())? {
            ensure(e.holds(), format!("{} = {}", e.cycle, e.product))?;
        }
    }
    let solved = symmetric_gluing_solver().map_err(|e| e.to_string())?.solutions;
    ensure(solved == vec![w], format!("solver returned {solved:?}"))?;
    Ok("four equations reproduced; all products 1 at the regular solution; solver returns {e^(i pi/3)}".into())
}

fn property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let config = Config { cases: 1000, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config.clone(), TestRng::deterministic_rng(config.rng_algorithm));
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn criterion_8() -> Outcome {
    property("cocycle", points::<4>(), |p| {
        let r = cocycle(&p[0], &p[1], &p[2], &p[3]).unwrap();
        prop_assert!(r.abs() < 1e-9, "residue {}", r);
        Ok(())
    })?;
    property("cartan tangents", normalized(), |(z, t, s)| {
        let fast = cartan_tangents(&z, &t, &s).unwrap();
        let direct = face_invariants(&normalized_tet(&z, &t, &s)).unwrap();
        for k in 0..4 {
            prop_assert_eq!(&fast[k], &direct[k].tan());
        }
        Ok(())
    })?;
    property("parameter round trip", (normalized(), holomorphic()), |((z, t, s), g)| {
        let Ok(p) = params_from_normalized(&z, &t, &s) else { return Err(TestCaseError::reject("degenerate")) };
        prop_assert_eq!(
            ts_from_params(&p.z, &p.z_prime, &p.z_tilde, &p.z_tilde_prime).unwrap(),
            (t.clone(), s.clone())
        );
        prop_assert_eq!(params_from_points(&moved(&normalized_tet(&z, &t, &s), &g)).unwrap(), p);
        Ok(())
    })?;
    property("cartan under isometries", (normalized(), isometry()), |((z, t, s), g)| {
        let tet = normalized_tet(&z, &t, &s);
        let (before, after) = (face_invariants(&tet).unwrap(), face_invariants(&moved(&tet, &g)).unwrap());
        for k in 0..4 {
            let ok = if g.holo { after[k].same_as(&before[k]) } else { after[k].opposite_of(&before[k]) };
            prop_assert!(ok.unwrap());
        }
        Ok(())
    })?;
    property("symmetric moduli", (unit(), positive(), holomorphic()), |(u, h, g)| {
        let p = params_from_points(&moved(&special_tetrahedron(&u, &h).unwrap(), &g)).unwrap();
        prop_assert!(p.is_symmetric());
        prop_assert_eq!(p.z.abs2(), p.z_tilde.abs2());
        Ok(())
    })?;
    Ok("5 properties x 1000 cases".into())
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let mut mins = Vec::new();
    for (name, tet) in [("standard", standard_tetrahedron()), ("whitehead", whitehead_tetrahedron())] {
        let d = faces_disjoint(&tet.to_approx(), 64, 1e-3, 0.05).map_err(|e| e.to_string())?;
        ensure(d.pass, format!("{name} faces meet (min distance {:.4})", d.min_distance))?;
        mins.push(format!("{name} {:.4}", d.min_distance));
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 5.0, format!("took {secs:.2}s"))?;
    Ok(format!("faces disjoint at n = 64 (min distance {}) in {secs:.2}s", mins.join(", ")))
}

fn main() {
    let fig8 = figure_eight_fixture();
    let wh = whitehead_fixture();
    let fixture_err = |e: &crh::Error| Err(format!("fixture failed to build: {e}"));
    let results: Vec<(u8, &str, Outcome)> = vec![
        (1, "figure-eight generators", fig8.as_ref().map_or_else(fixture_err, criterion_1)),
        (2, "classification", criterion_2()),
        (3, "cusp holonomy", fig8.as_ref().map_or_else(fixture_err, criterion_3)),
        (4, "Eisenstein-Picard words", criterion_4()),
        (5, "Whitehead generators", wh.as_ref().map_or_else(fixture_err, criterion_5)),
        (6, "tetrahedron parameters", criterion_6()),
        (7, "gluing equations", criterion_7()),
        (8, "property suites", criterion_8()),
        (9, "face disjointness", criterion_9()),
    ];
    let mut unexpected = 0;
    for (n, title, outcome) in &results {
        let known = KNOWN_RED.iter().find(|(k, _)| k == n).map(|(_, why)| *why);
        match (outcome, known) {
            (Ok(detail), None) => println!("PASS {n} {title}: {detail}"),
            (Ok(detail), Some(_)) => println!("PASS {n} {title}: {detail} (listed as known red)"),
            (Err(why), Some(note)) => println!("FAIL {n} {title}: {why} [known: {note}]"),
            (Err(why), None) => {
                unexpected += 1;
                println!("FAIL {n} {title}: {why}");
            }
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
