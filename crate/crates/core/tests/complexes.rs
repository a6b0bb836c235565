mod common;

use std::collections::BTreeMap;

use common::{holomorphic, moved, nonzero_complex, normalized, normalized_tet, real};
use crh::complexes::golden::{self, same_tex};
use crh::complexes::{
    cartan_compatibility, edge_cycles, edge_equations, figure_eight_dotted_scheme, figure_eight_fixture,
    figure_eight_scheme, regular_height, regular_params, symmetric_gluing_solver, whitehead_fixture, whitehead_scheme,
    CornerConvention, GluingScheme,
};
use crh::heisenberg::{h_inv, HPoint};
use crh::isometry::ProjIsometry;
use crh::tetra::{params_from_normalized, params_from_points, TetraParams, Tetrahedron, Vertex};
use crh::{Cyclo, Error};
use proptest::prelude::*;

fn generic_params() -> impl Strategy<Value = TetraParams<Cyclo>> {
    normalized()
        .prop_filter_map("degenerate", |(z, t, s)| params_from_normalized(&z, &t, &s).ok())
        .prop_filter("invariants avoid 0 and 1", |p| {
            [&p.z, &p.z_prime, &p.z_tilde, &p.z_tilde_prime].iter().all(|x| !x.is_zero() && !x.is_one())
        })
}

fn bind(scheme: &GluingScheme, params: &[TetraParams<Cyclo>]) -> BTreeMap<String, TetraParams<Cyclo>> {
    scheme.tetrahedra.iter().zip(params).map(|(t, p)| (t.letter.clone(), p.clone())).collect()
}

/// The link of `v`: a holomorphic map sending it to ∞, then the ratio
/// (b − u)/(a − u) of the projections of the three other vertices in the
/// convention's order.
fn link_ratio(tet: &Tetrahedron<Cyclo>, v: Vertex, order: [Vertex; 3]) -> Cyclo {
    let g = match tet.vertex(v) {
        HPoint::Infinity => ProjIsometry::identity(),
        p => {
            let HPoint::Finite { z, t } = h_inv(p).unwrap() else { unreachable!() };
            ProjIsometry::picard_i().compose(&ProjIsometry::translation(&z, &t))
        }
    };
    let [u, a, b] = order.map(|w| match g.act(tet.vertex(w)).unwrap() {
        HPoint::Finite { z, .. } => z,
        HPoint::Infinity => panic!("only {v:?} goes to infinity"),
    });
    (b - &u).checked_div(&(a - &u)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn all_corners_multiply_to_one(p in proptest::collection::vec(generic_params(), 4)) {
        // each corner lies on exactly one cycle, and x₁x₂x₃ = −1 at each of the four vertices
        for scheme in [figure_eight_scheme(), whitehead_scheme()] {
            for conv in [CornerConvention::PINNED, CornerConvention::FROM_FORMULAS] {
                let eqs = edge_equations(&scheme, &conv, &bind(&scheme, &p)).unwrap();
                // as many edge classes as tetrahedra, each seen from both ends
                prop_assert_eq!(eqs.len(), 2 * scheme.tetrahedra.len());
                let total = eqs.iter().fold(Cyclo::one(), |acc, e| acc * &e.product);
                prop_assert!(total.is_one(), "{}: {}", scheme.name, total);
                for e in &eqs {
                    prop_assert_eq!(&e.product, &e.simplified);
                }
            }
        }
    }

    #[test]
    fn formula_convention_is_the_link_geometry(
        (z, t, s) in normalized(),
        g in holomorphic(),
    ) {
        let Ok(p) = params_from_normalized(&z, &t, &s) else { return Err(TestCaseError::reject("degenerate")) };
        let tet = moved(&normalized_tet(&z, &t, &s), &g);
        let conv = CornerConvention::FROM_FORMULAS;
        for v in Vertex::ALL {
            let expected = link_ratio(&tet, v, conv.order[v as usize]);
            prop_assert_eq!(p.first(conv.family[v as usize]), &expected, "vertex {:?}", v);
        }
    }

    #[test]
    fn equal_symmetric_tetrahedra_are_compatible_only_at_the_regular_height(
        z in nonzero_complex().prop_filter("z not real, Re z ≠ 1", |z| !z.is_real() && !z.re().is_one()),
        h in real(),
        regular in any::<bool>(),
    ) {
        let h = if regular { regular_height(&z).unwrap() } else { h };
        let Ok(p) = params_from_normalized(&z, &h, &h) else { return Err(TestCaseError::reject("degenerate")) };
        let c = cartan_compatibility(&p, &p).unwrap();
        prop_assert_eq!(c.all_zero(), h == regular_height(&z).unwrap());
    }
}

#[test]
fn figure_eight_cycles_are_the_published_equations() {
    let cycles = edge_cycles(&figure_eight_scheme(), &CornerConvention::PINNED).unwrap();
    assert_eq!(cycles.len(), 4);
    for (k, c) in cycles.iter().enumerate() {
        assert!(same_tex(&c.latex(), golden::FIG8_EDGE_PRODUCTS[k]), "{k}: {}", c.latex());
        assert!(same_tex(&c.simplified_latex(), golden::FIG8_EDGE_SIMPLIFIED[k]), "{k}: {}", c.simplified_latex());
    }
}

#[test]
fn regular_solution_satisfies_the_edge_equations() {
    let scheme = figure_eight_dotted_scheme();
    let w = Cyclo::one() - Cyclo::omega();
    let params = bind(&scheme, &[regular_params(&w).unwrap(), regular_params(&w).unwrap()]);
    for conv in [CornerConvention::PINNED, CornerConvention::FROM_FORMULAS] {
        for e in edge_equations(&scheme, &conv, &params).unwrap() {
            assert!(e.holds(), "{}: {}", e.cycle, e.product);
        }
    }
    // the realized vertices give the same parameters
    let real = params_from_points(&crh::tetra::standard_tetrahedron()).unwrap();
    assert_eq!(real.z, Cyclo::omega().conj());
}

#[test]
fn perturbing_the_solution_breaks_an_equation() {
    let scheme = figure_eight_dotted_scheme();
    let w = Cyclo::one() - Cyclo::omega();
    let off = Cyclo::i();
    let params = bind(&scheme, &[regular_params(&w).unwrap(), regular_params(&off).unwrap()]);
    let eqs = edge_equations(&scheme, &CornerConvention::PINNED, &params).unwrap();
    assert!(eqs.iter().any(|e| !e.holds()));
    let compat = cartan_compatibility(&params["z"], &params["w"]).unwrap();
    assert!(!compat.all_zero());
}

#[test]
fn solver_finds_exactly_the_regular_parameter() {
    let out = symmetric_gluing_solver().unwrap();
    assert_eq!(out.solutions, vec![Cyclo::one() - Cyclo::omega()]);
    assert_eq!(out.solutions[0], Cyclo::zeta_pow(4));
    assert!(out.candidates.iter().any(|c| c.w.is_zero() && !c.accepted));
}

#[test]
fn unbound_letters_are_reported() {
    let scheme = figure_eight_scheme();
    let mut params = BTreeMap::new();
    params.insert("z".to_string(), regular_params(&Cyclo::zeta_pow(4)).unwrap());
    let err = edge_equations(&scheme, &CornerConvention::PINNED, &params).unwrap_err();
    assert!(matches!(err, Error::UnboundName(_)), "{err}");
}

#[test]
fn bundled_fixtures_pass() {
    for rep in [figure_eight_fixture().unwrap(), whitehead_fixture().unwrap()] {
        let failed: Vec<_> = rep.report.failures().map(|c| c.name.clone()).collect();
        assert!(failed.is_empty(), "{}: {failed:?}", rep.name);
        assert_eq!(rep.derived.len(), rep.generators.len());
    }
}

#[test]
fn schemes_round_trip_through_json() {
    for scheme in [figure_eight_scheme(), figure_eight_dotted_scheme(), whitehead_scheme()] {
        assert_eq!(GluingScheme::from_json(&scheme.to_json()).unwrap(), scheme);
    }
    let mut broken = figure_eight_scheme().to_json();
    broken["pairings"].as_array_mut().unwrap().pop();
    assert!(GluingScheme::from_json(&broken).is_err());
}
