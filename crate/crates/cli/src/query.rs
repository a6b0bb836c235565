use std::collections::BTreeMap;

use crh::complexes::glue_report;
use crh::complexes::golden::{self, Rows};
use crh::heisenberg::{cartan, HPoint};
use crh::isometry::{check_unitary, classify, eval_word, matrix_in_ring, ProjIsometry, UnitaryCheck, Word};
use crh::json::{isometry_from_json, matrix_to_json, point_from_json, tetra_from_json};
use crh::report::Report;
use crh::scalars::{approx_of, Backend, Ring};
use crh::tetra::{cartan_tangents, params_from_points, Tetrahedron};
use crh::{data, Approx, Cyclo, Error, Result, Scalar};
use serde_json::{json, Value};

use crate::input::{resolve, scheme};
use crate::QueryKind;

/// Exact values carry their float approximation next to them.
fn val<S: Scalar>(x: &S) -> Value {
    let c = x.to_complex();
    let approx = if x.im().is_zero() { json!(c.re) } else { json!({"re": c.re, "im": c.im}) };
    match S::BACKEND {
        Backend::Exact => json!({"exact": x.to_string(), "approx": approx}),
        Backend::Float => json!({"approx": approx}),
    }
}

fn float_point(p: &HPoint<Cyclo>, tol: f64) -> HPoint<Approx> {
    p.map(|x| approx_of(x).with_tol(tol))
}

fn cartan_report<S: Scalar>(pts: &[HPoint<S>; 3]) -> Result<Report> {
    let c = cartan(&pts[0], &pts[1], &pts[2])?;
    let mut r = Report::new("query/cartan");
    let angle = c.angle();
    r.info(
        "cartan",
        json!({
            "eta": val(&c.eta),
            "tan": c.tan().as_ref().map(val),
            "right_angle": c.is_right_angle(),
            "angle_approx": angle,
            "angle_over_pi_approx": angle / std::f64::consts::PI,
        }),
    );
    Ok(r)
}

fn params_report<S: Scalar>(tet: &Tetrahedron<S>) -> Result<Report> {
    let p = params_from_points(tet)?;
    let tangents = cartan_tangents(&p.z, &p.t, &p.s)?;
    let mut r = Report::new("query/params");
    r.info(
        "params",
        json!({
            "z1": val(&p.z),
            "z1_prime": val(&p.z_prime),
            "z1_tilde": val(&p.z_tilde),
            "z1_tilde_prime": val(&p.z_tilde_prime),
            "t": val(&p.t),
            "s": val(&p.s),
            "symmetric": p.is_symmetric(),
            "regular": p.is_regular().ok(),
            "tangents": tangents.iter().map(|x| x.as_ref().map(val)).collect::<Vec<_>>(),
        }),
    );
    Ok(r)
}

fn classify_witness(g: &ProjIsometry<Cyclo>) -> Result<Value> {
    let c = classify(g)?;
    let unitary = match check_unitary(&g.m)? {
        UnitaryCheck::Ok { lambda } => json!({"lambda": val(&lambda)}),
        UnitaryCheck::Fail { row, col, value } => json!({"fails_at": [row, col], "value": val(&value)}),
    };
    let rings: Vec<&str> = [Ring::Integers, Ring::Gaussian, Ring::Eisenstein]
        .into_iter()
        .filter(|&k| matrix_in_ring(g, k))
        .map(Ring::name)
        .collect();
    Ok(json!({
        "kind": c.kind,
        "trace": val(&g.m.trace()),
        "discriminant": val(&c.discriminant),
        "order": c.elliptic_order,
        "unitary": unitary,
        "rings": rings,
    }))
}

fn generator_set(name: &str) -> Option<BTreeMap<String, ProjIsometry<Cyclo>>> {
    let rows: &[(&str, &Rows)] = match name {
        "fig8" => &[("G1", &golden::FIG8_G1), ("G2", &golden::FIG8_G2), ("G3", &golden::FIG8_G3)],
        "whitehead" => {
            &[("G1", &golden::WH_G1), ("G2", &golden::WH_G2), ("G3", &golden::WH_G3), ("G4", &golden::WH_G4)]
        }
        "picard" => &[("P", &golden::PICARD_P), ("Q", &golden::PICARD_Q), ("I", &golden::PICARD_I)],
        _ => return None,
    };
    Some(rows.iter().map(|(n, r)| (n.to_string(), ProjIsometry::holomorphic(golden::matrix(r)))).collect())
}

fn generators(v: &Value) -> Result<BTreeMap<String, ProjIsometry<Cyclo>>> {
    match v {
        Value::String(name) => generator_set(name).ok_or_else(|| Error::UnboundName(name.clone())),
        Value::Object(m) => m.iter().map(|(k, g)| Ok((k.clone(), isometry_from_json(g)?))).collect(),
        _ => Err(Error::Invalid("generators must be a set name or an object of matrices".into())),
    }
}

/// `{"word": "...", "generators": "fig8" | {...}, "target": "G1" | matrix}`.
fn word_report(v: &Value) -> Result<Report> {
    let word = v.get("word").and_then(Value::as_str).ok_or_else(|| Error::Invalid("missing \"word\"".into()))?;
    let env = generators(v.get("generators").unwrap_or(&json!("fig8")))?;
    let g = eval_word(&Word::parse(word)?, &env)?;
    let mut r = Report::new("query/word");
    let mut w = classify_witness(&g)?;
    w["word"] = json!(word);
    w["matrix"] = matrix_to_json(&g.m);
    w["identity"] = json!(g.is_identity());
    r.info("word", w);
    if let Some(t) = v.get("target") {
        let target = match t {
            Value::String(name) => env.get(name).cloned().ok_or_else(|| Error::UnboundName(name.clone()))?,
            other => isometry_from_json(other)?,
        };
        let lambda = g.ratio_to(&target);
        let ok = lambda.as_ref().is_some_and(|l| (l.abs2() - Cyclo::one()).is_zero());
        r.check("word/target", ok, json!({"scale": lambda.as_ref().map(val)}));
    }
    Ok(r)
}

pub fn run(kind: QueryKind, input: &str, backend: Backend, tol: f64) -> Result<Report> {
    let float = backend == Backend::Float;
    match kind {
        QueryKind::Cartan => {
            let v = resolve(input, |_| None)?;
            let pts: Vec<HPoint<Cyclo>> = match &v {
                Value::Array(a) if a.len() == 3 => a.iter().map(point_from_json).collect::<Result<_>>()?,
                _ => return Err(Error::Invalid("cartan expects an array of three points".into())),
            };
            let pts: [HPoint<Cyclo>; 3] = pts.try_into().expect("three points");
            if float {
                cartan_report(&pts.each_ref().map(|p| float_point(p, tol)))
            } else {
                cartan_report(&pts)
            }
        }
        QueryKind::Params => {
            let tet = tetra_from_json(&resolve(input, data::tetra_source)?)?;
            if float {
                params_report(&tet.map(|x| approx_of(x).with_tol(tol)))
            } else {
                params_report(&tet)
            }
        }
        _ if float => Err(Error::Invalid("classify, word and glue certify exactly; use --backend exact".into())),
        QueryKind::Classify => {
            let g = isometry_from_json(&resolve(input, |_| None)?)?;
            let mut r = Report::new("query/classify");
            r.info("classify", classify_witness(&g)?);
            Ok(r)
        }
        QueryKind::Word => word_report(&resolve(input, |_| None)?),
        QueryKind::Glue => glue_report(&scheme(input)?),
    }
}
