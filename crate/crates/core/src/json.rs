//! JSON forms of exact values.
//!
//! Scalars are strings in the expression grammar of [`crate::scalars::expr`]
//! (plain JSON numbers are accepted on input). A point is `"inf"` or
//! `{"z": .., "t": ..}`. A matrix is `{"rows": [[..]x3]x3, "holo": bool}` or a
//! bare array of rows. A tetrahedron is `{"p1", "p2", "q1", "q2", "edges"?}`.

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::heisenberg::{HPoint, Orientation};
use crate::isometry::{Mat3, ProjIsometry};
use crate::scalars::expr::{format_cyclo, parse};
use crate::scalars::Cyclo;
use crate::tetra::{Tetrahedron, Vertex};

impl Serialize for Cyclo {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_cyclo(self))
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        scalar_from_json(&Value::deserialize(d)?).map_err(de::Error::custom)
    }
}

impl Serialize for HPoint<Cyclo> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        point_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for HPoint<Cyclo> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        point_from_json(&Value::deserialize(d)?).map_err(de::Error::custom)
    }
}

pub fn scalar_from_json(v: &Value) -> Result<Cyclo> {
    match v {
        Value::String(s) => parse(s),
        Value::Number(n) => parse(&n.to_string()),
        other => Err(Error::Invalid(format!("expected a scalar, found {other}"))),
    }
}

pub fn scalar_to_json(x: &Cyclo) -> Value {
    Value::String(format_cyclo(x))
}

pub fn point_to_json(p: &HPoint<Cyclo>) -> Value {
    match p {
        HPoint::Infinity => json!("inf"),
        HPoint::Finite { z, t } => json!({"z": format_cyclo(z), "t": format_cyclo(t)}),
    }
}

pub fn point_from_json(v: &Value) -> Result<HPoint<Cyclo>> {
    match v {
        Value::String(s) if s == "inf" || s == "∞" => Ok(HPoint::Infinity),
        Value::Object(m) => {
            let get = |k: &str| m.get(k).ok_or_else(|| Error::Invalid(format!("point is missing {k:?}")));
            HPoint::checked(scalar_from_json(get("z")?)?, scalar_from_json(get("t")?)?)
        }
        Value::Array(a) if a.len() == 2 => HPoint::checked(scalar_from_json(&a[0])?, scalar_from_json(&a[1])?),
        other => Err(Error::Invalid(format!("expected \"inf\" or {{\"z\", \"t\"}}, found {other}"))),
    }
}

pub fn matrix_to_json(m: &Mat3<Cyclo>) -> Value {
    Value::Array(m.0.iter().map(|row| Value::Array(row.iter().map(scalar_to_json).collect())).collect())
}

pub fn matrix_from_json(v: &Value) -> Result<Mat3<Cyclo>> {
    let rows = v.as_array().filter(|r| r.len() == 3).ok_or_else(|| Error::Invalid("expected three rows".into()))?;
    let mut out = Mat3::<Cyclo>::identity();
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .filter(|r| r.len() == 3)
            .ok_or_else(|| Error::Invalid(format!("row {i} needs three entries")))?;
        for (j, x) in row.iter().enumerate() {
            out.0[i][j] = scalar_from_json(x)?;
        }
    }
    Ok(out)
}

pub fn isometry_to_json(g: &ProjIsometry<Cyclo>) -> Value {
    json!({"rows": matrix_to_json(&g.m), "holo": g.holo})
}

pub fn isometry_from_json(v: &Value) -> Result<ProjIsometry<Cyclo>> {
    match v {
        Value::Object(m) => {
            let rows = m.get("rows").ok_or_else(|| Error::Invalid("matrix is missing \"rows\"".into()))?;
            let holo = match m.get("holo") {
                None => true,
                Some(h) => h.as_bool().ok_or_else(|| Error::Invalid("\"holo\" must be a boolean".into()))?,
            };
            Ok(ProjIsometry { m: matrix_from_json(rows)?, holo })
        }
        _ => Ok(ProjIsometry::holomorphic(matrix_from_json(v)?)),
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    from: String,
    to: String,
    orientation: Orientation,
}

pub fn tetra_to_json(t: &Tetrahedron<Cyclo>) -> Value {
    let mut m = serde_json::Map::new();
    for v in Vertex::ALL {
        m.insert(v.name().into(), point_to_json(t.vertex(v)));
    }
    if !t.edges.is_empty() {
        let edges: Vec<EdgeJson> = t
            .edges
            .iter()
            .map(|(&(a, b), &o)| EdgeJson { from: a.name().into(), to: b.name().into(), orientation: o })
            .collect();
        m.insert("edges".into(), serde_json::to_value(edges).expect("edges serialize"));
    }
    Value::Object(m)
}

pub fn tetra_from_json(v: &Value) -> Result<Tetrahedron<Cyclo>> {
    let obj = v.as_object().ok_or_else(|| Error::Invalid("tetrahedron must be an object".into()))?;
    let pt = |k: &str| -> Result<HPoint<Cyclo>> {
        point_from_json(obj.get(k).ok_or_else(|| Error::Invalid(format!("tetrahedron is missing {k:?}")))?)
    };
    let mut tet = Tetrahedron::new(pt("p1")?, pt("p2")?, pt("q1")?, pt("q2")?)?;
    if let Some(e) = obj.get("edges") {
        let edges: Vec<EdgeJson> = serde_json::from_value(e.clone()).map_err(|e| Error::Invalid(e.to_string()))?;
        for e in edges {
            let vx = |s: &str| Vertex::parse(s).ok_or_else(|| Error::Invalid(format!("unknown vertex {s:?}")));
            tet = tet.with_edge(vx(&e.from)?, vx(&e.to)?, e.orientation);
        }
    }
    Ok(tet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tetra::standard_tetrahedron;

    #[test]
    fn points() {
        let p = HPoint::new(Cyclo::omega(), Cyclo::sqrt3());
        assert_eq!(point_from_json(&point_to_json(&p)).unwrap(), p);
        assert_eq!(point_from_json(&json!("inf")).unwrap(), HPoint::Infinity);
        assert_eq!(point_from_json(&json!({"z": 1, "t": "0"})).unwrap(), HPoint::new(Cyclo::one(), Cyclo::zero()));
        assert!(point_from_json(&json!({"z": "i", "t": "i"})).is_err());
        assert!(point_from_json(&json!({"z": "1 +"})).is_err());
    }

    #[test]
    fn matrices_and_tetrahedra() {
        let g = ProjIsometry::<Cyclo>::picard_i();
        let back = isometry_from_json(&isometry_to_json(&g)).unwrap();
        assert_eq!(back.m, g.m);
        assert!(isometry_from_json(&json!([["1", "0"], ["0", "1"]])).is_err());
        let t = standard_tetrahedron().with_edge(Vertex::P1, Vertex::Q1, Orientation::Negative);
        let back = tetra_from_json(&tetra_to_json(&t)).unwrap();
        assert_eq!(back.vertices, t.vertices);
        assert_eq!(back.edges, t.edges);
    }

    #[test]
    fn serde_derive_path() {
        let x: Cyclo = serde_json::from_str("\"1 - omega\"").unwrap();
        assert_eq!(x, Cyclo::omega().conj());
        assert_eq!(serde_json::to_string(&x).unwrap(), "\"1 - omega\"");
    }
}
