//! Command inputs: inline JSON, a file, or the name of a bundled file.

use std::path::Path;

use crh::complexes::GluingScheme;
use crh::json::tetra_from_json;
use crh::tetra::Tetrahedron;
use crh::{data, Cyclo, Error, Result};
use serde_json::Value;

fn parse(src: &str, origin: &str) -> Result<Value> {
    serde_json::from_str(src).map_err(|e| Error::Json {
        line: e.line(),
        column: e.column(),
        msg: format!("{origin}: {e}"),
    })
}

/// Bundled names win, then anything that looks like JSON, then paths.
pub fn resolve(input: &str, bundled: fn(&str) -> Option<&'static str>) -> Result<Value> {
    if let Some(src) = bundled(input) {
        return parse(src, input);
    }
    let trimmed = input.trim_start();
    if trimmed.starts_with(['{', '[', '"']) || trimmed.parse::<f64>().is_ok() {
        return parse(input, "inline input");
    }
    let path = Path::new(input);
    if path.exists() {
        let src = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {input}: {e}")))?;
        return parse(&src, input);
    }
    Err(Error::Invalid(format!("{input:?} is neither JSON, a readable file, nor a bundled name")))
}

pub fn scheme(input: &str) -> Result<GluingScheme> {
    GluingScheme::from_json(&resolve(input, data::scheme_source)?)
}

/// One tetrahedron, a list of them, or every tetrahedron of a realized scheme.
pub fn tetrahedra(input: &str) -> Result<Vec<Tetrahedron<Cyclo>>> {
    let bundled = |name: &str| data::tetra_source(name).or_else(|| data::scheme_source(name));
    let v = resolve(input, bundled)?;
    match &v {
        Value::Array(items) => items.iter().map(tetra_from_json).collect(),
        Value::Object(m) if m.contains_key("tetrahedra") => {
            let s = GluingScheme::from_json(&v)?;
            if !s.is_realized() {
                return Err(Error::Invalid("scheme has no vertex coordinates".into()));
            }
            (0..s.tetrahedra.len()).map(|k| s.realized_tet(k)).collect()
        }
        _ => Ok(vec![tetra_from_json(&v)?]),
    }
}
