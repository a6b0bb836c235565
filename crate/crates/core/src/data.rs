//! Scheme and tetrahedron files shipped with the crate.

use crate::complexes::GluingScheme;
use crate::error::{Error, Result};
use crate::json::tetra_from_json;
use crate::scalars::Cyclo;
use crate::tetra::Tetrahedron;

pub const FIG8_SCHEME: &str = include_str!("../data/fig8.json");
pub const WHITEHEAD_SCHEME: &str = include_str!("../data/whitehead.json");
pub const STANDARD_TETRA: &str = include_str!("../data/standard-tetra.json");
pub const WHITEHEAD_TETRA: &str = include_str!("../data/whitehead-tetra.json");

/// Names accepted wherever a bundled file can stand in for a path.
pub const SCHEMES: [&str; 2] = ["fig8", "whitehead"];
pub const TETRAHEDRA: [&str; 2] = ["standard", "whitehead"];

pub fn scheme_source(name: &str) -> Option<&'static str> {
    match name {
        "fig8" => Some(FIG8_SCHEME),
        "whitehead" => Some(WHITEHEAD_SCHEME),
        _ => None,
    }
}

pub fn tetra_source(name: &str) -> Option<&'static str> {
    match name {
        "standard" => Some(STANDARD_TETRA),
        "whitehead" => Some(WHITEHEAD_TETRA),
        _ => None,
    }
}

pub fn scheme(name: &str) -> Result<GluingScheme> {
    let src = scheme_source(name).ok_or_else(|| Error::UnboundName(name.into()))?;
    GluingScheme::from_json(&serde_json::from_str(src)?)
}

pub fn tetrahedron(name: &str) -> Result<Tetrahedron<Cyclo>> {
    let src = tetra_source(name).ok_or_else(|| Error::UnboundName(name.into()))?;
    tetra_from_json(&serde_json::from_str(src)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{figure_eight_dotted_scheme, whitehead_scheme};
    use crate::json::tetra_to_json;
    use crate::tetra::{standard_tetrahedron, whitehead_tetrahedron};

    #[test]
    fn bundled_schemes_match_constructors() {
        assert_eq!(scheme("fig8").unwrap(), figure_eight_dotted_scheme());
        assert_eq!(scheme("whitehead").unwrap(), whitehead_scheme());
    }

    #[test]
    fn bundled_tetrahedra_match_constructors() {
        assert_eq!(tetra_to_json(&tetrahedron("standard").unwrap()), tetra_to_json(&standard_tetrahedron()));
        assert_eq!(tetra_to_json(&tetrahedron("whitehead").unwrap()), tetra_to_json(&whitehead_tetrahedron()));
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(scheme("trefoil"), Err(Error::UnboundName(_))));
        assert!(tetra_source("nope").is_none());
    }
}
