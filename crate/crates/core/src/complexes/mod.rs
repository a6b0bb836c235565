//! Gluing schemes of CR tetrahedra, their edge-cycle and Cartan
//! compatibility equations, holonomy representations and the two worked
//! complexes: the figure-eight knot and the Whitehead link complements.

mod compat;
mod edges;
mod fixtures;
pub mod golden;
mod holonomy;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

pub use compat::{
    cartan_compatibility, regular_height, regular_params, symmetric_gluing_solver, Compatibility, Residual,
    SolverCandidate, SolverOutcome,
};
pub use edges::{edge_cycles, edge_equations, Corner, CornerConvention, CornerLabel, EdgeCycle, EdgeEquation, Factor};
pub use fixtures::{
    figure_eight_dotted_scheme, figure_eight_fixture, figure_eight_scheme, glue_report, picard_words_check,
    whitehead_fixture, whitehead_scheme,
};
pub use holonomy::{cusp_analysis, CuspData, CuspWordResult, HolonomyRep};

use crate::error::{Error, Result};
use crate::heisenberg::{cartan, HPoint};
use crate::isometry::{from_triples, ProjIsometry};
use crate::scalars::Cyclo;
use crate::tetra::Tetrahedron;

/// A tetrahedron of a scheme: the point labels in role order p₁, p₂, q₁, q₂,
/// and the letter naming its parameters (z, w, ...).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeTet {
    pub letter: String,
    pub vertices: [String; 4],
}

/// A face of tetrahedron `tet`, as an ordered triple of point labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceRef {
    pub tet: usize,
    pub vertices: [String; 3],
}

/// Glues `from` to `to`, matching vertices position by position. Unnamed
/// pairings are internal: both sides are the same face of the realization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacePairing {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub from: FaceRef,
    pub to: FaceRef,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedWord {
    pub name: String,
    pub word: String,
}

/// Boundary torus holonomy words. Later words may use earlier names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspSpec {
    pub name: String,
    pub words: Vec<NamedWord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GluingScheme {
    pub name: String,
    #[serde(default)]
    pub points: BTreeMap<String, HPoint<Cyclo>>,
    pub tetrahedra: Vec<SchemeTet>,
    pub pairings: Vec<FacePairing>,
    #[serde(default)]
    pub cusps: Vec<CuspSpec>,
}

/// Where a face goes: the target tetrahedron and the label correspondence.
pub(crate) type FaceMap = BTreeMap<(usize, BTreeSet<String>), (usize, BTreeMap<String, String>)>;

/// Cartan invariants on the two sides of one pairing.
#[derive(Clone, Debug)]
pub struct FaceCheck {
    pub pairing: String,
    pub from_angle: f64,
    pub to_angle: f64,
    /// tan 𝔸 on the first face minus tan 𝔸 on the second; `None` when
    /// either side is ±π/2.
    pub tan_residual: Option<Cyclo>,
    pub equal: bool,
}

impl GluingScheme {
    pub fn from_json(v: &serde_json::Value) -> Result<GluingScheme> {
        let s: GluingScheme = serde_json::from_value(v.clone()).map_err(|e| Error::Invalid(e.to_string()))?;
        s.validate()?;
        Ok(s)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("scheme serializes")
    }

    pub fn is_realized(&self) -> bool {
        !self.points.is_empty()
    }

    /// Combinatorial validity: every face of every tetrahedron is paired
    /// exactly once, through a bijection of its vertices.
    pub fn validate(&self) -> Result<()> {
        let mut letters = BTreeSet::new();
        for (k, t) in self.tetrahedra.iter().enumerate() {
            if !letters.insert(t.letter.as_str()) {
                return Err(Error::Invalid(format!("letter {:?} used twice", t.letter)));
            }
            let set: BTreeSet<&String> = t.vertices.iter().collect();
            if set.len() != 4 {
                return Err(Error::Invalid(format!("tetrahedron {k} repeats a vertex")));
            }
        }
        let mut seen = BTreeSet::new();
        for (n, p) in self.pairings.iter().enumerate() {
            for side in [&p.from, &p.to] {
                let t = self
                    .tetrahedra
                    .get(side.tet)
                    .ok_or_else(|| Error::Invalid(format!("pairing {n} names tetrahedron {}", side.tet)))?;
                let face: BTreeSet<String> = side.vertices.iter().cloned().collect();
                if face.len() != 3 {
                    return Err(Error::Invalid(format!("pairing {n} repeats a vertex")));
                }
                if let Some(v) = face.iter().find(|v| !t.vertices.contains(v)) {
                    return Err(Error::Invalid(format!(
                        "pairing {n}: {v} is not a vertex of tetrahedron {}",
                        side.tet
                    )));
                }
                if !seen.insert((side.tet, face)) {
                    return Err(Error::Invalid(format!("pairing {n} reuses a face of tetrahedron {}", side.tet)));
                }
            }
        }
        let expected = 4 * self.tetrahedra.len();
        if seen.len() != expected {
            return Err(Error::Invalid(format!("{} of {expected} faces are paired", seen.len())));
        }
        if self.is_realized() {
            for k in 0..self.tetrahedra.len() {
                self.realized_tet(k)?;
            }
        }
        Ok(())
    }

    pub(crate) fn face_map(&self) -> FaceMap {
        let mut m = FaceMap::new();
        for p in &self.pairings {
            let fwd: BTreeMap<String, String> =
                p.from.vertices.iter().cloned().zip(p.to.vertices.iter().cloned()).collect();
            let back: BTreeMap<String, String> = fwd.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
            m.insert((p.from.tet, p.from.vertices.iter().cloned().collect()), (p.to.tet, fwd));
            m.insert((p.to.tet, p.to.vertices.iter().cloned().collect()), (p.from.tet, back));
        }
        m
    }

    pub fn point(&self, label: &str) -> Result<&HPoint<Cyclo>> {
        self.points.get(label).ok_or_else(|| Error::UnboundName(label.to_string()))
    }

    fn triple(&self, labels: &[String; 3]) -> Result<[HPoint<Cyclo>; 3]> {
        Ok([self.point(&labels[0])?.clone(), self.point(&labels[1])?.clone(), self.point(&labels[2])?.clone()])
    }

    /// Tetrahedron k with its vertices in role order.
    pub fn realized_tet(&self, k: usize) -> Result<Tetrahedron<Cyclo>> {
        let t = self.tetrahedra.get(k).ok_or_else(|| Error::Invalid(format!("no tetrahedron {k}")))?;
        let p = |i: usize| self.point(&t.vertices[i]).cloned();
        Tetrahedron::new(p(0)?, p(1)?, p(2)?, p(3)?)
    }

    /// Exact comparison of Cartan invariants across each pairing.
    pub fn face_checks(&self) -> Result<Vec<FaceCheck>> {
        let mut out = Vec::new();
        for (n, p) in self.pairings.iter().enumerate() {
            let a = self.triple(&p.from.vertices)?;
            let b = self.triple(&p.to.vertices)?;
            let ca = cartan(&a[0], &a[1], &a[2])?;
            let cb = cartan(&b[0], &b[1], &b[2])?;
            out.push(FaceCheck {
                pairing: p.name.clone().unwrap_or_else(|| format!("internal{n}")),
                from_angle: ca.angle(),
                to_angle: cb.angle(),
                tan_residual: ca.tan().zip(cb.tan()).map(|(x, y)| x - &y),
                equal: ca.same_as(&cb)?,
            });
        }
        Ok(out)
    }

    /// The holomorphic side-pairing isometries, by pairing name.
    pub fn pairing_isometries(&self) -> Result<BTreeMap<String, ProjIsometry<Cyclo>>> {
        let mut out = BTreeMap::new();
        for p in &self.pairings {
            let a = self.triple(&p.from.vertices)?;
            let b = self.triple(&p.to.vertices)?;
            match &p.name {
                Some(name) => {
                    let g = from_triples(&a, &b)?;
                    if !g.holo {
                        return Err(Error::CartanMismatch(format!("pairing {name} reverses the Cartan invariant")));
                    }
                    out.insert(name.clone(), g);
                }
                None => {
                    if let Some(k) = (0..3).find(|&k| !a[k].same(&b[k])) {
                        return Err(Error::Invalid(format!(
                            "internal pairing moves {} to {}",
                            p.from.vertices[k], p.to.vertices[k]
                        )));
                    }
                }
            }
        }
        Ok(out)
    }
}
