//! Edge cycles of a gluing scheme and the products of corner invariants
//! around them.
//!
//! The link of a vertex v is a triangle whose corners are the three edges
//! leaving v. Each corner carries one of the invariants x₁, x₂, x₃ of the
//! family attached to v; a [`CornerConvention`] fixes which family and which
//! index. Going around an edge class from one endpoint multiplies the corner
//! invariants met there; a coherent gluing needs every such product to be 1.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::GluingScheme;
use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::tetra::{Family, TetraParams, Vertex};

/// Which family sits at each vertex and the order of the link corners:
/// `order[v][k]` is the far endpoint of the edge carrying x_{k+1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CornerConvention {
    pub family: [Family; 4],
    pub order: [[Vertex; 3]; 4],
}

use Vertex::{P1, P2, Q1, Q2};

impl CornerConvention {
    /// The assignment under which the figure-eight scheme produces the
    /// published edge equations.
    pub const PINNED: CornerConvention = CornerConvention {
        family: [Family::Plain, Family::Tilde, Family::Prime, Family::TildePrime],
        order: [[Q1, P2, Q2], [Q2, P1, Q1], [P1, Q2, P2], [P2, Q1, P1]],
    };

    /// The assignment read off the normalized-position formulas: x₁ at the
    /// corner toward `order[v][0]` is (b − u)/(a − u) for the link images
    /// u, a, b of `order[v]`.
    pub const FROM_FORMULAS: CornerConvention = CornerConvention {
        family: [Family::Plain, Family::Prime, Family::Tilde, Family::TildePrime],
        order: [[P2, Q1, Q2], [P1, Q1, Q2], [Q2, P1, P2], [Q1, P1, P2]],
    };

    pub fn label(&self, letter: &str, at: Vertex, toward: Vertex) -> CornerLabel {
        let index = self.order[at as usize].iter().position(|&u| u == toward).expect("distinct vertices") as u8 + 1;
        CornerLabel { letter: letter.to_string(), family: self.family[at as usize], index }
    }
}

/// x_k of one family of one tetrahedron, e.g. z̃′₂.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CornerLabel {
    pub letter: String,
    pub family: Family,
    pub index: u8,
}

impl CornerLabel {
    fn tilde(&self) -> bool {
        matches!(self.family, Family::Tilde | Family::TildePrime)
    }

    fn prime(&self) -> bool {
        matches!(self.family, Family::Prime | Family::TildePrime)
    }

    /// TeX form: `\tilde z'_2`.
    pub fn latex(&self) -> String {
        format!(
            "{}{}{}_{}",
            if self.tilde() { "\\tilde " } else { "" },
            self.letter,
            if self.prime() { "'" } else { "" },
            self.index
        )
    }

    pub fn value<S: Scalar>(&self, params: &BTreeMap<String, TetraParams<S>>) -> Result<S> {
        let p = params.get(&self.letter).ok_or_else(|| Error::UnboundName(self.latex()))?;
        let [x1, x2, x3] = p.family(self.family)?;
        Ok(match self.index {
            1 => x1,
            2 => x2,
            _ => x3,
        })
    }
}

impl fmt::Display for CornerLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SUB: [&str; 3] = ["₁", "₂", "₃"];
        let mut s = self.letter.clone();
        if self.tilde() {
            s.push('\u{303}');
        }
        if self.prime() {
            s.push('′');
        }
        write!(f, "{s}{}", SUB[(self.index - 1) as usize])
    }
}

/// The corner of tetrahedron `tet` at `vertex` on the edge toward `toward`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corner {
    pub tet: usize,
    pub vertex: String,
    pub toward: String,
    pub label: CornerLabel,
}

/// The corners met going once around an edge class, seen from one endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCycle {
    pub corners: Vec<Corner>,
}

/// A factor of a simplified product: x, or x − 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Plain(CornerLabel),
    MinusOne(CornerLabel),
}

impl Factor {
    pub fn latex(&self) -> String {
        match self {
            Factor::Plain(l) => l.latex(),
            Factor::MinusOne(l) => format!("({} - 1)", l.latex()),
        }
    }

    fn value<S: Scalar>(&self, params: &BTreeMap<String, TetraParams<S>>) -> Result<S> {
        match self {
            Factor::Plain(l) => l.value(params),
            Factor::MinusOne(l) => Ok(l.value(params)? - &S::one()),
        }
    }
}

impl EdgeCycle {
    pub fn labels(&self) -> impl Iterator<Item = &CornerLabel> {
        self.corners.iter().map(|c| &c.label)
    }

    /// The product as TeX, corners separated by spaces.
    pub fn latex(&self) -> String {
        self.labels().map(CornerLabel::latex).collect::<Vec<_>>().join(" ")
    }

    /// Rewrites x_k·x_{k+1} as x_{k+1} − 1 (indices mod 3) within each
    /// tetrahedron; per tetrahedron the rewritten pairs come first, then the
    /// remaining corners in cycle order.
    pub fn simplified(&self) -> Vec<Factor> {
        let mut tets: Vec<usize> = self.corners.iter().map(|c| c.tet).collect();
        tets.sort_unstable();
        tets.dedup();
        let mut used = vec![false; self.corners.len()];
        let mut out = Vec::new();
        for t in tets {
            let idx: Vec<usize> = (0..self.corners.len()).filter(|&k| self.corners[k].tet == t).collect();
            let mut rest = Vec::new();
            for (n, &a) in idx.iter().enumerate() {
                if used[a] {
                    continue;
                }
                let la = &self.corners[a].label;
                let partner = idx[n + 1..].iter().copied().find(|&b| {
                    let lb = &self.corners[b].label;
                    !used[b] && lb.family == la.family && (lb.index % 3 + 1 == la.index || la.index % 3 + 1 == lb.index)
                });
                match partner {
                    Some(b) => {
                        used[a] = true;
                        used[b] = true;
                        let lb = &self.corners[b].label;
                        let later = if la.index % 3 + 1 == lb.index { lb } else { la };
                        out.push(Factor::MinusOne(later.clone()));
                    }
                    None => rest.push(a),
                }
            }
            for a in rest {
                if !used[a] {
                    used[a] = true;
                    out.push(Factor::Plain(self.corners[a].label.clone()));
                }
            }
        }
        out
    }

    pub fn simplified_latex(&self) -> String {
        self.simplified().iter().map(Factor::latex).collect::<Vec<_>>().join(" ")
    }

    pub fn product<S: Scalar>(&self, params: &BTreeMap<String, TetraParams<S>>) -> Result<S> {
        self.labels().try_fold(S::one(), |acc, l| Ok(acc * &l.value(params)?))
    }

    pub fn simplified_product<S: Scalar>(&self, params: &BTreeMap<String, TetraParams<S>>) -> Result<S> {
        self.simplified().iter().try_fold(S::one(), |acc, f| Ok(acc * &f.value(params)?))
    }
}

impl fmt::Display for EdgeCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

fn role(scheme: &GluingScheme, tet: usize, label: &str) -> Vertex {
    let k = scheme.tetrahedra[tet].vertices.iter().position(|v| v == label).expect("label belongs to the tetrahedron");
    Vertex::ALL[k]
}

/// Corners (tet, at, toward) around the edge class of (tet, a, b), starting
/// through the face spanned with the first remaining vertex in role order.
fn walk(
    scheme: &GluingScheme,
    faces: &super::FaceMap,
    tet: usize,
    a: &str,
    b: &str,
) -> Result<Vec<(usize, String, String)>> {
    let third = |t: usize, x: &str, y: &str, skip: Option<&str>| -> String {
        scheme.tetrahedra[t]
            .vertices
            .iter()
            .find(|v| v.as_str() != x && v.as_str() != y && Some(v.as_str()) != skip)
            .expect("four vertices")
            .clone()
    };
    let start = (tet, a.to_string(), b.to_string());
    let mut cur = (tet, a.to_string(), b.to_string(), third(tet, a, b, None));
    let mut out = Vec::new();
    let limit = 12 * scheme.tetrahedra.len() + 1;
    loop {
        let (t, x, y, c) = cur;
        out.push((t, x.clone(), y.clone()));
        if out.len() > limit {
            return Err(Error::Invalid("edge cycle does not close".into()));
        }
        let key = (t, [x.clone(), y.clone(), c.clone()].into_iter().collect::<BTreeSet<_>>());
        let (t2, m) = faces
            .get(&key)
            .ok_or_else(|| Error::Invalid(format!("face {x},{y},{c} of tetrahedron {t} is unpaired")))?;
        let (nx, ny, nc) = (m[&x].clone(), m[&y].clone(), m[&c].clone());
        let d = third(*t2, &nx, &ny, Some(&nc));
        if (*t2, nx.clone(), ny.clone()) == start {
            return Ok(out);
        }
        cur = (*t2, nx, ny, d);
    }
}

/// Both endpoint cycles of every edge class, in a deterministic order:
/// tetrahedra in scheme order, vertices in role order, corners in link
/// order; a new class contributes its cycle from the vertex side, then
/// from the far side.
pub fn edge_cycles(scheme: &GluingScheme, conv: &CornerConvention) -> Result<Vec<EdgeCycle>> {
    scheme.validate()?;
    let faces = scheme.face_map();
    let mut classes: BTreeSet<BTreeSet<(usize, BTreeSet<String>)>> = BTreeSet::new();
    let mut out = Vec::new();
    let corner = |t: usize, at: &str, toward: &str| -> Corner {
        let letter = &scheme.tetrahedra[t].letter;
        Corner {
            tet: t,
            vertex: at.to_string(),
            toward: toward.to_string(),
            label: conv.label(letter, role(scheme, t, at), role(scheme, t, toward)),
        }
    };
    for (t, st) in scheme.tetrahedra.iter().enumerate() {
        for (k, v) in st.vertices.iter().enumerate() {
            for &u_role in &conv.order[k] {
                let u = &st.vertices[u_role as usize];
                let w = walk(scheme, &faces, t, v, u)?;
                let class = w.iter().map(|(t, x, y)| (*t, [x.clone(), y.clone()].into_iter().collect())).collect();
                if !classes.insert(class) {
                    continue;
                }
                for (x, y) in [(v, u), (u, v)] {
                    let corners = walk(scheme, &faces, t, x, y)?.iter().map(|(t, a, b)| corner(*t, a, b)).collect();
                    out.push(EdgeCycle { corners });
                }
            }
        }
    }
    Ok(out)
}

/// An edge cycle with its product evaluated at given parameters.
#[derive(Clone, Debug)]
pub struct EdgeEquation<S> {
    pub cycle: EdgeCycle,
    pub product: S,
    pub simplified: S,
}

impl<S: Scalar> EdgeEquation<S> {
    pub fn holds(&self) -> bool {
        self.product.eq_val(&S::one())
    }
}

/// Evaluates every edge cycle; `params` binds each tetrahedron letter.
pub fn edge_equations<S: Scalar>(
    scheme: &GluingScheme,
    conv: &CornerConvention,
    params: &BTreeMap<String, TetraParams<S>>,
) -> Result<Vec<EdgeEquation<S>>> {
    edge_cycles(scheme, conv)?
        .into_iter()
        .map(|cycle| {
            let product = cycle.product(params)?;
            let simplified = cycle.simplified_product(params)?;
            Ok(EdgeEquation { cycle, product, simplified })
        })
        .collect()
}
