//! Cartan compatibility of two glued tetrahedra, and the symmetric solution
//! of the figure-eight system.

use std::collections::BTreeMap;

use super::edges::{edge_equations, CornerConvention};
use super::GluingScheme;
use crate::error::{Error, Result};
use crate::scalars::{Cyclo, Scalar};
use crate::tetra::{cartan_tangents, params_from_normalized, TetraParams};

/// One face-against-face constraint. `residual` is the difference of the two
/// tangents, or `None` when a side has 𝔸 = ±π/2 and its tangent is undefined.
#[derive(Clone, Debug)]
pub struct Residual<S> {
    pub name: &'static str,
    pub faces: &'static str,
    pub residual: Option<S>,
}

#[derive(Clone, Debug)]
pub struct Compatibility<S> {
    pub residuals: Vec<Residual<S>>,
    /// The fourth constraint follows from the other three by the cocycle
    /// relation.
    pub independent: usize,
}

impl<S: Scalar> Compatibility<S> {
    pub fn all_zero(&self) -> bool {
        self.residuals.iter().all(|r| r.residual.as_ref().is_some_and(Scalar::is_zero))
    }
}

/// The four constraints for two tetrahedra glued in the figure-eight
/// pattern, the second one labelled ṗ₁, ṗ₂, q̇₁, q̇₂:
/// 𝔸(p₁,p₂,q₁) = 𝔸(ṗ₁,ṗ₂,q̇₂), 𝔸(p₁,q₁,q₂) = 𝔸(ṗ₂,q̇₁,q̇₂),
/// 𝔸(p₁,p₂,q₂) = 𝔸(ṗ₁,q̇₁,q̇₂) and 𝔸(p₂,q₁,q₂) = 𝔸(ṗ₁,ṗ₂,q̇₁).
pub fn cartan_compatibility<S: Scalar>(tet: &TetraParams<S>, dot: &TetraParams<S>) -> Result<Compatibility<S>> {
    // [A, B, C, D] = [(p₁,p₂,q₁), (p₁,q₁,q₂), (p₁,p₂,q₂), (p₂,q₁,q₂)]
    let a = cartan_tangents(&tet.z, &tet.t, &tet.s)?;
    let b = cartan_tangents(&dot.z, &dot.t, &dot.s)?;
    let diff = |x: &Option<S>, y: &Option<S>| match (x, y) {
        (Some(x), Some(y)) => Some(x.clone() - y),
        _ => None,
    };
    let residuals = vec![
        Residual { name: "A", faces: "(p1,p2,q1) ~ (p1',p2',q2')", residual: diff(&a[0], &b[2]) },
        Residual { name: "B", faces: "(p1,q1,q2) ~ (p2',q1',q2')", residual: diff(&a[1], &b[3]) },
        Residual { name: "C", faces: "(p1,p2,q2) ~ (p1',q1',q2')", residual: diff(&a[2], &b[1]) },
        Residual { name: "D", faces: "(p2,q1,q2) ~ (p1',p2',q1')", residual: diff(&a[3], &b[0]) },
    ];
    Ok(Compatibility { residuals, independent: 3 })
}

/// Im z / (1 − Re z): the common value of t = s on a regular tetrahedron.
pub fn regular_height<S: Scalar>(z: &S) -> Result<S> {
    z.im().checked_div(&(S::one() - &z.re())).map_err(|_| Error::Degenerate("Re z = 1".into()))
}

/// Invariants of the regular tetrahedron with parameter z.
pub fn regular_params<S: Scalar>(z: &S) -> Result<TetraParams<S>> {
    let h = regular_height(z)?;
    params_from_normalized(z, &h, &h)
}

#[derive(Clone, Debug)]
pub struct SolverCandidate {
    pub w: Cyclo,
    pub accepted: bool,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct SolverOutcome {
    pub candidates: Vec<SolverCandidate>,
    pub solutions: Vec<Cyclo>,
}

/// Regular solutions of the figure-eight edge equations with z₁ = z̃₁.
///
/// The eliminated equation w² + w̄ = 0 forces |w|² = |w|, so w = 0 or
/// |w| = 1, and then w̄ = 1/w turns it into w³ = −1. Each root is tested
/// for degeneracy, against all four edge equations (paired with every
/// admissible z₁), and for orientation: the regular height must be positive,
/// otherwise p₁ and p₂ trade places and the tetrahedron is mirrored.
pub fn symmetric_gluing_solver() -> Result<SolverOutcome> {
    solve_symmetric(&super::figure_eight_scheme())
}

pub(crate) fn solve_symmetric(scheme: &GluingScheme) -> Result<SolverOutcome> {
    let [z_letter, w_letter] = match scheme.tetrahedra.as_slice() {
        [a, b] => [a.letter.clone(), b.letter.clone()],
        _ => return Err(Error::Invalid("the solver needs a two-tetrahedron scheme".into())),
    };
    let mut roots = vec![Cyclo::zero()];
    roots.extend((0..3).map(|k| Cyclo::zeta_pow(4 + 8 * k)));
    let mut candidates = Vec::new();
    let mut admissible = Vec::new();
    for w in roots {
        if !(w.clone() * &w + &w.conj()).is_zero() {
            return Err(Error::Invalid(format!("{w} does not solve w^2 + conj(w) = 0")));
        }
        if w.is_zero() {
            candidates.push(SolverCandidate { w, accepted: false, reason: "w = 0: degenerate tetrahedron".into() });
            continue;
        }
        if w.is_real() {
            candidates.push(SolverCandidate {
                w,
                accepted: false,
                reason: "real parameter: degenerate tetrahedron".into(),
            });
            continue;
        }
        admissible.push(w);
    }
    let mut solutions = Vec::new();
    for w in &admissible {
        let mut reason = String::new();
        let mut satisfied = false;
        for z in &admissible {
            let mut params = BTreeMap::new();
            params.insert(z_letter.clone(), regular_params(z)?);
            params.insert(w_letter.clone(), regular_params(w)?);
            let eqs = edge_equations(scheme, &CornerConvention::PINNED, &params)?;
            if eqs.iter().all(|e| e.holds()) {
                satisfied = true;
            }
        }
        if !satisfied {
            reason.push_str("edge equations fail for every z1");
        } else if !regular_height(w)?.is_positive()? {
            reason.push_str("negative regular height: mirrored tetrahedron");
        }
        let accepted = reason.is_empty();
        if accepted {
            reason.push_str("solves the edge equations with positive height");
            solutions.push(w.clone());
        }
        candidates.push(SolverCandidate { w: w.clone(), accepted, reason });
    }
    Ok(SolverOutcome { candidates, solutions })
}
