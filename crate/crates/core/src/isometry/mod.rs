//! Isometries of complex hyperbolic 2-space acting on the Heisenberg boundary.
//!
//! Matrices are kept in U(2,1) up to scale rather than forced into SU(2,1):
//! a cube root of the determinant need not exist in Q(ζ₂₄).

mod classify;
mod matrix;
mod triples;
mod word;

use std::fmt;

pub use classify::{classify, discriminant, IsometryClass, IsometryKind};
pub use matrix::Mat3;
pub use triples::{anti_from_triples, from_triples, normalizer};
pub use word::{eval_word, Word, WordItem};

use crate::error::{Error, Result};
use crate::heisenberg::{lift, project, HPoint};
use crate::scalars::{in_ring, Cyclo, Ring, Scalar};

/// A projective class of form-unitary matrices. When `holo` is false the map is
/// anti-holomorphic: input coordinates are conjugated before applying M.
#[derive(Clone, Debug)]
pub struct ProjIsometry<S> {
    pub m: Mat3<S>,
    pub holo: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum UnitaryCheck<S> {
    /// M*JM = λJ.
    Ok { lambda: S },
    /// The first entry of M*JM breaking the pattern.
    Fail { row: usize, col: usize, value: S },
}

impl<S> UnitaryCheck<S> {
    pub fn is_ok(&self) -> bool {
        matches!(self, UnitaryCheck::Ok { .. })
    }
}

/// Exact test of M*JM = λJ with λ real and positive.
pub fn check_unitary<S: Scalar>(m: &Mat3<S>) -> Result<UnitaryCheck<S>> {
    if m.det().is_zero() {
        return Err(Error::Singular);
    }
    let g = m.adjoint().mul(&Mat3::form()).mul(m);
    let lambda = g.get(0, 2).clone();
    if !lambda.is_real() || !lambda.is_positive()? {
        return Ok(UnitaryCheck::Fail { row: 0, col: 2, value: lambda });
    }
    for i in 0..3 {
        for j in 0..3 {
            let expect = if i + j == 2 { lambda.clone() } else { S::zero() };
            if !g.get(i, j).eq_val(&expect) {
                return Ok(UnitaryCheck::Fail { row: i, col: j, value: g.get(i, j).clone() });
            }
        }
    }
    Ok(UnitaryCheck::Ok { lambda })
}

impl<S: Scalar> ProjIsometry<S> {
    pub fn holomorphic(m: Mat3<S>) -> Self {
        ProjIsometry { m, holo: true }
    }

    pub fn anti(m: Mat3<S>) -> Self {
        ProjIsometry { m, holo: false }
    }

    pub fn identity() -> Self {
        Self::holomorphic(Mat3::identity())
    }

    /// The involution with rows (0,0,1), (0,−1,0), (1,0,0). It swaps 0 and ∞
    /// and agrees with the inversion formula of [`crate::heisenberg::inversion_i`]
    /// up to a dilation by 2.
    pub fn picard_i() -> Self {
        let m = Mat3::from_fn(|i, j| match (i, j) {
            (0, 2) | (2, 0) => S::one(),
            (1, 1) => -S::one(),
            _ => S::zero(),
        });
        Self::holomorphic(m)
    }

    /// Left Heisenberg translation by (z₀, t₀).
    pub fn translation(z0: &S, t0: &S) -> Self {
        let corner = (S::i() * t0 - &z0.abs2()) * &S::from_ratio(1, 2);
        let m = Mat3::from_fn(|i, j| match (i, j) {
            (0, 1) => -z0.conj(),
            (0, 2) => corner.clone(),
            (1, 2) => z0.clone(),
            (a, b) if a == b => S::one(),
            _ => S::zero(),
        });
        Self::holomorphic(m)
    }

    /// (z, t) ↦ (az, |a|²t).
    pub fn dilation(a: &S) -> Self {
        Self::holomorphic(Mat3::diag([a.abs2(), a.clone(), S::one()]))
    }

    /// self ∘ other.
    pub fn compose(&self, other: &Self) -> Self {
        let rhs = if self.holo { other.m.clone() } else { other.m.conj() };
        ProjIsometry { m: self.m.mul(&rhs), holo: self.holo == other.holo }
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = self.m.inverse()?;
        Ok(ProjIsometry { m: if self.holo { inv } else { inv.conj() }, holo: self.holo })
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if self.holo {
            return Ok(Self::holomorphic(self.m.pow(k)?));
        }
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base);
        }
        Ok(acc)
    }

    /// h ∘ self ∘ h⁻¹.
    pub fn conjugated_by(&self, h: &Self) -> Result<Self> {
        Ok(h.compose(self).compose(&h.inverse()?))
    }

    pub fn act(&self, p: &HPoint<S>) -> Result<HPoint<S>> {
        let v = lift(p);
        let v = if self.holo { v } else { v.conj() };
        project(&self.m.mul_vec(&v))
    }

    /// Projective equality: the scale λ with self.m = λ·other.m.
    pub fn ratio_to(&self, other: &Self) -> Option<S> {
        if self.holo != other.holo {
            return None;
        }
        self.m.ratio_to(&other.m)
    }

    pub fn is_identity(&self) -> bool {
        self.holo && self.m.scalar_value().is_some()
    }

    pub fn to_approx(&self) -> ProjIsometry<crate::scalars::Approx>
    where
        S: Into<crate::scalars::Approx> + Clone,
    {
        ProjIsometry { m: self.m.map(|x| x.clone().into()), holo: self.holo }
    }
}

impl<S: fmt::Display> fmt::Display for ProjIsometry<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.holo {
            f.write_str("anti ")?;
        }
        write!(f, "{}", self.m)
    }
}

/// Reads a unipotent upper-triangular isometry fixing ∞ as the Heisenberg
/// translation by (z₀, t₀); its third column is then lift(z₀, t₀).
pub fn translation_part<S: Scalar>(g: &ProjIsometry<S>) -> Result<(S, S)> {
    if !g.holo {
        return Err(Error::NotUnipotent("anti-holomorphic".into()));
    }
    let k = g.m.get(2, 2);
    if k.is_zero() {
        return Err(Error::NotUnipotent("does not fix infinity".into()));
    }
    let n = g.m.scale(&k.inv()?);
    for (i, j) in [(1, 0), (2, 0), (2, 1)] {
        if !n.get(i, j).is_zero() {
            return Err(Error::NotUnipotent(format!("entry ({i},{j}) = {} is not zero", n.get(i, j))));
        }
    }
    for i in 0..2 {
        if !n.get(i, i).eq_val(&S::one()) {
            return Err(Error::NotUnipotent(format!("diagonal entry {i} = {}", n.get(i, i))));
        }
    }
    let z0 = n.get(1, 2).clone();
    let t0 = n.get(0, 2).im() * &S::from_int(2);
    let expected = ProjIsometry::translation(&z0, &t0);
    if let Some((i, j)) = expected.m.first_disagreement(&n) {
        return Err(Error::NotUnipotent(format!("entry ({i},{j}) breaks the translation form")));
    }
    Ok((z0, t0))
}

pub fn matrix_in_ring(g: &ProjIsometry<Cyclo>, ring: Ring) -> bool {
    g.m.0.iter().flatten().all(|x| in_ring(x, ring))
}

impl From<Cyclo> for crate::scalars::Approx {
    fn from(x: Cyclo) -> Self {
        crate::scalars::approx_of(&x)
    }
}
