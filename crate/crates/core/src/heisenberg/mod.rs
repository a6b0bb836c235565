//! The Heisenberg group C × R, compactified by a point at infinity, as the
//! boundary of complex hyperbolic 2-space.
//!
//! Points lift to null vectors of the Hermitian form
//! ⟨z, w⟩ = z₁w̄₃ + z₂w̄₂ + z₃w̄₁.

mod cartan;
mod chain;

use std::fmt;
use std::ops::Index;

pub use cartan::{cartan, cocycle, TripleProduct};
pub use chain::{chain_through, Chain, ChainSegment, ChainShape, Orientation};

use crate::error::{Error, Result};
use crate::scalars::{Approx, Cyclo, Scalar, Sign};

/// A boundary point: the distinguished point ∞ or Heisenberg coordinates (z, t).
#[derive(Clone, Debug, PartialEq)]
pub enum HPoint<S> {
    Infinity,
    Finite { z: S, t: S },
}

impl<S: Scalar> HPoint<S> {
    pub fn new(z: S, t: S) -> Self {
        HPoint::Finite { z, t }
    }

    /// Like [`HPoint::new`], rejecting a non-real height.
    pub fn checked(z: S, t: S) -> Result<Self> {
        if !t.is_real() {
            return Err(Error::NotReal(t.to_string()));
        }
        Ok(HPoint::Finite { z, t })
    }

    pub fn origin() -> Self {
        HPoint::Finite { z: S::zero(), t: S::zero() }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, HPoint::Infinity)
    }

    /// Point equality; within tolerance on the floating backend.
    pub fn same(&self, other: &Self) -> bool {
        match (self, other) {
            (HPoint::Infinity, HPoint::Infinity) => true,
            (HPoint::Finite { z, t }, HPoint::Finite { z: z2, t: t2 }) => z.eq_val(z2) && t.eq_val(t2),
            _ => false,
        }
    }

    pub fn map<T, F: Fn(&S) -> T>(&self, f: F) -> HPoint<T> {
        match self {
            HPoint::Infinity => HPoint::Infinity,
            HPoint::Finite { z, t } => HPoint::Finite { z: f(z), t: f(t) },
        }
    }

    /// (re z, im z, t), or `None` at infinity.
    pub fn to_xyz(&self) -> Option<[f64; 3]> {
        match self {
            HPoint::Infinity => None,
            HPoint::Finite { z, t } => {
                let z = z.to_complex();
                Some([z.re, z.im, t.to_complex().re])
            }
        }
    }
}

impl HPoint<Cyclo> {
    pub fn to_approx(&self) -> HPoint<Approx> {
        self.map(crate::scalars::approx_of)
    }
}

impl<S: fmt::Display> fmt::Display for HPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HPoint::Infinity => f.write_str("inf"),
            HPoint::Finite { z, t } => write!(f, "({z}, {t})"),
        }
    }
}

/// A vector in C^{2,1}. Lifts of boundary points are null; polar vectors of
/// chains are positive.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector3<S>(pub [S; 3]);

/// Homogeneous coordinates of a boundary point.
pub type NullVector<S> = Vector3<S>;

impl<S: Scalar> Vector3<S> {
    pub fn new(a: S, b: S, c: S) -> Self {
        Vector3([a, b, c])
    }

    pub fn scale(&self, k: &S) -> Self {
        Vector3(std::array::from_fn(|i| self.0[i].clone() * k))
    }

    pub fn conj(&self) -> Self {
        Vector3(std::array::from_fn(|i| self.0[i].conj()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(S::is_zero)
    }
}

impl<S> Index<usize> for Vector3<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.0[i]
    }
}

/// ⟨u, v⟩ = u₁v̄₃ + u₂v̄₂ + u₃v̄₁.
pub fn herm<S: Scalar>(u: &Vector3<S>, v: &Vector3<S>) -> S {
    u.0[0].clone() * &v.0[2].conj() + u.0[1].clone() * &v.0[1].conj() + u.0[2].clone() * &v.0[0].conj()
}

/// Sign of ⟨v, v⟩: positive, null or negative vector.
pub fn signature<S: Scalar>(v: &Vector3<S>) -> Result<Sign> {
    herm(v, v).sign()
}

/// (z, t) ↦ ((−|z|² + it)/2, z, 1) and ∞ ↦ (1, 0, 0).
pub fn lift<S: Scalar>(p: &HPoint<S>) -> NullVector<S> {
    match p {
        HPoint::Infinity => Vector3::new(S::one(), S::zero(), S::zero()),
        HPoint::Finite { z, t } => {
            let first = (S::i() * t - &z.abs2()) * &S::from_ratio(1, 2);
            Vector3::new(first, z.clone(), S::one())
        }
    }
}

/// Boundary point of a null vector: ∞ when v₃ = 0, else (v₂/v₃, 2 Im(v₁/v₃)).
pub fn project<S: Scalar>(v: &Vector3<S>) -> Result<HPoint<S>> {
    if v.0[2].is_zero() {
        if v.0[0].is_zero() {
            return Err(Error::Degenerate("vector is not a lift of a boundary point".into()));
        }
        return Ok(HPoint::Infinity);
    }
    let inv = v.0[2].inv()?;
    let z = v.0[1].clone() * &inv;
    let a = v.0[0].clone() * &inv;
    let t = a.im() * &S::from_int(2);
    Ok(HPoint::Finite { z, t })
}

fn finite_parts<S: Scalar>(p: &HPoint<S>) -> Result<(&S, &S)> {
    match p {
        HPoint::Infinity => Err(Error::InfinityOperand),
        HPoint::Finite { z, t } => Ok((z, t)),
    }
}

/// (z, t)·(z′, t′) = (z + z′, t + t′ + 2 Im(z z̄′)).
pub fn h_mul<S: Scalar>(p: &HPoint<S>, q: &HPoint<S>) -> Result<HPoint<S>> {
    let (z1, t1) = finite_parts(p)?;
    let (z2, t2) = finite_parts(q)?;
    let twist = (z1.clone() * &z2.conj()).im() * &S::from_int(2);
    Ok(HPoint::Finite { z: z1.clone() + z2, t: t1.clone() + t2 + &twist })
}

pub fn h_inv<S: Scalar>(p: &HPoint<S>) -> Result<HPoint<S>> {
    let (z, t) = finite_parts(p)?;
    Ok(HPoint::Finite { z: -z.clone(), t: -t.clone() })
}

/// I(z, t) = (z/(|z|² − it), −t/(|z|⁴ + t²)), swapping 0 and ∞.
pub fn inversion_i<S: Scalar>(p: &HPoint<S>) -> HPoint<S> {
    match p {
        HPoint::Infinity => HPoint::origin(),
        HPoint::Finite { z, t } => {
            let n2 = z.abs2();
            if n2.is_zero() && t.is_zero() {
                return HPoint::Infinity;
            }
            let denom = n2.clone() - &(S::i() * t);
            let zn = z.checked_div(&denom).expect("nonzero: |z|² − it vanishes only at the origin");
            let q = n2.clone() * &n2 + &(t.clone() * t);
            let tn = (-t.clone()).checked_div(&q).expect("nonzero away from the origin");
            HPoint::Finite { z: zn, t: tn }
        }
    }
}

/// ι_x(z, t) = (z̄, −t).
pub fn iota_x<S: Scalar>(p: &HPoint<S>) -> HPoint<S> {
    match p {
        HPoint::Infinity => HPoint::Infinity,
        HPoint::Finite { z, t } => HPoint::Finite { z: z.conj(), t: -t.clone() },
    }
}
