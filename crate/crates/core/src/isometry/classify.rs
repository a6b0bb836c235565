//! Trace classification of holomorphic isometries.
//!
//! For an SU(2,1) representative with trace τ the discriminant is
//! f(τ) = |τ|⁴ − 8 Re(τ³) + 18|τ|² − 27. For M with M*JM = λJ and det M = d,
//! substituting τ/c with c³ = d, |c|² = λ gives
//! f = |τ|⁴/λ² − 8 Re(τ³/d) + 18|τ|²/λ − 27, which needs no cube root.

use super::{check_unitary, Mat3, ProjIsometry, UnitaryCheck};
use crate::error::{Error, Result};
use crate::scalars::{Cyclo, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum IsometryKind {
    Identity,
    Loxodromic,
    RegularElliptic,
    Parabolic,
    SpecialElliptic,
}

impl IsometryKind {
    pub fn is_elliptic(self) -> bool {
        matches!(self, IsometryKind::RegularElliptic | IsometryKind::SpecialElliptic)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IsometryClass {
    pub kind: IsometryKind,
    pub discriminant: Cyclo,
    /// Least n ≤ 24 with Mⁿ scalar, for elliptic elements.
    pub elliptic_order: Option<u32>,
}

/// The scale-invariant trace discriminant of a form-unitary matrix.
pub fn discriminant(m: &Mat3<Cyclo>) -> Result<Cyclo> {
    let lambda = match check_unitary(m)? {
        UnitaryCheck::Ok { lambda } => lambda,
        UnitaryCheck::Fail { row, col, value } => {
            return Err(Error::Invalid(format!("not form-unitary: entry ({row},{col}) of M*JM is {value}")))
        }
    };
    let tau = m.trace();
    let d = m.det();
    let t2 = tau.abs2();
    let lam_inv = lambda.inv()?;
    let cube = tau.pow(3).checked_div(&d)?;
    let f = &t2 * &t2 * &lam_inv * &lam_inv - cube.re().scale_ratio(8, 1) + t2.scale_ratio(18, 1) * lam_inv
        - Cyclo::from_int(27);
    Ok(f)
}

pub fn classify(g: &ProjIsometry<Cyclo>) -> Result<IsometryClass> {
    if !g.holo {
        return Err(Error::AntiHolomorphic);
    }
    let f = discriminant(&g.m)?;
    let kind = if g.m.scalar_value().is_some() {
        IsometryKind::Identity
    } else {
        match crate::scalars::sign_real(&f)? {
            Sign::Positive => IsometryKind::Loxodromic,
            Sign::Negative => IsometryKind::RegularElliptic,
            Sign::Zero if is_semisimple(&g.m) => IsometryKind::SpecialElliptic,
            Sign::Zero => IsometryKind::Parabolic,
        }
    };
    let elliptic_order = if kind.is_elliptic() { elliptic_order(&g.m) } else { None };
    Ok(IsometryClass { kind, discriminant: f, elliptic_order })
}

fn elliptic_order(m: &Mat3<Cyclo>) -> Option<u32> {
    let mut p = m.clone();
    for n in 1..=24 {
        if p.scalar_value().is_some() {
            return Some(n);
        }
        p = p.mul(m);
    }
    None
}

/// Minimal polynomial squarefree ⟺ q(M) = 0 for q = p / gcd(p, p′), p the
/// characteristic polynomial.
fn is_semisimple(m: &Mat3<Cyclo>) -> bool {
    let c0 = -m.det();
    let c1 = m.principal_minor_sum();
    let c2 = -m.trace();
    let p = Poly::new(vec![c0, c1, c2, Cyclo::one()]);
    let g = p.gcd(&p.derivative());
    let q = p.div_exact(&g);
    q.eval_matrix(m).0.iter().flatten().all(Cyclo::is_zero)
}

/// Dense univariate polynomial over Q(ζ₂₄), lowest degree first.
#[derive(Clone, Debug, PartialEq)]
struct Poly(Vec<Cyclo>);

impl Poly {
    fn new(mut c: Vec<Cyclo>) -> Self {
        while c.last().is_some_and(Cyclo::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn derivative(&self) -> Self {
        Poly::new(self.0.iter().enumerate().skip(1).map(|(k, c)| c * &Cyclo::from_int(k as i64)).collect())
    }

    fn monic(&self) -> Self {
        let lead = self.0.last().expect("nonzero polynomial").inv().expect("nonzero lead");
        Poly(self.0.iter().map(|c| c * &lead).collect())
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.0[dd].inv().expect("nonzero lead");
        let mut r = self.0.clone();
        let mut q = vec![Cyclo::zero(); self.0.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() * &lead_inv;
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] = &r[k + i] - &(&c * dc);
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(Cyclo::is_zero) {
                r.pop();
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while b.degree().is_some() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.degree().is_none());
        q
    }

    fn eval_matrix(&self, m: &Mat3<Cyclo>) -> Mat3<Cyclo> {
        let mut acc = Mat3::from_fn(|_, _| Cyclo::zero());
        for c in self.0.iter().rev() {
            acc = acc.mul(m);
            for i in 0..3 {
                acc.0[i][i] = &acc.0[i][i] + c;
            }
        }
        acc
    }
}
