use std::f64::consts::PI;

use super::{herm, lift, HPoint};
use crate::error::{Error, Result};
use crate::scalars::{Scalar, Sign};

/// η = −⟨p̂₁,p̂₂⟩⟨p̂₂,p̂₃⟩⟨p̂₃,p̂₁⟩. The Cartan invariant is arg η ∈ [−π/2, π/2].
///
/// The angle itself is transcendental, so comparisons go through η.
#[derive(Clone, Debug, PartialEq)]
pub struct TripleProduct<S> {
    pub eta: S,
}

impl<S: Scalar> TripleProduct<S> {
    /// Floating value of the angle. Re η = 0 maps to ±π/2 by the sign of Im η.
    pub fn angle(&self) -> f64 {
        if self.eta.re().is_zero() {
            return match self.eta.im().sign() {
                Ok(Sign::Negative) => -PI / 2.0,
                _ => PI / 2.0,
            };
        }
        self.eta.to_complex().arg()
    }

    /// tan 𝔸 = Im η / Re η, or `None` when 𝔸 = ±π/2.
    pub fn tan(&self) -> Option<S> {
        self.eta.im().checked_div(&self.eta.re()).ok()
    }

    /// 𝔸 = ±π/2: the three points lie on a common chain.
    pub fn is_right_angle(&self) -> bool {
        self.eta.re().is_zero()
    }

    /// Equal invariants: η₁·η̄₂ is real and positive.
    pub fn same_as(&self, other: &Self) -> Result<bool> {
        positive_real(&(self.eta.clone() * &other.eta.conj()))
    }

    /// Opposite invariants: η₁·η₂ is real and positive.
    pub fn opposite_of(&self, other: &Self) -> Result<bool> {
        positive_real(&(self.eta.clone() * &other.eta))
    }
}

fn positive_real<S: Scalar>(w: &S) -> Result<bool> {
    if !w.is_real() {
        return Ok(false);
    }
    w.is_positive()
}

pub fn cartan<S: Scalar>(p1: &HPoint<S>, p2: &HPoint<S>, p3: &HPoint<S>) -> Result<TripleProduct<S>> {
    let (a, b, c) = (lift(p1), lift(p2), lift(p3));
    let ab = herm(&a, &b);
    let bc = herm(&b, &c);
    let ca = herm(&c, &a);
    // Distinct null vectors never pair to zero in signature (2,1).
    for (v, (x, y)) in [(&ab, (p1, p2)), (&bc, (p2, p3)), (&ca, (p3, p1))] {
        if v.is_zero() {
            return Err(Error::CoincidentPoints(format!("{x} and {y}")));
        }
    }
    Ok(TripleProduct { eta: -(ab * &bc * &ca) })
}

/// −𝔸(x₂,x₃,x₄) + 𝔸(x₁,x₃,x₄) − 𝔸(x₁,x₂,x₄) + 𝔸(x₁,x₂,x₃), reduced to (−π, π].
pub fn cocycle<S: Scalar>(x1: &HPoint<S>, x2: &HPoint<S>, x3: &HPoint<S>, x4: &HPoint<S>) -> Result<f64> {
    let s = -cartan(x2, x3, x4)?.angle() + cartan(x1, x3, x4)?.angle() - cartan(x1, x2, x4)?.angle()
        + cartan(x1, x2, x3)?.angle();
    let r = s.rem_euclid(2.0 * PI);
    Ok(if r > PI { r - 2.0 * PI } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Cyclo;

    fn pt(z: Cyclo, t: Cyclo) -> HPoint<Cyclo> {
        HPoint::new(z, t)
    }

    #[test]
    fn tangent_at_normalized_triple() {
        let tp = cartan(&HPoint::Infinity, &HPoint::origin(), &pt(Cyclo::one(), Cyclo::sqrt3())).unwrap();
        assert_eq!(tp.tan().unwrap(), Cyclo::sqrt3());
        assert!((tp.angle() - PI / 3.0).abs() < 1e-12);
        let flat =
            cartan(&HPoint::Infinity, &HPoint::origin(), &pt(Cyclo::from_int(2) + Cyclo::i(), Cyclo::zero())).unwrap();
        assert!(flat.tan().unwrap().is_zero());
    }

    #[test]
    fn chain_triples_are_right_angles() {
        let tp = cartan(&HPoint::Infinity, &HPoint::origin(), &pt(Cyclo::zero(), Cyclo::one())).unwrap();
        assert!(tp.is_right_angle());
        assert_eq!(tp.tan(), None);
        assert!((tp.angle() - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn coincident_points_error() {
        let p = pt(Cyclo::one(), Cyclo::zero());
        assert!(matches!(cartan(&p, &p, &HPoint::Infinity), Err(Error::CoincidentPoints(_))));
    }

    #[test]
    fn same_and_opposite() {
        let a = cartan(&HPoint::Infinity, &HPoint::origin(), &pt(Cyclo::one(), Cyclo::sqrt3())).unwrap();
        let b =
            cartan(&HPoint::Infinity, &HPoint::origin(), &pt(Cyclo::from_int(2), Cyclo::from_int(4) * Cyclo::sqrt3()))
                .unwrap();
        let c = cartan(&HPoint::Infinity, &HPoint::origin(), &pt(Cyclo::one(), -Cyclo::sqrt3())).unwrap();
        assert!(a.same_as(&b).unwrap());
        assert!(!a.same_as(&c).unwrap());
        assert!(a.opposite_of(&c).unwrap());
    }
}
