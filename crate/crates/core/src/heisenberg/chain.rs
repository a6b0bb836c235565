use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use super::{herm, lift, HPoint, Vector3};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// A chain (ℂ-circle), stored by its polar vector.
///
/// Finite chains have polar vector ((R² − |y|² + ic)/2, y, 1): they project to
/// the circle |z − y| = R and carry t = c − 2 Im(z ȳ). Vertical chains over z₀
/// have polar vector (−z̄₀, 1, 0).
#[derive(Clone, Debug, PartialEq)]
pub struct Chain<S> {
    polar: Vector3<S>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ChainShape<S> {
    Vertical { z0: S },
    Finite { center: S, c: S, r2: S },
}

impl<S: Scalar> Chain<S> {
    pub fn vertical(z0: S) -> Self {
        Chain { polar: Vector3::new(-z0.conj(), S::one(), S::zero()) }
    }

    pub fn polar(&self) -> &Vector3<S> {
        &self.polar
    }

    pub fn is_vertical(&self) -> bool {
        self.polar.0[2].is_zero()
    }

    pub fn shape(&self) -> ChainShape<S> {
        let [x, y, _] = &self.polar.0;
        if self.is_vertical() {
            return ChainShape::Vertical { z0: -x.conj() };
        }
        ChainShape::Finite { center: y.clone(), c: x.im() * &S::from_int(2), r2: x.re() * &S::from_int(2) + &y.abs2() }
    }

    pub fn contains(&self, p: &HPoint<S>) -> bool {
        herm(&lift(p), &self.polar).is_zero()
    }

    /// Height of the chain point over z, for finite chains.
    pub fn height_at(&self, z: &S) -> Result<S> {
        match self.shape() {
            ChainShape::Vertical { .. } => Err(Error::VerticalChain),
            ChainShape::Finite { center, c, .. } => Ok(c - &((z.clone() * &center.conj()).im() * &S::from_int(2))),
        }
    }

    /// The chain point over center + R·u, for unit u.
    pub fn point(&self, u: &S) -> Result<HPoint<S>> {
        let ChainShape::Finite { center, r2, .. } = self.shape() else {
            return Err(Error::VerticalChain);
        };
        if !(u.abs2() - &S::one()).is_zero() {
            return Err(Error::Invalid(format!("direction {u} is not a unit")));
        }
        let r = r2
            .sqrt_real()
            .ok_or_else(|| Error::Degenerate(format!("radius sqrt({r2}) is not exact here; use the float backend")))?;
        let z = center + &(r * u);
        let t = self.height_at(&z)?;
        Ok(HPoint::Finite { z, t })
    }

    /// |⟨p̂, P⟩| in floating point, the membership residual used by sampling checks.
    pub fn residual(&self, p: &HPoint<S>) -> f64 {
        herm(&lift(p), &self.polar).to_complex().norm()
    }
}

/// The unique chain through two distinct boundary points.
pub fn chain_through<S: Scalar>(p: &HPoint<S>, q: &HPoint<S>) -> Result<Chain<S>> {
    if p.same(q) {
        return Err(Error::CoincidentPoints(format!("{p} and {q}")));
    }
    let (HPoint::Finite { z: zp, .. }, HPoint::Finite { z: zq, .. }) = (p, q) else {
        let z0 = match (p, q) {
            (HPoint::Finite { z, .. }, _) | (_, HPoint::Finite { z, .. }) => z.clone(),
            _ => unreachable!("both infinite points are equal"),
        };
        return Ok(Chain::vertical(z0));
    };
    let dz = zp.clone() - zq;
    if dz.is_zero() {
        return Ok(Chain::vertical(zp.clone()));
    }
    // ⟨v, (x, y, 1)⟩ = v₁ + v₂ȳ + x̄ = 0 for both lifts.
    let (lp, lq) = (lift(p), lift(q));
    let ybar = (lq.0[0].clone() - &lp.0[0]).checked_div(&dz)?;
    let xbar = -lp.0[0].clone() - &(zp.clone() * &ybar);
    Ok(Chain { polar: Vector3::new(xbar.conj(), ybar.conj(), S::one()) })
}

/// Direction of travel along a chain segment. On a finite chain `Positive`
/// is counter-clockwise in the z-projection; on a vertical chain it is
/// increasing t.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Positive,
    Negative,
}

/// One of the two arcs of a chain between two of its points.
#[derive(Clone, Debug)]
pub struct ChainSegment<S> {
    pub chain: Chain<S>,
    pub start: HPoint<S>,
    pub end: HPoint<S>,
    pub orientation: Orientation,
}

fn c64(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

impl<S: Scalar> ChainSegment<S> {
    /// Segment with an explicit orientation, or the default one: the shorter
    /// arc of a finite chain, the bounded piece of a vertical chain, and the
    /// half reaching +∞ when an endpoint is ∞.
    pub fn new(start: HPoint<S>, end: HPoint<S>, orientation: Option<Orientation>) -> Result<Self> {
        let chain = chain_through(&start, &end)?;
        let orientation = match orientation {
            Some(o) => o,
            None => default_orientation(&chain, &start, &end),
        };
        Ok(ChainSegment { chain, start, end, orientation })
    }

    /// Whether this segment passes through ∞ between two finite endpoints.
    pub fn through_infinity(&self) -> bool {
        match (&self.start, &self.end) {
            (HPoint::Finite { t: ta, .. }, HPoint::Finite { t: tb, .. }) if self.chain.is_vertical() => {
                let up = tb.to_complex().re > ta.to_complex().re;
                up != (self.orientation == Orientation::Positive)
            }
            _ => false,
        }
    }

    /// n ≥ 2 points from start to end. Half-rays toward ∞ are cut at height
    /// `ray_length` beyond their finite endpoint.
    pub fn sample(&self, n: usize, ray_length: f64) -> Result<Vec<[f64; 3]>> {
        let n = n.max(2);
        let frac = |k: usize| k as f64 / (n - 1) as f64;
        match self.chain.shape() {
            ChainShape::Finite { center, c, r2 } => {
                let (Some(a), Some(b)) = (self.start.to_xyz(), self.end.to_xyz()) else {
                    unreachable!("finite chains avoid ∞")
                };
                let y = center.to_complex();
                let (c, r) = (c.to_complex().re, r2.to_complex().re.max(0.0).sqrt());
                let ta = (Complex64::new(a[0], a[1]) - y).arg();
                let tb = (Complex64::new(b[0], b[1]) - y).arg();
                let delta = match self.orientation {
                    Orientation::Positive => (tb - ta).rem_euclid(TAU),
                    Orientation::Negative => -(ta - tb).rem_euclid(TAU),
                };
                Ok((0..n)
                    .map(|k| {
                        let z = y + Complex64::from_polar(r, ta + delta * frac(k));
                        let t = c - 2.0 * (z * y.conj()).im;
                        let [re, im] = c64(z);
                        [re, im, t]
                    })
                    .collect())
            }
            ChainShape::Vertical { z0 } => {
                let [x, y] = c64(z0.to_complex());
                let (t0, t1) = match (self.start.to_xyz(), self.end.to_xyz()) {
                    (Some(a), Some(b)) => {
                        if self.through_infinity() {
                            return Err(Error::Degenerate("segment passes through infinity".into()));
                        }
                        (a[2], b[2])
                    }
                    (Some(a), None) => {
                        let dir = if self.orientation == Orientation::Positive { 1.0 } else { -1.0 };
                        (a[2], a[2] + dir * ray_length)
                    }
                    (None, Some(b)) => {
                        let dir = if self.orientation == Orientation::Negative { 1.0 } else { -1.0 };
                        (b[2] + dir * ray_length, b[2])
                    }
                    (None, None) => unreachable!("distinct endpoints"),
                };
                Ok((0..n).map(|k| [x, y, t0 + (t1 - t0) * frac(k)]).collect())
            }
        }
    }

    /// Midpoint of the segment in (re z, im z, t): the witness that pins which
    /// arc was chosen.
    pub fn witness(&self, ray_length: f64) -> Result<[f64; 3]> {
        Ok(self.sample(3, ray_length)?[1])
    }
}

fn default_orientation<S: Scalar>(chain: &Chain<S>, start: &HPoint<S>, end: &HPoint<S>) -> Orientation {
    let xyz = (start.to_xyz(), end.to_xyz());
    match chain.shape() {
        ChainShape::Finite { center, .. } => {
            let (Some(a), Some(b)) = xyz else { unreachable!("finite chains avoid ∞") };
            let y = center.to_complex();
            let ta = (Complex64::new(a[0], a[1]) - y).arg();
            let tb = (Complex64::new(b[0], b[1]) - y).arg();
            if (tb - ta).rem_euclid(TAU) <= PI {
                Orientation::Positive
            } else {
                Orientation::Negative
            }
        }
        ChainShape::Vertical { .. } => match xyz {
            (Some(a), Some(b)) if b[2] >= a[2] => Orientation::Positive,
            (Some(_), Some(_)) => Orientation::Negative,
            (Some(_), None) => Orientation::Positive,
            _ => Orientation::Negative,
        },
    }
}
