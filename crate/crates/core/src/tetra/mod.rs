//! CR ideal tetrahedra: four boundary points with a choice of chain segments
//! as edges, and their complex and real invariants.
//!
//! In normalized position p₁ = ∞, p₂ = 0, q₁ = (1, t), q₂ = (z, s|z|²) the
//! invariants are z₁ = z, z₁′ = (i+t)/(z̄(i+s)),
//! z̃₁ = z(t+i−z̄(i+s))/((z−1)(t−i)) and z̃₁′ = (−(i+t)+z̄(i+s))/(z̄(z−1)(i−s)),
//! each with companions x₂ = 1/(1−x₁), x₃ = 1−1/x₁.

mod faces;

use std::collections::BTreeMap;
use std::fmt;

pub use faces::{face_sample, faces_disjoint, mesh_obj, Disjointness, Face, FacePair, SampleOptions, FACES};

use crate::error::{Error, Result};
use crate::heisenberg::{cartan, chain_through, HPoint, Orientation};
use crate::isometry::{anti_from_triples, normalizer, ProjIsometry};
use crate::scalars::{Cyclo, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub enum Vertex {
    P1,
    P2,
    Q1,
    Q2,
}

impl Vertex {
    pub const ALL: [Vertex; 4] = [Vertex::P1, Vertex::P2, Vertex::Q1, Vertex::Q2];

    pub fn name(self) -> &'static str {
        match self {
            Vertex::P1 => "p1",
            Vertex::P2 => "p2",
            Vertex::Q1 => "q1",
            Vertex::Q2 => "q2",
        }
    }

    pub fn parse(s: &str) -> Option<Vertex> {
        Vertex::ALL.into_iter().find(|v| v.name() == s)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Four boundary points p₁, p₂, q₁, q₂ and optional explicit edge segments.
/// An edge listed as (a, b) with orientation o is the segment from a to b
/// travelled in direction o; unlisted edges use the default segment.
#[derive(Clone, Debug)]
pub struct Tetrahedron<S> {
    pub vertices: [HPoint<S>; 4],
    pub edges: BTreeMap<(Vertex, Vertex), Orientation>,
}

impl<S: Scalar> Tetrahedron<S> {
    pub fn new(p1: HPoint<S>, p2: HPoint<S>, q1: HPoint<S>, q2: HPoint<S>) -> Result<Self> {
        let vertices = [p1, p2, q1, q2];
        for a in 0..4 {
            for b in a + 1..4 {
                if vertices[a].same(&vertices[b]) {
                    return Err(Error::CoincidentPoints(format!("{} and {}", Vertex::ALL[a], Vertex::ALL[b])));
                }
            }
        }
        for (a, b, c) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
            if chain_through(&vertices[a], &vertices[b])?.contains(&vertices[c]) {
                return Err(Error::Degenerate(format!(
                    "{}, {} and {} lie on one chain",
                    Vertex::ALL[a],
                    Vertex::ALL[b],
                    Vertex::ALL[c]
                )));
            }
        }
        Ok(Tetrahedron { vertices, edges: BTreeMap::new() })
    }

    pub fn with_edge(mut self, a: Vertex, b: Vertex, o: Orientation) -> Self {
        self.edges.insert((a, b), o);
        self
    }

    pub fn vertex(&self, v: Vertex) -> &HPoint<S> {
        &self.vertices[v as usize]
    }

    /// Explicit orientation for the segment from a to b, if one was given.
    pub fn edge_choice(&self, a: Vertex, b: Vertex) -> Option<Orientation> {
        if let Some(&o) = self.edges.get(&(a, b)) {
            return Some(o);
        }
        // the same segment travelled backwards
        self.edges.get(&(b, a)).map(|&o| match o {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        })
    }

    /// Moves p₁, p₂, q₁ to ∞, 0, (1, t).
    pub fn normalized(&self) -> Result<Tetrahedron<S>> {
        let n = normalizer(&[self.vertices[0].clone(), self.vertices[1].clone(), self.vertices[2].clone()])?;
        let mut out = self.clone();
        for v in out.vertices.iter_mut() {
            *v = n.act(v)?;
        }
        Ok(out)
    }

    pub fn map<T: Scalar, F: Fn(&S) -> T>(&self, f: F) -> Tetrahedron<T> {
        Tetrahedron { vertices: std::array::from_fn(|k| self.vertices[k].map(&f)), edges: self.edges.clone() }
    }
}

impl Tetrahedron<Cyclo> {
    pub fn to_approx(&self) -> Tetrahedron<crate::scalars::Approx> {
        self.map(crate::scalars::approx_of)
    }
}

/// The special symmetric tetrahedron p₁ = (0, t), p₂ = (0, −t), q₁ = (1, 0),
/// q₂ = (u, 0).
pub fn special_tetrahedron<S: Scalar>(u: &S, t: &S) -> Result<Tetrahedron<S>> {
    Tetrahedron::new(
        HPoint::new(S::zero(), t.clone()),
        HPoint::new(S::zero(), -t.clone()),
        HPoint::new(S::one(), S::zero()),
        HPoint::new(u.clone(), S::zero()),
    )
}

/// p₁ = (0, 2+√3), p₂ = (0, −(2+√3)), q₁ = (ω, 0), q₂ = (1, 0).
pub fn standard_tetrahedron() -> Tetrahedron<Cyclo> {
    let h = Cyclo::from_int(2) + Cyclo::sqrt3();
    Tetrahedron::new(
        HPoint::new(Cyclo::zero(), h.clone()),
        HPoint::new(Cyclo::zero(), -h),
        HPoint::new(Cyclo::omega(), Cyclo::zero()),
        HPoint::new(Cyclo::one(), Cyclo::zero()),
    )
    .expect("standard tetrahedron is non-degenerate")
}

/// p₁ = (0, 1+√2), p₂ = (0, −(1+√2)), q₁ = (1, 0), q₂ = (i, 0).
pub fn whitehead_tetrahedron() -> Tetrahedron<Cyclo> {
    special_tetrahedron(&Cyclo::i(), &(Cyclo::one() + Cyclo::sqrt2())).expect("non-degenerate")
}

/// Which of the four vertex invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub enum Family {
    Plain,
    Prime,
    Tilde,
    TildePrime,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Plain, Family::Prime, Family::Tilde, Family::TildePrime];
}

/// The invariants z₁, z₁′, z̃₁, z̃₁′ and the real parameters t, s.
#[derive(Clone, Debug, PartialEq)]
pub struct TetraParams<S> {
    pub z: S,
    pub z_prime: S,
    pub z_tilde: S,
    pub z_tilde_prime: S,
    pub t: S,
    pub s: S,
}

/// x₂ = 1/(1 − x₁) and x₃ = 1 − 1/x₁.
pub fn companions<S: Scalar>(x1: &S) -> Result<[S; 3]> {
    let one = S::one();
    let x2 = (one.clone() - x1).inv().map_err(|_| Error::Degenerate(format!("invariant {x1} equals 1")))?;
    let x3 = one - &x1.inv().map_err(|_| Error::Degenerate("invariant equals 0".into()))?;
    Ok([x1.clone(), x2, x3])
}

impl<S: Scalar> TetraParams<S> {
    pub fn first(&self, f: Family) -> &S {
        match f {
            Family::Plain => &self.z,
            Family::Prime => &self.z_prime,
            Family::Tilde => &self.z_tilde,
            Family::TildePrime => &self.z_tilde_prime,
        }
    }

    /// (x₁, x₂, x₃) for one family.
    pub fn family(&self, f: Family) -> Result<[S; 3]> {
        companions(self.first(f))
    }

    pub fn is_symmetric(&self) -> bool {
        self.t.eq_val(&self.s)
    }

    /// t(1 − Re z) = Im z, with Re z ≠ 1.
    pub fn is_regular(&self) -> Result<bool> {
        let re = self.z.re();
        if re.eq_val(&S::one()) {
            return Err(Error::Degenerate("Re z = 1".into()));
        }
        Ok(self.is_symmetric() && (self.t.clone() * &(S::one() - &re)).eq_val(&self.z.im()))
    }
}

/// Invariants of ∞, 0, (1, t), (z, s|z|²).
pub fn params_from_normalized<S: Scalar>(z: &S, t: &S, s: &S) -> Result<TetraParams<S>> {
    let one = S::one();
    let i = S::i();
    if z.is_zero() || z.eq_val(&one) {
        return Err(Error::Degenerate(format!("z = {z}")));
    }
    let zb = z.conj();
    let i_t = i.clone() + t;
    let i_s = i.clone() + s;
    let zm1 = z.clone() - &one;
    let deg = |_| Error::Degenerate("vanishing denominator".to_string());
    let z_prime = i_t.clone().checked_div(&(zb.clone() * &i_s)).map_err(deg)?;
    let z_tilde = (z.clone() * &(i_t.clone() - &(zb.clone() * &i_s)))
        .checked_div(&(zm1.clone() * &(t.clone() - &i)))
        .map_err(deg)?;
    let z_tilde_prime = (zb.clone() * &i_s - &i_t).checked_div(&(zb * &zm1 * &(i - s))).map_err(deg)?;
    Ok(TetraParams { z: z.clone(), z_prime, z_tilde, z_tilde_prime, t: t.clone(), s: s.clone() })
}

/// Normalizes T and reads off its invariants.
pub fn params_from_points<S: Scalar>(tet: &Tetrahedron<S>) -> Result<TetraParams<S>> {
    let n = tet.normalized()?;
    let HPoint::Finite { t, .. } = &n.vertices[2] else { unreachable!("q₁ is finite after normalizing") };
    let HPoint::Finite { z, t: h } = &n.vertices[3] else { unreachable!("q₂ is finite after normalizing") };
    let s = h.checked_div(&z.abs2()).map_err(|_| Error::Degenerate("q₂ lies over the origin".into()))?;
    params_from_normalized(z, t, &s)
}

/// Recovers (t, s) from the four complex invariants.
pub fn ts_from_params<S: Scalar>(z: &S, zp: &S, zt: &S, ztp: &S) -> Result<(S, S)> {
    let one = S::one();
    let zzp = z.clone() * zp;
    let ztzp = zt.clone() * zp;
    let ztzpz = ztzp.clone() * z;
    let t_num = zzp.clone() - z - &ztzp + &ztzpz;
    let t_den = -zzp + z - &ztzp + &ztzpz;
    let ztpz = ztp.clone() * z;
    let s_num = zp.clone() - &one - ztp + &ztpz;
    let s_den = -zp.clone() + &one - ztp + &ztpz;
    let deg = |_| Error::Degenerate("degenerate configuration".to_string());
    let t = S::i() * &t_num.checked_div(&t_den).map_err(deg)?;
    let s = S::i() * &s_num.checked_div(&s_den).map_err(deg)?;
    Ok((t, s))
}

/// Tangents of 𝔸(p₁,p₂,q₁), 𝔸(p₁,q₁,q₂), 𝔸(p₁,p₂,q₂), 𝔸(p₂,q₁,q₂) for the
/// normalized tetrahedron; `None` marks an invariant equal to ±π/2.
pub fn cartan_tangents<S: Scalar>(z: &S, t: &S, s: &S) -> Result<[Option<S>; 4]> {
    let one = S::one();
    let i = S::i();
    if z.is_zero() || z.eq_val(&one) {
        return Err(Error::Degenerate(format!("z = {z}")));
    }
    let two = S::from_int(2);
    let n2 = z.abs2();
    let b_num = n2.clone() * s - t + &(z.im() * &two);
    let b = b_num.checked_div(&(z.clone() - &one).abs2()).ok();
    let d_num = (s.clone() - t) * &z.re() * &two
        + &((one.clone() + &(t.clone() * s)) * &z.im() * &two)
        + &(t.clone() * &(one.clone() + &(s.clone() * s)) * &n2)
        - &(s.clone() * &(one + &(t.clone() * t)));
    let d_den = ((s.clone() - &i) * z + &i - t).abs2();
    let d = d_num.checked_div(&d_den).ok();
    Ok([Some(t.clone()), b, Some(s.clone()), d])
}

/// Invariants of the special tetrahedron (0, t), (0, −t), (1, 0), (u, 0):
/// z₁ = u and z̃₁ = (t+i)²/(t−i)², both primes equal to their unprimed values
/// because |u| = |z̃₁| = 1, and normalized t = s = (t² − 1)/(2t).
pub fn special_symmetric<S: Scalar>(u: &S, t: &S) -> Result<TetraParams<S>> {
    if !(u.abs2() - &S::one()).is_zero() {
        return Err(Error::Invalid(format!("direction {u} is not a unit")));
    }
    if !t.is_real() || !t.is_positive()? {
        return Err(Error::Invalid(format!("height {t} is not positive")));
    }
    let i = S::i();
    let a = t.clone() + &i;
    let b = t.clone() - &i;
    let z_tilde = (a.clone() * &a).checked_div(&(b.clone() * &b))?;
    let tn = (t.clone() * t - &S::one()).checked_div(&(t.clone() * &S::from_int(2)))?;
    Ok(TetraParams { z: u.clone(), z_prime: u.clone(), z_tilde_prime: z_tilde.clone(), z_tilde, t: tn.clone(), s: tn })
}

pub fn is_symmetric<S: Scalar>(tet: &Tetrahedron<S>) -> Result<bool> {
    Ok(params_from_points(tet)?.is_symmetric())
}

pub fn is_regular<S: Scalar>(tet: &Tetrahedron<S>) -> Result<bool> {
    let p = params_from_points(tet)?;
    if !p.is_symmetric() {
        return Ok(false);
    }
    p.is_regular()
}

/// The anti-holomorphic involution swapping p₁ ↔ p₂ and q₁ ↔ q₂.
pub fn symmetry_map<S: Scalar>(tet: &Tetrahedron<S>) -> Result<ProjIsometry<S>> {
    let [p1, p2, q1, q2] = &tet.vertices;
    let not_sym = || Error::Degenerate("tetrahedron is not symmetric".into());
    let g = anti_from_triples(&[p1.clone(), p2.clone(), q1.clone()], &[p2.clone(), p1.clone(), q2.clone()])
        .map_err(|_| not_sym())?;
    if !g.act(q2)?.same(q1) {
        return Err(not_sym());
    }
    Ok(g)
}

/// Direct Cartan invariants of the four faces, in the order of
/// [`cartan_tangents`].
pub fn face_invariants<S: Scalar>(tet: &Tetrahedron<S>) -> Result<[crate::heisenberg::TripleProduct<S>; 4]> {
    let [p1, p2, q1, q2] = &tet.vertices;
    Ok([cartan(p1, p2, q1)?, cartan(p1, q1, q2)?, cartan(p1, p2, q2)?, cartan(p2, q1, q2)?])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_tetrahedron_parameters() {
        let p = params_from_points(&standard_tetrahedron()).unwrap();
        let wb = Cyclo::omega().conj();
        assert_eq!(p.z, wb);
        assert_eq!(p.z_tilde, wb);
        assert_eq!(p.t, Cyclo::sqrt3());
        assert_eq!(p.s, Cyclo::sqrt3());
        assert!(p.is_regular().unwrap());
    }

    #[test]
    fn whitehead_tetrahedron_parameters() {
        let p = params_from_points(&whitehead_tetrahedron()).unwrap();
        assert_eq!(p.z, Cyclo::i());
        assert_eq!(p.z_tilde, Cyclo::i());
        assert_eq!((p.t.clone(), p.s.clone()), (Cyclo::one(), Cyclo::one()));
        assert!(p.is_regular().unwrap());
    }

    #[test]
    fn round_trip() {
        let z = Cyclo::from_int(2) + Cyclo::i() * Cyclo::from_int(3);
        let p = params_from_normalized(&z, &Cyclo::from_ratio(1, 3), &Cyclo::from_int(-2)).unwrap();
        let (t, s) = ts_from_params(&p.z, &p.z_prime, &p.z_tilde, &p.z_tilde_prime).unwrap();
        assert_eq!((t, s), (Cyclo::from_ratio(1, 3), Cyclo::from_int(-2)));
    }

    #[test]
    fn regularity_examples() {
        let p = params_from_normalized(&(Cyclo::i() * Cyclo::from_int(2)), &Cyclo::one(), &Cyclo::one()).unwrap();
        assert!(!p.is_regular().unwrap());
        let q = params_from_normalized(&(Cyclo::one() + Cyclo::i()), &Cyclo::one(), &Cyclo::one()).unwrap();
        assert!(q.is_regular().is_err());
    }

    #[test]
    fn special_values() {
        let sp = special_symmetric(&Cyclo::omega().conj(), &(Cyclo::from_int(2) + Cyclo::sqrt3())).unwrap();
        assert_eq!(sp.z_tilde, Cyclo::omega().conj());
        let sp = special_symmetric(&Cyclo::i(), &(Cyclo::one() + Cyclo::sqrt2())).unwrap();
        assert_eq!(sp.z_tilde, Cyclo::i());
        let sp = special_symmetric(&Cyclo::one(), &Cyclo::one()).unwrap();
        assert_eq!(sp.z_tilde, Cyclo::from_int(-1));
        assert!(special_symmetric(&Cyclo::from_int(2), &Cyclo::one()).is_err());
    }

    #[test]
    fn symmetry_of_the_standard_tetrahedron() {
        let tet = standard_tetrahedron();
        let g = symmetry_map(&tet).unwrap();
        assert!(!g.holo);
        let [p1, p2, q1, q2] = &tet.vertices;
        assert_eq!(&g.act(p1).unwrap(), p2);
        assert_eq!(&g.act(p2).unwrap(), p1);
        assert_eq!(&g.act(q1).unwrap(), q2);
        assert_eq!(&g.act(q2).unwrap(), q1);
        assert!(g.compose(&g).is_identity());
    }

    #[test]
    fn asymmetric_tetrahedron() {
        let z = Cyclo::from_int(2) + Cyclo::i();
        let tet = Tetrahedron::new(
            HPoint::Infinity,
            HPoint::origin(),
            HPoint::new(Cyclo::one(), Cyclo::one()),
            HPoint::new(z.clone(), z.abs2() * Cyclo::from_int(2)),
        )
        .unwrap();
        assert!(!is_symmetric(&tet).unwrap());
        assert!(symmetry_map(&tet).is_err());
    }
}
