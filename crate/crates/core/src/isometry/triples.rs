//! Isometries determined by triples of boundary points.
//!
//! Each triple is normalized to (∞, 0, (1, tan 𝔸)) by elementary maps; two
//! triples with the same Cartan invariant share that normal form.

use super::ProjIsometry;
use crate::error::{Error, Result};
use crate::heisenberg::{cartan, h_inv, iota_x, HPoint};
use crate::scalars::Scalar;

fn translate_to_origin<S: Scalar>(p: &HPoint<S>) -> Result<ProjIsometry<S>> {
    match h_inv(p)? {
        HPoint::Finite { z, t } => Ok(ProjIsometry::translation(&z, &t)),
        HPoint::Infinity => unreachable!("inverse of a finite point is finite"),
    }
}

/// A holomorphic isometry sending (p₁, p₂, p₃) to (∞, 0, (1, tan 𝔸)).
///
/// Built from a translation and I (moving p₁ to ∞), a translation fixing ∞
/// (moving p₂ to 0) and the stabilizer map (z, t) ↦ (az, |a|²t).
pub fn normalizer<S: Scalar>(triple: &[HPoint<S>; 3]) -> Result<ProjIsometry<S>> {
    let tp = cartan(&triple[0], &triple[1], &triple[2])?;
    if tp.is_right_angle() {
        return Err(Error::Degenerate("the three points lie on one chain".into()));
    }
    let mut g = ProjIsometry::identity();
    if !triple[0].is_infinity() {
        g = ProjIsometry::picard_i().compose(&translate_to_origin(&triple[0])?);
    }
    let p2 = g.act(&triple[1])?;
    g = translate_to_origin(&p2)?.compose(&g);
    let HPoint::Finite { z, .. } = g.act(&triple[2])? else { unreachable!("only p₁ maps to ∞") };
    let a = z.inv().map_err(|_| Error::Degenerate("the three points lie on one chain".into()))?;
    Ok(ProjIsometry::dilation(&a).compose(&g))
}

/// The isometry with act(g, srcᵢ) = dstᵢ: holomorphic when the Cartan
/// invariants agree, anti-holomorphic when they are opposite. A zero invariant
/// admits both; the holomorphic map is returned.
pub fn from_triples<S: Scalar>(src: &[HPoint<S>; 3], dst: &[HPoint<S>; 3]) -> Result<ProjIsometry<S>> {
    let a = cartan(&src[0], &src[1], &src[2])?;
    let b = cartan(&dst[0], &dst[1], &dst[2])?;
    let back = normalizer(dst)?.inverse()?;
    if a.same_as(&b)? {
        return Ok(back.compose(&normalizer(src)?));
    }
    if a.opposite_of(&b)? {
        // conj(lift(z, t)) = lift(z̄, −t), so an anti-holomorphic map is a
        // holomorphic one applied after ι_x.
        let mirrored = [iota_x(&src[0]), iota_x(&src[1]), iota_x(&src[2])];
        let m = back.compose(&normalizer(&mirrored)?).m;
        return Ok(ProjIsometry::anti(m));
    }
    Err(Error::CartanMismatch(format!("source angle {:.6} vs target angle {:.6}", a.angle(), b.angle())))
}

/// The anti-holomorphic isometry with act(g, srcᵢ) = dstᵢ; requires opposite
/// (or zero) Cartan invariants.
pub fn anti_from_triples<S: Scalar>(src: &[HPoint<S>; 3], dst: &[HPoint<S>; 3]) -> Result<ProjIsometry<S>> {
    let mirrored = [iota_x(&src[0]), iota_x(&src[1]), iota_x(&src[2])];
    let g = from_triples(&mirrored, dst)?;
    if !g.holo {
        return Err(Error::CartanMismatch("invariants are not opposite".into()));
    }
    Ok(ProjIsometry::anti(g.m))
}
