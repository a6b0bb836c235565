#![allow(dead_code)]

use crh::heisenberg::HPoint;
use crh::isometry::{Mat3, ProjIsometry};
use crh::tetra::Tetrahedron;
use crh::{Cyclo, Scalar};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Cyclo> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Cyclo::from_ratio(n, d))
}

/// An arbitrary element of Q(ζ₂₄) with small coefficients.
pub fn field() -> impl Strategy<Value = Cyclo> {
    proptest::collection::vec(rational(), 8).prop_map(|c| {
        c.iter().enumerate().fold(Cyclo::zero(), |acc, (k, q)| acc + q.clone() * &Cyclo::zeta_pow(k as i64))
    })
}

/// a + b√2 + c√3.
pub fn real() -> impl Strategy<Value = Cyclo> {
    (rational(), rational(), rational()).prop_map(|(a, b, c)| a + b * &Cyclo::sqrt2() + c * &Cyclo::sqrt3())
}

pub fn nonzero_real() -> impl Strategy<Value = Cyclo> {
    real().prop_filter("nonzero", |x| !x.is_zero())
}

/// x + iy with x, y as in [`real`], occasionally written over ω instead.
pub fn complex() -> impl Strategy<Value = Cyclo> {
    prop_oneof![
        (real(), real()).prop_map(|(x, y)| x + y * &Cyclo::i()),
        (rational(), rational()).prop_map(|(a, b)| a + b * &Cyclo::omega()),
    ]
}

pub fn nonzero_complex() -> impl Strategy<Value = Cyclo> {
    complex().prop_filter("nonzero", |x| !x.is_zero())
}

pub fn finite_point() -> impl Strategy<Value = HPoint<Cyclo>> {
    (complex(), real()).prop_map(|(z, t)| HPoint::new(z, t))
}

pub fn point() -> impl Strategy<Value = HPoint<Cyclo>> {
    prop_oneof![9 => finite_point(), 1 => Just(HPoint::Infinity)]
}

pub fn distinct<const N: usize>(pts: &[HPoint<Cyclo>; N]) -> bool {
    (0..N).all(|i| (i + 1..N).all(|j| !pts[i].same(&pts[j])))
}

pub fn points<const N: usize>() -> impl Strategy<Value = [HPoint<Cyclo>; N]> {
    proptest::collection::vec(point(), N)
        .prop_map(|v| <[HPoint<Cyclo>; N]>::try_from(v).expect("length N"))
        .prop_filter("distinct points", distinct)
}

pub fn unit_gen() -> impl Strategy<Value = Cyclo> {
    (0i64..24).prop_map(Cyclo::zeta_pow)
}

pub fn elementary() -> impl Strategy<Value = ProjIsometry<Cyclo>> {
    prop_oneof![
        finite_point().prop_map(|p| match p {
            HPoint::Finite { z, t } => ProjIsometry::translation(&z, &t),
            HPoint::Infinity => unreachable!(),
        }),
        nonzero_complex().prop_map(|a| ProjIsometry::dilation(&a)),
        Just(ProjIsometry::picard_i()),
        Just(ProjIsometry::anti(Mat3::identity())),
    ]
}

pub fn isometry() -> impl Strategy<Value = ProjIsometry<Cyclo>> {
    proptest::collection::vec(elementary(), 1..4)
        .prop_map(|gs| gs.iter().fold(ProjIsometry::identity(), |acc, g| acc.compose(g)))
}

pub fn holomorphic() -> impl Strategy<Value = ProjIsometry<Cyclo>> {
    isometry().prop_map(|g| if g.holo { g } else { g.compose(&ProjIsometry::anti(Mat3::identity())) })
}

/// (z, t, s) for the normalized tetrahedron ∞, 0, (1, t), (z, s|z|²).
pub fn normalized() -> impl Strategy<Value = (Cyclo, Cyclo, Cyclo)> {
    (nonzero_complex().prop_filter("z ≠ 1", |z| !z.is_one()), real(), real())
}

pub fn positive() -> impl Strategy<Value = Cyclo> {
    nonzero_real().prop_map(|x| if x.is_positive().unwrap() { x } else { -x })
}

/// w/w̄ for random w, excluding 1.
pub fn unit() -> impl Strategy<Value = Cyclo> {
    nonzero_complex().prop_map(|w| w.checked_div(&w.conj()).unwrap()).prop_filter("u ≠ 1", |u| !u.is_one())
}

pub fn normalized_tet(z: &Cyclo, t: &Cyclo, s: &Cyclo) -> Tetrahedron<Cyclo> {
    Tetrahedron::new(
        HPoint::Infinity,
        HPoint::origin(),
        HPoint::new(Cyclo::one(), t.clone()),
        HPoint::new(z.clone(), s.clone() * &z.abs2()),
    )
    .unwrap()
}

pub fn moved(tet: &Tetrahedron<Cyclo>, g: &ProjIsometry<Cyclo>) -> Tetrahedron<Cyclo> {
    let [a, b, c, d] = tet.vertices.clone().map(|p| g.act(&p).unwrap());
    Tetrahedron::new(a, b, c, d).unwrap()
}
