mod common;

use common::{finite_point, nonzero_complex, point, points};
use crh::heisenberg::{
    cartan, chain_through, cocycle, h_inv, h_mul, herm, inversion_i, iota_x, lift, project, signature, HPoint,
};
use crh::isometry::ProjIsometry;
use crh::scalars::Sign;
use crh::{Cyclo, Scalar};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cocycle_vanishes(pts in points::<4>()) {
        let r = cocycle(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap();
        prop_assert!(r.abs() < 1e-9, "residue {r}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn group_law(p in finite_point(), q in finite_point(), r in finite_point()) {
        prop_assert_eq!(h_mul(&p, &h_inv(&p).unwrap()).unwrap(), HPoint::origin());
        prop_assert_eq!(h_mul(&h_inv(&p).unwrap(), &p).unwrap(), HPoint::origin());
        let left = h_mul(&h_mul(&p, &q).unwrap(), &r).unwrap();
        let right = h_mul(&p, &h_mul(&q, &r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn left_translation_is_a_matrix_action(p in finite_point(), q in point()) {
        let HPoint::Finite { z, t } = &p else { unreachable!() };
        let g = ProjIsometry::translation(z, t);
        let expected = if q.is_infinity() { HPoint::Infinity } else { h_mul(&p, &q).unwrap() };
        prop_assert_eq!(g.act(&q).unwrap(), expected);
    }

    #[test]
    fn lifts_are_null_and_project_back(p in point()) {
        let v = lift(&p);
        prop_assert!(herm(&v, &v).is_zero());
        prop_assert_eq!(project(&v).unwrap(), p.clone());
        prop_assert_eq!(project(&v.scale(&Cyclo::from_ratio(-3, 2))).unwrap(), p);
    }

    #[test]
    fn form_is_hermitian(p in point(), q in point()) {
        let (u, v) = (lift(&p), lift(&q));
        prop_assert_eq!(herm(&u, &v), herm(&v, &u).conj());
    }

    #[test]
    fn inversion_is_the_matrix_after_a_dilation(p in point()) {
        // the matrix I sends (z, t) to (2z/(|z|² − it), −4t/(|z|⁴ + t²))
        let i = ProjIsometry::dilation(&Cyclo::from_ratio(1, 2)).compose(&ProjIsometry::picard_i());
        prop_assert_eq!(inversion_i(&p), i.act(&p).unwrap());
        prop_assert_eq!(inversion_i(&inversion_i(&p)), p);
    }

    #[test]
    fn iota_matches_the_conjugation_map(p in point()) {
        let iota = ProjIsometry::<Cyclo>::anti(crh::isometry::Mat3::identity());
        prop_assert_eq!(iota_x(&p), iota.act(&p).unwrap());
    }

    #[test]
    fn relifting_scales_eta_by_a_positive_real(
        pts in points::<3>(),
        a in nonzero_complex(), b in nonzero_complex(), c in nonzero_complex(),
    ) {
        let eta = cartan(&pts[0], &pts[1], &pts[2]).unwrap().eta;
        let (u, v, w) = (lift(&pts[0]).scale(&a), lift(&pts[1]).scale(&b), lift(&pts[2]).scale(&c));
        let rescaled = -(herm(&u, &v) * &herm(&v, &w) * &herm(&w, &u));
        let ratio = rescaled.checked_div(&eta).unwrap();
        prop_assert!(ratio.is_real());
        prop_assert!(ratio.is_positive().unwrap());
    }

    #[test]
    fn mirroring_conjugates_eta(pts in points::<3>()) {
        let a = cartan(&pts[0], &pts[1], &pts[2]).unwrap();
        let b = cartan(&iota_x(&pts[0]), &iota_x(&pts[1]), &iota_x(&pts[2])).unwrap();
        prop_assert_eq!(b.eta, a.eta.conj());
    }

    #[test]
    fn chains_have_positive_polar_vectors(pts in points::<2>()) {
        let ch = chain_through(&pts[0], &pts[1]).unwrap();
        prop_assert_eq!(signature(ch.polar()).unwrap(), Sign::Positive);
        prop_assert!(ch.contains(&pts[0]));
        prop_assert!(ch.contains(&pts[1]));
    }
}

#[test]
fn group_law_example() {
    let p = HPoint::new(Cyclo::one(), Cyclo::zero());
    let q = HPoint::new(Cyclo::i(), Cyclo::zero());
    assert_eq!(h_mul(&p, &q).unwrap(), HPoint::new(Cyclo::one() + Cyclo::i(), Cyclo::from_int(-2)));
    assert!(h_mul(&HPoint::Infinity, &p).is_err());
}

#[test]
fn standard_vertices_have_zero_cocycle() {
    let t = crh::tetra::standard_tetrahedron();
    let [a, b, c, d] = &t.vertices;
    assert!(cocycle(a, b, c, d).unwrap().abs() < 1e-12);
}

#[test]
fn chain_through_two_unit_points() {
    let ch = chain_through(&HPoint::new(Cyclo::one(), Cyclo::zero()), &HPoint::new(Cyclo::i(), Cyclo::zero())).unwrap();
    for z in [Cyclo::one(), Cyclo::i(), -Cyclo::one(), -Cyclo::i()] {
        assert!(ch.contains(&HPoint::new(z, Cyclo::zero())));
    }
    assert!(!ch.contains(&HPoint::origin()));
}
