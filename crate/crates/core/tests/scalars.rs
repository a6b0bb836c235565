mod common;

use std::f64::consts::PI;

use common::{complex, field, rational, real};
use crh::scalars::{approx_of, in_ring, parse_scalar, sign_real, Ring, Sign};
use crh::Cyclo;
use num_complex::Complex64;
use proptest::prelude::*;

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_axioms(a in field(), b in field(), c in field()) {
        prop_assert_eq!(a.clone() + &b, b.clone() + &a);
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert_eq!(a.clone() + &Cyclo::zero(), a.clone());
        prop_assert_eq!(a.clone() * &Cyclo::one(), a.clone());
        prop_assert!((a.clone() - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((a.clone() * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(a in field(), b in field()) {
        // the same value reached by different routes is structurally equal
        prop_assert_eq!((a.clone() + &b) - &b, a.clone());
        prop_assert_eq!(Cyclo::from_coeffs(&a.coeffs()), a.clone());
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a.clone());
        let scaled = (a.clone() * &Cyclo::from_int(6)) * &Cyclo::from_ratio(1, 6);
        prop_assert_eq!(scaled, a);
    }

    #[test]
    fn conj_is_an_involutive_automorphism(a in field(), b in field()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((a.clone() + &b).conj(), a.conj() + &b.conj());
        prop_assert_eq!((a.clone() * &b).conj(), a.conj() * &b.conj());
        prop_assert!(a.re().is_real());
        prop_assert!(a.im().is_real());
        prop_assert!(a.im().re().im().is_zero());
        prop_assert_eq!(a.re() + &(a.im() * &Cyclo::i()), a.clone());
        prop_assert!(a.abs2().is_real());
    }

    #[test]
    fn float_image_is_a_homomorphism(a in field(), b in field()) {
        let (x, y) = (a.to_complex(), b.to_complex());
        prop_assert!(close((a.clone() * &b).to_complex(), x * y, 1e-9));
        prop_assert!(close((a.clone() + &b).to_complex(), x + y, 1e-9));
        prop_assert!(close(a.conj().to_complex(), x.conj(), 1e-12));
    }

    #[test]
    fn exact_sign_agrees_with_floats(x in real()) {
        let f = x.to_complex().re;
        let s = sign_real(&x).unwrap();
        if x.is_zero() {
            prop_assert_eq!(s, Sign::Zero);
        } else {
            prop_assert_eq!(s == Sign::Positive, f > 0.0, "{} ~ {}", x, f);
        }
    }

    #[test]
    fn subrings_are_closed(a in -5i64..=5, b in -5i64..=5, c in -5i64..=5, d in -5i64..=5) {
        for (ring, u) in [(Ring::Eisenstein, Cyclo::omega()), (Ring::Gaussian, Cyclo::i())] {
            let x = Cyclo::from_int(a) + Cyclo::from_int(b) * &u;
            let y = Cyclo::from_int(c) + Cyclo::from_int(d) * &u;
            prop_assert!(in_ring(&x, ring) && in_ring(&y, ring));
            prop_assert!(in_ring(&(x.clone() + &y), ring));
            prop_assert!(in_ring(&(x.clone() * &y), ring));
            prop_assert!(in_ring(&x.conj(), ring));
        }
    }

    #[test]
    fn non_integral_rationals_leave_every_ring(q in rational()) {
        let integral = q.as_rational().unwrap().is_integer();
        for ring in [Ring::Integers, Ring::Gaussian, Ring::Eisenstein] {
            prop_assert_eq!(in_ring(&q, ring), integral);
        }
    }

    #[test]
    fn complex_parts_match_floats(z in complex()) {
        let c = z.to_complex();
        prop_assert!((z.re().to_complex().re - c.re).abs() < 1e-9);
        prop_assert!((z.im().to_complex().re - c.im).abs() < 1e-9);
    }
}

#[test]
fn named_constants_match_their_definitions() {
    let cases = [
        ("i", Complex64::new(0.0, 1.0)),
        ("omega", Complex64::from_polar(1.0, -PI / 3.0)),
        ("sqrt2", Complex64::new(2f64.sqrt(), 0.0)),
        ("sqrt3", Complex64::new(3f64.sqrt(), 0.0)),
        ("sqrt6", Complex64::new(6f64.sqrt(), 0.0)),
        ("zeta24", Complex64::from_polar(1.0, PI / 12.0)),
    ];
    for (name, value) in cases {
        let c = Cyclo::constant(name).unwrap();
        assert!((c.to_complex() - value).norm() < 1e-12, "{name}");
        assert!((approx_of(&c).z - value).norm() < 1e-12, "{name}");
    }
    assert!(Cyclo::constant("pi").is_err());
}

#[test]
fn constant_identities() {
    assert_eq!(Cyclo::omega(), Cyclo::zeta_pow(20));
    assert_eq!(Cyclo::sqrt3() * Cyclo::sqrt3(), Cyclo::from_int(3));
    assert_eq!(Cyclo::i() * Cyclo::i(), Cyclo::from_int(-1));
    assert_eq!(Cyclo::omega().pow(3), Cyclo::from_int(-1));
    assert_eq!(Cyclo::omega() + Cyclo::omega().conj(), Cyclo::one());
}

#[test]
fn sign_examples() {
    let x = parse_scalar("sqrt2 + sqrt3 - 3").unwrap();
    assert_eq!(sign_real(&x).unwrap(), Sign::Positive);
    assert_eq!(sign_real(&parse_scalar("2 + sqrt3").unwrap()).unwrap(), Sign::Positive);
    assert_eq!(sign_real(&Cyclo::zero()).unwrap(), Sign::Zero);
    // √2 + √3 = 3.1462643699...
    let below = parse_scalar("sqrt2 + sqrt3 - 157313/50000").unwrap();
    let above = parse_scalar("sqrt2 + sqrt3 - 78657/25000").unwrap();
    assert_eq!(sign_real(&below).unwrap(), Sign::Positive);
    assert_eq!(sign_real(&above).unwrap(), Sign::Negative);
    assert!(sign_real(&Cyclo::i()).is_err());
}

#[test]
fn ring_examples() {
    assert!(in_ring(&parse_scalar("-2*omega - 1").unwrap(), Ring::Eisenstein));
    assert!(!in_ring(&Cyclo::sqrt3(), Ring::Gaussian));
    assert!(in_ring(&Cyclo::from_int(5), Ring::Integers));
    assert!(!in_ring(&Cyclo::i(), Ring::Eisenstein));
    assert!(!in_ring(&Cyclo::omega(), Ring::Gaussian));
}
