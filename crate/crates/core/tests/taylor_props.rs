use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use wronski::algebra::UniPolyRing;
use wronski::freelie::{evaluate, lie_is_zero, standard_identity, LiePoly};
use wronski::random::{diffpoly, lie_poly, seeded, unipoly};
use wronski::specder::{Diff, SpecialDerivation};
use wronski::taylor::{is_w1_identity, is_w1_identity_with, taylor_map, PointEvaluation};

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x7a7),
        failure_persistence: None,
        ..Config::default()
    }
}

const N: usize = 8;

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn taylor_map_is_a_differential_homomorphism(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let a = diffpoly(&mut rng, 2, 2, 3, 3);
        let b = diffpoly(&mut rng, 2, 2, 3, 3);
        let phi = PointEvaluation::random(&mut rng, 2, 2 + N as u32 + 1);
        let (ta, tb) = (taylor_map(&a, &phi, N), taylor_map(&b, &phi, N));
        prop_assert_eq!(taylor_map(&(&a * &b), &phi, N), ta.mul(&tb));
        prop_assert_eq!(taylor_map(&(&a + &b), &phi, N), ta.add(&tb));
        let d = taylor_map(&a.derive(), &phi, N);
        prop_assert!(d.agrees_with(&ta.derivative()));
        prop_assert_eq!(ta.derivative().valid_order(), Some(N - 1));
    }
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn certificates_are_sound_and_verdicts_stable(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let f = lie_poly(&mut rng, 3, 2, 2);
        let v = is_w1_identity(&f, 3).unwrap();
        if let Some(cert) = &v.certificate {
            prop_assert!(!v.holds);
            prop_assert!(cert.verify(&f).unwrap());
            prop_assert!(!cert.value.is_zero());
        } else {
            prop_assert!(v.holds);
        }
        for truncation in [0, 12] {
            let w = is_w1_identity_with(&f, 3, Some(truncation)).unwrap();
            prop_assert_eq!(w.holds, v.holds);
        }
        // an identity of the free Lie algebra is an identity of every
        // Lie algebra
        if lie_is_zero(&f) {
            prop_assert!(v.holds);
        }
    }

    #[test]
    fn identities_vanish_on_polynomial_vector_fields(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let st5 = standard_identity(5).unwrap();
        prop_assert!(is_w1_identity(&st5, 5).unwrap().holds);
        let ring = UniPolyRing::standard();
        let fields: BTreeMap<usize, _> =
            (0..5).map(|i| (i, SpecialDerivation::new(unipoly(&mut rng, 3)))).collect();
        prop_assert!(evaluate(&st5, &Diff::new(ring), &fields).unwrap().coeff.is_zero());
    }
}

#[test]
fn zero_lie_polynomial_is_an_identity() {
    assert!(is_w1_identity(&LiePoly::zero(), 1).unwrap().holds);
}
