use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::Rng;

use wronski::freelie::{evaluate, standard_identity, LiePoly, LieTerm};
use wronski::random::{seeded, small_rational, small_vector, SeededRng};
use wronski::rational::rat;
use wronski::structconst::{
    check_identity, heisenberg, ideal_closure, sl2, sl_n, triple_bracket_op, two_dim_nonabelian,
    StructConstAlgebra, Vector,
};

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x5c),
        failure_persistence: None,
        ..Config::default()
    }
}

fn vector(rng: &mut SeededRng, l: &StructConstAlgebra) -> Vector {
    Vector(small_vector(rng, l.dim()))
}

fn pick(rng: &mut SeededRng) -> StructConstAlgebra {
    match rng.gen_range(0..4) {
        0 => sl2(),
        1 => sl_n(3),
        2 => heisenberg(),
        _ => two_dim_nonabelian(),
    }
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn ad_is_a_homomorphism(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let l = sl_n(3);
        let (u, v) = (vector(&mut rng, &l), vector(&mut rng, &l));
        prop_assert_eq!(l.ad(&l.bracket(&u, &v)), l.ad(&u).commutator(&l.ad(&v)));
    }

    #[test]
    fn st5_vanishes_at_random_sl2_tuples(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let l = sl2();
        let st5 = standard_identity(5).unwrap();
        let assignment: BTreeMap<_, _> = (0..5).map(|i| (i, vector(&mut rng, &l))).collect();
        prop_assert!(evaluate(&st5, &l, &assignment).unwrap().is_zero());
    }

    #[test]
    fn nilpotency_identity_at_random_heisenberg_tuples(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let l = heisenberg();
        let g = LieTerm::generator;
        let f = LiePoly::term(rat(1), LieTerm::bracket(LieTerm::bracket(g(0), g(1)), g(2)));
        let vars = (0..3).collect();
        prop_assert!(check_identity(&l, &f, &vars).unwrap().holds);
        let assignment: BTreeMap<_, _> = (0..3).map(|i| (i, vector(&mut rng, &l))).collect();
        prop_assert!(evaluate(&f, &l, &assignment).unwrap().is_zero());
    }

    #[test]
    fn ideal_closure_is_bracket_closed(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let l = pick(&mut rng);
        let seeds: Vec<Vector> = (0..rng.gen_range(1..3)).map(|_| vector(&mut rng, &l)).collect();
        let ideal = ideal_closure(&l, &seeds);
        for s in &seeds {
            prop_assert!(ideal.contains(s));
        }
        for e in l.basis() {
            for b in ideal.basis() {
                prop_assert!(ideal.contains(&l.bracket(&e, &b)));
            }
        }
    }

    #[test]
    fn triple_bracket_is_alternating_and_linear(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let l = if rng.gen_bool(0.5) { sl2() } else { sl_n(3) };
        let (a, b, c, d) = (
            vector(&mut rng, &l),
            vector(&mut rng, &l),
            vector(&mut rng, &l),
            vector(&mut rng, &l),
        );
        let k = small_rational(&mut rng);
        let t = triple_bracket_op(&l, &a, &b, &c);
        prop_assert_eq!(triple_bracket_op(&l, &b, &a, &c), t.scale(&rat(-1)));
        prop_assert_eq!(triple_bracket_op(&l, &a, &c, &b), t.scale(&rat(-1)));
        prop_assert!(triple_bracket_op(&l, &a, &a, &c).is_zero());
        let lin = triple_bracket_op(&l, &a.scale(&k).add(&d), &b, &c);
        prop_assert_eq!(lin, t.scale(&k).add(&triple_bracket_op(&l, &d, &b, &c)));
    }

    #[test]
    fn sl2_vectors_generate_everything(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let l = sl2();
        let v = vector(&mut rng, &l);
        prop_assume!(!v.is_zero());
        prop_assert_eq!(ideal_closure(&l, &[v]).dim(), 3);
    }
}
