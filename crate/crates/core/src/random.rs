//! Seeded random samples for searches and randomized checks. Everything
//! is driven by `ChaCha8Rng`, so a seed fixes the whole stream.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{DerivVar, DiffPoly, Monomial, UniPoly};
use crate::freelie::{LiePoly, LieTerm};
use crate::rational::{ratio, Rational};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational p/q with |p| <= 5 and 1 <= q <= 3.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

pub fn nonzero_small_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = small_rational(rng);
        if r != Rational::default() {
            return r;
        }
    }
}

/// Random differential polynomial in `n_vars` indeterminates with
/// derivative orders up to `max_order`.
pub fn diffpoly<R: Rng>(
    rng: &mut R,
    n_vars: usize,
    max_order: u32,
    max_terms: usize,
    max_degree: u32,
) -> DiffPoly {
    let n_terms = rng.gen_range(0..=max_terms);
    let mut p = DiffPoly::zero();
    for _ in 0..n_terms {
        let degree = rng.gen_range(0..=max_degree);
        let factors = (0..degree).map(|_| {
            (
                DerivVar::new(rng.gen_range(0..n_vars), rng.gen_range(0..=max_order)),
                1,
            )
        });
        let m = Monomial::from_factors(factors.collect::<Vec<_>>());
        p.add_term(m, nonzero_small_rational(rng));
    }
    p
}

pub fn unipoly<R: Rng>(rng: &mut R, max_degree: usize) -> UniPoly {
    let deg = rng.gen_range(0..=max_degree);
    UniPoly::new((0..=deg).map(|_| small_rational(rng)).collect())
}

pub fn nonzero_unipoly<R: Rng>(rng: &mut R, max_degree: usize) -> UniPoly {
    loop {
        let p = unipoly(rng, max_degree);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Vector of small integers in [-3, 3].
pub fn small_vector<R: Rng>(rng: &mut R, dim: usize) -> Vec<Rational> {
    (0..dim).map(|_| ratio(rng.gen_range(-3..=3), 1)).collect()
}

/// Random bracket tree over generators 0..n_gens with at most `max_depth`
/// nested brackets.
pub fn lie_term<R: Rng>(rng: &mut R, n_gens: usize, max_depth: usize) -> LieTerm {
    if max_depth == 0 || rng.gen_bool(0.35) {
        return LieTerm::generator(rng.gen_range(0..n_gens));
    }
    LieTerm::bracket(
        lie_term(rng, n_gens, max_depth - 1),
        lie_term(rng, n_gens, max_depth - 1),
    )
}

pub fn lie_poly<R: Rng>(rng: &mut R, n_gens: usize, max_depth: usize, max_terms: usize) -> LiePoly {
    let mut f = LiePoly::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        f.add_term(lie_term(rng, n_gens, max_depth), nonzero_small_rational(rng));
    }
    f
}
