//! Ideal closures, the derived series and a semidecision search for
//! failures of primality.

use std::fmt;

use super::linalg::{Span, Vector};
use super::StructConstAlgebra;
use crate::random::{seeded, small_vector};

/// An ideal stored as an echelonized basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSubspace {
    span: Span,
}

impl IdealSubspace {
    pub fn basis(&self) -> Vec<Vector> {
        self.span.basis()
    }

    pub fn dim(&self) -> usize {
        self.span.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.span.contains(v)
    }
}

/// The smallest ideal containing `seeds`: keep adding [e_i, b] for basis
/// vectors e_i and newly added vectors b until nothing new appears.
pub fn ideal_closure(algebra: &StructConstAlgebra, seeds: &[Vector]) -> IdealSubspace {
    let mut span = Span::new(algebra.dim());
    let mut pending: Vec<Vector> = seeds.iter().filter(|v| span.insert(v)).cloned().collect();
    let basis = algebra.basis();
    while let Some(v) = pending.pop() {
        for e in &basis {
            let w = algebra.bracket(e, &v);
            if span.insert(&w) {
                pending.push(w);
            }
        }
    }
    IdealSubspace { span }
}

fn bracket_span(algebra: &StructConstAlgebra, a: &[Vector], b: &[Vector]) -> Span {
    let mut span = Span::new(algebra.dim());
    for u in a {
        for v in b {
            span.insert(&algebra.bracket(u, v));
        }
    }
    span
}

/// [L, L], which is automatically an ideal.
pub fn derived_subalgebra(algebra: &StructConstAlgebra) -> IdealSubspace {
    let basis = algebra.basis();
    IdealSubspace {
        span: bracket_span(algebra, &basis, &basis),
    }
}

/// [[L, L], [L, L]] = 0
pub fn is_metabelian(algebra: &StructConstAlgebra) -> bool {
    let d = derived_subalgebra(algebra).basis();
    bracket_span(algebra, &d, &d).rank() == 0
}

/// Basis vectors followed by `n_random` small random integer vectors.
pub fn default_candidate_seeds(
    algebra: &StructConstAlgebra,
    n_random: usize,
    seed: u64,
) -> Vec<Vector> {
    let mut rng = seeded(seed);
    let mut seeds = algebra.basis();
    seeds.extend((0..n_random).map(|_| Vector(small_vector(&mut rng, algebra.dim()))));
    seeds
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    /// Two different nonzero ideals with [A, B] = 0.
    NotPrime,
    /// A nonzero ideal with [A, A] = 0.
    NotSemiprime,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimalityReport {
    pub witness: Option<(IdealSubspace, IdealSubspace, WitnessKind)>,
    pub seeds_tried: usize,
    pub distinct_ideals: usize,
    pub is_metabelian: bool,
}

impl fmt::Display for PrimalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            Some((a, b, kind)) => {
                let what = match kind {
                    WitnessKind::NotPrime => "not prime",
                    WitnessKind::NotSemiprime => "not semiprime",
                };
                write!(
                    f,
                    "witness found ({what}): ideals of dimension {} and {} with [A, B] = 0",
                    a.dim(),
                    b.dim()
                )?;
            }
            None => write!(
                f,
                "no witness found up to seed budget ({} seeds, {} distinct ideals); \
                 this does not prove primality",
                self.seeds_tried, self.distinct_ideals
            )?,
        }
        write!(f, "; metabelian: {}", self.is_metabelian)
    }
}

/// Looks for nonzero ideals A, B among closures of `seeds` with [A, B] = 0.
/// Pairs of different ideals are tried before A = B.
pub fn nonprimality_witness_search(
    algebra: &StructConstAlgebra,
    seeds: &[Vector],
) -> PrimalityReport {
    let mut ideals: Vec<IdealSubspace> = Vec::new();
    for s in seeds {
        let ideal = ideal_closure(algebra, std::slice::from_ref(s));
        if !ideal.is_zero() && !ideals.contains(&ideal) {
            ideals.push(ideal);
        }
    }
    let is_metabelian = is_metabelian(algebra);
    let commute = |a: &IdealSubspace, b: &IdealSubspace| {
        bracket_span(algebra, &a.basis(), &b.basis()).rank() == 0
    };
    let mut witness = None;
    'outer: for (i, a) in ideals.iter().enumerate() {
        for b in &ideals[i + 1..] {
            if commute(a, b) {
                witness = Some((a.clone(), b.clone(), WitnessKind::NotPrime));
                break 'outer;
            }
        }
    }
    if witness.is_none() {
        witness = ideals
            .iter()
            .find(|a| commute(a, a))
            .map(|a| (a.clone(), a.clone(), WitnessKind::NotSemiprime));
    }
    PrimalityReport {
        witness,
        seeds_tried: seeds.len(),
        distinct_ideals: ideals.len(),
        is_metabelian,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::structconst::builtin;

    #[test]
    fn closures() {
        let l = builtin::sl2();
        assert_eq!(ideal_closure(&l, &[l.basis_vector(0)]).dim(), 3);
        let t = builtin::two_dim_nonabelian();
        let x = t.basis_vector(0);
        let ideal = ideal_closure(&t, std::slice::from_ref(&x));
        assert_eq!(ideal.basis(), vec![x]);
        assert!(ideal_closure(&t, &[Vector::zero(2)]).is_zero());
    }

    #[test]
    fn abelian_is_not_prime() {
        let l = builtin::abelian(2);
        let r = nonprimality_witness_search(&l, &l.basis());
        let (a, b, kind) = r.witness.unwrap();
        assert_eq!(kind, WitnessKind::NotPrime);
        assert_eq!(a.basis(), vec![l.basis_vector(0)]);
        assert_eq!(b.basis(), vec![l.basis_vector(1)]);
        assert!(r.is_metabelian);
    }

    #[test]
    fn two_dim_is_not_semiprime() {
        let l = builtin::two_dim_nonabelian();
        let r = nonprimality_witness_search(&l, &default_candidate_seeds(&l, 5, 1));
        let (a, b, kind) = r.witness.unwrap();
        assert_eq!(kind, WitnessKind::NotSemiprime);
        assert_eq!(a, b);
        assert_eq!(a.basis(), vec![l.basis_vector(0)]);
    }

    #[test]
    fn sl2_has_no_witness() {
        let l = builtin::sl2();
        let r = nonprimality_witness_search(&l, &default_candidate_seeds(&l, 20, 7));
        assert!(r.witness.is_none());
        assert!(!r.is_metabelian);
        assert_eq!(r.seeds_tried, 23);
        assert!(r.to_string().contains("does not prove primality"));
    }

    #[test]
    fn heisenberg_derived_series() {
        let l = builtin::heisenberg();
        let d = derived_subalgebra(&l);
        assert_eq!(d.basis(), vec![l.basis_vector(2)]);
        assert!(is_metabelian(&l));
        assert!(!is_metabelian(&builtin::sl2()));
        assert!(d.contains(&l.basis_vector(2).scale(&rat(5))));
    }
}
