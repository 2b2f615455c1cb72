//! The triple bracket <g1, g2, g3> = Σ_{σ ∈ S3} sgn σ ad g_σ1 ad g_σ2 ad g_σ3
//! and the operator algebra R(L) it generates.

use itertools::Itertools;

use super::linalg::{OperatorMatrix, Span, Vector};
use super::StructConstAlgebra;
use crate::freelie::permutation_sign;
use crate::rational::rat;

pub fn triple_bracket_op(
    algebra: &StructConstAlgebra,
    g1: &Vector,
    g2: &Vector,
    g3: &Vector,
) -> OperatorMatrix {
    let ads = [algebra.ad(g1), algebra.ad(g2), algebra.ad(g3)];
    let mut out = OperatorMatrix::zero(algebra.dim());
    for perm in (0..3).permutations(3) {
        let product = ads[perm[0]].mul(&ads[perm[1]]).mul(&ads[perm[2]]);
        out = out.add(&product.scale(&rat(permutation_sign(&perm))));
    }
    out
}

/// Result of one family of exact checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub passed: bool,
    pub checked: usize,
    pub failure: Option<String>,
}

impl CheckOutcome {
    fn pass(checked: usize) -> Self {
        CheckOutcome {
            passed: true,
            checked,
            failure: None,
        }
    }

    fn fail(checked: usize, why: String) -> Self {
        CheckOutcome {
            passed: false,
            checked,
            failure: Some(why),
        }
    }
}

/// A triple bracket of three basis vectors, tagged with their indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleGenerator {
    pub indices: (usize, usize, usize),
    pub matrix: OperatorMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RlReport {
    pub degree_bound: usize,
    /// Nonzero <e_i, e_j, e_k> with i < j < k.
    pub generators: Vec<TripleGenerator>,
    /// Independent products of at most `degree_bound` generators that span
    /// the truncation of R(L).
    pub spanning: Vec<OperatorMatrix>,
    pub commutative: CheckOutcome,
    pub derivation_formula: CheckOutcome,
    /// (ᵍa)(h) = (ʰa)(g) for generators a and basis g, h.
    pub symmetry: CheckOutcome,
    /// [ad(b·g), a] = b·[ad g, a] for generators a, b and basis g.
    pub module_linearity: CheckOutcome,
}

impl RlReport {
    pub fn span_dim(&self) -> usize {
        self.spanning.len()
    }

    pub fn all_pass(&self) -> bool {
        self.commutative.passed
            && self.derivation_formula.passed
            && self.symmetry.passed
            && self.module_linearity.passed
    }
}

/// Spans R(L) by products of at most `degree_bound` triple brackets of
/// basis vectors and runs the commutativity, derivation-formula and
/// R(L)-module checks on it.
pub fn rl_report(algebra: &StructConstAlgebra, degree_bound: usize) -> RlReport {
    let degree_bound = degree_bound.max(1);
    let dim = algebra.dim();
    let basis = algebra.basis();
    let names = algebra.basis_names();

    let mut generators = Vec::new();
    for (i, j, k) in (0..dim).tuple_combinations() {
        let matrix = triple_bracket_op(algebra, &basis[i], &basis[j], &basis[k]);
        if !matrix.is_zero() {
            generators.push(TripleGenerator {
                indices: (i, j, k),
                matrix,
            });
        }
    }

    // products of length <= degree_bound
    let mut span = Span::new(dim * dim);
    let mut spanning = Vec::new();
    let mut frontier = Vec::new();
    for g in &generators {
        if span.insert(&g.matrix.flatten()) {
            spanning.push(g.matrix.clone());
            frontier.push(g.matrix.clone());
        }
    }
    for _ in 1..degree_bound {
        let mut next = Vec::new();
        for p in &frontier {
            for g in &generators {
                let q = p.mul(&g.matrix);
                if span.insert(&q.flatten()) {
                    spanning.push(q.clone());
                    next.push(q);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }

    let commutative = {
        let mut checked = 0;
        let mut outcome = None;
        'outer: for (a, x) in spanning.iter().enumerate() {
            for (b, y) in spanning.iter().enumerate().skip(a + 1) {
                checked += 1;
                if !x.commutator(y).is_zero() {
                    outcome = Some(CheckOutcome::fail(
                        checked,
                        format!("spanning elements #{a} and #{b} do not commute"),
                    ));
                    break 'outer;
                }
            }
        }
        outcome.unwrap_or_else(|| CheckOutcome::pass(checked))
    };

    let triple_name = |(i, j, k): (usize, usize, usize)| {
        format!("<{}, {}, {}>", names[i], names[j], names[k])
    };

    let derivation_formula = {
        let mut checked = 0;
        let mut outcome = None;
        'outer: for g in 0..dim {
            let ad_g = algebra.ad(&basis[g]);
            for (i, j, k) in (0..dim).tuple_combinations() {
                checked += 1;
                let (gi, gj, gk) = (&basis[i], &basis[j], &basis[k]);
                let lhs = ad_g.commutator(&triple_bracket_op(algebra, gi, gj, gk));
                let rhs = triple_bracket_op(algebra, &algebra.bracket(&basis[g], gi), gj, gk)
                    .add(&triple_bracket_op(algebra, gi, &algebra.bracket(&basis[g], gj), gk))
                    .add(&triple_bracket_op(algebra, gi, gj, &algebra.bracket(&basis[g], gk)));
                if lhs != rhs {
                    outcome = Some(CheckOutcome::fail(
                        checked,
                        format!("g = {} on {}", names[g], triple_name((i, j, k))),
                    ));
                    break 'outer;
                }
            }
        }
        outcome.unwrap_or_else(|| CheckOutcome::pass(checked))
    };

    let ads: Vec<OperatorMatrix> = basis.iter().map(|b| algebra.ad(b)).collect();

    let symmetry = {
        let mut checked = 0;
        let mut outcome = None;
        'outer: for a in &generators {
            let acted: Vec<OperatorMatrix> = ads.iter().map(|ad| ad.commutator(&a.matrix)).collect();
            for g in 0..dim {
                for h in g + 1..dim {
                    checked += 1;
                    if acted[g].apply(&basis[h]) != acted[h].apply(&basis[g]) {
                        outcome = Some(CheckOutcome::fail(
                            checked,
                            format!(
                                "a = {}, g = {}, h = {}",
                                triple_name(a.indices),
                                names[g],
                                names[h]
                            ),
                        ));
                        break 'outer;
                    }
                }
            }
        }
        outcome.unwrap_or_else(|| CheckOutcome::pass(checked))
    };

    let module_linearity = {
        let mut checked = 0;
        let mut outcome = None;
        'outer: for a in &generators {
            for b in &generators {
                for g in 0..dim {
                    checked += 1;
                    let bg = b.matrix.apply(&basis[g]);
                    let lhs = algebra.ad(&bg).commutator(&a.matrix);
                    let rhs = b.matrix.mul(&ads[g].commutator(&a.matrix));
                    if lhs != rhs {
                        outcome = Some(CheckOutcome::fail(
                            checked,
                            format!(
                                "a = {}, b = {}, g = {}",
                                triple_name(a.indices),
                                triple_name(b.indices),
                                names[g]
                            ),
                        ));
                        break 'outer;
                    }
                }
            }
        }
        outcome.unwrap_or_else(|| CheckOutcome::pass(checked))
    };

    RlReport {
        degree_bound,
        generators,
        spanning,
        commutative,
        derivation_formula,
        symmetry,
        module_linearity,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionReport {
    pub triple: OperatorMatrix,
    /// Whether <g1, g2, g3> g = <g, g2, g3> g1 + <g1, g, g3> g2 + <g1, g2, g> g3
    /// holds, for each basis vector g in order.
    pub per_basis: Vec<bool>,
}

impl ReconstructionReport {
    pub fn all_pass(&self) -> bool {
        self.per_basis.iter().all(|&b| b)
    }

    pub fn degenerate(&self) -> bool {
        self.triple.is_zero()
    }
}

pub fn reconstruction_check(
    algebra: &StructConstAlgebra,
    g1: &Vector,
    g2: &Vector,
    g3: &Vector,
) -> ReconstructionReport {
    let triple = triple_bracket_op(algebra, g1, g2, g3);
    let per_basis = algebra
        .basis()
        .iter()
        .map(|g| {
            let lhs = triple.apply(g);
            let rhs = triple_bracket_op(algebra, g, g2, g3)
                .apply(g1)
                .add(&triple_bracket_op(algebra, g1, g, g3).apply(g2))
                .add(&triple_bracket_op(algebra, g1, g2, g).apply(g3));
            lhs == rhs
        })
        .collect();
    ReconstructionReport { triple, per_basis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structconst::builtin;

    #[test]
    fn repeated_argument_gives_zero() {
        let l = builtin::sl2();
        let (e, f) = (l.basis_vector(0), l.basis_vector(2));
        assert!(triple_bracket_op(&l, &e, &e, &f).is_zero());
    }

    #[test]
    fn sl2_triple_bracket_is_scalar() {
        let l = builtin::sl2();
        let b = l.basis();
        let t = triple_bracket_op(&l, &b[0], &b[1], &b[2]);
        assert_eq!(t, OperatorMatrix::identity(3).scale(&rat(-8)));
        // alternating
        assert_eq!(triple_bracket_op(&l, &b[1], &b[0], &b[2]), t.scale(&rat(-1)));
    }

    #[test]
    fn sl2_report_passes() {
        let r = rl_report(&builtin::sl2(), 3);
        assert_eq!(r.generators.len(), 1);
        assert_eq!(r.span_dim(), 1);
        assert!(r.all_pass(), "{r:?}");
        let b = builtin::sl2().basis();
        let rc = reconstruction_check(&builtin::sl2(), &b[0], &b[1], &b[2]);
        assert_eq!(rc.per_basis, vec![true; 3]);
        assert!(!rc.degenerate());
    }

    #[test]
    fn sl3_is_not_commutative() {
        let r = rl_report(&builtin::sl_n(3), 2);
        assert_eq!(r.generators.len(), 56);
        assert!(!r.commutative.passed);
        assert!(r.commutative.failure.is_some());
        assert!(r.derivation_formula.passed);
    }

    #[test]
    fn abelian_rl_is_trivial() {
        let r = rl_report(&builtin::abelian(3), 2);
        assert!(r.generators.is_empty());
        assert_eq!(r.span_dim(), 0);
        assert!(r.all_pass());
    }

    #[test]
    fn two_dim_triple_bracket_vanishes() {
        // there is no triple of distinct basis vectors, and by linearity
        // every triple bracket is zero
        let l = builtin::two_dim_nonabelian();
        let (x, y) = (l.basis_vector(0), l.basis_vector(1));
        let u = x.add(&y.scale(&rat(3)));
        assert!(triple_bracket_op(&l, &x, &y, &u).is_zero());
    }

    #[test]
    fn heisenberg_reconstruction_is_vacuous() {
        let l = builtin::heisenberg();
        let b = l.basis();
        let r = reconstruction_check(&l, &b[0], &b[1], &b[2]);
        assert!(r.degenerate());
        assert!(r.all_pass());
    }
}
