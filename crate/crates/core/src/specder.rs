//! Special derivations a∂ over a differential algebra and the Wronskian
//! bracket [a∂, b∂] = (ab' - a'b)∂.
//!
//! Evaluating a Lie polynomial at the generic elements y_i∂ of the free
//! differential algebra compiles it to a single differential polynomial p
//! with f(y_1∂, ..., y_n∂) = p∂. Every Diff A receives a homomorphism from
//! Diff Q{y}, so p = 0 makes f an identity everywhere.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{DiffAlgebra, DiffPoly, FreeDiff, Localization, LocalizedElement};
use crate::error::{Error, Result};
use crate::freelie::{evaluate, triple_bracket_term, LieCarrier, LiePoly};
use crate::rational::{rat, Rational};

/// The operator a∂, represented by its coefficient a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialDerivation<E> {
    pub coeff: E,
}

impl<E> SpecialDerivation<E> {
    pub fn new(coeff: E) -> Self {
        SpecialDerivation { coeff }
    }
}

impl<E: fmt::Display> fmt::Display for SpecialDerivation<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})∂", self.coeff)
    }
}

/// Diff A: the Lie algebra of special derivations of `algebra`.
#[derive(Debug, Clone)]
pub struct Diff<A> {
    pub algebra: A,
}

impl<A: DiffAlgebra> Diff<A> {
    pub fn new(algebra: A) -> Self {
        Diff { algebra }
    }

    pub fn element(&self, coeff: A::Elem) -> Result<SpecialDerivation<A::Elem>> {
        if !self.algebra.contains(&coeff) {
            return Err(Error::Mismatch(self.algebra.describe()));
        }
        Ok(SpecialDerivation::new(coeff))
    }
}

/// [a∂, b∂] = (a b' - a' b)∂.
pub fn wronskian_bracket<A: DiffAlgebra>(
    algebra: &A,
    a: &SpecialDerivation<A::Elem>,
    b: &SpecialDerivation<A::Elem>,
) -> Result<SpecialDerivation<A::Elem>> {
    if !algebra.contains(&a.coeff) || !algebra.contains(&b.coeff) {
        return Err(Error::Mismatch(algebra.describe()));
    }
    let left = algebra.mul(&a.coeff, &algebra.derive(&b.coeff)?)?;
    let right = algebra.mul(&algebra.derive(&a.coeff)?, &b.coeff)?;
    Ok(SpecialDerivation::new(algebra.sub(&left, &right)?))
}

impl<A: DiffAlgebra> LieCarrier for Diff<A> {
    type Elem = SpecialDerivation<A::Elem>;

    fn zero(&self) -> Self::Elem {
        SpecialDerivation::new(self.algebra.zero())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(SpecialDerivation::new(self.algebra.add(&a.coeff, &b.coeff)?))
    }

    fn scale(&self, c: &Rational, a: &Self::Elem) -> Result<Self::Elem> {
        Ok(SpecialDerivation::new(self.algebra.scale(c, &a.coeff)?))
    }

    fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        wronskian_bracket(&self.algebra, a, b)
    }

    fn is_zero(&self, a: &Self::Elem) -> Result<bool> {
        self.algebra.is_zero(&a.coeff)
    }
}

/// A Lie polynomial together with the differential polynomial p such that
/// f(y_1∂, ..., y_n∂) = p∂.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompiledIdentity {
    pub lie_poly: LiePoly,
    pub n_vars: usize,
    pub diff_poly: DiffPoly,
}

impl CompiledIdentity {
    /// f vanishes on every Diff A over a field of characteristic zero.
    pub fn is_identity(&self) -> bool {
        self.diff_poly.is_zero()
    }
}

/// Evaluates `f` at the generic special derivations y_i∂ of Q{y_1..y_n}.
/// Generators g_i map to y_i; unused y_i are allowed.
pub fn compile_lie_to_diffpoly(f: &LiePoly, n: usize) -> Result<CompiledIdentity> {
    let free = FreeDiff::new(n);
    let mut assignment = BTreeMap::new();
    for i in f.generators() {
        assignment.insert(i, SpecialDerivation::new(free.generator(i)?));
    }
    let value = evaluate(f, &Diff::new(free), &assignment)?;
    Ok(CompiledIdentity {
        lie_poly: f.clone(),
        n_vars: n,
        diff_poly: value.coeff,
    })
}

/// The realization of the derivation action of f∂ on a multiplier w:
/// f·w'.
pub fn model_action<A: DiffAlgebra>(algebra: &A, f: &A::Elem, w: &A::Elem) -> Result<A::Elem> {
    if !algebra.contains(f) || !algebra.contains(w) {
        return Err(Error::Mismatch(algebra.describe()));
    }
    algebra.mul(f, &algebra.derive(w)?)
}

/// Outcome of checking [ad(f∂), w·](g∂) = (f w' g)∂ symbolically in
/// Q{f, w, g}, where (w·) multiplies coefficients by w.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelActionCheck {
    pub commutator: DiffPoly,
    pub model: DiffPoly,
    pub holds: bool,
}

/// Symbolic check that the commutator of ad(f∂) with multiplication by w
/// is multiplication by f·w', justifying [`model_action`].
pub fn verify_model_action() -> Result<ModelActionCheck> {
    let free = FreeDiff::new(3);
    let (f, w, g) = (DiffPoly::var(0), DiffPoly::var(1), DiffPoly::var(2));
    let fd = SpecialDerivation::new(f.clone());
    // [f∂, w g∂] - w [f∂, g∂]
    let outer = wronskian_bracket(&free, &fd, &SpecialDerivation::new(&w * &g))?;
    let inner = wronskian_bracket(&free, &fd, &SpecialDerivation::new(g.clone()))?;
    let commutator = &outer.coeff - &(&w * &inner.coeff);
    let model = &model_action(&free, &f, &w)? * &g;
    Ok(ModelActionCheck {
        holds: commutator == model,
        commutator,
        model,
    })
}

/// One grid point of the localization bracket check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationCheck {
    pub m: u32,
    pub k: u32,
    /// Wronskian bracket of (f/s^m)∂ and (g/s^k)∂ in the localization.
    pub bracket: LocalizedElement,
    /// -k (ᶠs) g / s^(m+k+1) + m (ᵍs) f / s^(m+k+1) + [f, g] / s^(m+k).
    pub formula: LocalizedElement,
    pub equal: bool,
    /// Both sides minus [f, g]/s^(m+k) agree with (m - k) f g s'/s^(m+k+1).
    pub residual_matches: bool,
}

/// Checks the bracket formula on Q{f, g, s}[1/s] at one (m, k).
pub fn verify_localization_bracket(m: u32, k: u32) -> Result<LocalizationCheck> {
    let loc = Localization::new(FreeDiff::new(3), 2)?;
    let free = loc.base;
    let (f, g, s) = (DiffPoly::var(0), DiffPoly::var(1), loc.s());

    let lhs = wronskian_bracket(
        &loc,
        &SpecialDerivation::new(loc.localize(f.clone(), m)),
        &SpecialDerivation::new(loc.localize(g.clone(), k)),
    )?
    .coeff;

    let fs = model_action(&free, &f, &s)?;
    let gs = model_action(&free, &g, &s)?;
    let fg = wronskian_bracket(
        &free,
        &SpecialDerivation::new(f.clone()),
        &SpecialDerivation::new(g.clone()),
    )?
    .coeff;
    let top = m + k + 1;
    let term_k = loc.localize((&fs * &g).scale(&rat(-(k as i64))), top);
    let term_m = loc.localize((&gs * &f).scale(&rat(m as i64)), top);
    let term_fg = loc.localize(fg, m + k);
    let rhs = loc.add(&loc.add(&term_k, &term_m)?, &term_fg)?;

    let ds = s.derive();
    let residual = loc.localize((&(&f * &g) * &ds).scale(&rat(m as i64 - k as i64)), top);
    let lhs_rest = loc.sub(&lhs, &term_fg)?;
    let rhs_rest = loc.sub(&rhs, &term_fg)?;
    let residual_matches = loc.equal(&lhs_rest, &residual)? && loc.equal(&rhs_rest, &residual)?;

    Ok(LocalizationCheck {
        m,
        k,
        equal: loc.equal(&lhs, &rhs)?,
        bracket: lhs,
        formula: rhs,
        residual_matches,
    })
}

/// Localization bracket checks over the grid 0..=max_m x 0..=max_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationReport {
    pub model_action: ModelActionCheck,
    pub max_m: u32,
    pub max_k: u32,
    pub checks: Vec<LocalizationCheck>,
}

impl LocalizationReport {
    /// Every grid point agrees, and the model action checks out.
    pub fn all_equal(&self) -> bool {
        self.model_action.holds && self.checks.iter().all(|c| c.equal && c.residual_matches)
    }
}

pub fn verify_localization_grid(max_m: u32, max_k: u32) -> Result<LocalizationReport> {
    let model_action = verify_model_action()?;
    let mut checks = Vec::new();
    for m in 0..=max_m {
        for k in 0..=max_k {
            checks.push(verify_localization_bracket(m, k)?);
        }
    }
    Ok(LocalizationReport {
        model_action,
        max_m,
        max_k,
        checks,
    })
}

/// Wronskian determinant det[a_j^(i)] of the given elements.
pub fn wronskian_determinant(elems: &[DiffPoly]) -> DiffPoly {
    let n = elems.len();
    let rows: Vec<Vec<DiffPoly>> = (0..n)
        .map(|i| elems.iter().map(|e| e.derive_n(i as u32)).collect())
        .collect();
    determinant(&rows)
}

fn determinant(rows: &[Vec<DiffPoly>]) -> DiffPoly {
    // Laplace expansion along the first row; only used for tiny sizes.
    let n = rows.len();
    if n == 0 {
        return DiffPoly::one();
    }
    let mut acc = DiffPoly::zero();
    for col in 0..n {
        let minor: Vec<Vec<DiffPoly>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = &rows[0][col] * &determinant(&minor);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// How the triple bracket <y1∂, y2∂, y3∂> acts on a generic y4∂.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleBracketAction {
    /// p with <y1∂, y2∂, y3∂>(y4∂) = p∂.
    pub action: DiffPoly,
    /// The Wronskian determinant W(y1, y2, y3).
    pub wronskian: DiffPoly,
    /// λ with p = λ·W·y4, when such a scalar exists.
    pub scalar: Option<Rational>,
}

/// Computes the triple-bracket operator on generic special derivations
/// and compares it with multiples of the Wronskian determinant.
pub fn triple_bracket_action() -> Result<TripleBracketAction> {
    let compiled = compile_lie_to_diffpoly(&triple_bracket_term(0, 1, 2, 3), 4)?;
    let ys: Vec<DiffPoly> = (0..3).map(DiffPoly::var).collect();
    let wronskian = wronskian_determinant(&ys);
    let base = &wronskian * &DiffPoly::var(3);
    let scalar = base.terms().next().and_then(|(m, c)| {
        let lambda = compiled.diff_poly.coeff(m) / c;
        (base.scale(&lambda) == compiled.diff_poly).then_some(lambda)
    });
    Ok(TripleBracketAction {
        action: compiled.diff_poly,
        wronskian,
        scalar,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{UniPoly, UniPolyRing};
    use crate::freelie::{standard_identity, LieTerm};

    fn x_pow(k: usize, c: i64) -> SpecialDerivation<UniPoly> {
        SpecialDerivation::new(UniPoly::monomial(rat(c), k))
    }

    #[test]
    fn wronskian_examples() {
        let qx = UniPolyRing::standard();
        let a = x_pow(3, 2);
        assert!(wronskian_bracket(&qx, &a, &a).unwrap().coeff.is_zero());
        // [∂, x∂] = ∂
        assert_eq!(
            wronskian_bracket(&qx, &x_pow(0, 1), &x_pow(1, 1)).unwrap(),
            x_pow(0, 1)
        );
        // [x∂, x²∂] = x²∂
        assert_eq!(
            wronskian_bracket(&qx, &x_pow(1, 1), &x_pow(2, 1)).unwrap(),
            x_pow(2, 1)
        );
    }

    #[test]
    fn mismatched_algebra_is_rejected() {
        let free = FreeDiff::new(1);
        let a = SpecialDerivation::new(DiffPoly::var(0));
        let b = SpecialDerivation::new(DiffPoly::var(3));
        assert!(matches!(
            wronskian_bracket(&free, &a, &b),
            Err(Error::Mismatch(_))
        ));
        assert!(Diff::new(free).element(DiffPoly::var(1)).is_err());
    }

    #[test]
    fn compile_single_bracket() {
        let f = LiePoly::term(
            rat(1),
            LieTerm::bracket(LieTerm::generator(0), LieTerm::generator(1)),
        );
        let c = compile_lie_to_diffpoly(&f, 2).unwrap();
        let expected = &(&DiffPoly::var(0) * &DiffPoly::deriv_var(1, 1))
            - &(&DiffPoly::deriv_var(0, 1) * &DiffPoly::var(1));
        assert_eq!(c.diff_poly, expected);
        assert!(compile_lie_to_diffpoly(&f, 1).is_err());
    }

    #[test]
    fn model_action_examples() {
        let free = FreeDiff::new(3);
        let (y1, y2) = (DiffPoly::var(0), DiffPoly::var(1));
        assert_eq!(
            model_action(&free, &y1, &y2).unwrap(),
            &y1 * &DiffPoly::deriv_var(1, 1)
        );
        assert!(model_action(&free, &y1, &DiffPoly::constant(rat(4)))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn model_action_oracle_holds() {
        let check = verify_model_action().unwrap();
        assert!(check.holds, "{} != {}", check.commutator, check.model);
    }

    #[test]
    fn model_action_is_a_derivation_and_linear_in_the_acting_element() {
        let free = FreeDiff::new(3);
        let (f, w1, w2) = (DiffPoly::var(0), DiffPoly::var(1), DiffPoly::var(2));
        let lhs = model_action(&free, &f, &(&w1 * &w2)).unwrap();
        let rhs = &(&model_action(&free, &f, &w1).unwrap() * &w2)
            + &(&w1 * &model_action(&free, &f, &w2).unwrap());
        assert_eq!(lhs, rhs);
        // with b = y3 multiplying g = y1
        let (g, w, b) = (f, w1, w2);
        assert_eq!(
            model_action(&free, &(&b * &g), &w).unwrap(),
            &b * &model_action(&free, &g, &w).unwrap()
        );
        // f·w'·g = g·w'·f
        assert_eq!(
            &model_action(&free, &g, &w).unwrap() * &b,
            &model_action(&free, &b, &w).unwrap() * &g
        );
    }

    #[test]
    fn localization_small_cases() {
        for (m, k) in [(0, 0), (1, 1), (2, 1)] {
            let c = verify_localization_bracket(m, k).unwrap();
            assert!(c.equal, "m={m} k={k}");
            assert!(c.residual_matches, "m={m} k={k}");
        }
        let c = verify_localization_bracket(0, 0).unwrap();
        assert_eq!(c.bracket.s_power, 0);
    }

    #[test]
    fn st3_does_not_compile_to_zero() {
        let c = compile_lie_to_diffpoly(&standard_identity(3).unwrap(), 3).unwrap();
        assert!(!c.is_identity());
    }

    #[test]
    fn wronskian_determinant_of_two() {
        let w = wronskian_determinant(&[DiffPoly::var(0), DiffPoly::var(1)]);
        let expected = &(&DiffPoly::var(0) * &DiffPoly::deriv_var(1, 1))
            - &(&DiffPoly::deriv_var(0, 1) * &DiffPoly::var(1));
        assert_eq!(w, expected);
    }
}
