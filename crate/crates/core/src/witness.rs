//! Constructive searches: n with a^(n)·b ≠ 0, multilinearization and
//! polarization of differential polynomials, and points of Q[t] where a
//! multilinear differential polynomial does not vanish.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_traits::Zero;

use crate::algebra::{
    DerivVar, DiffAlgebra, DiffPoly, DirectProduct, Monomial, UniPoly, UniPolyRing,
};
use crate::error::{Error, Result};
use crate::rational::{falling_factorial, Rational};

pub const DEFAULT_MAX_N: u32 = 32;
pub const DEFAULT_DEGREE_BUDGET: u32 = 10;

/// Why a search that found nothing can stop looking.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stabilization {
    /// a^(k) = 0, so every later iterate vanishes too.
    Vanished { at: u32 },
    /// a^(k) = a^(start); later iterates repeat ones already tried.
    Cycle { start: u32, at: u32 },
}

impl fmt::Display for Stabilization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stabilization::Vanished { at } => write!(f, "derivative of order {at} is zero"),
            Stabilization::Cycle { start, at } => {
                write!(f, "derivative of order {at} repeats order {start}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport<W, V> {
    pub found: bool,
    pub witness: Option<W>,
    pub value: Option<V>,
    /// Candidates examined.
    pub budget_used: usize,
    pub stabilization: Option<Stabilization>,
}

impl<W, V> WitnessReport<W, V> {
    /// Found, or proven absent.
    pub fn conclusive(&self) -> bool {
        self.found || self.stabilization.is_some()
    }
}

/// Least n ≤ `max_n` with a^(n)·b ≠ 0. Call with b = a for the semiprime
/// version.
pub fn prime_character_search<A: DiffAlgebra>(
    algebra: &A,
    a: &A::Elem,
    b: &A::Elem,
    max_n: u32,
) -> Result<WitnessReport<u32, A::Elem>> {
    if algebra.is_zero(a)? || algebra.is_zero(b)? {
        return Err(Error::ZeroElement);
    }
    let mut seen: Vec<A::Elem> = Vec::new();
    let mut current = a.clone();
    for n in 0..=max_n {
        if n > 0 {
            current = algebra.derive(&current)?;
            if algebra.is_zero(&current)? {
                return Ok(not_found(n as usize, Stabilization::Vanished { at: n }));
            }
            for (k, earlier) in seen.iter().enumerate() {
                if algebra.equal(earlier, &current)? {
                    let stab = Stabilization::Cycle {
                        start: k as u32,
                        at: n,
                    };
                    return Ok(not_found(n as usize, stab));
                }
            }
        }
        let product = algebra.mul(&current, b)?;
        if !algebra.is_zero(&product)? {
            return Ok(WitnessReport {
                found: true,
                witness: Some(n),
                value: Some(product),
                budget_used: n as usize + 1,
                stabilization: None,
            });
        }
        seen.push(current.clone());
    }
    Ok(WitnessReport {
        found: false,
        witness: None,
        value: None,
        budget_used: max_n as usize + 1,
        stabilization: None,
    })
}

fn not_found<W, V>(used: usize, stab: Stabilization) -> WitnessReport<W, V> {
    WitnessReport {
        found: false,
        witness: None,
        value: None,
        budget_used: used,
        stabilization: Some(stab),
    }
}

/// Q[a] ⊕ Q[b] with a' = 0 and b' = 1, i.e. Q[t] with the zero
/// derivation next to Q[t] with d/dt.
pub fn mixed_algebra() -> DirectProduct<UniPolyRing> {
    DirectProduct::new(vec![UniPolyRing::constants(), UniPolyRing::standard()])
        .expect("two components")
}

fn first_fresh_var(p: &DiffPoly) -> usize {
    p.vars().last().map_or(0, |v| v + 1)
}

/// Full polarization in `var`. For each homogeneous layer of degree
/// d ≥ 1, the component of p(z_1 + ... + z_d) linear in each fresh z_k,
/// where z_k is the indeterminate numbered (largest index in p) + k.
/// Setting every z_k back to `var` gives d! times the layer.
pub fn multilinearize(p: &DiffPoly, var: usize) -> Result<Vec<DiffPoly>> {
    let base = first_fresh_var(p);
    let mut out = Vec::new();
    for (d, layer) in p.homogeneous_components(var) {
        if d == 0 {
            continue;
        }
        let mut result = DiffPoly::zero();
        for (m, c) in layer.terms() {
            let mut orders = Vec::new();
            let mut rest = Vec::new();
            for &(v, e) in m.factors() {
                if v.var == var {
                    orders.extend(std::iter::repeat_n(v.order, e as usize));
                } else {
                    rest.push((v, e));
                }
            }
            for perm in (0..d as usize).permutations(d as usize) {
                let mut factors = rest.clone();
                factors.extend(
                    orders
                        .iter()
                        .zip(&perm)
                        .map(|(&order, &k)| (DerivVar::new(base + k, order), 1)),
                );
                result.add_term(Monomial::from_factors(factors), c.clone());
            }
        }
        out.push(result);
    }
    if out.is_empty() {
        return Err(Error::ConstantInVariable(var));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polarization {
    /// q(x, y) = p(xy) - x p(y) - y p(x) with x = y1, y = y2.
    pub q: DiffPoly,
    pub vanishes: bool,
    /// Highest derivative order n in p.
    pub order: u32,
    /// For n ≥ 2: x^(n-1) y' and its expected coefficient n·c_n.
    pub key_monomial: Option<(Monomial, Rational)>,
    pub key_monomial_present: bool,
}

/// p must be Σ c_j x^(j) in the single indeterminate x = y1.
pub fn polarize_product(p: &DiffPoly) -> Result<Polarization> {
    let linear = !p.is_zero()
        && p.vars().iter().all(|&v| v == 0)
        && p.terms().all(|(m, _)| m.degree() == 1);
    if !linear {
        return Err(Error::NotLinear);
    }
    let x = DiffPoly::var(0);
    let y = DiffPoly::var(1);
    let xy = &x * &y;
    let mut p_xy = DiffPoly::zero();
    for (m, c) in p.terms() {
        let (v, _) = m.factors()[0];
        p_xy = &p_xy + &xy.derive_n(v.order).scale(c);
    }
    let p_y = p.rename_vars(|_| 1);
    let q = &(&p_xy - &(&x * &p_y)) - &(&y * p);
    let order = p.max_order();
    let key_monomial = (order >= 2).then(|| {
        let c_n = p.coeff(&Monomial::var(DerivVar::new(0, order)));
        let m = Monomial::from_factors([(DerivVar::new(0, order - 1), 1), (DerivVar::new(1, 1), 1)]);
        (m, c_n * Rational::from_integer(order.into()))
    });
    let key_monomial_present = key_monomial
        .as_ref()
        .is_some_and(|(m, c)| q.coeff(m) == *c && !c.is_zero());
    Ok(Polarization {
        vanishes: q.is_zero(),
        q,
        order,
        key_monomial,
        key_monomial_present,
    })
}

/// Replaces `var` by t^j in a polynomial multilinear in `var`, with t
/// written as the plain indeterminate `tvar`.
fn specialize(p: &DiffPoly, var: usize, j: u32, tvar: usize) -> DiffPoly {
    let mut out = DiffPoly::zero();
    for (m, c) in p.terms() {
        let mut coeff = c.clone();
        let mut factors = Vec::new();
        let mut t_power = 0;
        for &(v, e) in m.factors() {
            if v.var == var {
                coeff *= falling_factorial(j, v.order);
                t_power += j.saturating_sub(v.order);
            } else {
                factors.push((v, e));
            }
        }
        if coeff.is_zero() {
            continue;
        }
        let mut m = Monomial::from_factors(factors);
        if t_power > 0 {
            m = m.mul(&Monomial::from_factors([(DerivVar::new(tvar, 0), t_power)]));
        }
        out.add_term(m, coeff);
    }
    out
}

fn to_unipoly(p: &DiffPoly, tvar: usize) -> UniPoly {
    let mut coeffs = Vec::new();
    for (m, c) in p.terms() {
        let k = m.exponent(DerivVar::new(tvar, 0)) as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::zero());
        }
        coeffs[k] += c;
    }
    UniPoly::new(coeffs)
}

pub type NonvanishingReport = WitnessReport<BTreeMap<usize, UniPoly>, UniPoly>;

/// Monomials t^j, j ≤ `degree_budget`, making a multilinear p nonzero in
/// Q[t]. Variables are fixed from the last to the first; each choice must
/// leave a nonzero polynomial in the rest, and dead ends backtrack.
pub fn nonvanishing_witness(p: &DiffPoly, degree_budget: u32) -> Result<NonvanishingReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vars: Vec<usize> = p.vars().into_iter().collect();
    if !p.is_multilinear_in(&vars.iter().copied().collect::<BTreeSet<_>>()) {
        return Err(Error::NotMultilinear);
    }
    let tvar = first_fresh_var(p);
    let mut used = 0;
    let mut chosen = BTreeMap::new();
    let found = descend(p, &vars, tvar, degree_budget, &mut chosen, &mut used);
    let Some(value) = found else {
        return Ok(WitnessReport {
            found: false,
            witness: None,
            value: None,
            budget_used: used,
            stabilization: None,
        });
    };
    let assignment: BTreeMap<usize, UniPoly> = chosen
        .into_iter()
        .map(|(v, j)| (v, UniPoly::monomial(Rational::from_integer(1.into()), j as usize)))
        .collect();
    let check = p.substitute(&UniPolyRing::standard(), &assignment)?;
    if check != value || check.is_zero() {
        return Err(Error::Malformed(format!(
            "witness re-evaluates to {check}, expected {value}"
        )));
    }
    Ok(WitnessReport {
        found: true,
        witness: Some(assignment),
        value: Some(value),
        budget_used: used,
        stabilization: None,
    })
}

fn descend(
    p: &DiffPoly,
    vars: &[usize],
    tvar: usize,
    budget: u32,
    chosen: &mut BTreeMap<usize, u32>,
    used: &mut usize,
) -> Option<UniPoly> {
    let Some((&var, rest)) = vars.split_last() else {
        return Some(to_unipoly(p, tvar));
    };
    for j in 0..=budget {
        *used += 1;
        let q = specialize(p, var, j, tvar);
        if q.is_zero() {
            continue;
        }
        chosen.insert(var, j);
        if let Some(v) = descend(&q, rest, tvar, budget, chosen, used) {
            return Some(v);
        }
        chosen.remove(&var);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ProductElement, TruncSeriesRing, UniPolyRing};
    use crate::freelie::standard_identity;
    use crate::rational::{factorial, rat};
    use crate::specder::compile_lie_to_diffpoly;

    fn y(var: usize, order: u32) -> DiffPoly {
        DiffPoly::deriv_var(var, order)
    }

    #[test]
    fn domain_gives_zero_order() {
        let ring = UniPolyRing::standard();
        let r = prime_character_search(&ring, &ring.t(), &UniPoly::one(), DEFAULT_MAX_N).unwrap();
        assert!(r.found);
        assert_eq!(r.witness, Some(0));
        assert_eq!(
            prime_character_search(&ring, &UniPoly::zero(), &UniPoly::one(), 4).unwrap_err(),
            Error::ZeroElement
        );
    }

    #[test]
    fn mixed_pair_is_conclusively_absent() {
        let alg = mixed_algebra();
        let u = ProductElement(vec![UniPoly::monomial(rat(1), 1), UniPoly::zero()]);
        let v = ProductElement(vec![UniPoly::zero(), UniPoly::one()]);
        let r = prime_character_search(&alg, &u, &v, DEFAULT_MAX_N).unwrap();
        assert!(!r.found);
        assert_eq!(r.stabilization, Some(Stabilization::Vanished { at: 1 }));
        assert!(r.conclusive());
        let s = prime_character_search(&alg, &u, &u, DEFAULT_MAX_N).unwrap();
        assert_eq!(s.witness, Some(0));
        assert_eq!(
            s.value,
            Some(ProductElement(vec![UniPoly::monomial(rat(1), 2), UniPoly::zero()]))
        );
    }

    #[test]
    fn cycle_is_detected() {
        // u = (e^x, 0) satisfies u' = u, and u·(0, 1) = 0
        let ring = TruncSeriesRing::new(4);
        let alg = DirectProduct::new(vec![ring, ring]).unwrap();
        let exp = ring.from_coeffs((0..5).map(|k| Rational::from_integer(1.into()) / factorial(k)).collect());
        let u = ProductElement(vec![exp, ring.zero()]);
        let v = ProductElement(vec![ring.zero(), ring.one()]);
        let r = prime_character_search(&alg, &u, &v, 10).unwrap();
        assert!(!r.found);
        assert_eq!(r.stabilization, Some(Stabilization::Cycle { start: 0, at: 1 }));
    }

    #[test]
    fn multilinearize_examples() {
        let sq = y(0, 0).pow(2);
        assert_eq!(multilinearize(&sq, 0).unwrap(), vec![&(&y(1, 0) * &y(2, 0)) * &DiffPoly::constant(rat(2))]);
        let lin = &y(0, 1) * &y(1, 0);
        assert_eq!(multilinearize(&lin, 0).unwrap(), vec![&y(2, 1) * &y(1, 0)]);
        let yy = &y(0, 0) * &y(0, 1);
        let expected = &(&y(1, 0) * &y(2, 1)) + &(&y(2, 0) * &y(1, 1));
        assert_eq!(multilinearize(&yy, 0).unwrap(), vec![expected]);
        assert_eq!(
            multilinearize(&y(1, 0), 0).unwrap_err(),
            Error::ConstantInVariable(0)
        );
    }

    #[test]
    fn polarization_examples() {
        let q = polarize_product(&y(0, 2)).unwrap();
        assert_eq!(q.q, (&y(0, 1) * &y(1, 1)).scale(&rat(2)));
        assert!(q.key_monomial_present);

        let q = polarize_product(&y(0, 0)).unwrap();
        assert_eq!(q.q, -(&y(0, 0) * &y(1, 0)));
        assert!(q.key_monomial.is_none());

        let q = polarize_product(&y(0, 1)).unwrap();
        assert!(q.vanishes);

        assert_eq!(polarize_product(&y(0, 0).pow(2)).unwrap_err(), Error::NotLinear);
        assert_eq!(polarize_product(&y(1, 0)).unwrap_err(), Error::NotLinear);
    }

    #[test]
    fn nonvanishing_examples() {
        let w = &(&y(0, 1) * &y(1, 0)) - &(&y(0, 0) * &y(1, 1));
        let r = nonvanishing_witness(&w, DEFAULT_DEGREE_BUDGET).unwrap();
        assert!(r.found);
        // x2 is fixed first: x2 = 1 leaves x1', so x1 = t
        let a = r.witness.unwrap();
        assert_eq!(a[&0], UniPoly::monomial(rat(1), 1));
        assert_eq!(a[&1], UniPoly::one());
        assert_eq!(r.value, Some(UniPoly::one()));
        // the assignment (1, t) gives -1
        let other = BTreeMap::from([(0, UniPoly::one()), (1, UniPoly::monomial(rat(1), 1))]);
        assert_eq!(
            w.substitute(&UniPolyRing::standard(), &other).unwrap(),
            UniPoly::constant(rat(-1))
        );

        let r = nonvanishing_witness(&y(0, 1), DEFAULT_DEGREE_BUDGET).unwrap();
        assert_eq!(r.witness.unwrap()[&0], UniPoly::monomial(rat(1), 1));
        assert_eq!(r.value, Some(UniPoly::one()));

        assert_eq!(
            nonvanishing_witness(&y(0, 0).pow(2), 3).unwrap_err(),
            Error::NotMultilinear
        );
        assert_eq!(
            nonvanishing_witness(&DiffPoly::zero(), 3).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn st4_witness() {
        let p = compile_lie_to_diffpoly(&standard_identity(4).unwrap(), 4)
            .unwrap()
            .diff_poly;
        let r = nonvanishing_witness(&p, DEFAULT_DEGREE_BUDGET).unwrap();
        assert!(r.found);
        let a = r.witness.unwrap();
        assert_eq!(a.len(), 4);
        assert!(!p.substitute(&UniPolyRing::standard(), &a).unwrap().is_zero());
    }

    #[test]
    fn budget_too_small() {
        // x1'' needs t^2 or higher
        let r = nonvanishing_witness(&y(0, 2), 1).unwrap();
        assert!(!r.found);
        assert!(!r.conclusive());
        assert_eq!(r.budget_used, 2);
    }
}
