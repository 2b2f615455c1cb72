//! Sparse differential polynomials with exact rational coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::DiffAlgebra;
use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// The symbol y_i^(j): derivative of order `order` of the indeterminate
/// `var`. Ordered lexicographically on `(var, order)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DerivVar {
    pub var: usize,
    pub order: u32,
}

impl DerivVar {
    pub const fn new(var: usize, order: u32) -> Self {
        DerivVar { var, order }
    }

    pub const fn next(self) -> Self {
        DerivVar::new(self.var, self.order + 1)
    }
}

impl fmt::Display for DerivVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y{}", self.var + 1)?;
        match self.order {
            0 => Ok(()),
            o @ 1..=3 => write!(f, "{}", "'".repeat(o as usize)),
            o => write!(f, "^({o})"),
        }
    }
}

/// A power product of derivative variables, stored sorted with positive
/// exponents. The empty product is the unit monomial.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(DerivVar, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: DerivVar) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary factors, merging repeats and
    /// dropping zero exponents.
    pub fn from_factors<I: IntoIterator<Item = (DerivVar, u32)>>(factors: I) -> Self {
        let mut map: BTreeMap<DerivVar, u32> = BTreeMap::new();
        for (v, e) in factors {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(DerivVar, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: DerivVar) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// Degree in the derivative group of one indeterminate.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.0
            .iter()
            .filter(|(v, _)| v.var == var)
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn max_order(&self) -> u32 {
        self.0.iter().map(|(v, _)| v.order).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Leibniz rule on a power product: each factor v^e contributes
    /// e * v^(e-1) * v' times the rest.
    fn derive_terms(&self) -> impl Iterator<Item = (u32, Monomial)> + '_ {
        self.0.iter().enumerate().map(move |(idx, &(v, e))| {
            let mut factors = self.0.clone();
            if e == 1 {
                factors.remove(idx);
            } else {
                factors[idx].1 -= 1;
            }
            let rest = Monomial(factors);
            (e, rest.mul(&Monomial::var(v.next())))
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A differential polynomial over Q: a finite map from monomials to
/// nonzero coefficients. The zero polynomial is the empty map.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiffPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl DiffPoly {
    pub fn zero() -> Self {
        DiffPoly::default()
    }

    pub fn one() -> Self {
        DiffPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        DiffPoly::monomial(c, Monomial::one())
    }

    pub fn monomial(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        DiffPoly { terms }
    }

    /// The indeterminate y_var itself.
    pub fn var(var: usize) -> Self {
        DiffPoly::deriv_var(var, 0)
    }

    pub fn deriv_var(var: usize, order: u32) -> Self {
        DiffPoly::monomial(Rational::one(), Monomial::var(DerivVar::new(var, order)))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = DiffPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c * m` in place, keeping the no-zero-coefficient invariant.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> DiffPoly {
        if c.is_zero() {
            return DiffPoly::zero();
        }
        DiffPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> DiffPoly {
        let mut acc = DiffPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The derivation of the free differential algebra: linear, Leibniz,
    /// and y_i^(j) -> y_i^(j+1).
    pub fn derive(&self) -> DiffPoly {
        let mut out = DiffPoly::zero();
        for (m, c) in &self.terms {
            for (e, dm) in m.derive_terms() {
                out.add_term(dm, c * rat(e as i64));
            }
        }
        out
    }

    /// `derive` applied `k` times.
    pub fn derive_n(&self, k: u32) -> DiffPoly {
        let mut p = self.clone();
        for _ in 0..k {
            if p.is_zero() {
                break;
            }
            p = p.derive();
        }
        p
    }

    /// Highest derivative order that occurs (0 for constants).
    pub fn max_order(&self) -> u32 {
        self.terms.keys().map(Monomial::max_order).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Indices of the indeterminates that occur.
    pub fn vars(&self) -> BTreeSet<usize> {
        self.support().into_iter().map(|v| v.var).collect()
    }

    /// Derivative variables that occur.
    pub fn support(&self) -> BTreeSet<DerivVar> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(v, _)| *v))
            .collect()
    }

    /// True when every monomial has degree exactly one in the derivative
    /// group of each listed indeterminate.
    pub fn is_multilinear_in(&self, vars: &BTreeSet<usize>) -> bool {
        self.terms
            .keys()
            .all(|m| vars.iter().all(|&v| m.degree_in(v) == 1))
    }

    /// Splits into components that are homogeneous in the derivative group
    /// of `var`, keyed by that degree.
    pub fn homogeneous_components(&self, var: usize) -> BTreeMap<u32, DiffPoly> {
        let mut out: BTreeMap<u32, DiffPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree_in(var))
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Renames indeterminates, keeping derivative orders.
    pub fn rename_vars(&self, f: impl Fn(usize) -> usize) -> DiffPoly {
        DiffPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let m = Monomial::from_factors(
                m.factors()
                    .iter()
                    .map(|&(v, e)| (DerivVar::new(f(v.var), v.order), e)),
            );
            (m, c.clone())
        }))
    }

    /// Differential substitution: the unique differential homomorphism
    /// sending y_i to `assignment[i]`, so y_i^(j) goes to the j-th
    /// derivative of that element in `algebra`.
    pub fn substitute<A: DiffAlgebra>(
        &self,
        algebra: &A,
        assignment: &BTreeMap<usize, A::Elem>,
    ) -> Result<A::Elem> {
        // j-th derivatives of each assigned element, computed once.
        let mut derivatives: BTreeMap<DerivVar, A::Elem> = BTreeMap::new();
        for v in self.support() {
            if derivatives.contains_key(&v) {
                continue;
            }
            let base = assignment.get(&v.var).ok_or(Error::UnboundVariable(v.var))?;
            let mut cur = base.clone();
            for order in 0..=v.order {
                let key = DerivVar::new(v.var, order);
                if let Some(known) = derivatives.get(&key) {
                    cur = known.clone();
                } else {
                    if order > 0 {
                        cur = algebra.derive(&cur)?;
                    }
                    derivatives.insert(key, cur.clone());
                }
            }
        }
        let mut acc = algebra.zero();
        for (m, c) in &self.terms {
            let mut value = algebra.one();
            for &(v, e) in m.factors() {
                let base = &derivatives[&v];
                for _ in 0..e {
                    value = algebra.mul(&value, base)?;
                }
            }
            acc = algebra.add(&acc, &algebra.scale(c, &value)?)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &DiffPoly {
    type Output = DiffPoly;
    fn add(self, rhs: &DiffPoly) -> DiffPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &DiffPoly {
    type Output = DiffPoly;
    fn sub(self, rhs: &DiffPoly) -> DiffPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &DiffPoly {
    type Output = DiffPoly;
    fn neg(self) -> DiffPoly {
        DiffPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &DiffPoly {
    type Output = DiffPoly;
    fn mul(self, rhs: &DiffPoly) -> DiffPoly {
        let mut out = DiffPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for DiffPoly {
            type Output = DiffPoly;
            fn $method(self, rhs: DiffPoly) -> DiffPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for DiffPoly {
    type Output = DiffPoly;
    fn neg(self) -> DiffPoly {
        -&self
    }
}
