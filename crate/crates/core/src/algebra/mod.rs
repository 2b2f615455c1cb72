//! Differential algebras over Q.
//!
//! [`DiffAlgebra`] is the interface every concrete differential algebra
//! exposes: ring operations, the derivation, and a zero test. Elements are
//! plain values; the algebra object carries whatever structure (the
//! derivation, a truncation order, the localizing element) its elements
//! need.

mod diffpoly;
mod localized;
mod product;
mod series;
mod unipoly;

use std::fmt;

pub use diffpoly::{DerivVar, DiffPoly, Monomial};
pub use localized::{Localization, LocalizedElement};
pub use product::{AnyAlgebra, AnyElement, DirectProduct, ProductElement};
pub use series::{TruncSeriesRing, TruncatedSeries};
pub use unipoly::{UniDerivation, UniPoly, UniPolyRing};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// Default hard limit on derivative orders in free differential algebras.
pub const DEFAULT_MAX_ORDER: u32 = 64;

/// A commutative differential Q-algebra.
pub trait DiffAlgebra {
    type Elem: Clone + fmt::Debug + fmt::Display;

    fn describe(&self) -> String;

    fn zero(&self) -> Self::Elem;

    fn one(&self) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    fn scale(&self, c: &Rational, a: &Self::Elem) -> Result<Self::Elem>;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    fn derive(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> Result<bool>;

    /// Membership test for values built outside the algebra.
    fn contains(&self, _a: &Self::Elem) -> bool {
        true
    }

    fn constant(&self, c: &Rational) -> Result<Self::Elem> {
        self.scale(c, &self.one())
    }

    fn neg(&self, a: &Self::Elem) -> Result<Self::Elem> {
        self.scale(&rat(-1), a)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        self.add(a, &self.neg(b)?)
    }

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool> {
        self.is_zero(&self.sub(a, b)?)
    }

    fn derive_n(&self, a: &Self::Elem, k: u32) -> Result<Self::Elem> {
        let mut cur = a.clone();
        for _ in 0..k {
            cur = self.derive(&cur)?;
        }
        Ok(cur)
    }
}

/// The free differential algebra Q{y_1, ..., y_n}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreeDiff {
    pub n_vars: usize,
    pub max_order: u32,
}

impl FreeDiff {
    pub fn new(n_vars: usize) -> Self {
        FreeDiff {
            n_vars,
            max_order: DEFAULT_MAX_ORDER,
        }
    }

    pub fn with_max_order(mut self, max_order: u32) -> Self {
        self.max_order = max_order;
        self
    }

    /// The generic element y_i.
    pub fn generator(&self, i: usize) -> Result<DiffPoly> {
        if i >= self.n_vars {
            return Err(Error::GeneratorOutOfRange {
                index: i,
                n: self.n_vars,
            });
        }
        Ok(DiffPoly::var(i))
    }
}

impl DiffAlgebra for FreeDiff {
    type Elem = DiffPoly;

    fn describe(&self) -> String {
        format!("Q{{y1..y{}}}", self.n_vars)
    }

    fn zero(&self) -> DiffPoly {
        DiffPoly::zero()
    }

    fn one(&self) -> DiffPoly {
        DiffPoly::one()
    }

    fn add(&self, a: &DiffPoly, b: &DiffPoly) -> Result<DiffPoly> {
        Ok(a + b)
    }

    fn scale(&self, c: &Rational, a: &DiffPoly) -> Result<DiffPoly> {
        Ok(a.scale(c))
    }

    fn mul(&self, a: &DiffPoly, b: &DiffPoly) -> Result<DiffPoly> {
        Ok(a * b)
    }

    fn derive(&self, a: &DiffPoly) -> Result<DiffPoly> {
        let order = a.max_order() + 1;
        if !a.is_zero() && a.support().iter().any(|v| v.order >= self.max_order) {
            return Err(Error::OrderCapExceeded {
                order,
                cap: self.max_order,
            });
        }
        Ok(a.derive())
    }

    fn is_zero(&self, a: &DiffPoly) -> Result<bool> {
        Ok(a.is_zero())
    }

    fn contains(&self, a: &DiffPoly) -> bool {
        a.vars().iter().all(|&v| v < self.n_vars)
    }
}
