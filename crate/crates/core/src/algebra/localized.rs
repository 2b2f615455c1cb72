use std::fmt;

use super::{DerivVar, DiffAlgebra, DiffPoly, FreeDiff};
use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// The fraction numerator / s^s_power. Not reduced: equal fractions may
/// have different representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizedElement {
    pub numerator: DiffPoly,
    pub s_power: u32,
}

impl LocalizedElement {
    pub fn new(numerator: DiffPoly, s_power: u32) -> Self {
        LocalizedElement { numerator, s_power }
    }
}

impl fmt::Display for LocalizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.s_power {
            0 => write!(f, "{}", self.numerator),
            k => write!(f, "({})/s^{k}", self.numerator),
        }
    }
}

/// A free differential algebra localized at one of its indeterminates s,
/// with the quotient-rule derivation. The base ring is a domain, so
/// a/s^m = b/s^k exactly when a*s^k = b*s^m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Localization {
    pub base: FreeDiff,
    pub s: usize,
}

impl Localization {
    pub fn new(base: FreeDiff, s: usize) -> Result<Self> {
        if s >= base.n_vars {
            return Err(Error::GeneratorOutOfRange {
                index: s,
                n: base.n_vars,
            });
        }
        Ok(Localization { base, s })
    }

    pub fn s(&self) -> DiffPoly {
        DiffPoly::var(self.s)
    }

    pub fn localize(&self, a: DiffPoly, m: u32) -> LocalizedElement {
        LocalizedElement::new(a, m)
    }

    fn s_pow(&self, k: u32) -> DiffPoly {
        self.s().pow(k)
    }
}

impl DiffAlgebra for Localization {
    type Elem = LocalizedElement;

    fn describe(&self) -> String {
        format!("{}[1/{}]", self.base.describe(), DerivVar::new(self.s, 0))
    }

    fn zero(&self) -> LocalizedElement {
        LocalizedElement::new(DiffPoly::zero(), 0)
    }

    fn one(&self) -> LocalizedElement {
        LocalizedElement::new(DiffPoly::one(), 0)
    }

    fn add(&self, a: &LocalizedElement, b: &LocalizedElement) -> Result<LocalizedElement> {
        let top = a.s_power.max(b.s_power);
        let num = &(&a.numerator * &self.s_pow(top - a.s_power))
            + &(&b.numerator * &self.s_pow(top - b.s_power));
        Ok(LocalizedElement::new(num, top))
    }

    fn scale(&self, c: &Rational, a: &LocalizedElement) -> Result<LocalizedElement> {
        Ok(LocalizedElement::new(a.numerator.scale(c), a.s_power))
    }

    fn mul(&self, a: &LocalizedElement, b: &LocalizedElement) -> Result<LocalizedElement> {
        Ok(LocalizedElement::new(
            &a.numerator * &b.numerator,
            a.s_power + b.s_power,
        ))
    }

    /// (a/s^m)' = a'/s^m - m a s'/s^(m+1), written over s^(m+1) when m > 0.
    fn derive(&self, a: &LocalizedElement) -> Result<LocalizedElement> {
        let da = self.base.derive(&a.numerator)?;
        if a.s_power == 0 {
            return Ok(LocalizedElement::new(da, 0));
        }
        let ds = self.base.derive(&self.s())?;
        let m = rat(a.s_power as i64);
        let num = &(&da * &self.s()) - &(&a.numerator * &ds).scale(&m);
        Ok(LocalizedElement::new(num, a.s_power + 1))
    }

    fn is_zero(&self, a: &LocalizedElement) -> Result<bool> {
        Ok(a.numerator.is_zero())
    }

    fn equal(&self, a: &LocalizedElement, b: &LocalizedElement) -> Result<bool> {
        Ok(&a.numerator * &self.s_pow(b.s_power) == &b.numerator * &self.s_pow(a.s_power))
    }

    fn contains(&self, a: &LocalizedElement) -> bool {
        self.base.contains(&a.numerator)
    }
}
