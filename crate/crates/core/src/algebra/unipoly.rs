use std::fmt;

use num_traits::{One, Signed, Zero};

use super::DiffAlgebra;
use crate::error::Result;
use crate::rational::{rat, Rational};

/// Dense univariate polynomial over Q, coefficients in increasing degree,
/// with no trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// c * t^k
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        UniPoly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn pow(&self, k: u32) -> UniPoly {
        (0..k).fold(UniPoly::one(), |acc, _| acc.mul(self))
    }

    /// d/dt
    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let power = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if k == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{abs}*{power}")?;
            }
        }
        Ok(())
    }
}

/// The derivation carried by a copy of Q[t].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UniDerivation {
    /// d/dt, so t' = 1.
    Standard,
    /// The zero derivation, so t' = 0.
    Zero,
}

/// Q[t] with either d/dt or the zero derivation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniPolyRing {
    pub derivation: UniDerivation,
}

impl UniPolyRing {
    pub fn standard() -> Self {
        UniPolyRing {
            derivation: UniDerivation::Standard,
        }
    }

    /// Q[t] with every element constant.
    pub fn constants() -> Self {
        UniPolyRing {
            derivation: UniDerivation::Zero,
        }
    }

    pub fn t(&self) -> UniPoly {
        UniPoly::monomial(Rational::one(), 1)
    }
}

impl DiffAlgebra for UniPolyRing {
    type Elem = UniPoly;

    fn describe(&self) -> String {
        match self.derivation {
            UniDerivation::Standard => "Q[t], t' = 1".to_string(),
            UniDerivation::Zero => "Q[t], t' = 0".to_string(),
        }
    }

    fn zero(&self) -> UniPoly {
        UniPoly::zero()
    }

    fn one(&self) -> UniPoly {
        UniPoly::one()
    }

    fn add(&self, a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
        Ok(a.add(b))
    }

    fn scale(&self, c: &Rational, a: &UniPoly) -> Result<UniPoly> {
        Ok(a.scale(c))
    }

    fn mul(&self, a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
        Ok(a.mul(b))
    }

    fn derive(&self, a: &UniPoly) -> Result<UniPoly> {
        Ok(match self.derivation {
            UniDerivation::Standard => a.derivative(),
            UniDerivation::Zero => UniPoly::zero(),
        })
    }

    fn is_zero(&self, a: &UniPoly) -> Result<bool> {
        Ok(a.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let t = UniPolyRing::standard().t();
        let p = t.pow(2).add(&t.scale(&rat(-3))).add(&UniPoly::constant(rat(2)));
        assert_eq!(p.to_string(), "t^2 - 3*t + 2");
        assert_eq!(p.derivative().to_string(), "2*t - 3");
        assert_eq!(p.eval(&rat(1)), rat(0));
        assert_eq!(p.scale(&rat(0)), UniPoly::zero());
    }

    #[test]
    fn zero_derivation_kills_everything() {
        let ring = UniPolyRing::constants();
        assert!(ring.derive(&ring.t()).unwrap().is_zero());
    }
}
