use std::fmt;

use num_traits::{One, Signed, Zero};

use super::DiffAlgebra;
use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// A power series in x known modulo x^precision. Stores exactly
/// `precision` coefficients; precision 0 means nothing is known.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series with coefficients c_0..c_N known, i.e. valid order N.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn zero(valid_order: usize) -> Self {
        TruncatedSeries::new(vec![Rational::zero(); valid_order + 1])
    }

    pub fn constant(c: Rational, valid_order: usize) -> Self {
        let mut s = TruncatedSeries::zero(valid_order);
        s.coeffs[0] = c;
        s
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&Rational> {
        self.coeffs.get(k)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// Largest N with c_0..c_N known; `None` once every coefficient has
    /// been lost to differentiation.
    pub fn valid_order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn truncate(&self, precision: usize) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().take(precision).cloned().collect())
    }

    /// Zero within the known coefficients.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Equality up to the smaller precision.
    pub fn agrees_with(&self, other: &TruncatedSeries) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.precision().min(other.precision());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries::new(out)
    }

    /// d/dx; the result is known to one fewer coefficient.
    pub fn derivative(&self) -> TruncatedSeries {
        TruncatedSeries::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
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
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.precision())
    }
}

/// Q[[x]] modulo x^(N+1), with d/dx.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncSeriesRing {
    pub order: usize,
}

impl TruncSeriesRing {
    pub fn new(order: usize) -> Self {
        TruncSeriesRing { order }
    }

    /// The series x.
    pub fn x(&self) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(self.order);
        if self.order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<Rational>) -> TruncatedSeries {
        coeffs.resize(self.order + 1, Rational::zero());
        TruncatedSeries::new(coeffs)
    }
}

impl DiffAlgebra for TruncSeriesRing {
    type Elem = TruncatedSeries;

    fn describe(&self) -> String {
        format!("Q[[x]] mod x^{}", self.order + 1)
    }

    fn zero(&self) -> TruncatedSeries {
        TruncatedSeries::zero(self.order)
    }

    fn one(&self) -> TruncatedSeries {
        TruncatedSeries::constant(Rational::one(), self.order)
    }

    fn add(&self, a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.add(b))
    }

    fn scale(&self, c: &Rational, a: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check(a)?;
        Ok(a.scale(c))
    }

    fn mul(&self, a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.mul(b))
    }

    fn derive(&self, a: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check(a)?;
        Ok(a.derivative())
    }

    fn is_zero(&self, a: &TruncatedSeries) -> Result<bool> {
        Ok(a.is_zero())
    }

    fn equal(&self, a: &TruncatedSeries, b: &TruncatedSeries) -> Result<bool> {
        Ok(a.agrees_with(b))
    }

    fn contains(&self, a: &TruncatedSeries) -> bool {
        a.precision() <= self.order + 1
    }
}

impl TruncSeriesRing {
    fn check(&self, a: &TruncatedSeries) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::Mismatch(self.describe()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_tracking() {
        let ring = TruncSeriesRing::new(3);
        let x = ring.x();
        let one_plus_x = ring.add(&ring.one(), &x).unwrap();
        let sq = ring.mul(&one_plus_x, &one_plus_x).unwrap();
        assert_eq!(sq.to_string(), "1 + 2*x + x^2 + O(x^4)");
        let d = ring.derive(&sq).unwrap();
        assert_eq!(d.valid_order(), Some(2));
        // mixing precisions keeps the smaller one
        assert_eq!(ring.add(&d, &x).unwrap().precision(), 3);
        assert!(ring.equal(&d, &ring.from_coeffs(vec![rat(2), rat(2), rat(0), rat(5)])).unwrap());
    }

    #[test]
    fn derivation_exhausts_precision() {
        let ring = TruncSeriesRing::new(0);
        let c = ring.one();
        let d = ring.derive(&c).unwrap();
        assert_eq!(d.valid_order(), None);
        assert!(d.is_zero());
    }

    #[test]
    fn rejects_longer_series() {
        let ring = TruncSeriesRing::new(1);
        let big = TruncSeriesRing::new(4).one();
        assert!(ring.mul(&big, &big).is_err());
    }
}
