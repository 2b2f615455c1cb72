//! Exact rational scalars.
//!
//! `BigRational` already keeps every value reduced with a positive
//! denominator, so equality is structural. Its `Display` prints `p/q`, or
//! `p` when the denominator is one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}

/// n! / (n - k)!, the coefficient of t^(n-k) in the k-th derivative of t^n.
pub fn falling_factorial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for j in (n - k + 1)..=n {
        acc *= j;
    }
    Rational::from_integer(acc)
}

pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    falling_factorial(n, k) / factorial(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-2/-4").unwrap().to_string(), "1/2");
        assert_eq!(parse_rational("0/7").unwrap().to_string(), "0");
        assert_eq!(ratio(-3, 6).to_string(), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), rat(1));
        assert_eq!(factorial(5), rat(120));
        assert_eq!(falling_factorial(5, 2), rat(20));
        assert_eq!(falling_factorial(2, 3), rat(0));
        assert_eq!(binomial(6, 2), rat(15));
    }
}
