//! Point evaluations of differential polynomials, the Taylor map into
//! truncated power series, and the decision procedure for Lie identities
//! of vector fields on the formal line.
//!
//! A point φ: Q{y} → Q need not commute with the derivation. The Taylor
//! map φ̃(a) = Σ_j φ(a^(j)) x^j / j! always does, and φ̃(a) has constant
//! term φ(a). So p ≠ 0 is witnessed in Q[[x]] by any φ with φ(p) ≠ 0.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rand::Rng;

use crate::algebra::{DerivVar, DiffPoly, TruncSeriesRing, TruncatedSeries};
use crate::error::{Error, Result};
use crate::freelie::{evaluate, LiePoly};
use crate::random::{seeded, small_rational, SeededRng};
use crate::rational::{factorial, rat, ratio, Rational};
use crate::specder::{compile_lie_to_diffpoly, Diff, SpecialDerivation};

/// A ring homomorphism Q{y} → Q, given by its values on finitely many
/// derivative variables. Every other variable maps to 0.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PointEvaluation {
    pub values: BTreeMap<DerivVar, Rational>,
}

impl PointEvaluation {
    pub fn new(values: BTreeMap<DerivVar, Rational>) -> Self {
        let values = values.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        PointEvaluation { values }
    }

    pub fn value(&self, v: DerivVar) -> Rational {
        self.values.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn evaluate(&self, p: &DiffPoly) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in p.terms() {
            let mut term = c.clone();
            for &(v, e) in m.factors() {
                match self.values.get(&v) {
                    Some(x) => term *= num_traits::pow(x.clone(), e as usize),
                    None => {
                        term = Rational::zero();
                        break;
                    }
                }
            }
            total += term;
        }
        total
    }

    /// Small random rationals on y_i^(j) for i < n_vars and j <= max_order.
    pub fn random<R: Rng>(rng: &mut R, n_vars: usize, max_order: u32) -> Self {
        let mut values = BTreeMap::new();
        for var in 0..n_vars {
            for order in 0..=max_order {
                values.insert(DerivVar::new(var, order), small_rational(rng));
            }
        }
        PointEvaluation::new(values)
    }
}

impl fmt::Display for PointEvaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return write!(f, "all variables -> 0");
        }
        for (i, (v, c)) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v} -> {c}")?;
        }
        Ok(())
    }
}

/// φ̃(a) modulo x^(N+1).
pub fn taylor_map(a: &DiffPoly, phi: &PointEvaluation, n: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut current = a.clone();
    for j in 0..=n {
        coeffs.push(phi.evaluate(&current) / factorial(j as u32));
        if j < n {
            current = current.derive();
        }
    }
    TruncatedSeries::new(coeffs)
}

/// Grid values tried for each support variable, in order.
const GRID: [i64; 4] = [1, -1, 2, -2];
const GRID_BUDGET: usize = 4096;
const RANDOM_SEED: u64 = 0x5eed;

/// Some φ with φ(p) ≠ 0. Tries the origin, then grid points in
/// {0, ±1, ±2}^support by increasing number of nonzero coordinates (so
/// unit vectors come first), then seeded random rationals of growing size.
pub fn find_point(p: &DiffPoly) -> Result<PointEvaluation> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let support: Vec<DerivVar> = p.support().into_iter().collect();
    let origin = PointEvaluation::default();
    if !origin.evaluate(p).is_zero() {
        return Ok(origin);
    }
    let mut tried = 0;
    for weight in 1..=support.len() {
        for positions in itertools::Itertools::combinations(0..support.len(), weight) {
            let mut digits = vec![0usize; weight];
            loop {
                let values = positions
                    .iter()
                    .zip(&digits)
                    .map(|(&k, &d)| (support[k], rat(GRID[d])))
                    .collect();
                let phi = PointEvaluation::new(values);
                if !phi.evaluate(p).is_zero() {
                    return Ok(phi);
                }
                tried += 1;
                if tried >= GRID_BUDGET {
                    return Ok(random_point(p, &support));
                }
                // odometer, last position fastest
                let mut pos = weight;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    digits[pos] += 1;
                    if digits[pos] < GRID.len() {
                        break;
                    }
                    digits[pos] = 0;
                }
                if digits.iter().all(|&d| d == 0) {
                    break;
                }
            }
        }
    }
    Ok(random_point(p, &support))
}

/// A nonzero polynomial of degree d vanishes at a uniformly random point
/// of S^k with probability at most d/|S|, so this terminates.
fn random_point(p: &DiffPoly, support: &[DerivVar]) -> PointEvaluation {
    let mut rng: SeededRng = seeded(RANDOM_SEED);
    let mut bound: i64 = 8;
    loop {
        for _ in 0..64 {
            let values = support
                .iter()
                .map(|&v| (v, ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))))
                .collect();
            let phi = PointEvaluation::new(values);
            if !phi.evaluate(p).is_zero() {
                return phi;
            }
        }
        bound = bound.saturating_mul(4);
    }
}

/// Data showing that f is not an identity on vector fields over Q[[x]]:
/// the special derivations s_i∂ with s_i = φ̃(y_i) give f(s_1∂, ...) = v∂
/// with v nonzero within its known coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct W1Certificate {
    pub point: PointEvaluation,
    pub truncation: usize,
    pub series: Vec<TruncatedSeries>,
    pub value: TruncatedSeries,
}

impl W1Certificate {
    /// Re-evaluates f at the stored series.
    pub fn verify(&self, f: &LiePoly) -> Result<bool> {
        let value = evaluate_at_series(f, &self.series, self.truncation)?;
        Ok(value == self.value && !value.is_zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct W1Verdict {
    pub holds: bool,
    /// f(y_1∂, ..., y_n∂) = p∂
    pub diff_poly: DiffPoly,
    pub certificate: Option<W1Certificate>,
}

fn evaluate_at_series(
    f: &LiePoly,
    series: &[TruncatedSeries],
    truncation: usize,
) -> Result<TruncatedSeries> {
    let carrier = Diff::new(TruncSeriesRing::new(truncation));
    let assignment = series
        .iter()
        .enumerate()
        .map(|(i, s)| (i, SpecialDerivation::new(s.clone())))
        .collect();
    Ok(evaluate(f, &carrier, &assignment)?.coeff)
}

/// Default truncation: highest derivative order in p, plus deg f, plus 2.
pub fn default_truncation(p: &DiffPoly, f: &LiePoly) -> usize {
    p.max_order() as usize + f.degree() + 2
}

/// Decides whether f is an identity of Diff Q[[x]].
pub fn is_w1_identity(f: &LiePoly, n: usize) -> Result<W1Verdict> {
    is_w1_identity_with(f, n, None)
}

/// As [`is_w1_identity`], with an optional truncation order for the
/// certificate. Orders below the default are raised to it.
pub fn is_w1_identity_with(f: &LiePoly, n: usize, truncation: Option<usize>) -> Result<W1Verdict> {
    let compiled = compile_lie_to_diffpoly(f, n)?;
    let p = compiled.diff_poly;
    if p.is_zero() {
        return Ok(W1Verdict {
            holds: true,
            diff_poly: p,
            certificate: None,
        });
    }
    let truncation = truncation
        .unwrap_or(0)
        .max(default_truncation(&p, f));
    let point = find_point(&p)?;
    let series: Vec<TruncatedSeries> = (0..n)
        .map(|i| taylor_map(&DiffPoly::var(i), &point, truncation))
        .collect();
    let value = evaluate_at_series(f, &series, truncation)?;
    if value.is_zero() || value.coeff(0) != Some(&point.evaluate(&p)) {
        return Err(Error::Malformed(format!(
            "Taylor certificate failed at {point}: got {value}"
        )));
    }
    Ok(W1Verdict {
        holds: false,
        diff_poly: p,
        certificate: Some(W1Certificate {
            point,
            truncation,
            series,
            value,
        }),
    })
}

impl W1Verdict {
    pub fn value_at_point(&self) -> Option<Rational> {
        self.certificate
            .as_ref()
            .and_then(|c| c.value.coeff(0).cloned())
    }
}

impl fmt::Display for W1Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "point: {}", self.point)?;
        writeln!(f, "truncation order: {}", self.truncation)?;
        for (i, s) in self.series.iter().enumerate() {
            writeln!(f, "y{} -> {}", i + 1, s)?;
        }
        write!(f, "value: ({})∂", self.value)?;
        if self.value.coeff(0).is_some_and(|c| !c.is_zero()) {
            write!(f, ", constant term nonzero")?;
        }
        Ok(())
    }
}
