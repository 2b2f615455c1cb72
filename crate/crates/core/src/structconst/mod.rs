//! Finite-dimensional Lie algebras given by structure constants.
//!
//! Only [e_i, e_j] with i < j is stored; antisymmetry supplies the rest.
//! The Jacobi identity is checked on every basis triple when an algebra is
//! built, so every [`StructConstAlgebra`] value is a Lie algebra.

mod builtin;
mod embedding;
mod ideal;
mod identity;
pub mod linalg;
mod rl;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use builtin::{abelian, heisenberg, sl2, sl_n, two_dim_nonabelian};
pub use embedding::{sl2_vector_fields_embedding, Sl2Embedding, Sl2Relation};
pub use ideal::{
    default_candidate_seeds, derived_subalgebra, ideal_closure, is_metabelian,
    nonprimality_witness_search, IdealSubspace, PrimalityReport, WitnessKind,
};
pub use identity::{check_identity, IdentityCheck};
pub use linalg::{OperatorMatrix, Span, Vector};
pub use rl::{
    reconstruction_check, rl_report, triple_bracket_op, CheckOutcome, ReconstructionReport,
    RlReport,
};

use crate::error::{Error, Result};
use crate::freelie::LieCarrier;
use crate::rational::{parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructConstAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    constants: BTreeMap<(usize, usize), Vector>,
}

/// The JSON algebra file: `{"dim": n, "basis": [...], "brackets": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDescription {
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

/// Coordinates of [basis_i, basis_j], i < j, as rational strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<String>,
}

impl StructConstAlgebra {
    /// Builds and validates an algebra from [e_i, e_j] for i < j. Missing
    /// pairs bracket to zero.
    pub fn new(
        basis_names: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), Vector)>,
    ) -> Result<Self> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(Error::Dimension("an algebra needs at least one basis vector".into()));
        }
        let unique: BTreeSet<&String> = basis_names.iter().collect();
        if unique.len() != dim {
            return Err(Error::Malformed("duplicate basis names".into()));
        }
        let mut constants = BTreeMap::new();
        for ((i, j), v) in brackets {
            if i >= dim || j >= dim {
                return Err(Error::Dimension(format!(
                    "bracket ({i}, {j}) outside a {dim}-dimensional basis"
                )));
            }
            if i >= j {
                return Err(Error::Malformed(format!(
                    "bracket ({i}, {j}) must be stored with i < j"
                )));
            }
            if v.dim() != dim {
                return Err(Error::Dimension(format!(
                    "bracket ({i}, {j}) has {} coordinates, expected {dim}",
                    v.dim()
                )));
            }
            if constants.contains_key(&(i, j)) {
                return Err(Error::Malformed(format!("bracket ({i}, {j}) given twice")));
            }
            if !v.is_zero() {
                constants.insert((i, j), v);
            }
        }
        let algebra = StructConstAlgebra {
            dim,
            basis_names,
            constants,
        };
        algebra.validate_jacobi()?;
        Ok(algebra)
    }

    pub fn from_description(desc: &AlgebraDescription) -> Result<Self> {
        if desc.basis.len() != desc.dim {
            return Err(Error::Dimension(format!(
                "dim is {} but {} basis names were given",
                desc.dim,
                desc.basis.len()
            )));
        }
        let mut brackets = Vec::new();
        for entry in &desc.brackets {
            let coeffs = entry
                .coeffs
                .iter()
                .map(|c| parse_rational(c))
                .collect::<Result<Vec<_>>>()?;
            brackets.push(((entry.i, entry.j), Vector(coeffs)));
        }
        StructConstAlgebra::new(desc.basis.clone(), brackets)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let desc: AlgebraDescription =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        StructConstAlgebra::from_description(&desc)
    }

    pub fn to_description(&self) -> AlgebraDescription {
        AlgebraDescription {
            dim: self.dim,
            basis: self.basis_names.clone(),
            brackets: self
                .constants
                .iter()
                .map(|(&(i, j), v)| BracketEntry {
                    i,
                    j,
                    coeffs: v.0.iter().map(ToString::to_string).collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_description()).expect("description serializes")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|n| n == name)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::unit(self.dim, i)
    }

    pub fn basis(&self) -> Vec<Vector> {
        (0..self.dim).map(|i| self.basis_vector(i)).collect()
    }

    /// [e_i, e_j]
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Vector::zero(self.dim),
            Less => self
                .constants
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| Vector::zero(self.dim)),
            Greater => self
                .constants
                .get(&(j, i))
                .map(|v| v.scale(&-Rational::from_integer(1.into())))
                .unwrap_or_else(|| Vector::zero(self.dim)),
        }
    }

    pub fn bracket(&self, u: &Vector, v: &Vector) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (i, a) in u.nonzero_entries() {
            for (j, b) in v.nonzero_entries() {
                if i == j {
                    continue;
                }
                let (lo, hi, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
                if let Some(c) = self.constants.get(&(lo, hi)) {
                    let coeff = a * b * Rational::from_integer(sign.into());
                    out.axpy(&coeff, c);
                }
            }
        }
        out
    }

    /// ad u: the matrix of v -> [u, v].
    pub fn ad(&self, u: &Vector) -> OperatorMatrix {
        let columns: Vec<Vector> = (0..self.dim)
            .map(|j| self.bracket(u, &self.basis_vector(j)))
            .collect();
        OperatorMatrix::from_columns(&columns)
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.is_empty()
    }

    fn validate_jacobi(&self) -> Result<()> {
        let e = |i| self.basis_vector(i);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let sum = self
                        .bracket(&e(i), &self.basis_bracket(j, k))
                        .add(&self.bracket(&e(j), &self.basis_bracket(k, i)))
                        .add(&self.bracket(&e(k), &self.basis_bracket(i, j)));
                    if !sum.is_zero() {
                        let n = &self.basis_names;
                        return Err(Error::JacobiViolation(
                            n[i].clone(),
                            n[j].clone(),
                            n[k].clone(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Renders a vector as a combination of basis names.
    pub fn format_vector(&self, v: &Vector) -> String {
        let parts: Vec<String> = v
            .nonzero_entries()
            .map(|(i, c)| format!("{c}*{}", self.basis_names[i]))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl LieCarrier for StructConstAlgebra {
    type Elem = Vector;

    fn zero(&self) -> Vector {
        Vector::zero(self.dim)
    }

    fn add(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.add(b))
    }

    fn scale(&self, c: &Rational, a: &Vector) -> Result<Vector> {
        self.check(a)?;
        Ok(a.scale(c))
    }

    fn bracket(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        self.check(a)?;
        self.check(b)?;
        Ok(StructConstAlgebra::bracket(self, a, b))
    }

    fn is_zero(&self, a: &Vector) -> Result<bool> {
        Ok(a.0.iter().all(Zero::is_zero))
    }
}

impl StructConstAlgebra {
    fn check(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.dim {
            return Err(Error::Dimension(format!(
                "vector of length {} in a {}-dimensional algebra",
                v.dim(),
                self.dim
            )));
        }
        Ok(())
    }
}
