use std::collections::{BTreeMap, BTreeSet};

use super::{StructConstAlgebra, Vector};
use crate::error::{Error, Result};
use crate::freelie::{evaluate, is_multilinear, LiePoly};

/// Verdict of evaluating a multilinear Lie polynomial on basis tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    /// Variables in increasing order, paired with the basis index assigned
    /// to each, for the first tuple with a nonzero value.
    pub counterexample: Option<Vec<(usize, usize)>>,
    pub value: Option<Vector>,
    pub tuples_checked: usize,
}

/// For multilinear `f` it is enough to evaluate at all tuples of basis
/// vectors; tuples are visited in lexicographic order.
pub fn check_identity(
    algebra: &StructConstAlgebra,
    f: &LiePoly,
    vars: &BTreeSet<usize>,
) -> Result<IdentityCheck> {
    if !is_multilinear(f, vars) {
        return Err(Error::NotMultilinear);
    }
    if let Some(&g) = f.generators().difference(vars).next() {
        return Err(Error::UnboundGenerator(g));
    }
    let vars: Vec<usize> = vars.iter().copied().collect();
    let dim = algebra.dim();
    let mut indices = vec![0usize; vars.len()];
    let mut checked = 0;
    loop {
        let assignment: BTreeMap<usize, Vector> = vars
            .iter()
            .zip(&indices)
            .map(|(&var, &b)| (var, algebra.basis_vector(b)))
            .collect();
        let value = evaluate(f, algebra, &assignment)?;
        checked += 1;
        if !value.is_zero() {
            return Ok(IdentityCheck {
                holds: false,
                counterexample: Some(vars.iter().copied().zip(indices).collect()),
                value: Some(value),
                tuples_checked: checked,
            });
        }
        // odometer, last variable fastest
        let mut pos = vars.len();
        loop {
            if pos == 0 {
                return Ok(IdentityCheck {
                    holds: true,
                    counterexample: None,
                    value: None,
                    tuples_checked: checked,
                });
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < dim {
                break;
            }
            indices[pos] = 0;
        }
    }
}
