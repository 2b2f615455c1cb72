//! Standard small Lie algebras.

use super::linalg::{solve_coordinates, OperatorMatrix, Vector};
use super::StructConstAlgebra;
use crate::rational::{rat, Rational};

fn v(xs: &[i64]) -> Vector {
    Vector(xs.iter().map(|&x| rat(x)).collect())
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// sl_2 on the basis (e, h, f): [h, e] = 2e, [h, f] = -2f, [e, f] = h.
pub fn sl2() -> StructConstAlgebra {
    StructConstAlgebra::new(
        names(&["e", "h", "f"]),
        [
            ((0, 1), v(&[-2, 0, 0])),
            ((0, 2), v(&[0, 1, 0])),
            ((1, 2), v(&[0, 0, -2])),
        ],
    )
    .expect("sl2 constants satisfy Jacobi")
}

/// sl_n on the basis E_ij (i != j, row-major) followed by
/// H_i = E_ii - E_(i+1)(i+1). Constants come from matrix commutators.
pub fn sl_n(n: usize) -> StructConstAlgebra {
    assert!(n >= 2, "sl_n needs n >= 2");
    let unit = |i: usize, j: usize| {
        let mut rows = vec![vec![Rational::default(); n]; n];
        rows[i][j] = rat(1);
        OperatorMatrix::from_rows(rows)
    };
    let mut basis_names = Vec::new();
    let mut matrices = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis_names.push(format!("E{}{}", i + 1, j + 1));
                matrices.push(unit(i, j));
            }
        }
    }
    for i in 0..n - 1 {
        basis_names.push(format!("H{}", i + 1));
        matrices.push(unit(i, i).sub(&unit(i + 1, i + 1)));
    }
    from_matrix_basis(basis_names, &matrices)
}

/// Structure constants of a commutator-closed family of matrices.
fn from_matrix_basis(basis_names: Vec<String>, matrices: &[OperatorMatrix]) -> StructConstAlgebra {
    let flat: Vec<Vector> = matrices.iter().map(OperatorMatrix::flatten).collect();
    let mut brackets = Vec::new();
    for i in 0..matrices.len() {
        for j in i + 1..matrices.len() {
            let c = matrices[i].commutator(&matrices[j]).flatten();
            let coords = solve_coordinates(&flat, &c).expect("matrix family closed under brackets");
            brackets.push(((i, j), coords));
        }
    }
    StructConstAlgebra::new(basis_names, brackets).expect("matrix commutators satisfy Jacobi")
}

pub fn abelian(dim: usize) -> StructConstAlgebra {
    let basis = (1..=dim).map(|i| format!("x{i}")).collect();
    StructConstAlgebra::new(basis, []).expect("abelian algebra is valid")
}

/// [x, y] = z with z central.
pub fn heisenberg() -> StructConstAlgebra {
    StructConstAlgebra::new(names(&["x", "y", "z"]), [((0, 1), v(&[0, 0, 1]))])
        .expect("Heisenberg constants satisfy Jacobi")
}

/// [x, y] = x.
pub fn two_dim_nonabelian() -> StructConstAlgebra {
    StructConstAlgebra::new(names(&["x", "y"]), [((0, 1), v(&[1, 0]))])
        .expect("two-dimensional algebra is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl3_shape() {
        let l = sl_n(3);
        assert_eq!(l.dim(), 8);
        let e12 = l.basis_index("E12").unwrap();
        let e21 = l.basis_index("E21").unwrap();
        let h1 = l.basis_index("H1").unwrap();
        assert_eq!(l.basis_bracket(e12, e21), l.basis_vector(h1));
    }

    #[test]
    fn sl_n_of_two_is_sl2_up_to_order() {
        let l = sl_n(2);
        // basis E12, E21, H1
        assert_eq!(l.basis_bracket(0, 1), v(&[0, 0, 1]));
        assert_eq!(l.basis_bracket(2, 0), v(&[2, 0, 0]));
    }
}
