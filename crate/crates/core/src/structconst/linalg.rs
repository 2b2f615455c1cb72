//! Exact linear algebra over Q: vectors, square matrices, and incremental
//! reduced row echelon spans.

use std::fmt;

use num_traits::{One, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(pub Vec<Rational>);

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Vector::zero(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector(self.0.iter().map(|a| a * c).collect())
    }

    /// In-place `self += c * other`.
    pub fn axpy(&mut self, c: &Rational, other: &Vector) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Square matrix acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    n: usize,
    rows: Vec<Vec<Rational>>,
}

impl OperatorMatrix {
    pub fn zero(n: usize) -> Self {
        OperatorMatrix {
            n,
            rows: vec![vec![Rational::zero(); n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = OperatorMatrix::zero(n);
        for i in 0..n {
            m.rows[i][i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        OperatorMatrix { n, rows }
    }

    /// The matrix whose j-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vector]) -> Self {
        let n = columns.len();
        let mut m = OperatorMatrix::zero(n);
        for (j, col) in columns.iter().enumerate() {
            for i in 0..n {
                m.rows[i][j] = col.0[i].clone();
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }

    pub fn add(&self, other: &OperatorMatrix) -> OperatorMatrix {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &OperatorMatrix) -> OperatorMatrix {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> OperatorMatrix {
        OperatorMatrix {
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|a| a * c).collect())
                .collect(),
        }
    }

    fn zip(
        &self,
        other: &OperatorMatrix,
        op: impl Fn(&Rational, &Rational) -> Rational,
    ) -> OperatorMatrix {
        OperatorMatrix {
            n: self.n,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(r, s)| r.iter().zip(s).map(|(a, b)| op(a, b)).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &OperatorMatrix) -> OperatorMatrix {
        let n = self.n;
        let mut out = OperatorMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// AB - BA
    pub fn commutator(&self, other: &OperatorMatrix) -> OperatorMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        Vector(
            self.rows
                .iter()
                .map(|r| {
                    r.iter()
                        .zip(&v.0)
                        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        )
    }

    /// Row-major flattening, for spans of matrices.
    pub fn flatten(&self) -> Vector {
        Vector(self.rows.iter().flatten().cloned().collect())
    }
}

impl fmt::Display for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// A subspace kept as a basis in reduced row echelon form. Rows are sorted
/// by pivot column and each pivot column is zero outside its row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span {
    dim: usize,
    rows: Vec<(usize, Vector)>,
}

impl Span {
    pub fn new(dim: usize) -> Self {
        Span {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn of(dim: usize, vectors: &[Vector]) -> Self {
        let mut s = Span::new(dim);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.rows.iter().map(|(_, v)| v.clone()).collect()
    }

    /// Remainder of `v` after clearing every pivot column.
    fn reduce(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for (p, row) in &self.rows {
            let c = r.0[*p].clone();
            if !c.is_zero() {
                r.axpy(&-c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &Vector) -> bool {
        let mut r = self.reduce(v);
        let Some(pivot) = r.0.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let lead = r.0[pivot].clone();
        r = r.scale(&(Rational::one() / lead));
        for (_, row) in self.rows.iter_mut() {
            let c = row.0[pivot].clone();
            if !c.is_zero() {
                row.axpy(&-c, &r);
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, r));
        true
    }
}

/// Coordinates of `target` in terms of `basis` (assumed independent), or
/// `None` if `target` is outside their span.
pub fn solve_coordinates(basis: &[Vector], target: &Vector) -> Option<Vector> {
    let k = basis.len();
    let n = target.dim();
    // Columns are basis vectors; augmented with the target.
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut r: Vec<Rational> = basis.iter().map(|b| b.0[i].clone()).collect();
            r.push(target.0[i].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        let inv = Rational::one() / rows[row][col].clone();
        for x in &mut rows[row][col..=k] {
            *x = &*x * &inv;
        }
        let pivot_row = rows[row].clone();
        for (r, target) in rows.iter_mut().enumerate() {
            if r != row && !target[col].is_zero() {
                let factor = target[col].clone();
                for c in col..=k {
                    target[c] -= &factor * &pivot_row[c];
                }
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    if rows[row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    let mut x = Vector::zero(k);
    for (r, c) in pivots {
        x.0[c] = rows[r][k].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn v(xs: &[i64]) -> Vector {
        Vector(xs.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn span_is_reduced_echelon() {
        let s = Span::of(3, &[v(&[2, 4, 0]), v(&[1, 2, 1]), v(&[3, 6, 1])]);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.basis(), vec![v(&[1, 2, 0]), v(&[0, 0, 1])]);
        assert!(s.contains(&v(&[5, 10, -7])));
        assert!(!s.contains(&v(&[0, 1, 0])));
    }

    #[test]
    fn coordinates() {
        let basis = [v(&[1, 1, 0]), v(&[0, 1, 1])];
        let x = solve_coordinates(&basis, &v(&[2, 5, 3])).unwrap();
        assert_eq!(x, v(&[2, 3]));
        assert!(solve_coordinates(&basis, &v(&[1, 0, 0])).is_none());
        let half = solve_coordinates(&[v(&[2, 0])], &v(&[1, 0])).unwrap();
        assert_eq!(half.0[0], ratio(1, 2));
    }

    #[test]
    fn matrix_products() {
        let a = OperatorMatrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(0), rat(0)]]);
        let b = OperatorMatrix::from_rows(vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)]]);
        let h = a.commutator(&b);
        assert_eq!(
            h,
            OperatorMatrix::from_rows(vec![vec![rat(1), rat(0)], vec![rat(0), rat(-1)]])
        );
        assert_eq!(h.apply(&v(&[3, 4])), v(&[3, -4]));
        assert_eq!(OperatorMatrix::identity(2).mul(&h), h);
    }
}
