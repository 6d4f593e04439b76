use std::fmt;

use serde::{Serialize, Serializer};

use crate::coefficients::{FieldContext, Scalar};

/// Dense matrix over a field, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldContext,
    data: Vec<Scalar>,
}

/// Result of Gaussian elimination: the row-reduced matrix, its pivot columns
/// and the determinant of the square case.
struct Elimination {
    reduced: Matrix,
    pivots: Vec<usize>,
    det_factor: Scalar,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: FieldContext) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldContext) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: FieldContext,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            field,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldContext {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes");
        Matrix::from_fn(self.rows, other.cols, self.field, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (k, x) in v.iter().enumerate() {
                    let a = self.get(i, k);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Row reduction preferring cheap pivots (constants and monomials).
    fn eliminate(&self) -> Elimination {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut det_factor = self.field.one();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let candidates = (r..m.rows).filter(|&i| !m.get(i, c).is_zero());
            let Some(p) = candidates
                .clone()
                .find(|&i| m.get(i, c).is_monomial_unit())
                .or_else(|| candidates.min_by_key(|&i| m.get(i, c).to_string().len()))
            else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
                det_factor = -det_factor;
            }
            let piv = m.get(r, c).clone();
            det_factor = &det_factor * &piv;
            let inv = piv.inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let a = m.get(i, c).clone();
                for j in c..m.cols {
                    let x = m.get(r, j);
                    if x.is_zero() {
                        continue;
                    }
                    let y = m.get(i, j) - &(&a * x);
                    m.set(i, j, y);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Elimination {
            reduced: m,
            pivots,
            det_factor,
        }
    }

    pub fn rank(&self) -> usize {
        self.eliminate().pivots.len()
    }

    /// Indices of a maximal set of linearly independent columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.eliminate().pivots
    }

    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let e = self.eliminate();
        if e.pivots.len() < self.rows {
            self.field.zero()
        } else {
            e.det_factor
        }
    }

    /// Solves `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, self.cols, "solve needs a square matrix");
        let aug = Matrix::from_fn(self.rows, self.cols + 1, self.field, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let e = aug.eliminate();
        if e.pivots.len() < self.rows || e.pivots.contains(&self.cols) {
            return None;
        }
        Some(
            (0..self.rows)
                .map(|i| e.reduced.get(i, self.cols).clone())
                .collect(),
        )
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

impl Serialize for Matrix {
    /// Nested arrays of coefficient strings.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        rows.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::parse_scalar;

    fn q(entries: &[&[i64]]) -> Matrix {
        let f = FieldContext::Rationals;
        Matrix::from_fn(entries.len(), entries[0].len(), f, |i, j| {
            f.from_int(entries[i][j])
        })
    }

    #[test]
    fn rank_and_determinant() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        assert!(m.determinant().is_zero());
        let m = q(&[&[2, 1], &[1, 3]]);
        assert_eq!(m.determinant(), FieldContext::Rationals.from_int(5));
        let m = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.determinant(), FieldContext::Rationals.from_int(-1));
        assert_eq!(q(&[&[0, 0], &[0, 0]]).rank(), 0);
    }

    #[test]
    fn solves() {
        let f = FieldContext::Rationals;
        let m = q(&[&[2, 1], &[1, 3]]);
        let x = m.solve(&[f.from_int(3), f.from_int(4)]).unwrap();
        assert_eq!(x, vec![f.from_int(1), f.from_int(1)]);
        assert!(q(&[&[1, 1], &[1, 1]])
            .solve(&[f.from_int(1), f.from_int(2)])
            .is_none());
    }

    #[test]
    fn symbolic_determinant() {
        let f = FieldContext::RationalFunctions;
        let s = |t: &str| parse_scalar(t, f).unwrap();
        let m = Matrix::from_fn(2, 2, f, |i, j| match (i, j) {
            (0, 0) => s("1+q"),
            (1, 1) => s("q-1"),
            _ => s("q"),
        });
        assert_eq!(m.determinant(), s("-1"));
        assert!(m.transpose().is_symmetric());
        let prod = m.mul(&Matrix::identity(2, f));
        assert_eq!(prod, m);
        assert_eq!(m.trace(), s("2*q"));
    }
}
