//! Exact dense linear algebra over a rational-function field.

use crate::coeff::{RationalFunction, VarSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RationalFunction>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, vars: VarSet) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![RationalFunction::zero(vars); rows * cols],
        }
    }

    pub fn identity(n: usize, vars: VarSet) -> Self {
        let mut m = Self::zeros(n, n, vars);
        for i in 0..n {
            m.set(i, i, RationalFunction::one(vars));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RationalFunction>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalFunction) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RationalFunction] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn mul_vec(&self, v: &[RationalFunction]) -> Vec<RationalFunction> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(RationalFunction::zero(v[0].vars()), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let vars = self.data.first().map_or(VarSet::Qz, |c| c.vars());
        let mut out = Matrix::zeros(self.rows, other.cols, vars);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = RationalFunction::zero(vars);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Whether this is `c` times the identity.
    pub fn is_scalar(&self, c: &RationalFunction) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j { v == c } else { v.is_zero() }
                })
            })
    }

    /// Fraction-free (Bareiss) forward elimination of the leading square
    /// block, pivoting on the first nonzero entry of each column.
    ///
    /// Returns the determinant of that block, or `None` if it is singular.
    /// The trailing columns are eliminated along with it.
    fn bareiss(&mut self) -> Option<RationalFunction> {
        let n = self.rows;
        assert!(self.cols >= n);
        let vars = self.data[0].vars();
        let mut prev = RationalFunction::one(vars);
        let mut negate = false;
        for k in 0..n {
            let pivot = (k..n).find(|&i| !self.get(i, k).is_zero())?;
            if pivot != k {
                self.swap_rows(pivot, k);
                negate = !negate;
            }
            let pk = self.get(k, k).clone();
            for i in k + 1..n {
                let f = self.get(i, k).clone();
                for j in k + 1..self.cols {
                    let v = &(&pk * self.get(i, j)) - &(&f * self.get(k, j));
                    self.set(i, j, v.checked_div(&prev).expect("nonzero previous pivot"));
                }
                self.set(i, k, RationalFunction::zero(vars));
            }
            prev = pk;
        }
        Some(if negate { -prev } else { prev })
    }

    pub fn determinant(&self) -> RationalFunction {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        if self.rows == 0 {
            return RationalFunction::one(VarSet::Qz);
        }
        let mut m = self.clone();
        m.bareiss()
            .unwrap_or_else(|| RationalFunction::zero(self.data[0].vars()))
    }

    /// Solves `self · X = rhs` for every column of `rhs` at once.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(rhs.rows, self.rows);
        let n = self.rows;
        let r = rhs.cols;
        let mut aug = Matrix::zeros(n, n + r, self.data[0].vars());
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..r {
                aug.set(i, n + j, rhs.get(i, j).clone());
            }
        }
        aug.bareiss()?;
        let mut x = Matrix::zeros(n, r, self.data[0].vars());
        for c in 0..r {
            for i in (0..n).rev() {
                let mut acc = aug.get(i, n + c).clone();
                for j in i + 1..n {
                    if !aug.get(i, j).is_zero() {
                        acc = &acc - &(aug.get(i, j) * x.get(j, c));
                    }
                }
                x.set(i, c, acc.checked_div(aug.get(i, i)).ok()?);
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        self.solve(&Matrix::identity(self.rows, self.data[0].vars()))
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !self.get(i, col).is_zero()) else {
                continue;
            };
            self.swap_rows(p, row);
            let inv = self.get(row, col).inv().unwrap();
            for j in col..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for i in 0..self.rows {
                if i == row || self.get(i, col).is_zero() {
                    continue;
                }
                let f = self.get(i, col).clone();
                for j in col..self.cols {
                    if self.get(row, j).is_zero() {
                        continue;
                    }
                    let v = self.get(i, j) - &(&f * self.get(row, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }
}
