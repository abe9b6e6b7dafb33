use std::fmt;

use num_traits::{One, Zero};

use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Column scan order used while choosing pivots. Both give the same rank;
/// having two lets tests cross-check the elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotOrder {
    LeftToRight,
    RightToLeft,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            data.extend(row);
        }
        RationalMatrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| rational::int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut s = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                s.set(i, j, self.get(r, c).clone());
            }
        }
        s
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.rank_with(PivotOrder::LeftToRight)
    }

    pub fn rank_with(&self, order: PivotOrder) -> usize {
        let mut work = self.clone();
        work.eliminate(order).len()
    }

    /// Basis of the right null space.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut work = self.clone();
        let pivots = work.eliminate(PivotOrder::LeftToRight);
        let mut is_pivot = vec![None; self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            is_pivot[col] = Some(row);
        }
        (0..self.cols)
            .filter(|&c| is_pivot[c].is_none())
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -work.get(row, free).clone();
                }
                v
            })
            .collect()
    }

    /// Pivot columns in the order found, leftmost rank-sized column set with nonzero minor.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut work = self.clone();
        work.eliminate(PivotOrder::LeftToRight)
    }

    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let pivot = a.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col) / &pivot;
                for c in col..n {
                    let sub = &factor * a.get(col, c);
                    let cur = a.get(r, c) - sub;
                    a.set(r, c, cur);
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduces in place to reduced row echelon form (pivot entries 1, pivot
    /// columns otherwise zero) and returns the pivot columns by pivot row.
    fn eliminate(&mut self, order: PivotOrder) -> Vec<usize> {
        let cols: Vec<usize> = match order {
            PivotOrder::LeftToRight => (0..self.cols).collect(),
            PivotOrder::RightToLeft => (0..self.cols).rev().collect(),
        };
        let mut pivots = Vec::new();
        let mut row = 0;
        for &c in &cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            self.swap_rows(p, row);
            let inv = self.get(row, c).recip();
            for j in 0..self.cols {
                if !self.get(row, j).is_zero() {
                    let v = self.get(row, j) * &inv;
                    self.set(row, j, v);
                }
            }
            for r in 0..self.rows {
                if r == row || self.get(r, c).is_zero() {
                    continue;
                }
                let factor = self.get(r, c).clone();
                for j in 0..self.cols {
                    if self.get(row, j).is_zero() {
                        continue;
                    }
                    let v = self.get(r, j) - &factor * self.get(row, j);
                    self.set(r, j, v);
                }
            }
            pivots.push(c);
            row += 1;
        }
        pivots
    }
}

impl fmt::Display for RationalMatrix {
    /// One `[v1, v2, ...]` line per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(rational::format).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
