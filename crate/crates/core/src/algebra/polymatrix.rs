use std::collections::HashMap;

use num_bigint::BigInt;

use super::poly::{Assignment, MultiPoly};
use super::matrix::RationalMatrix;
use crate::error::{Error, Result};

/// Largest symbolic determinant attempted by cofactor expansion.
pub const SYMBOLIC_DET_LIMIT: usize = 12;

/// Dense matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: vec![MultiPoly::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &MultiPoly {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: MultiPoly) {
        self.data[r * self.cols + c] = v;
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

    pub fn evaluate<A: Assignment + ?Sized>(&self, at: &A) -> Result<RationalMatrix> {
        let mut m = RationalMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).evaluate(at)?);
            }
        }
        Ok(m)
    }

    /// Laplace expansion along rows, memoized on the set of remaining
    /// columns. Refuses matrices larger than [`SYMBOLIC_DET_LIMIT`].
    pub fn det(&self) -> Result<MultiPoly> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows > SYMBOLIC_DET_LIMIT {
            return Err(Error::SizeGuard {
                what: "symbolic determinant",
                size: self.rows,
                limit: SYMBOLIC_DET_LIMIT,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(MultiPoly::one());
        }
        let mut memo: HashMap<u32, MultiPoly> = HashMap::new();
        Ok(self.minor(0, (1u32 << n) - 1, &mut memo))
    }

    fn minor(&self, row: usize, mask: u32, memo: &mut HashMap<u32, MultiPoly>) -> MultiPoly {
        if row == self.rows {
            return MultiPoly::one();
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let mut total = MultiPoly::zero();
        let mut position = 0;
        for c in 0..self.cols {
            if mask & (1 << c) == 0 {
                continue;
            }
            let entry = self.get(row, c);
            if !entry.is_zero() {
                let rest = self.minor(row + 1, mask & !(1 << c), memo);
                if !rest.is_zero() {
                    let term = entry * &rest;
                    total = if position % 2 == 0 {
                        &total + &term
                    } else {
                        &total - &term
                    };
                }
            }
            position += 1;
        }
        memo.insert(mask, total.clone());
        total
    }
}

/// The 3×k block `(1, a, a²)` per column, each column scaled by its sign.
pub fn signed_vandermonde_block(vars: &[usize], signs: &[i32]) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(3, vars.len());
    for (j, (&v, &s)) in vars.iter().zip(signs).enumerate() {
        let s = BigInt::from(s);
        let a = MultiPoly::var(v);
        m.set(0, j, MultiPoly::constant(s.clone()));
        m.set(1, j, a.scale(&s));
        m.set(2, j, a.pow(2).scale(&s));
    }
    m
}
