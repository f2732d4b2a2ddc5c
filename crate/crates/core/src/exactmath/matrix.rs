use rayon::prelude::*;

use super::linalg;
use super::poly::PolyT;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Row-major matrix with entries in `Q[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<PolyT>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<PolyT>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension {
                expected: "entries.len() == rows * cols",
                rows,
                cols,
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![PolyT::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<PolyT>>) -> Result<Self> {
        let n = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension {
                expected: "rows of equal length",
                rows: n,
                cols,
            });
        }
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &PolyT {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: PolyT) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[PolyT] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// New matrix whose row `i` is row `perm[i]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.rows];
        if perm.len() != self.rows || perm.iter().any(|&p| p >= self.rows || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Invalid("not a row permutation".into()));
        }
        let entries = perm.iter().flat_map(|&p| self.row(p).iter().cloned()).collect();
        Self::new(self.rows, self.cols, entries)
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: "square matrix",
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn max_degree<'a>(entries: impl Iterator<Item = &'a PolyT>) -> usize {
        entries.filter_map(PolyT::degree).max().unwrap_or(0)
    }

    /// `Σ_rows max entry degree`, an upper bound for the determinant degree.
    pub fn degree_bound(&self) -> usize {
        (0..self.rows)
            .map(|i| Self::max_degree(self.row(i).iter()))
            .sum()
    }

    fn column_degree_bound(&self) -> usize {
        (0..self.cols)
            .map(|j| Self::max_degree((0..self.rows).map(|i| self.get(i, j))))
            .sum()
    }

    /// Scalar matrix at `t = x`.
    pub fn evaluate(&self, x: &Rational) -> linalg::RatMatrix {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.eval(x)).collect())
            .collect()
    }

    /// Determinant by evaluation at `t = 0, 1, …, degree_bound` and
    /// interpolation. Nodes are evaluated in parallel.
    pub fn det_interp(&self, degree_bound: usize) -> Result<PolyT> {
        self.require_square()?;
        let required = self.degree_bound().min(self.column_degree_bound());
        if degree_bound < required {
            return Err(Error::DegreeBound {
                given: degree_bound,
                required,
            });
        }
        let points = (0..=degree_bound)
            .into_par_iter()
            .map(|k| {
                let x = int(k as u64);
                let y = linalg::determinant(&self.evaluate(&x))?;
                Ok((x, y))
            })
            .collect::<Result<Vec<_>>>()?;
        PolyT::interpolate(&points)
    }

    /// Fraction-free (Bareiss) elimination over `Q[t]`. Every division
    /// is exact in the polynomial ring.
    pub fn det_bareiss(&self) -> Result<PolyT> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(PolyT::one());
        }
        let mut a: Vec<Vec<PolyT>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = PolyT::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(PolyT::zero());
                };
                a.swap(k, p);
                negate = !negate;
            }
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            bottom.par_iter_mut().try_for_each(|row| -> Result<()> {
                for j in k + 1..n {
                    let num = &(&pivot_row[k] * &row[j]) - &(&row[k] * &pivot_row[j]);
                    row[j] = num.exact_divide(&prev).map_err(|_| {
                        Error::Consistency("Bareiss step left a remainder".into())
                    })?;
                }
                row[k] = PolyT::zero();
                Ok(())
            })?;
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }
}
