//! Dense Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

pub type RatMatrix = Vec<Vec<Rational>>;

fn check_rect(m: &RatMatrix) -> Result<(usize, usize)> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if m.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension {
            expected: "rectangular matrix",
            rows,
            cols,
        });
    }
    Ok((rows, cols))
}

/// Reduces `m` in place to row echelon form and returns the pivot columns
/// together with the sign of the row permutation used.
fn echelon(m: &mut RatMatrix, cols: usize) -> (Vec<usize>, bool) {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut negated = false;
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        if p != row {
            m.swap(p, row);
            negated = !negated;
        }
        let inv = m[row][col].recip();
        for i in row + 1..rows {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] * &inv;
            let (top, bottom) = m.split_at_mut(i);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[row][col..]) {
                *x -= &f * y;
            }
        }
        pivots.push(col);
        row += 1;
    }
    (pivots, negated)
}

pub fn determinant(m: &RatMatrix) -> Result<Rational> {
    let (rows, cols) = check_rect(m)?;
    if rows != cols {
        return Err(Error::Dimension {
            expected: "square matrix",
            rows,
            cols,
        });
    }
    let mut work = m.clone();
    let (pivots, negated) = echelon(&mut work, cols);
    if pivots.len() < rows {
        return Ok(Rational::zero());
    }
    let mut det = (0..rows).fold(Rational::one(), |acc, i| acc * &work[i][i]);
    if negated {
        det = -det;
    }
    Ok(det)
}

pub fn rank(m: &RatMatrix) -> Result<usize> {
    let (_, cols) = check_rect(m)?;
    let mut work = m.clone();
    Ok(echelon(&mut work, cols).0.len())
}

/// Whether `a·x = b` has a rational solution: the augmented rank equals
/// the coefficient rank.
pub fn is_consistent(a: &RatMatrix, b: &[Rational]) -> Result<bool> {
    let (rows, cols) = check_rect(a)?;
    if b.len() != rows {
        return Err(Error::Dimension {
            expected: "right-hand side matching row count",
            rows: b.len(),
            cols: 1,
        });
    }
    let augmented: RatMatrix = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let mut work = augmented;
    let (pivots, _) = echelon(&mut work, cols + 1);
    Ok(!pivots.contains(&cols))
}

/// Unique solution of the square system `a·x = b`.
pub fn solve(a: &RatMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    let (rows, cols) = check_rect(a)?;
    if rows != cols || b.len() != rows {
        return Err(Error::Dimension {
            expected: "square system",
            rows,
            cols,
        });
    }
    let mut work: RatMatrix = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (pivots, _) = echelon(&mut work, cols);
    if pivots.len() < cols {
        return Err(Error::Rank {
            rank: pivots.len(),
            expected: cols,
        });
    }
    let mut x = vec![Rational::zero(); cols];
    for i in (0..cols).rev() {
        let mut acc = work[i][cols].clone();
        for j in i + 1..cols {
            acc -= &work[i][j] * &x[j];
        }
        x[i] = acc / &work[i][i];
    }
    Ok(x)
}
