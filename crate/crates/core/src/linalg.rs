//! Exact dense linear algebra: fraction-free (Bareiss) elimination over the
//! integers, and rational solves/determinants built on it by clearing
//! denominators row by row.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::MatrixData;
use crate::scalar::Scalar;

/// Integer matrix as rows.
pub type IntMatrix = Vec<Vec<BigInt>>;

fn check_square(rows: &[Vec<BigInt>]) -> Result<usize> {
    let n = rows.len();
    for r in rows {
        if r.len() != n {
            return Err(Error::NonSquare { rows: n, cols: r.len() });
        }
    }
    Ok(n)
}

/// Bareiss forward elimination on `a` (n rows, at least n columns; extra
/// columns are carried along as right-hand sides). Returns the sign of the
/// row permutation, or `None` if a column has no nonzero pivot.
///
/// After success `a` is upper triangular in its first n columns and
/// `a[n-1][n-1]` equals `sign * det` of the leading n x n block.
fn bareiss_in_place(a: &mut [Vec<BigInt>]) -> Option<i32> {
    let n = a.len();
    let width = a.first().map_or(0, Vec::len);
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        // partial pivoting by magnitude; any nonzero pivot is exact
        let pivot = (k..n)
            .filter(|&r| !a[r][k].is_zero())
            .max_by(|&r, &s| a[r][k].abs().cmp(&a[s][k].abs()).then(s.cmp(&r)))?;
        if pivot != k {
            a.swap(pivot, k);
            sign = -sign;
        }
        let (upper, lower) = a.split_at_mut(k + 1);
        let prow = &upper[k];
        for row in lower.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..width {
                let v = &row[j] * &prow[k] - &lead * &prow[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = a[k][k].clone();
    }
    Some(sign)
}

/// Exact determinant by fraction-free Gaussian elimination.
pub fn bareiss_determinant(m: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_vec();
    Ok(match bareiss_in_place(&mut a) {
        Some(sign) => &a[n - 1][n - 1] * sign,
        None => BigInt::zero(),
    })
}

/// Row `r` scaled by the lcm of its denominators, plus that multiplier.
fn integer_row(r: &[Scalar]) -> (Vec<BigInt>, BigInt) {
    let l = r
        .iter()
        .fold(BigInt::one(), |acc, s| acc.lcm(s.denom()));
    let row = r
        .iter()
        .map(|s| s.numer() * (&l / s.denom()))
        .collect();
    (row, l)
}

/// Exact determinant of a square rational matrix.
pub fn determinant(m: &MatrixData) -> Result<Scalar> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let mut scale = BigInt::one();
    let rows: IntMatrix = (1..=m.rows())
        .map(|i| {
            let (row, l) = integer_row(m.row(i));
            scale *= l;
            row
        })
        .collect();
    let det = bareiss_determinant(&rows)?;
    Ok(Scalar::new(det, scale))
}

/// Solves `A x = b` exactly. `A` must be square and nonsingular.
pub fn solve(a: &MatrixData, b: &[Scalar]) -> Result<Vec<Scalar>> {
    let n = a.rows();
    if !a.is_square() {
        return Err(Error::NonSquare { rows: n, cols: a.cols() });
    }
    if b.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "right-hand side has {} entries for a system of order {n}",
            b.len()
        )));
    }
    let mut aug: IntMatrix = (1..=n)
        .map(|i| {
            let mut r: Vec<Scalar> = a.row(i).to_vec();
            r.push(b[i - 1].clone());
            integer_row(&r).0
        })
        .collect();
    bareiss_in_place(&mut aug).ok_or(Error::Singular)?;
    let mut x = vec![Scalar::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Scalar::from(aug[i][n].clone());
        for j in i + 1..n {
            acc -= &(Scalar::from(aug[i][j].clone()) * &x[j]);
        }
        x[i] = acc / Scalar::from(aug[i][i].clone());
    }
    Ok(x)
}

/// Exact inverse of a square nonsingular matrix.
pub fn inverse(a: &MatrixData) -> Result<MatrixData> {
    let n = a.rows();
    let mut cols = Vec::with_capacity(n);
    for j in 1..=n {
        let e: Vec<Scalar> = (1..=n)
            .map(|i| if i == j { Scalar::one() } else { Scalar::zero() })
            .collect();
        cols.push(solve(a, &e)?);
    }
    MatrixData::from_fn(n, n, |i, j| cols[j - 1][i - 1].clone())
}

/// Laplace (cofactor) expansion along the first row. Exponential; for
/// cross-checking small cases only.
pub fn cofactor_determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    match n {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = BigInt::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: IntMatrix = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != c)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][c] * cofactor_determinant(&minor);
                if c % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}
