//! Closed-form interpolants from forward differences.
//!
//! Ordering the grid row by row (`phi(i,j) = (i-1)n + j`) or column by
//! column (`phi(i,j) = i + (j-1)m`) turns the nodes into the consecutive
//! integers `1..=mn`. The projection `t = nx + y` (resp. `t = x + my`)
//! realizes that ordering as `t = phi + n` (resp. `phi + m`), so the
//! Newton-Gregory forward formula on the linearized sequence gives
//!
//! ```text
//! P(x, y) = sum_{k=0}^{mn-1} C(t - shift, k) * diff^k a_11
//! ```
//!
//! with `shift = n + 1` (resp. `m + 1`).

use crate::error::{Error, Result};
use crate::grid::DirectionPair;
use crate::matrix::MatrixData;
use crate::projected::ProjectedPolynomial;
use crate::scalar::Scalar;
use crate::univariate::UniPoly;

fn check_index(i: usize, j: usize, m: usize, n: usize) -> Result<()> {
    if i == 0 || j == 0 || i > m || j > n {
        return Err(Error::IndexOutOfRange { i, j, m, n });
    }
    Ok(())
}

/// Row-wise position of node `(i, j)`: `(i-1)n + j`.
pub fn linearize_row(i: usize, j: usize, m: usize, n: usize) -> Result<usize> {
    check_index(i, j, m, n)?;
    Ok((i - 1) * n + j)
}

/// Column-wise position of node `(i, j)`: `i + (j-1)m`.
pub fn linearize_col(i: usize, j: usize, m: usize, n: usize) -> Result<usize> {
    check_index(i, j, m, n)?;
    Ok(i + (j - 1) * m)
}

/// Full forward-difference triangle of a sequence.
///
/// `levels[k][r]` is `diff^k a_r`; level `k` has `len - k` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForwardDifferenceTable {
    levels: Vec<Vec<Scalar>>,
}

impl ForwardDifferenceTable {
    /// The input sequence.
    pub fn column0(&self) -> &[Scalar] {
        &self.levels[0]
    }

    /// `[diff^0 a_1, diff^1 a_1, ..., diff^(len-1) a_1]`.
    pub fn diagonal(&self) -> Vec<Scalar> {
        self.levels.iter().map(|l| l[0].clone()).collect()
    }

    pub fn level(&self, k: usize) -> &[Scalar] {
        &self.levels[k]
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

pub fn forward_differences(seq: &[Scalar]) -> Result<ForwardDifferenceTable> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut levels = vec![seq.to_vec()];
    while levels.last().unwrap().len() > 1 {
        let prev = levels.last().unwrap();
        let next = prev.windows(2).map(|w| &w[1] - &w[0]).collect();
        levels.push(next);
    }
    Ok(ForwardDifferenceTable { levels })
}

/// Power coefficients of `sum_k diffs[k] * C(t - shift, k)`, where
/// `C(s, k) = s(s-1)...(s-k+1)/k!`.
pub fn newton_to_power_form(diffs: &[Scalar], shift: &Scalar) -> Vec<Scalar> {
    let mut acc = UniPoly::zero();
    let mut basis = UniPoly::constant(Scalar::one());
    for (k, d) in diffs.iter().enumerate() {
        if k > 0 {
            // C(t-s, k) = C(t-s, k-1) * (t - s - (k-1)) / k
            let root = shift + Scalar::from(k - 1);
            basis = basis
                .mul(&UniPoly::linear_root(&root))
                .scale(&Scalar::from(k).recip());
        }
        acc = acc.add(&basis.scale(d));
    }
    acc.padded(diffs.len())
}

fn from_sequence(seq: &[Scalar], dir: DirectionPair, shift: Scalar) -> Result<ProjectedPolynomial> {
    let diffs = forward_differences(seq)?.diagonal();
    let power_coeffs = newton_to_power_form(&diffs, &shift);
    Ok(ProjectedPolynomial {
        dir,
        shift,
        newton_diffs: Some(diffs),
        power_coeffs,
    })
}

/// The unique interpolant in the span of `(nx + y)^k`, `k < mn`.
pub fn interpolate_row(data: &MatrixData) -> ProjectedPolynomial {
    let n = data.cols();
    from_sequence(data.row_major(), DirectionPair::row_wise(n), Scalar::from(n + 1))
        .expect("matrix data is never empty")
}

/// The unique interpolant in the span of `(x + my)^k`, `k < mn`.
pub fn interpolate_col(data: &MatrixData) -> ProjectedPolynomial {
    let m = data.rows();
    from_sequence(&data.col_major(), DirectionPair::col_wise(m), Scalar::from(m + 1))
        .expect("matrix data is never empty")
}
