//! General solver for an arbitrary valid direction `(alpha, beta)`.
//!
//! Writing `t_r` for the projection of the r-th node (row-major), the
//! interpolation conditions become the Vandermonde system
//! `Lambda * lambda = mu` with `Lambda[r][k] = t_r^k` and `mu` the data in
//! row-major order. It is nonsingular exactly when the `t_r` are distinct.

use crate::error::Result;
use crate::grid::{check_direction, grid_nodes, projections, DirectionPair, NodeGrid};
use crate::linalg;
use crate::matrix::MatrixData;
use crate::projected::ProjectedPolynomial;
use crate::scalar::Scalar;
use crate::univariate::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaMatrix {
    pub dir: DirectionPair,
    pub grid: NodeGrid,
    /// Node projections in row order of the matrix.
    pub points: Vec<Scalar>,
    pub matrix: MatrixData,
}

impl LambdaMatrix {
    pub fn order(&self) -> usize {
        self.points.len()
    }
}

pub fn build_lambda_matrix(m: usize, n: usize, dir: &DirectionPair) -> Result<LambdaMatrix> {
    let grid = grid_nodes(m, n)?;
    let points = projections(&grid, dir);
    let order = points.len();
    let matrix = MatrixData::from_fn(order, order, |r, k| points[r - 1].pow(k as u32 - 1))?;
    Ok(LambdaMatrix {
        dir: dir.clone(),
        grid,
        points,
        matrix,
    })
}

/// `prod_{p<q} (t_q - t_p)`.
pub fn vandermonde_product(points: &[Scalar]) -> Scalar {
    let mut acc = Scalar::one();
    for (q, tq) in points.iter().enumerate() {
        for tp in &points[..q] {
            acc *= &(tq - tp);
        }
    }
    acc
}

/// Exact `det(Lambda)`.
pub fn lambda_determinant(m: usize, n: usize, dir: &DirectionPair) -> Result<Scalar> {
    let lam = build_lambda_matrix(m, n, dir)?;
    linalg::determinant(&lam.matrix)
}

/// Solves the Vandermonde system directly.
pub fn solve_general(data: &MatrixData, dir: &DirectionPair) -> Result<ProjectedPolynomial> {
    let grid = grid_nodes(data.rows(), data.cols())?;
    if grid.len() == 1 {
        return Ok(ProjectedPolynomial::from_power(dir.clone(), vec![data.get(1, 1).clone()]));
    }
    check_direction(&grid, dir)?;
    let lam = build_lambda_matrix(data.rows(), data.cols(), dir)?;
    let coeffs = linalg::solve(&lam.matrix, data.row_major())?;
    Ok(ProjectedPolynomial::from_power(dir.clone(), coeffs))
}

/// Newton divided differences on the (generally unequally spaced)
/// projections, expanded to power form. `O((mn)^2)`.
pub fn divided_difference_solve(data: &MatrixData, dir: &DirectionPair) -> Result<ProjectedPolynomial> {
    let grid = grid_nodes(data.rows(), data.cols())?;
    if grid.len() == 1 {
        return Ok(ProjectedPolynomial::from_power(dir.clone(), vec![data.get(1, 1).clone()]));
    }
    check_direction(&grid, dir)?;
    let points = projections(&grid, dir);
    let coeffs = newton_coefficients(&points, data.row_major());
    let poly = newton_to_power(&points, &coeffs);
    Ok(ProjectedPolynomial::from_power(dir.clone(), poly.padded(points.len())))
}

/// Top edge of the divided-difference table: `f[t_0], f[t_0,t_1], ...`.
/// Points must be pairwise distinct.
pub fn newton_coefficients(points: &[Scalar], values: &[Scalar]) -> Vec<Scalar> {
    let mut col = values.to_vec();
    let mut out = Vec::with_capacity(points.len());
    for level in 0..points.len() {
        out.push(col[0].clone());
        col = (0..col.len().saturating_sub(1))
            .map(|r| (&col[r + 1] - &col[r]) / (&points[r + level + 1] - &points[r]))
            .collect();
    }
    out
}

/// Power form of `sum_k c_k prod_{r<k} (t - t_r)`, nested Horner-style.
pub fn newton_to_power(points: &[Scalar], coeffs: &[Scalar]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for k in (0..coeffs.len()).rev() {
        acc = acc
            .mul(&UniPoly::linear_root(&points[k]))
            .add(&UniPoly::constant(coeffs[k].clone()));
    }
    acc
}
