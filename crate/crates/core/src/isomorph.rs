//! The linear bijection between `m x n` matrices and the `mn`-dimensional
//! space of polynomials in `t = alpha*x + beta*y`.
//!
//! `T` sends a matrix to its interpolant; `S` evaluates a polynomial on the
//! grid. With the matrix units `E_11, E_12, ..., E_mn` (row-major) and the
//! powers `1, t, ..., t^(mn-1)` as bases, `[S]` is the Vandermonde matrix
//! `Lambda` and `[T] = Lambda^-1`.

use crate::error::{Error, Result};
use crate::grid::{check_direction, grid_nodes, DirectionPair};
use crate::matrix::MatrixData;
use crate::projected::ProjectedPolynomial;
use crate::scalar::Scalar;
use crate::vandermonde::{build_lambda_matrix, divided_difference_solve};

/// `T(A)`: the unique interpolant of `A` for direction `dir`.
pub fn apply_t(data: &MatrixData, dir: &DirectionPair) -> Result<ProjectedPolynomial> {
    divided_difference_solve(data, dir)
}

/// `S(p)`: the matrix `(p(i, j))`.
pub fn apply_s(p: &ProjectedPolynomial, m: usize, n: usize) -> Result<MatrixData> {
    let len = m * n;
    if let Some(d) = p.degree() {
        if d >= len {
            return Err(Error::ShapeMismatch(format!(
                "polynomial of degree {d} in t is outside the {len}-dimensional space for a {m}x{n} grid"
            )));
        }
    }
    MatrixData::from_fn(m, n, |i, j| p.evaluate(&Scalar::from(i), &Scalar::from(j)))
}

/// Matrix of a linear map together with the labels of its bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateMatrix {
    pub matrix: MatrixData,
    /// Basis indexing the rows (the codomain basis).
    pub row_basis: Vec<String>,
    /// Basis indexing the columns (the domain basis).
    pub col_basis: Vec<String>,
}

impl CoordinateMatrix {
    pub fn order(&self) -> usize {
        self.matrix.rows()
    }

    pub fn product(&self, other: &CoordinateMatrix) -> Result<MatrixData> {
        self.matrix.mul(&other.matrix)
    }
}

fn unit_labels(m: usize, n: usize) -> Vec<String> {
    (1..=m)
        .flat_map(|i| (1..=n).map(move |j| format!("E{i}{j}")))
        .collect()
}

fn power_labels(len: usize) -> Vec<String> {
    (0..len).map(|k| format!("t^{k}")).collect()
}

/// `[T]`: column `c` holds the power coefficients of `T(E_c)`.
pub fn coordinate_matrix_t(m: usize, n: usize, dir: &DirectionPair) -> Result<CoordinateMatrix> {
    let grid = grid_nodes(m, n)?;
    check_direction(&grid, dir)?;
    let images = grid
        .nodes()
        .iter()
        .map(|&(i, j)| apply_t(&MatrixData::unit(m, n, i, j)?, dir))
        .collect::<Result<Vec<_>>>()?;
    let len = m * n;
    let matrix = MatrixData::from_fn(len, len, |r, c| images[c - 1].power_coeffs[r - 1].clone())?;
    Ok(CoordinateMatrix {
        matrix,
        row_basis: power_labels(len),
        col_basis: unit_labels(m, n),
    })
}

/// `[S]`, which is `Lambda` itself.
pub fn coordinate_matrix_s(m: usize, n: usize, dir: &DirectionPair) -> Result<CoordinateMatrix> {
    let lam = build_lambda_matrix(m, n, dir)?;
    Ok(CoordinateMatrix {
        row_basis: unit_labels(m, n),
        col_basis: power_labels(lam.order()),
        matrix: lam.matrix,
    })
}

/// Coefficients `c_0, ..., c_n` (with `c_n = 1`) of `det(zI - A)`, by the
/// Faddeev-LeVerrier recurrence.
pub fn characteristic_polynomial(a: &MatrixData) -> Result<Vec<Scalar>> {
    if !a.is_square() {
        return Err(Error::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let identity = MatrixData::identity(n)?;
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut m_k = MatrixData::zeros(n, n)?;
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
        m_k = a.mul(&m_k)?.add(&identity.scale(&coeffs[n - k + 1]))?;
        let tr = a.mul(&m_k)?.trace()?;
        coeffs[n - k] = -tr / Scalar::from(k);
    }
    Ok(coeffs)
}

/// Outcome of the characteristic-polynomial identity pushed through `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyHamiltonReport {
    /// `c_0, ..., c_n` of `det(zI - A)`.
    pub char_poly: Vec<Scalar>,
    /// `T(A^k)` for `k = 0..=n` (`A^0 = I`).
    pub images: Vec<ProjectedPolynomial>,
    /// `sum_k c_k T(A^k)`; zero by linearity of `T`.
    pub residual: ProjectedPolynomial,
}

pub fn cayley_hamilton_check(a: &MatrixData, dir: &DirectionPair) -> Result<CayleyHamiltonReport> {
    let char_poly = characteristic_polynomial(a)?;
    let n = a.rows();
    let mut power = MatrixData::identity(n)?;
    let mut images = Vec::with_capacity(n + 1);
    for k in 0..=n {
        if k > 0 {
            power = power.mul(a)?;
        }
        images.push(apply_t(&power, dir)?);
    }
    let mut residual = ProjectedPolynomial::zero(dir.clone(), n * n);
    for (c, img) in char_poly.iter().zip(&images) {
        residual = residual.add(&img.scale(c))?;
    }
    Ok(CayleyHamiltonReport {
        char_poly,
        images,
        residual,
    })
}
