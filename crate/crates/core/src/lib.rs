//! Exact bivariate polynomial interpolation of matrices.
//!
//! An `m x n` matrix `(a_ij)` is read as data on the integer grid
//! `{(i, j) : 1 <= i <= m, 1 <= j <= n}`. For any direction `(alpha, beta)`
//! whose linear form `t = alpha*x + beta*y` separates the grid nodes, there
//! is exactly one polynomial `P(x, y) = sum_{k<mn} lambda_k t^k` taking the
//! value `a_ij` at node `(i, j)`. This crate builds it exactly over the
//! rationals, in closed form for the two canonical directions `(n, 1)` and
//! `(1, m)` and by a general solve otherwise.
//!
//! Alongside the interpolant it provides the tensor-product baseline, the
//! matrix/polynomial isomorphism pair with their coordinate matrices, error
//! comparison tables, and an exact audit showing that total-degree spaces
//! are never poised on rectangular grids.
//!
//! ```
//! use gridpoly::{interpolate_row, MatrixData, Scalar};
//!
//! let psi = MatrixData::from_ints(&[[-15, 36], [-1, 96]]);
//! let p = interpolate_row(&psi);
//! assert_eq!(p.pretty(), "37 t^3 - 488 t^2 + 2098 t - 2916 where t = 2x+y");
//! assert_eq!(p.evaluate(&Scalar::from(2), &Scalar::from(2)), Scalar::from(96));
//! ```

pub mod analysis;
pub mod audit;
pub mod bivariate;
pub mod cli;
pub mod error;
pub mod grid;
pub mod isomorph;
pub mod linalg;
pub mod matrix;
pub mod modular;
pub mod newton;
pub mod projected;
pub mod scalar;
pub mod tensor;
pub mod univariate;
pub mod vandermonde;

pub use analysis::{
    abs_error_field, emit_plot_data, emit_table_csv, error_difference_table,
    error_difference_table_with, ErrorTable, EvalGrid, Ordering, Surface,
};
pub use audit::{
    audit_nonpoisedness, build_sample_matrix, exact_determinant, grid_factorizations,
    monomial_basis, AuditReport, SampleMatrix,
};
pub use bivariate::BivariatePolynomial;
pub use error::{Error, Result};
pub use grid::{
    direction_valid, grid_nodes, pi2_dimension, project, DirectionPair, Node, NodeGrid,
};
pub use isomorph::{
    apply_s, apply_t, cayley_hamilton_check, coordinate_matrix_s, coordinate_matrix_t,
    CoordinateMatrix,
};
pub use matrix::MatrixData;
pub use newton::{
    forward_differences, interpolate_col, interpolate_row, linearize_col, linearize_row,
    newton_to_power_form, ForwardDifferenceTable,
};
pub use projected::ProjectedPolynomial;
pub use scalar::Scalar;
pub use tensor::{evaluate_bivariate, tensor_interpolate};
pub use vandermonde::{
    build_lambda_matrix, divided_difference_solve, lambda_determinant, solve_general,
    LambdaMatrix,
};
