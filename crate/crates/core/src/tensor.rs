//! Tensor-product baseline: the unique interpolant of degree `<= m-1` in `x`
//! and `<= n-1` in `y` on the same grid.

use crate::bivariate::BivariatePolynomial;
use crate::matrix::MatrixData;
use crate::scalar::Scalar;
use crate::univariate::UniPoly;
use crate::vandermonde::{newton_coefficients, newton_to_power};

/// Univariate interpolant through `(1, v_1), ..., (len, v_len)`.
fn interpolate_on_unit_nodes(values: &[Scalar]) -> UniPoly {
    let nodes: Vec<Scalar> = (1..=values.len()).map(Scalar::from).collect();
    newton_to_power(&nodes, &newton_coefficients(&nodes, values))
}

/// Lagrange cardinal polynomial for node `i` on `{1, ..., len}`.
fn cardinal(i: usize, len: usize) -> UniPoly {
    let mut p = UniPoly::constant(Scalar::one());
    for r in (1..=len).filter(|&r| r != i) {
        let denom = Scalar::from(i) - Scalar::from(r);
        p = p
            .mul(&UniPoly::linear_root(&Scalar::from(r)))
            .scale(&denom.recip());
    }
    p
}

/// `P(x, y) = sum_i l_i(x) q_i(y)` where `q_i` interpolates row `i` in `y`.
pub fn tensor_interpolate(data: &MatrixData) -> BivariatePolynomial {
    let m = data.rows();
    let mut out = BivariatePolynomial::zero();
    for i in 1..=m {
        let along_y = BivariatePolynomial::from_y(&interpolate_on_unit_nodes(data.row(i)));
        let along_x = BivariatePolynomial::from_x(&cardinal(i, m));
        out = out.add(&along_x.mul(&along_y));
    }
    out
}

/// Evaluates a bivariate polynomial exactly.
pub fn evaluate_bivariate(p: &BivariatePolynomial, x: &Scalar, y: &Scalar) -> Scalar {
    p.evaluate(x, y)
}
