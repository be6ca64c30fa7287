//! Projected interpolant against the tensor-product baseline for data
//! sampled from a cubic, tabulated as |f - p| - |f - P| on [1,2]^2.
//!
//! ```text
//! cargo run --example tensor_comparison
//! ```

use gridpoly::{
    emit_table_csv, error_difference_table, interpolate_col, tensor_interpolate,
    BivariatePolynomial, EvalGrid, MatrixData, Scalar,
};

fn main() -> gridpoly::Result<()> {
    let f = BivariatePolynomial::parse_text(
        "2 0 3\n0 3 2\n2 1 -1\n1 2 2\n1 0 1\n0 1 -1\n0 0 10\n",
    )?;
    let omega = MatrixData::from_fn(2, 2, |i, j| f.evaluate(&Scalar::from(i), &Scalar::from(j)))?;
    print!("data:\n{}", omega.to_csv());

    println!("f = {}", f.pretty());
    println!("p = {}", interpolate_col(&omega).pretty());
    println!("P = {}", tensor_interpolate(&omega).pretty());

    let grid: EvalGrid = "1:2:0.1,1:2:0.1".parse()?;
    let table = error_difference_table(&omega, &f, &grid)?;
    print!("{}", emit_table_csv(&table, 4));
    Ok(())
}
