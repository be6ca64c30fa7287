//! Long-form `x,y,value` output of an error-difference surface, ready for a
//! plotting tool. Pass a step as the first argument (default 0.25).
//!
//! ```text
//! cargo run --example plot_data -- 0.1 > surface.csv
//! ```

use gridpoly::{emit_plot_data, error_difference_table_with, BivariatePolynomial, EvalGrid, MatrixData, Ordering, Scalar};

fn main() -> gridpoly::Result<()> {
    let step = std::env::args().nth(1).unwrap_or_else(|| "0.25".into());
    // f = x^2 y + x y^2 - 2x + 1
    let f = BivariatePolynomial::parse_text("2 1 1\n1 2 1\n1 0 -2\n0 0 1\n")?;
    let data = MatrixData::from_fn(3, 3, |i, j| f.evaluate(&Scalar::from(i), &Scalar::from(j)))?;
    let grid: EvalGrid = format!("1:3:{step},1:3:{step}").parse()?;
    let table = error_difference_table_with(&data, &f, &grid, Ordering::Row)?;
    print!("{}", emit_plot_data(&table, 6));
    Ok(())
}
