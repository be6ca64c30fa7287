//! Closed-form interpolants of two small matrices, row-wise and column-wise.
//!
//! ```text
//! cargo run --example worked_examples
//! ```

use gridpoly::{interpolate_col, interpolate_row, MatrixData, ProjectedPolynomial, Scalar};

fn show(name: &str, data: &MatrixData, p: &ProjectedPolynomial) {
    println!("{name}");
    println!("  power:  {}", p.pretty());
    if let Some(newton) = p.pretty_newton() {
        println!("  newton: {newton}");
    }
    for i in 1..=data.rows() {
        let row: Vec<String> = (1..=data.cols())
            .map(|j| p.evaluate(&Scalar::from(i), &Scalar::from(j)).to_string())
            .collect();
        println!("  values on row {i}: {}", row.join(" "));
    }
}

fn main() {
    let theta = MatrixData::from_ints(&[[1, -1, -2]]);
    let psi = MatrixData::from_ints(&[[-15, 36], [-1, 96]]);

    show("theta, row-wise", &theta, &interpolate_row(&theta));
    show("theta, column-wise", &theta, &interpolate_col(&theta));
    show("psi, row-wise", &psi, &interpolate_row(&psi));
    show("psi, column-wise", &psi, &interpolate_col(&psi));

    // Same surface, expanded into monomials.
    let p = interpolate_col(&psi);
    println!("psi column-wise expanded: {}", p.expand_to_bivariate().pretty());
}
