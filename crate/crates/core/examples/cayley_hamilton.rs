//! Pushing the characteristic-polynomial identity of a square matrix through
//! the interpolation map.
//!
//! ```text
//! cargo run --example cayley_hamilton
//! ```

use gridpoly::{cayley_hamilton_check, DirectionPair, MatrixData};

fn main() -> gridpoly::Result<()> {
    let zeta = MatrixData::from_ints(&[[-1, 2], [3, -4]]);
    let dir = DirectionPair::new(2, 1);
    let report = cayley_hamilton_check(&zeta, &dir)?;

    let c: Vec<String> = report.char_poly.iter().map(ToString::to_string).collect();
    println!("det(zI - A) coefficients, constant first: {}", c.join(" "));
    for (k, image) in report.images.iter().enumerate() {
        println!("T(A^{k}) = {}", image.pretty());
    }
    println!("sum c_k T(A^k) = {}", report.residual.pretty());
    assert!(report.residual.is_zero());
    Ok(())
}
