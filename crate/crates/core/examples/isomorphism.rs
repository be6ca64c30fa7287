//! The interpolation map T and the grid-evaluation map S as mutually inverse
//! linear maps, with their coordinate matrices.
//!
//! ```text
//! cargo run --example isomorphism
//! ```

use gridpoly::{apply_s, apply_t, coordinate_matrix_s, coordinate_matrix_t, DirectionPair, MatrixData};

fn main() -> gridpoly::Result<()> {
    let dir = DirectionPair::new(2, 1);

    let t = coordinate_matrix_t(2, 2, &dir)?;
    let s = coordinate_matrix_s(2, 2, &dir)?;
    println!("[T] columns {:?}", t.col_basis);
    print!("{}", t.matrix.to_csv());
    println!("[S] columns {:?}", s.col_basis);
    print!("{}", s.matrix.to_csv());
    println!("[T][S] = I: {}", t.product(&s)?.is_identity());
    println!("[S][T] = I: {}", s.product(&t)?.is_identity());

    let a = MatrixData::from_ints(&[[4, -2], [0, 9]]);
    let p = apply_t(&a, &dir)?;
    println!("T(A) = {}", p.pretty());
    let back = apply_s(&p, 2, 2)?;
    print!("S(T(A)) =\n{}", back.to_csv());
    assert_eq!(back, a);
    Ok(())
}
