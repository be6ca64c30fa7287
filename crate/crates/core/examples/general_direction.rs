//! Interpolation along an arbitrary direction, collision detection, and the
//! determinant of the projected Vandermonde matrix.
//!
//! ```text
//! cargo run --example general_direction
//! ```

use gridpoly::grid::find_collision;
use gridpoly::{
    divided_difference_solve, grid_nodes, lambda_determinant, solve_general, DirectionPair,
    MatrixData, Scalar,
};

fn main() -> gridpoly::Result<()> {
    let data = MatrixData::parse_csv("2,-1/3,5\n0,7,1.25\n3,3,-4\n")?;
    let (m, n) = data.shape();
    let grid = grid_nodes(m, n)?;

    for dir in [
        DirectionPair::new(7, 2),
        DirectionPair::new(Scalar::new(1, 2), 3),
        DirectionPair::new(1, 1),
        DirectionPair::new(2, 4),
    ] {
        println!("direction {dir} (t = {})", dir.linear_form());
        println!("  det(Lambda) = {}", lambda_determinant(m, n, &dir)?);
        match find_collision(&grid, &dir) {
            Some((a, b, t)) => {
                println!("  nodes {a:?} and {b:?} both project to t = {t}");
                println!("  solver says: {}", solve_general(&data, &dir).unwrap_err());
            }
            None => {
                let fast = divided_difference_solve(&data, &dir)?;
                let direct = solve_general(&data, &dir)?;
                assert_eq!(fast.power_coeffs, direct.power_coeffs);
                println!("  {}", fast.pretty());
                println!("  p(2, 3) = {}", fast.evaluate(&Scalar::from(2), &Scalar::from(3)));
            }
        }
    }
    Ok(())
}
