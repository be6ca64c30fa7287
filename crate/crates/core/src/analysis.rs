//! Exact error fields over a rectangular evaluation mesh and the
//! comparison of the projected interpolant against the tensor baseline.

use std::fmt::Write as _;

use crate::bivariate::BivariatePolynomial;
use crate::error::{Error, Result};
use crate::matrix::MatrixData;
use crate::newton::{interpolate_col, interpolate_row};
use crate::projected::ProjectedPolynomial;
use crate::scalar::Scalar;
use crate::tensor::tensor_interpolate;

/// Anything that can be evaluated exactly at a point of the plane.
pub trait Surface {
    fn value_at(&self, x: &Scalar, y: &Scalar) -> Scalar;
}

impl Surface for ProjectedPolynomial {
    fn value_at(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.evaluate(x, y)
    }
}

impl Surface for BivariatePolynomial {
    fn value_at(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.evaluate(x, y)
    }
}

/// Which closed-form projected interpolant to compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Ordering {
    Row,
    #[default]
    Col,
}

/// Inclusive equally spaced mesh `[x_start, x_end] x [y_start, y_end]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalGrid {
    pub x_start: Scalar,
    pub x_end: Scalar,
    pub x_step: Scalar,
    pub y_start: Scalar,
    pub y_end: Scalar,
    pub y_step: Scalar,
}

fn axis_len(start: &Scalar, end: &Scalar, step: &Scalar, name: &str) -> Result<usize> {
    if step.is_zero() || step.is_negative() {
        return Err(Error::InvalidGrid(format!("{name} step must be positive, got {step}")));
    }
    let count = (end - start) / step;
    if count.is_negative() || !count.is_integer() {
        return Err(Error::InvalidGrid(format!(
            "{name} range {start}..{end} is not a whole number of steps of {step}"
        )));
    }
    let steps: usize = count
        .numer()
        .try_into()
        .map_err(|_| Error::InvalidGrid(format!("{name} axis too long")))?;
    Ok(steps + 1)
}

impl EvalGrid {
    pub fn new(
        x_start: Scalar,
        x_end: Scalar,
        x_step: Scalar,
        y_start: Scalar,
        y_end: Scalar,
        y_step: Scalar,
    ) -> Result<Self> {
        let g = EvalGrid {
            x_start,
            x_end,
            x_step,
            y_start,
            y_end,
            y_step,
        };
        g.shape()?;
        Ok(g)
    }

    /// Same axis spec for `x` and `y`.
    pub fn square(start: Scalar, end: Scalar, step: Scalar) -> Result<Self> {
        EvalGrid::new(start.clone(), end.clone(), step.clone(), start, end, step)
    }

    /// `(number of x values, number of y values)`.
    pub fn shape(&self) -> Result<(usize, usize)> {
        Ok((
            axis_len(&self.x_start, &self.x_end, &self.x_step, "x")?,
            axis_len(&self.y_start, &self.y_end, &self.y_step, "y")?,
        ))
    }

    pub fn xs(&self) -> Vec<Scalar> {
        let (nx, _) = self.shape().expect("validated at construction");
        (0..nx)
            .map(|i| &self.x_start + &self.x_step * Scalar::from(i))
            .collect()
    }

    pub fn ys(&self) -> Vec<Scalar> {
        let (_, ny) = self.shape().expect("validated at construction");
        (0..ny)
            .map(|j| &self.y_start + &self.y_step * Scalar::from(j))
            .collect()
    }
}

impl std::str::FromStr for EvalGrid {
    type Err = Error;

    /// `x0:x1:h,y0:y1:k`, e.g. `1:2:0.1,1:2:0.1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "evaluation grid (x0:x1:h,y0:y1:k)",
            input: s.to_string(),
        };
        let (xs, ys) = s.split_once(',').ok_or_else(bad)?;
        let axis = |part: &str| -> Result<(Scalar, Scalar, Scalar)> {
            let v: Vec<&str> = part.split(':').collect();
            if v.len() != 3 {
                return Err(bad());
            }
            Ok((v[0].parse()?, v[1].parse()?, v[2].parse()?))
        };
        let (x0, x1, h) = axis(xs)?;
        let (y0, y1, k) = axis(ys)?;
        EvalGrid::new(x0, x1, h, y0, y1, k)
    }
}

/// Exact values on an [`EvalGrid`]; `values[j][i]` sits at `(xs[i], ys[j])`
/// (rows are `y`, columns are `x`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorTable {
    pub grid: EvalGrid,
    pub xs: Vec<Scalar>,
    pub ys: Vec<Scalar>,
    pub values: Vec<Vec<Scalar>>,
}

impl ErrorTable {
    fn tabulate(grid: &EvalGrid, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Self {
        let xs = grid.xs();
        let ys = grid.ys();
        let values = ys
            .iter()
            .map(|y| xs.iter().map(|x| f(x, y)).collect())
            .collect();
        ErrorTable {
            grid: grid.clone(),
            xs,
            ys,
            values,
        }
    }

    /// Entry at mesh point `(x, y)`, if it lies on the mesh.
    pub fn at(&self, x: &Scalar, y: &Scalar) -> Option<&Scalar> {
        let i = self.xs.iter().position(|v| v == x)?;
        let j = self.ys.iter().position(|v| v == y)?;
        Some(&self.values[j][i])
    }

    /// Entrywise `self - other`; both tables must share the mesh.
    pub fn minus(&self, other: &ErrorTable) -> Result<ErrorTable> {
        if self.grid != other.grid {
            return Err(Error::ShapeMismatch("error tables on different meshes".into()));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.iter().zip(b).map(|(u, v)| u - v).collect())
            .collect();
        Ok(ErrorTable {
            grid: self.grid.clone(),
            xs: self.xs.clone(),
            ys: self.ys.clone(),
            values,
        })
    }

    /// Rounded decimal view, half away from zero.
    pub fn rounded(&self, decimals: usize) -> Vec<Vec<String>> {
        self.values
            .iter()
            .map(|row| row.iter().map(|v| v.to_decimal_string(decimals)).collect())
            .collect()
    }
}

/// `|reference(x, y) - approx(x, y)|` at every mesh point.
pub fn abs_error_field(
    approx: &dyn Surface,
    reference: &BivariatePolynomial,
    grid: &EvalGrid,
) -> Result<ErrorTable> {
    grid.shape()?;
    Ok(ErrorTable::tabulate(grid, |x, y| {
        (reference.evaluate(x, y) - approx.value_at(x, y)).abs()
    }))
}

fn check_reference(data: &MatrixData, reference: &BivariatePolynomial) -> Result<()> {
    for i in 1..=data.rows() {
        for j in 1..=data.cols() {
            let found = reference.evaluate(&Scalar::from(i), &Scalar::from(j));
            let expected = data.get(i, j);
            if &found != expected {
                return Err(Error::DataMismatch {
                    node: (i, j),
                    expected: expected.to_string(),
                    found: found.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// `|f - p| - |f - P|` with `p` the column-wise projected interpolant and
/// `P` the tensor-product interpolant of `data`.
pub fn error_difference_table(
    data: &MatrixData,
    reference: &BivariatePolynomial,
    grid: &EvalGrid,
) -> Result<ErrorTable> {
    error_difference_table_with(data, reference, grid, Ordering::Col)
}

pub fn error_difference_table_with(
    data: &MatrixData,
    reference: &BivariatePolynomial,
    grid: &EvalGrid,
    ordering: Ordering,
) -> Result<ErrorTable> {
    check_reference(data, reference)?;
    let projected = match ordering {
        Ordering::Row => interpolate_row(data),
        Ordering::Col => interpolate_col(data),
    };
    let tensor = tensor_interpolate(data);
    let e_projected = abs_error_field(&projected, reference, grid)?;
    let e_tensor = abs_error_field(&tensor, reference, grid)?;
    e_projected.minus(&e_tensor)
}

/// Mesh coordinate as a terminating decimal when possible (`1.1`, `2`),
/// otherwise as an exact fraction.
pub fn format_coordinate(v: &Scalar) -> String {
    let mut d = v.denom().clone();
    let two = num_bigint::BigInt::from(2);
    let five = num_bigint::BigInt::from(5);
    let zero = num_bigint::BigInt::from(0);
    let (mut twos, mut fives) = (0usize, 0usize);
    while &d % &two == zero {
        d /= &two;
        twos += 1;
    }
    while &d % &five == zero {
        d /= &five;
        fives += 1;
    }
    if d != num_bigint::BigInt::from(1) {
        return v.to_string();
    }
    v.to_decimal_string(twos.max(fives))
}

/// Wide CSV: corner cell `y\x`, header of x values, one row per y value.
pub fn emit_table_csv(table: &ErrorTable, decimals: usize) -> String {
    let mut out = String::from("y\\x");
    for x in &table.xs {
        let _ = write!(out, ",{}", format_coordinate(x));
    }
    out.push('\n');
    for (y, row) in table.ys.iter().zip(table.rounded(decimals)) {
        let _ = writeln!(out, "{},{}", format_coordinate(y), row.join(","));
    }
    out
}

/// Long-form `x,y,value` CSV for plotting tools.
pub fn emit_plot_data(table: &ErrorTable, decimals: usize) -> String {
    let mut out = String::from("x,y,value\n");
    for (y, row) in table.ys.iter().zip(&table.values) {
        for (x, v) in table.xs.iter().zip(row) {
            let _ = writeln!(
                out,
                "{},{},{}",
                format_coordinate(x),
                format_coordinate(y),
                v.to_decimal_string(decimals)
            );
        }
    }
    out
}
