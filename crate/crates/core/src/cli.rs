//! Command-line front end. The `gridpoly` binary is a thin wrapper around
//! [`run`], which takes explicit streams so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 I/O, parse or usage error, 2 mathematical
//! precondition violation (direction collision, shape or data mismatch).

use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::analysis::{emit_plot_data, emit_table_csv, error_difference_table_with, EvalGrid, Ordering};
use crate::audit::audit_nonpoisedness_with_threads;
use crate::bivariate::BivariatePolynomial;
use crate::error::Error;
use crate::grid::DirectionPair;
use crate::isomorph::{coordinate_matrix_s, coordinate_matrix_t};
use crate::matrix::MatrixData;
use crate::newton::{interpolate_col, interpolate_row};
use crate::projected::ProjectedPolynomial;
use crate::scalar::Scalar;
use crate::tensor::tensor_interpolate;
use crate::vandermonde::divided_difference_solve;

/// Environment variable holding the audit worker count.
pub const AUDIT_THREADS_ENV: &str = "GRIDPOLY_AUDIT_THREADS";

/// Largest `--max-k` accepted by `audit`.
pub const AUDIT_MAX_K: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "gridpoly", version, about = "Exact bivariate polynomial interpolation of matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    /// t = n*x + y, row-major forward differences
    Row,
    /// t = x + m*y, column-major forward differences
    Col,
    /// arbitrary direction given by --alpha/--beta
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    /// machine format: `dir=a/b shift=s` then power coefficients
    Canonical,
    /// human-readable power form in t
    Power,
    /// human-readable Newton form (row/col orderings only)
    Newton,
    /// expanded `a b coeff` monomial lines
    Bivariate,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Interpolate a matrix by a polynomial in t = alpha*x + beta*y
    Interpolate {
        /// matrix CSV file, or `-` for standard input
        matrix: String,
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
        #[arg(long, allow_hyphen_values = true, requires = "beta")]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "alpha")]
        beta: Option<String>,
        #[arg(long, value_enum, default_value = "canonical")]
        form: FormArg,
    },
    /// Evaluate a polynomial file exactly at a point
    Eval {
        /// canonical projected polynomial or `a b coeff` file, or `-`
        poly: String,
        /// point as `x,y`, e.g. `3/2,1`
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Tabulate |f - p| - |f - P| for the projected and tensor interpolants
    Compare {
        /// matrix CSV file, or `-`
        matrix: String,
        /// reference polynomial f in `a b coeff` format
        #[arg(long)]
        ref_poly: String,
        /// mesh as `x0:x1:h,y0:y1:k`
        #[arg(long, default_value = "1:2:0.1,1:2:0.1", allow_hyphen_values = true)]
        grid: String,
        #[arg(long, default_value_t = 4)]
        decimals: usize,
        /// projected interpolant to compare (row or col)
        #[arg(long, value_enum, default_value = "col")]
        order: OrderArg,
        /// emit long-form `x,y,value` instead of the wide table
        #[arg(long)]
        plot_data: bool,
    },
    /// Print the coordinate matrices of T and S and check [T][S] = I
    Isomap {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Certify singularity of total-degree sample matrices on grids
    Audit {
        #[arg(long, default_value_t = 8)]
        max_k: usize,
        /// fill the millis column (otherwise `-`, for reproducible output)
        #[arg(long)]
        timings: bool,
    },
    /// Tensor-product baseline interpolant
    Tensor {
        /// matrix CSV file, or `-`
        matrix: String,
        /// human-readable instead of `a b coeff` lines
        #[arg(long)]
        pretty: bool,
    },
}

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_precondition() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

fn read_source(path: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))?;
    }
    Ok(text)
}

fn parse_scalar(s: &str) -> Result<Scalar, Failure> {
    s.parse::<Scalar>().map_err(Failure::from)
}

/// A polynomial read from file: canonical projected text or `a b coeff`
/// lines.
enum AnyPolynomial {
    Projected(ProjectedPolynomial),
    Bivariate(BivariatePolynomial),
}

fn parse_any_polynomial(text: &str) -> Result<AnyPolynomial, Failure> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    if first.starts_with("dir=") {
        Ok(AnyPolynomial::Projected(ProjectedPolynomial::parse_text(text)?))
    } else {
        Ok(AnyPolynomial::Bivariate(BivariatePolynomial::parse_text(text)?))
    }
}

fn interpolate(
    data: &MatrixData,
    order: Option<OrderArg>,
    alpha: Option<&str>,
    beta: Option<&str>,
) -> Result<ProjectedPolynomial, Failure> {
    let dir = match (alpha, beta) {
        (Some(a), Some(b)) => Some(DirectionPair {
            alpha: parse_scalar(a)?,
            beta: parse_scalar(b)?,
        }),
        _ => None,
    };
    match (order, dir) {
        (Some(OrderArg::Row), Some(_)) | (Some(OrderArg::Col), Some(_)) => Err(usage(
            "--order row|col cannot be combined with --alpha/--beta",
        )),
        (Some(OrderArg::General), None) => Err(usage("--order general needs --alpha and --beta")),
        (_, Some(dir)) => Ok(divided_difference_solve(data, &dir)?),
        (Some(OrderArg::Col), None) => Ok(interpolate_col(data)),
        (Some(OrderArg::Row), None) | (None, None) => Ok(interpolate_row(data)),
    }
}

fn render(p: &ProjectedPolynomial, form: FormArg) -> Result<String, Failure> {
    Ok(match form {
        FormArg::Canonical => p.to_text(),
        FormArg::Power => format!("{}\n", p.pretty()),
        FormArg::Newton => format!(
            "{}\n",
            p.pretty_newton()
                .ok_or_else(|| usage("the Newton form is only available for --order row|col"))?
        ),
        FormArg::Bivariate => p.expand_to_bivariate().to_text(),
    })
}

fn parse_point(at: &str) -> Result<(Scalar, Scalar), Failure> {
    let (x, y) = at
        .split_once(',')
        .ok_or_else(|| usage(format!("--at expects x,y, got {at:?}")))?;
    Ok((parse_scalar(x)?, parse_scalar(y)?))
}

fn audit_threads() -> usize {
    std::env::var(AUDIT_THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .or_else(|| std::thread::available_parallelism().ok().map(|n| n.get()))
        .unwrap_or(1)
}

fn execute(cmd: Command, stdin: &mut dyn Read, stderr: &mut dyn Write) -> Result<String, Failure> {
    match cmd {
        Command::Interpolate {
            matrix,
            order,
            alpha,
            beta,
            form,
        } => {
            let data = MatrixData::parse_csv(&read_source(&matrix, stdin)?)?;
            let p = interpolate(&data, order, alpha.as_deref(), beta.as_deref())?;
            render(&p, form)
        }
        Command::Eval { poly, at } => {
            let (x, y) = parse_point(&at)?;
            let value = match parse_any_polynomial(&read_source(&poly, stdin)?)? {
                AnyPolynomial::Projected(p) => p.evaluate(&x, &y),
                AnyPolynomial::Bivariate(p) => p.evaluate(&x, &y),
            };
            Ok(format!("{value}\n"))
        }
        Command::Compare {
            matrix,
            ref_poly,
            grid,
            decimals,
            order,
            plot_data,
        } => {
            let data = MatrixData::parse_csv(&read_source(&matrix, stdin)?)?;
            let reference = BivariatePolynomial::parse_text(&read_source(&ref_poly, stdin)?)?;
            let grid: EvalGrid = grid.parse()?;
            let ordering = match order {
                OrderArg::Row => Ordering::Row,
                OrderArg::Col => Ordering::Col,
                OrderArg::General => return Err(usage("compare supports --order row|col")),
            };
            let table = error_difference_table_with(&data, &reference, &grid, ordering)?;
            Ok(if plot_data {
                emit_plot_data(&table, decimals)
            } else {
                emit_table_csv(&table, decimals)
            })
        }
        Command::Isomap { m, n, alpha, beta } => {
            let dir = DirectionPair {
                alpha: parse_scalar(&alpha)?,
                beta: parse_scalar(&beta)?,
            };
            let t = coordinate_matrix_t(m, n, &dir)?;
            let s = coordinate_matrix_s(m, n, &dir)?;
            let ok = t.product(&s)?.is_identity() && s.product(&t)?.is_identity();
            let mut out = String::new();
            out.push_str(&format!(
                "# [T] rows {} columns {}\n",
                t.row_basis.join(" "),
                t.col_basis.join(" ")
            ));
            out.push_str(&t.matrix.to_csv());
            out.push('\n');
            out.push_str(&format!(
                "# [S] rows {} columns {}\n",
                s.row_basis.join(" "),
                s.col_basis.join(" ")
            ));
            out.push_str(&s.matrix.to_csv());
            out.push('\n');
            if ok {
                out.push_str("product = identity: OK\n");
                Ok(out)
            } else {
                out.push_str("product = identity: FAILED\n");
                Err(Failure { code: 2, message: out })
            }
        }
        Command::Audit { max_k, timings } => {
            if !(1..=AUDIT_MAX_K).contains(&max_k) {
                return Err(usage(format!("--max-k must be between 1 and {AUDIT_MAX_K}")));
            }
            let start = Instant::now();
            let report = audit_nonpoisedness_with_threads(max_k, audit_threads());
            let _ = writeln!(
                stderr,
                "audited {} cases for k <= {max_k} in {} ms",
                report.cases.len(),
                start.elapsed().as_millis()
            );
            Ok(report.to_csv(timings))
        }
        Command::Tensor { matrix, pretty } => {
            let data = MatrixData::parse_csv(&read_source(&matrix, stdin)?)?;
            let p = tensor_interpolate(&data);
            Ok(if pretty {
                format!("{}\n", p.pretty())
            } else {
                p.to_text()
            })
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli.command, stdin, stderr) {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            0
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message.trim_end());
            f.code
        }
    }
}
