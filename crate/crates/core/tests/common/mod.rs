//! Independent oracles and fixtures shared by the integration tests. None of
//! these go through the library's solvers.

#![allow(dead_code)]

use gridpoly::{BivariatePolynomial, DirectionPair, MatrixData, Scalar};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(n, d)
}

pub fn int(v: i64) -> Scalar {
    Scalar::from(v)
}

pub fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut impl Rng) -> Scalar {
    q(rng.gen_range(-20..=20), rng.gen_range(1..=6))
}

pub fn random_matrix(rng: &mut impl Rng, m: usize, n: usize) -> MatrixData {
    MatrixData::from_fn(m, n, |_, _| random_rational(rng)).unwrap()
}

pub fn random_int_matrix(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> MatrixData {
    MatrixData::from_fn(n, n, |_, _| int(rng.gen_range(lo..=hi))).unwrap()
}

/// Node values t_r = alpha*i + beta*j in row-major order.
pub fn node_projections(m: usize, n: usize, dir: &DirectionPair) -> Vec<Scalar> {
    let mut out = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            out.push(&dir.alpha * &int(i as i64) + &dir.beta * &int(j as i64));
        }
    }
    out
}

pub fn distinct(points: &[Scalar]) -> bool {
    points
        .iter()
        .enumerate()
        .all(|(a, p)| points[a + 1..].iter().all(|r| r != p))
}

fn poly_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn poly_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(|| int(0));
            let y = b.get(k).cloned().unwrap_or_else(|| int(0));
            x + y
        })
        .collect()
}

fn pad(mut v: Vec<Scalar>, len: usize) -> Vec<Scalar> {
    v.resize(len, int(0));
    v
}

/// Power coefficients (length = number of points) of the Lagrange form.
pub fn lagrange_power_coeffs(points: &[Scalar], values: &[Scalar]) -> Vec<Scalar> {
    let len = points.len();
    let mut acc = vec![int(0)];
    for (r, (tr, vr)) in points.iter().zip(values).enumerate() {
        let mut basis = vec![vr.clone()];
        for (s, ts) in points.iter().enumerate() {
            if s != r {
                let d = (tr - ts).recip();
                basis = poly_mul(&basis, &[-(ts * &d), d]);
            }
        }
        acc = poly_add(&acc, &basis);
    }
    pad(acc, len)
}

/// `det(zI - A)` by Laplace expansion over polynomials in `z`.
pub fn cofactor_char_poly(a: &MatrixData) -> Vec<Scalar> {
    let n = a.rows();
    let entries: Vec<Vec<Vec<Scalar>>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let c = -a.get(i, j).clone();
                    if i == j {
                        vec![c, int(1)]
                    } else {
                        vec![c]
                    }
                })
                .collect()
        })
        .collect();
    pad(poly_det(&entries), n + 1)
}

fn poly_det(m: &[Vec<Vec<Scalar>>]) -> Vec<Scalar> {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = vec![int(0)];
    for c in 0..n {
        let minor: Vec<Vec<Vec<Scalar>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != c)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let mut term = poly_mul(&m[0][c], &poly_det(&minor));
        if c % 2 == 1 {
            term = term.into_iter().map(|x| -x).collect();
        }
        acc = poly_add(&acc, &term);
    }
    acc
}

/// `prod_{p<q} (t_q - t_p)` computed directly.
pub fn vandermonde_oracle(points: &[Scalar]) -> Scalar {
    let mut acc = int(1);
    for qi in 0..points.len() {
        for pi in 0..qi {
            acc = acc * (&points[qi] - &points[pi]);
        }
    }
    acc
}

/// Integer Laplace expansion determinant, for small matrices.
pub fn int_cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigInt::from(0);
    for c in 0..n {
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != c)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * int_cofactor_det(&minor);
        if c % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// f(x, y) = 3x^2 + 2y^3 - x^2 y + 2xy^2 + x - y + 10
pub fn omega_reference() -> BivariatePolynomial {
    BivariatePolynomial::from_terms([
        ((2, 0), int(3)),
        ((0, 3), int(2)),
        ((2, 1), int(-1)),
        ((1, 2), int(2)),
        ((1, 0), int(1)),
        ((0, 1), int(-1)),
        ((0, 0), int(10)),
    ])
}

pub fn omega() -> MatrixData {
    MatrixData::from_ints(&[[16, 34], [25, 46]])
}

pub fn theta() -> MatrixData {
    MatrixData::from_ints(&[[1, -1, -2]])
}

pub fn psi() -> MatrixData {
    MatrixData::from_ints(&[[-15, 36], [-1, 96]])
}

pub fn zeta() -> MatrixData {
    MatrixData::from_ints(&[[-1, 2], [3, -4]])
}

/// Rows y = 1.0, 1.1, ..., 2.0; columns x = 1.0, ..., 2.0.
pub const TABLE_3: [[&str; 11]; 11] = [
    ["0", "0.0855", "0.1439", "0.1785", "0.1920", "0.1875", "0.1679", "0.1365", "0.0959", "0.0495", "0"],
    ["0.1439", "0.1485", "0.1320", "0.0975", "0.0479", "-0.0135", "-0.0839", "-0.1605", "-0.2400", "-0.3195", "-0.3959"],
    ["0.1920", "0.1275", "0.0479", "-0.0435", "-0.1440", "-0.2505", "-0.3599", "-0.4695", "-0.5759", "-0.6765", "-0.7680"],
    ["0.1679", "0.0465", "-0.0840", "-0.2205", "-0.3599", "-0.4995", "-0.6359", "-0.7665", "-0.8880", "-0.9975", "-1.0919"],
    ["0.0959", "-0.0705", "-0.2399", "-0.4095", "-0.5760", "-0.7365", "-0.8880", "-1.0275", "-1.1519", "-1.2585", "-1.3440"],
    ["0", "-0.1995", "-0.3959", "-0.5865", "-0.7680", "-0.9375", "-1.0919", "-1.2285", "-1.3440", "-1.4355", "-1.5000"],
    ["-0.0959", "-0.3165", "-0.5280", "-0.7275", "-0.9119", "-1.0785", "-1.2239", "-1.3455", "-1.4399", "-1.5045", "-1.5360"],
    ["-0.1680", "-0.3975", "-0.6119", "-0.8085", "-0.9840", "-1.1355", "-1.2600", "-1.3545", "-1.4160", "-1.4415", "-1.4280"],
    ["-0.1919", "-0.4185", "-0.6240", "-0.8055", "-0.9600", "-1.0845", "-1.1760", "-1.2315", "-1.2480", "-1.2225", "-1.1519"],
    ["-0.1440", "-0.3555", "-0.5399", "-0.6945", "-0.8160", "-0.9015", "-0.9480", "-0.9525", "-0.9119", "-0.8235", "-0.6840"],
    ["0", "0.0045", "0.0159", "0.0315", "0.0480", "0.0625", "0.0719", "0.0735", "0.0640", "0.0405", "0"],
];
