//! Non-poisedness of total-degree spaces on rectangular grids.
//!
//! For every grid shape `m x n` with `mn = dim Pi_k = (k+1)(k+2)/2`, build
//! the sample matrix of the monomial basis of `Pi_k` at the grid nodes and
//! decide singularity with an exact determinant.

use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::{grid_nodes, pi2_dimension};
use crate::linalg::{bareiss_determinant, IntMatrix};
use crate::modular::modular_determinant;

/// Largest order handled by Bareiss elimination in [`exact_determinant`];
/// larger matrices go through the multi-modular engine.
pub const BAREISS_MAX_ORDER: usize = 30;

/// Exponents `(a, b)` of `x^a y^b` with `a + b <= k`, graded by total degree
/// and, within a degree, by descending power of `x`.
pub fn monomial_basis(k: usize) -> Vec<(u32, u32)> {
    (0..=k as u32)
        .flat_map(|d| (0..=d).rev().map(move |a| (a, d - a)))
        .collect()
}

/// Every `(m, n)` with `m * n = dim Pi_k`, ascending in `m`.
pub fn grid_factorizations(k: usize) -> Vec<(usize, usize)> {
    let dim = pi2_dimension(k);
    (1..=dim).filter(|m| dim % m == 0).map(|m| (m, dim / m)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleMatrix {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub basis: Vec<(u32, u32)>,
    /// `rows[r][c] = basis[c]` evaluated at the r-th node (row-major).
    pub rows: IntMatrix,
}

impl SampleMatrix {
    pub fn order(&self) -> usize {
        self.rows.len()
    }
}

pub fn build_sample_matrix(m: usize, n: usize, k: usize) -> Result<SampleMatrix> {
    let dim = pi2_dimension(k);
    if m * n != dim {
        return Err(Error::ShapeMismatch(format!(
            "{m}x{n} grid has {} nodes but dim Pi_{k} = {dim}",
            m * n
        )));
    }
    let grid = grid_nodes(m, n)?;
    let basis = monomial_basis(k);
    let rows = grid
        .nodes()
        .iter()
        .map(|&(i, j)| {
            basis
                .iter()
                .map(|&(a, b)| BigInt::from(i).pow(a) * BigInt::from(j).pow(b))
                .collect()
        })
        .collect();
    Ok(SampleMatrix { m, n, k, basis, rows })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeterminantEngine {
    Bareiss,
    Modular { primes: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedDeterminant {
    pub value: BigInt,
    pub engine: DeterminantEngine,
}

/// Exact integer determinant: Bareiss up to [`BAREISS_MAX_ORDER`], then
/// multi-modular with a Hadamard-bound certificate.
pub fn exact_determinant(m: &[Vec<BigInt>]) -> Result<CertifiedDeterminant> {
    if m.len() <= BAREISS_MAX_ORDER {
        Ok(CertifiedDeterminant {
            value: bareiss_determinant(m)?,
            engine: DeterminantEngine::Bareiss,
        })
    } else {
        let md = modular_determinant(m)?;
        Ok(CertifiedDeterminant {
            value: md.value,
            engine: DeterminantEngine::Modular {
                primes: md.primes_used,
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditCase {
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub order: usize,
    pub determinant: CertifiedDeterminant,
    pub millis: u128,
}

impl AuditCase {
    pub fn singular(&self) -> bool {
        self.determinant.value.is_zero()
    }

    fn determinant_field(&self) -> String {
        match self.determinant.engine {
            DeterminantEngine::Bareiss => self.determinant.value.to_string(),
            DeterminantEngine::Modular { .. } => format!("{} (mod-certified)", self.determinant.value),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    /// Ordered by `(k, m, n)`.
    pub cases: Vec<AuditCase>,
}

impl AuditReport {
    pub fn all_singular(&self) -> bool {
        self.cases.iter().all(AuditCase::singular)
    }

    /// CSV with header `k,m,n,order,determinant,verdict,millis`. Without
    /// `with_timings` the millis column holds `-` so the output is
    /// reproducible byte for byte.
    pub fn to_csv(&self, with_timings: bool) -> String {
        let mut out = String::from("k,m,n,order,determinant,verdict,millis\n");
        for c in &self.cases {
            let millis = if with_timings {
                c.millis.to_string()
            } else {
                "-".to_string()
            };
            let verdict = if c.singular() { "singular" } else { "nonsingular" };
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                c.k,
                c.m,
                c.n,
                c.order,
                c.determinant_field(),
                verdict,
                millis
            );
        }
        out
    }
}

fn audit_case(k: usize, m: usize, n: usize) -> AuditCase {
    let start = Instant::now();
    let sample = build_sample_matrix(m, n, k).expect("factorization matches dimension");
    let determinant = exact_determinant(&sample.rows).expect("sample matrix is square");
    AuditCase {
        k,
        m,
        n,
        order: sample.order(),
        determinant,
        millis: start.elapsed().as_millis(),
    }
}

/// Audits every grid factorization for `1 <= k <= k_max`. Cases run in
/// parallel on the current rayon pool; the report order is fixed.
pub fn audit_nonpoisedness(k_max: usize) -> AuditReport {
    let jobs: Vec<(usize, usize, usize)> = (1..=k_max)
        .flat_map(|k| grid_factorizations(k).into_iter().map(move |(m, n)| (k, m, n)))
        .collect();
    let cases = jobs
        .par_iter()
        .map(|&(k, m, n)| audit_case(k, m, n))
        .collect();
    AuditReport { cases }
}

/// [`audit_nonpoisedness`] on a dedicated pool of `threads` workers.
pub fn audit_nonpoisedness_with_threads(k_max: usize, threads: usize) -> AuditReport {
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(|| audit_nonpoisedness(k_max)),
        Err(_) => audit_nonpoisedness(k_max),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> IntMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn basis_examples() {
        assert_eq!(monomial_basis(0), vec![(0, 0)]);
        assert_eq!(monomial_basis(1), vec![(0, 0), (1, 0), (0, 1)]);
        let b2 = monomial_basis(2);
        assert_eq!(b2.len(), 6);
        assert_eq!(b2.last(), Some(&(0, 2)));
        for k in 0..=12 {
            assert_eq!(monomial_basis(k).len(), pi2_dimension(k));
        }
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(grid_factorizations(1), vec![(1, 3), (3, 1)]);
        assert_eq!(grid_factorizations(2), vec![(1, 6), (2, 3), (3, 2), (6, 1)]);
        assert_eq!(grid_factorizations(3), vec![(1, 10), (2, 5), (5, 2), (10, 1)]);
    }

    #[test]
    fn sample_matrix_examples() {
        let s = build_sample_matrix(3, 1, 1).unwrap();
        assert_eq!(s.rows, big(&[&[1, 1, 1], &[1, 2, 1], &[1, 3, 1]]));
        assert_eq!(build_sample_matrix(1, 1, 0).unwrap().rows, big(&[&[1]]));
        let s = build_sample_matrix(3, 2, 2).unwrap();
        assert_eq!(s.order(), 6);
        assert!(bareiss_determinant(&s.rows).unwrap().is_zero());
        assert!(matches!(build_sample_matrix(2, 2, 1), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn determinant_engine_switch() {
        let id = big(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let d = exact_determinant(&id).unwrap();
        assert_eq!(d.value, BigInt::from(1));
        assert_eq!(d.engine, DeterminantEngine::Bareiss);

        let s = build_sample_matrix(3, 1, 1).unwrap();
        assert!(exact_determinant(&s.rows).unwrap().value.is_zero());

        let big_id: IntMatrix = (0..31)
            .map(|i| (0..31).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect();
        let d = exact_determinant(&big_id).unwrap();
        assert_eq!(d.value, BigInt::from(1));
        assert!(matches!(d.engine, DeterminantEngine::Modular { .. }));
        assert!(exact_determinant(&big(&[&[1, 2]])).is_err());
    }

    #[test]
    fn small_audit() {
        let r = audit_nonpoisedness(1);
        assert_eq!(r.cases.len(), 2);
        assert!(r.all_singular());
        let csv = r.to_csv(false);
        assert_eq!(
            csv,
            "k,m,n,order,determinant,verdict,millis\n1,1,3,3,0,singular,-\n1,3,1,3,0,singular,-\n"
        );
    }
}
