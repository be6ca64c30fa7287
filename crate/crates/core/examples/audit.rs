//! Certifies that total-degree sample matrices on rectangular grids are
//! singular. Pass the largest degree as the first argument (default 8).
//!
//! ```text
//! cargo run --release --example audit -- 12
//! ```

use std::time::Instant;

use gridpoly::audit::DeterminantEngine;
use gridpoly::audit_nonpoisedness;

fn main() {
    let k_max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    let start = Instant::now();
    let report = audit_nonpoisedness(k_max);
    for case in &report.cases {
        let engine = match case.determinant.engine {
            DeterminantEngine::Bareiss => "bareiss".to_string(),
            DeterminantEngine::Modular { primes } => format!("modular, {primes} primes"),
        };
        println!(
            "k={:<2} {:>3}x{:<3} order {:>3}  det = {}  ({engine}, {} ms)",
            case.k, case.m, case.n, case.order, case.determinant.value, case.millis
        );
    }
    println!(
        "{} cases, all singular: {}, {:.2?} total",
        report.cases.len(),
        report.all_singular(),
        start.elapsed()
    );
}
