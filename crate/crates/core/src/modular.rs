//! Multi-modular determinant: det mod p for enough 62-bit primes that their
//! product exceeds twice the Hadamard bound, then Chinese remaindering into
//! the symmetric range. The result is exact, not probabilistic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularDeterminant {
    pub value: BigInt,
    pub primes_used: usize,
    /// Bit length of `2 * Hadamard bound + 1`, the certification target.
    pub bound_bits: u64,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending primes below 2^62.
fn primes() -> impl Iterator<Item = u64> {
    let mut c = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime_u64(c) {
            c -= 2;
        }
        let p = c;
        c -= 2;
        Some(p)
    })
}

fn reduce(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

/// Determinant modulo a prime by Gaussian elimination over GF(p).
pub fn determinant_mod_p(m: &[Vec<BigInt>], p: u64) -> u64 {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|v| reduce(v, p)).collect()).collect();
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| a[r][k] != 0) else {
            return 0;
        };
        if piv != k {
            a.swap(piv, k);
            det = (p - det) % p;
        }
        det = mul_mod(det, a[k][k], p);
        let inv = pow_mod(a[k][k], p - 2, p);
        let (upper, lower) = a.split_at_mut(k + 1);
        let prow = &upper[k];
        for row in lower.iter_mut() {
            if row[k] == 0 {
                continue;
            }
            let f = mul_mod(row[k], inv, p);
            for j in k..n {
                let sub = mul_mod(f, prow[j], p);
                row[j] = (row[j] + p - sub) % p;
            }
        }
    }
    det
}

/// `prod_i ceil(||row_i||_2)`, an upper bound on `|det|`.
pub fn hadamard_bound(m: &[Vec<BigInt>]) -> BigInt {
    m.iter()
        .map(|r| {
            let sq: BigInt = r.iter().map(|v| v * v).sum();
            let root = sq.sqrt();
            if &root * &root == sq {
                root
            } else {
                root + 1
            }
        })
        .product()
}

pub fn modular_determinant(m: &[Vec<BigInt>]) -> Result<ModularDeterminant> {
    let n = m.len();
    if let Some(r) = m.iter().find(|r| r.len() != n) {
        return Err(Error::NonSquare { rows: n, cols: r.len() });
    }
    let target: BigInt = hadamard_bound(m) * 2 + 1;
    let bound_bits = target.bits();
    let mut modulus = BigInt::one();
    let mut residue = BigInt::zero();
    let mut used = 0;
    for p in primes() {
        if modulus > target {
            break;
        }
        let r = determinant_mod_p(m, p);
        // residue' = residue + modulus * ((r - residue) * modulus^-1 mod p)
        let inv = pow_mod(reduce(&modulus, p), p - 2, p);
        let diff = (r + p - reduce(&residue, p)) % p;
        let k = mul_mod(diff, inv, p);
        residue += &modulus * BigInt::from(k);
        modulus *= BigInt::from(p);
        used += 1;
    }
    let half = &modulus >> 1;
    let value = if residue > half { residue - &modulus } else { residue };
    Ok(ModularDeterminant {
        value,
        primes_used: used,
        bound_bits,
    })
}
