//! Dense univariate polynomials over exact scalars, coefficients stored
//! lowest degree first.

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    /// Trailing zeros are dropped; the zero polynomial has no coefficients.
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        UniPoly::new(vec![c])
    }

    /// `t - root`
    pub fn linear_root(root: &Scalar) -> Self {
        UniPoly::new(vec![-root, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients padded with zeros to exactly `len` entries.
    ///
    /// # Panics
    /// If the polynomial has more than `len` coefficients.
    pub fn padded(&self, len: usize) -> Vec<Scalar> {
        assert!(self.coeffs.len() <= len, "degree exceeds padding length");
        let mut v = self.coeffs.clone();
        v.resize(len, Scalar::zero());
        v
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        horner(&self.coeffs, t)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = Scalar::zero();
        UniPoly::new(
            (0..len)
                .map(|k| {
                    self.coeffs.get(k).unwrap_or(&zero) + other.coeffs.get(k).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, k: &Scalar) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Product `(t - r_0)(t - r_1)...(t - r_{k-1})`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Scalar>) -> UniPoly {
        roots
            .into_iter()
            .fold(UniPoly::constant(Scalar::one()), |acc, r| {
                acc.mul(&UniPoly::linear_root(r))
            })
    }
}

/// Horner evaluation of `sum c_k t^k`.
pub fn horner(coeffs: &[Scalar], t: &Scalar) -> Scalar {
    coeffs
        .iter()
        .rev()
        .fold(Scalar::zero(), |acc, c| acc * t + c)
}
