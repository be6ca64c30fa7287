//! Sparse bivariate polynomials `sum c_ab x^a y^b`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::univariate::{horner, UniPoly};

/// Exponent pair `(a, b)` of the monomial `x^a y^b`.
pub type Exponents = (u32, u32);

/// Coefficient map with no explicit zeros; the empty map is the zero
/// polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<Exponents, Scalar>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term((0, 0), c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, Scalar)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Univariate `p(x)` lifted to two variables.
    pub fn from_x(p: &UniPoly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(a, c)| ((a as u32, 0), c.clone())))
    }

    /// Univariate `p(y)` lifted to two variables.
    pub fn from_y(p: &UniPoly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(b, c)| ((0, b as u32), c.clone())))
    }

    pub fn add_term(&mut self, exps: Exponents, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn coeff(&self, exps: Exponents) -> Scalar {
        self.terms.get(&exps).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximum `a + b` over nonzero terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c * k)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }

    /// Exact value at `(x, y)`: Horner in `y` within each power of `x`.
    pub fn evaluate(&self, x: &Scalar, y: &Scalar) -> Scalar {
        let Some(max_a) = self.degree_x() else {
            return Scalar::zero();
        };
        let max_b = self.degree_y().unwrap_or(0) as usize;
        let mut by_x = vec![vec![Scalar::zero(); max_b + 1]; max_a as usize + 1];
        for ((a, b), c) in &self.terms {
            by_x[*a as usize][*b as usize] = c.clone();
        }
        let inner: Vec<Scalar> = by_x.iter().map(|ys| horner(ys, y)).collect();
        horner(&inner, x)
    }

    /// Terms in graded-lex order: total degree ascending, then higher power
    /// of `x` first.
    pub fn graded_terms(&self) -> Vec<(Exponents, Scalar)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by_key(|((a, b), _)| (a + b, std::cmp::Reverse(*a)));
        v
    }

    /// Text format: one `a b coeff` line per nonzero term, graded-lex.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for ((a, b), c) in self.graded_terms() {
            let _ = writeln!(out, "{a} {b} {c}");
        }
        out
    }

    /// Parses the `a b coeff` format. Blank lines and `#` comments are
    /// skipped; repeated monomials accumulate.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut p = Self::zero();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || Error::Parse {
                what: "bivariate term line",
                input: line.to_string(),
            };
            let mut parts = line.split_whitespace();
            let a: u32 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let b: u32 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let c: Scalar = parts.next().ok_or_else(bad)?.parse()?;
            if parts.next().is_some() {
                return Err(bad());
            }
            p.add_term((a, b), c);
        }
        Ok(p)
    }

    /// Human form such as `3xy + 6x + 15y - 8`, highest degree first.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = self.graded_terms();
        terms.sort_by_key(|((a, b), _)| std::cmp::Reverse((a + b, *a)));
        let mut out = String::new();
        for (idx, ((a, b), c)) in terms.iter().enumerate() {
            let mono = monomial(*a, *b);
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == Scalar::one() {
                out.push_str(&mono);
            } else if mag.is_integer() {
                let _ = write!(out, "{mag}{mono}");
            } else {
                let _ = write!(out, "{mag} {mono}");
            }
        }
        out
    }
}

fn monomial(a: u32, b: u32) -> String {
    let pow = |v: char, e: u32| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    };
    format!("{}{}", pow('x', a), pow('y', b))
}
