//! Polynomials of the form `P(x, y) = sum_k lambda_k (alpha x + beta y)^k`,
//! i.e. univariate polynomials in the projected variable `t`.

use std::fmt::Write as _;

use crate::bivariate::BivariatePolynomial;
use crate::error::{Error, Result};
use crate::grid::DirectionPair;
use crate::scalar::Scalar;
use crate::univariate::horner;

/// An element of the `mn`-dimensional space spanned by
/// `1, t, ..., t^(mn-1)` with `t = alpha*x + beta*y`.
///
/// `power_coeffs` is the canonical representation and always has exactly
/// `mn` entries (trailing zeros retained). `newton_diffs` is present when the
/// polynomial was built from forward differences on unit-spaced projections
/// and then satisfies `P = sum_k diffs[k] * C(t - shift, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectedPolynomial {
    pub dir: DirectionPair,
    pub shift: Scalar,
    pub newton_diffs: Option<Vec<Scalar>>,
    pub power_coeffs: Vec<Scalar>,
}

impl ProjectedPolynomial {
    /// Power-form polynomial with `shift` set to the projection of node (1,1).
    pub fn from_power(dir: DirectionPair, power_coeffs: Vec<Scalar>) -> Self {
        let shift = &dir.alpha + &dir.beta;
        ProjectedPolynomial {
            dir,
            shift,
            newton_diffs: None,
            power_coeffs,
        }
    }

    pub fn zero(dir: DirectionPair, len: usize) -> Self {
        Self::from_power(dir, vec![Scalar::zero(); len])
    }

    /// `mn - 1`
    pub fn degree_bound(&self) -> usize {
        self.power_coeffs.len().saturating_sub(1)
    }

    /// Actual degree in `t`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.power_coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.power_coeffs.iter().all(Scalar::is_zero)
    }

    pub fn eval_t(&self, t: &Scalar) -> Scalar {
        horner(&self.power_coeffs, t)
    }

    /// Horner in `t`, then `t = alpha*x + beta*y`.
    pub fn evaluate(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.eval_t(&self.dir.at(x, y))
    }

    /// Evaluates through the Newton form, if one is recorded.
    pub fn evaluate_newton(&self, x: &Scalar, y: &Scalar) -> Option<Scalar> {
        let diffs = self.newton_diffs.as_ref()?;
        let s = self.dir.at(x, y) - &self.shift;
        let mut binom = Scalar::one();
        let mut acc = Scalar::zero();
        for (k, d) in diffs.iter().enumerate() {
            if k > 0 {
                // C(s, k) = C(s, k-1) * (s - k + 1) / k
                binom = binom * (&s - Scalar::from(k - 1)) / Scalar::from(k);
            }
            acc += d * &binom;
        }
        Some(acc)
    }

    /// Same polynomial: equal direction and equal power coefficients.
    pub fn same_as(&self, other: &Self) -> bool {
        self.dir == other.dir && self.power_coeffs == other.power_coeffs
    }

    /// Coefficient-wise `self + other`. Both must share direction and length.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self::from_power(
            self.dir.clone(),
            self.power_coeffs
                .iter()
                .zip(&other.power_coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Self::from_power(
            self.dir.clone(),
            self.power_coeffs.iter().map(|c| c * k).collect(),
        )
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dir != other.dir || self.power_coeffs.len() != other.power_coeffs.len() {
            return Err(Error::ShapeMismatch(format!(
                "polynomials in different spaces (dir {} len {} vs dir {} len {})",
                self.dir,
                self.power_coeffs.len(),
                other.dir,
                other.power_coeffs.len()
            )));
        }
        Ok(())
    }

    /// Expands every `(alpha x + beta y)^k` by the binomial theorem.
    pub fn expand_to_bivariate(&self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (k, lambda) in self.power_coeffs.iter().enumerate() {
            if lambda.is_zero() {
                continue;
            }
            let k = k as u32;
            let mut binom = Scalar::one();
            for i in 0..=k {
                if i > 0 {
                    binom = binom * Scalar::from((k - i + 1) as usize) / Scalar::from(i as usize);
                }
                let c = lambda * &binom * self.dir.alpha.pow(i) * self.dir.beta.pow(k - i);
                out.add_term((i, k - i), c);
            }
        }
        out
    }

    /// Canonical text: `dir=alpha/beta shift=s` then the power coefficients
    /// `lambda_0 ... lambda_(mn-1)` on one line.
    pub fn to_text(&self) -> String {
        let coeffs: Vec<String> = self.power_coeffs.iter().map(Scalar::to_string).collect();
        format!("dir={} shift={}\n{}\n", self.dir, self.shift, coeffs.join(" "))
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse {
            what: "polynomial header",
            input: String::new(),
        })?;
        let bad_header = || Error::Parse {
            what: "polynomial header",
            input: header.to_string(),
        };
        let mut dir = None;
        let mut shift = None;
        for field in header.split_whitespace() {
            if let Some(v) = field.strip_prefix("dir=") {
                dir = Some(v.parse::<DirectionPair>()?);
            } else if let Some(v) = field.strip_prefix("shift=") {
                shift = Some(v.parse::<Scalar>()?);
            } else {
                return Err(bad_header());
            }
        }
        let dir = dir.ok_or_else(bad_header)?;
        let body = lines.next().ok_or_else(|| Error::Parse {
            what: "polynomial coefficients",
            input: String::new(),
        })?;
        let power_coeffs = body
            .split_whitespace()
            .map(str::parse::<Scalar>)
            .collect::<Result<Vec<_>>>()?;
        if power_coeffs.is_empty() {
            return Err(Error::Parse {
                what: "polynomial coefficients",
                input: body.to_string(),
            });
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse {
                what: "polynomial text (trailing line)",
                input: extra.to_string(),
            });
        }
        let mut p = Self::from_power(dir, power_coeffs);
        if let Some(s) = shift {
            p.shift = s;
        }
        Ok(p)
    }

    /// Human form, e.g. `1/2 t^2 - 13/2 t + 19 where t = 3x+y`. Trailing
    /// zero coefficients are not shown.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.power_coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            push_signed(&mut out, c, first);
            first = false;
            let mag = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if var.is_empty() {
                let _ = write!(out, "{mag}");
            } else if mag == Scalar::one() {
                out.push_str(&var);
            } else {
                let _ = write!(out, "{mag} {var}");
            }
        }
        if first {
            out.push('0');
        }
        let _ = write!(out, " where t = {}", self.dir.linear_form());
        out
    }

    /// Newton form, e.g. `1 - 2 C(t-4, 1) + C(t-4, 2) where t = 3x+y`.
    pub fn pretty_newton(&self) -> Option<String> {
        let diffs = self.newton_diffs.as_ref()?;
        let mut out = String::new();
        let mut first = true;
        let arg = if self.shift.is_zero() {
            "t".to_string()
        } else if self.shift.is_negative() {
            format!("t+{}", self.shift.abs())
        } else {
            format!("t-{}", self.shift)
        };
        for (k, d) in diffs.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            push_signed(&mut out, d, first);
            first = false;
            let mag = d.abs();
            if k == 0 {
                let _ = write!(out, "{mag}");
            } else if mag == Scalar::one() {
                let _ = write!(out, "C({arg}, {k})");
            } else {
                let _ = write!(out, "{mag} C({arg}, {k})");
            }
        }
        if first {
            out.push('0');
        }
        let _ = write!(out, " where t = {}", self.dir.linear_form());
        Some(out)
    }
}

fn push_signed(out: &mut String, c: &Scalar, first: bool) {
    if first {
        if c.is_negative() {
            out.push('-');
        }
    } else {
        out.push_str(if c.is_negative() { " - " } else { " + " });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    fn theta_row() -> ProjectedPolynomial {
        ProjectedPolynomial::from_power(DirectionPair::new(3, 1), vec![int(19), q(-13, 2), q(1, 2)])
    }

    #[test]
    fn pretty_forms() {
        assert_eq!(theta_row().pretty(), "1/2 t^2 - 13/2 t + 19 where t = 3x+y");
        let psi = ProjectedPolynomial::from_power(
            DirectionPair::new(2, 1),
            vec![int(-2916), int(2098), int(-488), int(37)],
        );
        assert_eq!(psi.pretty(), "37 t^3 - 488 t^2 + 2098 t - 2916 where t = 2x+y");
        let zero = ProjectedPolynomial::zero(DirectionPair::new(2, 1), 4);
        assert_eq!(zero.pretty(), "0 where t = 2x+y");
        assert_eq!(zero.degree(), None);
    }

    #[test]
    fn canonical_text_round_trip() {
        let p = theta_row();
        let text = p.to_text();
        assert_eq!(text, "dir=3/1 shift=4\n19 -13/2 1/2\n");
        assert_eq!(ProjectedPolynomial::parse_text(&text).unwrap(), p);
    }

    #[test]
    fn malformed_text_rejected() {
        assert!(ProjectedPolynomial::parse_text("").is_err());
        assert!(ProjectedPolynomial::parse_text("dir=2/1 shift=3\n").is_err());
        assert!(ProjectedPolynomial::parse_text("shift=3\n1 2").is_err());
        assert!(ProjectedPolynomial::parse_text("dir=2/1 bogus\n1 2").is_err());
        assert!(ProjectedPolynomial::parse_text("dir=2/1\n1 2\n3").is_err());
    }

    #[test]
    fn expansion_examples() {
        let c = ProjectedPolynomial::from_power(DirectionPair::new(2, 1), vec![int(7)]);
        assert_eq!(c.expand_to_bivariate(), BivariatePolynomial::constant(int(7)));

        let lin = ProjectedPolynomial::from_power(DirectionPair::new(2, 1), vec![int(0), int(5)]);
        assert_eq!(
            lin.expand_to_bivariate(),
            BivariatePolynomial::from_terms([((1, 0), int(10)), ((0, 1), int(5))])
        );

        // 1/2 (x+y)^2 - 9/2 (x+y) + 8
        let p = ProjectedPolynomial::from_power(DirectionPair::new(1, 1), vec![int(8), q(-9, 2), q(1, 2)]);
        assert_eq!(
            p.expand_to_bivariate(),
            BivariatePolynomial::from_terms([
                ((2, 0), q(1, 2)),
                ((1, 1), int(1)),
                ((0, 2), q(1, 2)),
                ((1, 0), q(-9, 2)),
                ((0, 1), q(-9, 2)),
                ((0, 0), int(8)),
            ])
        );
    }

    #[test]
    fn newton_evaluation() {
        let mut p = theta_row();
        p.newton_diffs = Some(vec![int(1), int(-2), int(1)]);
        for (x, y) in [(int(1), int(1)), (q(3, 2), q(-2, 7)), (int(0), int(0))] {
            assert_eq!(p.evaluate_newton(&x, &y).unwrap(), p.evaluate(&x, &y));
        }
        assert_eq!(
            p.pretty_newton().unwrap(),
            "1 - 2 C(t-4, 1) + C(t-4, 2) where t = 3x+y"
        );
    }
}
