//! Real polynomials in coefficient form, with companion-matrix root finding.

use nalgebra::{Complex, DMatrix};
use serde::Serialize;

use super::spectrum::Spectrum;
use crate::error::{Error, Result};

/// Relative tolerance for projecting numerically-real companion roots onto
/// the real axis; anything larger is a genuine complex root.
pub const ROOT_REALNESS_TOL: f64 = 1e-7;

/// Relative remainder tolerance for checked exact division.
pub const EXACT_DIVISION_TOL: f64 = 1e-7;

/// Polynomial with real coefficients, ascending by degree. The leading
/// coefficient is nonzero unless the polynomial is identically zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct RealPolynomial {
    coeffs: Vec<f64>,
}

impl RealPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        RealPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RealPolynomial { coeffs: vec![0.0] }
    }

    pub fn constant(c: f64) -> Self {
        RealPolynomial::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        RealPolynomial { coeffs: vec![0.0, 1.0] }
    }

    /// Monic linear factor `x - root`.
    pub fn linear(root: f64) -> Self {
        RealPolynomial { coeffs: vec![-root, 1.0] }
    }

    /// Monic product of linear factors over the given roots.
    pub fn from_roots(roots: &[f64]) -> Self {
        let mut p = RealPolynomial::constant(1.0);
        for &r in roots {
            p = p.mul(&RealPolynomial::linear(r));
        }
        p
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == [0.0]
    }

    pub fn leading(&self) -> f64 {
        *self.coeffs.last().expect("coeffs never empty")
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, c| acc.max(c.abs()))
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn scale(&self, s: f64) -> RealPolynomial {
        RealPolynomial::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &RealPolynomial) -> RealPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0.0; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        RealPolynomial::from_coeffs(out)
    }

    pub fn sub(&self, other: &RealPolynomial) -> RealPolynomial {
        self.add(&other.scale(-1.0))
    }

    pub fn mul(&self, other: &RealPolynomial) -> RealPolynomial {
        if self.is_zero() || other.is_zero() {
            return RealPolynomial::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RealPolynomial::from_coeffs(out)
    }

    /// Long division that must come out exact: the remainder's largest
    /// coefficient is checked against `EXACT_DIVISION_TOL * max |numerator
    /// coefficient|`. A larger remainder means the caller assembled the
    /// wrong factorization.
    pub fn divide_exact(&self, den: &RealPolynomial) -> Result<RealPolynomial> {
        if den.is_zero() {
            return Err(Error::InvalidParameter("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(RealPolynomial::zero());
        }
        if den.degree() > self.degree() {
            return Err(Error::InexactDivision {
                residual: self.max_abs_coeff(),
                tolerance: EXACT_DIVISION_TOL * self.max_abs_coeff(),
            });
        }
        let mut rem = self.coeffs.clone();
        let dlead = den.leading();
        let dd = den.degree();
        let qd = self.degree() - dd;
        let mut quot = vec![0.0; qd + 1];
        for k in (0..=qd).rev() {
            let q = rem[k + dd] / dlead;
            quot[k] = q;
            for (i, &dc) in den.coeffs.iter().enumerate() {
                rem[k + i] -= q * dc;
            }
        }
        let residual = rem[..dd.max(1)]
            .iter()
            .fold(0.0f64, |acc, c| acc.max(c.abs()));
        let tolerance = EXACT_DIVISION_TOL * self.max_abs_coeff().max(1e-300);
        if residual > tolerance {
            return Err(Error::InexactDivision { residual, tolerance });
        }
        Ok(RealPolynomial::from_coeffs(quot))
    }

    /// All complex roots via eigenvalues of the companion matrix.
    pub fn complex_roots(&self) -> Result<Vec<Complex<f64>>> {
        if self.is_zero() {
            return Err(Error::InvalidParameter(
                "zero polynomial has no defined root set".into(),
            ));
        }
        let d = self.degree();
        if d == 0 {
            return Ok(Vec::new());
        }
        // factor out exact zero roots first; they cost nothing and keep the
        // companion matrix well scaled
        let zeros = self.coeffs.iter().take_while(|&&c| c == 0.0).count();
        let reduced = &self.coeffs[zeros..];
        let rd = reduced.len() - 1;
        let mut roots: Vec<Complex<f64>> = vec![Complex::new(0.0, 0.0); zeros];
        if rd > 0 {
            let lead = reduced[rd];
            let mut companion = DMatrix::<f64>::zeros(rd, rd);
            for i in 1..rd {
                companion[(i, i - 1)] = 1.0;
            }
            for i in 0..rd {
                companion[(i, rd - 1)] = -reduced[i] / lead;
            }
            roots.extend(companion.complex_eigenvalues().iter().copied());
        }
        Ok(roots)
    }

    /// Real roots of a polynomial that must be real-rooted (it arose from a
    /// symmetric-matrix factorization). Roots with a relative imaginary part
    /// within `ROOT_REALNESS_TOL` are projected onto the real axis; anything
    /// beyond that is reported as an assembly bug.
    pub fn real_roots(&self) -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(self.degree());
        for z in self.complex_roots()? {
            if z.im.abs() <= ROOT_REALNESS_TOL * (1.0 + z.norm()) {
                out.push(z.re);
            } else {
                return Err(Error::ComplexRootsUnexpected { re: z.re, im: z.im });
            }
        }
        out.sort_by(|a, b| a.partial_cmp(b).expect("finite roots"));
        Ok(out)
    }

    /// `real_roots` packaged as a [`Spectrum`].
    pub fn roots_spectrum(&self) -> Result<Spectrum> {
        Ok(Spectrum::from_values(self.real_roots()?))
    }
}

impl std::fmt::Display for RealPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 && self.degree() > 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0.0 { "-" } else { "+" })?;
            } else if c < 0.0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a == 1.0 => write!(f, "x")?,
                1 => write!(f, "{a}*x")?,
                _ if a == 1.0 => write!(f, "x^{i}")?,
                _ => write!(f, "{a}*x^{i}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
