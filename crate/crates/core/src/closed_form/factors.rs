//! Assembly of factored characteristic polynomials into spectra.
//!
//! Each theorem contributes a list of polynomial factors. Exponents of the
//! form `(x - c)^(m1 - n1)` can be negative when `m1 < n1` (among regular
//! graphs only K1 and K2 hit this); the identity is then one of rational
//! functions and the offending linear factor must cancel exactly against a
//! root of another factor. [`FactorAccumulator::cancel_linear`] performs
//! that cancellation by checked exact division.

use super::JoinSpectrumResult;
use crate::error::{Error, Result};
use crate::linalg::{RealPolynomial, Spectrum};

/// One factor of a join characteristic polynomial, with a provenance label.
#[derive(Debug, Clone)]
pub struct SpectrumFactor {
    pub poly: RealPolynomial,
    pub multiplicity: usize,
    pub label: String,
}

#[derive(Debug, Default)]
pub(crate) struct FactorAccumulator {
    factors: Vec<SpectrumFactor>,
}

impl FactorAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, poly: RealPolynomial, multiplicity: usize, label: impl Into<String>) {
        if multiplicity == 0 {
            return;
        }
        self.factors.push(SpectrumFactor {
            poly,
            multiplicity,
            label: label.into(),
        });
    }

    pub fn push_eigenvalue(&mut self, value: f64, label: impl Into<String>) {
        self.push(RealPolynomial::linear(value), 1, label);
    }

    /// Applies `(x - root)^exponent`. A positive exponent appends the linear
    /// factor; a negative one cancels `-exponent` occurrences of `root`
    /// against the factors accumulated so far.
    pub fn apply_linear_power(
        &mut self,
        root: f64,
        exponent: i64,
        label: impl Into<String>,
    ) -> Result<()> {
        if exponent > 0 {
            self.push(RealPolynomial::linear(root), exponent as usize, label);
            Ok(())
        } else if exponent < 0 {
            self.cancel_linear(root, (-exponent) as usize)
        } else {
            Ok(())
        }
    }

    /// Cancels `count` copies of the root `c` from the accumulated factors.
    /// Each round deflates the factor whose value at `c` is (relatively)
    /// smallest; in exact arithmetic that factor vanishes at `c`.
    fn cancel_linear(&mut self, c: f64, count: usize) -> Result<()> {
        let lin = RealPolynomial::linear(c);
        for _ in 0..count {
            let best = self
                .factors
                .iter()
                .enumerate()
                .filter(|(_, f)| f.poly.degree() >= 1)
                .min_by(|(_, a), (_, b)| {
                    let ra = a.poly.eval(c).abs() / a.poly.max_abs_coeff().max(1e-300);
                    let rb = b.poly.eval(c).abs() / b.poly.max_abs_coeff().max(1e-300);
                    ra.partial_cmp(&rb).expect("finite coefficients")
                })
                .map(|(i, _)| i);
            let idx = best.ok_or(Error::InexactDivision {
                residual: f64::INFINITY,
                tolerance: 0.0,
            })?;
            let quotient = self.factors[idx].poly.divide_exact(&lin)?;
            let deflated_label = format!("{} / (x - {c})", self.factors[idx].label);
            if self.factors[idx].multiplicity > 1 {
                self.factors[idx].multiplicity -= 1;
                if quotient.degree() >= 1 {
                    self.factors.push(SpectrumFactor {
                        poly: quotient,
                        multiplicity: 1,
                        label: deflated_label,
                    });
                }
            } else if quotient.degree() >= 1 {
                self.factors[idx].poly = quotient;
                self.factors[idx].label = deflated_label;
            } else {
                self.factors.remove(idx);
            }
        }
        Ok(())
    }

    /// Multiplies the factors out and extracts every root.
    pub fn finish(self, expected_len: usize) -> Result<JoinSpectrumResult> {
        let mut charpoly = RealPolynomial::constant(1.0);
        let mut roots: Vec<f64> = Vec::with_capacity(expected_len);
        for f in &self.factors {
            for _ in 0..f.multiplicity {
                charpoly = charpoly.mul(&f.poly);
            }
            let factor_roots = roots_of(&f.poly)?;
            for _ in 0..f.multiplicity {
                roots.extend_from_slice(&factor_roots);
            }
        }
        assert_eq!(
            roots.len(),
            expected_len,
            "factor assembly produced {} eigenvalues, expected {expected_len}",
            roots.len()
        );
        Ok(JoinSpectrumResult {
            spectrum: Spectrum::from_values(roots),
            charpoly,
            factors: self.factors,
        })
    }
}

fn roots_of(p: &RealPolynomial) -> Result<Vec<f64>> {
    match p.degree() {
        0 => Ok(Vec::new()),
        1 => Ok(vec![-p.coeffs()[0] / p.coeffs()[1]]),
        2 => {
            let a = p.coeffs()[2];
            let (r1, r2) = quadratic_roots(p.coeffs()[1] / a, p.coeffs()[0] / a)?;
            Ok(vec![r1, r2])
        }
        _ => p.real_roots(),
    }
}

/// Roots of the monic quadratic `x^2 + b x + c`, via the numerically stable
/// form. Factors arising from symmetric problems are real-rooted in exact
/// arithmetic; a slightly negative discriminant is rounding noise and
/// collapses to a double root, anything worse is an assembly bug.
fn quadratic_roots(b: f64, c: f64) -> Result<(f64, f64)> {
    let disc = b * b - 4.0 * c;
    let scale = (b * b).max(c.abs()).max(1.0);
    if disc < 0.0 {
        if disc >= -1e-7 * scale {
            let r = -b / 2.0;
            return Ok((r, r));
        }
        return Err(Error::ComplexRootsUnexpected {
            re: -b / 2.0,
            im: (-disc).sqrt() / 2.0,
        });
    }
    let q = -(b + b.signum() * disc.sqrt()) / 2.0;
    if q == 0.0 {
        return Ok((0.0, 0.0));
    }
    let (r1, r2) = (q, c / q);
    Ok((r1.min(r2), r1.max(r2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_roots_stable() {
        let (a, b) = quadratic_roots(-6.0, 8.0).unwrap();
        assert_eq!((a, b), (2.0, 4.0));
        let (a, b) = quadratic_roots(0.0, -4.0).unwrap();
        assert_eq!((a, b), (-2.0, 2.0));
        let (a, b) = quadratic_roots(0.0, 0.0).unwrap();
        assert_eq!((a, b), (0.0, 0.0));
    }

    #[test]
    fn tiny_negative_discriminant_collapses() {
        let (a, b) = quadratic_roots(0.0, 1e-15).unwrap();
        assert_eq!((a, b), (0.0, 0.0));
    }

    #[test]
    fn genuinely_complex_rejected() {
        assert!(matches!(
            quadratic_roots(0.0, 4.0),
            Err(Error::ComplexRootsUnexpected { .. })
        ));
    }

    #[test]
    fn positive_power_appends() {
        let mut acc = FactorAccumulator::new();
        acc.push_eigenvalue(1.0, "one");
        acc.apply_linear_power(2.0, 3, "(x-2)^3").unwrap();
        let r = acc.finish(4).unwrap();
        assert_eq!(r.spectrum.values(), &[1.0, 2.0, 2.0, 2.0]);
    }

    #[test]
    fn negative_power_cancels_matching_root() {
        let mut acc = FactorAccumulator::new();
        // (x - 2)(x - 4) and a stray eigenvalue 7
        acc.push(
            RealPolynomial::from_coeffs(vec![8.0, -6.0, 1.0]),
            1,
            "quadratic",
        );
        acc.push_eigenvalue(7.0, "seven");
        acc.apply_linear_power(2.0, -1, "cancel").unwrap();
        let r = acc.finish(2).unwrap();
        assert_eq!(r.spectrum.values(), &[4.0, 7.0]);
    }

    #[test]
    fn cancellation_without_matching_root_fails() {
        let mut acc = FactorAccumulator::new();
        acc.push_eigenvalue(7.0, "seven");
        assert!(acc.apply_linear_power(2.0, -1, "cancel").is_err());
    }

    #[test]
    fn cancellation_prefers_exact_root_over_near_miss() {
        let mut acc = FactorAccumulator::new();
        acc.push_eigenvalue(2.0 + 1e-9, "near");
        acc.push_eigenvalue(2.0, "exact");
        acc.apply_linear_power(2.0, -1, "cancel").unwrap();
        let r = acc.finish(1).unwrap();
        assert_eq!(r.spectrum.values(), &[2.0 + 1e-9]);
    }

    #[test]
    fn charpoly_is_product_of_factors() {
        let mut acc = FactorAccumulator::new();
        acc.push_eigenvalue(1.0, "one");
        acc.push(RealPolynomial::from_coeffs(vec![-2.0, 0.0, 1.0]), 2, "sq");
        let r = acc.finish(5).unwrap();
        assert_eq!(r.charpoly.degree(), 5);
        // product check at a sample point
        let x = 0.37;
        let direct: f64 = (x - 1.0) * (x * x - 2.0) * (x * x - 2.0);
        assert!((r.charpoly.eval(x) - direct).abs() < 1e-12);
    }
}
