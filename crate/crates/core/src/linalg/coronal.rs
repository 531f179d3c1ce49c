//! Matrix coronals: `Gamma_M(x) = 1^T (xI - M)^{-1} 1`.
//!
//! For a symmetric `M` with orthonormal eigenbasis `{u_i}` this is the
//! rational function `sum_i c_i / (x - lambda_i)` with `c_i = (1^T u_i)^2`,
//! so we store pole/weight pairs. The weights are nonnegative and sum to
//! the dimension of `M`.

use nalgebra::{DMatrix, DVector};

use super::eigen::{sym_eigen, sym_eigen_full};
use super::poly::RealPolynomial;
use crate::error::{Error, Result};

/// Minimum distance from an eigenvalue at which `coronal_eval_by_solve`
/// will evaluate.
pub const POLE_GUARD: f64 = 1e-8;

/// Pole/weight representation of a coronal.
#[derive(Debug, Clone, PartialEq)]
pub struct CoronalFunction {
    /// `(lambda_i, c_i)` pairs, one per eigenvalue counting multiplicity,
    /// ascending by `lambda_i`.
    poles: Vec<(f64, f64)>,
}

impl CoronalFunction {
    pub fn poles(&self) -> &[(f64, f64)] {
        &self.poles
    }

    /// Dimension of the originating matrix.
    pub fn dimension(&self) -> usize {
        self.poles.len()
    }

    pub fn weight_sum(&self) -> f64 {
        self.poles.iter().map(|&(_, c)| c).sum()
    }

    /// Evaluates `sum c_i / (x - lambda_i)`. The caller keeps `x` away
    /// from the poles.
    pub fn eval(&self, x: f64) -> f64 {
        self.poles.iter().map(|&(l, c)| c / (x - l)).sum()
    }

    /// The coronal as a function of `x` shifted by `s`: represents
    /// `Gamma_M(x - s)`, whose poles sit at `lambda_i + s`.
    pub fn shifted(&self, s: f64) -> CoronalFunction {
        CoronalFunction {
            poles: self.poles.iter().map(|&(l, c)| (l + s, c)).collect(),
        }
    }

    /// Monic denominator: the characteristic polynomial of the originating
    /// (possibly shifted) matrix.
    pub fn denominator(&self) -> RealPolynomial {
        let roots: Vec<f64> = self.poles.iter().map(|&(l, _)| l).collect();
        RealPolynomial::from_roots(&roots)
    }

    /// Numerator `p` with `Gamma = p / denominator`:
    /// `p(x) = sum_i c_i * prod_{j != i} (x - lambda_j)`.
    pub fn numerator(&self) -> RealPolynomial {
        let n = self.poles.len();
        let mut acc = RealPolynomial::zero();
        for i in 0..n {
            let others: Vec<f64> = (0..n)
                .filter(|&j| j != i)
                .map(|j| self.poles[j].0)
                .collect();
            acc = acc.add(&RealPolynomial::from_roots(&others).scale(self.poles[i].1));
        }
        acc
    }

    /// Splits the coronal into poles that carry no weight plus a reduced
    /// coronal over distinct weighted poles.
    ///
    /// Repeated eigenvalues and eigenvalues whose eigenspace is orthogonal
    /// to the all-ones vector do not couple to the coronal: in a factored
    /// characteristic polynomial `phi * quad - k * lin * p` they split off
    /// as exact linear factors. Extracting them first keeps the remaining
    /// polynomial's roots simple, which the companion-matrix solver needs
    /// for full accuracy.
    pub fn reduce(&self) -> ReducedCoronal {
        let mut inert: Vec<(f64, usize)> = Vec::new();
        let mut reduced: Vec<(f64, f64)> = Vec::new();
        let mut i = 0;
        while i < self.poles.len() {
            let mut j = i + 1;
            let mut value_sum = self.poles[i].0;
            let mut weight = self.poles[i].1;
            while j < self.poles.len() {
                let rep = value_sum / (j - i) as f64;
                if (self.poles[j].0 - rep).abs() <= POLE_GROUPING_TOL * rep.abs().max(1.0) {
                    value_sum += self.poles[j].0;
                    weight += self.poles[j].1;
                    j += 1;
                } else {
                    break;
                }
            }
            let count = j - i;
            let value = value_sum / count as f64;
            if weight <= ZERO_WEIGHT_TOL {
                inert.push((value, count));
            } else {
                if count > 1 {
                    inert.push((value, count - 1));
                }
                reduced.push((value, weight));
            }
            i = j;
        }
        ReducedCoronal {
            inert,
            reduced: CoronalFunction { poles: reduced },
        }
    }
}

/// Relative tolerance for grouping nearby poles in [`CoronalFunction::reduce`].
pub const POLE_GROUPING_TOL: f64 = 1e-9;

/// Weights at or below this are treated as exactly zero (they are squares
/// of rounding noise; a genuinely tiny weight misclassified here perturbs
/// eigenvalues by no more than the threshold itself).
pub const ZERO_WEIGHT_TOL: f64 = 1e-10;

/// Outcome of [`CoronalFunction::reduce`].
#[derive(Debug, Clone)]
pub struct ReducedCoronal {
    /// `(value, multiplicity)` of poles that factor out exactly.
    pub inert: Vec<(f64, usize)>,
    /// The coronal restricted to its distinct weighted poles.
    pub reduced: CoronalFunction,
}

/// Computes the pole/weight coronal of a symmetric matrix.
pub fn coronal(m: &DMatrix<f64>) -> Result<CoronalFunction> {
    let (spectrum, vectors) = sym_eigen_full(m)?;
    let poles = spectrum
        .values()
        .iter()
        .enumerate()
        .map(|(j, &l)| {
            let dot: f64 = vectors.column(j).iter().sum();
            (l, dot * dot)
        })
        .collect();
    Ok(CoronalFunction { poles })
}

/// Evaluates the coronal by a dense linear solve of `(xI - M) y = 1`,
/// independently of the pole/weight representation.
pub fn coronal_eval_by_solve(m: &DMatrix<f64>, x: f64) -> Result<f64> {
    let spectrum = sym_eigen(m)?;
    let dist = spectrum
        .values()
        .iter()
        .fold(f64::INFINITY, |acc, &l| acc.min((x - l).abs()));
    if dist < POLE_GUARD {
        return Err(Error::NearSingular { x, dist });
    }
    let n = m.nrows();
    let shifted = DMatrix::<f64>::identity(n, n) * x - m;
    let ones = DVector::from_element(n, 1.0);
    let y = shifted
        .lu()
        .solve(&ones)
        .ok_or(Error::NearSingular { x, dist })?;
    Ok(y.sum())
}

/// Numerator polynomial of the coronal of `m` (see
/// [`CoronalFunction::numerator`]).
pub fn coronal_numerator(m: &DMatrix<f64>) -> Result<RealPolynomial> {
    Ok(coronal(m)?.numerator())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle, path, Graph};
    use rand::{RngExt, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn weights_sum_to_dimension() {
        for g in [cycle(5).unwrap(), complete_bipartite(2, 3).unwrap(), path(4).unwrap()] {
            for m in [g.adjacency(), g.laplacian(), g.signless_laplacian()] {
                let c = coronal(&m).unwrap();
                assert!((c.weight_sum() - g.n() as f64).abs() < 1e-9);
                assert!(c.poles().iter().all(|&(_, w)| w >= -1e-12));
            }
        }
    }

    #[test]
    fn regular_coronal_is_n_over_x_minus_r() {
        // 2-regular C4 at x = 3: 4 / (3 - 2) = 4
        let c = coronal(&cycle(4).unwrap().adjacency()).unwrap();
        assert!((c.eval(3.0) - 4.0).abs() < 1e-10);
    }

    #[test]
    fn star_coronal_matches_closed_form() {
        // Gamma_{A(K_{1,4})}(x) = (5x + 8) / (x^2 - 4); at x = 3: 23/5
        let c = coronal(&complete_bipartite(1, 4).unwrap().adjacency()).unwrap();
        assert!((c.eval(3.0) - 23.0 / 5.0).abs() < 1e-10);
    }

    #[test]
    fn laplacian_coronal_is_n_over_x() {
        // Gamma_{L(P3)}(2) = 3/2
        let c = coronal(&path(3).unwrap().laplacian()).unwrap();
        assert!((c.eval(2.0) - 1.5).abs() < 1e-10);
    }

    #[test]
    fn solve_route_basic_values() {
        let k1 = Graph::empty(1);
        assert!((coronal_eval_by_solve(&k1.adjacency(), 2.0).unwrap() - 0.5).abs() < 1e-12);
        let k2 = crate::graph::complete(2).unwrap();
        assert!((coronal_eval_by_solve(&k2.adjacency(), 3.0).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn solve_route_guards_poles() {
        let k2 = crate::graph::complete(2).unwrap();
        assert!(matches!(
            coronal_eval_by_solve(&k2.adjacency(), 1.0 + 1e-12),
            Err(Error::NearSingular { .. })
        ));
    }

    #[test]
    fn pole_form_matches_solve_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut m = DMatrix::<f64>::zeros(5, 5);
            for i in 0..5 {
                for j in i..5 {
                    let v: f64 = rng.random::<f64>() * 4.0 - 2.0;
                    m[(i, j)] = v;
                    m[(j, i)] = v;
                }
            }
            let c = coronal(&m).unwrap();
            for _ in 0..4 {
                let x = 8.0 + rng.random::<f64>() * 4.0; // beyond spectral radius
                let by_solve = coronal_eval_by_solve(&m, x).unwrap();
                let rel = (c.eval(x) - by_solve).abs() / by_solve.abs().max(1.0);
                assert!(rel < 1e-9, "pole form vs solve: rel {rel}");
            }
        }
    }

    #[test]
    fn numerator_examples() {
        // A(K1): p = 1, phi = x
        let p = coronal_numerator(&Graph::empty(1).adjacency()).unwrap();
        assert!((p.eval(0.7) - 1.0).abs() < 1e-12);
        assert_eq!(p.degree(), 0);

        // A(K2): Gamma = 2/(x-1), so p = 2x + 2 against phi = x^2 - 1
        let p = coronal_numerator(&crate::graph::complete(2).unwrap().adjacency()).unwrap();
        assert!((p.eval(0.0) - 2.0).abs() < 1e-10);
        assert!((p.eval(1.0) - 4.0).abs() < 1e-10);

        // A(K_{1,4}): p / phi must agree with the solve route pointwise
        let m = complete_bipartite(1, 4).unwrap().adjacency();
        let c = coronal(&m).unwrap();
        let p = c.numerator();
        let phi = c.denominator();
        for k in 0..10 {
            let x = 3.0 + 0.37 * k as f64;
            let direct = coronal_eval_by_solve(&m, x).unwrap();
            assert!((p.eval(x) / phi.eval(x) - direct).abs() < 1e-9 * direct.abs().max(1.0));
        }
        // against phi = x^3 (x^2 - 4), the numerator is (5x + 8) x^3
        assert_eq!(p.degree(), 4);
        let expected = [0.0, 0.0, 0.0, 8.0, 5.0];
        for (a, b) in p.coeffs().iter().zip(expected) {
            assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
    }
}
