//! Pointwise characteristic-polynomial identity checks.
//!
//! For each theorem, the left side `det(xI - M)` is computed by LU on the
//! explicit join matrix and the right side is the theorem's factored form,
//! evaluated literally: eigenvalue products from the small matrices of `G1`
//! and `G2`, and the coronal by a dense linear solve. Nothing here touches
//! the `closed_form` polynomial assembly, so agreement at random sample
//! points validates the theorem statements independently of root
//! extraction.

use nalgebra::DMatrix;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{Graph, JoinKind, MatrixKind, RegularGraph};
use crate::linalg::{coronal_eval_by_solve, det_lu, inf_norm, sym_eigen, Spectrum};

/// Exclusion radius around poles and eigenvalues when drawing sample points.
const EXCLUSION_RADIUS: f64 = 1e-6;

pub(crate) struct PointwiseCheck {
    kind: JoinKind,
    matrix: MatrixKind,
    n1: usize,
    m1: usize,
    n2: usize,
    r1: f64,
    g1_eigs: Vec<f64>,
    g2_eigs: Vec<f64>,
    g2_matrix: DMatrix<f64>,
    join_matrix: DMatrix<f64>,
    exclusions: Vec<f64>,
}

impl PointwiseCheck {
    pub fn new(
        g1: &RegularGraph,
        g2: &Graph,
        kind: JoinKind,
        matrix: MatrixKind,
        join_matrix: DMatrix<f64>,
        join_spectrum: &Spectrum,
    ) -> Result<Self> {
        let (n1, m1, n2) = (g1.n(), g1.m(), g2.n());
        let g1_matrix = matrix.of(g1.graph());
        let g2_small = match matrix {
            // the A- and Q-theorems carry a coronal of the same matrix kind;
            // the L-theorems are coronal-free but still use mu_i(G2)
            MatrixKind::Adjacency => g2.adjacency(),
            MatrixKind::Laplacian => g2.laplacian(),
            MatrixKind::SignlessLaplacian => g2.signless_laplacian(),
        };
        let g1_eigs = sym_eigen(&g1_matrix)?.values().to_vec();
        let g2_eigs = sym_eigen(&g2_small)?.values().to_vec();

        let shift = match kind {
            JoinKind::Sv => n1 as f64,
            JoinKind::Se => m1 as f64,
        };
        let mut exclusions: Vec<f64> = join_spectrum.values().to_vec();
        match matrix {
            MatrixKind::Adjacency => {
                exclusions.extend(&g2_eigs); // poles of Gamma_A
                exclusions.push(0.0); // x^(m1-n1)
            }
            MatrixKind::Laplacian => {
                exclusions.push(2.0);
                exclusions.push(2.0 + n2 as f64);
            }
            MatrixKind::SignlessLaplacian => {
                exclusions.extend(g2_eigs.iter().map(|&v| v + shift)); // poles of shifted Gamma_Q
                exclusions.push(2.0);
                exclusions.push(2.0 + n2 as f64);
            }
        }

        Ok(PointwiseCheck {
            kind,
            matrix,
            n1,
            m1,
            n2,
            r1: g1.degree() as f64,
            g1_eigs,
            g2_eigs,
            g2_matrix: g2_small,
            join_matrix,
            exclusions,
        })
    }

    /// Relative residuals `|lhs - rhs| / |lhs|` at `count` seeded sample
    /// points drawn from `[-(norm + 3), norm + 3]` away from all poles.
    pub fn residuals(&self, count: usize, seed: u64) -> Result<Vec<f64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let radius = inf_norm(&self.join_matrix) + 3.0;
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let x: f64 = rng.random::<f64>() * 2.0 * radius - radius;
            if self
                .exclusions
                .iter()
                .any(|&p| (x - p).abs() < EXCLUSION_RADIUS)
            {
                continue;
            }
            let n = self.join_matrix.nrows();
            let shifted = DMatrix::<f64>::identity(n, n) * x - &self.join_matrix;
            let lhs = det_lu(&shifted);
            let rhs = self.rhs(x)?;
            out.push((lhs - rhs).abs() / lhs.abs());
        }
        Ok(out)
    }

    /// The theorem's right-hand side at `x`.
    fn rhs(&self, x: f64) -> Result<f64> {
        let (n1, m1, n2) = (self.n1 as f64, self.m1 as f64, self.n2 as f64);
        let r1 = self.r1;
        let power = self.m1 as i32 - self.n1 as i32;
        match self.matrix {
            MatrixKind::Adjacency => {
                let phi2: f64 = self.g2_eigs.iter().map(|&l| x - l).product();
                let gamma = coronal_eval_by_solve(&self.g2_matrix, x)?;
                let multiplier = match self.kind {
                    JoinKind::Sv => n1,
                    JoinKind::Se => m1,
                };
                let tail: f64 = self.g1_eigs[..self.n1 - 1]
                    .iter()
                    .map(|&l| x * x - r1 - l)
                    .product();
                Ok(phi2
                    * x.powi(power)
                    * (x * x - multiplier * x * gamma - 2.0 * r1)
                    * tail)
            }
            MatrixKind::Laplacian => {
                let (pole, big_b, big_c, shift, quad_c) = match self.kind {
                    JoinKind::Sv => (
                        2.0,
                        2.0 + r1 + n1 + n2,
                        2.0 * n1 + 2.0 * n2 + n1 * r1,
                        n1,
                        2.0 * n2,
                    ),
                    JoinKind::Se => (
                        2.0 + n2,
                        2.0 + r1 + m1 + n2,
                        r1 * n2 + r1 * m1 + 2.0 * m1,
                        m1,
                        r1 * n2,
                    ),
                };
                let g2_tail: f64 = self.g2_eigs[1..].iter().map(|&mu| x - shift - mu).product();
                let g1_tail: f64 = self.g1_eigs[1..]
                    .iter()
                    .map(|&mu| x * x - (2.0 + r1 + n2) * x + quad_c + mu)
                    .product();
                Ok(x * (x - pole).powi(power)
                    * (x * x - big_b * x + big_c)
                    * g2_tail
                    * g1_tail)
            }
            MatrixKind::SignlessLaplacian => {
                let (pole, shift, quad_c, lin_root, mult, g1_base) = match self.kind {
                    JoinKind::Sv => (2.0, n1, 2.0 * n2, 2.0, n1, 2.0 * (r1 + n2)),
                    JoinKind::Se => (
                        2.0 + n2,
                        m1,
                        r1 * n2,
                        r1,
                        m1,
                        r1 * n2 + 2.0 * r1,
                    ),
                };
                let gamma = coronal_eval_by_solve(&self.g2_matrix, x - shift)?;
                let coronal_factor =
                    x * x - (2.0 + r1 + n2) * x + quad_c - mult * (x - lin_root) * gamma;
                let g2_all: f64 = self.g2_eigs.iter().map(|&nu| x - shift - nu).product();
                let g1_head: f64 = self.g1_eigs[..self.n1 - 1]
                    .iter()
                    .map(|&nu| x * x - (2.0 + r1 + n2) * x + g1_base - nu)
                    .product();
                Ok((x - pole).powi(power) * coronal_factor * g2_all * g1_head)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, petersen, Graph};

    fn check_case(g1: Graph, g2: Graph, kind: JoinKind, matrix: MatrixKind) {
        let reg = g1.as_regular().unwrap();
        let (join, _) = kind.build(&g1, &g2).unwrap();
        let m = matrix.of(&join);
        let spectrum = sym_eigen(&m).unwrap();
        let check = PointwiseCheck::new(&reg, &g2, kind, matrix, m, &spectrum).unwrap();
        for (i, r) in check.residuals(10, 91).unwrap().iter().enumerate() {
            assert!(*r <= 1e-6, "{kind}/{matrix} point {i}: residual {r}");
        }
    }

    #[test]
    fn identities_hold_for_c3_k1() {
        for kind in [JoinKind::Sv, JoinKind::Se] {
            for matrix in MatrixKind::ALL {
                check_case(cycle(3).unwrap(), Graph::empty(1), kind, matrix);
            }
        }
    }

    #[test]
    fn identities_hold_for_petersen_p3() {
        for matrix in MatrixKind::ALL {
            check_case(petersen().unwrap(), crate::graph::path(3).unwrap(), JoinKind::Se, matrix);
        }
    }

    #[test]
    fn identities_hold_on_negative_power_path() {
        for kind in [JoinKind::Sv, JoinKind::Se] {
            for matrix in MatrixKind::ALL {
                check_case(complete(2).unwrap(), crate::graph::path(3).unwrap(), kind, matrix);
                check_case(Graph::empty(1), cycle(4).unwrap(), kind, matrix);
            }
        }
    }
}
