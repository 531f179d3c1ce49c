//! Symmetric eigendecomposition contract, backed by nalgebra.

use nalgebra::DMatrix;

use super::spectrum::Spectrum;
use crate::error::{Error, Result};

const SYMMETRY_TOL: f64 = 1e-12;

fn check_symmetric(m: &DMatrix<f64>) -> Result<()> {
    if !m.is_square() {
        return Err(Error::NonSymmetric(f64::INFINITY));
    }
    let mut worst: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in i + 1..m.ncols() {
            worst = worst.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    if worst > SYMMETRY_TOL {
        return Err(Error::NonSymmetric(worst));
    }
    Ok(())
}

/// Eigenvalues of a symmetric matrix, ascending.
pub fn sym_eigen(m: &DMatrix<f64>) -> Result<Spectrum> {
    check_symmetric(m)?;
    let eig = m.clone().symmetric_eigen();
    Ok(Spectrum::from_values(eig.eigenvalues.iter().copied().collect()))
}

/// Eigenvalues (ascending) together with matching orthonormal eigenvector
/// columns.
pub fn sym_eigen_full(m: &DMatrix<f64>) -> Result<(Spectrum, DMatrix<f64>)> {
    check_symmetric(m)?;
    let eig = m.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[a]
            .partial_cmp(&eig.eigenvalues[b])
            .expect("finite eigenvalues")
    });
    let values: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let n = m.nrows();
    let vectors = DMatrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, order[j])]);
    Ok((Spectrum::from_values(values), vectors))
}

/// Infinity norm: max absolute row sum.
pub fn inf_norm(m: &DMatrix<f64>) -> f64 {
    (0..m.nrows())
        .map(|i| m.row(i).iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Determinant via LU factorization.
pub fn det_lu(m: &DMatrix<f64>) -> f64 {
    m.clone().lu().determinant()
}
