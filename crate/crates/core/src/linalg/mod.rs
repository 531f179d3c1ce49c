//! Dense linear-algebra substrate: symmetric eigendecomposition, real
//! polynomials with companion-matrix root finding, matrix coronals, and
//! exact integer determinants for the Matrix-Tree oracle.

mod coronal;
mod eigen;
mod intdet;
mod poly;
mod spectrum;

pub use coronal::{coronal, coronal_eval_by_solve, coronal_numerator, CoronalFunction};
pub use eigen::{det_lu, inf_norm, sym_eigen, sym_eigen_full};
pub use intdet::{bareiss_det, BigIntMatrix};
pub use poly::RealPolynomial;
pub use spectrum::Spectrum;
