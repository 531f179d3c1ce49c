//! Spanning-tree counts and Kirchhoff indices of subdivision joins.
//!
//! Each count is evaluated twice: in floating point straight from the
//! Laplacian eigenvalues, and exactly over the integers. The exact route
//! uses `prod_{i>=2} (c + mu_i(G)) = det(cI + L(G)) / c` (the full product
//! over all `i` is `det(cI + L)` and `mu_1 = 0`), so the closed form stays
//! a closed form while the corpus' largest counts (beyond 2^53) still
//! compare exactly against the Matrix-Tree oracle.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, RegularGraph};
use crate::linalg::{bareiss_det, sym_eigen, BigIntMatrix};

/// Value of a closed-form scalar corollary. `exact` is present when every
/// input to the formula is an integer, as for spanning-tree counts.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormScalar {
    pub value: f64,
    pub exact: Option<BigInt>,
    pub formula: &'static str,
}

fn check(g1: &RegularGraph, g2: &Graph) -> Result<()> {
    if g1.n() == 0 || g2.n() == 0 {
        return Err(Error::InvalidParameter(
            "joins require at least one vertex on each side".into(),
        ));
    }
    if g1.degree() == 0 && g1.n() > 1 {
        return Err(Error::InvalidParameter(
            "edgeless regular G1 is supported only as K1".into(),
        ));
    }
    Ok(())
}

/// `prod_{i>=2} (c + mu_i(g))` in floating point.
fn laplacian_product_f64(g: &Graph, c: f64) -> Result<f64> {
    let s = sym_eigen(&g.laplacian())?;
    Ok(s.values()[1..].iter().map(|&mu| c + mu).product())
}

/// `prod_{i>=2} (c + mu_i(g)) = det(cI + L) / c`, exactly. Requires `c >= 1`.
fn laplacian_product_exact(g: &Graph, c: i64) -> BigInt {
    debug_assert!(c >= 1);
    let n = g.n();
    let l = g.laplacian_int();
    let m = BigIntMatrix::from_fn(n, |i, j| l[(i, j)] + if i == j { c } else { 0 });
    let det = bareiss_det(&m);
    debug_assert!((&det % c).is_zero());
    det / c
}

/// Splits `base^exponent` into numerator / denominator powers.
fn signed_power(base: i64, exponent: i64) -> (BigInt, BigInt) {
    let p = BigInt::from(base).pow(exponent.unsigned_abs() as u32);
    if exponent >= 0 {
        (p, BigInt::from(1))
    } else {
        (BigInt::from(1), p)
    }
}

fn tree_count(
    g1: &RegularGraph,
    g2: &Graph,
    power_base: i64,
    main_term: i64,
    g2_shift: i64,
    g1_shift: i64,
    formula: &'static str,
) -> Result<ClosedFormScalar> {
    check(g1, g2)?;
    let (n1, m1, n2) = (g1.n() as i64, g1.m() as i64, g2.n() as i64);
    let exponent = m1 - n1;

    if main_term == 0 {
        // the join is disconnected (only G1 = K1 on the edge side)
        return Ok(ClosedFormScalar {
            value: 0.0,
            exact: Some(BigInt::zero()),
            formula,
        });
    }

    let value = (power_base as f64).powi(exponent as i32) * main_term as f64
        * laplacian_product_f64(g2, g2_shift as f64)?
        * laplacian_product_f64(g1.graph(), g1_shift as f64)?
        / (m1 + n1 + n2) as f64;

    let (pow_num, pow_den) = signed_power(power_base, exponent);
    let numerator = pow_num
        * main_term
        * laplacian_product_exact(g2, g2_shift)
        * laplacian_product_exact(g1.graph(), g1_shift);
    let denominator = pow_den * (m1 + n1 + n2);
    if (&numerator % &denominator) != BigInt::zero() {
        return Err(Error::InvalidParameter(format!(
            "{formula}: closed form did not evaluate to an integer"
        )));
    }
    let exact = numerator / denominator;
    debug_assert!(!exact.is_negative());
    Ok(ClosedFormScalar {
        value,
        exact: Some(exact),
        formula,
    })
}

/// Number of spanning trees of the subdivision-vertex join:
/// `2^(m1-n1) (2n1 + 2n2 + n1 r1) prod(n1 + mu_i(G2)) prod(2n2 + mu_i(G1))
///  / (m1 + n1 + n2)`.
pub fn sv_spanning_trees(g1: &RegularGraph, g2: &Graph) -> Result<ClosedFormScalar> {
    let (n1, n2, r1) = (g1.n() as i64, g2.n() as i64, g1.degree() as i64);
    tree_count(
        g1,
        g2,
        2,
        2 * n1 + 2 * n2 + n1 * r1,
        n1,
        2 * n2,
        "sv-spanning-trees",
    )
}

/// Number of spanning trees of the subdivision-edge join:
/// `(2+n2)^(m1-n1) (r1 n2 + r1 m1 + 2 m1) prod(m1 + mu_i(G2))
///  prod(r1 n2 + mu_i(G1)) / (m1 + n1 + n2)`.
///
/// For `G1 = K1` the join is disconnected and the count is 0; the formula
/// agrees because its main term vanishes.
pub fn se_spanning_trees(g1: &RegularGraph, g2: &Graph) -> Result<ClosedFormScalar> {
    let (m1, n2, r1) = (g1.m() as i64, g2.n() as i64, g1.degree() as i64);
    let main = r1 * n2 + r1 * m1 + 2 * m1;
    if main == 0 {
        return tree_count(g1, g2, 2 + n2, 0, 1, 1, "se-spanning-trees");
    }
    tree_count(g1, g2, 2 + n2, main, m1, r1 * n2, "se-spanning-trees")
}

/// Kirchhoff index of the subdivision-vertex join.
pub fn sv_kirchhoff(g1: &RegularGraph, g2: &Graph) -> Result<ClosedFormScalar> {
    check(g1, g2)?;
    let (n1, m1, n2) = (g1.n() as f64, g1.m() as f64, g2.n() as f64);
    let r1 = g1.degree() as f64;

    let mu2 = sym_eigen(&g2.laplacian())?;
    let mu1 = sym_eigen(&g1.graph().laplacian())?;
    let sum_g2: f64 = mu2.values()[1..].iter().map(|&mu| 1.0 / (n1 + mu)).sum();
    let sum_g1: f64 = mu1.values()[1..]
        .iter()
        .map(|&mu| (2.0 + r1 + n2) / (2.0 * n2 + mu))
        .sum();
    let total = (m1 + n1 + n2)
        * ((m1 - n1) / 2.0
            + (2.0 + r1 + n1 + n2) / (2.0 * n1 + 2.0 * n2 + n1 * r1)
            + sum_g2
            + sum_g1);
    Ok(ClosedFormScalar {
        value: total,
        exact: None,
        formula: "sv-kirchhoff",
    })
}

/// Kirchhoff index of the subdivision-edge join. Errors with
/// [`Error::Disconnected`] for `G1 = K1`, whose edge-side join has no join
/// edges at all.
pub fn se_kirchhoff(g1: &RegularGraph, g2: &Graph) -> Result<ClosedFormScalar> {
    check(g1, g2)?;
    if g1.degree() == 0 {
        return Err(Error::Disconnected);
    }
    let (n1, m1, n2) = (g1.n() as f64, g1.m() as f64, g2.n() as f64);
    let r1 = g1.degree() as f64;

    let mu2 = sym_eigen(&g2.laplacian())?;
    let mu1 = sym_eigen(&g1.graph().laplacian())?;
    let sum_g2: f64 = mu2.values()[1..].iter().map(|&mu| 1.0 / (m1 + mu)).sum();
    let sum_g1: f64 = mu1.values()[1..]
        .iter()
        .map(|&mu| (2.0 + r1 + n2) / (r1 * n2 + mu))
        .sum();
    let total = (m1 + n1 + n2)
        * ((m1 - n1) / (2.0 + n2)
            + (2.0 + r1 + m1 + n2) / (r1 * n2 + r1 * m1 + 2.0 * m1)
            + sum_g2
            + sum_g1);
    Ok(ClosedFormScalar {
        value: total,
        exact: None,
        formula: "se-kirchhoff",
    })
}

impl ClosedFormScalar {
    /// The exact integer when present, else the float rounded.
    pub fn rounded(&self) -> BigInt {
        match &self.exact {
            Some(v) => v.clone(),
            None => BigInt::from(self.value.round() as i64),
        }
    }

    /// Relative deviation of the float evaluation from a reference value.
    pub fn relative_deviation(&self, reference: f64) -> f64 {
        (self.value - reference).abs() / reference.abs().max(1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, Graph};

    fn reg(g: Graph) -> RegularGraph {
        g.as_regular().unwrap()
    }

    #[test]
    fn sv_trees_c3_k1_is_50() {
        let t = sv_spanning_trees(&reg(cycle(3).unwrap()), &Graph::empty(1)).unwrap();
        assert_eq!(t.exact, Some(BigInt::from(50)));
        assert!((t.value - 50.0).abs() < 1e-9);
    }

    #[test]
    fn se_trees_star_is_one() {
        // se-join of K2 and K1 is the star K_{1,3}, a tree
        let t = se_spanning_trees(&reg(complete(2).unwrap()), &Graph::empty(1)).unwrap();
        assert_eq!(t.exact, Some(BigInt::from(1)));
        assert!((t.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sv_trees_k2_k1_uses_half_prefactor() {
        // m1 - n1 = -1: the 2^(m1-n1) prefactor is 1/2; join is C4 with 4 trees
        let t = sv_spanning_trees(&reg(complete(2).unwrap()), &Graph::empty(1)).unwrap();
        assert_eq!(t.exact, Some(BigInt::from(4)));
    }

    #[test]
    fn se_trees_k1_join_is_disconnected() {
        let t = se_spanning_trees(&reg(Graph::empty(1)), &cycle(3).unwrap()).unwrap();
        assert_eq!(t.exact, Some(BigInt::zero()));
        assert_eq!(t.value, 0.0);
    }

    #[test]
    fn sv_kirchhoff_c3_k1_is_18() {
        let k = sv_kirchhoff(&reg(cycle(3).unwrap()), &Graph::empty(1)).unwrap();
        assert!((k.value - 18.0).abs() < 1e-10, "{}", k.value);
    }

    #[test]
    fn kirchhoff_positive() {
        let k = se_kirchhoff(&reg(cycle(4).unwrap()), &complete(2).unwrap()).unwrap();
        assert!(k.value > 0.0);
    }

    #[test]
    fn se_kirchhoff_rejects_k1_side() {
        assert!(matches!(
            se_kirchhoff(&reg(Graph::empty(1)), &cycle(3).unwrap()),
            Err(Error::Disconnected)
        ));
    }
}
