//! Closed-form spectra, spanning-tree counts and Kirchhoff indices of
//! subdivision joins.
//!
//! For an `r1`-regular `G1` and an arbitrary `G2`, every characteristic
//! polynomial of a subdivision join factors through the spectra of `G1` and
//! `G2` plus one coronal-bearing factor. The coronal factor is assembled
//! here as an explicit degree-`n2 + 2` polynomial: with
//! `Gamma = p / phi` the factor `phi(x) * (quadratic) - k * (linear) * p(x)`
//! absorbs the `prod (x - shift - eig_i(G2))` product, which keeps the
//! degree bookkeeping exact for arbitrary (even disconnected) `G2`.

mod factors;
mod scalars;

pub use factors::SpectrumFactor;
pub use scalars::{
    se_kirchhoff, se_spanning_trees, sv_kirchhoff, sv_spanning_trees, ClosedFormScalar,
};

use factors::FactorAccumulator;

use crate::error::{Error, Result};
use crate::graph::{Graph, JoinKind, MatrixKind, RegularGraph};
use crate::linalg::{coronal, sym_eigen, CoronalFunction, RealPolynomial, Spectrum};

/// A closed-form join spectrum together with its factored characteristic
/// polynomial. The product of `factors` equals `charpoly`, and `spectrum`
/// holds all `n1 + m1 + n2` roots.
#[derive(Debug, Clone)]
pub struct JoinSpectrumResult {
    pub spectrum: Spectrum,
    pub charpoly: RealPolynomial,
    pub factors: Vec<SpectrumFactor>,
}

fn check_inputs(g1: &RegularGraph, n2: usize) -> Result<()> {
    if g1.n() == 0 {
        return Err(Error::InvalidParameter("G1 must have at least one vertex".into()));
    }
    if n2 == 0 {
        return Err(Error::InvalidParameter("G2 must have at least one vertex".into()));
    }
    if g1.degree() == 0 && g1.n() > 1 {
        return Err(Error::InvalidParameter(
            "edgeless regular G1 is supported only as K1".into(),
        ));
    }
    Ok(())
}

/// Adjacency eigenvalues of `G1` with the largest (`r1` itself) removed,
/// ascending: the factorizations' products run over `i = 2..=n1` in the
/// descending eigenvalue convention.
fn g1_adjacency_tail(g1: &RegularGraph) -> Result<Vec<f64>> {
    let s = sym_eigen(&g1.graph().adjacency())?;
    Ok(s.values()[..s.len() - 1].to_vec())
}

/// Laplacian eigenvalues with the smallest (0) removed, ascending.
fn laplacian_tail(g: &Graph) -> Result<Vec<f64>> {
    let s = sym_eigen(&g.laplacian())?;
    Ok(s.values()[1..].to_vec())
}

/// Signless-Laplacian eigenvalues with the largest removed, ascending. For
/// a regular `G1` the removed eigenvalue is `2 r1`.
fn q_head(g: &Graph) -> Result<Vec<f64>> {
    let s = sym_eigen(&g.signless_laplacian())?;
    Ok(s.values()[..s.len() - 1].to_vec())
}

fn monic_quadratic(b: f64, c: f64) -> RealPolynomial {
    RealPolynomial::from_coeffs(vec![c, b, 1.0])
}

/// Pushes the theorem's coronal-bearing factor
/// `phi(x) * quad(x) - multiplier * lin(x) * p(x)` where `Gamma = p / phi`.
/// Poles without coronal weight (and repeated poles) split off as exact
/// linear factors first, so the polynomial handed to the root solver has
/// simple roots.
fn push_coronal_factor(
    acc: &mut FactorAccumulator,
    cor: &CoronalFunction,
    quad: &RealPolynomial,
    lin: &RealPolynomial,
    multiplier: f64,
) {
    if multiplier == 0.0 {
        // no coronal coupling (G1 = K1 on the edge side): the factor is
        // phi * quad exactly, and phi's roots are the poles themselves
        for &(value, _) in cor.poles() {
            acc.push(RealPolynomial::linear(value), 1, "uncoupled coronal pole");
        }
        acc.push(quad.clone(), 1, "coronal factor");
        return;
    }
    let split = cor.reduce();
    for &(value, count) in &split.inert {
        acc.push(RealPolynomial::linear(value), count, "inert coronal pole");
    }
    let d = split
        .reduced
        .denominator()
        .mul(quad)
        .sub(&lin.mul(&split.reduced.numerator()).scale(multiplier));
    acc.push(d, 1, "coronal factor");
}

/// A-spectrum of the subdivision join with the stated vertex-side (`n1`) or
/// edge-side (`m1`) coronal multiplier; the remaining factors agree.
fn subdivision_a_spectrum(
    g1: &RegularGraph,
    g2: &Graph,
    coronal_multiplier: f64,
) -> Result<JoinSpectrumResult> {
    check_inputs(g1, g2.n())?;
    let (n1, m1, n2) = (g1.n(), g1.m(), g2.n());
    let r1 = g1.degree() as f64;

    let cor = coronal(&g2.adjacency())?;
    let mut acc = FactorAccumulator::new();
    // phi(A(G2); x) * (x^2 - 2 r1) - k * x * p(x), degree n2 + 2 in total
    push_coronal_factor(
        &mut acc,
        &cor,
        &monic_quadratic(0.0, -2.0 * r1),
        &RealPolynomial::x(),
        coronal_multiplier,
    );
    for &lambda in &g1_adjacency_tail(g1)? {
        acc.push(
            monic_quadratic(0.0, -(r1 + lambda)),
            1,
            "+-sqrt(r1 + lambda_i(G1))",
        );
    }
    acc.apply_linear_power(0.0, m1 as i64 - n1 as i64, "x^(m1 - n1)")?;
    acc.finish(n1 + m1 + n2)
}

/// A-spectrum of the subdivision-vertex join `G1 (sv) G2`.
pub fn sv_a_spectrum(g1: &RegularGraph, g2: &Graph) -> Result<JoinSpectrumResult> {
    subdivision_a_spectrum(g1, g2, g1.n() as f64)
}

/// A-spectrum of the subdivision-edge join `G1 (se) G2`.
pub fn se_a_spectrum(g1: &RegularGraph, g2: &Graph) -> Result<JoinSpectrumResult> {
    subdivision_a_spectrum(g1, g2, g1.m() as f64)
}

fn a_regular_corollary(
    g1: &RegularGraph,
    g2: &RegularGraph,
    cubic_linear_coeff: f64,
) -> Result<JoinSpectrumResult> {
    check_inputs(g1, g2.n())?;
    let (n1, m1, n2) = (g1.n(), g1.m(), g2.n());
    let (r1, r2) = (g1.degree() as f64, g2.degree() as f64);

    let mut acc = FactorAccumulator::new();
    // lambda_i(G2) for i = 2..=n2 (all but the largest, which is r2)
    let lam2 = sym_eigen(&g2.graph().adjacency())?;
    for &lambda in &lam2.values()[..n2 - 1] {
        acc.push_eigenvalue(lambda, "lambda_i(G2)");
    }
    for &lambda in &g1_adjacency_tail(g1)? {
        acc.push(
            monic_quadratic(0.0, -(r1 + lambda)),
            1,
            "+-sqrt(r1 + lambda_i(G1))",
        );
    }
    acc.push(
        RealPolynomial::from_coeffs(vec![2.0 * r1 * r2, -cubic_linear_coeff, -r2, 1.0]),
        1,
        "cubic factor",
    );
    acc.apply_linear_power(0.0, m1 as i64 - n1 as i64, "x^(m1 - n1)")?;
    acc.finish(n1 + m1 + n2)
}

/// Regular-`G2` corollary of the sv A-theorem: the coronal factor collapses
/// to the cubic `x^3 - r2 x^2 - (n1 n2 + 2 r1) x + 2 r1 r2`.
pub fn sv_a_regular_corollary(g1: &RegularGraph, g2: &RegularGraph) -> Result<JoinSpectrumResult> {
    a_regular_corollary(g1, g2, (g1.n() * g2.n()) as f64 + 2.0 * g1.degree() as f64)
}

/// Regular-`G2` corollary of the se A-theorem: cubic
/// `x^3 - r2 x^2 - (m1 n2 + 2 r1) x + 2 r1 r2`.
pub fn se_a_regular_corollary(g1: &RegularGraph, g2: &RegularGraph) -> Result<JoinSpectrumResult> {
    a_regular_corollary(g1, g2, (g1.m() * g2.n()) as f64 + 2.0 * g1.degree() as f64)
}

fn a_kpq_corollary(
    g1: &RegularGraph,
    p: usize,
    q: usize,
    size_multiplier: usize,
) -> Result<JoinSpectrumResult> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidParameter(
            "complete bipartite parts must be nonempty".into(),
        ));
    }
    check_inputs(g1, p + q)?;
    let (n, m) = (g1.n(), g1.m());
    if m < n {
        return Err(Error::HypothesisViolated(
            "the K_{p,q} corollary requires m1 >= n1".into(),
        ));
    }
    let r = g1.degree() as f64;
    let (pf, qf, sf) = (p as f64, q as f64, size_multiplier as f64);

    let mut acc = FactorAccumulator::new();
    acc.apply_linear_power(0.0, (m - n + p + q) as i64 - 2, "x^(m1 - n1 + p + q - 2)")?;
    for &lambda in &g1_adjacency_tail(g1)? {
        acc.push(
            monic_quadratic(0.0, -(r + lambda)),
            1,
            "+-sqrt(r + lambda_i(G1))",
        );
    }
    // x^4 - (pq + s(p+q) + 2r) x^2 - 2 s p q x + 2 p q r
    acc.push(
        RealPolynomial::from_coeffs(vec![
            2.0 * pf * qf * r,
            -2.0 * sf * pf * qf,
            -(pf * qf + sf * (pf + qf) + 2.0 * r),
            0.0,
            1.0,
        ]),
        1,
        "quartic factor",
    );
    acc.finish(n + m + p + q)
}

/// `G (sv) K_{p,q}` corollary (quartic coronal factor); requires `m1 >= n1`.
pub fn sv_a_kpq_corollary(g1: &RegularGraph, p: usize, q: usize) -> Result<JoinSpectrumResult> {
    a_kpq_corollary(g1, p, q, g1.n())
}

/// `G (se) K_{p,q}` corollary; requires `m1 >= n1`.
pub fn se_a_kpq_corollary(g1: &RegularGraph, p: usize, q: usize) -> Result<JoinSpectrumResult> {
    a_kpq_corollary(g1, p, q, g1.m())
}

/// L-spectrum of the subdivision-vertex join. Fully explicit: the
/// substitution `Gamma_L(x) = n/x` eliminates the coronal entirely.
pub fn sv_l_spectrum(g1: &RegularGraph, g2: &Graph) -> Result<JoinSpectrumResult> {
    check_inputs(g1, g2.n())?;
    let (n1, m1, n2) = (g1.n(), g1.m(), g2.n());
    let (n1f, n2f) = (n1 as f64, n2 as f64);
    let r1 = g1.degree() as f64;

    let mut acc = FactorAccumulator::new();
    acc.push_eigenvalue(0.0, "zero eigenvalue");
    acc.push(
        monic_quadratic(
            -(2.0 + r1 + n1f + n2f),
            2.0 * n1f + 2.0 * n2f + n1f * r1,
        ),
        1,
        "join quadratic",
    );
    for &mu in &laplacian_tail(g2)? {
        acc.push_eigenvalue(n1f + mu, "n1 + mu_i(G2)");
    }
    for &mu in &laplacian_tail(g1.graph())? {
        acc.push(
            monic_quadratic(-(2.0 + r1 + n2f), 2.0 * n2f + mu),
            1,
            "G1 quadratic",
        );
    }
    acc.apply_linear_power(2.0, m1 as i64 - n1 as i64, "(x - 2)^(m1 - n1)")?;
    acc.finish(n1 + m1 + n2)
}

/// L-spectrum of the subdivision-edge join.
pub fn se_l_spectrum(g1: &RegularGraph, g2: &Graph) -> Result<JoinSpectrumResult> {
    check_inputs(g1, g2.n())?;
    let (n1, m1, n2) = (g1.n(), g1.m(), g2.n());
    let (m1f, n2f) = (m1 as f64, n2 as f64);
    let r1 = g1.degree() as f64;

    let mut acc = FactorAccumulator::new();
    acc.push_eigenvalue(0.0, "zero eigenvalue");
    acc.push(
        monic_quadratic(
            -(2.0 + r1 + m1f + n2f),
            r1 * n2f + r1 * m1f + 2.0 * m1f,
        ),
        1,
        "join quadratic",
    );
    for &mu in &laplacian_tail(g2)? {
        acc.push_eigenvalue(m1f + mu, "m1 + mu_i(G2)");
    }
    for &mu in &laplacian_tail(g1.graph())? {
        acc.push(
            monic_quadratic(-(2.0 + r1 + n2f), r1 * n2f + mu),
            1,
            "G1 quadratic",
        );
    }
    acc.apply_linear_power(2.0 + n2f, m1 as i64 - n1 as i64, "(x - 2 - n2)^(m1 - n1)")?;
    acc.finish(n1 + m1 + n2)
}

/// Q-spectrum factors common to both joins: the shifted coronal of `Q(G2)`
/// enters through `phi_Q(x - shift) * quad(x) - mult * lin(x) * p_Q(x - shift)`.
struct QAssembly {
    shift: f64,
    coronal_multiplier: f64,
    quad: RealPolynomial,
    lin: RealPolynomial,
    g1_quad_constant_base: f64,
    cancel_root: f64,
}

fn subdivision_q_spectrum(g1: &RegularGraph, g2: &Graph, a: QAssembly) -> Result<JoinSpectrumResult> {
    check_inputs(g1, g2.n())?;
    let (n1, m1, n2) = (g1.n(), g1.m(), g2.n());
    let r1 = g1.degree() as f64;
    let n2f = n2 as f64;

    let cor = coronal(&g2.signless_laplacian())?.shifted(a.shift);
    let mut acc = FactorAccumulator::new();
    push_coronal_factor(&mut acc, &cor, &a.quad, &a.lin, a.coronal_multiplier);
    for &nu in &q_head(g1.graph())? {
        acc.push(
            monic_quadratic(-(2.0 + r1 + n2f), a.g1_quad_constant_base - nu),
            1,
            "G1 quadratic",
        );
    }
    acc.apply_linear_power(a.cancel_root, m1 as i64 - n1 as i64, "linear power factor")?;
    acc.finish(n1 + m1 + n2)
}

/// Q-spectrum of the subdivision-vertex join.
pub fn sv_q_spectrum(g1: &RegularGraph, g2: &Graph) -> Result<JoinSpectrumResult> {
    let (n1f, n2f) = (g1.n() as f64, g2.n() as f64);
    let r1 = g1.degree() as f64;
    subdivision_q_spectrum(
        g1,
        g2,
        QAssembly {
            shift: n1f,
            coronal_multiplier: n1f,
            quad: monic_quadratic(-(2.0 + r1 + n2f), 2.0 * n2f),
            lin: RealPolynomial::linear(2.0),
            g1_quad_constant_base: 2.0 * (r1 + n2f),
            cancel_root: 2.0,
        },
    )
}

/// Q-spectrum of the subdivision-edge join.
pub fn se_q_spectrum(g1: &RegularGraph, g2: &Graph) -> Result<JoinSpectrumResult> {
    let (m1f, n2f) = (g1.m() as f64, g2.n() as f64);
    let r1 = g1.degree() as f64;
    subdivision_q_spectrum(
        g1,
        g2,
        QAssembly {
            shift: m1f,
            coronal_multiplier: m1f,
            quad: monic_quadratic(-(2.0 + r1 + n2f), r1 * n2f),
            lin: RealPolynomial::linear(r1),
            g1_quad_constant_base: r1 * n2f + 2.0 * r1,
            cancel_root: 2.0 + n2f,
        },
    )
}

struct QRegularCorollary {
    shift: f64,
    cubic_a: f64,
    cubic_b: f64,
    cubic_const: f64,
    g1_quad_constant_base: f64,
    cancel_root: f64,
}

fn q_regular_corollary(
    g1: &RegularGraph,
    g2: &RegularGraph,
    c: QRegularCorollary,
) -> Result<JoinSpectrumResult> {
    check_inputs(g1, g2.n())?;
    let (n1, m1, n2) = (g1.n(), g1.m(), g2.n());
    let r1 = g1.degree() as f64;
    let n2f = n2 as f64;

    let mut acc = FactorAccumulator::new();
    acc.push(
        RealPolynomial::from_coeffs(vec![-c.cubic_const, c.cubic_b, -c.cubic_a, 1.0]),
        1,
        "cubic factor",
    );
    // nu_i(G2) for i = 1..=n2-1 (all but the largest, 2 r2)
    let nu2 = sym_eigen(&g2.graph().signless_laplacian())?;
    for &nu in &nu2.values()[..n2 - 1] {
        acc.push_eigenvalue(c.shift + nu, "shift + nu_i(G2)");
    }
    for &nu in &q_head(g1.graph())? {
        acc.push(
            monic_quadratic(-(2.0 + r1 + n2f), c.g1_quad_constant_base - nu),
            1,
            "G1 quadratic",
        );
    }
    acc.apply_linear_power(c.cancel_root, m1 as i64 - n1 as i64, "linear power factor")?;
    acc.finish(n1 + m1 + n2)
}

/// Regular-`G2` corollary of the sv Q-theorem:
/// `x^3 - a x^2 + b x - 4 r2 n2` with
/// `a = 2 + 2 r2 + r1 + n1 + n2`, `b = 2 n1 + 2 n2 + n1 r1 + 2 r1 r2 + 2 r2 n2 + 4 r2`.
pub fn sv_q_regular_corollary(g1: &RegularGraph, g2: &RegularGraph) -> Result<JoinSpectrumResult> {
    let (n1f, n2f) = (g1.n() as f64, g2.n() as f64);
    let (r1, r2) = (g1.degree() as f64, g2.degree() as f64);
    q_regular_corollary(
        g1,
        g2,
        QRegularCorollary {
            shift: n1f,
            cubic_a: 2.0 + 2.0 * r2 + r1 + n1f + n2f,
            cubic_b: 2.0 * n1f + 2.0 * n2f + n1f * r1 + 2.0 * r1 * r2 + 2.0 * r2 * n2f + 4.0 * r2,
            cubic_const: 4.0 * r2 * n2f,
            g1_quad_constant_base: 2.0 * (r1 + n2f),
            cancel_root: 2.0,
        },
    )
}

/// Regular-`G2` corollary of the se Q-theorem:
/// `x^3 - a x^2 + b x - 2 r1 r2 n2` with
/// `a = 2 + 2 r2 + r1 + m1 + n2`, `b = r1 n2 + 2 m1 + r1 m1 + 4 r2 + 2 r1 r2 + 2 r2 n2`.
pub fn se_q_regular_corollary(g1: &RegularGraph, g2: &RegularGraph) -> Result<JoinSpectrumResult> {
    let (m1f, n2f) = (g1.m() as f64, g2.n() as f64);
    let (r1, r2) = (g1.degree() as f64, g2.degree() as f64);
    q_regular_corollary(
        g1,
        g2,
        QRegularCorollary {
            shift: m1f,
            cubic_a: 2.0 + 2.0 * r2 + r1 + m1f + n2f,
            cubic_b: r1 * n2f + 2.0 * m1f + r1 * m1f + 4.0 * r2 + 2.0 * r1 * r2 + 2.0 * r2 * n2f,
            cubic_const: 2.0 * r1 * r2 * n2f,
            g1_quad_constant_base: r1 * n2f + 2.0 * r1,
            cancel_root: 2.0 + n2f,
        },
    )
}

/// Dispatches to the theorem for the requested join and matrix kind.
pub fn join_spectrum(
    kind: JoinKind,
    matrix: MatrixKind,
    g1: &RegularGraph,
    g2: &Graph,
) -> Result<JoinSpectrumResult> {
    match (kind, matrix) {
        (JoinKind::Sv, MatrixKind::Adjacency) => sv_a_spectrum(g1, g2),
        (JoinKind::Sv, MatrixKind::Laplacian) => sv_l_spectrum(g1, g2),
        (JoinKind::Sv, MatrixKind::SignlessLaplacian) => sv_q_spectrum(g1, g2),
        (JoinKind::Se, MatrixKind::Adjacency) => se_a_spectrum(g1, g2),
        (JoinKind::Se, MatrixKind::Laplacian) => se_l_spectrum(g1, g2),
        (JoinKind::Se, MatrixKind::SignlessLaplacian) => se_q_spectrum(g1, g2),
    }
}

#[cfg(test)]
mod tests;
