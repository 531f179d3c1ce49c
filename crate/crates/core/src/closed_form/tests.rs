use super::*;
use crate::graph::{
    complete, complete_bipartite, cycle, path, petersen, se_join, sv_join, Graph,
};
use crate::linalg::inf_norm;

fn reg(g: Graph) -> RegularGraph {
    g.as_regular().unwrap()
}

fn k1() -> Graph {
    Graph::empty(1)
}

/// Direct eigendecomposition of the explicitly constructed join.
fn direct(kind: JoinKind, matrix: MatrixKind, g1: &Graph, g2: &Graph) -> (Spectrum, f64) {
    let (join, _) = kind.build(g1, g2).unwrap();
    let m = matrix.of(&join);
    (sym_eigen(&m).unwrap(), inf_norm(&m))
}

fn assert_matches_direct(kind: JoinKind, matrix: MatrixKind, g1: &Graph, g2: &Graph) {
    let (oracle, norm) = direct(kind, matrix, g1, g2);
    let closed = join_spectrum(kind, matrix, &reg(g1.clone()), g2).unwrap();
    let residual = closed
        .spectrum
        .max_residual(&oracle)
        .expect("cardinalities must agree");
    assert!(
        residual <= 1e-8 * (1.0 + norm),
        "{kind}/{matrix}: residual {residual}"
    );
}

fn assert_multisets_close(a: &Spectrum, b: &Spectrum, tol: f64) {
    let r = a.max_residual(b).expect("cardinalities must agree");
    assert!(r <= tol, "residual {r}");
}

#[test]
fn sv_a_c4_k1_explicit_values() {
    let r = sv_a_spectrum(&reg(cycle(4).unwrap()), &k1()).unwrap();
    let s2 = 2.0f64.sqrt();
    let expected = [-2.0 * s2, -s2, -s2, 0.0, 0.0, 0.0, s2, s2, 2.0 * s2];
    assert_eq!(r.spectrum.len(), 9);
    for (got, want) in r.spectrum.values().iter().zip(expected) {
        assert!((got - want).abs() < 1e-9, "{got} vs {want}");
    }
    assert_matches_direct(JoinKind::Sv, MatrixKind::Adjacency, &cycle(4).unwrap(), &k1());
}

#[test]
fn sv_a_k2_k1_exercises_cancellation() {
    // m1 < n1: one x factor cancels; the join is C4
    assert_matches_direct(JoinKind::Sv, MatrixKind::Adjacency, &complete(2).unwrap(), &k1());
}

#[test]
fn sv_a_k1_g2_is_cone_join() {
    assert_matches_direct(JoinKind::Sv, MatrixKind::Adjacency, &k1(), &path(4).unwrap());
}

#[test]
fn sv_a_charpoly_matches_factor_product() {
    let r = sv_a_spectrum(&reg(cycle(4).unwrap()), &complete(2).unwrap()).unwrap();
    let mut product = crate::linalg::RealPolynomial::constant(1.0);
    for f in &r.factors {
        for _ in 0..f.multiplicity {
            product = product.mul(&f.poly);
        }
    }
    let scale = r.charpoly.max_abs_coeff();
    for (a, b) in r.charpoly.coeffs().iter().zip(product.coeffs()) {
        assert!((a - b).abs() <= 1e-7 * scale);
    }
    assert_eq!(r.spectrum.len(), 10);
}

#[test]
fn sv_a_regular_corollary_c4_k1_cubic() {
    // cubic x^3 - 8x with roots {0, +-2 sqrt 2}
    let r = sv_a_regular_corollary(&reg(cycle(4).unwrap()), &reg(k1())).unwrap();
    let general = sv_a_spectrum(&reg(cycle(4).unwrap()), &k1()).unwrap();
    assert_multisets_close(&r.spectrum, &general.spectrum, 1e-8);
    let cubic = r
        .factors
        .iter()
        .find(|f| f.label == "cubic factor")
        .unwrap();
    assert_eq!(cubic.poly.coeffs(), &[0.0, -8.0, 0.0, 1.0]);
}

#[test]
fn sv_a_regular_corollary_c3_c3_cubic_coefficients() {
    let c3 = cycle(3).unwrap();
    let r = sv_a_regular_corollary(&reg(c3.clone()), &reg(c3.clone())).unwrap();
    let cubic = r
        .factors
        .iter()
        .find(|f| f.label == "cubic factor")
        .unwrap();
    // x^3 - 2 x^2 - 13 x + 8
    assert_eq!(cubic.poly.coeffs(), &[8.0, -13.0, -2.0, 1.0]);
    assert_matches_direct(JoinKind::Sv, MatrixKind::Adjacency, &c3, &c3);
}

#[test]
fn sv_a_regular_corollary_k2_k2_matches_direct() {
    let k2 = complete(2).unwrap();
    let r = sv_a_regular_corollary(&reg(k2.clone()), &reg(k2.clone())).unwrap();
    let (oracle, norm) = direct(JoinKind::Sv, MatrixKind::Adjacency, &k2, &k2);
    assert_multisets_close(&r.spectrum, &oracle, 1e-8 * (1.0 + norm));
}

#[test]
fn sv_a_kpq_corollary_matches_general() {
    // G = C4, K_{p,q} = K2 = K_{1,1}: quartic x^4 - 13 x^2 - 8 x + 4
    let r = sv_a_kpq_corollary(&reg(cycle(4).unwrap()), 1, 1).unwrap();
    let quartic = r
        .factors
        .iter()
        .find(|f| f.label == "quartic factor")
        .unwrap();
    assert_eq!(quartic.poly.coeffs(), &[4.0, -8.0, -13.0, 0.0, 1.0]);
    let (oracle, norm) = direct(
        JoinKind::Sv,
        MatrixKind::Adjacency,
        &cycle(4).unwrap(),
        &complete(2).unwrap(),
    );
    assert_multisets_close(&r.spectrum, &oracle, 1e-8 * (1.0 + norm));
}

#[test]
fn kpq_corollary_requires_enough_edges() {
    assert!(matches!(
        sv_a_kpq_corollary(&reg(complete(2).unwrap()), 1, 2),
        Err(Error::HypothesisViolated(_))
    ));
}

#[test]
fn sv_l_c3_k1_matches_direct_and_zero_is_simple() {
    let r = sv_l_spectrum(&reg(cycle(3).unwrap()), &k1()).unwrap();
    assert_eq!(r.spectrum.len(), 7);
    assert_eq!(r.spectrum.multiplicity_of(0.0), 1);
    assert_matches_direct(JoinKind::Sv, MatrixKind::Laplacian, &cycle(3).unwrap(), &k1());
}

#[test]
fn sv_l_k2_k1_cancels_one_x_minus_2() {
    // join is C4 with L-spectrum {0, 2, 2, 4}
    let r = sv_l_spectrum(&reg(complete(2).unwrap()), &k1()).unwrap();
    let expected = [0.0, 2.0, 2.0, 4.0];
    for (got, want) in r.spectrum.values().iter().zip(expected) {
        assert!((got - want).abs() < 1e-9);
    }
}

#[test]
fn sv_l_trace_is_twice_edge_count() {
    let g1 = cycle(5).unwrap();
    let g2 = path(4).unwrap();
    let r = sv_l_spectrum(&reg(g1.clone()), &g2).unwrap();
    let (join, _) = sv_join(&g1, &g2).unwrap();
    assert!((r.spectrum.sum() - 2.0 * join.m() as f64).abs() < 1e-8);
}

#[test]
fn sv_q_c3_k1_matches_direct() {
    assert_matches_direct(
        JoinKind::Sv,
        MatrixKind::SignlessLaplacian,
        &cycle(3).unwrap(),
        &k1(),
    );
}

#[test]
fn sv_q_trace_is_degree_sum() {
    let g1 = cycle(3).unwrap();
    let g2 = path(3).unwrap();
    let r = sv_q_spectrum(&reg(g1.clone()), &g2).unwrap();
    let (join, _) = sv_join(&g1, &g2).unwrap();
    let degree_sum: usize = join.degrees().iter().sum();
    assert!((r.spectrum.sum() - degree_sum as f64).abs() < 1e-8);
}

#[test]
fn sv_q_regular_corollary_collapses() {
    let g1 = cycle(4).unwrap();
    let g2 = cycle(3).unwrap();
    let a = sv_q_spectrum(&reg(g1.clone()), &g2).unwrap();
    let b = sv_q_regular_corollary(&reg(g1), &reg(g2)).unwrap();
    assert_multisets_close(&a.spectrum, &b.spectrum, 1e-8);
}

#[test]
fn se_a_c4_k1_coronal_cubic() {
    // m1 = 4: cubic x^3 - (m1 n2 + 2 r1) x = x^3 - 8x
    let r = se_a_regular_corollary(&reg(cycle(4).unwrap()), &reg(k1())).unwrap();
    let cubic = r
        .factors
        .iter()
        .find(|f| f.label == "cubic factor")
        .unwrap();
    assert_eq!(cubic.poly.coeffs(), &[0.0, -8.0, 0.0, 1.0]);
    assert_matches_direct(JoinKind::Se, MatrixKind::Adjacency, &cycle(4).unwrap(), &k1());
}

#[test]
fn se_a_k2_k2_matches_direct() {
    let k2 = complete(2).unwrap();
    assert_matches_direct(JoinKind::Se, MatrixKind::Adjacency, &k2, &k2);
}

#[test]
fn se_a_kpq_corollary_matches_direct() {
    let g = petersen().unwrap();
    let r = se_a_kpq_corollary(&reg(g.clone()), 2, 3).unwrap();
    let (oracle, norm) = direct(
        JoinKind::Se,
        MatrixKind::Adjacency,
        &g,
        &complete_bipartite(2, 3).unwrap(),
    );
    assert_multisets_close(&r.spectrum, &oracle, 1e-8 * (1.0 + norm));
}

#[test]
fn se_l_c3_k1_matches_direct() {
    assert_matches_direct(JoinKind::Se, MatrixKind::Laplacian, &cycle(3).unwrap(), &k1());
}

#[test]
fn se_l_k1_side_join_is_disconnected() {
    // se-join with G1 = K1 is K1 and G2 side by side: 0 has multiplicity 2
    let r = se_l_spectrum(&reg(k1()), &cycle(4).unwrap()).unwrap();
    assert_eq!(r.spectrum.multiplicity_of(0.0), 2);
    assert_matches_direct(JoinKind::Se, MatrixKind::Laplacian, &k1(), &cycle(4).unwrap());
}

#[test]
fn se_l_trace_identity() {
    let g1 = complete(4).unwrap();
    let g2 = complete_bipartite(1, 3).unwrap();
    let r = se_l_spectrum(&reg(g1.clone()), &g2).unwrap();
    let (join, _) = se_join(&g1, &g2).unwrap();
    assert!((r.spectrum.sum() - 2.0 * join.m() as f64).abs() < 1e-8);
}

#[test]
fn se_q_c3_k1_matches_direct() {
    assert_matches_direct(
        JoinKind::Se,
        MatrixKind::SignlessLaplacian,
        &cycle(3).unwrap(),
        &k1(),
    );
}

#[test]
fn se_q_regular_corollary_c3_c3() {
    let c3 = cycle(3).unwrap();
    let r = se_q_regular_corollary(&reg(c3.clone()), &reg(c3.clone())).unwrap();
    let cubic = r
        .factors
        .iter()
        .find(|f| f.label == "cubic factor")
        .unwrap();
    // a = 2 + 2 r2 + r1 + m1 + n2 = 14, b = 6+6+6+8+8+12 = 46, const = 2 r1 r2 n2 = 24
    assert_eq!(cubic.poly.coeffs(), &[-24.0, 46.0, -14.0, 1.0]);
    let general = se_q_spectrum(&reg(c3.clone()), &c3).unwrap();
    assert_multisets_close(&r.spectrum, &general.spectrum, 1e-8);
}

#[test]
fn all_six_theorems_on_a_mixed_pair() {
    // petersen (m1 > n1) with an irregular, bipartite G2
    let g1 = petersen().unwrap();
    let g2 = complete_bipartite(1, 3).unwrap();
    for kind in [JoinKind::Sv, JoinKind::Se] {
        for matrix in MatrixKind::ALL {
            assert_matches_direct(kind, matrix, &g1, &g2);
        }
    }
}

#[test]
fn k2_all_theorems_cancellation_paths() {
    let k2 = complete(2).unwrap();
    let g2 = path(3).unwrap();
    for kind in [JoinKind::Sv, JoinKind::Se] {
        for matrix in MatrixKind::ALL {
            assert_matches_direct(kind, matrix, &k2, &g2);
        }
    }
}

#[test]
fn disconnected_g2_is_accepted() {
    let g2 = cycle(3).unwrap().disjoint_union(&Graph::empty(2));
    for matrix in MatrixKind::ALL {
        assert_matches_direct(JoinKind::Sv, matrix, &cycle(4).unwrap(), &g2);
    }
}

#[test]
fn rejects_empty_g2() {
    assert!(sv_a_spectrum(&reg(cycle(3).unwrap()), &Graph::empty(0)).is_err());
}

#[test]
fn rejects_edgeless_regular_g1_beyond_k1() {
    assert!(sv_l_spectrum(&reg(Graph::empty(3)), &k1()).is_err());
}
