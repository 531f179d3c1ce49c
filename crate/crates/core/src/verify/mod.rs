//! Independent oracles and the closed-form-vs-oracle comparison harness.
//!
//! The oracles never call into [`crate::closed_form`]: spectra come from
//! direct eigendecomposition of the explicitly built join, spanning trees
//! from an exact integer Laplacian-minor determinant, Kirchhoff indices
//! from the direct Laplacian spectrum, and the pointwise identity checks
//! from LU determinants. The harness runs a full grid over the corpus and
//! both joins and all three matrices, plus spanning-tree and Kirchhoff
//! grids, and reports one structured case per comparison.

mod pointwise;

pub(crate) use pointwise::PointwiseCheck;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::closed_form::{join_spectrum, se_kirchhoff, se_spanning_trees, sv_kirchhoff, sv_spanning_trees};
use crate::error::{Error, Result};
use crate::graph::{
    circulant, complete, complete_bipartite, cycle, erdos_renyi, path, petersen, Graph, JoinKind,
    MatrixKind,
};
use crate::linalg::{bareiss_det, inf_norm, sym_eigen, BigIntMatrix, Spectrum};

/// Number of sample points for each pointwise charpoly identity check.
pub const POINTWISE_SAMPLES: usize = 10;

/// Residual tolerances. Spectrum residuals are compared against
/// `spectrum_rel * (1 + inf_norm(M))`; the others are plain relative
/// tolerances.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Tolerances {
    pub spectrum_rel: f64,
    pub pointwise_rel: f64,
    pub trees_rel: f64,
    pub kirchhoff_rel: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            spectrum_rel: 1e-8,
            pointwise_rel: 1e-6,
            trees_rel: 1e-9,
            kirchhoff_rel: 1e-8,
        }
    }
}

impl Tolerances {
    /// Overrides every tolerance with one value (the CLI `--tol` flag).
    pub fn uniform(t: f64) -> Self {
        Tolerances {
            spectrum_rel: t,
            pointwise_rel: t,
            trees_rel: t,
            kirchhoff_rel: t,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Pass,
    Fail,
}

/// One closed-form-vs-oracle comparison.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationCase {
    pub g1: String,
    pub g2: String,
    pub kind: JoinKind,
    /// `a`, `l`, `q` for the spectral theorems; `trees` / `kirchhoff` for
    /// the scalar corollaries.
    pub matrix: String,
    pub residual: f64,
    /// Pointwise charpoly identity residuals (spectral cases only).
    pub points: Vec<f64>,
    pub status: CaseStatus,
}

impl VerificationCase {
    pub fn passed(&self) -> bool {
        self.status == CaseStatus::Pass
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub corpus: String,
    pub seed: u64,
    pub tolerances: Tolerances,
    pub cases: Vec<VerificationCase>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn from_cases(
        corpus: String,
        seed: u64,
        tolerances: Tolerances,
        cases: Vec<VerificationCase>,
    ) -> Self {
        let passed = cases.iter().filter(|c| c.passed()).count();
        let summary = Summary {
            total: cases.len(),
            passed,
            failed: cases.len() - passed,
        };
        VerificationReport {
            corpus,
            seed,
            tolerances,
            cases,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// One row per case.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("g1,g2,kind,matrix,residual,max_point_residual,status\n");
        for c in &self.cases {
            let max_point = c.points.iter().copied().fold(0.0f64, f64::max);
            out.push_str(&format!(
                "{},{},{},{},{:e},{:e},{}\n",
                c.g1,
                c.g2,
                c.kind,
                c.matrix,
                c.residual,
                max_point,
                match c.status {
                    CaseStatus::Pass => "pass",
                    CaseStatus::Fail => "fail",
                }
            ));
        }
        out
    }
}

/// Direct eigendecomposition of the requested matrix of `g`.
pub fn direct_spectrum(g: &Graph, kind: MatrixKind) -> Result<Spectrum> {
    sym_eigen(&kind.of(g))
}

/// Exact spanning-tree count via a Laplacian-minor determinant over the
/// integers; 0 for disconnected graphs.
pub fn spanning_tree_oracle(g: &Graph) -> BigInt {
    if g.n() == 0 || !g.is_connected() {
        return BigInt::zero();
    }
    if g.n() == 1 {
        return BigInt::one();
    }
    let l = g.laplacian_int();
    let minor = BigIntMatrix::from_fn(g.n() - 1, |i, j| l[(i + 1, j + 1)]);
    bareiss_det(&minor)
}

/// Kirchhoff index `n * sum_{i>=2} 1/mu_i` from the direct L-spectrum.
pub fn kirchhoff_oracle(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() <= 1 {
        return Ok(0.0);
    }
    let s = sym_eigen(&g.laplacian())?;
    Ok(g.n() as f64 * s.values()[1..].iter().map(|mu| 1.0 / mu).sum::<f64>())
}

/// SplitMix64; gives every case its own independent sample-point stream
/// derived from the suite seed.
pub(crate) fn derive_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[allow(clippy::too_many_arguments)]
/// Runs one spectral theorem check: closed-form spectrum against the direct
/// eigendecomposition of the explicit join, plus the pointwise charpoly
/// identity at seeded sample points.
pub fn verify_join_theorem(
    g1_id: &str,
    g1: &Graph,
    g2_id: &str,
    g2: &Graph,
    kind: JoinKind,
    matrix: MatrixKind,
    tolerances: &Tolerances,
    seed: u64,
) -> Result<VerificationCase> {
    let regular = g1.as_regular()?;
    let (join, _) = kind.build(g1, g2)?;
    let m = matrix.of(&join);
    let norm = inf_norm(&m);
    let direct = sym_eigen(&m)?;
    let closed = join_spectrum(kind, matrix, &regular, g2)?;
    let residual = closed
        .spectrum
        .max_residual(&direct)
        .unwrap_or(f64::INFINITY);
    let points =
        PointwiseCheck::new(&regular, g2, kind, matrix, m, &direct)?.residuals(POINTWISE_SAMPLES, seed)?;
    Ok(case_from_residuals(
        g1_id, g2_id, kind, matrix, norm, residual, points, tolerances,
    ))
}

/// Assembles a spectral case from precomputed residuals; the corrupted-
/// closed-form harness self-test injects values here.
#[allow(clippy::too_many_arguments)]
pub fn case_from_residuals(
    g1_id: &str,
    g2_id: &str,
    kind: JoinKind,
    matrix: MatrixKind,
    matrix_norm: f64,
    residual: f64,
    points: Vec<f64>,
    tolerances: &Tolerances,
) -> VerificationCase {
    let ok = residual <= tolerances.spectrum_rel * (1.0 + matrix_norm)
        && points.iter().all(|p| *p <= tolerances.pointwise_rel);
    VerificationCase {
        g1: g1_id.to_string(),
        g2: g2_id.to_string(),
        kind,
        matrix: matrix.to_string(),
        residual,
        points,
        status: if ok { CaseStatus::Pass } else { CaseStatus::Fail },
    }
}

/// The verification corpus: named regular graphs for the `G1` slot and
/// named arbitrary graphs for the `G2` slot.
pub struct Corpus {
    pub description: String,
    pub g1: Vec<(String, Graph)>,
    pub g2: Vec<(String, Graph)>,
}

impl Corpus {
    /// 11 regular x 9 arbitrary graphs, covering `m1 > n1`, `m1 = n1`,
    /// `m1 < n1`, regular and irregular `G2`, bipartite and disconnected
    /// members. The Erdos-Renyi member is derived from `seed`.
    pub fn default_corpus(seed: u64) -> Corpus {
        let g1 = vec![
            ("K1".to_string(), Graph::empty(1)),
            ("K2".to_string(), complete(2).expect("valid")),
            ("C3".to_string(), cycle(3).expect("valid")),
            ("C4".to_string(), cycle(4).expect("valid")),
            ("C5".to_string(), cycle(5).expect("valid")),
            ("C6".to_string(), cycle(6).expect("valid")),
            ("K4".to_string(), complete(4).expect("valid")),
            ("K5".to_string(), complete(5).expect("valid")),
            ("K3,3".to_string(), complete_bipartite(3, 3).expect("valid")),
            ("petersen".to_string(), petersen().expect("valid")),
            ("circ8(1;2)".to_string(), circulant(8, &[1, 2]).expect("valid")),
        ];
        let er_seed = derive_seed(seed, 0xe2d0_5e2d);
        let g2 = vec![
            ("K1".to_string(), Graph::empty(1)),
            ("K2".to_string(), complete(2).expect("valid")),
            ("P3".to_string(), path(3).expect("valid")),
            ("P4".to_string(), path(4).expect("valid")),
            ("K1,3".to_string(), complete_bipartite(1, 3).expect("valid")),
            ("C4".to_string(), cycle(4).expect("valid")),
            ("K2,3".to_string(), complete_bipartite(2, 3).expect("valid")),
            ("C5".to_string(), cycle(5).expect("valid")),
            (
                "ER(6,0.5)".to_string(),
                erdos_renyi(6, 0.5, er_seed).expect("valid"),
            ),
        ];
        Corpus {
            description: format!(
                "default corpus: {} regular G1 x {} arbitrary G2",
                g1.len(),
                g2.len()
            ),
            g1,
            g2,
        }
    }

    pub fn empty() -> Corpus {
        Corpus {
            description: "empty corpus".to_string(),
            g1: Vec::new(),
            g2: Vec::new(),
        }
    }
}

/// Maps `f` over `items`, on the rayon pool when the `parallel` feature is
/// enabled and `parallel` is true. Output order always matches input order,
/// so parallelism never changes a report.
pub(crate) fn map_indexed<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if parallel {
            use rayon::prelude::*;
            return items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect();
        }
    }
    let _ = parallel;
    items.iter().enumerate().map(|(i, t)| f(i, t)).collect()
}

enum CaseSpec {
    Spectral {
        i1: usize,
        i2: usize,
        kind: JoinKind,
        matrix: MatrixKind,
    },
    Trees {
        i1: usize,
        i2: usize,
        kind: JoinKind,
    },
    Kirchhoff {
        i1: usize,
        i2: usize,
        kind: JoinKind,
    },
}

fn run_case(corpus: &Corpus, spec: &CaseSpec, tolerances: &Tolerances, case_seed: u64) -> VerificationCase {
    let fail = |g1: &str, g2: &str, kind: JoinKind, matrix: String| VerificationCase {
        g1: g1.to_string(),
        g2: g2.to_string(),
        kind,
        matrix,
        residual: f64::MAX,
        points: Vec::new(),
        status: CaseStatus::Fail,
    };
    match *spec {
        CaseSpec::Spectral { i1, i2, kind, matrix } => {
            let (id1, g1) = &corpus.g1[i1];
            let (id2, g2) = &corpus.g2[i2];
            verify_join_theorem(id1, g1, id2, g2, kind, matrix, tolerances, case_seed)
                .unwrap_or_else(|_| fail(id1, id2, kind, matrix.to_string()))
        }
        CaseSpec::Trees { i1, i2, kind } => {
            let (id1, g1) = &corpus.g1[i1];
            let (id2, g2) = &corpus.g2[i2];
            trees_case(id1, g1, id2, g2, kind, tolerances)
                .unwrap_or_else(|_| fail(id1, id2, kind, "trees".into()))
        }
        CaseSpec::Kirchhoff { i1, i2, kind } => {
            let (id1, g1) = &corpus.g1[i1];
            let (id2, g2) = &corpus.g2[i2];
            kirchhoff_case(id1, g1, id2, g2, kind, tolerances)
                .unwrap_or_else(|_| fail(id1, id2, kind, "kirchhoff".into()))
        }
    }
}

fn trees_case(
    g1_id: &str,
    g1: &Graph,
    g2_id: &str,
    g2: &Graph,
    kind: JoinKind,
    tolerances: &Tolerances,
) -> Result<VerificationCase> {
    let regular = g1.as_regular()?;
    let closed = match kind {
        JoinKind::Sv => sv_spanning_trees(&regular, g2)?,
        JoinKind::Se => se_spanning_trees(&regular, g2)?,
    };
    let (join, _) = kind.build(g1, g2)?;
    let oracle = spanning_tree_oracle(&join);
    let oracle_f = oracle.to_f64().unwrap_or(f64::INFINITY);
    let residual = (closed.value - oracle_f).abs() / oracle_f.max(1.0);
    let exact_match = closed.exact.as_ref() == Some(&oracle);
    let ok = exact_match && residual <= tolerances.trees_rel;
    Ok(VerificationCase {
        g1: g1_id.to_string(),
        g2: g2_id.to_string(),
        kind,
        matrix: "trees".into(),
        residual,
        points: Vec::new(),
        status: if ok { CaseStatus::Pass } else { CaseStatus::Fail },
    })
}

fn kirchhoff_case(
    g1_id: &str,
    g1: &Graph,
    g2_id: &str,
    g2: &Graph,
    kind: JoinKind,
    tolerances: &Tolerances,
) -> Result<VerificationCase> {
    let regular = g1.as_regular()?;
    let closed = match kind {
        JoinKind::Sv => sv_kirchhoff(&regular, g2)?,
        JoinKind::Se => se_kirchhoff(&regular, g2)?,
    };
    let (join, _) = kind.build(g1, g2)?;
    let oracle = kirchhoff_oracle(&join)?;
    let residual = (closed.value - oracle).abs() / oracle.abs();
    Ok(VerificationCase {
        g1: g1_id.to_string(),
        g2: g2_id.to_string(),
        kind,
        matrix: "kirchhoff".into(),
        residual,
        points: Vec::new(),
        status: if residual <= tolerances.kirchhoff_rel {
            CaseStatus::Pass
        } else {
            CaseStatus::Fail
        },
    })
}

fn suite_specs(corpus: &Corpus) -> Vec<CaseSpec> {
    let mut specs = Vec::new();
    for kind in [JoinKind::Sv, JoinKind::Se] {
        for matrix in MatrixKind::ALL {
            for i1 in 0..corpus.g1.len() {
                for i2 in 0..corpus.g2.len() {
                    specs.push(CaseSpec::Spectral { i1, i2, kind, matrix });
                }
            }
        }
    }
    for kind in [JoinKind::Sv, JoinKind::Se] {
        for i1 in 0..corpus.g1.len() {
            for i2 in 0..corpus.g2.len() {
                specs.push(CaseSpec::Trees { i1, i2, kind });
            }
        }
    }
    for kind in [JoinKind::Sv, JoinKind::Se] {
        for i1 in 0..corpus.g1.len() {
            for i2 in 0..corpus.g2.len() {
                // the edge-side join of K1 is disconnected: Kirchhoff undefined
                let disconnected =
                    kind == JoinKind::Se && corpus.g1[i1].1.degrees().iter().all(|&d| d == 0);
                if !disconnected {
                    specs.push(CaseSpec::Kirchhoff { i1, i2, kind });
                }
            }
        }
    }
    specs
}

fn run_suite_impl(
    corpus: &Corpus,
    seed: u64,
    tolerances: &Tolerances,
    parallel: bool,
) -> VerificationReport {
    let specs = suite_specs(corpus);
    let cases = map_indexed(&specs, parallel, |i, spec| {
        run_case(corpus, spec, tolerances, derive_seed(seed, i as u64))
    });
    VerificationReport::from_cases(corpus.description.clone(), seed, *tolerances, cases)
}

/// Runs the whole grid: `{sv, se} x {a, l, q} x corpus` spectral checks
/// plus the spanning-tree and Kirchhoff grids. Deterministic in
/// `(corpus, seed)`; parallel when the `parallel` feature is on.
pub fn run_suite(corpus: &Corpus, seed: u64, tolerances: &Tolerances) -> VerificationReport {
    run_suite_impl(corpus, seed, tolerances, true)
}

/// Sequential twin of [`run_suite`]; output is byte-identical.
pub fn run_suite_sequential(
    corpus: &Corpus,
    seed: u64,
    tolerances: &Tolerances,
) -> VerificationReport {
    run_suite_impl(corpus, seed, tolerances, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direct_spectra_known_values() {
        let s = direct_spectrum(&complete(2).unwrap(), MatrixKind::Laplacian).unwrap();
        assert!((s.values()[0]).abs() < 1e-12 && (s.values()[1] - 2.0).abs() < 1e-12);
        let s = direct_spectrum(&cycle(4).unwrap(), MatrixKind::Adjacency).unwrap();
        assert!((s.values()[0] + 2.0).abs() < 1e-9);
        let s = direct_spectrum(&petersen().unwrap(), MatrixKind::Adjacency).unwrap();
        assert_eq!(s.multiplicity_of(1.0), 5);
        assert_eq!(s.multiplicity_of(-2.0), 4);
    }

    #[test]
    fn spanning_tree_oracle_known_counts() {
        assert_eq!(spanning_tree_oracle(&cycle(3).unwrap()), BigInt::from(3));
        assert_eq!(spanning_tree_oracle(&complete(4).unwrap()), BigInt::from(16));
        let (join, _) = crate::graph::sv_join(&cycle(3).unwrap(), &Graph::empty(1)).unwrap();
        assert_eq!(spanning_tree_oracle(&join), BigInt::from(50));
    }

    #[test]
    fn spanning_tree_oracle_matches_eigenvalue_product() {
        // cross-validates the two oracle routes
        for g in [
            cycle(5).unwrap(),
            complete(5).unwrap(),
            petersen().unwrap(),
            complete_bipartite(2, 3).unwrap(),
        ] {
            let exact = spanning_tree_oracle(&g).to_f64().unwrap();
            let s = sym_eigen(&g.laplacian()).unwrap();
            let via_product: f64 =
                s.values()[1..].iter().product::<f64>() / g.n() as f64;
            assert!(
                (exact - via_product).abs() / exact.max(1.0) <= 1e-6,
                "{exact} vs {via_product}"
            );
        }
    }

    #[test]
    fn kirchhoff_oracle_known_values() {
        assert!((kirchhoff_oracle(&complete(2).unwrap()).unwrap() - 1.0).abs() < 1e-12);
        assert!((kirchhoff_oracle(&cycle(3).unwrap()).unwrap() - 2.0).abs() < 1e-10);
        let (join, _) = crate::graph::sv_join(&cycle(3).unwrap(), &Graph::empty(1)).unwrap();
        assert!((kirchhoff_oracle(&join).unwrap() - 18.0).abs() < 1e-9);
    }

    #[test]
    fn kirchhoff_oracle_rejects_disconnected() {
        let g = cycle(3).unwrap().disjoint_union(&Graph::empty(1));
        assert!(matches!(kirchhoff_oracle(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn verify_join_theorem_passes_for_known_pair() {
        let tol = Tolerances::default();
        let case = verify_join_theorem(
            "C3",
            &cycle(3).unwrap(),
            "K1",
            &Graph::empty(1),
            JoinKind::Sv,
            MatrixKind::Laplacian,
            &tol,
            42,
        )
        .unwrap();
        assert!(case.passed());
        assert!(case.residual <= 1e-8 * 20.0);
        assert_eq!(case.points.len(), POINTWISE_SAMPLES);
    }

    #[test]
    fn verify_join_theorem_surfaces_non_regular() {
        let tol = Tolerances::default();
        let err = verify_join_theorem(
            "K1,3",
            &complete_bipartite(1, 3).unwrap(),
            "K1",
            &Graph::empty(1),
            JoinKind::Sv,
            MatrixKind::Adjacency,
            &tol,
            42,
        );
        assert!(matches!(err, Err(Error::NonRegular { .. })));
    }

    #[test]
    fn corrupted_closed_form_is_recorded_as_failure() {
        let tol = Tolerances::default();
        // harness self-test: inject a corrupted residual
        let case = case_from_residuals(
            "C3",
            "K1",
            JoinKind::Sv,
            MatrixKind::Adjacency,
            10.0,
            0.5,
            vec![0.0; POINTWISE_SAMPLES],
            &tol,
        );
        assert!(!case.passed());
        let case = case_from_residuals(
            "C3",
            "K1",
            JoinKind::Sv,
            MatrixKind::Adjacency,
            10.0,
            0.0,
            vec![1.0; POINTWISE_SAMPLES],
            &tol,
        );
        assert!(!case.passed());
    }

    #[test]
    fn empty_corpus_gives_empty_report() {
        let report = run_suite(&Corpus::empty(), 42, &Tolerances::default());
        assert_eq!(report.summary.total, 0);
        assert_eq!(report.summary.failed, 0);
        assert!(report.all_passed());
    }

    #[test]
    fn mini_suite_passes_and_is_deterministic() {
        let corpus = Corpus {
            description: "mini".into(),
            g1: vec![
                ("C3".into(), cycle(3).unwrap()),
                ("K2".into(), complete(2).unwrap()),
            ],
            g2: vec![
                ("K1".into(), Graph::empty(1)),
                ("P3".into(), path(3).unwrap()),
            ],
        };
        let tol = Tolerances::default();
        let a = run_suite(&corpus, 42, &tol);
        assert!(a.all_passed(), "failures: {:#?}", a.cases.iter().filter(|c| !c.passed()).collect::<Vec<_>>());
        let b = run_suite(&corpus, 42, &tol);
        assert_eq!(a.to_json_string(), b.to_json_string());
        let c = run_suite_sequential(&corpus, 42, &tol);
        assert_eq!(a.to_json_string(), c.to_json_string());
    }

    #[test]
    fn unreachable_tolerance_fails() {
        let corpus = Corpus {
            description: "mini".into(),
            g1: vec![("C3".into(), cycle(3).unwrap())],
            g2: vec![("K1".into(), Graph::empty(1))],
        };
        let report = run_suite(&corpus, 42, &Tolerances::uniform(1e-30));
        assert!(!report.all_passed());
    }
}
