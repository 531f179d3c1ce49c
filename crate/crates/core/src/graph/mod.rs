//! Undirected simple labeled graphs and the subdivision-join constructions.
//!
//! A [`Graph`] is stored as a sorted edge set plus an adjacency bitset;
//! dense matrices are materialized on demand. Everything here is immutable
//! after construction and safe to share across threads.

mod generators;
mod io;

pub use generators::{circulant, complete, complete_bipartite, cycle, erdos_renyi, path, petersen};

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Row-major adjacency bit matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
struct AdjBits {
    stride: usize,
    words: Vec<u64>,
}

impl AdjBits {
    fn new(n: usize) -> Self {
        let stride = n.div_ceil(64);
        AdjBits {
            stride,
            words: vec![0; stride * n],
        }
    }

    fn set(&mut self, u: usize, v: usize) {
        self.words[u * self.stride + v / 64] |= 1 << (v % 64);
        self.words[v * self.stride + u / 64] |= 1 << (u % 64);
    }

    fn get(&self, u: usize, v: usize) -> bool {
        self.words[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }
}

/// Wire form of a graph: `{"n": ..., "edges": [[u, v], ...]}`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// An undirected simple graph on vertices `0..n`.
///
/// Edges are kept sorted lexicographically with `u < v`; this ordering is
/// load-bearing: it fixes the index of every inserted vertex in
/// [`Graph::subdivision`] and every column of [`Graph::incidence_matrix`],
/// so all derived matrices are reproducible bit-for-bit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
    bits: AdjBits,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;
    fn try_from(j: GraphJson) -> Result<Self> {
        Graph::new(j.n, j.edges)
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges,
        }
    }
}

impl Graph {
    /// Builds a graph from an edge list. Endpoint order within an edge does
    /// not matter and duplicates collapse (set semantics); self-loops and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) out of range for n = {n}"
                )));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        normalized.dedup();

        let mut degrees = vec![0; n];
        let mut bits = AdjBits::new(n);
        for &(u, v) in &normalized {
            degrees[u] += 1;
            degrees[v] += 1;
            bits.set(u, v);
        }
        Ok(Graph {
            n,
            edges: normalized,
            degrees,
            bits,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, std::iter::empty()).expect("empty graph is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in the canonical lexicographic order, `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.bits.get(u, v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| u != v && self.bits.get(v, u))
    }

    /// Certifies regularity, yielding the common degree.
    pub fn as_regular(&self) -> Result<RegularGraph> {
        let min = self.degrees.iter().copied().min().unwrap_or(0);
        let max = self.degrees.iter().copied().max().unwrap_or(0);
        if min != max {
            return Err(Error::NonRegular { min, max });
        }
        Ok(RegularGraph {
            graph: self.clone(),
            degree: max,
        })
    }

    /// Number of connected components (0 for the empty vertex set).
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).expect("union of valid graphs is valid")
    }

    // --- matrices -----------------------------------------------------

    pub fn adjacency(&self) -> DMatrix<f64> {
        let mut a = DMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            a[(u, v)] = 1.0;
            a[(v, u)] = 1.0;
        }
        a
    }

    pub fn adjacency_int(&self) -> DMatrix<i64> {
        let mut a = DMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            a[(u, v)] = 1;
            a[(v, u)] = 1;
        }
        a
    }

    pub fn degree_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| {
            if i == j {
                self.degrees[i] as f64
            } else {
                0.0
            }
        })
    }

    /// Laplacian `L = D - A`.
    pub fn laplacian(&self) -> DMatrix<f64> {
        self.degree_matrix() - self.adjacency()
    }

    pub fn laplacian_int(&self) -> DMatrix<i64> {
        let mut l = DMatrix::zeros(self.n, self.n);
        for v in 0..self.n {
            l[(v, v)] = self.degrees[v] as i64;
        }
        for &(u, v) in &self.edges {
            l[(u, v)] = -1;
            l[(v, u)] = -1;
        }
        l
    }

    /// Signless Laplacian `Q = D + A`.
    pub fn signless_laplacian(&self) -> DMatrix<f64> {
        self.degree_matrix() + self.adjacency()
    }

    /// Vertex-edge incidence matrix (`n x m`), columns in edge order.
    pub fn incidence_matrix(&self) -> DMatrix<f64> {
        let mut r = DMatrix::zeros(self.n, self.m());
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            r[(u, j)] = 1.0;
            r[(v, j)] = 1.0;
        }
        r
    }

    pub fn incidence_int(&self) -> DMatrix<i64> {
        let mut r = DMatrix::zeros(self.n, self.m());
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            r[(u, j)] = 1;
            r[(v, j)] = 1;
        }
        r
    }

    // --- derived graphs -----------------------------------------------

    /// Subdivision graph: a new vertex is inserted into every edge. The
    /// vertex inserted into edge `j` (lexicographic order) has index `n + j`.
    pub fn subdivision(&self) -> Graph {
        let n = self.n;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .flat_map(|(j, &(u, v))| [(u, n + j), (v, n + j)]);
        Graph::new(n + self.m(), edges).expect("subdivision of a valid graph is valid")
    }

    /// Line graph: vertex `j` is edge `j` of `self`; two vertices are
    /// adjacent when the corresponding edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let m = self.m();
        let mut edges = Vec::new();
        for j in 0..m {
            let (a, b) = self.edges[j];
            for k in j + 1..m {
                let (c, d) = self.edges[k];
                if a == c || a == d || b == c || b == d {
                    edges.push((j, k));
                }
            }
        }
        Graph::new(m, edges).expect("line graph of a valid graph is valid")
    }
}

/// A graph together with a certificate that every vertex has the same degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularGraph {
    graph: Graph,
    degree: usize,
}

impl RegularGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The common degree `r`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }
}

impl TryFrom<Graph> for RegularGraph {
    type Error = Error;
    fn try_from(g: Graph) -> Result<Self> {
        g.as_regular()
    }
}

/// Which of the two subdivision joins to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JoinKind {
    /// Join every vertex of `V(G1)` with every vertex of `V(G2)`.
    Sv,
    /// Join every inserted vertex of `I(G1)` with every vertex of `V(G2)`.
    Se,
}

impl JoinKind {
    pub fn build(&self, g1: &Graph, g2: &Graph) -> Result<(Graph, JoinLayout)> {
        match self {
            JoinKind::Sv => sv_join(g1, g2),
            JoinKind::Se => se_join(g1, g2),
        }
    }
}

impl std::fmt::Display for JoinKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            JoinKind::Sv => "sv",
            JoinKind::Se => "se",
        })
    }
}

/// Which graph matrix a spectral routine refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    #[serde(rename = "a")]
    Adjacency,
    #[serde(rename = "l")]
    Laplacian,
    #[serde(rename = "q")]
    SignlessLaplacian,
}

impl MatrixKind {
    pub fn of(&self, g: &Graph) -> DMatrix<f64> {
        match self {
            MatrixKind::Adjacency => g.adjacency(),
            MatrixKind::Laplacian => g.laplacian(),
            MatrixKind::SignlessLaplacian => g.signless_laplacian(),
        }
    }

    pub const ALL: [MatrixKind; 3] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
    ];
}

impl std::fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MatrixKind::Adjacency => "a",
            MatrixKind::Laplacian => "l",
            MatrixKind::SignlessLaplacian => "q",
        })
    }
}

/// Vertex-index layout of a join: original `G1` vertices first, then the
/// inserted vertices `I(G1)` in edge order, then `G2`'s vertices. This
/// mirrors the block structure of the joins' partitioned matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinLayout {
    pub kind: JoinKind,
    pub n1: usize,
    pub m1: usize,
    pub n2: usize,
}

impl JoinLayout {
    pub fn total(&self) -> usize {
        self.n1 + self.m1 + self.n2
    }

    pub fn g1_vertex(&self, i: usize) -> usize {
        debug_assert!(i < self.n1);
        i
    }

    pub fn inserted_vertex(&self, j: usize) -> usize {
        debug_assert!(j < self.m1);
        self.n1 + j
    }

    pub fn g2_vertex(&self, k: usize) -> usize {
        debug_assert!(k < self.n2);
        self.n1 + self.m1 + k
    }
}

fn join_parts(g1: &Graph, g2: &Graph, kind: JoinKind) -> Result<(Vec<(usize, usize)>, JoinLayout)> {
    if g1.n() == 0 || g2.n() == 0 {
        return Err(Error::InvalidParameter(
            "joins require at least one vertex on each side".into(),
        ));
    }
    let layout = JoinLayout {
        kind,
        n1: g1.n(),
        m1: g1.m(),
        n2: g2.n(),
    };
    let mut edges = Vec::new();
    // subdivision of G1
    for (j, &(u, v)) in g1.edges().iter().enumerate() {
        edges.push((u, layout.inserted_vertex(j)));
        edges.push((v, layout.inserted_vertex(j)));
    }
    // G2 internal edges
    for &(u, v) in g2.edges() {
        edges.push((layout.g2_vertex(u), layout.g2_vertex(v)));
    }
    Ok((edges, layout))
}

/// Subdivision-vertex join: `S(G1)` and `G2` plus all edges between
/// `V(G1)` and `V(G2)`.
pub fn sv_join(g1: &Graph, g2: &Graph) -> Result<(Graph, JoinLayout)> {
    let (mut edges, layout) = join_parts(g1, g2, JoinKind::Sv)?;
    for i in 0..layout.n1 {
        for k in 0..layout.n2 {
            edges.push((layout.g1_vertex(i), layout.g2_vertex(k)));
        }
    }
    Ok((Graph::new(layout.total(), edges)?, layout))
}

/// Subdivision-edge join: `S(G1)` and `G2` plus all edges between
/// `I(G1)` and `V(G2)`.
pub fn se_join(g1: &Graph, g2: &Graph) -> Result<(Graph, JoinLayout)> {
    let (mut edges, layout) = join_parts(g1, g2, JoinKind::Se)?;
    for j in 0..layout.m1 {
        for k in 0..layout.n2 {
            edges.push((layout.inserted_vertex(j), layout.g2_vertex(k)));
        }
    }
    Ok((Graph::new(layout.total(), edges)?, layout))
}
