//! Standard graph generators used as the test corpus.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs at least 1 vertex".into()));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "complete graph needs at least 1 vertex".into(),
        ));
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidParameter(format!(
            "complete bipartite parts must be nonempty, got ({p}, {q})"
        )));
    }
    Graph::new(p + q, (0..p).flat_map(|u| (0..q).map(move |w| (u, p + w))))
}

/// The Petersen graph: outer 5-cycle, inner pentagram, five spokes.
pub fn petersen() -> Result<Graph> {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::new(10, edges)
}

/// Circulant graph: vertex `i` is adjacent to `i +- s` for each offset `s`.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "circulant needs at least 1 vertex".into(),
        ));
    }
    if offsets.is_empty() {
        return Err(Error::InvalidParameter("circulant needs offsets".into()));
    }
    for &s in offsets {
        if s == 0 || s > n / 2 {
            return Err(Error::InvalidParameter(format!(
                "circulant offset {s} out of range 1..={}",
                n / 2
            )));
        }
    }
    let edges = offsets
        .iter()
        .flat_map(|&s| (0..n).map(move |i| (i, (i + s) % n)));
    Graph::new(n, edges)
}

/// Erdos-Renyi `G(n, p)`: each pair is an edge independently with
/// probability `p`, drawn deterministically from `seed` in lexicographic
/// pair order.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "erdos-renyi needs at least 1 vertex".into(),
        ));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability must be in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}
