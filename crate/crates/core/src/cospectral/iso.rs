//! Exact graph isomorphism for desk-scale graphs: iterated neighborhood
//! color refinement followed by a most-constrained-first backtracking
//! search. Bounded to 64 vertices; cospectral certification never needs
//! more.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_VERTICES: usize = 64;

/// Stable color classes from iterated refinement: a vertex's next color is
/// its current color plus the sorted multiset of neighbor colors.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = g.degrees().to_vec();
    loop {
        let mut signatures: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut neigh: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
            neigh.sort_unstable();
            signatures.push((colors[v], neigh));
        }
        let mut palette: HashMap<&(usize, Vec<usize>), usize> = HashMap::new();
        let mut sorted: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
        sorted.sort();
        sorted.dedup();
        for (i, sig) in sorted.into_iter().enumerate() {
            palette.insert(sig, i);
        }
        let next: Vec<usize> = signatures.iter().map(|s| palette[s]).collect();
        if next == colors {
            return colors;
        }
        colors = next;
    }
}

fn color_histogram(colors: &[usize]) -> Vec<(usize, usize)> {
    let mut hist: HashMap<usize, usize> = HashMap::new();
    for &c in colors {
        *hist.entry(c).or_insert(0) += 1;
    }
    let mut out: Vec<(usize, usize)> = hist.into_iter().collect();
    out.sort_unstable();
    out
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    c1: Vec<usize>,
    c2: Vec<usize>,
    mapping: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    /// Candidate images for `v`: same color, unused, adjacency-consistent
    /// with everything mapped so far.
    fn candidates(&self, v: usize) -> Vec<usize> {
        (0..self.g2.n())
            .filter(|&w| {
                !self.used[w]
                    && self.c2[w] == self.c1[v]
                    && (0..self.g1.n()).all(|u| match self.mapping[u] {
                        Some(img) => self.g1.has_edge(v, u) == self.g2.has_edge(w, img),
                        None => true,
                    })
            })
            .collect()
    }

    fn solve(&mut self, remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        // most-constrained vertex first; forced assignments propagate
        let mut best: Option<(usize, Vec<usize>)> = None;
        for v in 0..self.g1.n() {
            if self.mapping[v].is_some() {
                continue;
            }
            let cands = self.candidates(v);
            if cands.is_empty() {
                return false;
            }
            if best.as_ref().is_none_or(|(_, b)| cands.len() < b.len()) {
                let single = cands.len() == 1;
                best = Some((v, cands));
                if single {
                    break;
                }
            }
        }
        let (v, cands) = best.expect("remaining > 0 means an unmapped vertex exists");
        for w in cands {
            self.mapping[v] = Some(w);
            self.used[w] = true;
            if self.solve(remaining - 1) {
                return true;
            }
            self.mapping[v] = None;
            self.used[w] = false;
        }
        false
    }
}

/// Exact isomorphism test.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    let n = g1.n().max(g2.n());
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            limit: MAX_VERTICES,
        });
    }
    if g1.n() != g2.n() || g1.m() != g2.m() {
        return Ok(false);
    }
    if g1.n() == 0 {
        return Ok(true);
    }
    let c1 = refine_colors(g1);
    let c2 = refine_colors(g2);
    if color_histogram(&c1) != color_histogram(&c2) {
        return Ok(false);
    }
    let mut search = Search {
        g1,
        g2,
        c1,
        c2,
        mapping: vec![None; g1.n()],
        used: vec![false; g2.n()],
    };
    Ok(search.solve(g1.n()))
}
