//! Graph serialization: canonical JSON and a plain-text edge-list format.
//!
//! JSON: `{"n": 5, "edges": [[0,1],[1,2]]}` with 0-based indices.
//! Text: vertex count on the first line, one `u v` pair per line.
//! Output is canonical (edges sorted, compact JSON) so byte-level
//! round-trip comparisons are meaningful.

use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    /// Canonical compact JSON: sorted edges, no whitespace variance.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Graph> {
        serde_json::from_str(s).map_err(|e| Error::InvalidGraph(e.to_string()))
    }

    /// Parses the plain-text edge-list format.
    pub fn from_text_str(s: &str) -> Result<Graph> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::InvalidGraph("empty edge-list input".into()))?
            .parse()
            .map_err(|e| Error::InvalidGraph(format!("bad vertex count: {e}")))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut parts = line.split_whitespace();
            let u: usize = parts
                .next()
                .ok_or_else(|| Error::InvalidGraph(format!("bad edge line: {line:?}")))?
                .parse()
                .map_err(|e| Error::InvalidGraph(format!("bad endpoint in {line:?}: {e}")))?;
            let v: usize = parts
                .next()
                .ok_or_else(|| Error::InvalidGraph(format!("bad edge line: {line:?}")))?
                .parse()
                .map_err(|e| Error::InvalidGraph(format!("bad endpoint in {line:?}: {e}")))?;
            if parts.next().is_some() {
                return Err(Error::InvalidGraph(format!(
                    "trailing tokens on edge line: {line:?}"
                )));
            }
            edges.push((u, v));
        }
        Graph::new(n, edges)
    }

    /// Parses either format, sniffing JSON by its leading `{`.
    pub fn parse(s: &str) -> Result<Graph> {
        if s.trim_start().starts_with('{') {
            Graph::from_json_str(s)
        } else {
            Graph::from_text_str(s)
        }
    }
}
