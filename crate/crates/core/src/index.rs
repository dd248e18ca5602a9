//! The Graovac-Ghorbani index: for every edge `uv`, with `n_u` the number of
//! vertices strictly closer to `u` than to `v`, sum
//! `sqrt((n_u + n_v - 2) / (n_u * n_v))`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Distance, Graph};

/// Proximity counts for one edge. `n_u + n_v + equidistant == n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSplit {
    pub u: usize,
    pub v: usize,
    pub n_u: usize,
    pub n_v: usize,
    pub equidistant: usize,
}

impl EdgeSplit {
    fn from_rows(u: usize, v: usize, from_u: &[Distance], from_v: &[Distance]) -> Self {
        let (mut n_u, mut n_v, mut equidistant) = (0, 0, 0);
        for (a, b) in from_u.iter().zip(from_v) {
            match a.hops().cmp(&b.hops()) {
                std::cmp::Ordering::Less => n_u += 1,
                std::cmp::Ordering::Greater => n_v += 1,
                std::cmp::Ordering::Equal => equidistant += 1,
            }
        }
        EdgeSplit { u, v, n_u, n_v, equidistant }
    }

    pub fn swapped(self) -> Self {
        EdgeSplit {
            u: self.v,
            v: self.u,
            n_u: self.n_v,
            n_v: self.n_u,
            equidistant: self.equidistant,
        }
    }

    pub fn contribution(&self) -> f64 {
        edge_contribution(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeTerm {
    #[serde(flatten)]
    pub split: EdgeSplit,
    pub contribution: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexReport {
    pub total: f64,
    pub per_edge: Vec<EdgeTerm>,
}

/// Split of edge `(u, v)` from two breadth-first searches.
pub fn edge_split(g: &Graph, u: usize, v: usize) -> Result<EdgeSplit> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(EdgeSplit::from_rows(u, v, &g.bfs(u), &g.bfs(v)))
}

pub fn edge_contribution(split: &EdgeSplit) -> f64 {
    let (a, b) = (split.n_u, split.n_v);
    if a + b == 2 {
        return 0.0;
    }
    (((a + b - 2) as f64) / ((a * b) as f64)).sqrt()
}

/// Index with per-edge detail, in the graph's sorted edge order.
pub fn abc_gg(g: &Graph) -> Result<IndexReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dist = g.distances();
    let per_edge: Vec<EdgeTerm> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let split = EdgeSplit::from_rows(u, v, dist.row(u), dist.row(v));
            EdgeTerm { split, contribution: edge_contribution(&split) }
        })
        .collect();
    let total = per_edge.iter().map(|t| t.contribution).sum();
    Ok(IndexReport { total, per_edge })
}

/// Total only.
pub fn abc_gg_value(g: &Graph) -> Result<f64> {
    abc_gg(g).map(|r| r.total)
}
