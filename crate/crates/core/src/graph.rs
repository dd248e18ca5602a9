//! Immutable simple undirected graphs on vertices `0..n`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;
    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::new(raw.n, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph { n: g.order, edges: g.edges }
    }
}

impl Graph {
    /// Builds a graph from an edge list. Pairs are normalized to `(min, max)`,
    /// duplicates collapse and the edge set is kept sorted.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Loop(u));
            }
            if u >= order || v >= order {
                return Err(Error::EndpointOutOfRange { u, v, order });
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(Graph { order, edges: list, adj })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && self.adj[u].binary_search(&v).is_ok()
    }

    /// Applies a relabeling where vertex `v` becomes `perm[v]`.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order, "permutation length mismatch");
        let mut seen = vec![false; self.order];
        for &p in perm {
            assert!(p < self.order && !seen[p], "not a permutation");
            seen[p] = true;
        }
        Graph::new(self.order, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabeling preserves validity")
    }

    /// Unweighted single-source distances.
    pub fn bfs(&self, source: usize) -> Vec<Distance> {
        let mut dist = vec![Distance::Unreachable; self.order];
        dist[source] = Distance::Hops(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].hops().unwrap();
            for &w in &self.adj[u] {
                if dist[w] == Distance::Unreachable {
                    dist[w] = Distance::Hops(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distances(&self) -> DistanceMatrix {
        let mut data = Vec::with_capacity(self.order * self.order);
        for s in 0..self.order {
            data.extend(self.bfs(s));
        }
        DistanceMatrix { order: self.order, data }
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(|d| d.is_reachable())
    }

    pub fn classify_bicyclic(&self) -> Bicyclicity {
        if self.size() != self.order + 1 || !self.is_connected() {
            Bicyclicity::NotBicyclic
        } else if self.adj.iter().any(|nb| nb.len() == 1) {
            Bicyclicity::WithPendant
        } else {
            Bicyclicity::NoPendant
        }
    }

    /// Adjacency rows as bit masks. Only valid for `n <= 32`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u32> {
        debug_assert!(self.order <= 32);
        self.adj
            .iter()
            .map(|nb| nb.iter().fold(0u32, |m, &w| m | (1 << w)))
            .collect()
    }

    /// Serializes to the edge-list text format: the order on the first line,
    /// then one `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.order);
        for (u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parses the edge-list text format. `#` starts a comment; blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (first, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing vertex count".into(),
        })?;
        let order: usize = header.parse().map_err(|_| Error::Parse {
            line: first,
            msg: format!("expected vertex count, got {header:?}"),
        })?;
        let mut edges = Vec::new();
        for (line, body) in lines {
            let fields: Vec<&str> = body.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad vertex {s:?}"),
                })
            };
            match fields.as_slice() {
                [u, v] => edges.push((parse(u)?, parse(v)?)),
                _ => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected two vertices, got {body:?}"),
                    })
                }
            }
        }
        Graph::new(order, edges).map_err(|e| match e {
            Error::Parse { .. } => e,
            other => Error::Parse { line: 0, msg: other.to_string() },
        })
    }
}

impl FromStr for Graph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Graph::parse_edge_list(s)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.order, self.edges)
    }
}

/// Hop count between two vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Distance {
    Hops(u32),
    Unreachable,
}

impl Distance {
    pub fn hops(self) -> Option<u32> {
        match self {
            Distance::Hops(h) => Some(h),
            Distance::Unreachable => None,
        }
    }

    pub fn is_reachable(self) -> bool {
        matches!(self, Distance::Hops(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    data: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.data[u * self.order + v]
    }

    pub fn row(&self, u: usize) -> &[Distance] {
        &self.data[u * self.order..(u + 1) * self.order]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bicyclicity {
    NotBicyclic,
    WithPendant,
    NoPendant,
}

impl Bicyclicity {
    pub fn is_bicyclic(self) -> bool {
        self != Bicyclicity::NotBicyclic
    }
}
