//! Labeled constructions of the bicyclic families and a few elementary graphs.
//!
//! Labeling conventions:
//! * cycles and paths are numbered consecutively from 0;
//! * `B1(p, q)`: the shared vertex is 0, `C_p` is `0..p`, `C_q` is
//!   `0, p, p+1, .., p+q-2`;
//! * `B2(p, l, q)`: `C_p` on `0..p`, the connecting path leaves vertex 0 through
//!   `p..p+l-1` and ends at vertex `p+l-1`, the first vertex of `C_q`;
//! * `B3(p, l, q)`: hubs 0 and 1 joined by paths of lengths `l`, `p-l`, `q-l`,
//!   interior vertices numbered along each path in that order.
//!
//! `B3` is built as a theta graph rather than by the textual recipe of joining
//! `v_1` and `v_{p-l-2}` on a cycle `C_{p+q-2l}`: that index is out of range
//! for small `p` (e.g. `p = 4, l = 2`). The theta graph has the stated order
//! `p+q-l-1` and cycle lengths `p`, `q`, `p+q-2l`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Family {
    B1 { p: usize, q: usize },
    B2 { p: usize, l: usize, q: usize },
    B3 { p: usize, l: usize, q: usize },
    H { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    CompleteBipartite { p: usize, q: usize },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Family(msg.into())
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::B1 { p, q } => b1(p, q),
            Family::B2 { p, l, q } => b2(p, l, q),
            Family::B3 { p, l, q } => b3(p, l, q),
            Family::H { n } => h_graph(n),
            Family::Cycle { n } => cycle(n),
            Family::Path { n } => path(n),
            Family::Complete { n } => complete(n),
            Family::CompleteBipartite { p, q } => complete_bipartite(p, q),
        }
    }

    /// Order of the graph the parameters describe (no validation).
    pub fn order(&self) -> usize {
        match *self {
            Family::B1 { p, q } => p + q - 1,
            Family::B2 { p, l, q } => p + q + l - 1,
            Family::B3 { p, l, q } => p + q - l - 1,
            Family::H { n } | Family::Cycle { n } | Family::Path { n } | Family::Complete { n } => n,
            Family::CompleteBipartite { p, q } => p + q,
        }
    }

    /// Path lengths of a theta graph, sorted.
    pub fn theta_paths(&self) -> Option<[usize; 3]> {
        match *self {
            Family::B3 { p, l, q } => {
                let mut t = [l, p.wrapping_sub(l), q.wrapping_sub(l)];
                t.sort_unstable();
                Some(t)
            }
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::B1 { p, q } => write!(f, "b1:{p},{q}"),
            Family::B2 { p, l, q } => write!(f, "b2:{p},{l},{q}"),
            Family::B3 { p, l, q } => write!(f, "b3:{p},{l},{q}"),
            Family::H { n } => write!(f, "h:{n}"),
            Family::Cycle { n } => write!(f, "cycle:{n}"),
            Family::Path { n } => write!(f, "path:{n}"),
            Family::Complete { n } => write!(f, "complete:{n}"),
            Family::CompleteBipartite { p, q } => write!(f, "kpq:{p},{q}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Descriptor syntax: `b1:p,q`, `b2:p,l,q`, `b3:p,l,q`, `h:n`, `cycle:n`,
    /// `path:n`, `complete:n`, `kpq:p,q`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| invalid(format!("descriptor {s:?} lacks ':'")))?;
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| invalid(format!("non-integer parameter in {s:?}")))?;
        let family = match (kind.trim().to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("b1", &[p, q]) => Family::B1 { p, q },
            ("b2", &[p, l, q]) => Family::B2 { p, l, q },
            ("b3", &[p, l, q]) => Family::B3 { p, l, q },
            ("h", &[n]) => Family::H { n },
            ("cycle", &[n]) => Family::Cycle { n },
            ("path", &[n]) => Family::Path { n },
            ("complete", &[n]) => Family::Complete { n },
            ("kpq", &[p, q]) => Family::CompleteBipartite { p, q },
            _ => return Err(invalid(format!("unknown descriptor {s:?}"))),
        };
        Ok(family)
    }
}

impl From<Family> for String {
    fn from(f: Family) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for Family {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("path needs n >= 1"));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    if p < 1 || q < 1 {
        return Err(invalid(format!("K_{{p,q}} needs p, q >= 1, got {p}, {q}")));
    }
    Graph::new(p + q, (0..p).flat_map(|i| (p..p + q).map(move |j| (i, j))))
}

/// Two cycles `C_p` and `C_q` sharing vertex 0.
pub fn b1(p: usize, q: usize) -> Result<Graph> {
    if p < 3 || q < 3 {
        return Err(invalid(format!("b1 needs p, q >= 3, got {p}, {q}")));
    }
    let mut edges: Vec<(usize, usize)> = (0..p).map(|i| (i, (i + 1) % p)).collect();
    // C_q: 0 -> p -> p+1 -> ... -> p+q-2 -> 0
    let ring: Vec<usize> = std::iter::once(0).chain(p..p + q - 1).collect();
    edges.extend((0..q).map(|i| (ring[i], ring[(i + 1) % q])));
    Graph::new(p + q - 1, edges)
}

/// Dumbbell: `C_p` and `C_q` joined by a path with `l` edges.
pub fn b2(p: usize, l: usize, q: usize) -> Result<Graph> {
    if p < 3 || q < 3 || l < 1 {
        return Err(invalid(format!("b2 needs p, q >= 3 and l >= 1, got {p}, {l}, {q}")));
    }
    let n = p + q + l - 1;
    let mut edges: Vec<(usize, usize)> = (0..p).map(|i| (i, (i + 1) % p)).collect();
    let mut prev = 0;
    for w in p..p + l {
        edges.push((prev, w));
        prev = w;
    }
    let start = p + l - 1;
    edges.extend((0..q).map(|i| (start + i, start + (i + 1) % q)));
    Graph::new(n, edges)
}

/// Theta graph: hubs 0 and 1 joined by internally disjoint paths of lengths
/// `l`, `p - l`, `q - l`.
pub fn b3(p: usize, l: usize, q: usize) -> Result<Graph> {
    if p < 3 || q < 3 || l < 1 {
        return Err(invalid(format!("b3 needs p, q >= 3 and l >= 1, got {p}, {l}, {q}")));
    }
    if l >= p || l >= q {
        return Err(invalid(format!("b3 needs l < p and l < q, got {p}, {l}, {q}")));
    }
    let lengths = [l, p - l, q - l];
    if lengths.iter().filter(|&&x| x == 1).count() > 1 {
        return Err(invalid("two unit paths create a multi-edge"));
    }
    let n = p + q - l - 1;
    let mut edges = Vec::with_capacity(n + 1);
    let mut next = 2;
    for len in lengths {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    debug_assert_eq!(next, n);
    Graph::new(n, edges)
}

/// `K_4` minus the edge `{2, 3}`, with `n - 4` pendant vertices on vertex 0.
pub fn h_graph(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(invalid(format!("H needs n >= 5, got {n}")));
    }
    let core = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)];
    Graph::new(n, core.into_iter().chain((4..n).map(|w| (0, w))))
}
