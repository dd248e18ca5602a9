//! Exact canonical certificates for small graphs.
//!
//! The certificate is the maximum upper-triangle adjacency bit string over
//! all vertex orderings reachable by individualization and refinement. Color
//! refinement to an equitable ordered partition prunes the permutation search,
//! and sibling branches that differ only by a pair of twin vertices
//! (`N(u) - v == N(v) - u`) are skipped since the transposition is an
//! automorphism fixing the current partition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order a certificate can be computed for. The packed code holds
/// `n(n-1)/2 <= 120` bits.
pub const MAX_CERT_ORDER: usize = 16;

/// Byte string that is equal for two graphs iff they are isomorphic.
///
/// Layout: one byte holding `n`, then the canonical upper-triangle adjacency
/// bits in row-major order, most significant bit first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Certificate(Vec<u8>);

impl Certificate {
    fn from_code(n: usize, code: u128) -> Self {
        let bits = n * (n - 1) / 2;
        let nbytes = bits.div_ceil(8);
        let mut bytes = Vec::with_capacity(1 + nbytes);
        bytes.push(n as u8);
        if nbytes > 0 {
            let shifted = code << (nbytes * 8 - bits);
            bytes.extend_from_slice(&shifted.to_be_bytes()[16 - nbytes..]);
        }
        Certificate(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bytes = hex::decode(s).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
        let n = *bytes.first().ok_or(Error::Parse { line: 0, msg: "empty certificate".into() })? as usize;
        if n == 0 || n > MAX_CERT_ORDER || bytes.len() != 1 + (n * (n - 1) / 2).div_ceil(8) {
            return Err(Error::Parse { line: 0, msg: "certificate length mismatch".into() });
        }
        Ok(Certificate(bytes))
    }

    /// The canonical representative: vertex `i` is the i-th vertex of the
    /// canonical ordering.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[1 + k / 8] & (0x80 >> (k % 8)) != 0 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::new(n, edges).expect("certificate encodes a simple graph")
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate({})", self.to_hex())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl From<Certificate> for String {
    fn from(c: Certificate) -> String {
        c.to_hex()
    }
}

impl TryFrom<String> for Certificate {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        Certificate::from_hex(&s)
    }
}

pub fn canonical_certificate(g: &Graph) -> Result<Certificate> {
    if g.order() > MAX_CERT_ORDER {
        return Err(Error::OrderAboveLimit { order: g.order(), limit: MAX_CERT_ORDER });
    }
    Ok(certificate_from_masks(g.order(), &g.adjacency_masks()))
}

/// Certificate straight from adjacency bit masks; `n <= MAX_CERT_ORDER`.
pub(crate) fn certificate_from_masks(n: usize, adj: &[u32]) -> Certificate {
    debug_assert!((1..=MAX_CERT_ORDER).contains(&n));
    let mut search = Search { n, adj, best: None };
    search.descend(vec![0; n]);
    Certificate::from_code(n, search.best.expect("at least one leaf"))
}

struct Search<'a> {
    n: usize,
    adj: &'a [u32],
    best: Option<u128>,
}

impl Search<'_> {
    fn descend(&mut self, mut colors: Vec<u8>) {
        let cells = refine(self.n, self.adj, &mut colors);
        if cells == self.n {
            let code = self.leaf_code(&colors);
            if self.best.is_none_or(|b| code > b) {
                self.best = Some(code);
            }
            return;
        }
        let target = first_nonsingleton(&colors, cells);
        let members: Vec<usize> = (0..self.n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let next: Vec<u8> = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| {
                    if c < target || (c == target && w == v) {
                        c
                    } else {
                        c + 1
                    }
                })
                .collect();
            self.descend(next);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.adj[u] & !(1 << v) == self.adj[v] & !(1 << u)
    }

    fn leaf_code(&self, colors: &[u8]) -> u128 {
        let mut order = vec![0usize; self.n];
        for (v, &c) in colors.iter().enumerate() {
            order[c as usize] = v;
        }
        let mut code = 0u128;
        for i in 0..self.n {
            let row = self.adj[order[i]];
            for &w in &order[i + 1..] {
                code = (code << 1) | ((row >> w) & 1) as u128;
            }
        }
        code
    }
}

/// Refines `colors` (ranks `0..k`) to the coarsest equitable partition that
/// refines it, keeping the relative order of existing cells. Returns the
/// number of cells.
fn refine(n: usize, adj: &[u32], colors: &mut [u8]) -> usize {
    let mut cells = compress(colors);
    loop {
        let mut masks = [0u32; MAX_CERT_ORDER];
        for (v, &c) in colors.iter().enumerate() {
            masks[c as usize] |= 1 << v;
        }
        // neighbor counts are < 16, four bits per cell
        let sigs: Vec<u128> = (0..n)
            .map(|v| {
                let counts = masks[..cells]
                    .iter()
                    .fold(0u128, |acc, &m| (acc << 4) | (adj[v] & m).count_ones() as u128);
                ((colors[v] as u128) << 64) | counts
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() == cells {
            return cells;
        }
        for (v, s) in sigs.iter().enumerate() {
            colors[v] = distinct.binary_search(s).unwrap() as u8;
        }
        cells = distinct.len();
    }
}

fn compress(colors: &mut [u8]) -> usize {
    let mut distinct = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in colors.iter_mut() {
        *c = distinct.binary_search(c).unwrap() as u8;
    }
    distinct.len()
}

fn first_nonsingleton(colors: &[u8], cells: usize) -> u8 {
    let mut count = vec![0usize; cells];
    for &c in colors {
        count[c as usize] += 1;
    }
    count.iter().position(|&k| k > 1).expect("partition not discrete") as u8
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    /// Reference: minimum over literally all permutations.
    fn brute_force_equal(a: &Graph, b: &Graph) -> bool {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, k - 1);
                    out.push(q);
                }
            }
            out
        }
        a.order() == b.order() && perms(a.order()).iter().any(|p| &a.relabel(p) == b)
    }

    #[test]
    fn relabeled_triangle() {
        let a = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let b = a.relabel(&[2, 0, 1]);
        assert_eq!(canonical_certificate(&a).unwrap(), canonical_certificate(&b).unwrap());
    }

    #[test]
    fn c4_vs_p4() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_ne!(canonical_certificate(&c4).unwrap(), canonical_certificate(&p4).unwrap());
    }

    #[test]
    fn agrees_with_exhaustive_isomorphism_on_five_vertices() {
        // every graph on 5 labeled vertices, grouped against the permutation oracle
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        let all: Vec<Graph> = (0u32..1 << 10)
            .map(|m| g(5, &pairs.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).map(|(_, &e)| e).collect::<Vec<_>>()))
            .collect();
        let certs: Vec<Certificate> = all.iter().map(|x| canonical_certificate(x).unwrap()).collect();
        let mut distinct = certs.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 34); // graphs on 5 vertices
        // spot-check equivalence on a stride of pairs
        for i in (0..all.len()).step_by(37) {
            for j in (0..all.len()).step_by(53) {
                assert_eq!(certs[i] == certs[j], brute_force_equal(&all[i], &all[j]), "{i} {j}");
            }
        }
    }

    #[test]
    fn decoded_graph_is_isomorphic() {
        let bowtie = g(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        let cert = canonical_certificate(&bowtie).unwrap();
        let back = cert.to_graph();
        assert!(brute_force_equal(&bowtie, &back));
        assert_eq!(canonical_certificate(&back).unwrap(), cert);
        assert_eq!(Certificate::from_hex(&cert.to_hex()).unwrap(), cert);
    }

    #[test]
    fn order_limit() {
        let big = Graph::new(17, (0..16).map(|i| (i, i + 1))).unwrap();
        assert!(matches!(canonical_certificate(&big), Err(Error::OrderAboveLimit { .. })));
        let p16 = Graph::new(16, (0..15).map(|i| (i, i + 1))).unwrap();
        let rev: Vec<usize> = (0..16).rev().collect();
        assert_eq!(canonical_certificate(&p16).unwrap(), canonical_certificate(&p16.relabel(&rev)).unwrap());
    }

    #[test]
    fn single_vertex() {
        let c = canonical_certificate(&g(1, &[])).unwrap();
        assert_eq!(c.as_bytes(), &[1]);
        assert_eq!(c.to_graph().order(), 1);
    }

    #[test]
    fn malformed_hex() {
        assert!(Certificate::from_hex("zz").is_err());
        assert!(Certificate::from_hex("05ff").is_err());
        assert!(Certificate::from_hex("").is_err());
    }
}
