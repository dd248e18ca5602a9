//! Isomorphism-free catalogs of bicyclic graphs.
//!
//! Three routes:
//! * pendant-free graphs from sweeps over the family parameters;
//! * all bicyclic graphs by hanging rooted trees on pendant-free bases
//!   (every bicyclic graph is its 2-core plus trees), deduplicated by
//!   certificate;
//! * a brute-force filter over labeled edge sets, used as an oracle.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_certificate, certificate_from_masks, Certificate, MAX_CERT_ORDER};
use crate::error::{Error, Result};
use crate::families::Family;
use crate::graph::Graph;
use crate::index::abc_gg_value;

/// Default ceiling for [`enumerate_bicyclic`]. Rough single-machine timings:
/// n = 10 well under a second, n = 12 a few seconds.
pub const DEFAULT_BICYCLIC_LIMIT: usize = 12;

/// Ceiling for [`brute_force_bicyclic`]: `C(28, 9)` edge sets at n = 8.
pub const BRUTE_FORCE_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    /// `B1(n)`: two cycles sharing a vertex.
    B1Only,
    /// Bicyclic graphs with minimum degree 2.
    NoPendant,
    /// Every connected graph with `n + 1` edges.
    AllBicyclic,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphClass::B1Only => "b1-only",
            GraphClass::NoPendant => "no-pendant",
            GraphClass::AllBicyclic => "all-bicyclic",
        })
    }
}

impl FromStr for GraphClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "b1-only" | "b1" => Ok(GraphClass::B1Only),
            "no-pendant" => Ok(GraphClass::NoPendant),
            "all-bicyclic" | "all" => Ok(GraphClass::AllBicyclic),
            _ => Err(Error::Family(format!("unknown class {s:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub graph: Graph,
    pub certificate: Certificate,
    pub family: Option<Family>,
    abc: OnceLock<f64>,
}

impl CatalogEntry {
    fn new(graph: Graph, certificate: Certificate, family: Option<Family>) -> Self {
        CatalogEntry { graph, certificate, family, abc: OnceLock::new() }
    }

    /// Index value, computed on first use.
    pub fn abc_gg(&self) -> f64 {
        *self
            .abc
            .get_or_init(|| abc_gg_value(&self.graph).expect("catalog graphs are connected"))
    }
}

impl PartialEq for CatalogEntry {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.certificate == other.certificate && self.family == other.family
    }
}

fn b1_params(n: usize) -> Vec<Family> {
    (3..)
        .take_while(|&p| 2 * p <= n + 1)
        .filter(|&p| n + 1 - p >= 3)
        .map(|p| Family::B1 { p, q: n + 1 - p })
        .collect()
}

fn b2_params(n: usize) -> Vec<Family> {
    let mut out = Vec::new();
    for l in 1..=n.saturating_sub(5) {
        let sum = n + 1 - l; // p + q
        for p in 3..=sum / 2 {
            if sum - p >= 3 {
                out.push(Family::B2 { p, l, q: sum - p });
            }
        }
    }
    out
}

/// One parameter triple per path-length multiset `a <= b <= c`,
/// `a + b + c = n + 1`, written as `(p, l, q) = (a + b, a, a + c)`.
fn b3_params(n: usize) -> Vec<Family> {
    let total = n + 1;
    let mut out = Vec::new();
    for a in 1..=total / 3 {
        for b in a..=(total - a) / 2 {
            let c = total - a - b;
            if a == 1 && b == 1 {
                continue;
            }
            out.push(Family::B3 { p: a + b, l: a, q: a + c });
        }
    }
    out
}

fn pendant_free_params(n: usize) -> Vec<Family> {
    let mut all = b1_params(n);
    all.extend(b2_params(n));
    all.extend(b3_params(n));
    all
}

/// Parameter tuples of every pendant-free bicyclic graph of order `n`:
/// `B1` with `p <= q`, `B2` with `p <= q`, `B3` one per path-length multiset.
pub fn no_pendant_params(n: usize) -> Result<Vec<Family>> {
    if n < 5 {
        return Err(Error::OrderBelowMinimum { order: n, min: 5 });
    }
    Ok(pendant_free_params(n))
}

fn catalog_from_families(families: Vec<Family>) -> Result<Vec<CatalogEntry>> {
    let mut entries = families
        .into_iter()
        .map(|f| {
            let g = f.build()?;
            let c = canonical_certificate(&g)?;
            Ok(CatalogEntry::new(g, c, Some(f)))
        })
        .collect::<Result<Vec<_>>>()?;
    entries.sort_by(|a, b| a.certificate.cmp(&b.certificate));
    entries.dedup_by(|a, b| a.certificate == b.certificate);
    Ok(entries)
}

fn check_cert_limit(n: usize) -> Result<()> {
    if n > MAX_CERT_ORDER {
        return Err(Error::OrderAboveLimit { order: n, limit: MAX_CERT_ORDER });
    }
    Ok(())
}

/// `B1(n)` catalog, sorted by certificate.
pub fn enumerate_b1(n: usize) -> Result<Vec<CatalogEntry>> {
    if n < 5 {
        return Err(Error::OrderBelowMinimum { order: n, min: 5 });
    }
    check_cert_limit(n)?;
    catalog_from_families(b1_params(n))
}

/// Pendant-free bicyclic graphs of order `n`, one per isomorphism class,
/// sorted by certificate.
pub fn enumerate_no_pendant(n: usize) -> Result<Vec<CatalogEntry>> {
    let params = no_pendant_params(n)?;
    check_cert_limit(n)?;
    catalog_from_families(params)
}

pub fn enumerate_bicyclic(n: usize) -> Result<Vec<CatalogEntry>> {
    enumerate_bicyclic_with_limit(n, DEFAULT_BICYCLIC_LIMIT)
}

/// Smallest (task, serial) key wins, so the kept representative does not
/// depend on scheduling.
type Found = HashMap<Certificate, ((usize, usize), Graph, Option<Family>)>;

/// All bicyclic graphs of order `n` (`4 <= n <= limit`), sorted by certificate.
pub fn enumerate_bicyclic_with_limit(n: usize, limit: usize) -> Result<Vec<CatalogEntry>> {
    let limit = limit.min(MAX_CERT_ORDER);
    if n > limit {
        return Err(Error::OrderAboveLimit { order: n, limit });
    }
    if n < 4 {
        return Err(Error::OrderBelowMinimum { order: n, min: 4 });
    }
    let trees: Vec<Vec<Vec<usize>>> = (0..=n - 3).map(rooted_trees).collect();

    struct Task {
        base: Graph,
        family: Family,
        sizes: Vec<usize>,
    }
    let mut tasks = Vec::new();
    for b in 4..=n {
        for family in pendant_free_params(b) {
            let base = family.build()?;
            for extra in weak_compositions(n - b, b) {
                let sizes = extra.iter().map(|e| e + 1).collect();
                tasks.push(Task { base: base.clone(), family, sizes });
            }
        }
    }

    let found: Found = tasks
        .par_iter()
        .enumerate()
        .map(|(t, task)| {
            let mut local: Found = HashMap::new();
            let choices: Vec<&Vec<Vec<usize>>> = task.sizes.iter().map(|&s| &trees[s]).collect();
            let mut pick = vec![0usize; choices.len()];
            let pendant_free = task.sizes.iter().all(|&s| s == 1);
            let mut serial = 0;
            loop {
                let g = attach_trees(&task.base, n, &choices, &pick);
                let cert = canonical_certificate(&g).expect("order checked");
                local.entry(cert).or_insert_with(|| ((t, serial), g, pendant_free.then_some(task.family)));
                serial += 1;
                if !advance(&mut pick, &choices) {
                    break;
                }
            }
            local
        })
        .reduce(HashMap::new, merge_min);

    let mut entries: Vec<CatalogEntry> = found
        .into_iter()
        .map(|(cert, (_, g, family))| CatalogEntry::new(g, cert, family))
        .collect();
    entries.sort_by(|a, b| a.certificate.cmp(&b.certificate));
    Ok(entries)
}

fn merge_min<K: std::hash::Hash + Eq, O: Ord, V>(
    mut a: HashMap<K, (O, V, Option<Family>)>,
    b: HashMap<K, (O, V, Option<Family>)>,
) -> HashMap<K, (O, V, Option<Family>)> {
    if a.len() < b.len() {
        return merge_min(b, a);
    }
    for (k, item) in b {
        match a.get_mut(&k) {
            Some(cur) if cur.0 <= item.0 => {}
            Some(cur) => *cur = item,
            None => {
                a.insert(k, item);
            }
        }
    }
    a
}

fn advance(pick: &mut [usize], choices: &[&Vec<Vec<usize>>]) -> bool {
    for i in (0..pick.len()).rev() {
        pick[i] += 1;
        if pick[i] < choices[i].len() {
            return true;
        }
        pick[i] = 0;
    }
    false
}

/// Base vertex `i` becomes the root of tree `choices[i][pick[i]]`; tree
/// vertices are appended after the base.
fn attach_trees(base: &Graph, n: usize, choices: &[&Vec<Vec<usize>>], pick: &[usize]) -> Graph {
    let mut edges = base.edges().to_vec();
    let mut next = base.order();
    for (root, (options, &k)) in choices.iter().zip(pick).enumerate() {
        let parents = &options[k];
        let offset = next - 1;
        let label = |j: usize| if j == 0 { root } else { offset + j };
        for (j, &p) in parents.iter().enumerate().skip(1) {
            edges.push((label(p), label(j)));
        }
        next += parents.len() - 1;
    }
    Graph::new(n, edges).expect("attachment yields a simple graph")
}

/// All ways to write `total` as an ordered sum of `parts` non-negative integers.
fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Unlabeled rooted trees on `t` vertices as parent arrays (`parents[0]` is
/// the root and unused), one per isomorphism class.
///
/// Walks canonical level sequences with the Beyer-Hedetniemi successor rule,
/// starting from the path and ending at the star.
pub fn rooted_trees(t: usize) -> Vec<Vec<usize>> {
    if t == 0 {
        return Vec::new();
    }
    let mut levels: Vec<usize> = (0..t).collect();
    let mut out = Vec::new();
    loop {
        out.push(parents_from_levels(&levels));
        let Some(p) = levels.iter().rposition(|&l| l > 1) else {
            break;
        };
        let q = levels[..p].iter().rposition(|&l| l == levels[p] - 1).unwrap();
        for i in p..t {
            levels[i] = levels[i - (p - q)];
        }
    }
    out
}

fn parents_from_levels(levels: &[usize]) -> Vec<usize> {
    let mut parents = vec![0; levels.len()];
    let mut last_at_level: Vec<usize> = vec![0];
    for (i, &l) in levels.iter().enumerate().skip(1) {
        parents[i] = last_at_level[l - 1];
        last_at_level.truncate(l);
        last_at_level.push(i);
    }
    parents
}

/// Oracle: every labeled graph with `n` vertices and `n + 1` edges, kept if
/// connected, one representative (the canonical form) per class.
pub fn brute_force_bicyclic(n: usize) -> Result<Vec<CatalogEntry>> {
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::OrderAboveLimit { order: n, limit: BRUTE_FORCE_LIMIT });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let m = n + 1;
    if pairs.len() < m {
        return Ok(Vec::new());
    }
    let mut certs: Vec<Certificate> = (0..=pairs.len() - m)
        .into_par_iter()
        .map(|first| {
            let mut seen = std::collections::HashSet::new();
            let mut idx: Vec<usize> = (first + 1..first + m).collect();
            loop {
                let mut adj = [0u32; BRUTE_FORCE_LIMIT];
                for &k in std::iter::once(&first).chain(idx.iter()) {
                    let (u, v) = pairs[k];
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
                if connected(&adj[..n]) {
                    seen.insert(certificate_from_masks(n, &adj[..n]));
                }
                if !next_combination(&mut idx, pairs.len()) {
                    break;
                }
            }
            seen
        })
        .reduce(std::collections::HashSet::new, |mut a, b| {
            a.extend(b);
            a
        })
        .into_iter()
        .collect();
    certs.sort();
    Ok(certs
        .into_iter()
        .map(|c| CatalogEntry::new(c.to_graph(), c, None))
        .collect())
}

fn connected(adj: &[u32]) -> bool {
    let full = (1u32 << adj.len()) - 1;
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == full
}

/// Next k-subset of `0..upper` in lexicographic order, keeping elements
/// above the fixed first one (the slice holds the remaining k - 1).
fn next_combination(idx: &mut [usize], upper: usize) -> bool {
    let k = idx.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < upper - (k - i) {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Catalog of a class at order `n`.
pub fn catalog(class: GraphClass, n: usize, bicyclic_limit: usize) -> Result<Vec<CatalogEntry>> {
    match class {
        GraphClass::B1Only => enumerate_b1(n),
        GraphClass::NoPendant => enumerate_no_pendant(n),
        GraphClass::AllBicyclic => enumerate_bicyclic_with_limit(n, bicyclic_limit),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Bicyclicity;

    #[test]
    fn rooted_tree_counts() {
        // number of unlabeled rooted trees, by the Euler transform recurrence
        fn count(t: usize) -> Vec<u64> {
            let mut a = vec![0u64; t + 1];
            a[1] = 1;
            for m in 1..t {
                let mut s = 0u64;
                for k in 1..=m {
                    let d_sum: u64 = (1..=k).filter(|d| k % d == 0).map(|d| d as u64 * a[d]).sum();
                    s += d_sum * a[m - k + 1];
                }
                a[m + 1] = s / m as u64;
            }
            a
        }
        let expected = count(10);
        for t in 1..=10 {
            assert_eq!(rooted_trees(t).len() as u64, expected[t], "t={t}");
        }
        assert_eq!(expected[1..=9], [1, 1, 2, 4, 9, 20, 48, 115, 286]);
    }

    #[test]
    fn rooted_trees_are_distinct_trees() {
        for t in 1..=8 {
            let trees = rooted_trees(t);
            let mut certs: Vec<Certificate> = trees
                .iter()
                .map(|par| {
                    // a tail longer than any branch pins the root, so rooted
                    // isomorphism becomes plain isomorphism
                    let mut edges: Vec<(usize, usize)> = (1..t).map(|j| (par[j], j)).collect();
                    edges.push((0, t));
                    edges.extend((t..t + 7).map(|w| (w, w + 1)));
                    canonical_certificate(&Graph::new(t + 8, edges).unwrap()).unwrap()
                })
                .collect();
            let len = certs.len();
            certs.sort();
            certs.dedup();
            assert_eq!(certs.len(), len, "t={t}");
        }
    }

    #[test]
    fn parameter_sweeps() {
        let b1: Vec<Family> = no_pendant_params(9).unwrap().into_iter().filter(|f| matches!(f, Family::B1 { .. })).collect();
        assert_eq!(b1, vec![Family::B1 { p: 3, q: 7 }, Family::B1 { p: 4, q: 6 }, Family::B1 { p: 5, q: 5 }]);
        let b2: Vec<Family> = no_pendant_params(6).unwrap().into_iter().filter(|f| matches!(f, Family::B2 { .. })).collect();
        assert_eq!(b2, vec![Family::B2 { p: 3, l: 1, q: 3 }]);
        let b3: Vec<[usize; 3]> = no_pendant_params(5).unwrap().iter().filter_map(Family::theta_paths).collect();
        assert_eq!(b3, vec![[1, 2, 3], [2, 2, 2]]);
        assert!(no_pendant_params(4).is_err());
        for n in 5..=16 {
            for f in no_pendant_params(n).unwrap() {
                assert_eq!(f.order(), n, "{f}");
            }
        }
    }

    #[test]
    fn b3_sweep_matches_exhaustive_triple_search() {
        for n in 5..=14 {
            let mut multisets: Vec<[usize; 3]> = Vec::new();
            for p in 3..=2 * n {
                for q in 3..=2 * n {
                    for l in 1..p.min(q) {
                        if p + q - l - 1 != n {
                            continue;
                        }
                        let mut t = [l, p - l, q - l];
                        t.sort();
                        if t[0] == 1 && t[1] == 1 {
                            continue;
                        }
                        multisets.push(t);
                    }
                }
            }
            multisets.sort();
            multisets.dedup();
            let swept: Vec<[usize; 3]> = b3_params(n).iter().filter_map(Family::theta_paths).collect();
            assert_eq!(swept, multisets, "n={n}");
        }
    }

    #[test]
    fn small_no_pendant_catalog() {
        let cat = enumerate_no_pendant(5).unwrap();
        assert_eq!(cat.len(), 3);
        let bowtie = canonical_certificate(&crate::families::b1(3, 3).unwrap()).unwrap();
        assert!(cat.iter().any(|e| e.certificate == bowtie));
        for e in &cat {
            assert_eq!(e.graph.classify_bicyclic(), Bicyclicity::NoPendant);
            assert_eq!(canonical_certificate(&e.graph).unwrap(), e.certificate);
        }
        let nine = enumerate_no_pendant(9).unwrap();
        assert_eq!(nine.iter().filter(|e| matches!(e.family, Some(Family::B1 { .. }))).count(), 3);
    }

    #[test]
    fn brute_force_small() {
        let four = brute_force_bicyclic(4).unwrap();
        assert_eq!(four.len(), 1);
        assert_eq!(four[0].graph.size(), 5);
        assert!(four[0].graph.is_connected());
        let five = brute_force_bicyclic(5).unwrap();
        assert_eq!(five.len(), 5);
        assert_eq!(five.iter().filter(|e| e.graph.classify_bicyclic() == Bicyclicity::NoPendant).count(), 3);
        assert!(brute_force_bicyclic(3).unwrap().is_empty());
        assert!(matches!(brute_force_bicyclic(9), Err(Error::OrderAboveLimit { .. })));
    }

    #[test]
    fn bicyclic_contains_h_and_pendant_free() {
        let cat = enumerate_bicyclic(5).unwrap();
        let h = canonical_certificate(&crate::families::h_graph(5).unwrap()).unwrap();
        assert!(cat.iter().any(|e| e.certificate == h));
        for e in enumerate_no_pendant(5).unwrap() {
            assert!(cat.iter().any(|c| c.certificate == e.certificate));
        }
        assert!(matches!(enumerate_bicyclic(13), Err(Error::OrderAboveLimit { .. })));
    }

    #[test]
    fn compositions() {
        assert_eq!(weak_compositions(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(weak_compositions(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(weak_compositions(3, 4).len(), 20);
    }

    #[test]
    fn lazy_index() {
        let cat = enumerate_b1(10).unwrap();
        assert_eq!(cat.len(), 3);
        for e in &cat {
            assert_eq!(e.abc_gg(), abc_gg_value(&e.graph).unwrap());
        }
    }
}
