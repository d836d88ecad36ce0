//! Undirected simple graphs on bitset rows, with strongly-regular and T(7)
//! certificates, coclique search and export.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, rows: vec![0; n * words] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph on `0..n` with an edge wherever `adjacent(u, v)` holds for u < v.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.set(u, v);
                }
            }
        }
        g
    }

    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidInput(format!("edge ({u}, {v}) out of range for {} vertices", self.n)));
        }
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop at {u}")));
        }
        self.set(u, v);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(u))
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u).iter().zip(self.row(v)).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges (u, v) with u < v in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v))).collect()
    }

    /// Subgraph induced on `vertices`, relabelled by position in the slice.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |a, b| self.has_edge(vertices[a], vertices[b]))
    }

    pub fn is_regular(&self) -> Option<usize> {
        let k = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|u| self.degree(u) == k).then_some(k)
    }
}

/// Indices of set bits in a bitset.
pub fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            (w != 0).then(|| {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                i * 64 + b
            })
        })
    })
}

fn first_bit(words: &[u64]) -> Option<usize> {
    words.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Connected components, each sorted, ordered by least vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n];
    let mut out = Vec::new();
    for start in 0..g.n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrgCertificate {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgCertificate {
    pub const fn new(v: usize, k: usize, lambda: usize, mu: usize) -> Self {
        SrgCertificate { v, k, lambda, mu }
    }

    /// k(k − λ − 1) = (v − k − 1)μ.
    pub fn is_feasible(&self) -> bool {
        let (v, k, l, m) = (self.v as i64, self.k as i64, self.lambda as i64, self.mu as i64);
        k * (k - l - 1) == (v - k - 1) * m
    }
}

impl std::fmt::Display for SrgCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Certifies strong regularity by counting common neighbours of every pair.
pub fn srg_check(g: &Graph) -> Result<SrgCertificate> {
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    if g.n < 3 {
        return Err(Error::NotSrg(format!("only {} vertices", g.n)));
    }
    let k = g.degree(0);
    if let Some(u) = (0..g.n).find(|&u| g.degree(u) != k) {
        return Err(Error::NotSrg(format!("vertex {u} has degree {} but vertex 0 has {k}", g.degree(u))));
    }
    let mut lambda = None;
    let mut mu = None;
    for u in 0..g.n {
        for v in u + 1..g.n {
            let c = g.common_neighbors(u, v);
            let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => {
                    let kind = if g.has_edge(u, v) { "adjacent" } else { "non-adjacent" };
                    return Err(Error::NotSrg(format!(
                        "{kind} pair ({u}, {v}) has {c} common neighbours, expected {x}"
                    )));
                }
                _ => {}
            }
        }
    }
    match (lambda, mu) {
        (Some(lambda), Some(mu)) => Ok(SrgCertificate { v: g.n, k, lambda, mu }),
        _ => Err(Error::NotSrg("complete graphs are excluded".into())),
    }
}

/// Checks A² = kI + λA + μ(J − I − A) by dense integer matrix multiplication.
pub fn srg_matrix_identity(g: &Graph, cert: &SrgCertificate) -> bool {
    let n = g.n;
    if cert.v != n {
        return false;
    }
    let a: Vec<u32> = (0..n * n).map(|i| g.has_edge(i / n, i % n) as u32).collect();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let sq: u32 = (0..n).map(|m| a[i * n + m] * a[m * n + j]).sum();
            let expected = if i == j {
                cert.k
            } else if a[i * n + j] == 1 {
                cert.lambda
            } else {
                cert.mu
            };
            sq as usize == expected
        })
    })
}

/// All cliques of exactly `size` vertices, each sorted, in lexicographic order.
pub fn cliques_of_size(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, size: usize, current: &mut Vec<usize>, cand: Vec<u64>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        let avail: usize = cand.iter().map(|w| w.count_ones() as usize).sum();
        if current.len() + avail < size {
            return;
        }
        for v in bits(&cand).collect::<Vec<_>>() {
            let next: Vec<u64> = cand
                .iter()
                .zip(g.row(v))
                .enumerate()
                .map(|(i, (c, r))| c & r & above_mask(i, v))
                .collect();
            current.push(v);
            extend(g, size, current, next, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let all = full_set(g.n);
    extend(g, size, &mut Vec::new(), all, &mut out);
    out
}

/// Mask of bit positions greater than `v` within word `i`.
fn above_mask(i: usize, v: usize) -> u64 {
    let lo = i * 64;
    if v < lo {
        u64::MAX
    } else if v >= lo + 63 {
        0
    } else {
        !0u64 << (v - lo + 1)
    }
}

fn full_set(n: usize) -> Vec<u64> {
    let words = n.div_ceil(64).max(1);
    (0..words)
        .map(|i| {
            let hi = (n - (i * 64).min(n)).min(64);
            if hi == 64 { u64::MAX } else { (1u64 << hi) - 1 }
        })
        .collect()
}

/// An explicit isomorphism from a graph to T(7): vertex u ↦ the pair of
/// 6-cliques containing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct T7Labeling {
    /// The seven maximal 6-cliques in lexicographic order.
    pub cliques: Vec<Vec<usize>>,
    /// For each vertex, the indices i < j of its two cliques.
    pub labels: Vec<(u8, u8)>,
}

pub fn t7_certificate(g: &Graph) -> Result<T7Labeling> {
    let fail = |stage: &str| Error::NotT7 { stage: stage.into() };
    if g.n != 21 {
        return Err(fail("vertex count"));
    }
    let cliques = cliques_of_size(g, 6);
    if cliques.len() != 7 {
        return Err(fail("six-clique count"));
    }
    let mut labels = Vec::with_capacity(21);
    for u in 0..21 {
        let owners: Vec<u8> = (0..7u8).filter(|&c| cliques[c as usize].contains(&u)).collect();
        match owners[..] {
            [a, b] => labels.push((a, b)),
            _ => return Err(fail("clique membership")),
        }
    }
    let mut sorted = labels.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != 21 {
        return Err(fail("distinct labels"));
    }
    for u in 0..21 {
        for v in u + 1..21 {
            let (a, b) = labels[u];
            let (c, d) = labels[v];
            let meet = a == c || a == d || b == c || b == d;
            if meet != g.has_edge(u, v) {
                return Err(fail("adjacency"));
            }
        }
    }
    Ok(T7Labeling { cliques, labels })
}

/// All independent sets of exactly `size` vertices, each sorted, in
/// lexicographic order.
pub fn cocliques_of_size(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    let n = g.n;
    // complement rows restricted to other vertices
    let mask = full_set(n);
    let non_nbrs: Vec<Vec<u64>> = (0..n)
        .map(|u| {
            let mut r: Vec<u64> = g.row(u).iter().zip(&mask).map(|(a, m)| !a & m).collect();
            r[u / 64] &= !(1 << (u % 64));
            r
        })
        .collect();

    // greedy partition of the candidates into cliques of g; a coclique takes
    // at most one vertex from each
    let clique_cover_bound = |cand: &[u64]| -> usize {
        let mut rest = cand.to_vec();
        let mut parts = 0;
        while let Some(v) = first_bit(&rest) {
            parts += 1;
            let mut clique: Vec<u64> = g.row(v).to_vec();
            rest[v / 64] &= !(1 << (v % 64));
            loop {
                let next = rest.iter().zip(&clique).enumerate().find_map(|(i, (r, c))| {
                    let x = r & c;
                    (x != 0).then(|| i * 64 + x.trailing_zeros() as usize)
                });
                let Some(w) = next else { break };
                rest[w / 64] &= !(1 << (w % 64));
                for (c, r) in clique.iter_mut().zip(g.row(w)) {
                    *c &= r;
                }
            }
        }
        parts
    };

    fn search(
        size: usize,
        current: &mut Vec<usize>,
        cand: Vec<u64>,
        non_nbrs: &[Vec<u64>],
        bound: &dyn Fn(&[u64]) -> usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        let need = size - current.len();
        let avail: usize = cand.iter().map(|w| w.count_ones() as usize).sum();
        if avail < need || bound(&cand) < need {
            return;
        }
        for v in bits(&cand).collect::<Vec<_>>() {
            let next: Vec<u64> = cand
                .iter()
                .zip(&non_nbrs[v])
                .enumerate()
                .map(|(i, (c, r))| c & r & above_mask(i, v))
                .collect();
            current.push(v);
            search(size, current, next, non_nbrs, bound, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    if size == 0 {
        return vec![Vec::new()];
    }
    search(size, &mut Vec::new(), mask, &non_nbrs, &clique_cover_bound, &mut out);
    out
}

/// Export formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    AdjacencyJson,
    EdgeList,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "adjacency-json" | "json" => Ok(Format::AdjacencyJson),
            "edge-list" => Ok(Format::EdgeList),
            other => Err(Error::UnsupportedFormat(other.into())),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct AdjacencyJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

pub fn export(g: &Graph, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Graph6 => Ok(to_graph6(g).into_bytes()),
        Format::AdjacencyJson => serde_json::to_vec(&AdjacencyJson { n: g.n, edges: g.edges() })
            .map_err(|e| Error::InvalidInput(e.to_string())),
        Format::EdgeList => {
            let mut s = String::new();
            for (u, v) in g.edges() {
                writeln!(s, "{u} {v}").expect("writing to a String");
            }
            Ok(s.into_bytes())
        }
    }
}

/// graph6 encoding without trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n;
    let mut out: Vec<u8> = if n <= 62 {
        vec![n as u8 + 63]
    } else {
        vec![126, (n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63]
            .into_iter()
            .enumerate()
            .map(|(i, b)| if i == 0 { b } else { b + 63 })
            .collect()
    };
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bad = |msg: &str| Error::Parse(format!("graph6: {msg}"));
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let (n, body) = match bytes {
        [] => return Err(bad("empty input")),
        [126, 126, ..] => return Err(bad("graphs above 258047 vertices are not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated size"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[3..])
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(bad("body length does not match vertex count"));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..body.len() * 6).any(bit) {
        return Err(bad("nonzero padding"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.set(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub(crate) fn triangular(m: usize) -> Graph {
        let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
        Graph::from_fn(pairs.len(), |u, v| {
            let (a, b) = pairs[u];
            let (c, d) = pairs[v];
            a == c || a == d || b == c || b == d
        })
    }

    #[test]
    fn components_of_small_graphs() {
        assert_eq!(components(&Graph::empty(4)), vec![vec![0], vec![1], vec![2], vec![3]]);
        let k4 = Graph::from_fn(4, |_, _| true);
        assert_eq!(components(&k4), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn srg_of_pentagon_and_t7() {
        assert_eq!(srg_check(&cycle(5)).unwrap(), SrgCertificate::new(5, 2, 0, 1));
        let t7 = triangular(7);
        let cert = srg_check(&t7).unwrap();
        assert_eq!(cert, SrgCertificate::new(21, 10, 5, 4));
        assert!(cert.is_feasible());
        assert!(srg_matrix_identity(&t7, &cert));
        assert!(!srg_matrix_identity(&t7, &SrgCertificate::new(21, 10, 5, 3)));
        assert_eq!(srg_check(&Graph::empty(3)), Err(Error::NotConnected));
        assert!(matches!(srg_check(&cycle(6)), Err(Error::NotSrg(_))));
    }

    #[test]
    fn t7_labels() {
        let lab = t7_certificate(&triangular(7)).unwrap();
        assert_eq!(lab.cliques.len(), 7);
        assert!(t7_certificate(&cycle(21)).is_err());
    }

    #[test]
    fn cocliques() {
        assert_eq!(cocliques_of_size(&cycle(5), 2).len(), 5);
        assert!(cocliques_of_size(&Graph::from_fn(6, |_, _| true), 2).is_empty());
        // independent sets of T(7) are matchings of K7: 105 of size 3
        assert_eq!(cocliques_of_size(&triangular(7), 3).len(), 105);
        assert!(cocliques_of_size(&triangular(7), 4).is_empty());
    }

    #[test]
    fn graph6_examples() {
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&cycle(5)), "Dhc");
        let g = from_graph6("Dhc").unwrap();
        assert_eq!(g, cycle(5));
        let big = cycle(100);
        assert_eq!(from_graph6(&to_graph6(&big)).unwrap(), big);
        assert!(from_graph6("Dh").is_err());
        assert!(from_graph6("Dhd").is_err());
    }

    #[test]
    fn formats() {
        assert_eq!("edge-list".parse::<Format>().unwrap(), Format::EdgeList);
        assert!(matches!("dot".parse::<Format>(), Err(Error::UnsupportedFormat(_))));
        let txt = String::from_utf8(export(&cycle(5), Format::EdgeList).unwrap()).unwrap();
        assert_eq!(txt.lines().count(), 5);
        let json = String::from_utf8(export(&cycle(3), Format::AdjacencyJson).unwrap()).unwrap();
        assert_eq!(json, r#"{"n":3,"edges":[[0,1],[0,2],[1,2]]}"#);
    }
}
