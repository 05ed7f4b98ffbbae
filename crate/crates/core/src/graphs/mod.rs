//! Simple graphs with bitset adjacency, strong-regularity checks, named
//! generators, clique enumeration and graph6 I/O.

mod cliques;
mod generators;
mod graph6;
mod matrix;

use serde::{Deserialize, Serialize};

pub use cliques::{count_triangles, k_cliques};
pub use generators::{cyclic_latin_square, GraphSpec};
pub use graph6::{decode_graph6, encode_graph6, read_graph6_file};
pub use matrix::{decode_adjacency_matrices, read_graph_file};

/// A finite simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={})", self.n, self.edge_count())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let mut g = Graph::empty(n);
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Adds the edge `{a, b}`; loops are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.bits[a * self.words + b / 64] |= 1 << (b % 64);
        self.bits[b * self.words + a / 64] |= 1 << (a % 64);
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        self.bits[a * self.words + b / 64] &= !(1 << (b % 64));
        self.bits[b * self.words + a / 64] &= !(1 << (a % 64));
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    #[inline]
    pub fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.words..(a + 1) * self.words]
    }

    pub fn degree(&self, a: usize) -> usize {
        self.row(a).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        bit_iter(self.row(a))
    }

    /// `|N(a) ∩ N(b)|`.
    #[inline]
    pub fn common_neighbors(&self, a: usize, b: usize) -> usize {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .map(|(x, y)| (x & y).count_ones() as usize)
            .sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| self.neighbors(a).filter(move |&b| b > a).map(move |b| (a, b)))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|a| self.degree(a)).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.has_edge(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// The graph with vertex `i` renamed `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph::from_edges(self.n, self.edges().map(|(a, b)| (perm[a], perm[b])))
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|a| self.degree(a) == d).then_some(d)
    }

    /// Adjacency lists, one line per vertex: `v: n1 n2 ...`.
    pub fn to_adjacency_text(&self) -> String {
        let mut out = String::new();
        for a in 0..self.n {
            let nb: Vec<String> = self.neighbors(a).map(|b| b.to_string()).collect();
            out.push_str(&format!("{a}: {}\n", nb.join(" ")));
        }
        out
    }
}

pub(crate) fn bit_iter(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            }
        })
    })
}

/// Parameters `(v, d, λ, μ)` of a strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: u64,
    pub d: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    pub fn new(v: u64, d: u64, lambda: u64, mu: u64) -> Self {
        SrgParams { v, d, lambda, mu }
    }

    /// `(v - d - 1) μ = d (d - 1 - λ)`.
    pub fn identity_holds(&self) -> bool {
        let lhs = (self.v as i128 - self.d as i128 - 1) * self.mu as i128;
        let rhs = self.d as i128 * (self.d as i128 - 1 - self.lambda as i128);
        lhs == rhs
    }

    /// Parameters of the complementary graph.
    pub fn complement(&self) -> SrgParams {
        let (v, d, l, m) = (self.v, self.d, self.lambda, self.mu);
        SrgParams {
            v,
            d: v - d - 1,
            lambda: v + m - 2 - 2 * d,
            mu: v + l - 2 * d,
        }
    }

    /// `0 < μ < d`.
    pub fn is_primitive(&self) -> bool {
        self.mu > 0 && self.mu < self.d
    }

    pub fn as_tuple(&self) -> (u64, u64, u64, u64) {
        (self.v, self.d, self.lambda, self.mu)
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SRG({},{},{},{})", self.v, self.d, self.lambda, self.mu)
    }
}

/// Strongly regular parameters of `g`, or `None` when `g` is not strongly
/// regular. Complete and edgeless graphs give `None`.
pub fn srg_check(g: &Graph) -> Option<SrgParams> {
    let n = g.order();
    if n < 2 {
        return None;
    }
    let d = g.regular_degree()?;
    if d == 0 || d == n - 1 {
        return None;
    }
    let (mut lambda, mut mu) = (None, None);
    for a in 0..n {
        for b in a + 1..n {
            let c = g.common_neighbors(a, b);
            let slot = if g.has_edge(a, b) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return None,
                _ => {}
            }
        }
    }
    Some(SrgParams::new(n as u64, d as u64, lambda? as u64, mu? as u64))
}
