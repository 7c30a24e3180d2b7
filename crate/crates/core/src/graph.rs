//! Edge-bicolored graphs, directed graphs, canonical forms and census
//! enumeration.
//!
//! Vertices are numbered from 1 in every public signature. Colors are stored
//! for every unordered pair (row-major upper triangle), with
//! [`EdgeColor::Absent`] as an explicit value.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Largest vertex count accepted by [`EdgeBicoloredGraph::canonical_key`].
pub const MAX_CANONICAL_VERTICES: usize = 7;
/// Largest vertex count accepted by [`enumerate_classes`].
pub const MAX_ENUMERATION_VERTICES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeColor {
    Absent,
    Plus,
    Minus,
}

impl EdgeColor {
    pub const ALL: [EdgeColor; 3] = [EdgeColor::Absent, EdgeColor::Plus, EdgeColor::Minus];

    /// Plus and Minus exchanged, Absent fixed.
    pub fn swapped(self) -> Self {
        match self {
            EdgeColor::Plus => EdgeColor::Minus,
            EdgeColor::Minus => EdgeColor::Plus,
            EdgeColor::Absent => EdgeColor::Absent,
        }
    }

    pub fn is_edge(self) -> bool {
        self != EdgeColor::Absent
    }

    /// +1, -1 or 0.
    pub fn sign(self) -> i64 {
        match self {
            EdgeColor::Plus => 1,
            EdgeColor::Minus => -1,
            EdgeColor::Absent => 0,
        }
    }

    /// Key serialization: Absent/Plus/Minus as 0/1/2.
    pub fn code(self) -> u8 {
        match self {
            EdgeColor::Absent => 0,
            EdgeColor::Plus => 1,
            EdgeColor::Minus => 2,
        }
    }

    pub fn from_code(c: u8) -> Option<Self> {
        match c {
            0 => Some(EdgeColor::Absent),
            1 => Some(EdgeColor::Plus),
            2 => Some(EdgeColor::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeColor::Absent => "absent",
            EdgeColor::Plus => "plus",
            EdgeColor::Minus => "minus",
        })
    }
}

/// Number of unordered pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the 0-based pair `{a, b}` (a != b) in row-major upper-triangle order.
#[inline]
pub(crate) fn pair_index(n: usize, a: usize, b: usize) -> usize {
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeBicoloredGraph {
    n: usize,
    colors: Vec<EdgeColor>,
}

impl EdgeBicoloredGraph {
    /// The edgeless graph on `n ≥ 1` vertices.
    pub fn edgeless(n: usize) -> Self {
        assert!(n > 0, "a graph needs at least one vertex");
        EdgeBicoloredGraph { n, colors: vec![EdgeColor::Absent; pair_count(n)] }
    }

    /// The complete graph on `n` vertices with every edge of one color.
    pub fn complete(n: usize, color: EdgeColor) -> Self {
        assert!(n > 0, "a graph needs at least one vertex");
        EdgeBicoloredGraph { n, colors: vec![color; pair_count(n)] }
    }

    /// Builds a graph from 1-based Plus and Minus edge lists.
    pub fn from_edges(n: usize, plus: &[(usize, usize)], minus: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(invalid("vertex count must be positive"));
        }
        let mut g = Self::edgeless(n);
        for (list, color) in [(plus, EdgeColor::Plus), (minus, EdgeColor::Minus)] {
            for &(i, j) in list {
                g.check_pair(i, j)?;
                let cur = g.color(i, j);
                if cur.is_edge() && cur != color {
                    return Err(invalid(format!("pair {{{i},{j}}} listed as both plus and minus")));
                }
                g.set_color(i, j, color);
            }
        }
        Ok(g)
    }

    /// Graph whose upper-triangle color codes are `code` (one byte per pair).
    pub fn from_code(n: usize, code: &[u8]) -> Result<Self> {
        if n == 0 || code.len() != pair_count(n) {
            return Err(invalid("code length does not match vertex count"));
        }
        let colors = code
            .iter()
            .map(|&c| EdgeColor::from_code(c).ok_or_else(|| invalid(format!("bad color code {c}"))))
            .collect::<Result<_>>()?;
        Ok(EdgeBicoloredGraph { n, colors })
    }

    /// The labeled graph with base-3 index `index` (most significant pair first).
    pub fn from_index(n: usize, mut index: u64) -> Self {
        let p = pair_count(n);
        let mut colors = vec![EdgeColor::Absent; p];
        for slot in colors.iter_mut().rev() {
            *slot = EdgeColor::from_code((index % 3) as u8).unwrap();
            index /= 3;
        }
        EdgeBicoloredGraph { n, colors }
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(invalid(format!("self-loop at vertex {i}")));
        }
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(invalid(format!("pair {{{i},{j}}} out of range 1..={}", self.n)));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Color of the 1-based pair `{i, j}`.
    pub fn color(&self, i: usize, j: usize) -> EdgeColor {
        assert!(i != j && (1..=self.n).contains(&i) && (1..=self.n).contains(&j), "bad pair");
        self.colors[pair_index(self.n, i - 1, j - 1)]
    }

    #[inline]
    pub(crate) fn color0(&self, a: usize, b: usize) -> EdgeColor {
        self.colors[pair_index(self.n, a, b)]
    }

    pub fn set_color(&mut self, i: usize, j: usize, color: EdgeColor) {
        assert!(i != j && (1..=self.n).contains(&i) && (1..=self.n).contains(&j), "bad pair");
        self.colors[pair_index(self.n, i - 1, j - 1)] = color;
    }

    /// All 1-based pairs `(i, j)`, `i < j`, in key order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
    }

    pub fn edges_of(&self, color: EdgeColor) -> Vec<(usize, usize)> {
        self.pairs().filter(|&(i, j)| self.color(i, j) == color).collect()
    }

    pub fn plus_edges(&self) -> Vec<(usize, usize)> {
        self.edges_of(EdgeColor::Plus)
    }

    pub fn minus_edges(&self) -> Vec<(usize, usize)> {
        self.edges_of(EdgeColor::Minus)
    }

    pub fn count(&self, color: EdgeColor) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }

    pub fn edge_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_edge()).count()
    }

    /// Upper-triangle color codes, the serialization behind canonical keys.
    pub fn code(&self) -> Vec<u8> {
        self.colors.iter().map(|c| c.code()).collect()
    }

    /// Induced subgraph on the 1-based vertex set `s`, relabeled in increasing order.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Self> {
        if s.is_empty() {
            return Err(invalid("empty vertex subset"));
        }
        let mut verts = s.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if let Some(&v) = verts.iter().find(|&&v| v == 0 || v > self.n) {
            return Err(invalid(format!("vertex {v} out of range 1..={}", self.n)));
        }
        let m = verts.len();
        let mut sub = Self::edgeless(m);
        for a in 0..m {
            for b in a + 1..m {
                sub.colors[pair_index(m, a, b)] = self.color0(verts[a] - 1, verts[b] - 1);
            }
        }
        Ok(sub)
    }

    pub fn color_swap(&self) -> Self {
        EdgeBicoloredGraph { n: self.n, colors: self.colors.iter().map(|c| c.swapped()).collect() }
    }

    /// Relabels vertex `v` as `perm[v-1]` (1-based bijection).
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n || !is_permutation(perm) {
            return Err(invalid("not a permutation of the vertices"));
        }
        let mut out = Self::edgeless(self.n);
        for (i, j) in self.pairs() {
            out.set_color(perm[i - 1], perm[j - 1], self.color(i, j));
        }
        Ok(out)
    }

    /// The graph on the same vertices whose only edges are those of `color`.
    pub fn one_colored_part(&self, color: EdgeColor) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.n]; self.n];
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.color0(a, b) == color {
                    adj[a][b] = true;
                    adj[b][a] = true;
                }
            }
        }
        adj
    }

    /// Canonical key: the lexicographically least color code over all vertex
    /// relabelings, and over the global color swap when `include_swap` is set.
    pub fn canonical_key(&self, include_swap: bool) -> Result<Vec<u8>> {
        if self.n > MAX_CANONICAL_VERTICES {
            return Err(Error::UnsupportedSize(format!(
                "canonical keys are limited to {MAX_CANONICAL_VERTICES} vertices (got {})",
                self.n
            )));
        }
        Ok(Canonicalizer::new(self.n).key(self, include_swap))
    }

    pub fn to_doc(&self) -> GraphDoc {
        GraphDoc {
            vertices: self.n,
            plus: self.plus_edges().into_iter().map(|(i, j)| [i, j]).collect(),
            minus: self.minus_edges().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }
}

impl fmt::Debug for EdgeBicoloredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; plus {:?}; minus {:?})", self.n, self.plus_edges(), self.minus_edges())
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &v in p {
        if v == 0 || v > p.len() || seen[v - 1] {
            return false;
        }
        seen[v - 1] = true;
    }
    true
}

/// Precomputed pair-index tables for all permutations of `n` vertices.
pub struct Canonicalizer {
    n: usize,
    // for each permutation σ: source pair index of every target position
    tables: Vec<Vec<usize>>,
}

impl Canonicalizer {
    pub fn new(n: usize) -> Self {
        let p = pair_count(n);
        let tables = (0..n)
            .permutations(n)
            .map(|sigma| {
                let mut t = Vec::with_capacity(p);
                for i in 0..n {
                    for j in i + 1..n {
                        t.push(pair_index(n, sigma[i], sigma[j]));
                    }
                }
                t
            })
            .collect();
        Canonicalizer { n, tables }
    }

    pub fn key(&self, g: &EdgeBicoloredGraph, include_swap: bool) -> Vec<u8> {
        assert_eq!(g.n, self.n);
        let code = g.code();
        let swapped: Vec<u8> = code.iter().map(|&c| [0, 2, 1][c as usize]).collect();
        let mut best = code.clone();
        let mut cand = vec![0u8; code.len()];
        let sources: &[&Vec<u8>] = if include_swap { &[&code, &swapped] } else { &[&code] };
        for src in sources {
            for t in &self.tables {
                for (slot, &s) in cand.iter_mut().zip(t) {
                    *slot = src[s];
                }
                if cand < best {
                    best.copy_from_slice(&cand);
                }
            }
        }
        best
    }
}

/// One isomorphism class (up to color swap when requested) of labeled graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphClass {
    pub canonical_key: Vec<u8>,
    pub representative: EdgeBicoloredGraph,
    pub labeled_count: u64,
}

/// Iterates over all `3^C(n,2)` labeled colorings of `n` vertices.
pub fn all_labeled(n: usize) -> impl Iterator<Item = EdgeBicoloredGraph> {
    let total = 3u64.pow(pair_count(n) as u32);
    (0..total).map(move |i| EdgeBicoloredGraph::from_index(n, i))
}

/// Exhaustive class enumeration, sorted by canonical key.
pub fn enumerate_classes(n: usize, include_swap: bool) -> Result<Vec<GraphClass>> {
    if n == 0 {
        return Err(invalid("vertex count must be positive"));
    }
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "exhaustive enumeration is limited to {MAX_ENUMERATION_VERTICES} vertices (got {n})"
        )));
    }
    let canon = Canonicalizer::new(n);
    let mut counts: HashMap<Vec<u8>, u64> = HashMap::new();
    for g in all_labeled(n) {
        *counts.entry(canon.key(&g, include_swap)).or_default() += 1;
    }
    let mut classes: Vec<GraphClass> = counts
        .into_iter()
        .map(|(key, labeled_count)| GraphClass {
            representative: EdgeBicoloredGraph::from_code(n, &key).expect("key is a valid code"),
            canonical_key: key,
            labeled_count,
        })
        .collect();
    classes.sort_by(|a, b| a.canonical_key.cmp(&b.canonical_key));
    Ok(classes)
}

/// Directed graph without loops; `(i, j)` and `(j, i)` may coexist.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DirectedGraph {
    n: usize,
    arcs: Vec<bool>,
}

impl DirectedGraph {
    pub fn arcless(n: usize) -> Self {
        assert!(n > 0, "a graph needs at least one vertex");
        DirectedGraph { n, arcs: vec![false; n * n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::arcless(n);
        for a in 0..n {
            for b in 0..n {
                g.arcs[a * n + b] = a != b;
            }
        }
        g
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(invalid("vertex count must be positive"));
        }
        let mut g = Self::arcless(n);
        for &(i, j) in arcs {
            if i == j {
                return Err(invalid(format!("loop at vertex {i}")));
            }
            if i == 0 || j == 0 || i > n || j > n {
                return Err(invalid(format!("arc ({i},{j}) out of range 1..={n}")));
            }
            g.arcs[(i - 1) * n + (j - 1)] = true;
        }
        Ok(g)
    }

    /// The digraph whose arc set is encoded by the bits of `mask` over all
    /// ordered pairs `(i, j)`, `i != j`, in row-major order.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut g = Self::arcless(n);
        let mut bit = 0;
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    g.arcs[a * n + b] = mask >> bit & 1 == 1;
                    bit += 1;
                }
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// ε(i, j): whether the 1-based arc `(i, j)` is present.
    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        i != j && self.arcs[(i - 1) * self.n + (j - 1)]
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.has_arc(i, j))
            .collect()
    }

    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Self> {
        let mut verts = s.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if verts.is_empty() || verts.iter().any(|&v| v == 0 || v > self.n) {
            return Err(invalid("bad vertex subset"));
        }
        let mut out = Self::arcless(verts.len());
        for (a, &i) in verts.iter().enumerate() {
            for (b, &j) in verts.iter().enumerate() {
                if self.has_arc(i, j) {
                    out.arcs[a * verts.len() + b] = true;
                }
            }
        }
        Ok(out)
    }

    pub fn to_doc(&self) -> DigraphDoc {
        DigraphDoc { vertices: self.n, arcs: self.arcs().into_iter().map(|(i, j)| [i, j]).collect() }
    }
}

impl fmt::Debug for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; arcs {:?})", self.n, self.arcs())
    }
}

/// Iterates over all `2^(n(n-1))` digraphs on `n` vertices.
pub fn all_digraphs(n: usize) -> impl Iterator<Item = DirectedGraph> {
    let total = 1u64 << (n * (n - 1));
    (0..total).map(move |m| DirectedGraph::from_mask(n, m))
}

/// Graph file: `{"vertices": n, "plus": [[i,j],...], "minus": [[i,j],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub vertices: usize,
    #[serde(default)]
    pub plus: Vec<[usize; 2]>,
    #[serde(default)]
    pub minus: Vec<[usize; 2]>,
}

impl TryFrom<&GraphDoc> for EdgeBicoloredGraph {
    type Error = Error;

    fn try_from(doc: &GraphDoc) -> Result<Self> {
        let plus: Vec<_> = doc.plus.iter().map(|p| (p[0], p[1])).collect();
        let minus: Vec<_> = doc.minus.iter().map(|p| (p[0], p[1])).collect();
        EdgeBicoloredGraph::from_edges(doc.vertices, &plus, &minus)
    }
}

/// Directed graph file: `{"vertices": n, "arcs": [[i,j],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DigraphDoc {
    pub vertices: usize,
    #[serde(default)]
    pub arcs: Vec<[usize; 2]>,
}

impl TryFrom<&DigraphDoc> for DirectedGraph {
    type Error = Error;

    fn try_from(doc: &DigraphDoc) -> Result<Self> {
        let arcs: Vec<_> = doc.arcs.iter().map(|p| (p[0], p[1])).collect();
        DirectedGraph::from_arcs(doc.vertices, &arcs)
    }
}

pub fn parse_graph(text: &str) -> Result<EdgeBicoloredGraph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    EdgeBicoloredGraph::try_from(&doc)
}

pub fn parse_digraph(text: &str) -> Result<DirectedGraph> {
    let doc: DigraphDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    DirectedGraph::try_from(&doc)
}
