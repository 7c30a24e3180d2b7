//! Bicolor-eliminability.
//!
//! Two independent deciders live here: a backtracking search for an
//! elimination ordering, and a structural test (chordality of both color
//! classes, eliminability of every 4-vertex induced subgraph, absence of
//! mountains and hills). [`is_eliminable`] runs both.

use std::collections::HashSet;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::{EdgeBicoloredGraph, EdgeColor};

/// A bijection from vertices `1..=n` to ranks `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ordering {
    rank_of: Vec<usize>,
    vertex_at: Vec<usize>,
}

impl Ordering {
    pub fn identity(n: usize) -> Self {
        let ids: Vec<usize> = (1..=n).collect();
        Ordering { rank_of: ids.clone(), vertex_at: ids }
    }

    /// `ranks[v - 1]` is the rank of vertex `v`.
    pub fn from_ranks(ranks: Vec<usize>) -> Result<Self> {
        let n = ranks.len();
        let mut vertex_at = vec![0; n];
        for (v, &r) in ranks.iter().enumerate() {
            if r == 0 || r > n || vertex_at[r - 1] != 0 {
                return Err(invalid("ranks are not a bijection onto 1..=n"));
            }
            vertex_at[r - 1] = v + 1;
        }
        Ok(Ordering { rank_of: ranks, vertex_at })
    }

    /// `seq[r - 1]` is the vertex of rank `r`.
    pub fn from_sequence(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut rank_of = vec![0; n];
        for (r, &v) in seq.iter().enumerate() {
            if v == 0 || v > n || rank_of[v - 1] != 0 {
                return Err(invalid("sequence is not a permutation of 1..=n"));
            }
            rank_of[v - 1] = r + 1;
        }
        Ok(Ordering { rank_of, vertex_at: seq })
    }

    pub fn len(&self) -> usize {
        self.rank_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank_of.is_empty()
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank_of[v - 1]
    }

    pub fn vertex_at(&self, rank: usize) -> usize {
        self.vertex_at[rank - 1]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank_of
    }

    /// Vertices listed by increasing rank.
    pub fn sequence(&self) -> &[usize] {
        &self.vertex_at
    }
}

/// Tilde-degrees `d_1..d_n` along an elimination ordering, indexed by rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeVector(pub Vec<i64>);

impl DegreeVector {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn sorted(&self) -> Vec<i64> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// True when the triple with apex `k` (0-based) exhibits one of the two
/// forbidden patterns for the unordered base pair `{i, j}`.
#[inline]
fn triple_fires(g: &EdgeBicoloredGraph, i: usize, j: usize, k: usize) -> bool {
    let cik = g.color0(i, k);
    let cjk = g.color0(j, k);
    let cij = g.color0(i, j);
    // (1) both apex edges of color σ, base not σ
    if cik.is_edge() && cik == cjk && cij != cik {
        return true;
    }
    // (2) apex edge σ, base edge -σ, other apex pair absent
    (cik.is_edge() && cij == cik.swapped() && !cjk.is_edge())
        || (cjk.is_edge() && cij == cjk.swapped() && !cik.is_edge())
}

/// Whether 0-based `v` may take the largest rank among the vertex set `mask`.
fn sink_eligible(g: &EdgeBicoloredGraph, mask: u64, v: usize) -> bool {
    let rest: Vec<usize> = (0..g.vertex_count()).filter(|&u| u != v && mask >> u & 1 == 1).collect();
    rest.iter().tuple_combinations().all(|(&i, &j)| !triple_fires(g, i, j, v))
}

pub fn is_valid_ordering(g: &EdgeBicoloredGraph, nu: &Ordering) -> bool {
    let n = g.vertex_count();
    if nu.len() != n {
        return false;
    }
    (1..=n).all(|r| {
        let k = nu.vertex_at(r) - 1;
        let lower: Vec<usize> = (1..r).map(|s| nu.vertex_at(s) - 1).collect();
        lower.iter().tuple_combinations().all(|(&i, &j)| !triple_fires(g, i, j, k))
    })
}

/// Backtracking search for an elimination ordering. Sink choices are tried in
/// increasing vertex order and failed vertex subsets are memoized.
pub fn find_ordering(g: &EdgeBicoloredGraph) -> Option<Ordering> {
    let n = g.vertex_count();
    assert!(n <= 64, "ordering search supports at most 64 vertices");
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut failed = HashSet::new();
    let mut sinks = Vec::with_capacity(n);
    if search(g, full, &mut failed, &mut sinks) {
        sinks.reverse();
        Some(Ordering::from_sequence(sinks.into_iter().map(|v| v + 1).collect()).expect("permutation"))
    } else {
        None
    }
}

fn search(g: &EdgeBicoloredGraph, mask: u64, failed: &mut HashSet<u64>, sinks: &mut Vec<usize>) -> bool {
    if mask.count_ones() <= 2 {
        // every ordering of at most two vertices is valid
        let mut rest: Vec<usize> = (0..g.vertex_count()).filter(|&u| mask >> u & 1 == 1).collect();
        rest.reverse();
        sinks.extend(rest);
        return true;
    }
    if failed.contains(&mask) {
        return false;
    }
    for v in 0..g.vertex_count() {
        if mask >> v & 1 == 0 || !sink_eligible(g, mask, v) {
            continue;
        }
        sinks.push(v);
        if search(g, mask & !(1 << v), failed, sinks) {
            return true;
        }
        sinks.pop();
    }
    failed.insert(mask);
    false
}

/// Every valid ordering, by brute force over all permutations. Small graphs only.
pub fn all_valid_orderings(g: &EdgeBicoloredGraph) -> Vec<Ordering> {
    let n = g.vertex_count();
    assert!(n <= 8, "exhaustive ordering enumeration is limited to 8 vertices");
    (1..=n)
        .permutations(n)
        .map(|seq| Ordering::from_sequence(seq).expect("permutation"))
        .filter(|nu| is_valid_ordering(g, nu))
        .collect()
}

pub fn tilde_degrees(g: &EdgeBicoloredGraph, nu: &Ordering) -> Result<DegreeVector> {
    if !is_valid_ordering(g, nu) {
        return Err(Error::InvalidOrdering);
    }
    let n = g.vertex_count();
    let d = (1..=n)
        .map(|r| {
            let v = nu.vertex_at(r);
            (1..r).map(|s| g.color(v, nu.vertex_at(s)).sign()).sum()
        })
        .collect();
    Ok(DegreeVector(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AddedEdge {
    /// `(lower, upper)` where `upper` is the block vertex.
    pub pair: (usize, usize),
    pub color: EdgeColor,
    /// Rank of the block vertex.
    pub block: usize,
}

/// A complete bicolor-eliminable filtration: `steps[0]` is edgeless,
/// `steps[i + 1]` adds `added[i]` to `steps[i]`, and the last step is the graph.
#[derive(Debug, Clone)]
pub struct Filtration {
    pub steps: Vec<EdgeBicoloredGraph>,
    pub added: Vec<AddedEdge>,
    pub ordering: Ordering,
}

impl Filtration {
    /// Re-checks every structural invariant against the target graph.
    pub fn verify(&self, g: &EdgeBicoloredGraph) -> bool {
        let n = g.vertex_count();
        if self.steps.first() != Some(&EdgeBicoloredGraph::edgeless(n)) || self.steps.last() != Some(g) {
            return false;
        }
        if self.steps.len() != self.added.len() + 1 {
            return false;
        }
        let mut last_block = 0;
        for (w, e) in self.steps.windows(2).zip(&self.added) {
            let (a, b) = e.pair;
            if w[1].edge_count() != w[0].edge_count() + 1
                || w[0].color(a, b).is_edge()
                || w[1].color(a, b) != e.color
                || self.ordering.rank(b) != e.block
                || self.ordering.rank(a) >= e.block
                || e.block < last_block
                || !is_valid_ordering(&w[1], &self.ordering)
            {
                return false;
            }
            let mut back = w[1].clone();
            back.set_color(a, b, EdgeColor::Absent);
            if back != w[0] {
                return false;
            }
            last_block = e.block;
        }
        true
    }
}

/// Builds a complete filtration by repeatedly deleting the edge from the
/// highest block vertex `l` to a ≺-maximal neighbour, where `i ≺ j` means
/// `{i,j}` and `{i,l}` share a color and `{j,l}` has the other one.
/// Ties among maximal neighbours delete the largest index first, so that
/// within each block edges are added by increasing partner index.
pub fn complete_filtration(g: &EdgeBicoloredGraph, nu: &Ordering) -> Result<Filtration> {
    if !is_valid_ordering(g, nu) {
        return Err(Error::InvalidOrdering);
    }
    let n = g.vertex_count();
    let mut h = g.clone();
    let mut removed = Vec::new();
    loop {
        let top = (1..=n).rev().map(|r| nu.vertex_at(r)).find(|&v| (1..=n).any(|u| u != v && h.color(u, v).is_edge()));
        let Some(l) = top else { break };
        let nbrs: Vec<usize> = (1..=n).filter(|&u| u != l && h.color(u, l).is_edge()).collect();
        let precedes = |i: usize, j: usize| {
            let c = h.color(i, l);
            i != j && h.color(i, j) == c && h.color(j, l) == c.swapped()
        };
        let maximal: Vec<usize> = nbrs.iter().copied().filter(|&j| !nbrs.iter().any(|&i| precedes(j, i))).collect();
        let Some(&j) = maximal.last() else {
            return Err(Error::Rejected("neighbour relation has no maximal element".into()));
        };
        let color = h.color(j, l);
        h.set_color(j, l, EdgeColor::Absent);
        if !is_valid_ordering(&h, nu) {
            return Err(Error::Rejected(format!("deleting {{{j},{l}}} broke the ordering")));
        }
        removed.push(AddedEdge { pair: (j, l), color, block: nu.rank(l) });
    }
    removed.reverse();
    let mut steps = vec![h];
    for e in &removed {
        let mut next = steps.last().unwrap().clone();
        next.set_color(e.pair.0, e.pair.1, e.color);
        steps.push(next);
    }
    Ok(Filtration { steps, added: removed, ordering: nu.clone() })
}

/// Chordality by repeated deletion of simplicial vertices.
pub fn is_chordal(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    let mut alive = vec![true; n];
    for _ in 0..n {
        let simplicial = (0..n).find(|&v| {
            alive[v] && {
                let nb: Vec<usize> = (0..n).filter(|&u| alive[u] && adj[v][u]).collect();
                nb.iter().tuple_combinations().all(|(&a, &b)| adj[a][b])
            }
        });
        match simplicial {
            Some(v) => alive[v] = false,
            None => return false,
        }
    }
    true
}

/// `(v_1, …, v_n; ω)`: a path of (-σ)-edges whose interior is σ-joined to ω,
/// with no other edges among these vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mountain {
    pub sigma: EdgeColor,
    pub path: Vec<usize>,
    pub apex: usize,
}

/// `(v_1, …, v_n; ω_1, ω_2)`: a path of (-σ)-edges, ω_1 σ-joined to
/// `v_1..v_{n-1}`, ω_2 to `v_2..v_n`, `{ω_1, ω_2}` a σ-edge, nothing else.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hill {
    pub sigma: EdgeColor,
    pub path: Vec<usize>,
    pub apexes: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub chordal_plus: bool,
    pub chordal_minus: bool,
    pub bad_quadruple: Option<[usize; 4]>,
    pub mountain: Option<Mountain>,
    pub hill: Option<Hill>,
}

impl StructuralReport {
    pub fn passes(&self) -> bool {
        self.chordal_plus
            && self.chordal_minus
            && self.bad_quadruple.is_none()
            && self.mountain.is_none()
            && self.hill.is_none()
    }
}

pub fn structural_check(g: &EdgeBicoloredGraph) -> StructuralReport {
    let n = g.vertex_count();
    let bad_quadruple = (1..=n).combinations(4).find_map(|s| {
        let sub = g.induced_subgraph(&s).expect("valid subset");
        find_ordering(&sub).is_none().then(|| [s[0], s[1], s[2], s[3]])
    });
    StructuralReport {
        chordal_plus: is_chordal(&g.one_colored_part(EdgeColor::Plus)),
        chordal_minus: is_chordal(&g.one_colored_part(EdgeColor::Minus)),
        bad_quadruple,
        mountain: find_mountain(g),
        hill: find_hill(g),
    }
}

/// Extends an induced (-σ)-path: `u` must continue the path from its last
/// vertex and avoid every earlier path vertex.
fn extends_path(g: &EdgeBicoloredGraph, path: &[usize], u: usize, anti: EdgeColor) -> bool {
    let (last, earlier) = path.split_last().expect("non-empty path");
    !path.contains(&u) && g.color0(*last, u) == anti && earlier.iter().all(|&p| !g.color0(p, u).is_edge())
}

pub fn find_mountain(g: &EdgeBicoloredGraph) -> Option<Mountain> {
    let n = g.vertex_count();
    for sigma in [EdgeColor::Plus, EdgeColor::Minus] {
        for apex in 0..n {
            for start in (0..n).filter(|&v| v != apex && !g.color0(v, apex).is_edge()) {
                let mut path = vec![start];
                if let Some(p) = grow_mountain(g, sigma, apex, &mut path) {
                    return Some(Mountain { sigma, path: p.iter().map(|v| v + 1).collect(), apex: apex + 1 });
                }
            }
        }
    }
    None
}

fn grow_mountain(g: &EdgeBicoloredGraph, sigma: EdgeColor, apex: usize, path: &mut Vec<usize>) -> Option<Vec<usize>> {
    let anti = sigma.swapped();
    for u in (0..g.vertex_count()).filter(|&u| u != apex) {
        if !extends_path(g, path, u, anti) {
            continue;
        }
        let to_apex = g.color0(u, apex);
        if !to_apex.is_edge() && path.len() >= 2 {
            let mut found = path.clone();
            found.push(u);
            return Some(found);
        }
        if to_apex == sigma {
            path.push(u);
            if let Some(found) = grow_mountain(g, sigma, apex, path) {
                return Some(found);
            }
            path.pop();
        }
    }
    None
}

pub fn find_hill(g: &EdgeBicoloredGraph) -> Option<Hill> {
    let n = g.vertex_count();
    for sigma in [EdgeColor::Plus, EdgeColor::Minus] {
        for w1 in 0..n {
            for w2 in (0..n).filter(|&w| w != w1 && g.color0(w1, w) == sigma) {
                let starts =
                    (0..n).filter(|&v| v != w1 && v != w2 && g.color0(v, w1) == sigma && !g.color0(v, w2).is_edge());
                for start in starts {
                    let mut path = vec![start];
                    if let Some(p) = grow_hill(g, sigma, (w1, w2), &mut path) {
                        return Some(Hill {
                            sigma,
                            path: p.iter().map(|v| v + 1).collect(),
                            apexes: (w1 + 1, w2 + 1),
                        });
                    }
                }
            }
        }
    }
    None
}

fn grow_hill(
    g: &EdgeBicoloredGraph,
    sigma: EdgeColor,
    (w1, w2): (usize, usize),
    path: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let anti = sigma.swapped();
    for u in (0..g.vertex_count()).filter(|&u| u != w1 && u != w2) {
        if !extends_path(g, path, u, anti) {
            continue;
        }
        let (c1, c2) = (g.color0(u, w1), g.color0(u, w2));
        if c2 == sigma && !c1.is_edge() {
            let mut found = path.clone();
            found.push(u);
            return Some(found);
        }
        if c1 == sigma && c2 == sigma {
            path.push(u);
            if let Some(found) = grow_hill(g, sigma, (w1, w2), path) {
                return Some(found);
            }
            path.pop();
        }
    }
    None
}

/// Verdicts of both deciders for one graph.
#[derive(Debug, Clone, Serialize)]
pub struct Evidence {
    pub eliminable: bool,
    #[serde(serialize_with = "ser_ordering")]
    pub ordering: Option<Ordering>,
    pub structural: StructuralReport,
}

fn ser_ordering<S: serde::Serializer>(o: &Option<Ordering>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match o {
        Some(nu) => s.collect_seq(nu.sequence()),
        None => s.serialize_none(),
    }
}

impl Evidence {
    /// False only if the two deciders disagree, which indicates a bug.
    pub fn consistent(&self) -> bool {
        self.eliminable == self.structural.passes()
    }
}

pub fn is_eliminable(g: &EdgeBicoloredGraph) -> Evidence {
    let ordering = find_ordering(g);
    Evidence { eliminable: ordering.is_some(), ordering, structural: structural_check(g) }
}
