//! Deformations `x_i - x_j = -k-ε(i,j), -k, …, k, k+ε(j,i)` of the braid
//! arrangement, encoded by a directed graph.

use itertools::Itertools;
use serde::Serialize;

use crate::elim::find_ordering;
use crate::error::{invalid, Result};
use crate::graph::{DirectedGraph, EdgeBicoloredGraph, EdgeColor};
use crate::multibraid::{classify, MultiBraidSpec, Verdict};
use crate::oracle::{Hyperplane, MultiArrangement};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationSpec {
    pub digraph: DirectedGraph,
    pub k: u32,
}

impl DeformationSpec {
    pub fn new(digraph: DirectedGraph, k: u32) -> Self {
        DeformationSpec { digraph, k }
    }

    fn eps(&self, i: usize, j: usize) -> i64 {
        self.digraph.has_arc(i, j) as i64
    }

    /// Sorted distinct constants `c` with `x_i - x_j = c` in the family, `i < j`.
    pub fn constants(&self, i: usize, j: usize) -> Vec<i64> {
        let k = self.k as i64;
        let mut c: Vec<i64> = (-k..=k).collect();
        c.push(-k - self.eps(i, j));
        c.push(k + self.eps(j, i));
        c.sort_unstable();
        c.dedup();
        c
    }
}

/// Affine hyperplanes `normal · x = constant`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineArrangement {
    pub dim: usize,
    pub hyperplanes: Vec<(Vec<i64>, i64)>,
}

impl AffineArrangement {
    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// Central arrangement in one more coordinate `z` (last): `normal · x - c z = 0`
    /// for each affine hyperplane, plus `z = 0`.
    pub fn cone<T: Scalar>(&self) -> Result<MultiArrangement<T>> {
        let dim = self.dim + 1;
        let mut hs: Vec<Hyperplane<T>> = self
            .hyperplanes
            .iter()
            .map(|(normal, c)| {
                let mut v: Vec<T> = normal.iter().map(|&a| T::from_int(a)).collect();
                v.push(T::from_int(-c));
                Hyperplane { normal: v, mult: 1 }
            })
            .collect();
        let mut infinity = vec![T::zero(); dim];
        infinity[dim - 1] = T::one();
        hs.push(Hyperplane { normal: infinity, mult: 1 });
        MultiArrangement::new(dim, hs)
    }
}

pub fn build(spec: &DeformationSpec) -> Result<AffineArrangement> {
    let n = spec.digraph.vertex_count();
    if n < 2 {
        return Err(invalid("a deformation needs at least two vertices"));
    }
    let mut hyperplanes = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for c in spec.constants(i, j) {
                let mut normal = vec![0; n];
                normal[i - 1] = 1;
                normal[j - 1] = -1;
                hyperplanes.push((normal, c));
            }
        }
    }
    Ok(AffineArrangement { dim: n, hyperplanes })
}

/// The affine arrangement and its cone (ambient dimension `ℓ + 2`).
pub fn build_and_cone<T: Scalar>(spec: &DeformationSpec) -> Result<(AffineArrangement, MultiArrangement<T>)> {
    let affine = build(spec)?;
    let cone = affine.cone()?;
    Ok((affine, cone))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Condition {
    A1,
    A2,
}

/// A triple `(i, j, h)`, `i, j < h`, at which a condition fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub condition: Condition,
    pub triple: (usize, usize, usize),
}

/// Scans all triples `i != j < h`:
/// A1: `(i,j)` implies `(i,h)` or `(h,j)`; A2: `(i,h)` and `(h,j)` imply `(i,j)`.
pub fn check_a1_a2(g: &DirectedGraph) -> (bool, bool, Option<Witness>) {
    let (mut a1, mut a2, mut witness) = (true, true, None);
    let n = g.vertex_count();
    for h in 1..=n {
        for i in 1..h {
            for j in (1..h).filter(|&j| j != i) {
                let fail1 = g.has_arc(i, j) && !g.has_arc(i, h) && !g.has_arc(h, j);
                let fail2 = g.has_arc(i, h) && g.has_arc(h, j) && !g.has_arc(i, j);
                for (fails, flag, cond) in [(fail1, &mut a1, Condition::A1), (fail2, &mut a2, Condition::A2)] {
                    if fails {
                        *flag = false;
                        witness.get_or_insert(Witness { condition: cond, triple: (i, j, h) });
                    }
                }
            }
        }
    }
    (a1, a2, witness)
}

/// Largest vertex count for which [`conforming_labeling`] searches relabelings.
pub const MAX_RELABEL_VERTICES: usize = 8;

/// A relabeling `perm` (vertex `v` becomes `perm[v-1]`) under which (A1) and
/// (A2) both hold, if one exists. Relabeling permutes coordinates, so the
/// cone's freeness is unchanged.
pub fn conforming_labeling(g: &DirectedGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n > MAX_RELABEL_VERTICES {
        return None;
    }
    let arcs = g.arcs();
    (1..=n).permutations(n).find(|perm| {
        let relabeled: Vec<_> = arcs.iter().map(|&(i, j)| (perm[i - 1], perm[j - 1])).collect();
        let h = DirectedGraph::from_arcs(n, &relabeled).expect("permutation keeps arcs valid");
        let (a1, a2, _) = check_a1_a2(&h);
        a1 && a2
    })
}

/// Ziegler restriction onto the hyperplane at infinity: `m(H_ij)` counts the
/// constants for `{i,j}`, i.e. `2k + 1 + ε(i,j) + ε(j,i)`, encoded with
/// `k' = k + 1`, `n ≡ 0` and colors Plus/Absent/Minus for 2/1/0 arcs.
pub fn ziegler_spec(spec: &DeformationSpec) -> MultiBraidSpec {
    let n = spec.digraph.vertex_count();
    let mut g = EdgeBicoloredGraph::edgeless(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let color = match spec.eps(i, j) + spec.eps(j, i) {
                2 => EdgeColor::Plus,
                1 => EdgeColor::Absent,
                _ => EdgeColor::Minus,
            };
            g.set_color(i, j, color);
        }
    }
    MultiBraidSpec::uniform(spec.k + 1, g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DeformationStatus {
    Free,
    NonFree,
    Undetermined,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeformationVerdict {
    pub status: DeformationStatus,
    pub a1: bool,
    pub a2: bool,
    pub witness_triple: Option<Witness>,
    /// Set when (A1)/(A2) fail as labeled but hold after relabeling.
    pub relabeling: Option<Vec<usize>>,
    pub ziegler_spec: MultiBraidSpec,
    pub ziegler: Verdict,
    pub note: String,
}

pub fn deformation_verdict(spec: &DeformationSpec) -> DeformationVerdict {
    let (a1, a2, witness_triple) = check_a1_a2(&spec.digraph);
    let ziegler_spec = ziegler_spec(spec);
    let ziegler = classify(&ziegler_spec);
    let relabeling = if a1 && a2 { None } else { conforming_labeling(&spec.digraph) };
    let (status, note) = if a1 && a2 {
        (DeformationStatus::Free, "(A1) and (A2) hold; the cone is free".to_string())
    } else if let Some(perm) = &relabeling {
        (DeformationStatus::Free, format!("(A1) and (A2) hold after relabeling by {perm:?}; the cone is free"))
    } else if find_ordering(ziegler_spec.graph()).is_none() {
        (
            DeformationStatus::NonFree,
            "Ziegler restriction onto the hyperplane at infinity has a non-eliminable graph, so it is not free and neither is the cone"
                .to_string(),
        )
    } else {
        (
            DeformationStatus::Undetermined,
            format!(
                "(A1)/(A2) fail under every labeling but the Ziegler restriction is free; freeness of \
                 the cone is open (conjecturally non-free when k = 0; here k = {})",
                spec.k
            ),
        )
    };
    DeformationVerdict { status, a1, a2, witness_triple, relabeling, ziegler_spec, ziegler, note }
}
