//! Multi-braid arrangements `m(H_ij) = 2k + n_i + n_j + m_G(H_ij)` and their
//! freeness classification by bicolor-eliminability.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::elim::{find_ordering, structural_check, tilde_degrees, DegreeVector, Ordering, StructuralReport};
use crate::error::{invalid, Error, Result};
use crate::graph::{EdgeBicoloredGraph, EdgeColor, GraphDoc};
use crate::oracle::{freeness_verdict, FreenessCertificate, Hyperplane, MultiArrangement, OracleOptions};
use crate::scalar::Scalar;
use crate::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiBraidSpec {
    k: u32,
    n: Vec<u32>,
    graph: EdgeBicoloredGraph,
}

impl MultiBraidSpec {
    pub fn new(k: u32, n: Vec<u32>, graph: EdgeBicoloredGraph) -> Result<Self> {
        if n.len() != graph.vertex_count() {
            return Err(invalid(format!("{} shifts for {} vertices", n.len(), graph.vertex_count())));
        }
        Ok(MultiBraidSpec { k, n, graph })
    }

    /// `n ≡ 0`.
    pub fn uniform(k: u32, graph: EdgeBicoloredGraph) -> Self {
        let n = vec![0; graph.vertex_count()];
        MultiBraidSpec { k, n, graph }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn shifts(&self) -> &[u32] {
        &self.n
    }

    pub fn graph(&self) -> &EdgeBicoloredGraph {
        &self.graph
    }

    /// ℓ + 1.
    pub fn vertex_count(&self) -> usize {
        self.n.len()
    }

    /// `N = (ℓ+1)k + Σ n_i`.
    pub fn big_n(&self) -> i64 {
        self.vertex_count() as i64 * self.k as i64 + self.n.iter().map(|&v| v as i64).sum::<i64>()
    }

    /// `m(H_ij)` for 1-based `i != j`; negative values are possible outside the theorem's scope.
    pub fn multiplicity(&self, i: usize, j: usize) -> i64 {
        2 * self.k as i64 + self.n[i - 1] as i64 + self.n[j - 1] as i64 + self.graph.color(i, j).sign()
    }

    /// `(i, j, m(H_ij))` for every pair `i < j`.
    pub fn multiplicities(&self) -> Vec<(usize, usize, i64)> {
        self.graph.pairs().map(|(i, j)| (i, j, self.multiplicity(i, j))).collect()
    }

    fn nonnegative_multiplicities(&self) -> Result<Vec<(usize, usize, u32)>> {
        self.multiplicities()
            .into_iter()
            .map(|(i, j, m)| {
                u32::try_from(m).map(|m| (i, j, m)).map_err(|_| invalid(format!("m(H_{i}{j}) = {m} is negative")))
            })
            .collect()
    }

    /// |m|.
    pub fn total_multiplicity(&self) -> Result<u32> {
        Ok(self.nonnegative_multiplicities()?.iter().map(|t| t.2).sum())
    }

    /// The multiarrangement on `x_i - x_j` in `ℓ + 1` coordinates (zero multiplicities dropped).
    pub fn arrangement<T: Scalar>(&self) -> Result<MultiArrangement<T>> {
        let dim = self.vertex_count();
        let hs = self
            .nonnegative_multiplicities()?
            .into_iter()
            .map(|(i, j, mult)| {
                let mut normal = vec![T::zero(); dim];
                normal[i - 1] = T::one();
                normal[j - 1] = -T::one();
                Hyperplane { normal, mult }
            })
            .collect();
        MultiArrangement::new(dim, hs)
    }

    /// The localization at the flat `x_i` equal for all `i` in `subset`.
    pub fn localization(&self, subset: &[usize]) -> Result<Self> {
        let mut s = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        let graph = self.graph.induced_subgraph(&s)?;
        MultiBraidSpec::new(self.k, s.iter().map(|&v| self.n[v - 1]).collect(), graph)
    }

    pub fn to_doc(&self) -> SpecDoc {
        SpecDoc { k: self.k, n: Some(self.n.clone()), graph: self.graph.to_doc() }
    }
}

impl fmt::Debug for MultiBraidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A(k={}, n={:?})[{:?}]", self.k, self.n, self.graph)
    }
}

impl Serialize for MultiBraidSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_doc().serialize(s)
    }
}

/// Spec file: `{"k": 1, "n": [..], "graph": {graph}}`, or the graph fields inline.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpecDoc {
    pub k: u32,
    #[serde(default)]
    pub n: Option<Vec<u32>>,
    pub graph: GraphDoc,
}

pub fn parse_spec(text: &str) -> Result<MultiBraidSpec> {
    let mut value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let obj = value.as_object_mut().ok_or_else(|| Error::Parse("spec must be an object".into()))?;
    if !obj.contains_key("graph") {
        let mut graph = serde_json::Map::new();
        for key in ["vertices", "plus", "minus"] {
            if let Some(v) = obj.remove(key) {
                graph.insert(key.to_string(), v);
            }
        }
        obj.insert("graph".into(), graph.into());
    }
    let doc: SpecDoc = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
    MultiBraidSpec::try_from(&doc)
}

impl TryFrom<&SpecDoc> for MultiBraidSpec {
    type Error = Error;

    fn try_from(doc: &SpecDoc) -> Result<Self> {
        let graph = EdgeBicoloredGraph::try_from(&doc.graph)?;
        let n = doc.n.clone().unwrap_or_else(|| vec![0; graph.vertex_count()]);
        MultiBraidSpec::new(doc.k, n, graph)
    }
}

/// Which hypothesis of the classification holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Condition {
    /// `k > 0`
    A,
    /// no Minus edges
    B,
    /// no Plus edges and every multiplicity positive
    C,
}

pub fn theorem_scope(spec: &MultiBraidSpec) -> Option<Condition> {
    let g = spec.graph();
    if spec.k > 0 {
        Some(Condition::A)
    } else if g.count(EdgeColor::Minus) == 0 {
        Some(Condition::B)
    } else if g.count(EdgeColor::Plus) == 0 && spec.multiplicities().iter().all(|t| t.2 > 0) {
        Some(Condition::C)
    } else {
        None
    }
}

/// Sorted exponent multiset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExponentMultiset(pub Vec<i64>);

impl ExponentMultiset {
    pub fn new(mut v: Vec<i64>) -> Self {
        v.sort_unstable();
        ExponentMultiset(v)
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Second elementary symmetric polynomial.
    pub fn e2(&self) -> i64 {
        self.0.iter().tuple_combinations().map(|(a, b)| a * b).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VerdictStatus {
    Free,
    NonFree,
    OutOfTheoremScope,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub condition: Option<Condition>,
    pub exponents: Option<ExponentMultiset>,
    #[serde(skip)]
    pub ordering: Option<Ordering>,
    pub tilde_degrees: Option<DegreeVector>,
    pub witness: Option<StructuralReport>,
}

/// Exponents `{0} ∪ {N + d_i : i ≥ 2}` along an elimination ordering.
fn exponents_from(spec: &MultiBraidSpec, d: &DegreeVector) -> ExponentMultiset {
    let big_n = spec.big_n();
    let mut e = vec![0];
    e.extend(d.values().iter().skip(1).map(|&di| big_n + di));
    ExponentMultiset::new(e)
}

pub fn classify(spec: &MultiBraidSpec) -> Verdict {
    let condition = theorem_scope(spec);
    let out_of_scope = Verdict {
        status: VerdictStatus::OutOfTheoremScope,
        condition,
        exponents: None,
        ordering: None,
        tilde_degrees: None,
        witness: None,
    };
    if condition.is_none() {
        return out_of_scope;
    }
    match find_ordering(spec.graph()) {
        Some(nu) => {
            let d = tilde_degrees(spec.graph(), &nu).expect("search returns valid orderings");
            Verdict {
                status: VerdictStatus::Free,
                exponents: Some(exponents_from(spec, &d)),
                ordering: Some(nu),
                tilde_degrees: Some(d),
                ..out_of_scope
            }
        }
        None => Verdict { status: VerdictStatus::NonFree, witness: Some(structural_check(spec.graph())), ..out_of_scope },
    }
}

/// `χ(t) = Π (t - r)` over `roots`; the leading factor `t` is the root 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharPoly {
    pub roots: Vec<i64>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// Coefficients from the constant term up.
    pub fn coefficients(&self) -> Vec<i128> {
        let mut c = vec![1i128];
        for &r in &self.roots {
            let mut next = vec![0i128; c.len() + 1];
            for (i, &v) in c.iter().enumerate() {
                next[i + 1] += v;
                next[i] -= v * r as i128;
            }
            c = next;
        }
        c
    }

    pub fn eval(&self, t: i64) -> i128 {
        self.roots.iter().map(|&r| (t - r) as i128).product()
    }
}

/// `χ(A, m) = t Π_{i≥2} (t - N - d_i)`; refused for non-eliminable or out-of-scope specs.
pub fn char_poly(spec: &MultiBraidSpec) -> Result<CharPoly> {
    let v = classify(spec);
    match v.status {
        VerdictStatus::Free => Ok(CharPoly { roots: v.exponents.expect("free has exponents").0 }),
        VerdictStatus::NonFree => Err(Error::NotEliminable),
        VerdictStatus::OutOfTheoremScope => Err(Error::Rejected("spec is outside the classification's scope".into())),
    }
}

/// The dual multiplicity `2k + n_i + n_j - m_G(H_ij)`, realized by swapping colors.
pub fn dual_spec(spec: &MultiBraidSpec) -> MultiBraidSpec {
    MultiBraidSpec { k: spec.k, n: spec.n.clone(), graph: spec.graph.color_swap() }
}

/// Euler restriction onto `H_{s j}` while the filtration builds the block of
/// `s`: vertex `s` disappears, `n_j` becomes `n_j + n_s + k`, and the graph is
/// the induced subgraph on the remaining vertices.
///
/// Pass the filtration step that carries the larger multiplicity on `H_{s j}`:
/// the graph after a Plus edge is added, or before a Minus edge is added.
pub fn euler_restrict_spec(spec: &MultiBraidSpec, s: usize, j: usize) -> Result<MultiBraidSpec> {
    let v = spec.vertex_count();
    if s == j || s == 0 || j == 0 || s > v || j > v {
        return Err(invalid(format!("{{{s},{j}}} is not an edge position on {v} vertices")));
    }
    if v < 2 {
        return Err(invalid("restriction needs at least two vertices"));
    }
    let keep: Vec<usize> = (1..=v).filter(|&t| t != s).collect();
    let graph = spec.graph.induced_subgraph(&keep)?;
    let n = keep
        .iter()
        .map(|&t| if t == j { spec.n[j - 1] + spec.n[s - 1] + spec.k } else { spec.n[t - 1] })
        .collect();
    MultiBraidSpec::new(spec.k, n, graph)
}

/// Closed-form Euler multiplicity on a rank-2 flat: returns the first
/// applicable case number and its value. `mults` contains `m0` once for
/// the distinguished hyperplane.
pub fn euler_multiplicity_case(mults: &[u32], m0: u32) -> Result<Option<(u8, u32)>> {
    let Some(pos) = mults.iter().position(|&m| m == m0) else {
        return Err(invalid(format!("{m0} is not among the multiplicities {mults:?}")));
    };
    let k = mults.len() as u32;
    if k < 2 {
        return Err(invalid("a rank-2 flat carries at least two hyperplanes"));
    }
    if mults.contains(&0) {
        return Err(invalid("multiplicities on a flat must be positive"));
    }
    let total: u32 = mults.iter().sum();
    let m1 = mults.iter().enumerate().filter(|&(i, _)| i != pos).map(|(_, &m)| m).max().expect("k >= 2");
    let case = if k == 2 {
        Some((1, m1))
    } else if 2 * m0 >= total {
        Some((2, total - m0))
    } else if 2 * m1 + 1 >= total {
        Some((3, m1))
    } else if total < 2 * k && m0 > 1 {
        Some((4, k - 1))
    } else if total + 2 <= 2 * k && m0 == 1 {
        Some((5, total + 1 - k))
    } else if mults.iter().all(|&m| m == 2) {
        Some((6, k))
    } else if k == 3 && 2 * m0 <= total && 2 * m1 <= total {
        Some((7, total / 2))
    } else {
        None
    };
    Ok(case)
}

/// Euler multiplicity `m*(X)`: the closed-form cases first, otherwise the
/// degree of the basis element of D(A_X, m_X) that is not divisible by
/// `α_{H_0}`, read off from the oracle exponents of `m_X` and of `m_X`
/// with `m0` lowered by one.
pub fn euler_multiplicity(mults: &[u32], m0: u32) -> Result<u32> {
    if let Some((_, v)) = euler_multiplicity_case(mults, m0)? {
        return Ok(v);
    }
    euler_multiplicity_by_oracle(mults, m0)
}

pub fn euler_multiplicity_by_oracle(mults: &[u32], m0: u32) -> Result<u32> {
    let pos = mults.iter().position(|&m| m == m0).ok_or_else(|| invalid("m0 not among multiplicities"))?;
    // put the distinguished hyperplane first
    let mut ordered = vec![m0];
    ordered.extend(mults.iter().enumerate().filter(|&(i, _)| i != pos).map(|(_, &m)| m));
    let full = rank2_oracle_exponents(&ordered)?;
    ordered[0] -= 1;
    let deleted = rank2_oracle_exponents(&ordered)?;
    // exp(m) is exp(m') with one entry raised; m* is the entry kept
    let (a, b) = full;
    if deleted == sorted_pair(a - 1, b) {
        Ok(b)
    } else if deleted == sorted_pair(a, b.wrapping_sub(1)) && b > 0 {
        Ok(a)
    } else {
        Err(Error::Rejected(format!("exponents {full:?} and {deleted:?} are not related by deletion")))
    }
}

fn sorted_pair(a: u32, b: u32) -> (u32, u32) {
    if a >= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Exponents `(d1, d2)`, `d1 ≥ d2`, of a rank-2 multiarrangement of 2 or 3 lines.
/// Three lines: `d1 = max(m_max, ⌈|m|/2⌉)`, `d2 = |m| - d1`.
pub fn rank2_exponents(mults: &[u32]) -> Result<(u32, u32)> {
    match *mults {
        [a, b] => Ok(sorted_pair(a, b)),
        [_, _, _] => {
            let total: u32 = mults.iter().sum();
            let top = *mults.iter().max().unwrap();
            let d1 = top.max(total.div_ceil(2));
            Ok((d1, total - d1))
        }
        _ => Err(Error::UnsupportedSize(format!("{} lines on a rank-2 flat", mults.len()))),
    }
}

/// Oracle exponents of lines `(1,0), (0,1), (1,1), (1,2), …` in the plane,
/// with the given multiplicities. Zero multiplicities drop the line.
pub fn rank2_oracle_exponents(mults: &[u32]) -> Result<(u32, u32)> {
    if mults.len() > 3 {
        return Err(Error::UnsupportedSize("the oracle fallback handles at most three lines".into()));
    }
    let q = Rational::from_int;
    let normals = [[q(1), q(0)], [q(0), q(1)], [q(1), q(1)]];
    let hs = mults
        .iter()
        .zip(normals)
        .map(|(&mult, n)| Hyperplane { normal: n.to_vec(), mult })
        .collect();
    let a = MultiArrangement::new(2, hs)?;
    let cert = freeness_verdict(&a, &OracleOptions::default())?;
    match cert.exponents().as_deref() {
        Some([lo, hi]) => Ok((*hi, *lo)),
        _ => Err(Error::Rejected(format!("rank-2 oracle returned {:?}", cert.status))),
    }
}

/// Contribution of one rank-2 flat to the second local mixed product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlatTerm {
    pub hyperplanes: Vec<(usize, usize)>,
    pub exponents: (u32, u32),
}

/// Rank-2 flats of the multi-braid arrangement with their local exponents:
/// triples `{i,j,k}` and disjoint pairs `{i,j},{k,l}`, ignoring hyperplanes of
/// multiplicity zero.
pub fn rank2_flats(spec: &MultiBraidSpec) -> Result<Vec<FlatTerm>> {
    let mults = spec.nonnegative_multiplicities()?;
    let m = |i: usize, j: usize| mults.iter().find(|t| (t.0, t.1) == (i.min(j), i.max(j))).unwrap().2;
    let v = spec.vertex_count();
    let mut out = Vec::new();
    for t in (1..=v).combinations(3) {
        let (a, b, c) = (t[0], t[1], t[2]);
        let lines: Vec<((usize, usize), u32)> =
            [((a, b), m(a, b)), ((a, c), m(a, c)), ((b, c), m(b, c))].into_iter().filter(|l| l.1 > 0).collect();
        if lines.len() < 2 {
            continue;
        }
        let ms: Vec<u32> = lines.iter().map(|l| l.1).collect();
        out.push(FlatTerm { hyperplanes: lines.iter().map(|l| l.0).collect(), exponents: rank2_exponents(&ms)? });
    }
    for q in (1..=v).combinations(4) {
        for (p1, p2) in [((q[0], q[1]), (q[2], q[3])), ((q[0], q[2]), (q[1], q[3])), ((q[0], q[3]), (q[1], q[2]))] {
            let (m1, m2) = (m(p1.0, p1.1), m(p2.0, p2.1));
            if m1 > 0 && m2 > 0 {
                out.push(FlatTerm { hyperplanes: vec![p1, p2], exponents: sorted_pair(m1, m2) });
            }
        }
    }
    Ok(out)
}

/// Second local mixed product `Σ_X d1(X) d2(X)` over rank-2 flats.
pub fn lmp2(spec: &MultiBraidSpec) -> Result<u64> {
    Ok(rank2_flats(spec)?.iter().map(|f| f.exponents.0 as u64 * f.exponents.1 as u64).sum())
}

/// Runs the derivation oracle on the spec's arrangement.
pub fn oracle_certificate(spec: &MultiBraidSpec, opts: &OracleOptions) -> Result<FreenessCertificate<Rational>> {
    freeness_verdict(&spec.arrangement::<Rational>()?, opts)
}

/// First 4-vertex localization the oracle finds non-free, if any. Rank-2
/// localizations of a braid arrangement are always free, and the other
/// rank-3 flats are products of rank-1 and rank-2 pieces.
pub fn nonfree_localization(spec: &MultiBraidSpec, opts: &OracleOptions) -> Result<Option<Vec<usize>>> {
    for s in (1..=spec.vertex_count()).combinations(4) {
        let cert = oracle_certificate(&spec.localization(&s)?, opts)?;
        if cert.status == crate::oracle::CertificateStatus::NonFree {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, plus: &[(usize, usize)], minus: &[(usize, usize)]) -> EdgeBicoloredGraph {
        EdgeBicoloredGraph::from_edges(n, plus, minus).unwrap()
    }

    #[test]
    fn scope_examples() {
        let any = g(3, &[(1, 2)], &[(2, 3)]);
        assert_eq!(theorem_scope(&MultiBraidSpec::uniform(1, any.clone())), Some(Condition::A));
        let plus = EdgeBicoloredGraph::complete(4, EdgeColor::Plus);
        assert_eq!(theorem_scope(&MultiBraidSpec::uniform(0, plus)), Some(Condition::B));
        let spec = MultiBraidSpec::new(0, vec![1, 1, 1], g(3, &[], &[(1, 2)])).unwrap();
        assert_eq!(spec.multiplicities().iter().map(|t| t.2).collect::<Vec<_>>(), vec![1, 2, 2]);
        assert_eq!(theorem_scope(&spec), Some(Condition::C));
        assert_eq!(theorem_scope(&MultiBraidSpec::uniform(0, any)), None);
        assert_eq!(theorem_scope(&MultiBraidSpec::uniform(0, g(3, &[], &[(1, 2)]))), None);
    }

    #[test]
    fn classify_examples() {
        let k4 = MultiBraidSpec::uniform(0, EdgeBicoloredGraph::complete(4, EdgeColor::Plus));
        let v = classify(&k4);
        assert_eq!(v.status, VerdictStatus::Free);
        assert_eq!(v.exponents.unwrap().0, vec![0, 1, 2, 3]);

        let v = classify(&MultiBraidSpec::uniform(1, g(3, &[(1, 2)], &[(2, 3)])));
        assert_eq!(v.exponents.unwrap().0, vec![0, 3, 3]);

        let cycle = g(4, &[(1, 2), (2, 3), (3, 4), (1, 4)], &[]);
        let v = classify(&MultiBraidSpec::uniform(1, cycle));
        assert_eq!(v.status, VerdictStatus::NonFree);
        assert!(!v.witness.unwrap().chordal_plus);

        let out = classify(&MultiBraidSpec::uniform(0, g(3, &[(1, 2)], &[(2, 3)])));
        assert_eq!(out.status, VerdictStatus::OutOfTheoremScope);
    }

    #[test]
    fn char_poly_examples() {
        let simple = MultiBraidSpec::uniform(0, EdgeBicoloredGraph::complete(3, EdgeColor::Plus));
        let chi = char_poly(&simple).unwrap();
        assert_eq!(chi.roots, vec![0, 1, 2]);
        // t (t-1)(t-2) = t^3 - 3t^2 + 2t
        assert_eq!(chi.coefficients(), vec![0, 2, -3, 1]);

        let edgeless = MultiBraidSpec::uniform(1, EdgeBicoloredGraph::edgeless(3));
        assert_eq!(char_poly(&edgeless).unwrap().roots, vec![0, 3, 3]);

        let k4 = MultiBraidSpec::uniform(1, EdgeBicoloredGraph::complete(4, EdgeColor::Plus));
        assert_eq!(char_poly(&dual_spec(&k4)).unwrap().roots, vec![0, 1, 2, 3]);
        assert_eq!(char_poly(&k4).unwrap().roots, vec![0, 5, 6, 7]);

        let cycle = g(4, &[(1, 2), (2, 3), (3, 4), (1, 4)], &[]);
        assert_eq!(char_poly(&MultiBraidSpec::uniform(1, cycle)), Err(Error::NotEliminable));
    }

    #[test]
    fn restriction_examples() {
        let spec = MultiBraidSpec::uniform(1, EdgeBicoloredGraph::complete(4, EdgeColor::Plus));
        let r = euler_restrict_spec(&spec, 4, 1).unwrap();
        assert_eq!(r.shifts(), &[1, 0, 0]);
        assert_eq!(r.graph(), &EdgeBicoloredGraph::complete(3, EdgeColor::Plus));

        let spec = MultiBraidSpec::new(0, vec![2, 0, 0, 1], g(4, &[(2, 4)], &[])).unwrap();
        assert_eq!(euler_restrict_spec(&spec, 4, 2).unwrap().shifts(), &[2, 1, 0]);
        assert!(euler_restrict_spec(&spec, 4, 4).is_err());
        assert!(euler_restrict_spec(&spec, 5, 1).is_err());
    }

    #[test]
    fn euler_multiplicity_examples() {
        assert_eq!(euler_multiplicity(&[3, 5], 5).unwrap(), 3);
        assert_eq!(euler_multiplicity_case(&[3, 1, 1], 3).unwrap(), Some((2, 2)));
        assert_eq!(euler_multiplicity(&[2, 2, 2], 2).unwrap(), 3);
        assert!(euler_multiplicity(&[2, 2], 3).is_err());
    }

    #[test]
    fn rank2_examples() {
        assert_eq!(rank2_exponents(&[1, 1, 1]).unwrap(), (2, 1));
        assert_eq!(rank2_exponents(&[3, 1, 1]).unwrap(), (3, 2));
        assert_eq!(rank2_exponents(&[4, 7]).unwrap(), (7, 4));
        assert!(rank2_exponents(&[1, 1, 1, 1]).is_err());
        assert_eq!(rank2_oracle_exponents(&[1, 1, 1]).unwrap(), (2, 1));
        assert_eq!(rank2_oracle_exponents(&[3, 1, 1]).unwrap(), (3, 2));
    }

    #[test]
    fn lmp2_examples() {
        let simple = MultiBraidSpec::uniform(0, EdgeBicoloredGraph::complete(4, EdgeColor::Plus));
        // K4 all Plus at k = 0 is m ≡ 1
        assert_eq!(lmp2(&simple).unwrap(), 11);
        assert_eq!(classify(&simple).exponents.unwrap().e2(), 11);
        let doubled = MultiBraidSpec::uniform(1, EdgeBicoloredGraph::edgeless(4));
        assert_eq!(lmp2(&doubled).unwrap(), 48);
        assert_eq!(classify(&doubled).exponents.unwrap().e2(), 48);
    }

    #[test]
    fn parses_inline_and_nested_specs() {
        let a = parse_spec(r#"{"k":1,"n":[0,0,1],"vertices":3,"plus":[[1,2]]}"#).unwrap();
        let b = parse_spec(r#"{"k":1,"n":[0,0,1],"graph":{"vertices":3,"plus":[[1,2]]}}"#).unwrap();
        assert_eq!(a, b);
        assert!(parse_spec(r#"{"k":1,"n":[0,0],"vertices":3}"#).is_err());
        assert_eq!(parse_spec(r#"{"k":2,"vertices":2}"#).unwrap().shifts(), &[0, 0]);
    }
}
