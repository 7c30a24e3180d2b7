//! Minimal homogeneous generators of D(A, m), degree by degree.
//!
//! Work happens on the essentialization: if the normals span an
//! `r`-dimensional space, D(A, m) is the essential module extended by
//! scalars, plus `n - r` constant derivations along the common kernel.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::scalar::Scalar;

use super::arrangement::{Hyperplane, MultiArrangement};
use super::derivation::{graded_kernel, DerivationElement, OracleLimits};
use super::linalg::{rref, Echelon};
use super::poly::{monomial_count, MonomialBasis, Poly};

/// The essential part of an arrangement together with the data needed to
/// move derivations back to the ambient coordinates.
#[derive(Debug, Clone)]
pub struct Essentialization<T> {
    /// Arrangement in the `r` coordinates `y_j = rows[j] · x`.
    pub essential: MultiArrangement<T>,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
    /// Basis of the common kernel of all normals.
    pub kernel: Vec<Vec<T>>,
}

impl<T: Scalar> Essentialization<T> {
    pub fn new(a: &MultiArrangement<T>) -> Self {
        let n = a.ambient_dim();
        let normals: Vec<Vec<T>> = a.hyperplanes().iter().map(|h| h.normal.clone()).collect();
        let red = rref(normals, n);
        let kernel = if red.rank() == 0 {
            (0..n)
                .map(|i| {
                    let mut v = vec![T::zero(); n];
                    v[i] = T::one();
                    v
                })
                .collect()
        } else {
            red.nullspace()
        };
        // rows are reduced with identity pivot columns, so the essential
        // normal of α is α restricted to the pivots
        let hs = a
            .hyperplanes()
            .iter()
            .map(|h| Hyperplane { normal: red.pivots.iter().map(|&p| h.normal[p].clone()).collect(), mult: h.mult })
            .collect();
        let essential = MultiArrangement::new(red.rank(), hs).expect("linear image keeps normals distinct");
        Essentialization { essential, rows: red.rows, pivots: red.pivots, kernel }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Lifts `Σ g_j(y) ∂_{y_j}` to `Σ g_j(Rx) ∂_{x_{p_j}}` in `n` coordinates.
    pub fn lift(&self, g: &DerivationElement<T>, n: usize) -> DerivationElement<T> {
        let images: Vec<Poly<T>> = self.rows.iter().map(|r| Poly::linear(r)).collect();
        let mut components = vec![Poly::zero(n); n];
        for (j, &p) in self.pivots.iter().enumerate() {
            components[p] = g.components[j].compose(&images);
        }
        DerivationElement { degree: g.degree, components }
    }
}

/// Per-degree bookkeeping (ambient dimensions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRow {
    pub degree: u32,
    pub dimension: usize,
    pub new_generators: usize,
}

/// Minimal generators found so far, in ambient coordinates.
#[derive(Debug, Clone)]
pub struct GeneratorTable<T> {
    pub generators: Vec<DerivationElement<T>>,
    pub rows: Vec<DegreeRow>,
    /// Last degree fully processed.
    pub reached: Option<u32>,
    /// Rank of the essential part.
    pub essential_rank: usize,
}

impl<T> GeneratorTable<T> {
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.generators.iter().map(|g| g.degree).collect();
        d.sort_unstable();
        d
    }

    pub fn degree_table(&self) -> BTreeMap<u32, usize> {
        let mut t = BTreeMap::new();
        for g in &self.generators {
            *t.entry(g.degree).or_insert(0) += 1;
        }
        t
    }
}

/// Incremental generator search; the caller decides when to stop.
pub(crate) struct GeneratorSearch<'a, T> {
    a: &'a MultiArrangement<T>,
    pub ess: Essentialization<T>,
    ess_gens: Vec<DerivationElement<T>>,
    ess_dims: Vec<usize>,
    pub table: GeneratorTable<T>,
}

impl<'a, T: Scalar> GeneratorSearch<'a, T> {
    pub fn new(a: &'a MultiArrangement<T>) -> Self {
        let ess = Essentialization::new(a);
        let generators = ess.kernel.iter().map(|v| DerivationElement::constant(v)).collect();
        let table = GeneratorTable { generators, rows: Vec::new(), reached: None, essential_rank: ess.rank() };
        GeneratorSearch { a, ess, ess_gens: Vec::new(), ess_dims: Vec::new(), table }
    }

    pub fn essential_generators(&self) -> &[DerivationElement<T>] {
        &self.ess_gens
    }

    /// Processes the next degree and returns the number of new generators.
    pub fn step(&mut self) -> usize {
        let d = self.table.reached.map_or(0, |r| r + 1);
        let r = self.ess.rank();
        let ess_dim;
        let mut fresh = Vec::new();
        if r == 0 {
            ess_dim = 0;
        } else {
            let basis = MonomialBasis::new(r, d);
            let kernel = graded_kernel(&self.ess.essential, &basis);
            ess_dim = kernel.len();
            let mut span = Echelon::new(r * basis.len());
            for g in &self.ess_gens {
                for mono in &MonomialBasis::new(r, d - g.degree).list {
                    span.insert(g.shift(mono).to_vector(&basis));
                }
            }
            for v in kernel {
                if span.rank() == ess_dim {
                    break;
                }
                if span.insert(v.clone()) {
                    fresh.push(DerivationElement::from_vector(&basis, &v));
                }
            }
        }
        self.ess_dims.push(ess_dim);
        let n = self.a.ambient_dim();
        for g in &fresh {
            self.table.generators.push(self.ess.lift(g, n));
        }
        let new_count = fresh.len() + if d == 0 { n - r } else { 0 };
        self.ess_gens.extend(fresh);
        self.table.rows.push(DegreeRow { degree: d, dimension: self.ambient_dimension(d), new_generators: new_count });
        self.table.reached = Some(d);
        new_count
    }

    /// dim D_d = Σ_j dim E_j · #mono(n - r, d - j) + (n - r) · #mono(n, d).
    fn ambient_dimension(&self, d: u32) -> usize {
        let n = self.a.ambient_dim();
        let r = self.ess.rank();
        let extra = n - r;
        let from_ess: usize = self
            .ess_dims
            .iter()
            .enumerate()
            .map(|(j, &e)| e * monomial_count(extra, d - j as u32))
            .sum();
        from_ess + extra * monomial_count(n, d)
    }
}

/// Minimal generators of D(A, m) in degrees `0..=budget`.
pub fn minimal_generators<T: Scalar>(
    a: &MultiArrangement<T>,
    budget: u32,
    limits: &OracleLimits,
) -> Result<GeneratorTable<T>> {
    limits.check(a.ambient_dim(), budget)?;
    let mut search = GeneratorSearch::new(a);
    for _ in 0..=budget {
        search.step();
    }
    Ok(search.table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::derivation::graded_dimension;
    use crate::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    fn braid(n: usize, mult: u32) -> MultiArrangement<Rational> {
        let mut normals = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![q(0); n];
                v[i] = q(1);
                v[j] = q(-1);
                normals.push(v);
            }
        }
        MultiArrangement::simple(n, normals, mult).unwrap()
    }

    #[test]
    fn empty_arrangement_has_coordinate_generators() {
        let a = MultiArrangement::<Rational>::new(3, vec![]).unwrap();
        let t = minimal_generators(&a, 2, &OracleLimits::default()).unwrap();
        assert_eq!(t.degrees(), vec![0, 0, 0]);
    }

    #[test]
    fn braid_generator_degrees() {
        let lim = OracleLimits::default();
        assert_eq!(minimal_generators(&braid(3, 1), 3, &lim).unwrap().degrees(), vec![0, 1, 2]);
        assert_eq!(minimal_generators(&braid(3, 2), 6, &lim).unwrap().degrees(), vec![0, 3, 3]);
    }

    #[test]
    fn lifted_generators_are_members() {
        let a = braid(4, 1);
        let t = minimal_generators(&a, 4, &OracleLimits::default()).unwrap();
        assert_eq!(t.degrees(), vec![0, 1, 2, 3]);
        assert!(t.generators.iter().all(|g| g.is_member(&a)));
    }

    #[test]
    fn essential_route_matches_direct_dimensions() {
        let lim = OracleLimits::default();
        for a in [braid(3, 1), braid(3, 2), braid(4, 1)] {
            let t = minimal_generators(&a, 4, &lim).unwrap();
            for row in &t.rows {
                assert_eq!(row.dimension, graded_dimension(&a, row.degree, &lim).unwrap());
            }
        }
    }
}
