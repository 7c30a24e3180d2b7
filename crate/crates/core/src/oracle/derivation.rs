//! Homogeneous derivations and the linear conditions cutting out D(A, m).

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::arrangement::{Hyperplane, MultiArrangement};
use super::linalg::rref;
use super::poly::{MonomialBasis, Poly};

/// Size limits for direct graded computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_dim: usize,
    pub max_degree: u32,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_dim: 5, max_degree: 40 }
    }
}

impl OracleLimits {
    pub(crate) fn check(&self, dim: usize, degree: u32) -> Result<()> {
        if dim > self.max_dim {
            return Err(Error::UnsupportedSize(format!("ambient dimension {dim} exceeds the oracle limit {}", self.max_dim)));
        }
        if degree > self.max_degree {
            return Err(Error::UnsupportedSize(format!("degree {degree} exceeds the oracle limit {}", self.max_degree)));
        }
        Ok(())
    }
}

/// `θ = Σ f_i ∂_{x_i}` with every `f_i` zero or homogeneous of `degree`.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivationElement<T> {
    pub degree: u32,
    pub components: Vec<Poly<T>>,
}

impl<T: Scalar> DerivationElement<T> {
    /// Splits a stacked coefficient vector (one block per coordinate).
    pub fn from_vector(basis: &MonomialBasis, v: &[T]) -> Self {
        let m = basis.len();
        let components = (0..basis.nvars).map(|i| Poly::from_dense(basis, &v[i * m..(i + 1) * m])).collect();
        DerivationElement { degree: basis.degree, components }
    }

    pub fn to_vector(&self, basis: &MonomialBasis) -> Vec<T> {
        self.components
            .iter()
            .flat_map(|p| p.to_dense(basis).expect("component of the basis degree"))
            .collect()
    }

    /// The constant derivation `Σ v_i ∂_{x_i}`.
    pub fn constant(v: &[T]) -> Self {
        let n = v.len();
        DerivationElement { degree: 0, components: v.iter().map(|c| Poly::constant(n, c.clone())).collect() }
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    /// `θ(α)` for the linear form with coefficients `alpha`.
    pub fn apply(&self, alpha: &[T]) -> Poly<T> {
        let mut acc = Poly::zero(self.nvars());
        for (f, a) in self.components.iter().zip(alpha) {
            if !a.is_negligible() {
                acc = acc.add(&f.scale(a));
            }
        }
        acc
    }

    pub fn shift(&self, mono: &[u32]) -> Self {
        DerivationElement {
            degree: self.degree + mono.iter().sum::<u32>(),
            components: self.components.iter().map(|p| p.shift(mono)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    /// Whether `θ(α_H)` is divisible by `α_H^{m(H)}` for every hyperplane.
    pub fn is_member(&self, a: &MultiArrangement<T>) -> bool {
        a.hyperplanes().iter().all(|h| {
            let chart = Chart::new(h);
            let image = chart.to_chart(&self.apply(&h.normal));
            image.min_exponent(chart.pivot).is_none_or(|e| e >= h.mult)
        })
    }
}

/// Linear coordinates in which `α_H` is the pivot coordinate:
/// `z_i = x_i` for `i != pivot` and `z_pivot = α_H(x)`.
pub(crate) struct Chart<T> {
    pub pivot: usize,
    /// `x_pivot` written in the chart coordinates.
    back: Poly<T>,
    nvars: usize,
}

impl<T: Scalar> Chart<T> {
    pub fn new(h: &Hyperplane<T>) -> Self {
        let n = h.normal.len();
        let pivot = h.normal.iter().position(|c| !c.is_negligible()).expect("nonzero normal");
        let inv = T::one() / h.normal[pivot].clone();
        let coeffs: Vec<T> = (0..n)
            .map(|i| if i == pivot { inv.clone() } else { -(h.normal[i].clone() * inv.clone()) })
            .collect();
        Chart { pivot, back: Poly::linear(&coeffs), nvars: n }
    }

    /// Rewrites a polynomial in x as a polynomial in the chart coordinates.
    pub fn to_chart(&self, f: &Poly<T>) -> Poly<T> {
        let images: Vec<Poly<T>> = (0..self.nvars)
            .map(|i| {
                if i == self.pivot {
                    self.back.clone()
                } else {
                    let mut e = vec![0; self.nvars];
                    e[i] = 1;
                    Poly::monomial(e, T::one())
                }
            })
            .collect();
        f.compose(&images)
    }

    /// Chart image of every monomial of `basis`, using cached powers of `x_pivot`.
    pub fn expand_basis(&self, basis: &MonomialBasis) -> Vec<Poly<T>> {
        let mut powers = vec![Poly::constant(self.nvars, T::one())];
        for _ in 0..basis.degree {
            let next = powers.last().unwrap().mul(&self.back);
            powers.push(next);
        }
        basis
            .list
            .iter()
            .map(|e| {
                let mut rest = e.clone();
                rest[self.pivot] = 0;
                powers[e[self.pivot] as usize].shift(&rest)
            })
            .collect()
    }
}

/// Constraint rows on stacked coefficient vectors of degree-`d` derivations:
/// for each hyperplane, every chart coefficient of `θ(α_H)` whose `α_H`
/// exponent is below `m(H)` must vanish.
pub(crate) fn constraint_rows<T: Scalar>(a: &MultiArrangement<T>, basis: &MonomialBasis) -> Vec<Vec<T>> {
    let n = a.ambient_dim();
    let m = basis.len();
    let mut rows = Vec::new();
    for h in a.hyperplanes() {
        let chart = Chart::new(h);
        let images = chart.expand_basis(basis);
        let mut row_of = std::collections::HashMap::new();
        let mut block: Vec<Vec<T>> = Vec::new();
        for (col, image) in images.iter().enumerate() {
            for (e, c) in image.terms() {
                if e[chart.pivot] >= h.mult {
                    continue;
                }
                let r = *row_of.entry(e.clone()).or_insert_with(|| {
                    block.push(vec![T::zero(); n * m]);
                    block.len() - 1
                });
                for (i, a_i) in h.normal.iter().enumerate() {
                    if !a_i.is_negligible() {
                        let slot = &mut block[r][i * m + col];
                        *slot = slot.clone() + a_i.clone() * c.clone();
                    }
                }
            }
        }
        rows.extend(block);
    }
    rows
}

/// Basis of the degree-`d` part of D(A, m) as stacked coefficient vectors.
pub(crate) fn graded_kernel<T: Scalar>(a: &MultiArrangement<T>, basis: &MonomialBasis) -> Vec<Vec<T>> {
    let cols = a.ambient_dim() * basis.len();
    let rows = constraint_rows(a, basis);
    if rows.is_empty() {
        return (0..cols)
            .map(|c| {
                let mut v = vec![T::zero(); cols];
                v[c] = T::one();
                v
            })
            .collect();
    }
    rref(rows, cols).nullspace()
}

/// Dimension of the degree-`d` part of D(A, m), computed directly in the
/// ambient coordinates.
pub fn graded_dimension<T: Scalar>(a: &MultiArrangement<T>, d: u32, limits: &OracleLimits) -> Result<usize> {
    limits.check(a.ambient_dim(), d)?;
    let basis = MonomialBasis::new(a.ambient_dim(), d);
    let cols = a.ambient_dim() * basis.len();
    let rows = constraint_rows(a, &basis);
    if rows.is_empty() {
        return Ok(cols);
    }
    Ok(rref(rows, cols).nullity())
}
