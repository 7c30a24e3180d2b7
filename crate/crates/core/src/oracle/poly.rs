//! Sparse multivariate polynomials and homogeneous monomial bases.

use std::collections::{BTreeMap, HashMap};

use crate::scalar::Scalar;

pub type Exponent = Vec<u32>;

/// All monomials of a fixed degree in `nvars` variables, in lexicographic
/// order (largest power of the first variable first), with a reverse index.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    pub nvars: usize,
    pub degree: u32,
    pub list: Vec<Exponent>,
    index: HashMap<Exponent, usize>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, degree: u32) -> Self {
        let mut list = Vec::new();
        let mut cur = vec![0; nvars];
        fill(&mut list, &mut cur, 0, degree);
        let index = list.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        MonomialBasis { nvars, degree, list, index }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn index_of(&self, e: &[u32]) -> Option<usize> {
        self.index.get(e).copied()
    }
}

fn fill(out: &mut Vec<Exponent>, cur: &mut Exponent, pos: usize, left: u32) {
    if cur.is_empty() {
        if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(cur.clone());
        cur[pos] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        fill(out, cur, pos + 1, left - e);
    }
    cur[pos] = 0;
}

/// Number of monomials of degree `d` in `v` variables.
pub fn monomial_count(v: usize, d: u32) -> usize {
    if v == 0 {
        return usize::from(d == 0);
    }
    // C(d + v - 1, v - 1)
    let mut acc: u128 = 1;
    for i in 1..v as u128 {
        acc = acc * (d as u128 + i) / i;
    }
    acc as usize
}

#[derive(Debug, Clone, PartialEq)]
pub struct Poly<T> {
    nvars: usize,
    terms: BTreeMap<Exponent, T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn monomial(exp: Exponent, c: T) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// The linear form `Σ coeffs[i] x_i`.
    pub fn linear(coeffs: &[T]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    /// Homogeneous polynomial from coefficients over a monomial basis.
    pub fn from_dense(basis: &MonomialBasis, coeffs: &[T]) -> Self {
        let mut p = Self::zero(basis.nvars);
        for (e, c) in basis.list.iter().zip(coeffs) {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    /// Coefficients over `basis`; terms outside the basis are an error.
    pub fn to_dense(&self, basis: &MonomialBasis) -> Option<Vec<T>> {
        let mut out = vec![T::zero(); basis.len()];
        for (e, c) in &self.terms {
            out[basis.index_of(e)?] = c.clone();
        }
        Some(out)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &T)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add_term(&mut self, exp: Exponent, c: T) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_negligible() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_negligible() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[u32]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        Poly { nvars: self.nvars, terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, T::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[T]) -> T {
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitutes `x_i ↦ images[i]` where every image is a polynomial in
    /// `images[i].nvars()` variables.
    pub fn compose(&self, images: &[Poly<T>]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, Poly::nvars);
        let mut powers: Vec<Vec<Poly<T>>> = images
            .iter()
            .map(|p| vec![Poly::constant(target, T::one()), p.clone()])
            .collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                if k > 0 {
                    term = term.mul(&powers[i][k as usize]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Minimum exponent of variable `var` over all terms (`None` for zero).
    pub fn min_exponent(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).min()
    }
}

/// Symbolic determinant of a square polynomial matrix by cofactor expansion.
pub fn poly_determinant<T: Scalar>(m: &[Vec<Poly<T>>], nvars: usize) -> Poly<T> {
    let n = m.len();
    if n == 0 {
        return Poly::constant(nvars, T::one());
    }
    let cols: Vec<usize> = (0..n).collect();
    cofactor(m, 0, &cols, nvars)
}

fn cofactor<T: Scalar>(m: &[Vec<Poly<T>>], row: usize, cols: &[usize], nvars: usize) -> Poly<T> {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = Poly::zero(nvars);
    for (pos, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = cofactor(m, row + 1, &rest, nvars);
        let term = m[row][c].mul(&minor);
        acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}
