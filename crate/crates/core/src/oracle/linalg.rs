//! Dense Gauss-Jordan elimination over a [`Scalar`] field.

use crate::scalar::Scalar;

/// Row-reduced echelon form of a dense matrix.
#[derive(Debug, Clone)]
pub struct Rref<T> {
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl<T: Scalar> Rref<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.nullity());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![T::zero(); self.cols];
            v[free] = T::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[free].is_negligible() {
                    v[p] = -row[free].clone();
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Reduces `rows` (each of length `cols`) to reduced row echelon form.
pub fn rref<T: Scalar>(mut rows: Vec<Vec<T>>, cols: usize) -> Rref<T> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let mut best: Option<usize> = None;
        for (i, row) in rows.iter().enumerate().skip(r) {
            if row[c].is_negligible() {
                continue;
            }
            match best {
                None => best = Some(i),
                Some(b) if row[c].better_pivot(&rows[b][c]) => best = Some(i),
                _ => {}
            }
            if !T::EXACT {
                continue;
            }
            break;
        }
        let Some(b) = best else { continue };
        rows.swap(r, b);
        let inv = T::one() / rows[r][c].clone();
        for v in rows[r][c..].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().expect("pivot row");
        for other in head.iter_mut().chain(rest.iter_mut()) {
            if other[c].is_negligible() {
                continue;
            }
            let f = other[c].clone();
            for (o, p) in other[c..].iter_mut().zip(&pivot_row[c..]) {
                if !p.is_zero() {
                    *o = o.clone() - f.clone() * p.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Rref { rows, pivots, cols }
}

pub fn rank<T: Scalar>(rows: Vec<Vec<T>>, cols: usize) -> usize {
    rref(rows, cols).rank()
}

/// Incrementally maintained echelon basis; answers "is this vector new?".
#[derive(Debug, Clone)]
pub struct Echelon<T> {
    len: usize,
    // (pivot column, row normalized so that row[pivot] == 1)
    basis: Vec<(usize, Vec<T>)>,
}

impl<T: Scalar> Echelon<T> {
    pub fn new(len: usize) -> Self {
        Echelon { len, basis: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn reduce(&self, mut v: Vec<T>) -> Vec<T> {
        for (p, row) in &self.basis {
            if v[*p].is_negligible() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.clone() - f.clone() * r.clone();
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v.to_vec()).iter().all(Scalar::is_negligible)
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: Vec<T>) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_negligible()) else {
            return false;
        };
        let inv = T::one() / v[p].clone();
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        // keep existing rows reduced against the new pivot
        for (_, row) in self.basis.iter_mut() {
            if row[p].is_negligible() {
                continue;
            }
            let f = row[p].clone();
            for (x, n) in row.iter_mut().zip(&v) {
                if !n.is_zero() {
                    *x = x.clone() - f.clone() * n.clone();
                }
            }
        }
        self.basis.push((p, v));
        true
    }
}

/// Determinant of a square matrix by elimination.
pub fn determinant<T: Scalar>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    let mut det = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_negligible()) else {
            return T::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det = det * pivot.clone();
        for r in c + 1..n {
            if m[r][c].is_negligible() {
                continue;
            }
            let f = m[r][c].clone() / pivot.clone();
            for k in c..n {
                let delta = f.clone() * m[c][k].clone();
                m[r][k] = m[r][k].clone() - delta;
            }
        }
    }
    det
}
