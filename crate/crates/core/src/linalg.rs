//! Exact row-echelon spans over `Q(eps)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::scalars::QEps;

/// A subspace of `Q(eps)^dim` kept as echelon rows with unit pivots.
///
/// Every stored row is zero in the pivot columns of all earlier rows,
/// so reducing a vector against the rows in insertion order is exact.
#[derive(Clone, Debug)]
pub struct Span {
    dim: usize,
    rows: Vec<Vec<QEps>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(dim: usize) -> Self {
        Span { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn rows(&self) -> &[Vec<QEps>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after eliminating every pivot column.
    pub fn reduce(&self, mut v: Vec<QEps>) -> Vec<QEps> {
        assert_eq!(v.len(), self.dim, "vector length must match span dimension");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&c * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[QEps]) -> bool {
        self.reduce(v.to_vec()).iter().all(QEps::is_zero)
    }

    /// Adds `v` to the span; returns `true` if the rank grew.
    pub fn insert(&mut self, v: Vec<QEps>) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("pivot is nonzero");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }
}

/// Rank of a family of vectors of equal length `dim`.
pub fn rank(dim: usize, vectors: impl IntoIterator<Item = Vec<QEps>>) -> usize {
    let mut s = Span::new(dim);
    for v in vectors {
        s.insert(v);
    }
    s.rank()
}

/// Dense vector from sparse `(index, coeff)` pairs.
pub fn densify(dim: usize, sparse: &[(usize, QEps)]) -> Vec<QEps> {
    let mut v = vec![QEps::zero(); dim];
    for (i, c) in sparse {
        v[*i] += c;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<QEps> {
        xs.iter().map(|&x| QEps::from_int(x)).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(3, [v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])]), 2);
        assert_eq!(rank(2, [v(&[0, 0])]), 0);
    }

    #[test]
    fn eps_dependence_is_detected() {
        let e = QEps::eps();
        let a = vec![QEps::one(), e.clone()];
        let b = vec![e.clone(), &e * &e];
        assert_eq!(rank(2, [a, b]), 1);
    }

    #[test]
    fn contains_after_insert() {
        let mut s = Span::new(3);
        assert!(s.insert(v(&[0, 2, 1])));
        assert!(s.insert(v(&[1, 0, 1])));
        assert!(s.contains(&v(&[2, 2, 3])));
        assert!(!s.contains(&v(&[0, 0, 1])));
        assert!(!s.insert(v(&[1, 2, 2])));
    }
}
