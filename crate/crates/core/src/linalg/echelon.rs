//! Incremental row reduction for large, sparse linear systems.
//!
//! Rows are fed one at a time; the accumulated rows are kept in fully reduced
//! echelon form (every pivot column is zero in every other stored row), so
//! reducing an incoming row touches only the stored rows whose pivots occur in
//! it and costs O(nnz · (free columns + 1)).

use std::collections::BTreeMap;

use super::{vector, Rational, Subspace, Vector};

/// Sparse row: `(column, value)` pairs with strictly increasing columns and
/// nonzero values.
pub type SparseRow = Vec<(usize, Rational)>;

pub fn sparse_from_dense(v: &[Rational]) -> SparseRow {
    vector::support(v).map(|(i, x)| (i, x.clone())).collect()
}

#[derive(Debug, Clone)]
pub struct IncrementalEchelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseRow>,
    scratch: Vec<Rational>,
}

impl IncrementalEchelon {
    pub fn new(ncols: usize) -> Self {
        IncrementalEchelon {
            ncols,
            rows: BTreeMap::new(),
            scratch: vector::zeros(ncols),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    fn reduce(&mut self, row: &[(usize, Rational)]) -> SparseRow {
        let mut touched: Vec<usize> = Vec::with_capacity(row.len() * 4);
        for (c, v) in row {
            debug_assert!(*c < self.ncols);
            self.scratch[*c] += v;
            touched.push(*c);
        }
        for (c, _) in row {
            let Some(p) = self.rows.get(c) else { continue };
            if self.scratch[*c].is_zero() {
                continue;
            }
            let f = self.scratch[*c].clone();
            for (j, x) in p {
                self.scratch[*j] -= &f * x;
                touched.push(*j);
            }
        }
        touched.sort_unstable();
        touched.dedup();
        let mut out = SparseRow::new();
        for j in touched {
            let x = std::mem::take(&mut self.scratch[j]);
            if !x.is_zero() {
                out.push((j, x));
            }
        }
        out
    }

    /// Adds a row; returns `true` if it was independent of the rows so far.
    pub fn insert(&mut self, row: &[(usize, Rational)]) -> bool {
        let reduced = self.reduce(row);
        let Some((pivot, lead)) = reduced.first().cloned() else {
            return false;
        };
        let inv = lead.recip().expect("nonzero lead");
        let new_row: SparseRow = reduced.into_iter().map(|(j, x)| (j, x * &inv)).collect();
        for stored in self.rows.values_mut() {
            let Ok(pos) = stored.binary_search_by_key(&pivot, |(j, _)| *j) else {
                continue;
            };
            let f = stored[pos].1.clone();
            *stored = axpy_sparse(stored, &(-f), &new_row);
        }
        self.rows.insert(pivot, new_row);
        true
    }

    pub fn insert_dense(&mut self, row: &[Rational]) -> bool {
        self.insert(&sparse_from_dense(row))
    }

    /// Whether `row` lies in the span of the inserted rows.
    pub fn spans(&mut self, row: &[(usize, Rational)]) -> bool {
        self.reduce(row).is_empty()
    }

    /// Whether every inserted row is orthogonal to `v`, i.e. `v` solves the
    /// homogeneous system.
    pub fn annihilates(&self, v: &[Rational]) -> bool {
        self.rows
            .values()
            .all(|r| r.iter().map(|(j, x)| x * &v[*j]).sum::<Rational>().is_zero())
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    /// Basis of `{x : r·x = 0 for every inserted row r}`, one vector per free
    /// column, in increasing free-column order.
    pub fn nullspace_basis(&self) -> Vec<Vector> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.rows.contains_key(c)).collect();
        let mut basis: Vec<Vector> = free.iter().map(|&f| vector::unit(self.ncols, f)).collect();
        let index: BTreeMap<usize, usize> = free.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        for (&p, row) in &self.rows {
            for (j, x) in row {
                if *j == p {
                    continue;
                }
                let k = index[j];
                basis[k][p] = -x;
            }
        }
        basis
    }

    pub fn row_space(&self) -> Subspace {
        let rows: Vec<Vector> = self
            .rows
            .values()
            .map(|r| {
                let mut v = vector::zeros(self.ncols);
                for (j, x) in r {
                    v[*j] = x.clone();
                }
                v
            })
            .collect();
        Subspace::span(self.ncols, &rows)
    }
}

fn axpy_sparse(a: &[(usize, Rational)], c: &Rational, b: &[(usize, Rational)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let x = &a[i].1 + &(c * &b[j].1);
            if !x.is_zero() {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;

    #[test]
    fn agrees_with_dense_reduction() {
        let m = Matrix::from_i64(
            4,
            5,
            &[1, 2, 0, 1, 3, 2, 4, 1, 0, 0, 3, 6, 1, 1, 3, 0, 0, 5, -5, 1],
        );
        let mut inc = IncrementalEchelon::new(5);
        for r in m.row_vectors() {
            inc.insert_dense(&r);
        }
        assert_eq!(inc.rank(), m.rank());
        assert_eq!(inc.row_space().basis(), &m.reduce().rref_nonzero());
        let ns = Subspace::span(5, &inc.nullspace_basis());
        assert_eq!(ns, m.nullspace());
    }
}
