//! Alternating bilinear maps `ℚⁿ × ℚⁿ → ℚⁿ` stored on basis pairs `i < j`.

use crate::error::{LieError, Result};
use crate::linalg::{sparse_from_dense, vector, Rational, SparseRow, Vector};

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `(i, j)`, `i < j`, in lexicographic pair order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// All pairs `i < j < n` in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AltBilinear {
    dim: usize,
    values: Vec<SparseRow>,
}

impl AltBilinear {
    pub fn zero(n: usize) -> Self {
        AltBilinear {
            dim: n,
            values: vec![SparseRow::new(); pair_count(n)],
        }
    }

    /// Builds the map from its values on the pairs `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let values = pairs(n)
            .map(|(i, j)| {
                let v = f(i, j);
                assert_eq!(v.len(), n, "value length mismatch");
                sparse_from_dense(&v)
            })
            .collect();
        AltBilinear { dim: n, values }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `ω(e_i, e_j) = v` (and implicitly `ω(e_j, e_i) = −v`).
    pub fn set(&mut self, i: usize, j: usize, v: &[Rational]) {
        assert!(i != j, "diagonal pair");
        assert_eq!(v.len(), self.dim);
        if i < j {
            self.values[pair_index(self.dim, i, j)] = sparse_from_dense(v);
        } else {
            self.values[pair_index(self.dim, j, i)] = sparse_from_dense(&vector::neg(v));
        }
    }

    /// The stored row for `{i, j}` and whether it must be negated; `None` on
    /// the diagonal.
    pub fn sparse_value(&self, i: usize, j: usize) -> Option<(bool, &SparseRow)> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => Some((false, &self.values[pair_index(self.dim, i, j)])),
            std::cmp::Ordering::Greater => Some((true, &self.values[pair_index(self.dim, j, i)])),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn basis_value(&self, i: usize, j: usize) -> Vector {
        let mut out = vector::zeros(self.dim);
        self.add_basis_value(&mut out, &Rational::one(), i, j);
        out
    }

    /// `acc += c · ω(e_i, e_j)`
    pub fn add_basis_value(&self, acc: &mut [Rational], c: &Rational, i: usize, j: usize) {
        if let Some((neg, row)) = self.sparse_value(i, j) {
            if neg {
                vector::axpy_sparse(acc, &-c, row);
            } else {
                vector::axpy_sparse(acc, c, row);
            }
        }
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Vector {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vector::zeros(self.dim);
        for (p, (i, j)) in pairs(self.dim).enumerate() {
            if self.values[p].is_empty() {
                continue;
            }
            let c = &x[i] * &y[j] - &x[j] * &y[i];
            if !c.is_zero() {
                vector::axpy_sparse(&mut out, &c, &self.values[p]);
            }
        }
        out
    }

    /// `ω(x, e_j)`
    pub fn eval_with_basis(&self, x: &[Rational], j: usize) -> Vector {
        let mut out = vector::zeros(self.dim);
        for (c, xc) in vector::support(x) {
            self.add_basis_value(&mut out, xc, c, j);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|r| r.is_empty())
    }

    /// Pairs `i < j` with nonzero value.
    pub fn nonzero_pairs(&self) -> impl Iterator<Item = (usize, usize, &SparseRow)> {
        pairs(self.dim)
            .zip(&self.values)
            .filter(|(_, r)| !r.is_empty())
            .map(|((i, j), r)| (i, j, r))
    }

    pub fn add(&self, other: &AltBilinear) -> Result<AltBilinear> {
        self.combine(other, &Rational::one())
    }

    pub fn sub(&self, other: &AltBilinear) -> Result<AltBilinear> {
        self.combine(other, &-Rational::one())
    }

    /// `self + c · other`
    pub fn combine(&self, other: &AltBilinear, c: &Rational) -> Result<AltBilinear> {
        if self.dim != other.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(AltBilinear::from_fn(self.dim, |i, j| {
            let mut v = self.basis_value(i, j);
            other.add_basis_value(&mut v, c, i, j);
            v
        }))
    }

    pub fn scale(&self, c: &Rational) -> AltBilinear {
        AltBilinear {
            dim: self.dim,
            values: self
                .values
                .iter()
                .map(|r| {
                    if c.is_zero() {
                        SparseRow::new()
                    } else {
                        r.iter().map(|(j, x)| (*j, c * x)).collect()
                    }
                })
                .collect(),
        }
    }

    /// Number of cochain coordinates, `n · C(n,2)`.
    pub fn coordinate_count(n: usize) -> usize {
        n * pair_count(n)
    }

    /// Coordinate of the `t`-th component of `ω(e_i, e_j)`, `i < j`.
    pub fn coordinate_index(n: usize, i: usize, j: usize, t: usize) -> usize {
        pair_index(n, i, j) * n + t
    }

    /// Flattened coordinates: pair index (lexicographic) then target index.
    pub fn coordinates(&self) -> Vector {
        let n = self.dim;
        let mut out = vector::zeros(Self::coordinate_count(n));
        for (p, row) in self.values.iter().enumerate() {
            for (t, x) in row {
                out[p * n + t] = x.clone();
            }
        }
        out
    }

    pub fn from_coordinates(n: usize, coords: &[Rational]) -> Result<AltBilinear> {
        let expected = Self::coordinate_count(n);
        if coords.len() != expected {
            return Err(LieError::DimensionMismatch {
                expected,
                found: coords.len(),
            });
        }
        let values = (0..pair_count(n))
            .map(|p| sparse_from_dense(&coords[p * n..(p + 1) * n]))
            .collect();
        Ok(AltBilinear { dim: n, values })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_order_is_lexicographic() {
        let n = 5;
        for (p, (i, j)) in pairs(n).enumerate() {
            assert_eq!(pair_index(n, i, j), p);
        }
        assert_eq!(pairs(n).count(), pair_count(n));
    }

    #[test]
    fn antisymmetric_by_construction() {
        let q = Rational::from_int;
        let mut w = AltBilinear::zero(3);
        w.set(2, 0, &[q(1), q(0), q(-3)]);
        assert_eq!(w.basis_value(0, 2), vec![q(-1), q(0), q(3)]);
        let x = vec![q(1), q(2), q(3)];
        assert!(vector::is_zero(&w.eval(&x, &x)));
        let coords = w.coordinates();
        assert_eq!(AltBilinear::from_coordinates(3, &coords).unwrap(), w);
    }
}
