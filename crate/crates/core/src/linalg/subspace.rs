use super::{vector, Matrix, Rational, Vector};
use crate::error::{LieError, Result};

/// A subspace of ℚⁿ held as the canonical RREF of any spanning set.
///
/// Two subspaces are equal iff their basis matrices are identical, so the
/// derived `PartialEq` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::zeros(0, n),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::identity(n),
            pivots: (0..n).collect(),
        }
    }

    pub fn span(n: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(n);
        }
        let red = Matrix::from_rows(n, vectors).reduce();
        let rows: Vec<Vector> = (0..red.rank).map(|i| red.rref.row(i).to_vec()).collect();
        Subspace {
            ambient_dim: n,
            basis: Matrix::from_rows(n, &rows),
            pivots: red.pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LieError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// `v` minus its component along the pivot coordinates; zero iff `v ∈ self`.
    pub fn residual(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.ambient_dim);
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            let row = self.basis.row(i);
            for (j, x) in row.iter().enumerate().skip(p) {
                if !x.is_zero() {
                    r[j] -= &c * x;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient_dim && vector::is_zero(&self.residual(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Ok(Subspace::span(self.ambient_dim, &rows))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        // x ∈ S∩T iff every annihilating functional of S and of T kills x.
        let mut rows = self.annihilator().basis_vectors();
        rows.extend(other.annihilator().basis_vectors());
        if rows.is_empty() {
            return Ok(Subspace::full(self.ambient_dim));
        }
        Ok(Matrix::from_rows(self.ambient_dim, &rows).nullspace())
    }

    pub fn equal(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(self == other)
    }

    /// Functionals (as coordinate vectors) vanishing on the subspace.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient_dim);
        }
        self.basis.nullspace()
    }

    /// Standard basis vectors at the non-pivot coordinates; they span a
    /// complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Adds the vectors of `extra` (in order) that are not already in the span,
    /// returning the enlarged subspace and the accepted vectors.
    pub fn extend_greedy(&self, extra: &[Vector]) -> (Subspace, Vec<Vector>) {
        let mut cur = self.clone();
        let mut taken = Vec::new();
        for v in extra {
            if !cur.contains(v) {
                let mut rows = cur.basis_vectors();
                rows.push(v.clone());
                cur = Subspace::span(self.ambient_dim, &rows);
                taken.push(v.clone());
            }
        }
        (cur, taken)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> Vector {
        vector::unit(n, i)
    }

    #[test]
    fn lattice_of_coordinate_lines() {
        let s = Subspace::span(3, &[e(3, 0)]);
        let t = Subspace::span(3, &[e(3, 1)]);
        assert_eq!(s.sum(&t).unwrap().dim(), 2);
        assert_eq!(s.intersect(&t).unwrap().dim(), 0);
    }

    #[test]
    fn containment_case() {
        let s = Subspace::span(3, &[e(3, 0)]);
        let t = Subspace::span(3, &[e(3, 0), e(3, 2)]);
        assert_eq!(s.sum(&t).unwrap(), t);
        assert_eq!(s.intersect(&t).unwrap(), s);
        assert!(s.is_subspace_of(&t));
    }

    #[test]
    fn mismatched_ambient() {
        let s = Subspace::zero(2);
        let t = Subspace::zero(3);
        assert!(matches!(s.sum(&t), Err(LieError::DimensionMismatch { .. })));
        assert!(s.intersect(&t).is_err());
        assert!(s.equal(&t).is_err());
    }

    #[test]
    fn equal_spans_share_representation() {
        let q = Rational::from_int;
        let a = Subspace::span(3, &[vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]]);
        let b = Subspace::span(3, &[vec![q(1), q(2), q(1)], vec![q(2), q(1), q(-1)]]);
        assert_eq!(a, b);
        assert_eq!(a.basis(), b.basis());
    }
}
