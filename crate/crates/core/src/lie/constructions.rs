use super::{AltBilinear, LieAlgebra};
use crate::error::{LieError, Result};
use crate::linalg::{vector, Matrix, Subspace, Vector};

impl LieAlgebra {
    /// `L1 ⊕ L2` with the basis of `L1` first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (n1, n2) = (self.dim(), other.dim());
        let n = n1 + n2;
        let s = AltBilinear::from_fn(n, |i, j| {
            let mut v = vector::zeros(n);
            if j < n1 {
                v[..n1].clone_from_slice(&self.basis_bracket(i, j));
            } else if i >= n1 {
                v[n1..].clone_from_slice(&other.basis_bracket(i - n1, j - n1));
            }
            v
        });
        let mut names: Vec<String> = self.names().to_vec();
        for name in other.names() {
            let mut candidate = name.clone();
            while names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        let out = LieAlgebra::new(s).with_names(names).expect("length matches");
        match (self.degrees(), other.degrees()) {
            (Some(a), Some(b)) => out
                .with_degrees(a.iter().chain(b).copied().collect())
                .expect("length matches"),
            _ => out,
        }
    }

    /// `L / I`, with the basis vectors of `L` at the non-pivot coordinates
    /// of `I` as coset representatives.
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlgebra> {
        if ideal.ambient_dim() != self.dim() {
            return Err(LieError::DimensionMismatch {
                expected: self.dim(),
                found: ideal.ambient_dim(),
            });
        }
        if !self.is_ideal(ideal) {
            return Err(LieError::NotAnIdeal);
        }
        let reps = ideal.complement_indices();
        let m = reps.len();
        let s = AltBilinear::from_fn(m, |a, b| {
            let r = ideal.residual(&self.basis_bracket(reps[a], reps[b]));
            reps.iter().map(|&c| r[c].clone()).collect()
        });
        let names: Vec<String> = reps.iter().map(|&c| self.name(c).to_string()).collect();
        LieAlgebra::new(s).with_names(names)
    }

    /// The orbit action `g·μ(x, y) = g μ(g⁻¹x, g⁻¹y)` with `g = P`.
    pub fn change_of_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(LieError::DimensionMismatch {
                expected: n,
                found: p.rows(),
            });
        }
        let inv = p.try_inverse()?;
        let cols: Vec<Vector> = (0..n).map(|i| inv.column(i)).collect();
        let s = AltBilinear::from_fn(n, |i, j| p.mul_vec(&self.br(&cols[i], &cols[j])));
        LieAlgebra::new(s).with_names(self.names().to_vec())
    }

    /// The same algebra written in the basis `basis` (given in current
    /// coordinates); `names` label the new basis vectors.
    pub fn rebase(&self, basis: &[Vector], names: Vec<String>) -> Result<LieAlgebra> {
        let n = self.dim();
        if basis.len() != n {
            return Err(LieError::DimensionMismatch {
                expected: n,
                found: basis.len(),
            });
        }
        let q = Matrix::from_columns(n, basis);
        let inv = q.try_inverse()?;
        let s = AltBilinear::from_fn(n, |i, j| inv.mul_vec(&self.br(&basis[i], &basis[j])));
        LieAlgebra::new(s).with_names(names)
    }
}
