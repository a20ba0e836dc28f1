use super::LieAlgebra;
use crate::error::{LieError, Result};
use crate::linalg::{Matrix, Rational, Subspace, Vector};

/// A splitting `g = ⟨a₁, a₂⟩ ⊕ h` with the dual basis of `{a₁, a₂, h₁, …}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisDecomposition {
    a1: Vector,
    a2: Vector,
    h: Subspace,
    /// Row `r` is the dual functional of the `r`-th vector of `{a₁, a₂, h₁, …}`.
    dual: Matrix,
}

impl BasisDecomposition {
    pub fn new(a1: Vector, a2: Vector, h: Subspace) -> Result<Self> {
        let n = h.ambient_dim();
        for v in [&a1, &a2] {
            if v.len() != n {
                return Err(LieError::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        if h.dim() + 2 != n {
            return Err(LieError::invalid(format!(
                "subspace has dimension {}, expected codimension 2 in {n}",
                h.dim()
            )));
        }
        let mut cols = vec![a1.clone(), a2.clone()];
        cols.extend(h.basis_vectors());
        let dual = Matrix::from_columns(n, &cols)
            .inverse()
            .ok_or_else(|| LieError::invalid("a1, a2 and the subspace do not span the space"))?;
        Ok(BasisDecomposition { a1, a2, h, dual })
    }

    /// Decomposition with `h` spanned by all standard basis vectors except
    /// `a1` and `a2`, which must be distinct basis indices.
    pub fn from_basis_indices(n: usize, a1: usize, a2: usize) -> Result<Self> {
        let h: Vec<Vector> = (0..n)
            .filter(|&i| i != a1 && i != a2)
            .map(|i| crate::linalg::vector::unit(n, i))
            .collect();
        BasisDecomposition::new(
            crate::linalg::vector::unit(n, a1),
            crate::linalg::vector::unit(n, a2),
            Subspace::span(n, &h),
        )
    }

    pub fn dim(&self) -> usize {
        self.h.ambient_dim()
    }

    pub fn a1(&self) -> &Vector {
        &self.a1
    }

    pub fn a2(&self) -> &Vector {
        &self.a2
    }

    pub fn h(&self) -> &Subspace {
        &self.h
    }

    pub fn a1_star(&self) -> Vector {
        self.dual.row(0).to_vec()
    }

    pub fn a2_star(&self) -> Vector {
        self.dual.row(1).to_vec()
    }

    /// Dual functional of the `j`-th canonical basis vector of `h`.
    pub fn h_star(&self, j: usize) -> Vector {
        self.dual.row(j + 2).to_vec()
    }

    pub fn dual_matrix(&self) -> &Matrix {
        &self.dual
    }

    /// `π_h = id − a₁·a₁* − a₂·a₂*`
    pub fn projection_h(&self) -> Matrix {
        let n = self.dim();
        let mut p = Matrix::identity(n);
        for (a, f) in [(&self.a1, self.a1_star()), (&self.a2, self.a2_star())] {
            for i in 0..n {
                for j in 0..n {
                    let d = &a[i] * &f[j];
                    p[(i, j)] -= d;
                }
            }
        }
        p
    }

    /// `f(x)` for a functional given by its coordinate vector.
    pub fn apply(f: &[Rational], x: &[Rational]) -> Rational {
        crate::linalg::vector::dot(f, x)
    }

    /// `a₁*([a₁, h]) + a₂*([a₂, h])`
    pub fn trace_defect(&self, l: &LieAlgebra, h: &[Rational]) -> Rational {
        Self::apply(&self.a1_star(), &l.br(&self.a1, h)) + Self::apply(&self.a2_star(), &l.br(&self.a2, h))
    }
}
