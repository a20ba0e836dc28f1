//! Constrained second cohomology `H²_X(μ,μ) = Z²_X / B²` for
//! `X ∈ {L_n, N_{n,k}, S_{n,k}}`, and an independent dual-number check.

mod cochain;
mod oracle;
mod system;
mod variety;

pub use cochain::{delta1, delta2, eta_k, eta_k_composition, sigma_k, Cochain1, Cochain2, Cochain3};
pub use oracle::dual_number_oracle;
pub use variety::Variety;

use serde::Serialize;

use crate::error::{LieError, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{IncrementalEchelon, Matrix, Rational, Vector};

/// Default bound on `n·C(n,3)`, the number of coordinates of `δ`'s codomain.
pub const DEFAULT_CAP: usize = 200_000;

/// Environment variable overriding [`DEFAULT_CAP`].
pub const CAP_ENV: &str = "LIEFORGE_CAP";

/// The cap from `LIEFORGE_CAP` if set and valid, else [`DEFAULT_CAP`].
pub fn resource_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

pub fn required_coordinates(n: usize) -> usize {
    n * Cochain3::triple_count(n)
}

#[derive(Clone, Debug)]
pub struct CohomologySpace {
    pub variety: Variety,
    pub z_dim: usize,
    pub b_dim: usize,
    pub h_dim: usize,
    pub z_basis: Vec<Cochain2>,
    pub h_representatives: Vec<Cochain2>,
    /// Every `δ¹(E_ab)` satisfied the constraint system.
    pub b_in_z: bool,
    constraints: IncrementalEchelon,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Certificate {
    CertifiedRigid,
    Inconclusive,
}

impl CohomologySpace {
    /// Whether `ω` solves the stacked linear system defining `Z²_X`.
    pub fn is_cocycle(&self, w: &Cochain2) -> bool {
        self.constraints.annihilates(&w.coordinates())
    }

    pub fn constraint_rank(&self) -> usize {
        self.constraints.rank()
    }

    pub fn certificate(&self) -> Certificate {
        if self.h_dim == 0 {
            Certificate::CertifiedRigid
        } else {
            Certificate::Inconclusive
        }
    }
}

/// Elementary matrix `E_ab`.
fn elementary(n: usize, a: usize, b: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(a, b)] = Rational::one();
    m
}

/// The coboundaries `δ¹(E_ab)` for all `a, b`, spanning `B²`.
pub fn coboundary_generators(l: &LieAlgebra) -> Vec<Cochain2> {
    let n = l.dim();
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| delta1(l, &elementary(n, a, b)))
        .collect()
}

pub fn cohomology(l: &LieAlgebra, variety: Variety) -> Result<CohomologySpace> {
    cohomology_with_cap(l, variety, resource_cap())
}

pub fn cohomology_with_cap(l: &LieAlgebra, variety: Variety, cap: usize) -> Result<CohomologySpace> {
    let n = l.dim();
    let required = required_coordinates(n);
    if required > cap {
        return Err(LieError::ResourceCap { required, cap });
    }
    variety.check(l)?;
    let ncoords = Cochain2::coordinate_count(n);

    let mut constraints = IncrementalEchelon::new(ncoords);
    system::for_each_constraint(l, variety, |row| {
        constraints.insert(row);
        !constraints.is_full()
    });

    let z_vectors: Vec<Vector> = constraints.nullspace_basis();
    let z_basis: Vec<Cochain2> = z_vectors
        .iter()
        .map(|v| Cochain2::from_coordinates(n, v).expect("coordinate count"))
        .collect();

    let mut span = IncrementalEchelon::new(ncoords);
    let mut b_in_z = true;
    for cob in coboundary_generators(l) {
        let c = cob.coordinates();
        b_in_z &= constraints.annihilates(&c);
        span.insert_dense(&c);
    }
    let b_dim = span.rank();
    let h_representatives: Vec<Cochain2> = z_vectors
        .iter()
        .zip(&z_basis)
        .filter(|(v, _)| span.insert_dense(v))
        .map(|(_, w)| w.clone())
        .collect();

    let z_dim = z_basis.len();
    Ok(CohomologySpace {
        variety,
        z_dim,
        b_dim,
        h_dim: z_dim - b_dim.min(z_dim),
        z_basis,
        h_representatives,
        b_in_z,
        constraints,
    })
}

/// `CERTIFIED_RIGID` iff `H²_X = 0`; a nonzero `H²` never certifies
/// non-rigidity.
pub fn rigidity_certificate(l: &LieAlgebra, variety: Variety) -> Result<(Certificate, CohomologySpace)> {
    let space = cohomology(l, variety)?;
    Ok((space.certificate(), space))
}

#[cfg(test)]
mod tests;
