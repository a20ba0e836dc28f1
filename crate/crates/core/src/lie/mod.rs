//! Lie algebras given by structure constants and the multilinear calculus
//! on top of them.

mod algebra;
mod bilinear;
mod constructions;
mod decomposition;
mod invariants;
mod multilinear;

pub use algebra::{default_names, triples, AdaptedBasis, JacobiReport, LieAlgebra, Series};
pub use bilinear::{pair_count, pair_index, pairs, AltBilinear};
pub use decomposition::BasisDecomposition;
pub use invariants::{InvariantVector, StructurePredicates};
pub use multilinear::{tuples, MultilinearMap, MAX_TUPLES};

#[cfg(test)]
mod tests;
