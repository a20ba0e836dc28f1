use serde::Serialize;

use super::LieAlgebra;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct StructurePredicates {
    pub is_perfect: bool,
    pub has_abelian_factor: bool,
}

/// Isomorphism invariants; differing vectors certify non-isomorphism.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct InvariantVector {
    pub dim: usize,
    pub lower_central: Vec<usize>,
    pub derived: Vec<usize>,
    pub center_dim: usize,
    pub nilpotency_class: Option<usize>,
    pub solvability_class: Option<usize>,
    pub is_perfect: bool,
    pub has_abelian_factor: bool,
    pub killing_rank: usize,
}

impl InvariantVector {
    /// Names of the entries where `self` and `other` disagree.
    pub fn differences(&self, other: &InvariantVector) -> Vec<&'static str> {
        let mut out = Vec::new();
        macro_rules! cmp {
            ($($f:ident),*) => {$(
                if self.$f != other.$f {
                    out.push(stringify!($f));
                }
            )*};
        }
        cmp!(
            dim,
            lower_central,
            derived,
            center_dim,
            nilpotency_class,
            solvability_class,
            is_perfect,
            has_abelian_factor,
            killing_rank
        );
        out
    }
}

impl LieAlgebra {
    pub fn structure_predicates(&self) -> StructurePredicates {
        let comm = self.commutator();
        StructurePredicates {
            is_perfect: comm.is_full(),
            has_abelian_factor: !self.center().is_subspace_of(&comm),
        }
    }

    pub fn invariant_vector(&self) -> InvariantVector {
        let lower: Vec<usize> = self.lower_central_series().iter().map(|s| s.dim()).collect();
        let derived: Vec<usize> = self.derived_series().iter().map(|s| s.dim()).collect();
        let class = |s: &[usize]| (s.last() == Some(&0)).then(|| s.len() - 1);
        let preds = self.structure_predicates();
        InvariantVector {
            dim: self.dim(),
            nilpotency_class: class(&lower),
            solvability_class: class(&derived),
            lower_central: lower,
            derived,
            center_dim: self.center().dim(),
            is_perfect: preds.is_perfect,
            has_abelian_factor: preds.has_abelian_factor,
            killing_rank: self.killing_form().rank(),
        }
    }
}
