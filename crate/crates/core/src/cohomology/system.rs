//! The linear systems cutting `Z²_X` out of the cochain space.
//!
//! A cochain `ω` enters every constraint through the dual bracket
//! `μ + εω`: the ε-part of the Jacobiator is `δω`, the ε-part of
//! `(μ+εω)^k` is `η_kω`, and that of `(μ+εω)^{(k)}` is `σ_kω`. Values are
//! carried symbolically as `c + ε·E` where `E` holds, per output component,
//! a linear form in the cochain coordinates. Since `μ+εω` is ℚ-bilinear in
//! these combined values, each level only keeps a ℚ-independent subset, and
//! the resulting constraint rows span the same space as evaluating on every
//! basis tuple.

use std::collections::BTreeMap;

use super::Variety;
use crate::lie::{triples, AltBilinear, LieAlgebra};
use crate::linalg::{vector, IncrementalEchelon, Rational, SparseRow, Vector};

#[derive(Clone, Debug)]
pub(crate) struct SymDual {
    constant: Vector,
    eps: Vec<SparseRow>,
}

fn to_sparse(map: BTreeMap<usize, Rational>) -> SparseRow {
    map.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

fn add_scaled(acc: &mut BTreeMap<usize, Rational>, c: &Rational, row: &[(usize, Rational)]) {
    for (j, x) in row {
        *acc.entry(*j).or_default() += c * x;
    }
}

impl SymDual {
    fn basis(n: usize, i: usize) -> Self {
        SymDual {
            constant: vector::unit(n, i),
            eps: vec![SparseRow::new(); n],
        }
    }

    fn is_zero(&self) -> bool {
        vector::is_zero(&self.constant) && self.eps.iter().all(|r| r.is_empty())
    }

    /// Flattened `(constant, ε-part)` for independence tests.
    fn flat(&self, ncoords: usize) -> SparseRow {
        let n = self.constant.len();
        let mut out: SparseRow = vector::support(&self.constant)
            .map(|(i, x)| (i, x.clone()))
            .collect();
        for (t, row) in self.eps.iter().enumerate() {
            out.extend(row.iter().map(|(j, x)| (n + t * ncoords + j, x.clone())));
        }
        out
    }

    /// `(μ + εω)(a, b)` to first order in ε.
    fn bracket(l: &LieAlgebra, a: &SymDual, b: &SymDual) -> SymDual {
        let n = l.dim();
        let mu = l.structure();
        let mut acc: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); n];
        let mut cross = |x: &Vector, ys: &[SparseRow], flip: bool| {
            for (c, xc) in vector::support(x) {
                for (d, yd) in ys.iter().enumerate() {
                    if yd.is_empty() {
                        continue;
                    }
                    let (i, j) = if flip { (d, c) } else { (c, d) };
                    let Some((neg, row)) = mu.sparse_value(i, j) else {
                        continue;
                    };
                    for (t, m) in row {
                        let coef = if neg { -(xc * m) } else { xc * m };
                        add_scaled(&mut acc[*t], &coef, yd);
                    }
                }
            }
        };
        cross(&a.constant, &b.eps, false);
        cross(&b.constant, &a.eps, true);
        for (c, ac) in vector::support(&a.constant) {
            for (d, bd) in vector::support(&b.constant) {
                if c == d {
                    continue;
                }
                let (i, j, coef) = if c < d {
                    (c, d, ac * bd)
                } else {
                    (d, c, -(ac * bd))
                };
                for (t, slot) in acc.iter_mut().enumerate() {
                    *slot.entry(AltBilinear::coordinate_index(n, i, j, t)).or_default() += &coef;
                }
            }
        }
        SymDual {
            constant: l.br(&a.constant, &b.constant),
            eps: acc.into_iter().map(to_sparse).collect(),
        }
    }

    fn with_basis(l: &LieAlgebra, a: &SymDual, j: usize) -> SymDual {
        SymDual::bracket(l, a, &SymDual::basis(l.dim(), j))
    }
}

/// Keeps the values that are ℚ-independent of those kept before.
fn independent(values: impl Iterator<Item = SymDual>, n: usize, ncoords: usize) -> Vec<SymDual> {
    let mut ech = IncrementalEchelon::new(n + n * ncoords);
    values
        .filter(|v| !v.is_zero() && ech.insert(&v.flat(ncoords)))
        .collect()
}

/// Constraint rows for `Z²_X`; feeds `sink` and stops early once it returns
/// `false` (e.g. when the system already has full rank).
pub(crate) fn for_each_constraint(
    l: &LieAlgebra,
    variety: Variety,
    mut sink: impl FnMut(&SparseRow) -> bool,
) {
    let n = l.dim();
    let ncoords = AltBilinear::coordinate_count(n);
    let basis: Vec<SymDual> = (0..n).map(|i| SymDual::basis(n, i)).collect();
    let mut emit = |v: &SymDual| v.eps.iter().filter(|r| !r.is_empty()).all(&mut sink);

    // δω: ε-part of the Jacobiator on i < j < k.
    let mut pair_cache: BTreeMap<(usize, usize), SymDual> = BTreeMap::new();
    let mut pair = |i: usize, j: usize| {
        pair_cache
            .entry((i, j))
            .or_insert_with(|| SymDual::bracket(l, &basis[i], &basis[j]))
            .clone()
    };
    for (i, j, k) in triples(n) {
        let parts = [
            SymDual::with_basis(l, &pair(i, j), k),
            SymDual::with_basis(l, &pair(j, k), i),
            SymDual::with_basis(l, &pair(i, k), j),
        ];
        let eps: Vec<SparseRow> = (0..n)
            .map(|t| {
                let mut m = BTreeMap::new();
                add_scaled(&mut m, &Rational::one(), &parts[0].eps[t]);
                add_scaled(&mut m, &Rational::one(), &parts[1].eps[t]);
                add_scaled(&mut m, &-Rational::one(), &parts[2].eps[t]);
                to_sparse(m)
            })
            .collect();
        let jac = SymDual {
            constant: vector::zeros(n),
            eps,
        };
        if !emit(&jac) {
            return;
        }
    }

    match variety {
        Variety::Lie => {}
        Variety::Nil(k) => {
            // Level i holds values of (μ+εω)^i on basis tuples.
            let mut level = basis.clone();
            for step in 1..=k {
                let candidates = level.iter().flat_map(|v| (0..n).map(move |j| (v, j)));
                let raw: Vec<SymDual> = if step == 1 {
                    crate::lie::pairs(n)
                        .map(|(i, j)| SymDual::bracket(l, &basis[i], &basis[j]))
                        .collect()
                } else {
                    candidates.map(|(v, j)| SymDual::with_basis(l, v, j)).collect()
                };
                level = independent(raw.into_iter(), n, ncoords);
                if level.is_empty() {
                    return;
                }
            }
            for v in &level {
                if !emit(v) {
                    return;
                }
            }
        }
        Variety::Sol(k) => {
            let mut level = basis.clone();
            for _ in 1..=k {
                let mut raw = Vec::new();
                for a in 0..level.len() {
                    for b in a + 1..level.len() {
                        raw.push(SymDual::bracket(l, &level[a], &level[b]));
                    }
                }
                level = independent(raw.into_iter(), n, ncoords);
                if level.is_empty() {
                    return;
                }
            }
            for v in &level {
                if !emit(v) {
                    return;
                }
            }
        }
    }
}
