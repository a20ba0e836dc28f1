//! Tangent-space membership decided over the dual numbers: `ω` is tangent to
//! the variety at `μ` iff `μ + εω` satisfies its defining identities over
//! `ℚ[ε]`. Everything is evaluated on basis tuples with plain dual
//! arithmetic, independently of the linear systems in `system`.

use super::{Cochain2, Variety};
use crate::lie::LieAlgebra;
use crate::linalg::{DualScalar, Rational};

type DualVec = Vec<DualScalar>;

struct DualBracket {
    n: usize,
    table: Vec<Vec<DualVec>>,
}

fn is_zero(v: &[DualScalar]) -> bool {
    v.iter().all(DualScalar::is_zero)
}

impl DualBracket {
    fn new(l: &LieAlgebra, w: &Cochain2) -> Self {
        let n = l.dim();
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let m = l.basis_bracket(i, j);
                        let e = w.basis_value(i, j);
                        m.into_iter().zip(e).map(|(a, b)| DualScalar::new(a, b)).collect()
                    })
                    .collect()
            })
            .collect();
        DualBracket { n, table }
    }

    fn unit(&self, i: usize) -> DualVec {
        (0..self.n)
            .map(|k| DualScalar::real(if k == i { Rational::one() } else { Rational::zero() }))
            .collect()
    }

    fn alternating(&self) -> bool {
        (0..self.n).all(|i| {
            is_zero(&self.table[i][i])
                && (0..self.n).all(|j| {
                    self.table[i][j]
                        .iter()
                        .zip(&self.table[j][i])
                        .all(|(a, b)| (a + b).is_zero())
                })
        })
    }

    fn bracket(&self, x: &[DualScalar], y: &[DualScalar]) -> DualVec {
        let mut out = vec![DualScalar::zero(); self.n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !t.is_zero() {
                        *o = &*o + &(&c * t);
                    }
                }
            }
        }
        out
    }

    fn jacobi(&self) -> bool {
        let n = self.n;
        let e: Vec<DualVec> = (0..n).map(|i| self.unit(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket(&self.bracket(&e[i], &e[j]), &e[k]);
                    let b = self.bracket(&self.bracket(&e[j], &e[k]), &e[i]);
                    let c = self.bracket(&self.bracket(&e[k], &e[i]), &e[j]);
                    let sum: DualVec = a.iter().zip(&b).zip(&c).map(|((x, y), z)| &(x + y) + z).collect();
                    if !is_zero(&sum) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `(μ+εω)^k` vanishes on every basis `(k+1)`-tuple.
    fn power_vanishes(&self, v: &DualVec, remaining: usize) -> bool {
        if is_zero(v) {
            return true;
        }
        if remaining == 0 {
            return false;
        }
        (0..self.n).all(|j| self.power_vanishes(&self.bracket(v, &self.unit(j)), remaining - 1))
    }

    /// `(μ+εω)^{(k)}` vanishes on every basis `2^k`-tuple.
    fn derived_vanishes(&self, k: usize) -> bool {
        let mut level: Vec<DualVec> = (0..self.n).map(|i| self.unit(i)).collect();
        for _ in 0..k {
            let mut next = Vec::new();
            for a in &level {
                for b in &level {
                    let v = self.bracket(a, b);
                    if !is_zero(&v) {
                        next.push(v);
                    }
                }
            }
            level = next;
        }
        level.is_empty()
    }
}

/// Whether `μ + εω` lies in the variety over `ℚ[ε]`.
pub fn dual_number_oracle(l: &LieAlgebra, w: &Cochain2, variety: Variety) -> bool {
    assert_eq!(l.dim(), w.dim(), "dimension mismatch");
    let d = DualBracket::new(l, w);
    if !d.alternating() || !d.jacobi() {
        return false;
    }
    match variety {
        Variety::Lie => true,
        Variety::Nil(k) => (0..d.n).all(|i| d.power_vanishes(&d.unit(i), k)),
        Variety::Sol(k) => d.derived_vanishes(k),
    }
}
