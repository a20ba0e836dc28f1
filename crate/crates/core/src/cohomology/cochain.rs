//! Cochain maps evaluated directly from their defining formulas.

use crate::lie::{triples, AltBilinear, LieAlgebra, MultilinearMap};
use crate::linalg::{vector, Matrix, Vector};

pub type Cochain1 = Matrix;
pub type Cochain2 = AltBilinear;

/// Alternating trilinear map stored on triples `i < j < k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain3 {
    dim: usize,
    values: Vec<Vector>,
}

impl Cochain3 {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn triple_count(n: usize) -> usize {
        n * n.saturating_sub(1) * n.saturating_sub(2) / 6
    }

    /// Values on `i < j < k` in lexicographic order.
    pub fn values(&self) -> impl Iterator<Item = ((usize, usize, usize), &Vector)> {
        triples(self.dim).zip(&self.values)
    }

    pub fn value(&self, i: usize, j: usize, k: usize) -> &Vector {
        let pos = triples(self.dim)
            .position(|t| t == (i, j, k))
            .expect("sorted in-range triple");
        &self.values[pos]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| vector::is_zero(v))
    }
}

/// `δ¹f(x,y) = μ(fx, y) + μ(x, fy) − f(μ(x,y))`
pub fn delta1(l: &LieAlgebra, f: &Cochain1) -> Cochain2 {
    let n = l.dim();
    assert_eq!((f.rows(), f.cols()), (n, n), "f must be n×n");
    Cochain2::from_fn(n, |i, j| {
        let mut v = l.bracket_with_basis(&f.column(i), j);
        v = vector::sub(&v, &l.bracket_with_basis(&f.column(j), i));
        vector::sub(&v, &f.mul_vec(&l.basis_bracket(i, j)))
    })
}

/// `δω(x,y,z) = sc μ(ω(x,y),z) + sc ω(μ(x,y),z)`
pub fn delta2(l: &LieAlgebra, w: &Cochain2) -> Cochain3 {
    let n = l.dim();
    assert_eq!(w.dim(), n);
    let values = triples(n)
        .map(|(i, j, k)| {
            let mut acc = vector::zeros(n);
            for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                acc = vector::add(&acc, &l.bracket_with_basis(&w.basis_value(a, b), c));
                acc = vector::add(&acc, &w.eval_with_basis(&l.basis_bracket(a, b), c));
            }
            acc
        })
        .collect();
    Cochain3 { dim: n, values }
}

/// `μ^{r}(v, e_{rest…})`, bracketing on the right one index at a time.
fn left_normed_tail(l: &LieAlgebra, mut v: Vector, rest: &[usize]) -> Vector {
    for &j in rest {
        if vector::is_zero(&v) {
            break;
        }
        v = l.bracket_with_basis(&v, j);
    }
    v
}

/// `η_kω(x₁,…,x_{k+1}) = Σ_{i=1}^{k} μ^{k−i}(ω(μ^{i−1}(x₁,…,x_i), x_{i+1}), x_{i+2},…,x_{k+1})`
pub fn eta_k(l: &LieAlgebra, w: &Cochain2, k: usize) -> MultilinearMap {
    assert!(k >= 1, "k ≥ 1");
    let n = l.dim();
    MultilinearMap::from_fn(n, k + 1, |t| {
        let mut acc = vector::zeros(n);
        let mut prefix = l.basis(t[0]);
        for i in 1..=k {
            if i > 1 {
                prefix = l.bracket_with_basis(&prefix, t[i - 1]);
            }
            let inner = w.eval_with_basis(&prefix, t[i]);
            acc = vector::add(&acc, &left_normed_tail(l, inner, &t[i + 1..]));
        }
        acc
    })
}

/// `η_k(ω) = Σ_{j=0}^{k−1} μ^{k−1−j} ∘ ω ∘ μ^j`, via dense composition.
pub fn eta_k_composition(l: &LieAlgebra, w: &Cochain2, k: usize) -> MultilinearMap {
    assert!(k >= 1, "k ≥ 1");
    let omega = MultilinearMap::bilinear(w);
    let mut acc = MultilinearMap::zero(l.dim(), k + 1);
    for j in 0..k {
        let term = l
            .mu_power(k - 1 - j)
            .compose(&omega)
            .and_then(|m| m.compose(&l.mu_power(j)))
            .expect("same dimension");
        acc = acc.add(&term).expect("same shape");
    }
    acc
}

/// `σ₁ω = ω`, `σ_iω(X,Y) = μ(M X, S Y) + μ(S X, M Y) + ω(M X, M Y)` with
/// `M = μ^{(i−1)}`, `S = σ_{i−1}ω`.
pub fn sigma_k(l: &LieAlgebra, w: &Cochain2, k: usize) -> MultilinearMap {
    assert!(k >= 1, "k ≥ 1");
    let mu = l.as_map();
    let omega = MultilinearMap::bilinear(w);
    let mut m = mu.clone();
    let mut s = omega.clone();
    for _ in 1..k {
        let next_s = MultilinearMap::pair(&mu, &m, &s)
            .and_then(|a| a.add(&MultilinearMap::pair(&mu, &s, &m)?))
            .and_then(|a| a.add(&MultilinearMap::pair(&omega, &m, &m)?))
            .expect("matching shapes");
        m = MultilinearMap::pair(&mu, &m, &m).expect("bilinear");
        s = next_s;
    }
    s
}
