//! Dense multilinear maps `(ℚⁿ)^d → ℚⁿ`, stored on every basis tuple.
//!
//! Tuples are indexed in base `n` with the first argument most significant.
//! Storage is `n^d` vectors, so these maps are meant for small `n` and `d`:
//! the operator calculus, property tests and cross-checks.

use super::AltBilinear;
use crate::error::{LieError, Result};
use crate::linalg::{vector, Matrix, Rational, Vector};

/// Refuse to materialize maps with more basis tuples than this.
pub const MAX_TUPLES: usize = 1 << 22;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultilinearMap {
    dim: usize,
    arity: usize,
    values: Vec<Vector>,
}

fn tuple_count(n: usize, d: usize) -> usize {
    let count = (n as u128).pow(d as u32);
    assert!(
        count <= MAX_TUPLES as u128,
        "dense {d}-linear map on dimension {n} is too large"
    );
    count as usize
}

/// Odometer over `{0..n}^d` in index order.
pub fn tuples(n: usize, d: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if n == 0 && d > 0 { 0 } else { tuple_count(n, d) };
    let mut cur = vec![0usize; d];
    (0..total).map(move |step| {
        if step > 0 {
            let mut pos = d;
            while pos > 0 {
                pos -= 1;
                cur[pos] += 1;
                if cur[pos] < n {
                    break;
                }
                cur[pos] = 0;
            }
        }
        cur.clone()
    })
}

impl MultilinearMap {
    pub fn zero(n: usize, arity: usize) -> Self {
        MultilinearMap {
            dim: n,
            arity,
            values: vec![vector::zeros(n); tuple_count(n, arity)],
        }
    }

    pub fn from_fn(n: usize, arity: usize, mut f: impl FnMut(&[usize]) -> Vector) -> Self {
        let values = tuples(n, arity)
            .map(|t| {
                let v = f(&t);
                assert_eq!(v.len(), n);
                v
            })
            .collect();
        MultilinearMap {
            dim: n,
            arity,
            values,
        }
    }

    pub fn identity(n: usize) -> Self {
        MultilinearMap::from_fn(n, 1, |t| vector::unit(n, t[0]))
    }

    /// The linear map `x ↦ Mx` as an arity-1 map.
    pub fn linear(m: &Matrix) -> Self {
        assert_eq!(m.rows(), m.cols());
        MultilinearMap::from_fn(m.rows(), 1, |t| m.column(t[0]))
    }

    pub fn bilinear(w: &AltBilinear) -> Self {
        MultilinearMap::from_fn(w.dim(), 2, |t| w.basis_value(t[0], t[1]))
    }

    /// `(f₁·f₂·…·f_d)(x₁,…,x_d) · target = f₁(x₁)⋯f_d(x_d) · target`.
    pub fn functional_product(fs: &[Vector], target: &[Rational]) -> Self {
        let n = target.len();
        MultilinearMap::from_fn(n, fs.len(), |t| {
            let c: Rational = t.iter().zip(fs).fold(Rational::one(), |acc, (&i, f)| acc * &f[i]);
            vector::scale(&c, target)
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    fn index(&self, t: &[usize]) -> usize {
        assert_eq!(t.len(), self.arity, "tuple length");
        t.iter().fold(0, |acc, &i| {
            debug_assert!(i < self.dim);
            acc * self.dim + i
        })
    }

    pub fn value(&self, t: &[usize]) -> &Vector {
        &self.values[self.index(t)]
    }

    /// `φ(v, e_{rest…})` by linearity in the first argument.
    pub fn eval_first(&self, v: &[Rational], rest: &[usize]) -> Vector {
        let mut out = vector::zeros(self.dim);
        let mut t = Vec::with_capacity(self.arity);
        for (c, x) in vector::support(v) {
            t.clear();
            t.push(c);
            t.extend_from_slice(rest);
            vector::axpy(&mut out, x, self.value(&t));
        }
        out
    }

    /// Multilinear extension to arbitrary vectors.
    pub fn eval(&self, args: &[&[Rational]]) -> Vector {
        assert_eq!(args.len(), self.arity);
        let mut out = vector::zeros(self.dim);
        let mut t = vec![0usize; self.arity];
        self.eval_rec(args, 0, &Rational::one(), &mut t, &mut out);
        out
    }

    fn eval_rec(
        &self,
        args: &[&[Rational]],
        pos: usize,
        coeff: &Rational,
        t: &mut Vec<usize>,
        out: &mut Vector,
    ) {
        if pos == self.arity {
            vector::axpy(out, coeff, self.value(t));
            return;
        }
        for (i, x) in vector::support(args[pos]) {
            t[pos] = i;
            self.eval_rec(args, pos + 1, &(coeff * x), t, out);
        }
    }

    /// `(φ∘ψ)(x₁,…) = φ(ψ(x₁,…,x_j), x_{j+1},…)`.
    pub fn compose(&self, psi: &MultilinearMap) -> Result<MultilinearMap> {
        if self.dim != psi.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                found: psi.dim,
            });
        }
        if self.arity == 0 || psi.arity == 0 {
            return Err(LieError::invalid("composition needs positive arities"));
        }
        let j = psi.arity;
        Ok(MultilinearMap::from_fn(self.dim, self.arity + j - 1, |t| {
            self.eval_first(psi.value(&t[..j]), &t[j..])
        }))
    }

    /// `(X, Y) ↦ outer(left(X), right(Y))` for a bilinear `outer`.
    pub fn pair(
        outer: &MultilinearMap,
        left: &MultilinearMap,
        right: &MultilinearMap,
    ) -> Result<MultilinearMap> {
        if outer.arity != 2 {
            return Err(LieError::ArityMismatch {
                expected: 2,
                found: outer.arity,
            });
        }
        let a = left.arity;
        Ok(MultilinearMap::from_fn(outer.dim, a + right.arity, |t| {
            outer.eval(&[left.value(&t[..a]), right.value(&t[a..])])
        }))
    }

    /// `sc T(x,y,z) = T(x,y,z) + T(y,z,x) + T(z,x,y)`.
    pub fn cyclic_sum(&self) -> Result<MultilinearMap> {
        if self.arity != 3 {
            return Err(LieError::ArityMismatch {
                expected: 3,
                found: self.arity,
            });
        }
        Ok(MultilinearMap::from_fn(self.dim, 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let mut v = self.value(&[x, y, z]).clone();
            v = vector::add(&v, self.value(&[y, z, x]));
            vector::add(&v, self.value(&[z, x, y]))
        }))
    }

    fn zip_with(&self, other: &MultilinearMap, c: &Rational) -> Result<MultilinearMap> {
        if (self.dim, self.arity) != (other.dim, other.arity) {
            return Err(LieError::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| {
                let mut v = a.clone();
                vector::axpy(&mut v, c, b);
                v
            })
            .collect();
        Ok(MultilinearMap {
            dim: self.dim,
            arity: self.arity,
            values,
        })
    }

    pub fn add(&self, other: &MultilinearMap) -> Result<MultilinearMap> {
        self.zip_with(other, &Rational::one())
    }

    pub fn sub(&self, other: &MultilinearMap) -> Result<MultilinearMap> {
        self.zip_with(other, &-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> MultilinearMap {
        MultilinearMap {
            dim: self.dim,
            arity: self.arity,
            values: self.values.iter().map(|v| vector::scale(c, v)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| vector::is_zero(v))
    }

    /// First basis tuple (in index order) with a nonzero value.
    pub fn first_nonzero(&self) -> Option<Vec<usize>> {
        tuples(self.dim, self.arity)
            .zip(&self.values)
            .find(|(_, v)| !vector::is_zero(v))
            .map(|(t, _)| t)
    }

    /// Swapping any two adjacent arguments negates the value.
    pub fn is_alternating(&self) -> bool {
        tuples(self.dim, self.arity).all(|t| {
            (0..self.arity.saturating_sub(1)).all(|p| {
                let mut s = t.clone();
                s.swap(p, p + 1);
                vector::is_zero(&vector::add(self.value(&t), self.value(&s)))
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odometer_matches_index() {
        let m = MultilinearMap::from_fn(3, 2, |t| vec![Rational::from_int((t[0] * 3 + t[1]) as i64); 3]);
        for (k, t) in tuples(3, 2).enumerate() {
            assert_eq!(m.value(&t)[0], Rational::from_int(k as i64));
        }
    }

    #[test]
    fn identity_is_neutral_for_composition() {
        let q = Rational::from_int;
        let f = Matrix::from_i64(2, 2, &[1, 2, 3, 4]);
        let lin = MultilinearMap::linear(&f);
        let id = MultilinearMap::identity(2);
        assert_eq!(lin.compose(&id).unwrap(), lin);
        assert_eq!(id.compose(&lin).unwrap(), lin);
        assert_eq!(lin.eval(&[&[q(1), q(1)]]), vec![q(3), q(7)]);
    }

    #[test]
    fn cyclic_sum_needs_arity_three() {
        assert!(MultilinearMap::identity(2).cyclic_sum().is_err());
        let t = MultilinearMap::from_fn(2, 3, |_| vec![Rational::one(), Rational::zero()]);
        assert_eq!(t.cyclic_sum().unwrap(), t.scale(&Rational::from_int(3)));
    }
}
