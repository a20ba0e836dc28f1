use serde::Serialize;

use super::{pairs, AltBilinear, MultilinearMap};
use crate::error::{LieError, Result};
use crate::linalg::{vector, Matrix, Rational, Subspace, Vector};

/// A Lie bracket on ℚⁿ given by structure constants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    names: Vec<String>,
    structure: AltBilinear,
    degrees: Option<Vec<usize>>,
}

/// Outcome of the Jacobi check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct JacobiReport {
    pub passed: bool,
    /// First triple `i < j < k` (0-based) with a nonzero Jacobiator.
    pub violation: Option<[usize; 3]>,
    pub jacobiator: Option<Vec<String>>,
}

/// Lower central and derived series, each truncated after stabilization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    pub lower_central: Vec<Subspace>,
    pub derived: Vec<Subspace>,
}

/// A basis adapted to the lower central series: every vector of degree `d`
/// lies in `g^d`, and the vectors of degree `≥ d` span `g^d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdaptedBasis {
    pub vectors: Vec<Vector>,
    pub degrees: Vec<usize>,
}

pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// `(i, j, [(c, k), …])`: one row of an integer structure-constant table.
pub type TableEntry<'a> = (usize, usize, &'a [(i64, usize)]);

impl LieAlgebra {
    /// Wraps a bracket table with default names `e1…en`. The Jacobi identity
    /// is not checked here; see [`LieAlgebra::validate`].
    pub fn new(structure: AltBilinear) -> Self {
        LieAlgebra {
            names: default_names(structure.dim()),
            structure,
            degrees: None,
        }
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra::new(AltBilinear::zero(n))
    }

    /// Builds from integer structure constants: each entry is
    /// `(i, j, [(c, k), …])` meaning `[e_i, e_j] = Σ c·e_k`, 0-based.
    pub fn from_table(n: usize, entries: &[TableEntry<'_>]) -> Self {
        let mut s = AltBilinear::zero(n);
        for &(i, j, terms) in entries {
            let mut v = vector::zeros(n);
            for &(c, k) in terms {
                v[k] += Rational::from_int(c);
            }
            s.set(i, j, &v);
        }
        LieAlgebra::new(s)
    }

    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != self.dim() {
            return Err(LieError::DimensionMismatch {
                expected: self.dim(),
                found: names.len(),
            });
        }
        self.names = names;
        Ok(self)
    }

    pub fn with_degrees(mut self, degrees: Vec<usize>) -> Result<Self> {
        if degrees.len() != self.dim() {
            return Err(LieError::DimensionMismatch {
                expected: self.dim(),
                found: degrees.len(),
            });
        }
        self.degrees = Some(degrees);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.structure.dim()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degrees(&self) -> Option<&[usize]> {
        self.degrees.as_deref()
    }

    pub fn structure(&self) -> &AltBilinear {
        &self.structure
    }

    pub fn basis(&self, i: usize) -> Vector {
        vector::unit(self.dim(), i)
    }

    /// `[e_i, e_j]`
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        self.structure.basis_value(i, j)
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(LieError::DimensionMismatch {
                    expected: self.dim(),
                    found: v.len(),
                });
            }
        }
        Ok(self.structure.eval(x, y))
    }

    /// `[x, y]` for vectors of the right length (panics otherwise).
    pub fn br(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.structure.eval(x, y)
    }

    /// `[x, e_j]`
    pub fn bracket_with_basis(&self, x: &[Rational], j: usize) -> Vector {
        self.structure.eval_with_basis(x, j)
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.is_zero()
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vector {
        let mut out = self.bracket_with_basis(&self.basis_bracket(i, j), k);
        out = vector::add(&out, &self.bracket_with_basis(&self.basis_bracket(j, k), i));
        vector::add(&out, &self.bracket_with_basis(&self.basis_bracket(k, i), j))
    }

    pub fn validate(&self) -> JacobiReport {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let v = self.jacobiator(i, j, k);
                    if !vector::is_zero(&v) {
                        return JacobiReport {
                            passed: false,
                            violation: Some([i, j, k]),
                            jacobiator: Some(v.iter().map(|x| x.to_string()).collect()),
                        };
                    }
                }
            }
        }
        JacobiReport {
            passed: true,
            violation: None,
            jacobiator: None,
        }
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn adjoint(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket_with_basis(x, j)).collect();
        Matrix::from_columns(n, &cols)
    }

    /// Matrix of `ad_h` restricted to `s`, in the canonical basis of `s`.
    pub fn adjoint_restricted(&self, h: &[Rational], s: &Subspace) -> Result<Matrix> {
        let basis = s.basis_vectors();
        let mut cols = Vec::with_capacity(basis.len());
        for b in &basis {
            let image = self.br(h, b);
            cols.push(s.coordinates(&image).ok_or(LieError::NotInvariant)?);
        }
        Ok(Matrix::from_columns(basis.len(), &cols))
    }

    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.adjoint(&self.basis(i))).collect();
        let mut b = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].mul(&ads[j]).trace();
                b[(j, i)] = t.clone();
                b[(i, j)] = t;
            }
        }
        b
    }

    /// `span [S, T]`
    pub fn bracket_span(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let sb = s.basis_vectors();
        let tb = t.basis_vectors();
        let mut gens = Vec::new();
        for x in &sb {
            for y in &tb {
                let v = self.br(x, y);
                if !vector::is_zero(&v) {
                    gens.push(v);
                }
            }
        }
        Subspace::span(self.dim(), &gens)
    }

    /// `[g, g]`, spanned by the brackets of basis pairs.
    pub fn commutator(&self) -> Subspace {
        let gens: Vec<Vector> = self
            .structure
            .nonzero_pairs()
            .map(|(i, j, _)| self.basis_bracket(i, j))
            .collect();
        Subspace::span(self.dim(), &gens)
    }

    fn iterate_series(&self, step: impl Fn(&Subspace) -> Subspace) -> Vec<Subspace> {
        let mut out = vec![Subspace::full(self.dim())];
        loop {
            let next = step(out.last().unwrap());
            if &next == out.last().unwrap() {
                return out;
            }
            let done = next.is_zero();
            out.push(next);
            if done {
                return out;
            }
        }
    }

    /// `g¹ = g, g^{i+1} = [g^i, g]`, ending at the first repeated term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim());
        self.iterate_series(|s| self.bracket_span(s, &full))
    }

    /// `d¹ = g, d^{i+1} = [d^i, d^i]`, ending at the first repeated term.
    pub fn derived_series(&self) -> Vec<Subspace> {
        self.iterate_series(|s| self.bracket_span(s, s))
    }

    pub fn series(&self) -> Series {
        Series {
            lower_central: self.lower_central_series(),
            derived: self.derived_series(),
        }
    }

    /// Smallest `k` with `g^{k+1} = 0`; `None` if the series stalls.
    pub fn nilpotency_class(&self) -> Option<usize> {
        class_of(&self.lower_central_series())
    }

    /// Smallest `k` with `d^{k+1} = 0`; `None` if the series stalls.
    pub fn solvability_class(&self) -> Option<usize> {
        class_of(&self.derived_series())
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.dim()))
    }

    /// `{x : [x, s] = 0 for all s ∈ S}`
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        if s.is_zero() {
            return Subspace::full(n);
        }
        // Row (s_b, t), column c: the t-th coordinate of [e_c, s_b].
        let mut rows = Vec::new();
        for b in s.basis_vectors() {
            let ad = self.adjoint(&b);
            for t in 0..n {
                let row: Vector = (0..n).map(|c| -&ad[(t, c)]).collect();
                if !vector::is_zero(&row) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return Subspace::full(n);
        }
        Matrix::from_rows(n, &rows).nullspace()
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = s.basis_vectors();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| s.contains(&self.br(&b[i], &b[j]))))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.basis_vectors()
            .iter()
            .all(|b| (0..self.dim()).all(|j| s.contains(&self.bracket_with_basis(b, j))))
    }

    /// First tuple `(x₁,…,x_{k+1})` of basis indices with `μ^k(x₁,…) ≠ 0`, or
    /// `None` when `μ^k = 0`.
    pub fn nil_witness(&self, k: usize) -> Option<Vec<usize>> {
        let n = self.dim();
        let mut level: Vec<(Vector, Vec<usize>)> = (0..n).map(|i| (self.basis(i), vec![i])).collect();
        for _ in 0..k {
            let mut next: Vec<(Vector, Vec<usize>)> = Vec::new();
            let mut span = Subspace::zero(n);
            for (v, t) in &level {
                for j in 0..n {
                    let w = self.bracket_with_basis(v, j);
                    if span.contains(&w) {
                        continue;
                    }
                    span = span
                        .sum(&Subspace::span(n, std::slice::from_ref(&w)))
                        .expect("same ambient");
                    let mut tt = t.clone();
                    tt.push(j);
                    next.push((w, tt));
                }
            }
            if next.is_empty() {
                return None;
            }
            level = next;
        }
        level.into_iter().next().map(|(_, t)| t)
    }

    /// First tuple of `2^k` basis indices with `μ^{(k)} ≠ 0`, or `None`.
    pub fn sol_witness(&self, k: usize) -> Option<Vec<usize>> {
        let n = self.dim();
        let mut level: Vec<(Vector, Vec<usize>)> = (0..n).map(|i| (self.basis(i), vec![i])).collect();
        for _ in 0..k {
            let mut next: Vec<(Vector, Vec<usize>)> = Vec::new();
            let mut span = Subspace::zero(n);
            for (a, ta) in &level {
                for (b, tb) in &level {
                    let w = self.br(a, b);
                    if span.contains(&w) {
                        continue;
                    }
                    span = span
                        .sum(&Subspace::span(n, std::slice::from_ref(&w)))
                        .expect("same ambient");
                    let mut tt = ta.clone();
                    tt.extend_from_slice(tb);
                    next.push((w, tt));
                }
            }
            if next.is_empty() {
                return None;
            }
            level = next;
        }
        level.into_iter().next().map(|(_, t)| t)
    }

    /// The bracket as a dense arity-2 map.
    pub fn as_map(&self) -> MultilinearMap {
        MultilinearMap::bilinear(&self.structure)
    }

    /// Left-normed power `μ^k`, arity `k+1`; `μ⁰ = id`.
    pub fn mu_power(&self, k: usize) -> MultilinearMap {
        let mu = self.as_map();
        let mut acc = MultilinearMap::identity(self.dim());
        for _ in 0..k {
            acc = mu.compose(&acc).expect("same dimension");
        }
        acc
    }

    /// Derived power `μ^{(k)} = μ(μ^{(k−1)}, μ^{(k−1)})`, arity `2^k`; `μ^{(0)} = id`.
    pub fn mu_derived(&self, k: usize) -> MultilinearMap {
        let mu = self.as_map();
        let mut acc = MultilinearMap::identity(self.dim());
        for _ in 0..k {
            acc = MultilinearMap::pair(&mu, &acc, &acc).expect("bilinear outer map");
        }
        acc
    }

    /// Basis adapted to the lower central series, built from the deepest
    /// term upwards by greedy extension with RREF rows.
    pub fn adapted_basis(&self) -> AdaptedBasis {
        let series = self.lower_central_series();
        let n = self.dim();
        let mut acc = Subspace::zero(n);
        let mut layers: Vec<Vec<Vector>> = vec![Vec::new(); series.len()];
        for (d, term) in series.iter().enumerate().rev() {
            let (grown, taken) = acc.extend_greedy(&term.basis_vectors());
            layers[d] = taken;
            acc = grown;
        }
        let mut vectors = Vec::with_capacity(n);
        let mut degrees = Vec::with_capacity(n);
        for (d, layer) in layers.into_iter().enumerate() {
            for v in layer {
                vectors.push(v);
                degrees.push(d + 1);
            }
        }
        AdaptedBasis { vectors, degrees }
    }
}

fn class_of(series: &[Subspace]) -> Option<usize> {
    series.last().filter(|s| s.is_zero()).map(|_| series.len() - 1)
}

/// Iterator over all basis triples `i < j < k`.
pub fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    pairs(n).flat_map(move |(i, j)| (j + 1..n).map(move |k| (i, j, k)))
}
