//! Hall bases and the free `k`-step nilpotent Lie algebra `L_(k)(m)`.
//!
//! Words are stored in an arena indexed by Hall order: layer by layer, and
//! lexicographically by `(u, v)` positions inside a layer. A bracket of two
//! basis words is rewritten into the basis with antisymmetry and the Jacobi
//! identity, dropping every term of degree above `k`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::cohomology::{required_coordinates, resource_cap};
use crate::error::{LieError, Result};
use crate::lie::{AltBilinear, LieAlgebra};
use crate::linalg::{vector, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum HallWord {
    /// Generator `x_{i+1}`.
    Leaf(usize),
    /// `λ(u, v)` for basis positions `u > v`.
    Pair(usize, usize),
}

/// A linear combination of basis words, keyed by basis position.
pub type WordCombination = BTreeMap<usize, Rational>;

#[derive(Clone, Debug)]
pub struct HallBasis {
    m: usize,
    k: usize,
    words: Vec<HallWord>,
    degree: Vec<usize>,
    multidegree: Vec<Vec<usize>>,
    layers: Vec<Vec<usize>>,
    index: HashMap<HallWord, usize>,
}

impl HallBasis {
    pub fn new(m: usize, k: usize) -> Result<Self> {
        if m < 2 {
            return Err(LieError::invalid("a Hall basis needs at least 2 generators"));
        }
        if k < 1 {
            return Err(LieError::invalid("class must be at least 1"));
        }
        let mut b = HallBasis {
            m,
            k,
            words: Vec::new(),
            degree: Vec::new(),
            multidegree: Vec::new(),
            layers: Vec::new(),
            index: HashMap::new(),
        };
        let leaves: Vec<usize> = (0..m)
            .map(|i| b.push(HallWord::Leaf(i), 1, vector_unit(m, i)))
            .collect();
        b.layers.push(leaves);
        for d in 2..=k {
            let mut layer = Vec::new();
            let total = b.words.len();
            for u in 0..total {
                for v in 0..u {
                    if b.degree[u] + b.degree[v] != d || !b.is_standard_pair(u, v) {
                        continue;
                    }
                    let md: Vec<usize> = b.multidegree[u]
                        .iter()
                        .zip(&b.multidegree[v])
                        .map(|(x, y)| x + y)
                        .collect();
                    layer.push(b.push(HallWord::Pair(u, v), d, md));
                }
            }
            b.layers.push(layer);
        }
        Ok(b)
    }

    fn push(&mut self, w: HallWord, degree: usize, md: Vec<usize>) -> usize {
        let pos = self.words.len();
        self.words.push(w);
        self.degree.push(degree);
        self.multidegree.push(md);
        self.index.insert(w, pos);
        pos
    }

    /// `u > v`, and `v ≥ z` when `u = λ(w, z)`.
    pub fn is_standard_pair(&self, u: usize, v: usize) -> bool {
        u > v
            && match self.words[u] {
                HallWord::Leaf(_) => true,
                HallWord::Pair(_, z) => v >= z,
            }
    }

    pub fn generators(&self) -> usize {
        self.m
    }

    pub fn class(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, i: usize) -> HallWord {
        self.words[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degree[i]
    }

    pub fn multidegree(&self, i: usize) -> &[usize] {
        &self.multidegree[i]
    }

    /// Positions of `B₁, …, B_k`.
    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    pub fn position(&self, w: HallWord) -> Option<usize> {
        self.index.get(&w).copied()
    }

    /// Label such as `[[x2,x1],x1]`.
    pub fn label(&self, i: usize) -> String {
        match self.words[i] {
            HallWord::Leaf(g) => format!("x{}", g + 1),
            HallWord::Pair(u, v) => format!("[{},{}]", self.label(u), self.label(v)),
        }
    }

    /// `c_j = λ(…λ(λ(x₂,x₁),x₁)…,x₁)` of degree `j`; `c₁ = x₂`.
    pub fn c_element(&self, j: usize) -> Result<usize> {
        if j < 1 || j > self.k {
            return Err(LieError::invalid(format!("c_{j} needs 1 ≤ j ≤ {}", self.k)));
        }
        let mut c = 1;
        for _ in 1..j {
            c = self
                .position(HallWord::Pair(c, 0))
                .ok_or_else(|| LieError::invalid("c element is not a basis word"))?;
        }
        Ok(c)
    }
}

fn vector_unit(m: usize, i: usize) -> Vec<usize> {
    let mut v = vec![0; m];
    v[i] = 1;
    v
}

/// Rewrites brackets of basis words into the Hall basis of `L_(k)(m)`.
pub struct Normalizer<'a> {
    basis: &'a HallBasis,
    memo: HashMap<(usize, usize), WordCombination>,
    max_depth: usize,
}

/// Default recursion bound for [`Normalizer`].
pub const MAX_REWRITE_DEPTH: usize = 10_000;

fn add_into(acc: &mut WordCombination, c: &Rational, terms: &WordCombination) {
    for (w, x) in terms {
        let e = acc.entry(*w).or_default();
        *e += c * x;
        if e.is_zero() {
            acc.remove(w);
        }
    }
}

impl<'a> Normalizer<'a> {
    pub fn new(basis: &'a HallBasis) -> Self {
        Normalizer {
            basis,
            memo: HashMap::new(),
            max_depth: MAX_REWRITE_DEPTH,
        }
    }

    pub fn with_max_depth(mut self, depth: usize) -> Self {
        self.max_depth = depth;
        self
    }

    /// The class of `λ(u, v)` in `L_(k)(m)` for basis positions `u, v`.
    pub fn normalize(&mut self, u: usize, v: usize) -> Result<WordCombination> {
        self.rewrite(u, v, 0)
    }

    fn rewrite(&mut self, u: usize, v: usize, depth: usize) -> Result<WordCombination> {
        let b = self.basis;
        if u >= b.len() || v >= b.len() {
            return Err(LieError::invalid("word outside the basis"));
        }
        if depth > self.max_depth {
            return Err(LieError::SearchExhausted(format!(
                "bracket rewriting exceeded depth {}",
                self.max_depth
            )));
        }
        if u == v || b.degree[u] + b.degree[v] > b.k {
            return Ok(WordCombination::new());
        }
        if u < v {
            let mut r = self.rewrite(v, u, depth + 1)?;
            for x in r.values_mut() {
                *x = -std::mem::take(x);
            }
            return Ok(r);
        }
        if let Some(r) = self.memo.get(&(u, v)) {
            return Ok(r.clone());
        }
        let out = if b.is_standard_pair(u, v) {
            let pos = b
                .position(HallWord::Pair(u, v))
                .expect("standard word of degree ≤ k");
            WordCombination::from([(pos, Rational::one())])
        } else {
            let HallWord::Pair(w, z) = b.words[u] else {
                unreachable!("leaves always form standard pairs with smaller words")
            };
            // [[w,z],v] = [[w,v],z] + [w,[z,v]]
            let mut acc = WordCombination::new();
            for (t, c) in self.rewrite(w, v, depth + 1)? {
                let r = self.rewrite(t, z, depth + 1)?;
                add_into(&mut acc, &c, &r);
            }
            for (t, c) in self.rewrite(z, v, depth + 1)? {
                let r = self.rewrite(w, t, depth + 1)?;
                add_into(&mut acc, &c, &r);
            }
            acc
        };
        self.memo.insert((u, v), out.clone());
        Ok(out)
    }
}

/// Witt's necklace count of degree-`i` basis elements of the free Lie
/// algebra on `m` generators, for `i = 1..=k`.
pub fn necklace_dimension_oracle(m: usize, k: usize) -> Vec<u128> {
    fn mobius(mut d: usize) -> i128 {
        let mut sign = 1;
        let mut p = 2;
        while p * p <= d {
            if d.is_multiple_of(p) {
                d /= p;
                if d.is_multiple_of(p) {
                    return 0;
                }
                sign = -sign;
            }
            p += 1;
        }
        if d > 1 {
            sign = -sign;
        }
        sign
    }
    (1..=k)
        .map(|i| {
            let s: i128 = (1..=i)
                .filter(|d| i % d == 0)
                .map(|d| mobius(d) * (m as i128).pow((i / d) as u32))
                .sum();
            (s / i as i128) as u128
        })
        .collect()
}

/// `L_(k)(m)` on its Hall basis, with degrees recorded as metadata.
pub fn free_nilpotent(m: usize, k: usize) -> Result<LieAlgebra> {
    free_nilpotent_with_cap(m, k, resource_cap())
}

pub fn free_nilpotent_with_cap(m: usize, k: usize, cap: usize) -> Result<LieAlgebra> {
    if m < 2 {
        return Err(LieError::invalid("a Hall basis needs at least 2 generators"));
    }
    let dim: u128 = necklace_dimension_oracle(m, k).iter().sum();
    let required = usize::try_from(dim)
        .ok()
        .map(required_coordinates)
        .unwrap_or(usize::MAX);
    if required > cap {
        return Err(LieError::ResourceCap { required, cap });
    }
    let basis = HallBasis::new(m, k)?;
    structure_constants(&basis)
}

/// Builds the Lie algebra of a Hall basis via [`Normalizer`].
pub fn structure_constants(basis: &HallBasis) -> Result<LieAlgebra> {
    let n = basis.len();
    let mut norm = Normalizer::new(basis);
    let mut table = AltBilinear::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let r = norm.normalize(i, j)?;
            if r.is_empty() {
                continue;
            }
            let mut v = vector::zeros(n);
            for (w, c) in r {
                v[w] = c;
            }
            table.set(i, j, &v);
        }
    }
    LieAlgebra::new(table)
        .with_names((0..n).map(|i| basis.label(i)))?
        .with_degrees((0..n).map(|i| basis.degree(i)).collect())
}

impl fmt::Display for HallBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, layer) in self.layers.iter().enumerate() {
            let labels: Vec<String> = layer.iter().map(|&i| self.label(i)).collect();
            writeln!(f, "B{}: {}", d + 1, labels.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
