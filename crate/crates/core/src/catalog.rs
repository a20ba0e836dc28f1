//! Named algebras with pinned bases.
//!
//! | name | basis | brackets |
//! |------|-------|----------|
//! | `sl2` | a b c | [a,b]=2b, [a,c]=−2c, [b,c]=a |
//! | `sl2_sd_c2` | a b c d e | sl2 on a,b,c; [a,d]=d, [a,e]=−e, [b,e]=d, [c,d]=e |
//! | `sl2_sd_c2_a1` | a b c d e f | `sl2_sd_c2` ⊕ ⟨f⟩ |
//! | `sl2_a1` | a b c f | `sl2` ⊕ ⟨f⟩ |
//! | `contraction_ex` | a1 a2 y | [a1,y]=2a1, [a2,y]=−2a2 |
//! | `contraction_ex_literal` | a1 a2 y | [a1,y]=2a1, [a2,y]=2a2 |
//! | `aff1` | x y | [x,y]=y |
//! | `solv2` | e1 e2 | [e1,e2]=e2 |
//! | `nongh_ex` | a1 a2 x y z | `nongh_ex(h1, x*)` |
//! | `heisM`, `hM` | x1 y1 … xM yM z | [xi,yi]=z |
//! | `abelianL`, `aL` | e1 … eL | none |
//! | `free_M_K` | Hall words | free K-step nilpotent on M generators |

use crate::error::{LieError, Result};
use crate::free_nilpotent::free_nilpotent;
use crate::lie::{AltBilinear, LieAlgebra};
use crate::linalg::{vector, Rational, Vector};

/// The Heisenberg algebra `h_m` on `x1, y1, …, xm, ym, z`.
pub fn heisenberg(m: usize) -> Result<LieAlgebra> {
    if m < 1 {
        return Err(LieError::invalid("heisenberg needs m ≥ 1"));
    }
    let n = 2 * m + 1;
    let mut s = AltBilinear::zero(n);
    for i in 0..m {
        s.set(2 * i, 2 * i + 1, &vector::unit(n, n - 1));
    }
    let mut names = Vec::with_capacity(n);
    for i in 1..=m {
        names.push(format!("x{i}"));
        names.push(format!("y{i}"));
    }
    names.push("z".into());
    LieAlgebra::new(s).with_names(names)
}

pub fn abelian(l: usize) -> Result<LieAlgebra> {
    if l < 1 {
        return Err(LieError::invalid("abelian needs l ≥ 1"));
    }
    Ok(LieAlgebra::abelian(l))
}

/// A simple graph on vertices `1..=m` with edges `(i, j)`, `i < j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphSpec {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphSpec {
    /// Edges are 1-based; they are stored sorted.
    pub fn new(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertices < 1 {
            return Err(LieError::invalid("a graph needs at least one vertex"));
        }
        let mut sorted = edges.to_vec();
        for &(i, j) in &sorted {
            if !(1 <= i && i < j && j <= vertices) {
                return Err(LieError::invalid(format!("invalid edge ({i},{j})")));
            }
        }
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(LieError::invalid("duplicate edge"));
        }
        Ok(GraphSpec {
            vertices,
            edges: sorted,
        })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edgeless(m: usize) -> Result<Self> {
        GraphSpec::new(m, &[])
    }

    pub fn path(m: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (1..m).map(|i| (i, i + 1)).collect();
        GraphSpec::new(m, &edges)
    }

    pub fn complete(m: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (1..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j))).collect();
        GraphSpec::new(m, &edges)
    }

    /// Star with centre `1` and `m − 1` leaves.
    pub fn star(m: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (2..=m).map(|j| (1, j)).collect();
        GraphSpec::new(m, &edges)
    }

    /// Basis position of vertex `i` (1-based).
    pub fn vertex_index(&self, i: usize) -> usize {
        i - 1
    }

    /// Basis position of edge `(i, j)`.
    pub fn edge_index(&self, i: usize, j: usize) -> Option<usize> {
        self.edges
            .iter()
            .position(|&e| e == (i, j))
            .map(|p| self.vertices + p)
    }
}

/// Basis `v1 … vm` followed by one `a{i}_{j}` per edge, in sorted edge order.
pub fn graph_algebra(g: &GraphSpec) -> LieAlgebra {
    let m = g.vertices;
    let n = m + g.edges.len();
    let mut s = AltBilinear::zero(n);
    for (p, &(i, j)) in g.edges.iter().enumerate() {
        s.set(i - 1, j - 1, &vector::unit(n, m + p));
    }
    let names = (1..=m)
        .map(|i| format!("v{i}"))
        .chain(g.edges.iter().map(|(i, j)| format!("a{i}_{j}")));
    LieAlgebra::new(s).with_names(names).expect("length matches")
}

pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_table(3, &[(0, 1, &[(2, 1)]), (0, 2, &[(-2, 2)]), (1, 2, &[(1, 0)])])
        .with_names(["a", "b", "c"])
        .expect("3 names")
}

pub fn sl2_sd_c2() -> LieAlgebra {
    LieAlgebra::from_table(
        5,
        &[
            (0, 1, &[(2, 1)]),
            (0, 2, &[(-2, 2)]),
            (1, 2, &[(1, 0)]),
            (0, 3, &[(1, 3)]),
            (0, 4, &[(-1, 4)]),
            (1, 4, &[(1, 3)]),
            (2, 3, &[(1, 4)]),
        ],
    )
    .with_names(["a", "b", "c", "d", "e"])
    .expect("5 names")
}

fn with_factor(l: LieAlgebra, name: &str) -> LieAlgebra {
    let names: Vec<String> = l.names().iter().cloned().chain([name.to_string()]).collect();
    l.direct_sum(&LieAlgebra::abelian(1))
        .with_names(names)
        .expect("length matches")
}

pub fn contraction_ex() -> LieAlgebra {
    LieAlgebra::from_table(3, &[(0, 2, &[(2, 0)]), (1, 2, &[(-2, 1)])])
        .with_names(["a1", "a2", "y"])
        .expect("3 names")
}

/// The contraction example with both eigenvalues `2`; it is a Lie algebra
/// but the trace condition of the codimension-2 construction fails for it.
pub fn contraction_ex_literal() -> LieAlgebra {
    LieAlgebra::from_table(3, &[(0, 2, &[(2, 0)]), (1, 2, &[(2, 1)])])
        .with_names(["a1", "a2", "y"])
        .expect("3 names")
}

pub fn aff1() -> LieAlgebra {
    LieAlgebra::from_table(2, &[(0, 1, &[(1, 1)])])
        .with_names(["x", "y"])
        .expect("2 names")
}

pub fn solv2() -> LieAlgebra {
    LieAlgebra::from_table(2, &[(0, 1, &[(1, 1)])])
}

/// `g = ⟨a1, a2⟩ ⊕ h` with `g|h = ν`, `[a1,h] = f(h)a2`, `[a2,h] = f(h)a1`,
/// `[a1,a2] = 0`. Requires `ν` non-perfect with nonzero center, and `f ≠ 0`
/// vanishing on `[h, h]`.
pub fn nongh_ex(nu: &LieAlgebra, f: &[Rational]) -> Result<LieAlgebra> {
    let m = nu.dim();
    if f.len() != m {
        return Err(LieError::DimensionMismatch {
            expected: m,
            found: f.len(),
        });
    }
    let comm = nu.commutator();
    if comm.is_full() {
        return Err(LieError::invalid("ν must be non-perfect"));
    }
    if nu.center().is_zero() {
        return Err(LieError::invalid("ν must have nonzero center"));
    }
    if vector::is_zero(f) {
        return Err(LieError::invalid("f must be nonzero"));
    }
    if comm.basis_vectors().iter().any(|v| !vector::dot(f, v).is_zero()) {
        return Err(LieError::invalid("f must vanish on [h, h]"));
    }
    let n = m + 2;
    let lift = |v: &[Rational]| -> Vector {
        let mut out = vector::zeros(n);
        out[2..].clone_from_slice(v);
        out
    };
    let s = AltBilinear::from_fn(n, |i, j| match (i, j) {
        (0, 1) => vector::zeros(n),
        (0, h) => vector::scale(&f[h - 2], &vector::unit(n, 1)),
        (1, h) => vector::scale(&f[h - 2], &vector::unit(n, 0)),
        (a, b) => lift(&nu.basis_bracket(a - 2, b - 2)),
    });
    let names = ["a1".to_string(), "a2".to_string()]
        .into_iter()
        .chain(nu.names().iter().cloned());
    LieAlgebra::new(s).with_names(names)
}

/// `nongh_ex` with `ν = h1` (basis x, y, z) and `f = x*`.
pub fn nongh_default() -> LieAlgebra {
    let h1 = heisenberg(1)
        .and_then(|h| h.with_names(["x", "y", "z"]))
        .expect("h1");
    let f = vector::unit(3, 0);
    nongh_ex(&h1, &f).expect("constraints hold for h1 and x*")
}

fn parse_suffix(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)
        .filter(|s| !s.is_empty() && s.chars().all(|c| c.is_ascii_digit()))
        .and_then(|s| s.parse().ok())
}

/// Looks up a registry entry (see the module table).
pub fn named(name: &str) -> Result<LieAlgebra> {
    match name {
        "sl2" => return Ok(sl2()),
        "sl2_sd_c2" => return Ok(sl2_sd_c2()),
        "sl2_sd_c2_a1" => return Ok(with_factor(sl2_sd_c2(), "f")),
        "sl2_a1" => return Ok(with_factor(sl2(), "f")),
        "contraction_ex" => return Ok(contraction_ex()),
        "contraction_ex_literal" => return Ok(contraction_ex_literal()),
        "aff1" => return Ok(aff1()),
        "solv2" => return Ok(solv2()),
        "nongh_ex" => return Ok(nongh_default()),
        _ => {}
    }
    if let Some(m) = parse_suffix(name, "heis").or_else(|| parse_suffix(name, "h")) {
        return heisenberg(m);
    }
    if let Some(l) = parse_suffix(name, "abelian").or_else(|| parse_suffix(name, "a")) {
        return abelian(l);
    }
    if let Some(rest) = name.strip_prefix("free_") {
        if let Some((m, k)) = rest.split_once('_') {
            if let (Ok(m), Ok(k)) = (m.parse(), k.parse()) {
                return free_nilpotent(m, k);
            }
        }
    }
    Err(LieError::UnknownName(name.to_string()))
}

/// Fixed registry names, in a stable order.
pub const FIXED_NAMES: &[&str] = &[
    "sl2",
    "sl2_sd_c2",
    "sl2_sd_c2_a1",
    "sl2_a1",
    "contraction_ex",
    "contraction_ex_literal",
    "aff1",
    "solv2",
    "nongh_ex",
];

/// The algebras used for suite-wide checks: every fixed entry plus small
/// parametric ones.
pub fn standard_suite() -> Vec<(String, LieAlgebra)> {
    let extra = ["heis1", "heis2", "abelian3", "free_2_2", "free_2_3"];
    let mut out: Vec<(String, LieAlgebra)> = FIXED_NAMES
        .iter()
        .chain(extra.iter())
        .map(|n| (n.to_string(), named(n).expect("registry entry")))
        .collect();
    let path = graph_algebra(&GraphSpec::path(3).expect("path"));
    out.push(("graph_path3".into(), path));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Subspace;

    #[test]
    fn every_entry_validates() {
        for (name, l) in standard_suite() {
            assert!(l.validate().passed, "{name}");
        }
    }

    #[test]
    fn heisenberg_shapes() {
        let h = heisenberg(1).unwrap();
        assert_eq!((h.dim(), h.nilpotency_class()), (3, Some(2)));
        assert_eq!(heisenberg(2).unwrap().center().dim(), 1);
        assert!(heisenberg(0).is_err());
        assert_eq!(
            h.invariant_vector(),
            free_nilpotent(2, 2).unwrap().invariant_vector()
        );
    }

    #[test]
    fn abelian_shapes() {
        assert_eq!(abelian(1).unwrap().dim(), 1);
        assert_eq!(abelian(4).unwrap().nilpotency_class(), Some(1));
        assert!(abelian(3).unwrap().center().is_full());
    }

    #[test]
    fn graphs() {
        let single = graph_algebra(&GraphSpec::new(2, &[(1, 2)]).unwrap());
        assert_eq!(
            single.invariant_vector(),
            heisenberg(1).unwrap().invariant_vector()
        );
        let path = graph_algebra(&GraphSpec::path(3).unwrap());
        assert_eq!(path.dim(), 5);
        assert_eq!(path.commutator().dim(), 2);
        assert_eq!(path.nilpotency_class(), Some(2));
        let empty = graph_algebra(&GraphSpec::edgeless(4).unwrap());
        assert!(empty.is_abelian() && empty.dim() == 4);
        assert!(GraphSpec::new(3, &[(2, 1)]).is_err());
        assert!(GraphSpec::new(3, &[(1, 4)]).is_err());
        assert!(GraphSpec::new(3, &[(1, 2), (1, 2)]).is_err());
    }

    #[test]
    fn named_entries() {
        let l = named("sl2_sd_c2").unwrap();
        assert_eq!(l.dim(), 5);
        assert!(l.structure_predicates().is_perfect);
        assert_eq!(l.solvability_class(), None);
        let sl = named("sl2").unwrap();
        assert_eq!(sl.bracket(&sl.basis(1), &sl.basis(2)).unwrap(), sl.basis(0));
        assert!(!sl.killing_form().determinant().is_zero());
        assert_eq!(named("heis2").unwrap().dim(), 5);
        assert_eq!(named("free_2_3").unwrap().dim(), 5);
        assert!(matches!(named("nope"), Err(LieError::UnknownName(_))));
        assert_eq!(named("aff1").unwrap().nilpotency_class(), None);
        assert_eq!(named("aff1").unwrap().solvability_class(), Some(2));
    }

    #[test]
    fn nongh_builder_constraints() {
        let l = nongh_default();
        assert_eq!(l.dim(), 5);
        let h1 = heisenberg(1).unwrap();
        assert!(nongh_ex(&h1, &vector::unit(3, 2)).is_err());
        assert!(nongh_ex(&h1, &vector::zeros(3)).is_err());
        assert!(nongh_ex(&sl2(), &vector::unit(3, 0)).is_err());
        let h = Subspace::span(5, &[vector::unit(5, 2), vector::unit(5, 3), vector::unit(5, 4)]);
        assert!(l.is_subalgebra(&h));
    }
}
