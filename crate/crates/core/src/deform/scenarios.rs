use super::{
    default_samples, deform_codim2, deform_gh, describe_vector, witness, LinearDeformation, Provenance,
    Witness,
};
use crate::catalog::{self, GraphSpec};
use crate::cohomology::Variety;
use crate::error::{LieError, Result};
use crate::free_nilpotent::{free_nilpotent, HallBasis};
use crate::lie::{AltBilinear, BasisDecomposition, LieAlgebra};
use crate::linalg::{vector, Matrix, Rational, Subspace, Vector};

/// A validated deformation together with its witness at the default samples.
#[derive(Clone, Debug)]
pub struct ScenarioResult {
    pub deformation: LinearDeformation,
    pub witness: Witness,
}

fn finish(defm: LinearDeformation, variety: Variety) -> Result<ScenarioResult> {
    let deformation = defm.with_variety(variety)?;
    let witness = witness(&deformation, &default_samples());
    Ok(ScenarioResult { deformation, witness })
}

fn codim2(l: &LieAlgebra, a1: Vector, a2: Vector, h: &[Vector], y: &[Rational]) -> Result<LinearDeformation> {
    let dec = BasisDecomposition::new(a1, a2, Subspace::span(l.dim(), h))?;
    deform_codim2(l, &dec, y)
}

fn units_except(n: usize, skip: &[usize]) -> Vec<Vector> {
    (0..n)
        .filter(|i| !skip.contains(i))
        .map(|i| vector::unit(n, i))
        .collect()
}

fn tagged(defm: LinearDeformation, construction: &str, extra: &[(&str, String)]) -> LinearDeformation {
    let mut p = Provenance::new(construction);
    p.parameters = defm.provenance().parameters.clone();
    p = p.with("via", defm.provenance().construction.clone());
    for (k, v) in extra {
        p = p.with(*k, v.clone());
    }
    LinearDeformation {
        provenance: p,
        ..defm
    }
}

/// Free `k`-step nilpotent algebra on `m` generators deformed inside
/// `N_{n,k+1}` along `x₁ ∧ c_k ⊗ y`.
pub fn scenario_free_nilpotent(m: usize, k: usize) -> Result<ScenarioResult> {
    if (m, k) == (2, 2) {
        return Err(LieError::Rejected(
            "free_nilpotent(2,2) is the single exception: it is the 3-dimensional Heisenberg algebra, rigid in N(3,2)"
                .into(),
        ));
    }
    if k < 2 {
        return Err(LieError::invalid("the free-nilpotent scenario needs k ≥ 2"));
    }
    let basis = HallBasis::new(m, k)?;
    let l = free_nilpotent(m, k)?;
    let n = l.dim();
    let ck = basis.c_element(k)?;
    let y = *basis.layers()[k - 1]
        .iter()
        .find(|&&i| i != ck)
        .ok_or_else(|| LieError::invalid("top layer has a single element"))?;
    let defm = codim2(
        &l,
        vector::unit(n, 0),
        vector::unit(n, ck),
        &units_except(n, &[0, ck]),
        &vector::unit(n, y),
    )?;
    finish(tagged(defm, "free-nilpotent", &[]), Variety::Nil(k + 1))
}

/// `h_m` deformed inside `N_{2m+1,3}` along `x₁ ∧ x₂ ⊗ y₁`.
pub fn scenario_heisenberg(m: usize) -> Result<ScenarioResult> {
    if m < 2 {
        return Err(LieError::Rejected(
            "the Heisenberg scenario needs m > 1; h1 is rigid in N(3,2)".into(),
        ));
    }
    let l = catalog::heisenberg(m)?;
    let n = l.dim();
    let defm = codim2(
        &l,
        vector::unit(n, 0),
        vector::unit(n, 2),
        &units_except(n, &[0, 2]),
        &vector::unit(n, 1),
    )?;
    finish(tagged(defm, "heisenberg", &[]), Variety::Nil(3))
}

/// Graph algebra deformed inside `N_{n,3}`.
pub fn scenario_graph(g: &GraphSpec) -> Result<ScenarioResult> {
    let l = catalog::graph_algebra(g);
    let inv = l.invariant_vector();
    for (name, small) in [
        ("h1", catalog::heisenberg(1)?),
        ("a1", LieAlgebra::abelian(1)),
        ("a2", LieAlgebra::abelian(2)),
    ] {
        if inv == small.invariant_vector() {
            return Err(LieError::Rejected(format!(
                "the graph algebra is isomorphic to {name}, which is excluded"
            )));
        }
    }
    let n = l.dim();
    let m = g.vertices();
    let edges = g.edges();
    let defm = match edges.len() {
        0 => {
            let ideal = Subspace::span(n, &units_except(n, &[0]));
            let mut d = Matrix::zeros(n, n);
            d[(1, 2)] = Rational::one();
            tagged(
                deform_gh(&l, &ideal, &vector::unit(n, 0), &d)?,
                "graph",
                &[("case", "edgeless".into())],
            )
        }
        1 => {
            let (i, j) = edges[0];
            let k = (1..=m)
                .find(|&v| v != i && v != j)
                .expect("more than two vertices");
            let a1 = g.vertex_index(i);
            let a2 = g.edge_index(i, j).expect("edge present");
            let h: Vec<Vector> = (1..=m)
                .filter(|&v| v != i)
                .map(|v| vector::unit(n, g.vertex_index(v)))
                .collect();
            let defm = codim2(
                &l,
                vector::unit(n, a1),
                vector::unit(n, a2),
                &h,
                &vector::unit(n, g.vertex_index(k)),
            )?;
            tagged(defm, "graph", &[("case", "single-edge".into())])
        }
        _ => {
            let (i, j) = edges[0];
            let (p, q) = edges[1];
            let a1 = g.vertex_index(i);
            let a2 = g.edge_index(i, j).expect("edge present");
            let y = g.edge_index(p, q).expect("edge present");
            let defm = codim2(
                &l,
                vector::unit(n, a1),
                vector::unit(n, a2),
                &units_except(n, &[a1, a2]),
                &vector::unit(n, y),
            )?;
            tagged(defm, "graph", &[("case", "several-edges".into())])
        }
    };
    finish(defm, Variety::Nil(3))
}

/// `sl2_sd_c2 ⊕ ⟨f⟩` deformed along `d ∧ e ⊗ f`; the result is perfect.
pub fn scenario_exceptional_perfect() -> Result<ScenarioResult> {
    let l = catalog::named("sl2_sd_c2_a1")?;
    let defm = codim2(
        &l,
        vector::unit(6, 3),
        vector::unit(6, 4),
        &units_except(6, &[3, 4]),
        &vector::unit(6, 5),
    )?;
    finish(tagged(defm, "exceptional-perfect", &[]), Variety::Lie)
}

/// `contraction_ex` deformed along `a₁ ∧ a₂ ⊗ y` with `h = ⟨y⟩`.
pub fn scenario_contraction() -> Result<ScenarioResult> {
    contraction_of(&catalog::contraction_ex())
}

pub(crate) fn contraction_of(l: &LieAlgebra) -> Result<ScenarioResult> {
    let defm = codim2(
        l,
        vector::unit(3, 0),
        vector::unit(3, 1),
        &[vector::unit(3, 2)],
        &vector::unit(3, 2),
    )?;
    finish(tagged(defm, "contraction", &[]), Variety::Lie)
}

/// `nongh_ex` deformed along `a₁ ∧ a₂ ⊗ z`.
pub fn scenario_nongh() -> Result<ScenarioResult> {
    let l = catalog::nongh_default();
    let n = l.dim();
    let z = n - 1;
    let defm = codim2(
        &l,
        vector::unit(n, 0),
        vector::unit(n, 1),
        &units_except(n, &[0, 1]),
        &vector::unit(n, z),
    )?;
    finish(tagged(defm, "nongh", &[]), Variety::Lie)
}

/// Context for the abelian-factor constructions on `G = L ⊕ 𝔞_l`.
struct FactorSum {
    base: LieAlgebra,
    g: LieAlgebra,
    m: usize,
    l: usize,
}

impl FactorSum {
    fn new(base: &LieAlgebra, l: usize) -> Self {
        let names: Vec<String> = (1..=l).map(|i| format!("c{i}")).collect();
        let factor = LieAlgebra::abelian(l).with_names(names).expect("l names");
        FactorSum {
            base: base.clone(),
            g: base.direct_sum(&factor),
            m: base.dim(),
            l,
        }
    }

    fn n(&self) -> usize {
        self.m + self.l
    }

    /// `c_i` (1-based) as a vector of `G`.
    fn c(&self, i: usize) -> Vector {
        vector::unit(self.n(), self.m + i - 1)
    }

    fn lift(&self, v: &[Rational]) -> Vector {
        let mut out = vector::zeros(self.n());
        out[..self.m].clone_from_slice(v);
        out
    }
}

fn branch_result(
    defm: LinearDeformation,
    branch: &str,
    extra: &[(&str, String)],
    variety: Variety,
) -> Result<ScenarioResult> {
    let mut tags = vec![("branch", branch.to_string())];
    tags.extend(extra.iter().cloned());
    finish(tagged(defm, "abelian-factor", &tags), variety)
}

/// Deforms `base ⊕ 𝔞_l` inside `variety`, dispatching on `l`, the variety
/// and the structure of `base`:
///
/// * (a) `l ≥ 2` in LIE/SOL, or `l ≥ 3` in NIL: a fixed non-abelian bracket
///   on the factor (`[c1,c2] = c2`, resp. `[c1,c2] = c3`);
/// * (b) `l = 1` in LIE/SOL with `base` non-perfect;
/// * (c) `l = 2` in NIL;
/// * (d) `l = 1` in NIL, `n/n³` not free 2-step nilpotent;
/// * (e) `l = 1` in NIL, `n/n³` free, using the set
///   `S = {x : [x,n²] = 0, dim [x,n] ≤ 1}`.
pub fn scenario_abelian_factor(base: &LieAlgebra, l: usize, variety: Variety) -> Result<ScenarioResult> {
    if l == 0 {
        return Err(LieError::invalid("the abelian factor must have dimension ≥ 1"));
    }
    match variety {
        Variety::Nil(1) | Variety::Sol(1) => {
            return Err(LieError::Rejected(format!(
                "{variety} contains only abelian algebras; every point is rigid"
            )))
        }
        _ => {}
    }
    let fs = FactorSum::new(base, l);
    variety.check(&fs.g)?;
    match variety {
        Variety::Lie | Variety::Sol(_) if l >= 2 => branch_a(&fs, variety, false),
        Variety::Lie | Variety::Sol(_) => branch_b(&fs, variety),
        Variety::Nil(_) if l >= 3 => branch_a(&fs, variety, true),
        Variety::Nil(_) if l == 2 => branch_c(&fs, variety),
        Variety::Nil(_) => nil_one(&fs, variety),
    }
}

fn branch_a(fs: &FactorSum, variety: Variety, nilpotent: bool) -> Result<ScenarioResult> {
    let n = fs.n();
    let mut phi = AltBilinear::zero(n);
    let target = if nilpotent { fs.c(3) } else { fs.c(2) };
    phi.set(fs.m, fs.m + 1, &target);
    let nu = if nilpotent { "[c1,c2] = c3" } else { "[c1,c2] = c2" };
    let defm = LinearDeformation::new(
        fs.g.clone(),
        phi,
        Provenance::new("factor-bracket").with("nu", nu),
    )?;
    branch_result(defm, "a", &[], variety)
}

fn branch_b(fs: &FactorSum, variety: Variety) -> Result<ScenarioResult> {
    let comm = fs.base.commutator();
    if comm.is_full() {
        return Err(LieError::Rejected(
            "the base is perfect and the factor is one-dimensional; no general construction applies".into(),
        ));
    }
    let b = (0..fs.m)
        .find(|&i| !comm.contains(&vector::unit(fs.m, i)))
        .expect("non-perfect base has a basis vector outside the commutator");
    let f = comm
        .annihilator()
        .basis_vectors()
        .into_iter()
        .find(|f| !f[b].is_zero())
        .expect("some functional separates b from the commutator");
    let f = vector::scale(&f[b].recip().expect("nonzero"), &f);
    let kernel = Matrix::from_rows(fs.m, &[f]).nullspace();
    let h: Vec<Vector> = kernel.basis_vectors().iter().map(|v| fs.lift(v)).collect();
    let c1 = fs.c(1);
    let defm = codim2(&fs.g, c1.clone(), fs.lift(&vector::unit(fs.m, b)), &h, &c1)?;
    branch_result(defm, "b", &[], variety)
}

/// Adapted basis vectors of degree 1 of a nilpotent algebra.
fn degree_one(n: &LieAlgebra) -> (Vec<Vector>, Vec<Vector>) {
    let ab = n.adapted_basis();
    let (mut ones, mut rest) = (Vec::new(), Vec::new());
    for (v, d) in ab.vectors.into_iter().zip(ab.degrees) {
        if d == 1 {
            ones.push(v);
        } else {
            rest.push(v);
        }
    }
    (ones, rest)
}

fn branch_c(fs: &FactorSum, variety: Variety) -> Result<ScenarioResult> {
    let (ones, rest) = degree_one(&fs.base);
    let x1 = ones
        .first()
        .ok_or_else(|| LieError::invalid("the base is zero-dimensional"))?;
    let mut h: Vec<Vector> = ones[1..].iter().chain(&rest).map(|v| fs.lift(v)).collect();
    h.push(fs.c(2));
    let defm = codim2(&fs.g, fs.c(1), fs.lift(x1), &h, &fs.c(2))?;
    branch_result(defm, "c", &[], variety)
}

fn binomial2(d: usize) -> usize {
    d * d.saturating_sub(1) / 2
}

fn nil_one(fs: &FactorSum, variety: Variety) -> Result<ScenarioResult> {
    let n = &fs.base;
    if n.invariant_vector() == catalog::heisenberg(1)?.invariant_vector() {
        return Err(LieError::Rejected(
            "h1 ⊕ a1: a k-step nilpotent algebra plus an abelian factor is rigid in N(m+l,k) if and only if it is h1 with l = 1"
                .into(),
        ));
    }
    if n.dim() == 1 {
        return Err(LieError::Rejected(
            "a1 ⊕ a1: every 2-dimensional nilpotent algebra is abelian, so it is rigid".into(),
        ));
    }
    let lcs = n.lower_central_series();
    let dim_at = |i: usize| lcs.get(i).map_or(0, Subspace::dim);
    let gens = dim_at(0) - dim_at(1);
    let quotient_two = dim_at(1) - dim_at(2);
    if quotient_two < binomial2(gens) {
        branch_d(fs, variety)
    } else {
        branch_e(fs, variety)
    }
}

fn branch_d(fs: &FactorSum, variety: Variety) -> Result<ScenarioResult> {
    let n = &fs.base;
    let lcs = n.lower_central_series();
    let n3 = lcs.get(2).cloned().unwrap_or_else(|| Subspace::zero(fs.m));
    let (ones, rest) = degree_one(n);
    let pairs: Vec<(usize, usize)> = (0..ones.len())
        .flat_map(|i| (i + 1..ones.len()).map(move |j| (i, j)))
        .collect();
    let brackets: Vec<Vector> = pairs.iter().map(|&(i, j)| n.br(&ones[j], &ones[i])).collect();
    let (i, j) = pairs
        .iter()
        .enumerate()
        .find(|&(p, _)| {
            let mut others: Vec<Vector> = brackets
                .iter()
                .enumerate()
                .filter(|&(q, _)| q != p)
                .map(|(_, v)| v.clone())
                .collect();
            others.extend(n3.basis_vectors());
            Subspace::span(fs.m, &others).contains(&brackets[p])
        })
        .map(|(_, &pair)| pair)
        .ok_or_else(|| LieError::SearchExhausted("no dependent degree-2 bracket among generators".into()))?;
    let mut h: Vec<Vector> = ones
        .iter()
        .enumerate()
        .filter(|&(q, _)| q != i && q != j)
        .map(|(_, v)| v)
        .chain(&rest)
        .map(|v| fs.lift(v))
        .collect();
    h.push(fs.c(1));
    let defm = codim2(&fs.g, fs.lift(&ones[i]), fs.lift(&ones[j]), &h, &fs.c(1))?;
    branch_result(defm, "d", &[("pair", format!("({},{})", i + 1, j + 1))], variety)
}

/// `[x, n²] = 0` and `rank ad_x ≤ 1`.
fn in_s(n: &LieAlgebra, n2: &[Vector], x: &[Rational]) -> bool {
    n2.iter().all(|b| vector::is_zero(&n.br(x, b))) && n.adjoint(x).rank() <= 1
}

fn branch_e(fs: &FactorSum, variety: Variety) -> Result<ScenarioResult> {
    let n = &fs.base;
    if n.structure_predicates().has_abelian_factor {
        return Err(LieError::hypothesis(
            "no abelian factor",
            "n/n³ is free 2-step nilpotent but n has an abelian factor",
        ));
    }
    let lcs = n.lower_central_series();
    let ab = n.adapted_basis();
    let n2 = lcs[1].basis_vectors();
    let class = n.nilpotency_class().expect("nilpotent base");
    let mut found: Option<(usize, Vector)> = None;
    let mut tried = 0usize;
    'search: for r in 1..=class {
        let term = &lcs[r - 1];
        let next = &lcs[r];
        let own: Vec<&Vector> = ab
            .vectors
            .iter()
            .zip(&ab.degrees)
            .filter(|&(_, &d)| d == r)
            .map(|(v, _)| v)
            .collect();
        let deeper: Vec<&Vector> = ab
            .vectors
            .iter()
            .zip(&ab.degrees)
            .filter(|&(_, &d)| d >= r)
            .map(|(v, _)| v)
            .collect();
        let mut candidates: Vec<Vector> = own.iter().map(|v| v.to_vec()).collect();
        for v in &own {
            for w in &deeper {
                if v != w {
                    candidates.push(vector::add(v, w));
                    candidates.push(vector::sub(v, w));
                }
            }
        }
        for x in candidates {
            tried += 1;
            if term.contains(&x) && !next.contains(&x) && in_s(n, &n2, &x) {
                found = Some((r, x));
                break 'search;
            }
        }
    }
    let (r0, y0) = found.ok_or_else(|| {
        LieError::SearchExhausted(format!(
            "no element of S found among {tried} candidates (adapted-basis vectors and ±pairwise sums); widen the search order"
        ))
    })?;

    let (ones, _) = degree_one(n);
    if r0 == 1 {
        if ones.len() != 2 {
            return Err(LieError::hypothesis(
                "r0 = 1 implies two generators",
                format!("found r0 = 1 with {} generators", ones.len()),
            ));
        }
        let gens = Subspace::span(fs.m, &[n2.clone(), vec![y0.clone()]].concat());
        let x1 = ones
            .iter()
            .find(|v| !gens.contains(v))
            .expect("two generators")
            .clone();
        let a2 = n.br(&x1, &y0);
        let mut h: Vec<Vector> = vec![fs.lift(&x1)];
        h.extend(lcs[2].basis_vectors().iter().map(|v| fs.lift(v)));
        h.push(fs.c(1));
        let defm = codim2(&fs.g, fs.lift(&y0), fs.lift(&a2), &h, &fs.c(1))?;
        return branch_result(
            defm,
            "e",
            &[("r0", "1".into()), ("y0", describe_vector(n, &y0))],
            variety,
        );
    }

    let kernel = n.adjoint(&y0).nullspace();
    let (x1, h_n): (Vector, Vec<Vector>) = if kernel.is_full() {
        let x1 = ones[0].clone();
        let h = ab.vectors.iter().filter(|v| **v != x1).cloned().collect();
        (x1, h)
    } else {
        let x1 = ones
            .iter()
            .find(|v| !kernel.contains(v))
            .expect("a generator lies outside the proper kernel")
            .clone();
        (x1, kernel.basis_vectors())
    };
    let h: Vec<Vector> = h_n.iter().map(|v| fs.lift(v)).collect();
    let defm = codim2(&fs.g, fs.lift(&x1), fs.c(1), &h, &fs.lift(&y0))?;
    branch_result(
        defm,
        "e",
        &[("r0", r0.to_string()), ("y0", describe_vector(n, &y0))],
        variety,
    )
}
