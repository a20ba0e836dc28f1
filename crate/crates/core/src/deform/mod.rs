//! Linear deformations `μ_t = μ + tφ`.
//!
//! A [`LinearDeformation`] is only constructed after checking that `φ` is a
//! Lie bracket and a 2-cocycle for `μ`, which together make `μ_t` a Lie
//! bracket for every `t`. Non-triviality is certified per sampled `t` by a
//! [`Witness`] comparing invariant vectors.

mod scenarios;

pub use scenarios::{
    scenario_abelian_factor, scenario_contraction, scenario_exceptional_perfect, scenario_free_nilpotent,
    scenario_graph, scenario_heisenberg, scenario_nongh, ScenarioResult,
};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cohomology::{Cochain2, Variety};
use crate::error::{LieError, Result};
use crate::lie::{triples, AltBilinear, BasisDecomposition, InvariantVector, LieAlgebra};
use crate::linalg::{vector, Matrix, Rational, Subspace, Vector};

/// Default sample parameters `{1, −1, 2, 1/2}`.
pub fn default_samples() -> Vec<Rational> {
    vec![
        Rational::one(),
        Rational::from_int(-1),
        Rational::from_int(2),
        Rational::new(1, 2),
    ]
}

/// Renders `v` as a combination of the basis names of `l`.
pub fn describe_vector(l: &LieAlgebra, v: &[Rational]) -> String {
    let mut out = String::new();
    for (i, c) in vector::support(v) {
        let name = l.name(i);
        let (neg, mag) = (c.is_negative(), c.abs());
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag.is_one() {
            out.push_str(name);
        } else {
            out.push_str(&format!("{mag}*{name}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `outer(inner(eᵢ,eⱼ),eₖ) + outer(inner(eⱼ,eₖ),eᵢ) + outer(inner(eₖ,eᵢ),eⱼ)`
fn cyclic_term(outer: &AltBilinear, inner: &AltBilinear, i: usize, j: usize, k: usize) -> Vector {
    let mut acc = outer.eval_with_basis(&inner.basis_value(i, j), k);
    let b = outer.eval_with_basis(&inner.basis_value(j, k), i);
    let c = outer.eval_with_basis(&inner.basis_value(k, i), j);
    vector::axpy(&mut acc, &Rational::one(), &b);
    vector::axpy(&mut acc, &Rational::one(), &c);
    acc
}

/// First triple `i<j<k` where `sc(outer ∘ inner)` is nonzero.
fn cyclic_violation(outer: &AltBilinear, inner: &AltBilinear) -> Option<[usize; 3]> {
    triples(outer.dim())
        .find(|&(i, j, k)| !vector::is_zero(&cyclic_term(outer, inner, i, j, k)))
        .map(|(i, j, k)| [i, j, k])
}

fn cocycle_violation(mu: &AltBilinear, phi: &AltBilinear) -> Option<[usize; 3]> {
    triples(mu.dim())
        .find(|&(i, j, k)| {
            let mut v = cyclic_term(mu, phi, i, j, k);
            vector::axpy(&mut v, &Rational::one(), &cyclic_term(phi, mu, i, j, k));
            !vector::is_zero(&v)
        })
        .map(|(i, j, k)| [i, j, k])
}

/// The direction `a₁*∧a₂*⊗y` attached to a codimension-2 splitting.
#[derive(Clone, Debug)]
pub struct WedgeCocycle {
    decomposition: BasisDecomposition,
    y: Vector,
    phi: Cochain2,
}

impl WedgeCocycle {
    pub fn new(decomposition: BasisDecomposition, y: Vector) -> Result<Self> {
        let n = decomposition.dim();
        if y.len() != n {
            return Err(LieError::DimensionMismatch {
                expected: n,
                found: y.len(),
            });
        }
        let (s1, s2) = (decomposition.a1_star(), decomposition.a2_star());
        let phi = AltBilinear::from_fn(n, |i, j| {
            let c = &s1[i] * &s2[j] - &s2[i] * &s1[j];
            vector::scale(&c, &y)
        });
        Ok(WedgeCocycle {
            decomposition,
            y,
            phi,
        })
    }

    pub fn decomposition(&self) -> &BasisDecomposition {
        &self.decomposition
    }

    pub fn y(&self) -> &Vector {
        &self.y
    }

    pub fn phi(&self) -> &Cochain2 {
        &self.phi
    }

    pub fn into_phi(self) -> Cochain2 {
        self.phi
    }
}

/// Which construction produced a deformation, with its parameters rendered
/// in the basis names of the base algebra.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Provenance {
    pub construction: String,
    pub parameters: BTreeMap<String, String>,
}

impl Provenance {
    pub fn new(construction: impl Into<String>) -> Self {
        Provenance {
            construction: construction.into(),
            parameters: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.parameters.insert(key.into(), value.into());
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.parameters.get(key).map(String::as_str)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SampleCheck {
    pub t: Rational,
    pub jacobi: bool,
    /// `None` until a variety is attached.
    pub in_variety: Option<bool>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ValidationReport {
    /// `sc(μ∘φ + φ∘μ) = 0`
    pub cocycle: bool,
    /// `φ` satisfies the Jacobi identity.
    pub direction_is_lie: bool,
    /// `sc(μ∘φ) = 0` on its own.
    pub mu_after_phi: bool,
    /// `sc(φ∘μ) = 0` on its own.
    pub phi_after_mu: bool,
    pub variety: Option<Variety>,
    pub base_in_variety: Option<bool>,
    pub samples: Vec<SampleCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.cocycle
            && self.direction_is_lie
            && self.base_in_variety != Some(false)
            && self
                .samples
                .iter()
                .all(|s| s.jacobi && s.in_variety != Some(false))
    }
}

#[derive(Clone, Debug)]
pub struct LinearDeformation {
    base: LieAlgebra,
    direction: Cochain2,
    provenance: Provenance,
    validation: ValidationReport,
}

impl LinearDeformation {
    /// Checks that `φ` is a Lie bracket and a cocycle for `μ`, then records
    /// the Jacobi identity of `μ_t` at the default samples.
    pub fn new(base: LieAlgebra, direction: Cochain2, provenance: Provenance) -> Result<Self> {
        if direction.dim() != base.dim() {
            return Err(LieError::DimensionMismatch {
                expected: base.dim(),
                found: direction.dim(),
            });
        }
        let mu = base.structure();
        if let Some(t) = cocycle_violation(mu, &direction) {
            return Err(LieError::hypothesis(
                "cocycle",
                format!("sc(μ∘φ + φ∘μ) is nonzero at basis triple {t:?}"),
            ));
        }
        if let Some(t) = cyclic_violation(&direction, &direction) {
            return Err(LieError::hypothesis(
                "jacobi",
                format!("the direction violates the Jacobi identity at basis triple {t:?}"),
            ));
        }
        let mut out = LinearDeformation {
            validation: ValidationReport {
                cocycle: true,
                direction_is_lie: true,
                mu_after_phi: cyclic_violation(mu, &direction).is_none(),
                phi_after_mu: cyclic_violation(&direction, mu).is_none(),
                variety: None,
                base_in_variety: None,
                samples: Vec::new(),
            },
            base,
            direction,
            provenance,
        };
        out.validation.samples = default_samples()
            .into_iter()
            .map(|t| {
                let jacobi = out.evaluate(&t).validate().passed;
                SampleCheck {
                    t,
                    jacobi,
                    in_variety: None,
                }
            })
            .collect();
        Ok(out)
    }

    /// Requires the base and every sampled `μ_t` to lie in `variety`.
    pub fn with_variety(mut self, variety: Variety) -> Result<Self> {
        variety.check(&self.base)?;
        self.validation.variety = Some(variety);
        self.validation.base_in_variety = Some(true);
        for i in 0..self.validation.samples.len() {
            let t = self.validation.samples[i].t.clone();
            let witness = variety.witness(&self.evaluate(&t));
            self.validation.samples[i].in_variety = Some(witness.is_none());
            if let Some(w) = witness {
                return Err(LieError::hypothesis(
                    "variety",
                    format!("μ_t leaves {variety} at t = {t}: nonzero value at basis tuple {w:?}"),
                ));
            }
        }
        Ok(self)
    }

    pub fn base(&self) -> &LieAlgebra {
        &self.base
    }

    pub fn direction(&self) -> &Cochain2 {
        &self.direction
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn validation(&self) -> &ValidationReport {
        &self.validation
    }

    pub fn variety(&self) -> Option<Variety> {
        self.validation.variety
    }

    /// `μ + tφ`, keeping the basis names of the base.
    pub fn evaluate(&self, t: &Rational) -> LieAlgebra {
        let s = self
            .base
            .structure()
            .combine(&self.direction, t)
            .expect("dimensions checked at construction");
        LieAlgebra::new(s)
            .with_names(self.base.names().to_vec())
            .expect("same dimension")
    }

    /// The direction as an algebra on the same basis.
    pub fn direction_algebra(&self) -> LieAlgebra {
        LieAlgebra::new(self.direction.clone())
            .with_names(self.base.names().to_vec())
            .expect("same dimension")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Nontrivial,
    Undetermined,
}

/// Invariant vectors of `μ` and of `μ_t` at each sample.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Witness {
    pub samples: Vec<Rational>,
    pub base: InvariantVector,
    pub deformed: Vec<InvariantVector>,
    /// Per sample, the invariant entries that differ from the base.
    pub differing: Vec<Vec<&'static str>>,
    pub verdict: Verdict,
}

/// `NONTRIVIAL` iff every nonzero sample changes at least one invariant.
pub fn witness(defm: &LinearDeformation, samples: &[Rational]) -> Witness {
    let base = defm.base().invariant_vector();
    let deformed: Vec<InvariantVector> = samples
        .iter()
        .map(|t| defm.evaluate(t).invariant_vector())
        .collect();
    let differing: Vec<Vec<&'static str>> = deformed.iter().map(|d| base.differences(d)).collect();
    let nonzero: Vec<usize> = (0..samples.len()).filter(|&i| !samples[i].is_zero()).collect();
    let verdict = if !nonzero.is_empty() && nonzero.iter().all(|&i| !differing[i].is_empty()) {
        Verdict::Nontrivial
    } else {
        Verdict::Undetermined
    };
    Witness {
        samples: samples.to_vec(),
        base,
        deformed,
        differing,
        verdict,
    }
}

/// The four hypotheses of the codimension-2 construction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Codim2Report {
    /// (i) `h` is a subalgebra.
    pub subalgebra: bool,
    /// (ii) `⟨a₁, a₂⟩ ⊕ h = g`.
    pub direct_sum: bool,
    /// (iii) `a₁*([a₁,h]) + a₂*([a₂,h]) = 0` on a basis of `h`.
    pub trace_condition: bool,
    /// (iv) `y ∈ Z_g(h)`.
    pub centralizes: bool,
    pub details: Vec<String>,
}

impl Codim2Report {
    pub fn all_pass(&self) -> bool {
        self.subalgebra && self.direct_sum && self.trace_condition && self.centralizes
    }

    /// Name of the first failing clause.
    pub fn first_failure(&self) -> Option<&'static str> {
        [
            (self.subalgebra, "(i) subalgebra"),
            (self.direct_sum, "(ii) direct sum"),
            (self.trace_condition, "(iii) trace condition"),
            (self.centralizes, "(iv) centralizer"),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, name)| name)
    }
}

pub fn check_codim2_hypotheses(l: &LieAlgebra, dec: &BasisDecomposition, y: &[Rational]) -> Codim2Report {
    let n = l.dim();
    let h = dec.h();
    let hb = h.basis_vectors();
    let mut details = Vec::new();

    let mut subalgebra = true;
    'outer: for (p, u) in hb.iter().enumerate() {
        for (q, v) in hb.iter().enumerate().skip(p + 1) {
            if !h.contains(&l.br(u, v)) {
                details.push(format!("(i) bracket of h-basis vectors {p} and {q} leaves h"));
                subalgebra = false;
                break 'outer;
            }
        }
    }

    let direct_sum = dec.dim() == n && h.dim() + 2 == n && {
        let mut cols = vec![dec.a1().clone(), dec.a2().clone()];
        cols.extend(hb.iter().cloned());
        Matrix::from_columns(n, &cols).rank() == n
    };
    if !direct_sum {
        details.push("(ii) a1, a2 and h do not split the algebra".into());
    }

    let mut trace_condition = true;
    for (p, v) in hb.iter().enumerate() {
        let d = dec.trace_defect(l, v);
        if !d.is_zero() {
            details.push(format!(
                "(iii) a1*([a1,h]) + a2*([a2,h]) = {d} on h-basis vector {p}"
            ));
            trace_condition = false;
            break;
        }
    }

    let mut centralizes = y.len() == n;
    if centralizes {
        if let Some(p) = hb.iter().position(|v| !vector::is_zero(&l.br(y, v))) {
            details.push(format!("(iv) [y, h-basis vector {p}] is nonzero"));
            centralizes = false;
        }
    } else {
        details.push("(iv) y has the wrong length".into());
    }

    Codim2Report {
        subalgebra,
        direct_sum,
        trace_condition,
        centralizes,
        details,
    }
}

/// `μ + t(a₁*∧a₂*⊗y)`, after checking the four hypotheses.
pub fn deform_codim2(l: &LieAlgebra, dec: &BasisDecomposition, y: &[Rational]) -> Result<LinearDeformation> {
    let report = check_codim2_hypotheses(l, dec, y);
    if let Some(clause) = report.first_failure() {
        return Err(LieError::hypothesis(clause, report.details.join("; ")));
    }
    let wedge = WedgeCocycle::new(dec.clone(), y.to_vec())?;
    let provenance = Provenance::new("codim2-wedge")
        .with("a1", describe_vector(l, dec.a1()))
        .with("a2", describe_vector(l, dec.a2()))
        .with("y", describe_vector(l, y));
    let defm = LinearDeformation::new(l.clone(), wedge.into_phi(), provenance)?;
    let v = defm.validation();
    if !(v.mu_after_phi && v.phi_after_mu) {
        return Err(LieError::hypothesis(
            "separate identities",
            "sc(μ∘φ) and sc(φ∘μ) do not vanish separately",
        ));
    }
    Ok(defm)
}

/// Splits off `x` against a codimension-1 ideal: returns `x*` with
/// `x*(x) = 1`, `x*(I) = 0`.
fn codim1_functional(l: &LieAlgebra, ideal: &Subspace, x: &[Rational]) -> Result<Vector> {
    let n = l.dim();
    if ideal.ambient_dim() != n || x.len() != n {
        return Err(LieError::DimensionMismatch {
            expected: n,
            found: if x.len() != n {
                x.len()
            } else {
                ideal.ambient_dim()
            },
        });
    }
    if ideal.dim() + 1 != n {
        return Err(LieError::invalid(format!(
            "ideal has dimension {}, expected codimension 1 in {n}",
            ideal.dim()
        )));
    }
    if !l.is_ideal(ideal) {
        return Err(LieError::NotAnIdeal);
    }
    if ideal.contains(x) {
        return Err(LieError::invalid("x lies in the ideal"));
    }
    let g = ideal.annihilator().basis_vectors().remove(0);
    let inv = vector::dot(&g, x).recip().expect("x is outside the ideal");
    Ok(vector::scale(&inv, &g))
}

/// `φ_D(x,h) = D(h) = −φ_D(h,x)`, `φ_D(h,h') = 0` for `g = ⟨x⟩ ⊕ I`.
///
/// `d` acts on ambient coordinates; it must map `I` into `I` and be a
/// derivation of `I`.
pub fn dixmier_cocycle(l: &LieAlgebra, ideal: &Subspace, x: &[Rational], d: &Matrix) -> Result<Cochain2> {
    let n = l.dim();
    let xs = codim1_functional(l, ideal, x)?;
    if d.rows() != n || d.cols() != n {
        return Err(LieError::DimensionMismatch {
            expected: n,
            found: d.rows(),
        });
    }
    let ib = ideal.basis_vectors();
    if ib.iter().any(|h| !ideal.contains(&d.mul_vec(h))) {
        return Err(LieError::NotInvariant);
    }
    for (p, u) in ib.iter().enumerate() {
        for (q, v) in ib.iter().enumerate().skip(p + 1) {
            let lhs = d.mul_vec(&l.br(u, v));
            let rhs = vector::add(&l.br(&d.mul_vec(u), v), &l.br(u, &d.mul_vec(v)));
            if lhs != rhs {
                return Err(LieError::hypothesis(
                    "derivation",
                    format!("D[h,h'] ≠ [Dh,h'] + [h,Dh'] on ideal basis vectors {p} and {q}"),
                ));
            }
        }
    }
    // D applied to the I-component of e_i.
    let d_proj: Vec<Vector> = (0..n)
        .map(|i| {
            let mut v = vector::unit(n, i);
            vector::axpy(&mut v, &-&xs[i], x);
            d.mul_vec(&v)
        })
        .collect();
    Ok(AltBilinear::from_fn(n, |i, j| {
        let mut v = vector::scale(&xs[i], &d_proj[j]);
        vector::axpy(&mut v, &-&xs[j], &d_proj[i]);
        v
    }))
}

/// The Dixmier deformation `μ + tφ_D`; also checks that `I` stays an ideal
/// at every sample.
pub fn deform_gh(l: &LieAlgebra, ideal: &Subspace, x: &[Rational], d: &Matrix) -> Result<LinearDeformation> {
    let phi = dixmier_cocycle(l, ideal, x, d)?;
    let provenance = Provenance::new("dixmier")
        .with("x", describe_vector(l, x))
        .with("ideal_dim", ideal.dim().to_string())
        .with("derivation_rank", d.rank().to_string());
    let defm = LinearDeformation::new(l.clone(), phi, provenance)?;
    for t in default_samples() {
        if !defm.evaluate(&t).is_ideal(ideal) {
            return Err(LieError::hypothesis(
                "ideal",
                format!("I is not an ideal of μ_t at t = {t}"),
            ));
        }
    }
    Ok(defm)
}

#[cfg(test)]
mod tests;
