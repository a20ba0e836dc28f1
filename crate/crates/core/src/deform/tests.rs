use super::*;
use crate::catalog::{self, GraphSpec};
use crate::cohomology::{cohomology, delta1, dual_number_oracle};
use crate::free_nilpotent::free_nilpotent;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn e(n: usize, i: usize) -> Vector {
    vector::unit(n, i)
}

fn filiform4() -> LieAlgebra {
    LieAlgebra::from_table(4, &[(0, 1, &[(1, 2)]), (0, 2, &[(1, 3)])])
}

#[test]
fn wedge_formula_and_support() {
    let l = catalog::heisenberg(2).unwrap();
    let dec = BasisDecomposition::from_basis_indices(5, 0, 2).unwrap();
    let w = WedgeCocycle::new(dec.clone(), e(5, 1)).unwrap();
    let phi = w.phi();
    assert_eq!(phi.basis_value(0, 2), e(5, 1));
    assert_eq!(phi.basis_value(2, 0), vector::neg(&e(5, 1)));
    for h in dec.h().basis_vectors() {
        for j in 0..5 {
            assert!(vector::is_zero(&phi.eval_with_basis(&h, j)));
        }
    }
    assert!(LieAlgebra::new(phi.clone()).validate().passed);
    assert!(check_codim2_hypotheses(&l, &dec, &e(5, 1)).all_pass());
}

#[test]
fn heisenberg_scenario() {
    let r = scenario_heisenberg(2).unwrap();
    let l1 = r.deformation.evaluate(&q(1));
    assert_eq!(l1.basis_bracket(0, 2), e(5, 1));
    assert_eq!(l1.nilpotency_class(), Some(3));
    assert_eq!(r.witness.verdict, Verdict::Nontrivial);
    assert_eq!(r.deformation.evaluate(&q(0)), *r.deformation.base());
    assert_eq!(scenario_heisenberg(3).unwrap().deformation.base().dim(), 7);
    assert!(matches!(scenario_heisenberg(1), Err(LieError::Rejected(_))));
}

#[test]
fn contraction_example() {
    let r = scenario_contraction().unwrap();
    let l1 = r.deformation.evaluate(&q(1));
    assert_eq!(l1.basis_bracket(0, 1), e(3, 2));
    assert!(!l1.killing_form().determinant().is_zero());
    assert!(l1.structure_predicates().is_perfect);
    assert!(l1.center().is_zero());
    assert_eq!(r.witness.verdict, Verdict::Nontrivial);

    let lit = catalog::contraction_ex_literal();
    let dec = BasisDecomposition::from_basis_indices(3, 0, 1).unwrap();
    let report = check_codim2_hypotheses(&lit, &dec, &e(3, 2));
    assert!(report.subalgebra && report.direct_sum && report.centralizes);
    assert!(!report.trace_condition);
    assert!(matches!(
        deform_codim2(&lit, &dec, &e(3, 2)),
        Err(LieError::HypothesisFailed { .. })
    ));
}

#[test]
fn centralizer_clause_fails() {
    let l = catalog::heisenberg(2).unwrap();
    // h = span{x2, y2, z} and [x2, y2] = z
    let dec = BasisDecomposition::from_basis_indices(5, 0, 1).unwrap();
    let report = check_codim2_hypotheses(&l, &dec, &e(5, 2));
    assert!(report.subalgebra && report.direct_sum && report.trace_condition);
    assert!(!report.centralizes);
    assert_eq!(report.first_failure(), Some("(iv) centralizer"));
    assert!(check_codim2_hypotheses(&l, &dec, &e(5, 4)).all_pass());
}

#[test]
fn zero_direction_is_undetermined() {
    let l = catalog::heisenberg(2).unwrap();
    let dec = BasisDecomposition::from_basis_indices(5, 0, 2).unwrap();
    let defm = deform_codim2(&l, &dec, &vector::zeros(5)).unwrap();
    assert!(defm.direction().is_zero());
    assert_eq!(defm.evaluate(&q(3)), l);
    assert_eq!(witness(&defm, &default_samples()).verdict, Verdict::Undetermined);
}

#[test]
fn coboundary_rescaling_is_undetermined() {
    let l = catalog::sl2();
    let phi = delta1(&l, &Matrix::identity(3));
    assert_eq!(phi, *l.structure());
    let defm = LinearDeformation::new(l, phi, Provenance::new("coboundary")).unwrap();
    let w = witness(&defm, &default_samples());
    assert_eq!(w.verdict, Verdict::Undetermined);
    assert!(w.differing[0].is_empty());
    assert!(!w.differing[1].is_empty());
}

#[test]
fn non_cocycle_is_rejected() {
    let l = catalog::sl2();
    let mut phi = AltBilinear::zero(3);
    phi.set(0, 1, &e(3, 0));
    let err = LinearDeformation::new(l, phi, Provenance::new("bad")).unwrap_err();
    assert!(matches!(err, LieError::HypothesisFailed { ref clause, .. } if clause == "cocycle"));
}

#[test]
fn dixmier_on_abelian() {
    let l = LieAlgebra::abelian(3);
    let ideal = Subspace::span(3, &[e(3, 1), e(3, 2)]);
    let zero = deform_gh(&l, &ideal, &e(3, 0), &Matrix::zeros(3, 3)).unwrap();
    assert!(zero.direction().is_zero());

    let mut d = Matrix::zeros(3, 3);
    d[(1, 2)] = q(1);
    let defm = deform_gh(&l, &ideal, &e(3, 0), &d).unwrap();
    let l1 = defm.evaluate(&q(1));
    assert_eq!(l1.basis_bracket(0, 2), e(3, 1));
    assert_eq!(l1.nilpotency_class(), Some(2));
    assert_eq!(witness(&defm, &default_samples()).verdict, Verdict::Nontrivial);

    // any matrix preserving the ideal is a derivation of an abelian ideal
    let mut d = Matrix::zeros(3, 3);
    d[(1, 1)] = q(2);
    d[(2, 1)] = q(-1);
    d[(2, 2)] = Rational::new(1, 3);
    assert!(deform_gh(&l, &ideal, &e(3, 0), &d).is_ok());
}

#[test]
fn dixmier_preconditions() {
    let h = catalog::heisenberg(1).unwrap();
    let line = Subspace::span(3, &[e(3, 2)]);
    assert!(matches!(
        dixmier_cocycle(&h, &line, &e(3, 0), &Matrix::zeros(3, 3)),
        Err(LieError::InvalidInput(_))
    ));

    let ideal = Subspace::span(3, &[e(3, 0), e(3, 2)]);
    let mut leak = Matrix::zeros(3, 3);
    leak[(1, 0)] = q(1);
    assert_eq!(
        dixmier_cocycle(&h, &ideal, &e(3, 1), &leak).unwrap_err(),
        LieError::NotInvariant
    );
    let mut scale_z = Matrix::zeros(3, 3);
    scale_z[(2, 2)] = q(1);
    assert!(deform_gh(&h, &ideal, &e(3, 1), &scale_z).is_ok());

    let sl = catalog::sl2();
    let plane = Subspace::span(3, &[e(3, 0), e(3, 1)]);
    assert_eq!(
        dixmier_cocycle(&sl, &plane, &e(3, 2), &Matrix::zeros(3, 3)).unwrap_err(),
        LieError::NotAnIdeal
    );

    let l = h.direct_sum(&LieAlgebra::abelian(1));
    let heis = Subspace::span(4, &[e(4, 0), e(4, 1), e(4, 2)]);
    let mut d = Matrix::zeros(4, 4);
    d[(0, 0)] = q(1);
    assert!(matches!(
        dixmier_cocycle(&l, &heis, &e(4, 3), &d),
        Err(LieError::HypothesisFailed { .. })
    ));
    d[(2, 2)] = q(1);
    assert!(dixmier_cocycle(&l, &heis, &e(4, 3), &d).is_ok());
}

#[test]
fn free_nilpotent_scenarios() {
    let r = scenario_free_nilpotent(2, 3).unwrap();
    assert_eq!(r.deformation.base().dim(), 5);
    for t in default_samples() {
        assert_eq!(r.deformation.evaluate(&t).nilpotency_class(), Some(4));
    }
    assert_eq!(r.witness.verdict, Verdict::Nontrivial);
    let r = scenario_free_nilpotent(3, 2).unwrap();
    assert_eq!(r.deformation.evaluate(&q(1)).nilpotency_class(), Some(3));
    assert!(matches!(
        scenario_free_nilpotent(2, 2),
        Err(LieError::Rejected(_))
    ));
}

#[test]
fn graph_scenarios() {
    let r = scenario_graph(&GraphSpec::path(3).unwrap()).unwrap();
    let l = r.deformation.base();
    let l1 = r.deformation.evaluate(&q(1));
    let (v1, a12, a23) = (0, l.index_of("a1_2").unwrap(), l.index_of("a2_3").unwrap());
    assert_eq!(l1.basis_bracket(v1, a12), e(5, a23));
    assert_eq!(l1.nilpotency_class(), Some(3));

    let r = scenario_graph(&GraphSpec::edgeless(3).unwrap()).unwrap();
    assert_eq!(r.deformation.evaluate(&q(1)).nilpotency_class(), Some(2));
    assert_eq!(r.witness.verdict, Verdict::Nontrivial);

    let single = scenario_graph(&GraphSpec::new(3, &[(2, 3)]).unwrap()).unwrap();
    assert_eq!(single.deformation.evaluate(&q(-1)).nilpotency_class(), Some(3));

    for g in [
        GraphSpec::new(2, &[(1, 2)]).unwrap(),
        GraphSpec::edgeless(1).unwrap(),
        GraphSpec::edgeless(2).unwrap(),
    ] {
        assert!(matches!(scenario_graph(&g), Err(LieError::Rejected(_))));
    }
}

#[test]
fn exceptional_perfect() {
    let r = scenario_exceptional_perfect().unwrap();
    assert!(!r.witness.base.is_perfect);
    assert!(r.witness.deformed.iter().all(|d| d.is_perfect));
    assert_eq!(r.witness.verdict, Verdict::Nontrivial);
    let l1 = r.deformation.evaluate(&q(1));
    assert_eq!(l1.basis_bracket(3, 4), e(6, 5));
}

#[test]
fn nongh_scenario() {
    let r = scenario_nongh().unwrap();
    assert_eq!(r.witness.verdict, Verdict::Nontrivial);
    let l1 = r.deformation.evaluate(&q(1));
    assert_eq!(l1.basis_bracket(0, 1), e(5, 4));
}

fn branch(r: &ScenarioResult) -> &str {
    r.deformation.provenance().get("branch").unwrap()
}

#[test]
fn abelian_factor_branches() {
    let h1 = catalog::heisenberg(1).unwrap();
    let r = scenario_abelian_factor(&h1, 2, Variety::Nil(2)).unwrap();
    assert_eq!(branch(&r), "c");
    let before = r.witness.base.lower_central[1];
    let after = r.witness.deformed[0].lower_central[1];
    assert_eq!(after, before + 1);
    assert_eq!(r.witness.deformed[0].nilpotency_class, Some(2));

    assert!(matches!(
        scenario_abelian_factor(&h1, 1, Variety::Nil(2)),
        Err(LieError::Rejected(_))
    ));

    let h2 = catalog::heisenberg(2).unwrap();
    let r = scenario_abelian_factor(&h2, 1, Variety::Nil(2)).unwrap();
    assert_eq!(branch(&r), "d");
    assert_eq!(r.witness.verdict, Verdict::Nontrivial);

    let fnil = free_nilpotent(2, 3).unwrap();
    let r = scenario_abelian_factor(&fnil, 1, Variety::Nil(3)).unwrap();
    assert_eq!(branch(&r), "e");
    assert_eq!(r.deformation.provenance().get("r0"), Some("3"));
    assert_eq!(r.witness.verdict, Verdict::Nontrivial);

    let r = scenario_abelian_factor(&filiform4(), 1, Variety::Nil(3)).unwrap();
    assert_eq!(branch(&r), "e");
    assert_eq!(r.deformation.provenance().get("r0"), Some("1"));
    assert_eq!(r.witness.verdict, Verdict::Nontrivial);

    let aff = catalog::aff1();
    let r = scenario_abelian_factor(&aff, 1, Variety::Sol(2)).unwrap();
    assert_eq!(branch(&r), "b");
    assert!(r.witness.deformed[0].lower_central[1] > r.witness.base.lower_central[1]);
    let r = scenario_abelian_factor(&aff, 2, Variety::Sol(2)).unwrap();
    assert_eq!(branch(&r), "a");
    assert_eq!(r.witness.verdict, Verdict::Nontrivial);

    let r = scenario_abelian_factor(&LieAlgebra::abelian(2), 3, Variety::Nil(2)).unwrap();
    assert_eq!(branch(&r), "a");

    assert!(matches!(
        scenario_abelian_factor(&catalog::sl2(), 1, Variety::Lie),
        Err(LieError::Rejected(_))
    ));
    assert!(matches!(
        scenario_abelian_factor(&aff, 1, Variety::Nil(2)),
        Err(LieError::NotInVariety { .. })
    ));
    assert!(matches!(
        scenario_abelian_factor(&h1, 2, Variety::Nil(1)),
        Err(LieError::Rejected(_))
    ));
}

#[test]
fn directions_are_constrained_cocycles() {
    let cases = [
        scenario_heisenberg(2).unwrap(),
        scenario_free_nilpotent(2, 3).unwrap(),
        scenario_graph(&GraphSpec::path(3).unwrap()).unwrap(),
        scenario_abelian_factor(&catalog::heisenberg(1).unwrap(), 2, Variety::Nil(2)).unwrap(),
        scenario_contraction().unwrap(),
    ];
    for r in &cases {
        let d = &r.deformation;
        let v = d.variety().unwrap();
        let space = cohomology(d.base(), v).unwrap();
        assert!(space.is_cocycle(d.direction()), "{v}");
        assert!(dual_number_oracle(d.base(), d.direction(), v), "{v}");
        assert!(d.validation().passed());
        assert!(d.validation().mu_after_phi && d.validation().phi_after_mu);
    }
}

#[test]
fn describe_vectors() {
    let l = catalog::heisenberg(1).unwrap();
    assert_eq!(describe_vector(&l, &[q(1), q(0), q(-2)]), "x1 - 2*z");
    assert_eq!(
        describe_vector(&l, &[q(0), Rational::new(-1, 2), q(0)]),
        "-1/2*y1"
    );
    assert_eq!(describe_vector(&l, &vector::zeros(3)), "0");
}
