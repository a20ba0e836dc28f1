use super::*;
use crate::linalg::{vector, Matrix, Rational, Subspace};

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn h1() -> LieAlgebra {
    LieAlgebra::from_table(3, &[(0, 1, &[(1, 2)])])
}

fn h2() -> LieAlgebra {
    LieAlgebra::from_table(5, &[(0, 1, &[(1, 4)]), (2, 3, &[(1, 4)])])
}

fn sl2() -> LieAlgebra {
    LieAlgebra::from_table(3, &[(0, 1, &[(2, 1)]), (0, 2, &[(-2, 2)]), (1, 2, &[(1, 0)])])
}

#[test]
fn brackets_from_tables() {
    assert_eq!(h1().basis_bracket(0, 1), vector::unit(3, 2));
    assert_eq!(h1().basis_bracket(1, 0), vector::neg(&vector::unit(3, 2)));
    assert_eq!(sl2().basis_bracket(1, 2), vector::unit(3, 0));
    let v = vec![q(3), q(-1), Rational::new(2, 7)];
    assert!(vector::is_zero(&sl2().br(&v, &v)));
    assert!(sl2().bracket(&v, &[q(1)]).is_err());
}

#[test]
fn jacobi_report() {
    assert!(h1().validate().passed);
    assert!(sl2().validate().passed);
    assert!(LieAlgebra::abelian(5).validate().passed);
    let bad = LieAlgebra::from_table(3, &[(0, 1, &[(1, 2)]), (0, 2, &[(1, 2)]), (1, 2, &[(1, 0)])]);
    let report = bad.validate();
    assert!(!report.passed);
    assert_eq!(report.violation, Some([0, 1, 2]));
}

#[test]
fn composition_calculus() {
    let l = h1();
    let mm = l.as_map().compose(&l.as_map()).unwrap();
    assert!(vector::is_zero(mm.value(&[0, 1, 0])));
    assert!(l.mu_power(2).is_zero());
    assert!(!l.mu_power(1).is_zero());
    assert_eq!(l.mu_power(1), l.as_map());
    assert_eq!(l.mu_derived(1), l.as_map());
    assert!(LieAlgebra::abelian(3).mu_power(2).is_zero());
    let jac = l.as_map().compose(&l.as_map()).unwrap().cyclic_sum().unwrap();
    assert!(jac.is_zero());
    let f = Matrix::from_i64(3, 3, &[1, 0, 2, 0, 1, 0, 3, 0, 1]);
    assert_eq!(
        MultilinearMap::linear(&f).compose(&l.as_map()).unwrap().arity(),
        2
    );
}

#[test]
fn series_and_classes() {
    let dims = |s: Vec<Subspace>| s.iter().map(Subspace::dim).collect::<Vec<_>>();
    assert_eq!(dims(h2().lower_central_series()), vec![5, 1, 0]);
    assert_eq!(dims(LieAlgebra::abelian(4).lower_central_series()), vec![4, 0]);
    assert_eq!(dims(sl2().lower_central_series()), vec![3]);
    assert_eq!(dims(sl2().derived_series()), vec![3]);
    assert_eq!(h1().nilpotency_class(), Some(2));
    assert_eq!(LieAlgebra::abelian(3).nilpotency_class(), Some(1));
    assert_eq!(sl2().nilpotency_class(), None);
    assert_eq!(sl2().solvability_class(), None);
}

#[test]
fn witnesses_agree_with_series() {
    for l in [h1(), h2(), sl2(), LieAlgebra::abelian(2)] {
        let nil = l.nilpotency_class();
        let sol = l.solvability_class();
        for k in 1..4 {
            assert_eq!(l.nil_witness(k).is_none(), nil.is_some_and(|c| c <= k));
            assert_eq!(l.sol_witness(k).is_none(), sol.is_some_and(|c| c <= k));
            assert_eq!(l.mu_power(k).is_zero(), l.nil_witness(k).is_none());
        }
        if let Some(t) = l.nil_witness(1) {
            assert_eq!(t.len(), 2);
        }
    }
    let t = sl2().sol_witness(2).unwrap();
    assert_eq!(t.len(), 4);
    assert!(!vector::is_zero(sl2().mu_derived(2).value(&t)));
}

#[test]
fn centers_and_centralizers() {
    let z = h1().center();
    assert_eq!(z, Subspace::span(3, &[vector::unit(3, 2)]));
    assert!(h1().centralizer(&Subspace::zero(3)).is_full());
    assert!(sl2().center().is_zero());
    assert!(LieAlgebra::abelian(3).center().is_full());
}

#[test]
fn adjoint_and_killing() {
    let l = h2();
    for i in 0..5 {
        assert!(l.adjoint(&l.basis(i)).trace().is_zero());
    }
    assert!(l.adjoint(&l.basis(4)).is_zero());
    assert!(l.killing_form().is_zero());
    let k = sl2().killing_form();
    assert_eq!(k, Matrix::from_i64(3, 3, &[8, 0, 0, 0, 0, 4, 0, 4, 0]));
    assert_eq!(k.determinant(), q(-128));
    let s = Subspace::span(5, &[vector::unit(5, 1), vector::unit(5, 2)]);
    assert!(l.adjoint_restricted(&l.basis(0), &s).is_err());
    let s = Subspace::span(5, &[vector::unit(5, 0), vector::unit(5, 1), vector::unit(5, 4)]);
    assert_eq!(l.adjoint_restricted(&l.basis(0), &s).unwrap().rows(), 3);
}

#[test]
fn constructions() {
    let sum = h1().direct_sum(&LieAlgebra::abelian(1));
    assert_eq!(sum.dim(), 4);
    assert_eq!(sum.nilpotency_class(), Some(2));
    let p = sum.structure_predicates();
    assert!(!p.is_perfect && p.has_abelian_factor);
    let p = h1().structure_predicates();
    assert!(!p.has_abelian_factor);
    let p = sl2().structure_predicates();
    assert!(p.is_perfect && !p.has_abelian_factor);

    assert_eq!(h1().change_of_basis(&Matrix::identity(3)).unwrap(), h1());
    assert!(h1().change_of_basis(&Matrix::zeros(3, 3)).is_err());

    let quo = h1().quotient(&h1().center()).unwrap();
    assert!(quo.is_abelian() && quo.dim() == 2);
    let not_ideal = Subspace::span(3, &[vector::unit(3, 0)]);
    assert_eq!(h1().quotient(&not_ideal), Err(crate::LieError::NotAnIdeal));
}

#[test]
fn invariants_separate_examples() {
    let a3 = LieAlgebra::abelian(3).invariant_vector();
    let h = h1().invariant_vector();
    let s = sl2().invariant_vector();
    assert!(h.differences(&a3).contains(&"center_dim"));
    assert!(s.differences(&h).contains(&"killing_rank"));
    let p = Matrix::from_i64(3, 3, &[1, 2, 0, 0, 1, 3, 1, 0, 1]);
    assert_eq!(sl2().change_of_basis(&p).unwrap().invariant_vector(), s);
    assert_eq!(h1().change_of_basis(&p).unwrap().invariant_vector(), h);
}

#[test]
fn adapted_basis_of_heisenberg() {
    let ab = h2().adapted_basis();
    assert_eq!(ab.degrees, vec![1, 1, 1, 1, 2]);
    assert_eq!(ab.vectors[4], vector::unit(5, 4));
}

#[test]
fn decomposition_duals() {
    let l = h2();
    let dec = BasisDecomposition::from_basis_indices(5, 0, 1).unwrap();
    assert_eq!(dec.a1_star(), vector::unit(5, 0));
    let pi = dec.projection_h();
    for v in dec.h().basis_vectors() {
        assert_eq!(pi.mul_vec(&v), v);
    }
    assert!(vector::is_zero(&pi.mul_vec(dec.a1())));
    for h in dec.h().basis_vectors() {
        let lhs = l.adjoint(&h).trace();
        let restricted = l.adjoint_restricted(&h, dec.h()).unwrap().trace();
        assert_eq!(lhs, -dec.trace_defect(&l, &h) + restricted);
    }
    let degenerate = BasisDecomposition::new(
        vector::unit(5, 2),
        vector::unit(5, 2),
        Subspace::span(5, &[vector::unit(5, 0), vector::unit(5, 1), vector::unit(5, 3)]),
    );
    assert!(degenerate.is_err());
}
