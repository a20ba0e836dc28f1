use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::lie::MultilinearMap;
use crate::linalg::vector;

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

fn aff1() -> LieAlgebra {
    LieAlgebra::from_table(2, &[(0, 1, &[(1, 1)])])
}

fn random_cochain(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Cochain2 {
    Cochain2::from_fn(n, |_, _| {
        (0..n)
            .map(|_| {
                if rng.gen_bool(density) {
                    q(rng.gen_range(-2..=2))
                } else {
                    q(0)
                }
            })
            .collect()
    })
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let data: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-3..=3)).collect();
    Matrix::from_i64(n, n, &data)
}

#[test]
fn delta1_examples() {
    let l = h1();
    let d = delta1(&l, &Matrix::identity(3));
    assert_eq!(d.basis_value(0, 1), vector::unit(3, 2));
    let a = LieAlgebra::abelian(3);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    assert!(delta1(&a, &random_matrix(&mut rng, 3)).is_zero());
}

#[test]
fn delta_squares_to_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for l in [h1(), h2(), sl2(), aff1()] {
        let mu = l.structure().clone();
        assert!(delta2(&l, &mu).is_zero());
        for _ in 0..5 {
            let f = random_matrix(&mut rng, l.dim());
            assert!(delta2(&l, &delta1(&l, &f)).is_zero());
        }
        let w = random_cochain(&mut rng, l.dim(), 0.5);
        assert!(delta2(&LieAlgebra::abelian(l.dim()), &w).is_zero());
    }
}

#[test]
fn eta_and_sigma_base_cases() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let l = h2();
    let w = random_cochain(&mut rng, 5, 0.3);
    assert_eq!(eta_k(&l, &w, 1), MultilinearMap::bilinear(&w));
    assert_eq!(sigma_k(&l, &w, 1), MultilinearMap::bilinear(&w));
    assert!(eta_k(&h1(), h1().structure(), 2).is_zero());
    let a = LieAlgebra::abelian(3);
    let w3 = random_cochain(&mut rng, 3, 0.8);
    assert!(eta_k(&a, &w3, 2).is_zero());
    assert!(eta_k(&a, &w3, 3).is_zero());
    assert!(sigma_k(&a, &w3, 2).is_zero());
}

#[test]
fn eta_forms_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for l in [h1(), sl2(), aff1()] {
        for k in 1..=3 {
            let w = random_cochain(&mut rng, l.dim(), 0.6);
            assert_eq!(eta_k(&l, &w, k), eta_k_composition(&l, &w, k), "k={k}");
        }
    }
}

#[test]
fn cohomology_examples() {
    assert_eq!(cohomology(&sl2(), Variety::Lie).unwrap().h_dim, 0);
    assert_eq!(cohomology(&h1(), Variety::Nil(2)).unwrap().h_dim, 0);
    let a = cohomology(&LieAlgebra::abelian(3), Variety::Nil(1)).unwrap();
    assert_eq!((a.z_dim, a.h_dim), (0, 0));
    let a = cohomology(&LieAlgebra::abelian(3), Variety::Lie).unwrap();
    assert_eq!((a.z_dim, a.b_dim, a.h_dim), (9, 0, 9));
    assert_eq!(a.certificate(), Certificate::Inconclusive);
    let h = cohomology(&h2(), Variety::Nil(3)).unwrap();
    assert!(h.h_dim > 0);
    assert!(h.b_in_z);
    assert_eq!(cohomology(&aff1(), Variety::Lie).unwrap().h_dim, 0);
}

#[test]
fn precondition_and_cap() {
    match cohomology(&sl2(), Variety::Nil(2)) {
        Err(LieError::NotInVariety { variety, witness }) => {
            assert_eq!(variety, "nil:2");
            assert_eq!(witness.len(), 3);
        }
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(
        cohomology_with_cap(&h2(), Variety::Lie, 10),
        Err(LieError::ResourceCap {
            required: 50,
            cap: 10
        })
    ));
}

#[test]
fn symbolic_constraints_match_direct_maps() {
    // ω ∈ Z_X iff δω = 0 and η_k/σ_k ω = 0 evaluated densely.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let cases = [
        (h2(), Variety::Nil(2)),
        (h2(), Variety::Sol(2)),
        (aff1(), Variety::Sol(2)),
        (h1(), Variety::Nil(3)),
    ];
    for (l, var) in cases {
        let space = cohomology(&l, var).unwrap();
        let mut samples: Vec<Cochain2> = space.z_basis.clone();
        samples.extend((0..10).map(|_| random_cochain(&mut rng, l.dim(), 0.15)));
        for w in samples {
            let direct = delta2(&l, &w).is_zero()
                && match var {
                    Variety::Lie => true,
                    Variety::Nil(k) => eta_k(&l, &w, k).is_zero(),
                    Variety::Sol(k) => sigma_k(&l, &w, k).is_zero(),
                };
            assert_eq!(space.is_cocycle(&w), direct);
            assert_eq!(dual_number_oracle(&l, &w, var), direct);
        }
    }
}

#[test]
fn coboundaries_pass_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for (l, var) in [
        (h2(), Variety::Nil(2)),
        (sl2(), Variety::Lie),
        (aff1(), Variety::Sol(2)),
    ] {
        let f = random_matrix(&mut rng, l.dim());
        assert!(dual_number_oracle(&l, &delta1(&l, &f), var));
        assert!(dual_number_oracle(&l, &Cochain2::zero(l.dim()), var));
    }
}
