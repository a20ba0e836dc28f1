#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use lieforge::cohomology::Cochain2;
use lieforge::free_nilpotent::free_nilpotent;
use lieforge::lie::{pairs, LieAlgebra};
use lieforge::linalg::{Matrix, Rational, Subspace, Vector};

/// Small rationals `p/q` with `|p| ≤ 4`, `q ∈ {1,2,3}`.
pub fn rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| rational(rng)).collect()
}

/// Each coordinate is nonzero with probability `density`.
pub fn cochain(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Cochain2 {
    let mut w = Cochain2::zero(n);
    for (i, j) in pairs(n) {
        let v: Vector = (0..n)
            .map(|_| {
                if rng.gen_bool(density) {
                    rational(rng)
                } else {
                    Rational::zero()
                }
            })
            .collect();
        w.set(i, j, &v);
    }
    w
}

/// Random linear combination of the given cochains.
pub fn combination(rng: &mut ChaCha8Rng, n: usize, basis: &[Cochain2]) -> Cochain2 {
    basis.iter().fold(Cochain2::zero(n), |acc, b| {
        acc.add(&b.scale(&rational(rng))).expect("same dimension")
    })
}

pub fn invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let rows: Vec<Vector> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| Rational::from_int(rng.gen_range(-2..=2)))
                    .collect()
            })
            .collect();
        let p = Matrix::from_rows(n, &rows);
        if !p.determinant().is_zero() {
            return p;
        }
    }
}

/// A free nilpotent algebra divided by a random subspace of its top layer,
/// written in a random basis.
pub fn random_nilpotent(rng: &mut ChaCha8Rng) -> LieAlgebra {
    let (m, k) = [(2, 3), (3, 2), (2, 4), (3, 3)][rng.gen_range(0..4)];
    let l = free_nilpotent(m, k).expect("small free nilpotent algebra");
    let n = l.dim();
    let top = l.lower_central_series()[k - 1].clone();
    let kill: Vec<Vector> = top
        .basis_vectors()
        .into_iter()
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    let q = l
        .quotient(&Subspace::span(n, &kill))
        .expect("central subspaces are ideals");
    let p = invertible(rng, q.dim());
    q.change_of_basis(&p).expect("invertible change of basis")
}
