//! Dual numbers `a + bε` with `ε² = 0` over ℚ.

use std::ops::{Add, Mul, Neg, Sub};

use super::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DualScalar {
    pub a: Rational,
    pub b: Rational,
}

impl DualScalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        DualScalar { a, b }
    }

    pub fn real(a: Rational) -> Self {
        DualScalar {
            a,
            b: Rational::zero(),
        }
    }

    pub fn epsilon() -> Self {
        DualScalar {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    pub fn zero() -> Self {
        DualScalar::default()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl Add for &DualScalar {
    type Output = DualScalar;
    fn add(self, rhs: &DualScalar) -> DualScalar {
        DualScalar {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Add for DualScalar {
    type Output = DualScalar;
    fn add(self, rhs: DualScalar) -> DualScalar {
        &self + &rhs
    }
}

impl Sub for &DualScalar {
    type Output = DualScalar;
    fn sub(self, rhs: &DualScalar) -> DualScalar {
        DualScalar {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Sub for DualScalar {
    type Output = DualScalar;
    fn sub(self, rhs: DualScalar) -> DualScalar {
        &self - &rhs
    }
}

impl Mul for &DualScalar {
    type Output = DualScalar;
    fn mul(self, rhs: &DualScalar) -> DualScalar {
        DualScalar {
            a: &self.a * &rhs.a,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Mul for DualScalar {
    type Output = DualScalar;
    fn mul(self, rhs: DualScalar) -> DualScalar {
        &self * &rhs
    }
}

impl Neg for DualScalar {
    type Output = DualScalar;
    fn neg(self) -> DualScalar {
        DualScalar {
            a: -self.a,
            b: -self.b,
        }
    }
}
