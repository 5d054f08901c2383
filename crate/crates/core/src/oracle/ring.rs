use std::fmt::Debug;

use num_bigint::BigInt;

use crate::algebra::{IntPoly, NormalPolynomial};

mod sealed {
    pub trait Sealed {}
    impl Sealed for crate::algebra::IntPoly {}
    impl Sealed for crate::algebra::NormalPolynomial {}
}

/// A commutative coefficient ring with a derivation. Implemented for `ℤ[x]`
/// with `d/dx` and for `ℤ[y_0, y_1, ...]` with `Δ(y_i) = y_{i+1}`.
pub trait DifferentialRing: Clone + PartialEq + Debug + sealed::Sealed {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn derive(&self) -> Self;
    fn from_int(c: BigInt) -> Self;
    fn render(&self) -> String;

    fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }
}

impl DifferentialRing for IntPoly {
    fn zero() -> Self {
        IntPoly::zero()
    }

    fn one() -> Self {
        IntPoly::one()
    }

    fn is_zero(&self) -> bool {
        IntPoly::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn derive(&self) -> Self {
        self.derivative()
    }

    fn from_int(c: BigInt) -> Self {
        IntPoly::constant(c)
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

/// Elements are `t`-free normal polynomials.
impl DifferentialRing for NormalPolynomial {
    fn zero() -> Self {
        NormalPolynomial::zero()
    }

    fn one() -> Self {
        NormalPolynomial::one()
    }

    fn is_zero(&self) -> bool {
        NormalPolynomial::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn derive(&self) -> Self {
        self.delta()
    }

    fn from_int(c: BigInt) -> Self {
        NormalPolynomial::one().scale(&c)
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivations() {
        let p: IntPoly = "x^3 + x".parse().unwrap();
        assert_eq!(DifferentialRing::derive(&p), "3x^2 + 1".parse().unwrap());
        let y0 = NormalPolynomial::y(0);
        let y2 = (0..2).fold(y0.clone(), |a, _| DifferentialRing::derive(&a));
        assert_eq!(y2, NormalPolynomial::y(2));
        assert_eq!(DifferentialRing::pow(&y0, 3).to_string(), "y0^3");
    }
}
