//! Exact rational linear algebra and integer lattice algebra.
//!
//! Everything here works over arbitrary-precision integers and rationals.
//! There is no floating point anywhere in the crate.

mod feasibility;
mod lattice;
mod rational;

pub use feasibility::{strict_feasible, LinearConstraint, Relation};
pub use lattice::{
    hermite_with_transform, hnf, integer_solve, lattice_equal, left_kernel, HermiteDecomposition,
    IntegerLattice, LatticeSolver,
};
pub use rational::{rational_kernel, rational_rank, rational_solve, RationalMatrix};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn int_vec(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

pub fn rat_vec(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| rat(v)).collect()
}

/// Scales a rational vector by a positive factor so that it becomes a
/// primitive integer vector (gcd of entries 1). The zero vector maps to zero.
pub fn primitive_integer_vector(values: &[Rational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scaled: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let gcd = scaled
        .iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if gcd.is_zero() {
        return scaled;
    }
    scaled.into_iter().map(|v| v / &gcd).collect()
}

/// Dot product of two rational vectors of equal length.
pub fn dot(lhs: &[Rational], rhs: &[Rational]) -> Rational {
    debug_assert_eq!(lhs.len(), rhs.len());
    lhs.iter()
        .zip(rhs)
        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}
