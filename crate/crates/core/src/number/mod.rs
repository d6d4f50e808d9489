//! Exact scalars: arbitrary-precision rationals and the quadratic extension
//! Q(sqrt D) that holds the characteristic roots.

mod quadratic;
mod rational;
mod scalar;

pub use quadratic::{QuadraticElement, QuadraticField};
pub use rational::Rational;
pub use scalar::{ConstScalar, Scalar};

#[cfg(test)]
mod proptests;
