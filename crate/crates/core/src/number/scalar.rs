use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;
use crate::number::{QuadraticElement, Rational};

/// Coefficient field for quaternions, octonions and series.
///
/// Values that carry a runtime context (elements of Q(sqrt D)) cannot
/// produce a bare zero, so constants are derived from an existing value.
/// Operators panic when two values from different contexts meet; the
/// fallible entry points check [`Scalar::compatible`] first.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Send
    + Sync
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn try_inv(&self) -> Result<Self>;
    /// Embeds a rational into the same context as `self`.
    fn embed(&self, value: &Rational) -> Self;
    fn compatible(&self, other: &Self) -> bool;
}

/// A scalar with context-free constants.
pub trait ConstScalar: Scalar {
    fn zero() -> Self;
    fn one() -> Self;
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn try_inv(&self) -> Result<Self> {
        self.checked_inv()
    }

    fn embed(&self, value: &Rational) -> Self {
        value.clone()
    }

    fn compatible(&self, _other: &Self) -> bool {
        true
    }
}

impl ConstScalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn one() -> Self {
        Rational::one()
    }
}

impl Scalar for QuadraticElement {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }

    fn one_like(&self) -> Self {
        self.field().one()
    }

    fn is_zero(&self) -> bool {
        QuadraticElement::is_zero(self)
    }

    fn try_inv(&self) -> Result<Self> {
        self.inv()
    }

    fn embed(&self, value: &Rational) -> Self {
        self.field().from_rational(value.clone())
    }

    fn compatible(&self, other: &Self) -> bool {
        self.same_field(other)
    }
}
