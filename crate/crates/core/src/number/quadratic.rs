use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::number::Rational;

/// The field Q(sqrt D) for a fixed rational `D`.
///
/// `sqrt D` is kept symbolic: the only rule used is `(sqrt D)^2 = D`, so the
/// representation stays valid when `D` is negative or a perfect square. In
/// the latter case the ring has zero divisors and [`QuadraticElement::inv`]
/// reports [`Error::NormZero`] for them.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadraticField {
    disc: Arc<Rational>,
}

impl QuadraticField {
    pub fn new(discriminant: Rational) -> Self {
        QuadraticField {
            disc: Arc::new(discriminant),
        }
    }

    pub fn discriminant(&self) -> &Rational {
        &self.disc
    }

    pub fn element(&self, rat_part: Rational, surd_part: Rational) -> QuadraticElement {
        QuadraticElement {
            rat: rat_part,
            surd: surd_part,
            field: self.clone(),
        }
    }

    pub fn from_rational(&self, value: Rational) -> QuadraticElement {
        self.element(value, Rational::zero())
    }

    pub fn zero(&self) -> QuadraticElement {
        self.from_rational(Rational::zero())
    }

    pub fn one(&self) -> QuadraticElement {
        self.from_rational(Rational::one())
    }

    /// The symbolic square root of the discriminant.
    pub fn sqrt_d(&self) -> QuadraticElement {
        self.element(Rational::zero(), Rational::one())
    }

    fn same(&self, other: &QuadraticField) -> bool {
        Arc::ptr_eq(&self.disc, &other.disc) || self.disc == other.disc
    }
}

impl fmt::Debug for QuadraticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt {})", self.disc)
    }
}

/// `rat_part + surd_part * sqrt D`.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadraticElement {
    rat: Rational,
    surd: Rational,
    field: QuadraticField,
}

impl QuadraticElement {
    pub fn rat_part(&self) -> &Rational {
        &self.rat
    }

    pub fn surd_part(&self) -> &Rational {
        &self.surd
    }

    pub fn discriminant(&self) -> &Rational {
        self.field.discriminant()
    }

    pub fn field(&self) -> &QuadraticField {
        &self.field
    }

    pub fn same_field(&self, other: &QuadraticElement) -> bool {
        self.field.same(&other.field)
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    /// The rational value, if the surd part is exactly zero.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.rat.clone())
    }

    /// `p - q sqrt D`.
    pub fn conj(&self) -> QuadraticElement {
        self.field.element(self.rat.clone(), -&self.surd)
    }

    /// `x * conj(x) = p^2 - q^2 D`.
    pub fn norm(&self) -> Rational {
        self.rat.square() - self.surd.square() * self.discriminant()
    }

    fn check(&self, other: &QuadraticElement) -> Result<()> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &QuadraticElement) -> Result<QuadraticElement> {
        self.check(other)?;
        Ok(self
            .field
            .element(&self.rat + &other.rat, &self.surd + &other.surd))
    }

    pub fn try_sub(&self, other: &QuadraticElement) -> Result<QuadraticElement> {
        self.check(other)?;
        Ok(self
            .field
            .element(&self.rat - &other.rat, &self.surd - &other.surd))
    }

    /// `(p + q sqrt D)(r + s sqrt D) = (pr + qsD) + (ps + qr) sqrt D`.
    pub fn try_mul(&self, other: &QuadraticElement) -> Result<QuadraticElement> {
        self.check(other)?;
        let rat = &self.rat * &other.rat + &self.surd * &other.surd * self.discriminant();
        let surd = &self.rat * &other.surd + &self.surd * &other.rat;
        Ok(self.field.element(rat, surd))
    }

    pub fn scale(&self, k: &Rational) -> QuadraticElement {
        self.field.element(&self.rat * k, &self.surd * k)
    }

    pub fn pow(&self, exp: u32) -> QuadraticElement {
        let mut result = self.field.one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplicative inverse via the conjugate: `conj(x) / norm(x)`.
    pub fn inv(&self) -> Result<QuadraticElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = self.norm();
        if norm.is_zero() {
            return Err(Error::NormZero);
        }
        let k = norm.checked_inv()?;
        Ok(self.conj().scale(&k))
    }

    pub fn try_div(&self, other: &QuadraticElement) -> Result<QuadraticElement> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }
}

impl fmt::Display for QuadraticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            return write!(f, "{}", self.rat);
        }
        let surd = format!("({})*sqrt({})", self.surd, self.discriminant());
        if self.rat.is_zero() {
            write!(f, "{surd}")
        } else {
            write!(f, "{} + {surd}", self.rat)
        }
    }
}

impl fmt::Debug for QuadraticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

const MISMATCH: &str = "quadratic elements from different fields";

macro_rules! quad_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a, 'b> $trait<&'b QuadraticElement> for &'a QuadraticElement {
            type Output = QuadraticElement;
            fn $method(self, rhs: &'b QuadraticElement) -> QuadraticElement {
                self.$checked(rhs).expect(MISMATCH)
            }
        }
        impl<'a> $trait<&'a QuadraticElement> for QuadraticElement {
            type Output = QuadraticElement;
            fn $method(self, rhs: &'a QuadraticElement) -> QuadraticElement {
                self.$checked(rhs).expect(MISMATCH)
            }
        }
        impl $trait<QuadraticElement> for QuadraticElement {
            type Output = QuadraticElement;
            fn $method(self, rhs: QuadraticElement) -> QuadraticElement {
                self.$checked(&rhs).expect(MISMATCH)
            }
        }
    };
}

quad_binop!(Add, add, try_add);
quad_binop!(Sub, sub, try_sub);
quad_binop!(Mul, mul, try_mul);

impl Neg for QuadraticElement {
    type Output = QuadraticElement;
    fn neg(self) -> QuadraticElement {
        QuadraticElement {
            rat: -self.rat,
            surd: -self.surd,
            field: self.field,
        }
    }
}

impl Neg for &QuadraticElement {
    type Output = QuadraticElement;
    fn neg(self) -> QuadraticElement {
        self.clone().neg()
    }
}
