use crate::error::{Error, Result};
use crate::number::{QuadraticElement, QuadraticField, Rational};

/// The parameters `(a, b)` of a bi-periodic sequence together with the
/// characteristic roots of `x^2 - ab x - ab = 0`.
///
/// `alpha = (ab + sqrt D)/2` and `beta = (ab - sqrt D)/2` with
/// `D = a^2 b^2 + 4ab`, both held symbolically in Q(sqrt D).
#[derive(Clone, Debug, PartialEq)]
pub struct SeqParams {
    a: Rational,
    b: Rational,
    ab: Rational,
    disc: Rational,
    field: QuadraticField,
    alpha: QuadraticElement,
    beta: QuadraticElement,
}

impl SeqParams {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroParameter("a"));
        }
        if b.is_zero() {
            return Err(Error::ZeroParameter("b"));
        }
        let ab = &a * &b;
        let disc = ab.square() + Rational::from(4) * &ab;
        let field = QuadraticField::new(disc.clone());
        let half = Rational::new(1, 2)?;
        let alpha = field.element(&ab * &half, half.clone());
        let beta = field.element(&ab * &half, -half);
        Ok(SeqParams {
            a,
            b,
            ab,
            disc,
            field,
            alpha,
            beta,
        })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn ab(&self) -> &Rational {
        &self.ab
    }

    /// `D = a^2 b^2 + 4ab`.
    pub fn discriminant(&self) -> &Rational {
        &self.disc
    }

    pub fn field(&self) -> &QuadraticField {
        &self.field
    }

    pub fn alpha(&self) -> &QuadraticElement {
        &self.alpha
    }

    pub fn beta(&self) -> &QuadraticElement {
        &self.beta
    }

    /// `ab = -4` makes `alpha = beta`.
    pub fn is_degenerate(&self) -> bool {
        self.disc.is_zero()
    }

    pub fn require_nondegenerate(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(Error::DegenerateDiscriminant)
        } else {
            Ok(())
        }
    }

    /// `1/(alpha - beta) = 1/sqrt D`.
    pub fn inv_root_gap(&self) -> Result<QuadraticElement> {
        self.require_nondegenerate()?;
        (&self.alpha - &self.beta).inv()
    }

    /// Multiplier used by the Fibonacci recurrence at index `n`: `a` for even
    /// `n`, `b` for odd. The Lucas recurrence uses the opposite assignment.
    pub fn fib_multiplier(&self, n: i64) -> &Rational {
        if n.rem_euclid(2) == 0 {
            &self.a
        } else {
            &self.b
        }
    }

    pub fn lucas_multiplier(&self, n: i64) -> &Rational {
        if n.rem_euclid(2) == 0 {
            &self.b
        } else {
            &self.a
        }
    }

    pub fn embed(&self, value: &Rational) -> QuadraticElement {
        self.field.from_rational(value.clone())
    }
}

pub fn make_context(a: Rational, b: Rational) -> Result<SeqParams> {
    SeqParams::new(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn classical_fibonacci_context() {
        let p = make_context(r("1"), r("1")).unwrap();
        assert_eq!(p.discriminant(), &r("5"));
        assert_eq!(p.alpha().rat_part(), &r("1/2"));
        assert_eq!(p.alpha().surd_part(), &r("1/2"));
    }

    #[test]
    fn two_three_context() {
        let p = make_context(r("2"), r("3")).unwrap();
        assert_eq!(p.discriminant(), &r("60"));
        assert_eq!(p.alpha().rat_part(), &r("3"));
        assert_eq!(p.alpha().surd_part(), &r("1/2"));
    }

    #[test]
    fn degenerate_context_is_constructible() {
        let p = make_context(r("2"), r("-2")).unwrap();
        assert!(p.discriminant().is_zero());
        assert!(p.is_degenerate());
        assert_eq!(p.inv_root_gap(), Err(Error::DegenerateDiscriminant));
    }

    #[test]
    fn zero_parameters_rejected() {
        assert_eq!(make_context(r("0"), r("1")), Err(Error::ZeroParameter("a")));
        assert_eq!(make_context(r("1"), r("0")), Err(Error::ZeroParameter("b")));
    }

    #[test]
    fn root_relations() {
        for (a, b) in [
            ("1", "1"),
            ("2", "3"),
            ("1/2", "-3"),
            ("-1", "5"),
            ("2", "-2"),
        ] {
            let p = make_context(r(a), r(b)).unwrap();
            let ab = p.embed(p.ab());
            assert_eq!(p.alpha() + p.beta(), ab);
            assert_eq!(p.alpha() * p.beta(), -ab);
            assert_eq!(p.alpha() - p.beta(), p.field().sqrt_d());
        }
    }

    #[test]
    fn alpha_beta_product_classical() {
        let p = make_context(r("1"), r("1")).unwrap();
        assert_eq!((p.alpha() * p.beta()).to_rational(), Some(r("-1")));
    }

    #[test]
    fn inverse_of_root_gap_classical() {
        let p = make_context(r("1"), r("1")).unwrap();
        let inv = p.inv_root_gap().unwrap();
        assert_eq!(inv, p.field().element(r("0"), r("1/5")));
    }
}
