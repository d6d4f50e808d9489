//! Quaternions and octonions over a generic coefficient field.
//!
//! Octonions use the basis `e0..e7 = 1, i, j, k, e, ie, je, ke` and the
//! Cayley-Dickson doubling `p = p' + p'' e` of quaternions, with product
//!
//! ```text
//! pq = p'q' - conj(q'') p'' + (q'' p' + p'' conj(q')) e
//! ```
//!
//! The product is evaluated through [`MUL_TABLE`], the signed basis table
//! this formula induces. [`Octonion::mul_cayley_dickson`] evaluates the pair
//! formula directly and is kept as an independent route for tests.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::number::{ConstScalar, Rational, Scalar};

/// `e_i * e_j = sign * e_k` stored as `(sign, k)` at `[i][j]`.
pub const MUL_TABLE: [[(i8, usize); 8]; 8] = [
    [
        (1, 0),
        (1, 1),
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (1, 6),
        (1, 7),
    ],
    [
        (1, 1),
        (-1, 0),
        (1, 3),
        (-1, 2),
        (1, 5),
        (-1, 4),
        (-1, 7),
        (1, 6),
    ],
    [
        (1, 2),
        (-1, 3),
        (-1, 0),
        (1, 1),
        (1, 6),
        (1, 7),
        (-1, 4),
        (-1, 5),
    ],
    [
        (1, 3),
        (1, 2),
        (-1, 1),
        (-1, 0),
        (1, 7),
        (-1, 6),
        (1, 5),
        (-1, 4),
    ],
    [
        (1, 4),
        (-1, 5),
        (-1, 6),
        (-1, 7),
        (-1, 0),
        (1, 1),
        (1, 2),
        (1, 3),
    ],
    [
        (1, 5),
        (1, 4),
        (-1, 7),
        (1, 6),
        (-1, 1),
        (-1, 0),
        (-1, 3),
        (1, 2),
    ],
    [
        (1, 6),
        (1, 7),
        (1, 4),
        (-1, 5),
        (-1, 2),
        (1, 3),
        (-1, 0),
        (-1, 1),
    ],
    [
        (1, 7),
        (-1, 6),
        (1, 5),
        (1, 4),
        (-1, 3),
        (-1, 2),
        (1, 1),
        (-1, 0),
    ],
];

/// `c0 + c1 i + c2 j + c3 k` with `i^2 = j^2 = k^2 = ijk = -1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quaternion<F> {
    coords: [F; 4],
}

impl<F: Scalar> Quaternion<F> {
    pub fn new(coords: [F; 4]) -> Self {
        Quaternion { coords }
    }

    pub fn coords(&self) -> &[F; 4] {
        &self.coords
    }

    pub fn conj(&self) -> Self {
        let [c0, c1, c2, c3] = &self.coords;
        Quaternion::new([c0.clone(), -c1.clone(), -c2.clone(), -c3.clone()])
    }

    pub fn norm(&self) -> F {
        let [c0, c1, c2, c3] = &self.coords;
        c0.clone() * c0 + &(c1.clone() * c1) + &(c2.clone() * c2) + &(c3.clone() * c3)
    }
}

impl<F: Scalar> Add for &Quaternion<F> {
    type Output = Quaternion<F>;
    fn add(self, rhs: &Quaternion<F>) -> Quaternion<F> {
        Quaternion::new(std::array::from_fn(|i| {
            self.coords[i].clone() + &rhs.coords[i]
        }))
    }
}

impl<F: Scalar> Sub for &Quaternion<F> {
    type Output = Quaternion<F>;
    fn sub(self, rhs: &Quaternion<F>) -> Quaternion<F> {
        Quaternion::new(std::array::from_fn(|i| {
            self.coords[i].clone() - &rhs.coords[i]
        }))
    }
}

impl<F: Scalar> Mul for &Quaternion<F> {
    type Output = Quaternion<F>;
    fn mul(self, rhs: &Quaternion<F>) -> Quaternion<F> {
        let [a0, a1, a2, a3] = &self.coords;
        let [b0, b1, b2, b3] = &rhs.coords;
        let p = |x: &F, y: &F| x.clone() * y;
        Quaternion::new([
            p(a0, b0) - &p(a1, b1) - &p(a2, b2) - &p(a3, b3),
            p(a0, b1) + &p(a1, b0) + &p(a2, b3) - &p(a3, b2),
            p(a0, b2) - &p(a1, b3) + &p(a2, b0) + &p(a3, b1),
            p(a0, b3) + &p(a1, b2) - &p(a2, b1) + &p(a3, b0),
        ])
    }
}

/// `sum c_s e_s` over `e0..e7`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Octonion<F> {
    coords: [F; 8],
}

impl<F: Scalar> Octonion<F> {
    pub fn new(coords: [F; 8]) -> Self {
        Octonion { coords }
    }

    pub fn coords(&self) -> &[F; 8] {
        &self.coords
    }

    pub fn into_coords(self) -> [F; 8] {
        self.coords
    }

    pub fn coord(&self, s: usize) -> &F {
        &self.coords[s]
    }

    /// `value * e0`.
    pub fn from_scalar(value: F) -> Self {
        let zero = value.zero_like();
        let mut coords: [F; 8] = std::array::from_fn(|_| zero.clone());
        coords[0] = value;
        Octonion { coords }
    }

    /// `e_s` with coefficients in the context of `like`.
    pub fn basis_like(s: usize, like: &F) -> Self {
        let mut coords: [F; 8] = std::array::from_fn(|_| like.zero_like());
        coords[s] = like.one_like();
        Octonion { coords }
    }

    pub fn zero_like(&self) -> Self {
        let zero = self.coords[0].zero_like();
        Octonion::new(std::array::from_fn(|_| zero.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn real(&self) -> &F {
        &self.coords[0]
    }

    /// `Re(p) - Im(p)`.
    pub fn conj(&self) -> Self {
        let mut coords = self.coords.clone();
        for c in coords.iter_mut().skip(1) {
            *c = -c.clone();
        }
        Octonion { coords }
    }

    /// `sum p_s^2`, the real part of `p * conj(p)`.
    pub fn norm(&self) -> F {
        let mut iter = self.coords.iter().map(|c| c.clone() * c);
        let first = iter.next().expect("eight coordinates");
        iter.fold(first, |acc, x| acc + &x)
    }

    pub fn scale(&self, k: &F) -> Self {
        Octonion::new(std::array::from_fn(|i| self.coords[i].clone() * k))
    }

    /// Coordinate-wise division by a scalar.
    pub fn scalar_div(&self, s: &F) -> Result<Self> {
        let inv = s.try_inv()?;
        Ok(self.scale(&inv))
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Octonion<G> {
        Octonion::new(std::array::from_fn(|i| f(&self.coords[i])))
    }

    fn compatible(&self, other: &Self) -> bool {
        self.coords
            .iter()
            .chain(other.coords.iter())
            .all(|c| c.compatible(&self.coords[0]))
    }

    /// Product through [`MUL_TABLE`], checking that both operands share a
    /// coefficient context.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if !self.compatible(other) {
            return Err(Error::ContextMismatch);
        }
        Ok(self.mul_table(other))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !self.compatible(other) {
            return Err(Error::ContextMismatch);
        }
        Ok(self + other)
    }

    fn mul_table(&self, other: &Self) -> Self {
        let mut acc: [Option<F>; 8] = Default::default();
        for (i, x) in self.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (sign, k) = MUL_TABLE[i][j];
                let term = x.clone() * y;
                acc[k] = Some(match (acc[k].take(), sign) {
                    (None, 1) => term,
                    (None, _) => -term,
                    (Some(s), 1) => s + &term,
                    (Some(s), _) => s - &term,
                });
            }
        }
        let zero = self.coords[0].zero_like();
        Octonion::new(acc.map(|c| c.unwrap_or_else(|| zero.clone())))
    }

    /// Splits `p = p' + p'' e` into its quaternion halves.
    pub fn halves(&self) -> (Quaternion<F>, Quaternion<F>) {
        let c = &self.coords;
        (
            Quaternion::new([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()]),
            Quaternion::new([c[4].clone(), c[5].clone(), c[6].clone(), c[7].clone()]),
        )
    }

    pub fn from_halves(lo: Quaternion<F>, hi: Quaternion<F>) -> Self {
        let [a0, a1, a2, a3] = lo.coords;
        let [b0, b1, b2, b3] = hi.coords;
        Octonion::new([a0, a1, a2, a3, b0, b1, b2, b3])
    }

    /// The pair formula evaluated on quaternion halves.
    pub fn mul_cayley_dickson(&self, other: &Self) -> Self {
        let (p1, p2) = self.halves();
        let (q1, q2) = other.halves();
        let lo = &(&p1 * &q1) - &(&q2.conj() * &p2);
        let hi = &(&q2 * &p1) + &(&p2 * &q1.conj());
        Octonion::from_halves(lo, hi)
    }
}

impl<F: ConstScalar> Octonion<F> {
    pub fn zero() -> Self {
        Octonion::new(std::array::from_fn(|_| F::zero()))
    }

    pub fn one() -> Self {
        Octonion::unit(0)
    }

    /// The basis element `e_s`.
    pub fn unit(s: usize) -> Self {
        Octonion::basis_like(s, &F::one())
    }
}

impl<F: Scalar> Add for &Octonion<F> {
    type Output = Octonion<F>;
    fn add(self, rhs: &Octonion<F>) -> Octonion<F> {
        Octonion::new(std::array::from_fn(|i| {
            self.coords[i].clone() + &rhs.coords[i]
        }))
    }
}

impl<F: Scalar> Sub for &Octonion<F> {
    type Output = Octonion<F>;
    fn sub(self, rhs: &Octonion<F>) -> Octonion<F> {
        Octonion::new(std::array::from_fn(|i| {
            self.coords[i].clone() - &rhs.coords[i]
        }))
    }
}

impl<F: Scalar> Mul for &Octonion<F> {
    type Output = Octonion<F>;
    /// Panics if the operands carry different coefficient contexts.
    fn mul(self, rhs: &Octonion<F>) -> Octonion<F> {
        self.try_mul(rhs)
            .expect("octonions from different coefficient fields")
    }
}

impl<F: Scalar> Neg for &Octonion<F> {
    type Output = Octonion<F>;
    fn neg(self) -> Octonion<F> {
        Octonion::new(std::array::from_fn(|i| -self.coords[i].clone()))
    }
}

macro_rules! by_value {
    ($trait:ident, $method:ident) => {
        impl<F: Scalar> $trait for Octonion<F> {
            type Output = Octonion<F>;
            fn $method(self, rhs: Octonion<F>) -> Octonion<F> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, F: Scalar> $trait<&'a Octonion<F>> for Octonion<F> {
            type Output = Octonion<F>;
            fn $method(self, rhs: &'a Octonion<F>) -> Octonion<F> {
                (&self).$method(rhs)
            }
        }
    };
}

by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl<F: Scalar> Neg for Octonion<F> {
    type Output = Octonion<F>;
    fn neg(self) -> Octonion<F> {
        -&self
    }
}

/// Text form: the eight coordinates in `e0..e7` order, comma-separated.
impl<F: Scalar> fmt::Display for Octonion<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Octonion<Rational> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 8 {
            return Err(Error::ParseOctonion(s.to_string()));
        }
        let mut coords: [Rational; 8] = Default::default();
        for (slot, part) in coords.iter_mut().zip(parts) {
            *slot = part
                .parse()
                .map_err(|_| Error::ParseOctonion(s.to_string()))?;
        }
        Ok(Octonion::new(coords))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::QuadraticField;

    type Oct = Octonion<Rational>;

    fn e(s: usize) -> Oct {
        Oct::unit(s)
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn quaternion_units() {
        let q = |s: usize| {
            let mut c: [Rational; 4] = Default::default();
            c[s] = Rational::one();
            Quaternion::new(c)
        };
        let minus_one = Quaternion::new([r("-1"), r("0"), r("0"), r("0")]);
        for s in 1..4 {
            assert_eq!(&q(s) * &q(s), minus_one);
        }
        assert_eq!(&q(1) * &q(2), q(3));
        assert_eq!(&(&q(1) * &q(2)) * &q(3), minus_one);
    }

    #[test]
    fn table_matches_pair_formula() {
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(&e(i) * &e(j), e(i).mul_cayley_dickson(&e(j)), "e{i} * e{j}");
            }
        }
    }

    #[test]
    fn documented_basis_products() {
        assert_eq!(&e(1) * &e(2), e(3));
        assert_eq!(&e(1) * &e(4), e(5));
        assert_eq!(&e(4) * &e(1), -e(5));
        assert_eq!(&(&e(1) * &e(2)) * &e(4), e(7));
        assert_eq!(&e(1) * &(&e(2) * &e(4)), -e(7));
    }

    #[test]
    fn conj_examples() {
        assert_eq!(e(0).conj(), e(0));
        assert_eq!(e(5).conj(), -e(5));
        let p: Oct = "1,0,0,2,0,0,0,0".parse().unwrap();
        assert_eq!(p.conj().to_string(), "1,0,0,-2,0,0,0,0");
    }

    #[test]
    fn norm_examples() {
        assert_eq!(e(0).norm(), r("1"));
        let all = (0..8).fold(Oct::zero(), |acc, s| &acc + &e(s));
        assert_eq!(all.norm(), r("8"));
    }

    #[test]
    fn scalar_division() {
        let p: Oct = "2,0,0,0,0,0,0,4".parse().unwrap();
        assert_eq!(
            p.scalar_div(&r("2")).unwrap().to_string(),
            "1,0,0,0,0,0,0,2"
        );
        assert_eq!(p.scalar_div(&r("1")).unwrap(), p);
        assert_eq!(p.scalar_div(&r("0")), Err(Error::DivisionByZero));
    }

    #[test]
    fn quadratic_coefficients_and_context_mismatch() {
        let k5 = QuadraticField::new(r("5"));
        let k7 = QuadraticField::new(r("7"));
        let x = Octonion::basis_like(1, &k5.one()).scale(&k5.sqrt_d());
        let y = Octonion::basis_like(1, &k7.one());
        assert_eq!(x.try_mul(&y), Err(Error::ContextMismatch));
        // (sqrt5 i)^2 = -5
        let sq = x.try_mul(&x).unwrap();
        assert_eq!(sq, Octonion::from_scalar(k5.from_rational(r("-5"))));
        // dividing by sqrt5 - 2 in Q(sqrt 4) hits a zero divisor
        let k4 = QuadraticField::new(r("4"));
        let z = Octonion::basis_like(0, &k4.one());
        assert_eq!(
            z.scalar_div(&k4.element(r("-2"), r("1"))),
            Err(Error::NormZero)
        );
    }

    #[test]
    fn text_form_roundtrip_and_errors() {
        let p: Oct = "0,1,-1/2,3,4/6,5,6,7".parse().unwrap();
        assert_eq!(p.to_string(), "0,1,-1/2,3,2/3,5,6,7");
        assert!("1,2,3".parse::<Oct>().is_err());
        assert!("1,2,3,4,5,6,7,x".parse::<Oct>().is_err());
    }
}
