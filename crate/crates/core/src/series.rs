//! Truncated formal Laurent series and the generating functions of the
//! bi-periodic sequences and octonions.
//!
//! A [`LaurentSeries`] stores every coefficient from `min_degree` through
//! `order` densely; coefficients above `order` are unknown, not zero.
//! Octonion-valued series are eight scalar series side by side, since every
//! operation needed here multiplies coefficients by scalars only.

use crate::context::SeqParams;
use crate::error::{Error, Result};
use crate::fib_octonion::{oct_o, RatOctonion};
use crate::number::{ConstScalar, Rational};
use crate::octonion::Octonion;
use crate::sequence::SeqCache;

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries<F> {
    min_degree: i64,
    coeffs: Vec<F>,
    order: i64,
}

impl<F: ConstScalar> LaurentSeries<F> {
    /// `coeffs[i]` is the coefficient of `x^(min_degree + i)`. Missing
    /// coefficients up to `order` are zero; extra ones are dropped.
    pub fn new(min_degree: i64, mut coeffs: Vec<F>, order: i64) -> Self {
        let len = (order - min_degree + 1).max(0) as usize;
        coeffs.resize(len, F::zero());
        LaurentSeries {
            min_degree,
            coeffs,
            order,
        }
    }

    /// A finite sum of `(degree, coefficient)` terms, known exactly through
    /// `order`.
    pub fn polynomial(terms: &[(i64, F)], order: i64) -> Self {
        let min_degree = terms
            .iter()
            .map(|(d, _)| *d)
            .min()
            .unwrap_or(0)
            .min(order + 1);
        let mut s: Self = LaurentSeries::new(min_degree, Vec::new(), order);
        for (d, c) in terms {
            if *d <= order {
                let i = (d - min_degree) as usize;
                s.coeffs[i] = s.coeffs[i].clone() + c;
            }
        }
        s
    }

    pub fn zero(order: i64) -> Self {
        LaurentSeries::new(0, Vec::new(), order)
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficient of `x^degree`, or `None` above the truncation order.
    pub fn coeff(&self, degree: i64) -> Option<F> {
        if degree > self.order {
            None
        } else if degree < self.min_degree {
            Some(F::zero())
        } else {
            Some(self.coeffs[(degree - self.min_degree) as usize].clone())
        }
    }

    fn coeff_or_zero(&self, degree: i64) -> F {
        self.coeff(degree).unwrap_or_else(F::zero)
    }

    /// `(degree, coefficient)` pairs for every stored degree.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.min_degree + i as i64, c))
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.terms().find(|(_, c)| !c.is_zero()).map(|(d, _)| d)
    }

    /// Negative degrees carrying a nonzero coefficient.
    pub fn principal_part_residue(&self) -> Option<i64> {
        self.terms()
            .take_while(|(d, _)| *d < 0)
            .find(|(_, c)| !c.is_zero())
            .map(|(d, _)| d)
    }

    /// Drops leading zero coefficients so that `min_degree` is the
    /// valuation (or `order + 1` for a series known to be zero).
    pub fn trimmed(&self) -> Self {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        LaurentSeries {
            min_degree: self.min_degree + lead as i64,
            coeffs: self.coeffs[lead..].to_vec(),
            order: self.order,
        }
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        LaurentSeries::new(self.min_degree, self.coeffs.clone(), order)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            min_degree: self.min_degree + k,
            coeffs: self.coeffs.clone(),
            order: self.order + k,
        }
    }

    pub fn scale(&self, k: &F) -> Self {
        LaurentSeries {
            min_degree: self.min_degree,
            coeffs: self.coeffs.iter().map(|c| c.clone() * k).collect(),
            order: self.order,
        }
    }

    fn combine(&self, other: &Self, f: impl Fn(F, &F) -> F) -> Self {
        let min_degree = self.min_degree.min(other.min_degree);
        let order = self.order.min(other.order);
        let coeffs = (min_degree..=order)
            .map(|d| f(self.coeff_or_zero(d), &other.coeff_or_zero(d)))
            .collect();
        LaurentSeries::new(min_degree, coeffs, order)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |x, y| x + y)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |x, y| x - y)
    }

    /// Cauchy product. The result is known through
    /// `min(self.order + other.min_degree, other.order + self.min_degree)`.
    pub fn mul(&self, other: &Self) -> Self {
        let min_degree = self.min_degree + other.min_degree;
        let order = (self.order + other.min_degree).min(other.order + self.min_degree);
        let mut coeffs = vec![F::zero(); (order - min_degree + 1).max(0) as usize];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                let k = i + j;
                if k >= coeffs.len() {
                    break;
                }
                if !y.is_zero() {
                    coeffs[k] = coeffs[k].clone() + &(x.clone() * y);
                }
            }
        }
        LaurentSeries::new(min_degree, coeffs, order)
    }

    /// Division by a power series with invertible constant term.
    pub fn div_unit(&self, den: &Self) -> Result<Self> {
        if den.principal_part_residue().is_some() {
            return Err(Error::NotAUnit);
        }
        let d0 = den.coeff(0).ok_or(Error::NotAUnit)?;
        if d0.is_zero() {
            return Err(Error::NotAUnit);
        }
        let d0_inv = d0.try_inv()?;
        let min_degree = self.min_degree;
        let order = self.order.min(den.order + self.min_degree);
        let len = (order - min_degree + 1).max(0) as usize;
        let mut out: Vec<F> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = self.coeff_or_zero(min_degree + k as i64);
            for j in 1..=k {
                let dj = den.coeff_or_zero(j as i64);
                if !dj.is_zero() {
                    acc = acc - &(dj * &out[k - j]);
                }
            }
            out.push(acc * &d0_inv);
        }
        Ok(LaurentSeries::new(min_degree, out, order))
    }
}

/// An octonion-valued Laurent series held as eight scalar series.
#[derive(Clone, Debug, PartialEq)]
pub struct OctonionSeries<F> {
    coords: [LaurentSeries<F>; 8],
}

impl<F: ConstScalar> OctonionSeries<F> {
    pub fn new(coords: [LaurentSeries<F>; 8]) -> Self {
        OctonionSeries { coords }
    }

    pub fn coord(&self, s: usize) -> &LaurentSeries<F> {
        &self.coords[s]
    }

    pub fn coords(&self) -> &[LaurentSeries<F>; 8] {
        &self.coords
    }

    pub fn order(&self) -> i64 {
        self.coords.iter().map(|c| c.order).min().unwrap_or(0)
    }

    /// Octonion coefficient of `x^degree`.
    pub fn coeff(&self, degree: i64) -> Option<Octonion<F>> {
        let mut out: [F; 8] = std::array::from_fn(|_| F::zero());
        for (slot, c) in out.iter_mut().zip(&self.coords) {
            *slot = c.coeff(degree)?;
        }
        Some(Octonion::new(out))
    }

    /// `(coordinate, degree)` of the first nonzero negative-degree term.
    pub fn principal_part_residue(&self) -> Option<(usize, i64)> {
        self.coords
            .iter()
            .enumerate()
            .find_map(|(s, c)| c.principal_part_residue().map(|d| (s, d)))
    }

    fn map(&self, f: impl Fn(&LaurentSeries<F>) -> LaurentSeries<F>) -> Self {
        OctonionSeries::new(std::array::from_fn(|s| f(&self.coords[s])))
    }

    fn zip(
        &self,
        other: &Self,
        f: impl Fn(&LaurentSeries<F>, &LaurentSeries<F>) -> LaurentSeries<F>,
    ) -> Self {
        OctonionSeries::new(std::array::from_fn(|s| {
            f(&self.coords[s], &other.coords[s])
        }))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, LaurentSeries::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, LaurentSeries::sub)
    }

    pub fn scale(&self, k: &F) -> Self {
        self.map(|c| c.scale(k))
    }

    pub fn truncate(&self, order: i64) -> Self {
        self.map(|c| c.truncate(order))
    }

    /// Multiplies every coordinate by the scalar series `s`.
    pub fn mul_scalar_series(&self, s: &LaurentSeries<F>) -> Self {
        self.map(|c| c.mul(s))
    }

    pub fn div_unit(&self, den: &LaurentSeries<F>) -> Result<Self> {
        let coords = [0, 1, 2, 3, 4, 5, 6, 7].map(|s| self.coords[s].div_unit(den));
        let mut out: Vec<LaurentSeries<F>> = Vec::with_capacity(8);
        for c in coords {
            out.push(c?);
        }
        Ok(OctonionSeries::new(
            out.try_into().expect("eight coordinates"),
        ))
    }

    /// The constant series with value `value`, known through `order`.
    pub fn constant(value: &Octonion<F>, order: i64) -> Self {
        OctonionSeries::new(std::array::from_fn(|s| {
            LaurentSeries::polynomial(&[(0, value.coord(s).clone())], order)
        }))
    }
}

type Series = LaurentSeries<Rational>;
pub type RatOctonionSeries = OctonionSeries<Rational>;

/// `1 - (ab+2) x^2 + x^4`.
fn odd_part_denominator(params: &SeqParams, order: i64) -> Series {
    let k = params.ab() + Rational::from(2);
    Series::polynomial(
        &[(0, Rational::one()), (2, -k), (4, Rational::one())],
        order,
    )
}

/// `f(x) = (x - x^3) / (1 - (ab+2) x^2 + x^4) = sum_{m>=1} q_{2m-1} x^{2m-1}`,
/// through `x^order`.
pub fn series_f(params: &SeqParams, order: u32) -> Series {
    let order = order as i64;
    let num = Series::polynomial(&[(1, Rational::one()), (3, -Rational::one())], order);
    num.div_unit(&odd_part_denominator(params, order))
        .expect("constant term is 1")
}

/// `L1(x) = (a x + a x^3) / (1 - (ab+2) x^2 + x^4) = sum_{m>=0} l_{2m+1} x^{2m+1}`.
pub fn series_l1(params: &SeqParams, order: u32) -> Series {
    let order = order as i64;
    let a = params.a().clone();
    let num = Series::polynomial(&[(1, a.clone()), (3, a)], order);
    num.div_unit(&odd_part_denominator(params, order))
        .expect("constant term is 1")
}

/// Degree shift applied to `f(x)` on each coordinate of `R(x)`: `x e0`,
/// `e1`, `x^{-1} e2`, ..., `x^{-6} e7`.
const R_SHIFTS: [i64; 8] = [1, 0, -1, -2, -3, -4, -5, -6];

fn checked_r(r: RatOctonionSeries) -> Result<RatOctonionSeries> {
    match r.principal_part_residue() {
        Some((coordinate, degree)) => Err(Error::PrincipalPartResidue { coordinate, degree }),
        None => Ok(r.map(LaurentSeries::trimmed)),
    }
}

/// `R(x)` assembled from its closed display: the shifted copies of `f(x)`
/// minus the polynomial correction whose coefficients are written in terms of
/// `ab`:
///
/// ```text
/// e1: x                        e2: 1
/// e3: x^-1 + (ab+1) x          e4: x^-2 + (ab+1)
/// e5: x^-3 + (ab+1) x^-1 + c5 x
/// e6: x^-4 + (ab+1) x^-2 + c5
/// e7: x^-5 + (ab+1) x^-3 + c5 x^-1 + c7 x
/// ```
///
/// with `c5 = a^2b^2 + 3ab + 1` and `c7 = a^3b^3 + 5a^2b^2 + 6ab + 1`.
pub fn series_r_unchecked(params: &SeqParams, order: u32) -> RatOctonionSeries {
    let n = order as i64;
    let f = series_f(params, order + 6);
    let ab = params.ab().clone();
    let ab2 = ab.square();
    let ab3 = &ab2 * &ab;
    let one = Rational::one();
    let c3 = &ab + &one;
    let c5 = &ab2 + &(Rational::from(3) * &ab) + &one;
    let c7 = &ab3 + &(Rational::from(5) * &ab2) + &(Rational::from(6) * &ab) + &one;
    let correction: [Vec<(i64, Rational)>; 8] = [
        vec![],
        vec![(1, one.clone())],
        vec![(0, one.clone())],
        vec![(-1, one.clone()), (1, c3.clone())],
        vec![(-2, one.clone()), (0, c3.clone())],
        vec![(-3, one.clone()), (-1, c3.clone()), (1, c5.clone())],
        vec![(-4, one.clone()), (-2, c3.clone()), (0, c5.clone())],
        vec![(-5, one.clone()), (-3, c3), (-1, c5), (1, c7)],
    ];
    OctonionSeries::new(std::array::from_fn(|s| {
        let shifted = f.shift(R_SHIFTS[s]).truncate(n);
        shifted.sub(&Series::polynomial(&correction[s], n))
    }))
}

/// `R(x)` with its principal part checked to vanish.
pub fn series_r(params: &SeqParams, order: u32) -> Result<RatOctonionSeries> {
    checked_r(series_r_unchecked(params, order))
}

/// `R(x)` built the second way: `x^k (f(x) - sum_{i<=m} q_{2i-1} x^{2i-1})`
/// on each coordinate, with the truncation taken from the recurrence.
pub fn series_r_from_truncations(cache: &mut SeqCache, order: u32) -> Result<RatOctonionSeries> {
    let n = order as i64;
    let params = cache.params().clone();
    let f = series_f(&params, order + 6);
    // number of leading odd terms removed on e0..e7
    const REMOVED: [i64; 8] = [0, 1, 1, 2, 2, 3, 3, 4];
    let coords = std::array::from_fn(|s| {
        let head: Vec<(i64, Rational)> = (1..=REMOVED[s])
            .map(|i| (2 * i - 1, cache.fib_q(2 * i - 1)))
            .collect();
        let tail = f.sub(&Series::polynomial(&head, n + 6));
        tail.shift(R_SHIFTS[s]).truncate(n)
    });
    checked_r(OctonionSeries::new(coords))
}

/// `O_0 + x (O_1 - b O_0) + (a - b) R(x)`.
pub fn genfun_numerator(cache: &mut SeqCache, order: u32) -> Result<RatOctonionSeries> {
    let params = cache.params().clone();
    let n = order as i64;
    let o0 = oct_o(cache, 0);
    let o1 = oct_o(cache, 1);
    let linear = &o1 - &o0.scale(params.b());
    let head = OctonionSeries::new(std::array::from_fn(|s| {
        Series::polynomial(&[(0, o0.coord(s).clone()), (1, linear.coord(s).clone())], n)
    }));
    let r = series_r(&params, order)?;
    Ok(head.add(&r.scale(&(params.a() - params.b()))))
}

/// `1 - b x - x^2`.
pub fn genfun_denominator(params: &SeqParams, order: u32) -> Series {
    Series::polynomial(
        &[
            (0, Rational::one()),
            (1, -params.b().clone()),
            (2, -Rational::one()),
        ],
        order as i64,
    )
}

/// `G(x) = numerator / (1 - b x - x^2)` through `x^order`.
pub fn genfun_series(cache: &mut SeqCache, order: u32) -> Result<RatOctonionSeries> {
    let params = cache.params().clone();
    let num = genfun_numerator(cache, order)?;
    num.div_unit(&genfun_denominator(&params, order))
}

/// Outcome of comparing `G(x)` against `O_0, ..., O_order`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenfunReport {
    pub order: u32,
    /// `matches[n]` is whether the coefficient of `x^n` equals `O_n`.
    pub matches: Vec<bool>,
    /// `(degree, coordinate)` of the first disagreeing coefficient.
    pub first_mismatch: Option<(i64, usize)>,
}

impl GenfunReport {
    pub fn pass(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

fn first_diff(lhs: &RatOctonion, rhs: &RatOctonion) -> Option<usize> {
    (0..8).find(|&s| lhs.coord(s) != rhs.coord(s))
}

/// Expands the closed-form generating function and compares every
/// coefficient through `x^order` with `O_n` from the recurrence.
pub fn genfun_check(cache: &mut SeqCache, order: u32) -> Result<GenfunReport> {
    if order < 2 {
        return Err(Error::InvalidArgument(format!(
            "generating-function check needs order >= 2 (got {order})"
        )));
    }
    let g = genfun_series(cache, order)?;
    let mut matches = Vec::with_capacity(order as usize + 1);
    let mut first_mismatch = None;
    // nothing may survive below degree 0
    for s in 0..8 {
        if let Some(d) = g.coord(s).principal_part_residue() {
            first_mismatch.get_or_insert((d, s));
        }
    }
    for n in 0..=order as i64 {
        let got = g.coeff(n).expect("within order");
        let want = oct_o(cache, n);
        let diff = first_diff(&got, &want);
        if let Some(s) = diff {
            first_mismatch.get_or_insert((n, s));
        }
        matches.push(diff.is_none());
    }
    Ok(GenfunReport {
        order,
        matches,
        first_mismatch,
    })
}

/// Whether `(1 - b x - x^2) G(x)` re-expands to the numerator through
/// `x^order`.
pub fn genfun_reexpansion_matches(cache: &mut SeqCache, order: u32) -> Result<bool> {
    let params = cache.params().clone();
    let num = genfun_numerator(cache, order)?;
    let g = num.div_unit(&genfun_denominator(&params, order))?;
    let back = g.mul_scalar_series(&genfun_denominator(&params, order));
    let n = order as i64;
    Ok((num
        .coords()
        .iter()
        .map(|c| c.min_degree())
        .min()
        .unwrap_or(0)..=n)
        .all(|d| back.coeff(d) == num.coeff(d)))
}
