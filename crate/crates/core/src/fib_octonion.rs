//! Bi-periodic Fibonacci octonions `O_n = sum_{s=0}^{7} q_{n+s} e_s` and the
//! closed forms stated for them: the octonion Binet form, Catalan-type
//! product differences and three partial-sum formulas.
//!
//! Every closed form is evaluated in `Octonion<QuadraticElement>` and then
//! demoted to rational coordinates. A surviving surd part is reported as
//! [`Error::InternalSurdResidue`]; it never indicates rounding.

use crate::context::SeqParams;
use crate::error::{Error, Result};
use crate::number::{QuadraticElement, Rational};
use crate::octonion::Octonion;
use crate::sequence::{binet_prefactor, demote, xi, SeqCache};

pub type RatOctonion = Octonion<Rational>;
pub type QuadOctonion = Octonion<QuadraticElement>;

/// `O_n(a, b)` for any integer `n`. Coordinate `s` is `q_{n+s}`.
pub fn oct_o(cache: &mut SeqCache, n: i64) -> RatOctonion {
    Octonion::new(std::array::from_fn(|s| cache.fib_q(n + s as i64)))
}

/// `O_{-n}` built from the signed negative-subscript form
/// `sum_s (-1)^{n-s-1} q_{n-s} e_s`.
pub fn oct_o_negative(cache: &mut SeqCache, n: u32) -> RatOctonion {
    Octonion::new(std::array::from_fn(|s| {
        let m = n as i64 - s as i64;
        let v = cache.fib_q(m);
        if (m - 1).rem_euclid(2) == 0 {
            v
        } else {
            -v
        }
    }))
}

pub fn to_rational(value: &QuadOctonion) -> Result<RatOctonion> {
    let mut coords: [Rational; 8] = Default::default();
    for (s, slot) in coords.iter_mut().enumerate() {
        *slot = demote(value.coord(s), s)?;
    }
    Ok(Octonion::new(coords))
}

/// The four octonions of the octonion Binet form:
///
/// ```text
/// alpha*  = sum_t a^{xi(t+1)} / (ab)^{floor(t/2)}     alpha^t e_t
/// alpha** = sum_t a^{xi(t)}   / (ab)^{floor((t+1)/2)} alpha^t e_t
/// ```
///
/// and `beta*`, `beta**` with `beta` in place of `alpha`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinetConstants {
    pub alpha_star: QuadOctonion,
    pub beta_star: QuadOctonion,
    pub alpha_dstar: QuadOctonion,
    pub beta_dstar: QuadOctonion,
}

impl BinetConstants {
    pub fn new(params: &SeqParams) -> Result<Self> {
        params.require_nondegenerate()?;
        let build = |root: &QuadraticElement, double: bool| {
            Octonion::new(std::array::from_fn(|t| {
                let t = t as i64;
                let factor = if double {
                    binet_prefactor(params, xi(t), (t + 1).div_euclid(2))
                } else {
                    binet_prefactor(params, xi(t + 1), t.div_euclid(2))
                };
                root.pow(t as u32).scale(&factor)
            }))
        };
        Ok(BinetConstants {
            alpha_star: build(params.alpha(), false),
            beta_star: build(params.beta(), false),
            alpha_dstar: build(params.alpha(), true),
            beta_dstar: build(params.beta(), true),
        })
    }

    /// Even-index pair `(alpha*, beta*)` or odd-index pair `(alpha**, beta**)`.
    fn pair(&self, odd: bool) -> (&QuadOctonion, &QuadOctonion) {
        if odd {
            (&self.alpha_dstar, &self.beta_dstar)
        } else {
            (&self.alpha_star, &self.beta_star)
        }
    }
}

pub fn make_binet_constants(params: &SeqParams) -> Result<BinetConstants> {
    BinetConstants::new(params)
}

fn ab_pow_inv(params: &SeqParams, exp: i64) -> Rational {
    params
        .ab()
        .pow(-(exp as i32))
        .expect("ab is nonzero by construction")
}

/// `O_n` from the octonion Binet form, `n >= 0`.
pub fn oct_binet(constants: &BinetConstants, params: &SeqParams, n: u32) -> Result<RatOctonion> {
    let gap_inv = params.inv_root_gap()?;
    let (a_c, b_c) = constants.pair(n % 2 == 1);
    let diff = &a_c.scale(&params.alpha().pow(n)) - &b_c.scale(&params.beta().pow(n));
    let k = gap_inv.scale(&ab_pow_inv(params, (n / 2) as i64));
    to_rational(&diff.scale(&k))
}

/// Which root power multiplies which octonion product in the Catalan-type
/// closed forms.
///
/// `AlphaFirst` puts `alpha* beta*` against `(ab)^m - alpha^{2m}` and
/// `beta* alpha*` against `(ab)^m - beta^{2m}`. Expanding
/// `O_{n-r} O_{n+r} - O_n^2` through the Binet form gives the other pairing,
/// `BetaFirst`. The two differ by
/// `(alpha* beta* - beta* alpha*)(alpha^{2m} - beta^{2m})` over the common
/// denominator, which is nonzero since octonions do not commute. Only
/// `BetaFirst` equals the product difference; `AlphaFirst` is the
/// `O_{n+r} O_{n-r} - O_n^2` ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalanForm {
    AlphaFirst,
    BetaFirst,
}

/// `[x y ((ab)^m - u) + y x ((ab)^m - v)] * k` with `(u, v)` chosen by `form`.
fn product_difference(
    params: &SeqParams,
    x: &QuadOctonion,
    y: &QuadOctonion,
    m: u32,
    k: &QuadraticElement,
    form: CatalanForm,
) -> Result<QuadOctonion> {
    let ab_m = params.embed(&params.ab().pow(m as i32)?);
    let alpha_pow = params.alpha().pow(2 * m);
    let beta_pow = params.beta().pow(2 * m);
    let (first, second) = match form {
        CatalanForm::AlphaFirst => (alpha_pow, beta_pow),
        CatalanForm::BetaFirst => (beta_pow, alpha_pow),
    };
    let xy = x.try_mul(y)?;
    let yx = y.try_mul(x)?;
    let sum = &xy.scale(&(ab_m.clone() - &first)) + &yx.scale(&(ab_m - &second));
    Ok(sum.scale(k))
}

/// Closed form for `O_{2n-2r} O_{2n+2r} - O_{2n}^2`, `n >= r >= 1`:
///
/// ```text
/// [alpha* beta* ((ab)^{2r} - alpha^{4r}) + beta* alpha* ((ab)^{2r} - beta^{4r})]
///     / ((ab)^{2r} (alpha - beta)^2)
/// ```
///
/// with the pairing selected by [`CatalanForm`]. With `r = 1` this is the
/// Cassini-like identity.
pub fn catalan_even(
    constants: &BinetConstants,
    params: &SeqParams,
    n: u32,
    r: u32,
    form: CatalanForm,
) -> Result<RatOctonion> {
    if r < 1 || n < r {
        return Err(Error::InvalidArgument(format!(
            "even-index Catalan form needs n >= r >= 1 (n = {n}, r = {r})"
        )));
    }
    let gap_inv = params.inv_root_gap()?;
    let k = (&gap_inv * &gap_inv).scale(&ab_pow_inv(params, 2 * r as i64));
    let v = product_difference(
        params,
        &constants.alpha_star,
        &constants.beta_star,
        2 * r,
        &k,
        form,
    )?;
    to_rational(&v)
}

/// Closed form for `O_{n-r} O_{n+r} - O_n^2` with `r` even and `n >= r`.
///
/// For even `n` it uses `alpha*, beta*` over `(ab)^r (alpha-beta)^2`; for odd
/// `n` it uses `alpha**, beta**` over `(ab)^{r-1} (alpha-beta)^2` with a
/// leading minus.
pub fn catalan_general(
    constants: &BinetConstants,
    params: &SeqParams,
    n: u32,
    r: u32,
    form: CatalanForm,
) -> Result<RatOctonion> {
    if r < 2 || !r.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "general Catalan form needs an even r >= 2 (r = {r})"
        )));
    }
    if n < r {
        return Err(Error::InvalidArgument(format!(
            "general Catalan form needs n >= r (n = {n}, r = {r})"
        )));
    }
    let gap_inv = params.inv_root_gap()?;
    let odd = n % 2 == 1;
    let (x, y) = constants.pair(odd);
    let denom_exp = if odd { r - 1 } else { r };
    let mut k = (&gap_inv * &gap_inv).scale(&ab_pow_inv(params, denom_exp as i64));
    if odd {
        k = -k;
    }
    let v = product_difference(params, x, y, r, &k, form)?;
    to_rational(&v)
}

/// `O_{n-r} O_{n+r} - O_n^2` by direct octonion arithmetic.
pub fn catalan_lhs(cache: &mut SeqCache, n: i64, r: i64) -> RatOctonion {
    let lo = oct_o(cache, n - r);
    let hi = oct_o(cache, n + r);
    let mid = oct_o(cache, n);
    &(&lo * &hi) - &(&mid * &mid)
}

fn require_positive(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument(
            "partial sums need n >= 1".to_string(),
        ))
    } else {
        Ok(())
    }
}

/// `(alpha* beta - beta* alpha - alpha** ab + beta** ab) / (ab (alpha - beta))`.
pub fn sum_all_constant(constants: &BinetConstants, params: &SeqParams) -> Result<RatOctonion> {
    let ab = params.embed(params.ab());
    let num = &(&(&constants.alpha_star.scale(params.beta())
        - &constants.beta_star.scale(params.alpha()))
        - &constants.alpha_dstar.scale(&ab))
        + &constants.beta_dstar.scale(&ab);
    let k = params.inv_root_gap()?.scale(&ab_pow_inv(params, 1));
    to_rational(&num.scale(&k))
}

/// `(alpha* beta - beta* alpha) / (ab (alpha - beta))`.
pub fn sum_even_constant(constants: &BinetConstants, params: &SeqParams) -> Result<RatOctonion> {
    let num =
        &constants.alpha_star.scale(params.beta()) - &constants.beta_star.scale(params.alpha());
    let k = params.inv_root_gap()?.scale(&ab_pow_inv(params, 1));
    to_rational(&num.scale(&k))
}

/// `(alpha** - beta**) / (alpha - beta)`.
pub fn sum_odd_constant(constants: &BinetConstants, params: &SeqParams) -> Result<RatOctonion> {
    let num = &constants.alpha_dstar - &constants.beta_dstar;
    to_rational(&num.scale(&params.inv_root_gap()?))
}

fn div_ab(params: &SeqParams, value: &RatOctonion) -> RatOctonion {
    value.scale(&ab_pow_inv(params, 1))
}

/// Closed form for `sum_{r=0}^{n-1} O_r`:
/// `(O_{n+1} + O_n - O_{n-1} - O_{n-2})/ab + sum_all_constant`.
/// At `n = 1` this reads `O_{-1}` through the negative-subscript law.
pub fn sum_all(constants: &BinetConstants, cache: &mut SeqCache, n: u32) -> Result<RatOctonion> {
    require_positive(n)?;
    let params = cache.params().clone();
    let n = n as i64;
    let head =
        &(&(&oct_o(cache, n + 1) + &oct_o(cache, n)) - &oct_o(cache, n - 1)) - &oct_o(cache, n - 2);
    Ok(&div_ab(&params, &head) + &sum_all_constant(constants, &params)?)
}

/// Closed form for `sum_{r=0}^{n-1} O_{2r}`:
/// `(O_{2n} - O_{2n-2})/ab + sum_even_constant`.
pub fn sum_even(constants: &BinetConstants, cache: &mut SeqCache, n: u32) -> Result<RatOctonion> {
    require_positive(n)?;
    let params = cache.params().clone();
    let n = n as i64;
    let head = &oct_o(cache, 2 * n) - &oct_o(cache, 2 * n - 2);
    Ok(&div_ab(&params, &head) + &sum_even_constant(constants, &params)?)
}

/// Closed form for `sum_{r=0}^{n-1} O_{2r+1}`:
/// `(O_{2n+1} - O_{2n-1})/ab - sum_odd_constant`.
pub fn sum_odd(constants: &BinetConstants, cache: &mut SeqCache, n: u32) -> Result<RatOctonion> {
    require_positive(n)?;
    let params = cache.params().clone();
    let n = n as i64;
    let head = &oct_o(cache, 2 * n + 1) - &oct_o(cache, 2 * n - 1);
    Ok(&div_ab(&params, &head) - &sum_odd_constant(constants, &params)?)
}

fn accumulate(cache: &mut SeqCache, indices: impl Iterator<Item = i64>) -> RatOctonion {
    indices.fold(Octonion::zero(), |acc, i| &acc + &oct_o(cache, i))
}

/// `sum_{r=0}^{n-1} O_r` by direct accumulation.
pub fn direct_sum_all(cache: &mut SeqCache, n: u32) -> RatOctonion {
    accumulate(cache, 0..n as i64)
}

pub fn direct_sum_even(cache: &mut SeqCache, n: u32) -> RatOctonion {
    accumulate(cache, (0..n as i64).map(|r| 2 * r))
}

pub fn direct_sum_odd(cache: &mut SeqCache, n: u32) -> RatOctonion {
    accumulate(cache, (0..n as i64).map(|r| 2 * r + 1))
}

/// Embeds a rational octonion into the context's quadratic field.
pub fn embed_octonion(params: &SeqParams, value: &RatOctonion) -> QuadOctonion {
    value.map(|c| params.embed(c))
}
