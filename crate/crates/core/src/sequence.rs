//! Scalar bi-periodic Fibonacci and Lucas sequences.
//!
//! ```text
//! q_0 = 0, q_1 = 1,  q_n = a q_{n-1} + q_{n-2} (n even), b q_{n-1} + q_{n-2} (n odd)
//! l_0 = 2, l_1 = a,  l_n = b l_{n-1} + l_{n-2} (n even), a l_{n-1} + l_{n-2} (n odd)
//! ```
//!
//! Negative indices follow `q_{-n} = (-1)^{n-1} q_n` and `l_{-n} = (-1)^n l_n`.

use crate::context::SeqParams;
use crate::error::{Error, Result};
use crate::number::{QuadraticElement, Rational};

/// Parity indicator `n - 2 floor(n/2)`.
pub fn xi(n: i64) -> u8 {
    n.rem_euclid(2) as u8
}

fn floor_half(n: i64) -> i64 {
    n.div_euclid(2)
}

/// Memoized values of `q_n` and `l_n` for `n >= 0`.
///
/// Lookups take `&mut self` because they extend the stored prefix; give each
/// worker its own cache.
#[derive(Clone, Debug)]
pub struct SeqCache {
    params: SeqParams,
    q: Vec<Rational>,
    l: Vec<Rational>,
}

impl SeqCache {
    pub fn new(params: SeqParams) -> Self {
        let q = vec![Rational::zero(), Rational::one()];
        let l = vec![Rational::from(2), params.a().clone()];
        SeqCache { params, q, l }
    }

    pub fn params(&self) -> &SeqParams {
        &self.params
    }

    fn extend_to(&mut self, n: usize) {
        while self.q.len() <= n {
            let m = self.q.len();
            let next = self.params.fib_multiplier(m as i64) * &self.q[m - 1] + &self.q[m - 2];
            self.q.push(next);
        }
        while self.l.len() <= n {
            let m = self.l.len();
            let next = self.params.lucas_multiplier(m as i64) * &self.l[m - 1] + &self.l[m - 2];
            self.l.push(next);
        }
    }

    /// Bi-periodic Fibonacci number `q_n` for any integer `n`.
    pub fn fib_q(&mut self, n: i64) -> Rational {
        let m = n.unsigned_abs() as usize;
        self.extend_to(m);
        let v = self.q[m].clone();
        // q_{-m} = (-1)^{m-1} q_m
        if n < 0 && m.is_multiple_of(2) {
            -v
        } else {
            v
        }
    }

    /// Bi-periodic Lucas number `l_n` for any integer `n`.
    pub fn lucas_l(&mut self, n: i64) -> Rational {
        let m = n.unsigned_abs() as usize;
        self.extend_to(m);
        let v = self.l[m].clone();
        // l_{-m} = (-1)^m l_m
        if n < 0 && m % 2 == 1 {
            -v
        } else {
            v
        }
    }
}

/// `a^e / (ab)^f` as a rational, for the prefactors of the Binet forms.
pub(crate) fn binet_prefactor(params: &SeqParams, a_exp: u8, ab_exp: i64) -> Rational {
    let a_part = if a_exp == 1 {
        params.a().clone()
    } else {
        Rational::one()
    };
    let ab_pow = params
        .ab()
        .pow(-(ab_exp as i32))
        .expect("ab is nonzero by construction");
    a_part * ab_pow
}

pub(crate) fn demote(value: &QuadraticElement, coordinate: usize) -> Result<Rational> {
    value
        .to_rational()
        .ok_or_else(|| Error::InternalSurdResidue {
            coordinate,
            value: value.to_string(),
        })
}

/// `q_n = a^{1-xi(n)} / (ab)^{floor(n/2)} * (alpha^n - beta^n)/(alpha - beta)`,
/// evaluated in Q(sqrt D).
pub fn fib_binet(params: &SeqParams, n: u32) -> Result<Rational> {
    let gap_inv = params.inv_root_gap()?;
    let n_i = n as i64;
    let quotient = (params.alpha().pow(n) - params.beta().pow(n)) * &gap_inv;
    let value = quotient.scale(&binet_prefactor(params, 1 - xi(n_i), floor_half(n_i)));
    demote(&value, 0)
}

/// `l_n = a^{xi(n)} / (ab)^{floor((n+1)/2)} * (alpha^n + beta^n)`.
///
/// Only the scalar Lucas form divides by nothing irrational, but it is kept
/// undefined at `D = 0` like its Fibonacci counterpart.
pub fn lucas_binet(params: &SeqParams, n: u32) -> Result<Rational> {
    params.require_nondegenerate()?;
    let n_i = n as i64;
    let sum = params.alpha().pow(n) + params.beta().pow(n);
    let value = sum.scale(&binet_prefactor(params, xi(n_i), floor_half(n_i + 1)));
    demote(&value, 0)
}
