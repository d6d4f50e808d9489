//! Shared fixtures for the benchmarks.

use bifib_core::fib_octonion::oct_o;
use bifib_core::{make_context, BinetConstants, RatOctonion, Rational, SeqCache, SeqParams};

/// A non-degenerate context with its Binet constants and a warmed cache.
pub struct Fixture {
    pub params: SeqParams,
    pub constants: BinetConstants,
    pub cache: SeqCache,
}

pub fn fixture(a: &str, b: &str, warm_to: i64) -> Fixture {
    let a: Rational = a.parse().expect("rational a");
    let b: Rational = b.parse().expect("rational b");
    let params = make_context(a, b).expect("nonzero parameters");
    let constants = BinetConstants::new(&params).expect("non-degenerate parameters");
    let mut cache = SeqCache::new(params.clone());
    cache.fib_q(warm_to);
    cache.lucas_l(warm_to);
    Fixture {
        params,
        constants,
        cache,
    }
}

/// `O_n` and `O_{n+1}`, a realistic pair of operands for octonion products.
pub fn operands(f: &mut Fixture, n: i64) -> (RatOctonion, RatOctonion) {
    (oct_o(&mut f.cache, n), oct_o(&mut f.cache, n + 1))
}
