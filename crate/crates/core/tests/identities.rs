use bifib_core::fib_octonion::{
    catalan_even, catalan_general, catalan_lhs, direct_sum_all, direct_sum_even, direct_sum_odd,
    oct_binet, oct_o, sum_all, sum_even, sum_odd,
};
use bifib_core::sequence::{fib_binet, lucas_binet};
use bifib_core::series::genfun_check;
use bifib_core::{make_context, BinetConstants, CatalanForm, Octonion, Rational, SeqCache};
use proptest::prelude::*;

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn nondegenerate() -> impl Strategy<Value = (Rational, Rational)> {
    (nonzero_rational(), nonzero_rational())
        .prop_filter("ab != -4", |(a, b)| a * b != Rational::from(-4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn binet_forms_agree_with_recurrence((a, b) in nondegenerate(), n in 0u32..24) {
        let params = make_context(a, b).unwrap();
        let k = BinetConstants::new(&params).unwrap();
        let mut cache = SeqCache::new(params.clone());
        prop_assert_eq!(fib_binet(&params, n).unwrap(), cache.fib_q(n as i64));
        prop_assert_eq!(lucas_binet(&params, n).unwrap(), cache.lucas_l(n as i64));
        prop_assert_eq!(oct_binet(&k, &params, n).unwrap(), oct_o(&mut cache, n as i64));
    }

    #[test]
    fn octonion_recurrence_and_conjugate((a, b) in nondegenerate(), n in -12i64..24) {
        let params = make_context(a, b).unwrap();
        let mut cache = SeqCache::new(params.clone());
        let o = oct_o(&mut cache, n);
        let two_q = Rational::from(2) * cache.fib_q(n);
        prop_assert_eq!(&o + &o.conj(), Octonion::from_scalar(two_q));
        let m = n + 2;
        // coordinate s of O_m follows the multiplier at m + s
        for s in 0..8 {
            let k_s = params.fib_multiplier(m + s as i64);
            let want = k_s * oct_o(&mut cache, m - 1).coord(s) + oct_o(&mut cache, m - 2).coord(s);
            prop_assert_eq!(oct_o(&mut cache, m).coord(s).clone(), want);
        }
    }

    #[test]
    fn beta_first_catalan_matches_products((a, b) in nondegenerate(), r in 1u32..4, extra in 0u32..4) {
        let params = make_context(a, b).unwrap();
        let k = BinetConstants::new(&params).unwrap();
        let mut cache = SeqCache::new(params.clone());
        let n = r + extra;
        let lhs = catalan_lhs(&mut cache, 2 * n as i64, 2 * r as i64);
        prop_assert_eq!(catalan_even(&k, &params, n, r, CatalanForm::BetaFirst).unwrap(), lhs);
        let r2 = 2 * r;
        let n2 = r2 + extra;
        let lhs = catalan_lhs(&mut cache, n2 as i64, r2 as i64);
        prop_assert_eq!(catalan_general(&k, &params, n2, r2, CatalanForm::BetaFirst).unwrap(), lhs);
    }

    #[test]
    fn closed_sums_match_accumulation((a, b) in nondegenerate(), n in 1u32..16) {
        let params = make_context(a, b).unwrap();
        let k = BinetConstants::new(&params).unwrap();
        let mut cache = SeqCache::new(params);
        prop_assert_eq!(sum_all(&k, &mut cache, n).unwrap(), direct_sum_all(&mut cache, n));
        prop_assert_eq!(sum_even(&k, &mut cache, n).unwrap(), direct_sum_even(&mut cache, n));
        prop_assert_eq!(sum_odd(&k, &mut cache, n).unwrap(), direct_sum_odd(&mut cache, n));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn generating_function_reproduces_sequence((a, b) in (nonzero_rational(), nonzero_rational())) {
        let mut cache = SeqCache::new(make_context(a, b).unwrap());
        let report = genfun_check(&mut cache, 12).unwrap();
        prop_assert!(report.pass(), "{:?}", report.first_mismatch);
    }
}

#[test]
fn alpha_first_pairing_fails_for_classical_fibonacci() {
    let params = make_context(Rational::one(), Rational::one()).unwrap();
    let k = BinetConstants::new(&params).unwrap();
    let mut cache = SeqCache::new(params.clone());
    let lhs = catalan_lhs(&mut cache, 4, 2);
    assert_ne!(
        catalan_even(&k, &params, 2, 1, CatalanForm::AlphaFirst).unwrap(),
        lhs
    );
    assert_eq!(
        catalan_even(&k, &params, 2, 1, CatalanForm::BetaFirst).unwrap(),
        lhs
    );
}
