use proptest::prelude::*;

use super::{QuadraticField, Rational};
use crate::context::make_context;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

proptest! {
    #[test]
    fn quadratic_ring_axioms(
        d in rational(),
        xs in proptest::collection::vec((rational(), rational()), 3),
    ) {
        let k = QuadraticField::new(d);
        let x = k.element(xs[0].0.clone(), xs[0].1.clone());
        let y = k.element(xs[1].0.clone(), xs[1].1.clone());
        let z = k.element(xs[2].0.clone(), xs[2].1.clone());
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
    }

    #[test]
    fn conj_is_involutive_automorphism(
        d in rational(),
        p in rational(), q in rational(), s in rational(), t in rational(),
    ) {
        let k = QuadraticField::new(d);
        let x = k.element(p, q);
        let y = k.element(s, t);
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        prop_assert!((&x * &x.conj()).is_rational());
    }

    #[test]
    fn inverse_roundtrip(d in rational(), p in rational(), q in rational()) {
        let k = QuadraticField::new(d);
        let x = k.element(p, q);
        if let Ok(inv) = x.inv() {
            prop_assert_eq!(&x * &inv, k.one());
        } else {
            prop_assert!(x.norm().is_zero());
        }
    }

    #[test]
    fn roots_satisfy_characteristic_equation(a in nonzero_rational(), b in nonzero_rational()) {
        let p = make_context(a, b).unwrap();
        let ab = p.embed(p.ab());
        for root in [p.alpha(), p.beta()] {
            prop_assert_eq!(root.pow(2), &(&ab * root) + &ab);
        }
    }

    #[test]
    fn symmetric_functions_are_rational(
        a in nonzero_rational(),
        b in nonzero_rational(),
        n in 0u32..24,
    ) {
        let p = make_context(a, b).unwrap();
        prop_assume!(!p.is_degenerate());
        let an = p.alpha().pow(n);
        let bn = p.beta().pow(n);
        let gap_inv = p.inv_root_gap().unwrap();
        prop_assert!((&an + &bn).is_rational());
        prop_assert!(((&an - &bn) * &gap_inv).is_rational());
    }
}

#[test]
fn fourth_power_difference_quotient_classical() {
    // (a^4 - b^4)/(a - b) = (a^2 + b^2)(a + b) = ((ab)^2 + 2ab)(ab) = 3 at a = b = 1
    let p = make_context(Rational::one(), Rational::one()).unwrap();
    let num = p.alpha().pow(4) - p.beta().pow(4);
    let quotient = num * &p.inv_root_gap().unwrap();
    assert_eq!(quotient.to_rational(), Some(Rational::from(3)));
}

#[test]
fn alpha_squared_two_three() {
    let p = make_context(Rational::from(2), Rational::from(3)).unwrap();
    let k = p.field();
    assert_eq!(
        p.alpha().pow(2),
        k.element(Rational::from(24), Rational::from(3))
    );
}
