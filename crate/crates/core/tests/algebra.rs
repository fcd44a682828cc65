use std::collections::HashMap;

use proptest::prelude::*;
use qalg_core::free_algebra::{rat, u_sym};
use qalg_core::{parse_polynomial, GeneratorSymbol, Monomial, Polynomial, Rational};

const N: usize = 3;

fn letters() -> Vec<GeneratorSymbol> {
    vec![
        u_sym(N, &[1]).unwrap(),
        u_sym(N, &[2]).unwrap(),
        u_sym(N, &[3]).unwrap(),
        u_sym(N, &[1, 2]).unwrap(),
        u_sym(N, &[1, 2, 3]).unwrap(),
    ]
}

fn poly() -> impl Strategy<Value = Polynomial> {
    let term = (proptest::collection::vec(0usize..5, 0..3), -4i64..=4, 1i64..=3);
    proptest::collection::vec(term, 0..5).prop_map(|terms| {
        let l = letters();
        terms
            .into_iter()
            .map(|(w, p, q)| {
                let m = Monomial::new(w.into_iter().map(|k| l[k]).collect());
                Polynomial::term(Rational::new(p.into(), q.into()), m)
            })
            .sum()
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
        prop_assert_eq!(&Polynomial::one() * &a, a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn serialization_round_trips(a in poly()) {
        let text = a.to_string();
        let back = parse_polynomial(&text, N).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), imgs in proptest::collection::vec(poly(), 5)) {
        let map: HashMap<GeneratorSymbol, Polynomial> = letters().into_iter().zip(imgs).collect();
        let s = |p: &Polynomial| p.substitute(&map).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
        prop_assert_eq!(s(&Polynomial::one()), Polynomial::one());
    }

    #[test]
    fn graded_components_recompose(a in poly()) {
        let parts = a.graded_components();
        prop_assert!(parts.iter().all(|(d, p)| p.is_homogeneous() && p.degree() == Some(*d)));
        prop_assert_eq!(parts.into_values().sum::<Polynomial>(), a);
    }

    #[test]
    fn commutator_is_antisymmetric(a in poly(), b in poly()) {
        prop_assert_eq!(a.commutator(&b).unwrap(), -b.commutator(&a).unwrap());
    }
}

#[test]
fn commutator_sugar_matches_expansion() {
    let p = parse_polynomial("[u({1}) + 2, 1/2*u({2,3})]", N).unwrap();
    let q = parse_polynomial("1/2*u({1})*u({2,3}) - 1/2*u({2,3})*u({1})", N).unwrap();
    assert_eq!(p, q);
    assert_eq!(parse_polynomial("-(u({1}))", N).unwrap(), Polynomial::symbol(letters()[0]).scale(&rat(-1)));
}

#[test]
fn mixed_universes_are_rejected() {
    let a = Polynomial::symbol(u_sym(2, &[1]).unwrap());
    let b = Polynomial::symbol(u_sym(3, &[1]).unwrap());
    assert!(a.checked_mul(&b).is_err());
    assert!(a.checked_add(&b).is_err());
}
