use std::sync::Arc;

use hodgev_core::groebner::{buchberger, graded_slice};
use hodgev_core::polyring::rational::rat;
use hodgev_core::polyring::{alpha_value, parse_expression};
use hodgev_core::{IdealHandle, Monomial, MonomialOrder, Polynomial, Rational, Ring, WeightSystem};
use proptest::prelude::*;

fn ring() -> Arc<Ring> {
    Ring::new(["x", "y", "z"])
}

fn poly_strategy(max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0..=max_exp, 0..=max_exp, 0..=max_exp), -5i64..=5, 1i64..=3), 0..=max_terms).prop_map(
        |terms| {
            let r = ring();
            Polynomial::from_terms(&r, terms.into_iter().map(|((a, b, c), n, d)| (Monomial::new(vec![a, b, c]), rat(n, d))))
        },
    )
}

proptest! {
    #[test]
    fn ring_axioms(a in poly_strategy(4, 3), b in poly_strategy(4, 3), c in poly_strategy(4, 3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(&ring()), a.clone());
    }

    #[test]
    fn partials_commute_and_obey_leibniz(a in poly_strategy(5, 4), b in poly_strategy(5, 4), i in 0usize..3, j in 0usize..3) {
        prop_assert_eq!(a.derivative(i).derivative(j), a.derivative(j).derivative(i));
        let lhs = (&a * &b).derivative(i);
        let rhs = &(&a.derivative(i) * &b) + &(&a * &b.derivative(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_parses_back(a in poly_strategy(6, 4)) {
        let text = a.to_string();
        prop_assert_eq!(parse_expression(&text, &ring()).unwrap(), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly_strategy(4, 3), b in poly_strategy(4, 3)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b), Some(a));
    }

    #[test]
    fn alpha_is_additive(e1 in prop::collection::vec(0u32..6, 3), e2 in prop::collection::vec(0u32..6, 3)) {
        let w = WeightSystem::new(vec![rat(1, 2), rat(1, 3), rat(1, 5)]).unwrap();
        let (m1, m2) = (Monomial::new(e1), Monomial::new(e2));
        let lhs = alpha_value(&m1.mul(&m2), &w).unwrap() + w.sum();
        let rhs = alpha_value(&m1, &w).unwrap() + alpha_value(&m2, &w).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

fn ideal_strategy() -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(poly_strategy(3, 3), 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn groebner_basis_invariants(gens in ideal_strategy(), g in poly_strategy(4, 4), h in poly_strategy(3, 2)) {
        let r = ring();
        let ideal = buchberger(&r, gens.clone(), MonomialOrder::Grevlex);
        for gen in &gens {
            prop_assert!(ideal.contains(gen));
        }
        for b in ideal.basis() {
            prop_assert!(IdealHandle::new(&r, gens.clone(), MonomialOrder::Grevlex).contains(&b));
            prop_assert_eq!(b.leading_term().map(|t| t.1.clone()), Some(Rational::from_integer(1.into())));
        }
        let nf = ideal.normal_form(&g);
        prop_assert_eq!(ideal.normal_form(&nf), nf.clone());
        prop_assert!(ideal.contains(&(&g - &nf)));
        if let Some(first) = gens.first() {
            prop_assert!(ideal.contains(&(first * &h)));
        }
    }

    #[test]
    fn slice_routes_agree_on_homogeneous_ideals(degs in prop::collection::vec(1u32..=3, 1..=3), seed in 0i64..1000) {
        let r = ring();
        let gens: Vec<Polynomial> = degs
            .iter()
            .enumerate()
            .map(|(k, &d)| {
                let mut p = Polynomial::zero(&r);
                for (t, m) in Monomial::all_of_degree(3, d).into_iter().enumerate() {
                    let c = (seed * 31 + (k as i64) * 7 + (t as i64) * 13) % 5 - 2;
                    if c != 0 {
                        p.add_term(m, rat(c, 1));
                    }
                }
                p
            })
            .collect();
        let w = WeightSystem::homogeneous(3, 1);
        let ideal = IdealHandle::new(&r, gens, MonomialOrder::Grevlex);
        for e in 0..=5 {
            let e = Rational::from_integer(e.into());
            prop_assert_eq!(ideal.slice(&e, &w).unwrap(), graded_slice(&ideal, &e, &w).unwrap());
        }
    }
}
