use std::cmp::Ordering;

use proptest::prelude::*;

use gamma_audit::group::{act, parse_word, to_word, BsElement, GammaElement, OmegaElement};
use gamma_audit::orders::{cmp_bs, cmp_gamma, cmp_omega};
use gamma_audit::ring::{Dyadic, Radical, Sign};

fn dyadic() -> impl Strategy<Value = Dyadic> {
    (-200i64..200, 0u64..6).prop_map(|(n, e)| Dyadic::new(n, e))
}

fn exponent() -> impl Strategy<Value = Dyadic> {
    (0u64..4).prop_flat_map(|k| (0i64..(1 << k)).prop_map(move |m| Dyadic::new(m, k)))
}

fn radical() -> impl Strategy<Value = Radical> {
    prop::collection::vec((dyadic(), exponent()), 0..4).prop_map(|ts| {
        ts.iter().fold(Radical::zero(), |acc, (c, q)| {
            &acc + &Radical::term(c.clone(), q)
        })
    })
}

fn omega() -> impl Strategy<Value = OmegaElement> {
    prop::collection::vec((-3i64..4, radical()), 0..3).prop_map(|v| {
        v.into_iter().fold(OmegaElement::zero(), |acc, (n, r)| {
            acc.add(&OmegaElement::delta(n, r))
        })
    })
}

fn bs() -> impl Strategy<Value = BsElement> {
    (-4i64..5, dyadic()).prop_map(|(k, u)| BsElement::new(k, u))
}

fn word() -> impl Strategy<Value = String> {
    prop::collection::vec(
        prop::sample::select(vec!['t', 'T', 'a', 'A', 'b', 'B']),
        0..10,
    )
    .prop_map(|cs| cs.into_iter().collect())
}

fn gamma() -> impl Strategy<Value = GammaElement> {
    word().prop_map(|w| parse_word(&w).unwrap())
}

fn sign_of_product(a: Sign, b: Sign) -> Sign {
    match (a, b) {
        (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
        (x, y) if x == y => Sign::Positive,
        _ => Sign::Negative,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn dyadic_text_round_trip(d in dyadic()) {
        prop_assert_eq!(d.to_string().parse::<Dyadic>().unwrap(), d);
    }

    #[test]
    fn radical_ring_axioms(x in radical(), y in radical(), z in radical()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &Radical::one(), x.clone());
    }

    #[test]
    fn radical_text_round_trip(x in radical()) {
        prop_assert_eq!(x.to_string().parse::<Radical>().unwrap(), x);
    }

    #[test]
    fn sign_is_multiplicative(x in radical(), y in radical()) {
        prop_assert_eq!((&x * &y).sign(), sign_of_product(x.sign(), y.sign()));
    }

    #[test]
    fn sign_ignores_starting_precision(x in radical(), bits in 1u64..300) {
        prop_assert_eq!(x.sign_with_precision(bits), x.sign());
    }

    #[test]
    fn sign_matches_float_away_from_zero(x in radical()) {
        let f: f64 = x.terms().map(|(q, c)| {
            let (qn, qe) = (q.num().to_string().parse::<f64>().unwrap(), q.exp() as i32);
            let (cn, ce) = (c.num().to_string().parse::<f64>().unwrap(), c.exp() as i32);
            cn / 2f64.powi(ce) * 2f64.powf(qn / 2f64.powi(qe))
        }).sum();
        if f.abs() > 1e-6 {
            let s = if f > 0.0 { Sign::Positive } else { Sign::Negative };
            prop_assert_eq!(x.sign(), s);
        }
    }

    #[test]
    fn scale_round_trip(x in radical(), q in dyadic()) {
        prop_assert_eq!(x.scale_pow2(&q).scale_pow2(&-&q), x.clone());
        let p = Radical::pow2(&q);
        prop_assert_eq!(x.scale_pow2(&q), &x * &p);
    }

    #[test]
    fn bs_group_axioms(g in bs(), h in bs(), k in bs()) {
        prop_assert_eq!(g.mul(&h).mul(&k), g.mul(&h.mul(&k)));
        prop_assert!(g.mul(&g.inv()).is_identity());
        prop_assert!(g.inv().mul(&g).is_identity());
    }

    #[test]
    fn action_is_a_homomorphism(g in bs(), h in bs(), x in omega(), y in omega()) {
        prop_assert_eq!(act(&g.mul(&h), &x), act(&g, &act(&h, &x)));
        prop_assert_eq!(act(&g, &x.add(&y)), act(&g, &x).add(&act(&g, &y)));
        prop_assert_eq!(act(&BsElement::identity(), &x), x.clone());
    }

    #[test]
    fn gamma_group_axioms(g in gamma(), h in gamma(), k in gamma()) {
        prop_assert_eq!(g.mul(&h).mul(&k), g.mul(&h.mul(&k)));
        prop_assert!(g.mul(&g.inv()).is_identity());
        prop_assert_eq!(g.mul(&GammaElement::identity()), g.clone());
    }

    #[test]
    fn word_round_trip(g in gamma()) {
        prop_assert_eq!(parse_word(&to_word(&g)).unwrap(), g);
    }

    #[test]
    fn word_evaluation_is_multiplicative(u in word(), v in word()) {
        let joined = format!("{u} {v}");
        prop_assert_eq!(parse_word(&joined).unwrap(), parse_word(&u).unwrap().mul(&parse_word(&v).unwrap()));
    }

    #[test]
    fn element_json_round_trip(g in gamma()) {
        let s = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<GammaElement>(&s).unwrap(), g);
    }

    #[test]
    fn omega_order_is_translation_invariant(x in omega(), y in omega(), z in omega()) {
        prop_assert_eq!(cmp_omega(&x.add(&z), &y.add(&z)), cmp_omega(&x, &y));
        prop_assert_eq!(cmp_omega(&x, &y), cmp_omega(&y, &x).reverse());
        prop_assert_eq!(cmp_omega(&x, &y) == Ordering::Equal, x == y);
    }

    #[test]
    fn bs_order_is_left_invariant(f in bs(), g in bs(), h in bs()) {
        prop_assert_eq!(cmp_bs(&f.mul(&g), &f.mul(&h)), cmp_bs(&g, &h));
    }

    #[test]
    fn gamma_order_is_total_and_transitive(g in gamma(), h in gamma(), k in gamma()) {
        prop_assert_eq!(cmp_gamma(&g, &h), cmp_gamma(&h, &g).reverse());
        prop_assert_eq!(cmp_gamma(&g, &h) == Ordering::Equal, g == h);
        if cmp_gamma(&g, &h).is_le() && cmp_gamma(&h, &k).is_le() {
            prop_assert!(cmp_gamma(&g, &k).is_le());
        }
    }

    #[test]
    fn b_translation_moves_everything_up(g in gamma()) {
        prop_assert_eq!(cmp_gamma(&GammaElement::b().mul(&g), &g), Ordering::Greater);
    }

    #[test]
    fn t_translation_preserves_order(g in gamma(), h in gamma()) {
        let t = GammaElement::t();
        prop_assert_eq!(cmp_gamma(&t.mul(&g), &t.mul(&h)), cmp_gamma(&g, &h));
    }
}

#[test]
fn powers_of_the_tower_roots() {
    for k in 0..=10u64 {
        let mut p = Radical::pow2(&Dyadic::new(1, k));
        for _ in 0..k {
            p = &p * &p;
        }
        assert_eq!(p, Radical::from(2), "k = {k}");
    }
}
