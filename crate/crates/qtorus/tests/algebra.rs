use laurent::LaurentPoly;
use proptest::prelude::*;
use qtorus::*;

fn coeff() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -4i64..=4), 1..3).prop_map(LaurentPoly::from_terms)
}

fn operator() -> impl Strategy<Value = QTorusOp> {
    prop::collection::vec((coeff(), -3i64..=3, -2i64..=2), 1..=6)
        .prop_map(|terms| terms.into_iter().fold(QTorusOp::zero(), |acc, (c, a, b)| &acc + &QTorusOp::term(c, a, b)))
}

fn sequence(seed: Vec<(i64, i64)>) -> PolySequence {
    PolySequence::new(move |n| {
        let mut p = LaurentPoly::zero();
        for (i, (c, e)) in seed.iter().enumerate() {
            p += &LaurentPoly::monomial(*c * (n + i as i64), e * n);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn composition_is_associative(a in operator(), b in operator(), c in operator()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn commutation_relation(a in operator()) {
        let lm = &QTorusOp::l() * &QTorusOp::m();
        let qml = QTorusOp::mono(1, 1, 1, 1);
        prop_assert_eq!(&lm * &a, &qml * &a);
        prop_assert!(apply(&(&lm - &qml), &sequence(vec![(1, 2), (-2, 1)])).get(3).is_zero());
    }

    #[test]
    fn apply_respects_composition(a in operator(), b in operator(), seed in prop::collection::vec((-3i64..=3, -2i64..=2), 1..4)) {
        let f = sequence(seed);
        let lhs = apply(&(&a * &b), &f);
        let rhs = apply(&a, &apply(&b, &f));
        for n in -3..=3 {
            prop_assert_eq!(lhs.get(n), rhs.get(n));
        }
    }

    #[test]
    fn epsilon_is_a_ring_map_on_commuting_parts(a in operator(), b in operator()) {
        prop_assert_eq!(epsilon(&(&a * &b)), &epsilon(&a) * &epsilon(&b));
        prop_assert_eq!(epsilon(&(&a + &b)), &epsilon(&a) + &epsilon(&b));
    }
}
