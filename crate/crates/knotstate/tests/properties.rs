use std::sync::OnceLock;

use jones::KnotSpec;
use knotstate::*;
use proptest::prelude::*;

fn x8() -> &'static X8Curve {
    static X8: OnceLock<X8Curve> = OnceLock::new();
    X8.get_or_init(X8Curve::new)
}

fn knot() -> impl Strategy<Value = KnotSpec> {
    prop_oneof![
        Just(KnotSpec::Unknot),
        Just(KnotSpec::FigureEight),
        Just(KnotSpec::trefoil()),
        Just(KnotSpec::Torus { a: 2, b: 5 }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn knot_states_are_alternating(knot in knot(), k in 3u32..60) {
        let s = knot_state(knot, k).unwrap();
        prop_assert!(s.is_alternating(1e-9 * s.norm_sq().sqrt().max(1.0)));
        prop_assert!(s.c[0].norm() < 1e-12 && s.c[k as usize].norm() < 1e-9);
    }

    #[test]
    fn unknot_state_has_unit_norm(k in 3u32..200) {
        let s = knot_state(KnotSpec::Unknot, k).unwrap();
        prop_assert!((s.norm_sq() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn curve_distance_is_lattice_periodic(p in 0.0f64..1.0, q in 0.0f64..1.0, m in -2i32..=2, n in -2i32..=2) {
        let curves: [&dyn SupportCurve; 3] = [&Line::d0(), &Line::d_shifted(6), x8()];
        for c in curves {
            let a = c.distance(p, q, 1.0);
            let b = c.distance(p + m as f64, q + n as f64, 1.0);
            prop_assert!((a - b).abs() < 1e-9);
            prop_assert!(c.distance(p, q, 0.05) <= 0.05);
        }
    }

    #[test]
    fn union_distance_is_the_minimum(p in 0.0f64..1.0, q in 0.0f64..1.0) {
        let all = SupportCurves::parse("D0+D6+D6/2").unwrap();
        let parts = [Line::d0(), Line::d(6), Line::d_shifted(6)];
        let min = parts.iter().map(|l| l.distance(p, q, 1.0)).fold(1.0, f64::min);
        prop_assert!((all.distance(p, q, 1.0) - min).abs() < 1e-12);
    }
}
