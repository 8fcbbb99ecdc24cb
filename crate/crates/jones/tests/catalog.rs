use jones::{colored_jones, colored_jones_at_level, jones_values_at_level, normalize_tilde, KnotSpec};
use laurent::LaurentPoly;
use num_complex::Complex64;
use proptest::prelude::*;

fn catalog() -> Vec<KnotSpec> {
    vec![
        KnotSpec::Unknot,
        KnotSpec::FigureEight,
        KnotSpec::trefoil(),
        KnotSpec::torus(2, 5).unwrap(),
        KnotSpec::torus(3, 4).unwrap(),
    ]
}

#[test]
fn alexander_is_symmetric_and_normalized() {
    for k in catalog() {
        let d = k.alexander();
        assert_eq!(d.reflect(), d, "{k}");
        assert_eq!(d.eval_one(), 1.into(), "{k}");
    }
}

#[test]
fn periodicity_and_antisymmetry_at_roots() {
    for knot in catalog() {
        for k in [3u32, 7, 16, 64] {
            let vals = jones_values_at_level(knot, k);
            for l in 1..2 * k as i64 {
                let j = vals[l as usize];
                let shifted = colored_jones_at_level(knot, l + 2 * k as i64, k);
                let mirror = colored_jones_at_level(knot, 2 * k as i64 - l, k);
                let neg = colored_jones_at_level(knot, -l, k);
                let tol = 1e-9 * j.norm().max(1.0);
                assert!((shifted - j).norm() < tol, "{knot} k={k} l={l}");
                assert!((mirror + j).norm() < tol, "{knot} k={k} l={l}");
                assert!((neg + j).norm() < tol, "{knot} k={k} l={l}");
            }
        }
    }
}

#[test]
fn figure_eight_tilde_tends_to_inverse_alexander() {
    let k = 400;
    let l = k as i64 / 10;
    let tilde = normalize_tilde(KnotSpec::FigureEight, l, k).unwrap();
    let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * l as f64 / k as f64);
    let target = 1.0 / KnotSpec::FigureEight.alexander().eval_complex(z);
    assert!((tilde - target).norm() < 1.0 / l as f64);
}

#[test]
fn high_level_figure_eight_matches_exact_route_where_f64_suffices() {
    // Moderate sizes where folding exact coefficients in f64 is still accurate.
    for k in [20u32, 33] {
        for l in [5i64, 11, 17] {
            let exact = colored_jones(KnotSpec::FigureEight, l).unwrap().eval_root_of_unity(k);
            let fast = colored_jones_at_level(KnotSpec::FigureEight, l, k);
            assert!((exact - fast).norm() <= 1e-9 * exact.norm().max(1.0));
        }
    }
}

#[test]
fn exact_polynomials_are_palindromic_for_amphichiral_knots() {
    for l in 1..=8 {
        for knot in [KnotSpec::Unknot, KnotSpec::FigureEight] {
            let p = colored_jones(knot, l).unwrap();
            assert_eq!(p.reflect(), p);
        }
    }
}

proptest! {
    #[test]
    fn torus_symmetric_in_parameters(l in 1i64..12) {
        let a = colored_jones(KnotSpec::torus(2, 3).unwrap(), l).unwrap();
        let b = colored_jones(KnotSpec::torus(3, 2).unwrap(), l).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn exact_and_level_agree(l in 1i64..25, k in 3u32..40, which in 0usize..5) {
        let knot = catalog()[which];
        let exact = colored_jones(knot, l).unwrap().eval_root_of_unity(k);
        let fast = colored_jones_at_level(knot, l, k);
        prop_assert!((exact - fast).norm() <= 1e-9 * exact.norm().max(1.0));
    }
}

#[test]
fn unknot_color_two_text() {
    let p = colored_jones(KnotSpec::Unknot, 2).unwrap();
    assert_eq!(p, "1*t^-2 + 1*t^2".parse::<LaurentPoly>().unwrap());
}

#[test]
#[allow(clippy::excessive_precision)]
fn figure_eight_large_level_reference_values() {
    // Reference values computed independently with 400-digit arithmetic.
    let cases = [
        (200u32, 30i64, 15.842729500626502662),
        (200, 67, 821.05792288158192514),
        (200, 100, -412.26155696652320764),
        (200, 150, 15.005307733726711623),
        (600, 61, 43.008740588120267597),
        (600, 333, -2731.3117910428693095),
    ];
    for (k, n, want) in cases {
        let got = colored_jones_at_level(KnotSpec::FigureEight, n, k);
        assert!((got.re - want).abs() < 1e-10 * want.abs(), "k={k} n={n} got {got}");
        assert_eq!(got.im, 0.0);
    }
}
