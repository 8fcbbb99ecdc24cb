use jones::KnotSpec;
use knotstate::*;
use num_complex::Complex64;
use sha2::{Digest, Sha256};
use theta::QuantParams;

#[test]
fn x8_samples_lie_on_the_curve() {
    let x = X8Curve::new();
    let mut count = 0;
    for &(p, q) in x.points() {
        assert!(X8Curve::residual(p, q).abs() < 1e-12);
        count += 1;
    }
    assert_eq!(count, X8Curve::SAMPLES + 2);
    // symmetric under (p, q) -> (-p, -q)
    for &(p, q) in x.points().step_by(37) {
        assert!(x.distance(-p, -q, 1.0) < 2e-3);
    }
}

#[test]
fn x8_distance_matches_brute_force() {
    let x = X8Curve::new();
    let pts: Vec<(f64, f64)> = x.points().copied().collect();
    for (p, q) in theta::sample_points(200) {
        let mut best = f64::MAX;
        for &(a, b) in &pts {
            for dx in [-1.0, 0.0, 1.0] {
                for dy in [-1.0, 0.0, 1.0] {
                    best = best.min((p - a - dx).hypot(q - b - dy));
                }
            }
        }
        let fast = x.distance(p, q, 1.0);
        assert!((fast - best).abs() < 1e-12, "({p},{q}) {fast} vs {best}");
        assert!((x.distance(p, q, 0.01) - best.min(0.01)).abs() < 1e-12);
    }
}

#[test]
fn line_distances() {
    let d0 = Line::d0();
    assert!((d0.distance(0.9, 0.3, 1.0) - 0.1).abs() < 1e-12);
    let d6 = Line::d(6);
    assert!(d6.distance(0.4, 0.1, 1.0) < 1e-12);
    let d6s = Line::d_shifted(6);
    assert!(d6s.distance(0.5, 0.0, 1.0) < 1e-12);
    assert!(d6s.distance(0.0, 1.0 / 12.0, 1.0) < 1e-12);
    let all = SupportCurves::parse("D0+D6+D6/2+X8").unwrap();
    assert_eq!(all.names(), vec!["D0", "D6", "D6+lambda/12", "X8"]);
    assert!(SupportCurves::parse("Q7").is_err());
    assert_eq!(SupportCurves::for_knot(KnotSpec::trefoil()).names(), vec!["D0", "D6", "D6+lambda/12"]);
}

#[test]
fn fig8_microsupport_and_negative_control() {
    let k = 200;
    let params = QuantParams::square(k).unwrap();
    let grid = evaluate_grid(&knot_state(KnotSpec::FigureEight, k).unwrap(), &params, 256).unwrap();
    let rep = microsupport_report(&grid, &SupportCurves::for_knot(KnotSpec::FigureEight), 0.15).unwrap();
    assert!(rep.passes(1e-4), "{rep:?}");
    let control = microsupport_report(&grid, &SupportCurves::abelian_only(), 0.15).unwrap();
    assert!(control.ratio > 0.1, "{control:?}");
    assert!(microsupport_report(&grid, &SupportCurves::abelian_only(), 0.001).is_err());
}

#[test]
fn torus_curves_leave_no_room_at_the_default_margin() {
    // Lines p + 6q in Z and in 1/2 + Z are 1/sqrt(148) apart.
    let k = 60;
    let params = QuantParams::square(k).unwrap();
    let grid = evaluate_grid(&knot_state(KnotSpec::trefoil(), k).unwrap(), &params, 64).unwrap();
    let curves = SupportCurves::for_knot(KnotSpec::trefoil());
    assert!(matches!(microsupport_report(&grid, &curves, 0.15), Err(KnotStateError::EmptyPartition { .. })));
    let r = microsupport_report(&grid, &curves, 0.03);
    assert!(r.is_ok(), "{r:?}");
}

#[test]
fn abelian_ratios() {
    let params = QuantParams::square(600).unwrap();
    let unknot = abelian_ratio_test(KnotSpec::Unknot, &params, &[0.05, 0.2, 0.4]).unwrap();
    assert!(unknot.iter().all(|s| s.rel_error < 1e-12));
    let fig8 = abelian_ratio_test(KnotSpec::FigureEight, &params, &[0.05, 0.10, 0.15, 0.20]).unwrap();
    assert!(fig8.iter().all(|s| s.rel_error < 0.10), "{fig8:?}");
    assert!(abelian_ratio_test(KnotSpec::FigureEight, &params, &[0.3]).is_err());
    assert!(abelian_ratio_test(KnotSpec::trefoil(), &params, &[1.0 / 6.0]).is_err());
    assert!(abelian_ratio_test(KnotSpec::Unknot, &params, &[0.0]).is_err());
}

#[test]
fn admissibility() {
    let u = admissibility_scan(KnotSpec::Unknot, &[5, 10, 20]).unwrap();
    assert!(u.norms.iter().all(|&(_, n)| (n - 1.0).abs() < 1e-12));
    assert!(u.exponent.abs() < 1e-10);
    let f = admissibility_scan(KnotSpec::FigureEight, &[50, 100, 200, 400]).unwrap();
    assert!(f.exponent.is_finite() && f.exponent > 0.0);
}

fn digest(grid: &SectionGrid) -> (Vec<u8>, Vec<u8>) {
    let mut csv = Vec::new();
    write_csv(grid, &mut csv).unwrap();
    let mut pgm = Vec::new();
    write_pgm(grid, &mut pgm).unwrap();
    (Sha256::digest(&csv).to_vec(), Sha256::digest(&pgm).to_vec())
}

#[test]
fn outputs_are_deterministic_across_thread_counts() {
    let k = 50;
    let params = QuantParams::new(k, Complex64::new(0.3, 0.8)).unwrap();
    let state = knot_state(KnotSpec::FigureEight, k).unwrap();
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| evaluate_grid(&state, &params, 64).unwrap())
    };
    let a = run(1);
    let b = run(4);
    assert_eq!(a, b);
    assert_eq!(digest(&a), digest(&b));
}

#[test]
fn file_formats() {
    let params = QuantParams::square(50).unwrap();
    let grid = evaluate_grid(&knot_state(KnotSpec::Unknot, 50).unwrap(), &params, 64).unwrap();
    let mut csv = Vec::new();
    write_csv(&grid, &mut csv).unwrap();
    let text = String::from_utf8(csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4097);
    assert_eq!(lines[0], "p,q,re,im,norm");
    assert!(lines[1].starts_with("7.8125000000000000e-3,7.8125000000000000e-3,"));
    let mut pgm = Vec::new();
    write_pgm(&grid, &mut pgm).unwrap();
    let header = b"P5\n64 64\n65535\n";
    assert_eq!(&pgm[..header.len()], header);
    assert_eq!(pgm.len(), header.len() + 2 * 64 * 64);
    // the brightest cell maps to full scale
    let body = &pgm[header.len()..];
    let max = body.chunks(2).map(|c| u16::from_be_bytes([c[0], c[1]])).max().unwrap();
    assert_eq!(max, 65535);
}
