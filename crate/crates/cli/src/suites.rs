use std::time::Instant;

use jones::KnotSpec;
use knotstate::{
    abelian_ratio_test, evaluate_grid, knot_state, microsupport_report, write_csv, write_pgm, SectionGrid,
    SupportCurves,
};
use num_complex::Complex64;
use once_cell::sync::Lazy;
use qtorus::{
    aj_divisibility, aj_divisibility_nonabelian, homogenize, standard_suite, verify_recurrence, Fig8Inhomogeneous,
    TorusTwoStep,
};
use serde::Serialize;
use sha2::{Digest, Sha256};
use theta::{
    eigenrelation_deviation, orthonormality_deviation, s_transform_check, sample_points, t_transform_check, QuantParams,
};
use tqft::{bridge_check, jeffrey_asymptotic, lens_compare, mmr_check, strategy};

use crate::check::{Check, Comparison, SuiteReport};

/// Knobs shared by every suite.
#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct SuiteOptions {
    /// Smaller ranges and grids.
    pub fast: bool,
    /// Overrides the suite's default levels where that makes sense.
    pub k: Option<u32>,
    /// Adds wall-clock checks; the report is then no longer reproducible.
    pub timings: bool,
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn run(&self, opts: &SuiteOptions) -> Vec<Check>;
}

static SUITES: Lazy<Vec<Box<dyn Suite>>> = Lazy::new(|| {
    vec![
        Box::new(Recurrences),
        Box::new(Theta),
        Box::new(Microsupport),
        Box::new(Abelian),
        Box::new(Lens),
        Box::new(Mmr),
    ]
});

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name()).collect()
}

/// The named suite, or every suite for `"all"`.
pub fn select(name: &str) -> Option<Vec<&'static dyn Suite>> {
    if name == "all" {
        return Some(SUITES.iter().map(|s| s.as_ref()).collect());
    }
    SUITES.iter().find(|s| s.name() == name).map(|s| vec![s.as_ref()])
}

pub fn run_suite(suite: &dyn Suite, opts: &SuiteOptions) -> SuiteReport {
    let checks = suite.run(opts);
    SuiteReport { suite: suite.name().into(), pass: checks.iter().all(|c| c.pass), checks }
}

fn timing(name: &str, anchor: &str, limit_s: f64, start: Instant) -> Check {
    Check::below(name, anchor, limit_s, start.elapsed().as_secs_f64())
}

struct Recurrences;

impl Suite for Recurrences {
    fn name(&self) -> &'static str {
        "recurrences"
    }

    fn run(&self, opts: &SuiteOptions) -> Vec<Check> {
        let start = Instant::now();
        let mut out = Vec::new();
        for rel in standard_suite() {
            let (lo, mut hi) = rel.default_range();
            if opts.fast {
                hi = hi.min(lo + 12);
            }
            let r = verify_recurrence(rel.as_ref(), lo, hi);
            let name = format!("{} residuals on {lo}..={hi}", r.relation);
            let failures = if r.all_zero { 0.0 } else { 1.0 };
            let mut c = Check::below(name, rel.anchor(), 0.5, failures);
            if let (Some(n), Some(w)) = (r.first_failure, &r.witness) {
                c = c.with_detail(format!("first nonzero residual at n = {n}: {w}"));
            }
            out.push(c);
        }
        if opts.timings {
            out.push(timing("recurrence suite runtime (s)", "exact recurrence suite", 60.0, start));
        }

        let anchor = "q = 1 specialization of the figure-eight operator";
        let q = Fig8Inhomogeneous::operator();
        out.push(divisible("fig8 eps(Q) by the A-polynomial", anchor, aj_divisibility(&q, KnotSpec::FigureEight)));
        out.push(divisible(
            "fig8 eps(Q) by the non-abelian factor",
            anchor,
            aj_divisibility_nonabelian(&q, KnotSpec::FigureEight),
        ));
        let alpha = homogenize(&q, &Fig8Inhomogeneous::affine());
        out.push(divisible(
            "fig8 eps of the homogenized Q by the A-polynomial",
            anchor,
            aj_divisibility(&alpha, KnotSpec::FigureEight),
        ));
        for (a, b) in [(2, 3), (3, 4)] {
            let knot = KnotSpec::torus(a, b).expect("coprime");
            let op = TorusTwoStep { a, b }.operator();
            out.push(divisible(
                format!("torus({a},{b}) two-step operator by the non-abelian factor"),
                "symbol of the torus knot two-step operator",
                aj_divisibility_nonabelian(&op, knot),
            ));
        }
        out
    }
}

fn divisible<E: std::fmt::Display>(name: impl Into<String>, anchor: &str, r: Result<laurent::LQuotient, E>) -> Check {
    match r {
        Ok(f) => Check::below(name, anchor, 0.5, 0.0).with_detail(format!("quotient {f}")),
        Err(e) => Check::below(name, anchor, 0.5, 1.0).with_detail(e.to_string()),
    }
}

struct Theta;

impl Suite for Theta {
    fn name(&self) -> &'static str {
        "theta"
    }

    fn run(&self, opts: &SuiteOptions) -> Vec<Check> {
        let levels = match (opts.k, opts.fast) {
            (Some(k), _) => vec![k],
            (None, true) => vec![12, 24],
            (None, false) => vec![12, 24, 40],
        };
        let taus = [Complex64::new(0.0, 1.0), Complex64::new(0.3, 0.8)];
        let pts = sample_points(if opts.fast { 32 } else { 96 });
        let mut out = Vec::new();
        for &k in &levels {
            for tau in taus {
                let tag = format!("k={k} tau={tau}");
                let params = match QuantParams::new(k, tau) {
                    Ok(p) => p,
                    Err(e) => {
                        out.push(Check::failed(format!("{tag} parameters"), "theta basis", Comparison::Below, 0.0, e));
                        continue;
                    }
                };
                let anchor = "scalar product of the theta basis";
                out.push(match orthonormality_deviation(&params, 512) {
                    Ok(d) => Check::below(format!("{tag} orthonormality"), anchor, 1e-8, d),
                    Err(e) => Check::failed(format!("{tag} orthonormality"), anchor, Comparison::Below, 1e-8, e),
                });
                out.push(Check::below(
                    format!("{tag} Heisenberg eigenrelations"),
                    "Heisenberg eigenrelations of the theta basis",
                    1e-10,
                    eigenrelation_deviation(&params, &pts),
                ));
                out.push(Check::below(
                    format!("{tag} S transform"),
                    "S transform of the theta basis",
                    1e-8,
                    s_transform_check(&params, &pts),
                ));
                out.push(Check::below(
                    format!("{tag} T transform"),
                    "T transform of the theta basis",
                    1e-10,
                    t_transform_check(&params, &pts),
                ));
            }
        }
        let bridge_levels: &[u32] = if opts.fast { &[8, 16] } else { &[8, 16, 32] };
        for &k in bridge_levels {
            let anchor = "TQFT S matrix against the theta-basis S transform";
            let params = QuantParams::square(k).expect("positive level");
            match bridge_check(&params, 256) {
                Ok(r) => {
                    out.push(
                        Check::below(format!("k={k} S matrix up to a global phase"), anchor, 1e-8, r.deviation)
                            .with_detail(format!("phase = {:.6} pi", r.phase_over_pi)),
                    );
                    out.push(Check::below(
                        format!("k={k} global phase in the ambiguity group"),
                        anchor,
                        1e-8,
                        r.phase_residual,
                    ));
                }
                Err(e) => out.push(Check::failed(format!("k={k} bridge"), anchor, Comparison::Below, 1e-8, e)),
            }
        }
        out
    }
}

fn grid_digest(grid: &SectionGrid) -> Vec<u8> {
    let mut h = Sha256::new();
    let mut buf = Vec::new();
    write_csv(grid, &mut buf).expect("in-memory write");
    write_pgm(grid, &mut buf).expect("in-memory write");
    h.update(&buf);
    h.finalize().to_vec()
}

struct Microsupport;

impl Microsupport {
    const MARGIN: f64 = 0.15;
}

impl Suite for Microsupport {
    fn name(&self) -> &'static str {
        "microsupport"
    }

    fn run(&self, opts: &SuiteOptions) -> Vec<Check> {
        let k = opts.k.unwrap_or(200);
        let n = if opts.fast { 128 } else { 256 };
        let anchor = "concentration of the figure-eight state on D0 and X8";
        let params = match QuantParams::square(k) {
            Ok(p) => p,
            Err(e) => return vec![Check::failed("parameters", anchor, Comparison::Below, 0.0, e)],
        };
        let mut out = Vec::new();

        let state = match knot_state(KnotSpec::FigureEight, k) {
            Ok(s) => s,
            Err(e) => return vec![Check::failed("fig8 state", anchor, Comparison::Below, 0.0, e)],
        };
        let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().expect("thread pool");
        let start = Instant::now();
        let grid = single.install(|| evaluate_grid(&state, &params, n)).expect("grid size is valid");
        if opts.timings {
            out.push(timing(format!("fig8 k={k} N={n} single-threaded grid (s)").as_str(), anchor, 60.0, start));
        }
        match microsupport_report(&grid, &SupportCurves::for_knot(KnotSpec::FigureEight), Self::MARGIN) {
            Ok(r) => out.push(
                Check::below(format!("fig8 k={k} N={n} off/on ratio, D0+X8"), anchor, 1e-4, r.ratio)
                    .with_detail(format!("{} off cells, on max {:.6e}", r.off_cells, r.on_max)),
            ),
            Err(e) => out.push(Check::failed("fig8 off/on ratio, D0+X8", anchor, Comparison::Below, 1e-4, e)),
        }
        match microsupport_report(&grid, &SupportCurves::abelian_only(), Self::MARGIN) {
            Ok(r) => out.push(Check::above(format!("fig8 k={k} N={n} control ratio, D0 only"), anchor, 0.1, r.ratio)),
            Err(e) => out.push(Check::failed("fig8 control ratio, D0 only", anchor, Comparison::Above, 0.1, e)),
        }

        let pooled = evaluate_grid(&state, &params, n).expect("grid size is valid");
        let same = grid_digest(&grid) == grid_digest(&pooled);
        out.push(Check::below(
            "CSV and PGM bytes differ between 1 thread and the pool",
            "determinism",
            0.5,
            if same { 0.0 } else { 1.0 },
        ));

        let torus = KnotSpec::trefoil();
        let anchor = "concentration of the trefoil state on D0, D6 and D6 + lambda/12";
        let curves = SupportCurves::for_knot(torus);
        let name = format!("torus(2,3) k={k} N={n} off/on ratio, {}", curves.names().join("+"));
        match knot_state(torus, k).and_then(|s| evaluate_grid(&s, &params, n)) {
            Ok(g) => match microsupport_report(&g, &curves, Self::MARGIN) {
                Ok(r) => out.push(Check::below(name, anchor, 1e-4, r.ratio)),
                Err(e) => out.push(Check::failed(name, anchor, Comparison::Below, 1e-4, e)),
            },
            Err(e) => out.push(Check::failed(name, anchor, Comparison::Below, 1e-4, e)),
        }
        out
    }
}

struct Abelian;

impl Abelian {
    fn worst(knot: KnotSpec, k: u32, qs: &[f64]) -> Result<f64, knotstate::KnotStateError> {
        let params = QuantParams::square(k).expect("positive level");
        let s = abelian_ratio_test(knot, &params, qs)?;
        Ok(s.iter().map(|s| s.rel_error).fold(0.0, f64::max))
    }
}

impl Suite for Abelian {
    fn name(&self) -> &'static str {
        "abelian"
    }

    fn run(&self, opts: &SuiteOptions) -> Vec<Check> {
        let anchor = "ratio to the unknot state along p = 0 against 1/|Alexander|";
        let (lo, hi) = match opts.k {
            Some(k) => (k / 2, k),
            None => (300, 600),
        };
        let mut out = Vec::new();
        let cases: [(KnotSpec, &[f64]); 2] =
            [(KnotSpec::FigureEight, &[0.05, 0.10, 0.15, 0.20]), (KnotSpec::trefoil(), &[0.05, 0.10])];
        for (knot, qs) in cases {
            let name = knot.name();
            let params = QuantParams::square(hi).expect("positive level");
            match abelian_ratio_test(knot, &params, qs) {
                Ok(samples) => {
                    for s in samples {
                        out.push(Check::below(
                            format!("{name} k={hi} q={} relative error", s.q),
                            anchor,
                            0.10,
                            s.rel_error,
                        ));
                    }
                }
                Err(e) => out.push(Check::failed(format!("{name} k={hi}"), anchor, Comparison::Below, 0.10, e)),
            }
            match (Self::worst(knot, lo, qs), Self::worst(knot, hi, qs)) {
                (Ok(a), Ok(b)) => out.push(
                    Check::below(format!("{name} worst error at k={hi} over k={lo}"), anchor, 1.0, b / a)
                        .with_detail(format!("{a:.6e} -> {b:.6e}")),
                ),
                (Err(e), _) | (_, Err(e)) => {
                    out.push(Check::failed(format!("{name} decrease"), anchor, Comparison::Below, 1.0, e))
                }
            }
        }
        match Self::worst(KnotSpec::Unknot, hi, &[0.05, 0.10, 0.25, 0.40]) {
            Ok(e) => out.push(Check::below(format!("unknot k={hi} ratio is one"), anchor, 1e-12, e)),
            Err(e) => out.push(Check::failed("unknot ratio", anchor, Comparison::Below, 1e-12, e)),
        }
        out
    }
}

struct Lens;

impl Suite for Lens {
    fn name(&self) -> &'static str {
        "lens"
    }

    fn run(&self, opts: &SuiteOptions) -> Vec<Check> {
        let anchor = "lens space invariants against the large-k expansion";
        let k0 = opts.k.unwrap_or(200);
        let word = strategy("negative-cf").expect("registered");
        let mut out = Vec::new();
        for (p, q) in [(5i64, 2i64), (7, 3)] {
            let mut gaps = Vec::new();
            for k in [k0, 2 * k0] {
                let name = format!("L({p},{q}) k={k} modulus gap");
                let r = match lens_compare(p, q, k, 1, word) {
                    Ok(r) => r,
                    Err(e) => {
                        out.push(Check::failed(name, anchor, Comparison::Below, 0.05, e));
                        continue;
                    }
                };
                if r.degenerate {
                    let j0 = jeffrey_asymptotic(p, q, k, 0).map(|z| z.norm()).unwrap_or(f64::NAN);
                    out.push(Check::skipped(
                        name,
                        anchor,
                        j0 * (k as f64).sqrt(),
                        "order-0 modulus below 0.1 k^-1/2; the comparison degenerates",
                    ));
                    continue;
                }
                out.push(
                    Check::below(name, anchor, 0.05, r.rel_gap)
                        .with_detail(format!("|Z| = {:.9e}, expansion {:.9e}", r.modulus_tqft, r.modulus_jeffrey)),
                );
                gaps.push(r.rel_gap);
            }
            let name = format!("L({p},{q}) gap at k={} over gap at k={k0}", 2 * k0);
            if let [a, b] = gaps[..] {
                out.push(Check::below(name, anchor, 1.0, b / a));
            } else {
                out.push(Check::skipped(name, anchor, gaps.len() as f64, "a compared level is degenerate"));
            }
        }
        out
    }
}

struct Mmr;

impl Suite for Mmr {
    fn name(&self) -> &'static str {
        "mmr"
    }

    fn run(&self, opts: &SuiteOptions) -> Vec<Check> {
        let anchor = "Melvin-Morton-Rozansky comparison below delta k";
        let delta = 0.15;
        let levels: Vec<u32> = match opts.k {
            Some(k) => vec![k / 4, k / 2, k],
            None => vec![100, 200, 400],
        };
        let mut out = Vec::new();
        for knot in [KnotSpec::FigureEight, KnotSpec::trefoil()] {
            let name = format!("{} relative spread of sup l|error| over k in {levels:?}", knot.name());
            let sups: Result<Vec<f64>, _> =
                levels.iter().map(|&k| mmr_check(knot, k, delta).map(|r| r.sup_weighted)).collect();
            match sups {
                Ok(s) => {
                    let max = s.iter().copied().fold(f64::MIN, f64::max);
                    let min = s.iter().copied().fold(f64::MAX, f64::min);
                    let spread = if max > 0.0 { (max - min) / max } else { 0.0 };
                    out.push(Check::below(name, anchor, 0.5, spread).with_detail(format!(
                        "sups {}",
                        s.iter().map(|x| format!("{x:.6e}")).collect::<Vec<_>>().join(", ")
                    )));
                }
                Err(e) => out.push(Check::failed(name, anchor, Comparison::Below, 0.5, e)),
            }
        }
        let k = *levels.last().expect("nonempty");
        match mmr_check(KnotSpec::Unknot, k, delta) {
            Ok(r) => {
                let worst = r.errors.iter().copied().fold(0.0, f64::max);
                out.push(Check::below(format!("unknot k={k} max error"), anchor, 1e-12, worst));
            }
            Err(e) => out.push(Check::failed("unknot max error", anchor, Comparison::Below, 1e-12, e)),
        }
        out
    }
}
