use std::f64::consts::PI;

use jones::KnotSpec;
use num_complex::Complex64;
use serde::Serialize;
use theta::{QuantParams, Section};

use crate::{knot_state, KnotStateError};

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct AbelianSample {
    pub q: f64,
    /// `|Z_K(q lambda)| / |Z_unknot(q lambda)|`.
    pub ratio: f64,
    /// `1 / |Delta_K(e^{4 i pi q})|`.
    pub target: f64,
    pub rel_error: f64,
}

fn check_regular(knot: KnotSpec, q: f64) -> Result<(), KnotStateError> {
    let irregular = |reason: &str| Err(KnotStateError::IrregularPoint { q, reason: reason.into() });
    if !(q > 0.0 && q < 0.5) {
        return irregular("q must lie in (0, 1/2)");
    }
    match knot {
        KnotSpec::FigureEight if q >= 0.25 => irregular("outside (0, 1/4) for the figure-eight knot"),
        KnotSpec::Torus { a, b } => {
            let x = q * 2.0 * (a * b) as f64;
            if (x - x.round()).abs() < 1e-9 {
                irregular("multiple of 1/2ab")
            } else {
                Ok(())
            }
        }
        _ => Ok(()),
    }
}

/// Compares the knot state with the unknot state along `p = 0`; the ratio
/// should approach `1 / |Delta_K(e^{4 i pi q})|`.
pub fn abelian_ratio_test(
    knot: KnotSpec,
    params: &QuantParams,
    qs: &[f64],
) -> Result<Vec<AbelianSample>, KnotStateError> {
    let k = params.k();
    let zk = knot_state(knot, k)?.section(*params);
    let zu = knot_state(KnotSpec::Unknot, k)?.section(*params);
    let delta = knot.alexander();
    qs.iter()
        .map(|&q| {
            check_regular(knot, q)?;
            let d = delta.eval_complex(Complex64::from_polar(1.0, 4.0 * PI * q)).norm();
            if d < 1e-9 {
                return Err(KnotStateError::IrregularPoint { q, reason: "Alexander polynomial vanishes".into() });
            }
            let ratio = zk.value(0.0, q).norm() / zu.value(0.0, q).norm();
            Ok(AbelianSample { q, ratio, target: 1.0 / d, rel_error: (ratio * d - 1.0).abs() })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct AdmissibilityScan {
    pub knot: String,
    /// `(k, ||Z_k||)` from Parseval.
    pub norms: Vec<(u32, f64)>,
    /// Least-squares slope of `log ||Z_k||` against `log k`.
    pub exponent: f64,
}

pub fn admissibility_scan(knot: KnotSpec, ks: &[u32]) -> Result<AdmissibilityScan, KnotStateError> {
    let norms: Vec<(u32, f64)> =
        ks.iter().map(|&k| Ok((k, knot_state(knot, k)?.norm_sq().sqrt()))).collect::<Result<_, KnotStateError>>()?;
    let pts: Vec<(f64, f64)> = norms.iter().map(|&(k, n)| ((k as f64).ln(), n.ln())).collect();
    let m = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let sxx: f64 = pts.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let exponent = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    Ok(AdmissibilityScan { knot: knot.name(), norms, exponent })
}
