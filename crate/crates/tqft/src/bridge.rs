use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
use serde::Serialize;
use theta::{basis_values_at, dual_basis_values_at, gram_matrix, QuantParams, ThetaError};

use crate::{rep_matrices, PhaseClass, TqftError};

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct BridgeReport {
    pub k: u32,
    pub tau: [f64; 2],
    /// `max |A - e^{i phi} S|` with `A_{l m} = <e_m, e'_l>`.
    pub deviation: f64,
    /// `phi / pi`.
    pub phase_over_pi: f64,
    /// Distance of `phi` to the ambiguity group.
    pub phase_residual: f64,
}

fn alternating(v: Vec<Complex64>, k: usize) -> Vec<Complex64> {
    let n = 2 * k;
    (1..k).map(|l| (v[l] - v[n - l]) * FRAC_1_SQRT_2).collect()
}

/// Compares the TQFT `S` matrix with the change of basis between the theta
/// bases for `(mu, lambda)` and `(lambda, -mu)`, computed by quadrature.
pub fn bridge_check(params: &QuantParams, n: usize) -> Result<BridgeReport, TqftError> {
    let k = params.k();
    let rep = rep_matrices(k)?;
    let ku = k as usize;
    let gram = gram_matrix(
        params,
        n,
        |p, q| alternating(basis_values_at(params, p, q), ku),
        |p, q| alternating(dual_basis_values_at(params, p, q), ku),
    )
    .map_err(|e: ThetaError| TqftError::BadParameters(e.to_string()))?;
    let a = |l: usize, m: usize| gram[m][l];
    let mut overlap = Complex64::new(0.0, 0.0);
    for l in 0..ku - 1 {
        for m in 0..ku - 1 {
            overlap += rep.s[(l, m)].conj() * a(l, m);
        }
    }
    let phase = overlap / overlap.norm();
    let mut deviation = 0f64;
    for l in 0..ku - 1 {
        for m in 0..ku - 1 {
            deviation = deviation.max((a(l, m) - phase * rep.s[(l, m)]).norm());
        }
    }
    Ok(BridgeReport {
        k,
        tau: [params.tau().re, params.tau().im],
        deviation,
        phase_over_pi: phase.arg() / PI,
        phase_residual: PhaseClass::phase_residual(phase, k),
    })
}
