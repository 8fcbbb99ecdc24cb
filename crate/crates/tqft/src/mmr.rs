use std::f64::consts::PI;

use jones::{jones_values_at_level, tilde_from_value, KnotSpec};
use num_complex::Complex64;
use serde::Serialize;

use crate::TqftError;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct MmrReport {
    pub knot: String,
    pub k: u32,
    pub delta: f64,
    /// `|J~_l(e^{-2 i pi/k}) - 1/Delta(e^{2 i pi l/k})|` for `l = 1..=floor(delta k)`.
    pub errors: Vec<f64>,
    /// `sup_l l |error_l|`.
    pub sup_weighted: f64,
    pub argmax: usize,
}

pub fn mmr_check(knot: KnotSpec, k: u32, delta: f64) -> Result<MmrReport, TqftError> {
    let bound = knot.mmr_bound();
    if !(delta > 0.0 && delta < bound) {
        return Err(TqftError::DeltaOutOfRange { delta, bound });
    }
    if k < 20 {
        return Err(TqftError::BadParameters(format!("level must be at least 20, got {k}")));
    }
    let values = jones_values_at_level(knot, k);
    let alexander = knot.alexander();
    let top = (delta * k as f64).floor() as usize;
    let errors: Vec<f64> = (1..=top)
        .map(|l| {
            let jt = tilde_from_value(values[l], l as i64, k).expect("l < k");
            let d = alexander.eval_complex(Complex64::from_polar(1.0, 2.0 * PI * l as f64 / k as f64));
            (jt - 1.0 / d).norm()
        })
        .collect();
    let (argmax, sup_weighted) = errors
        .iter()
        .enumerate()
        .map(|(i, e)| (i + 1, (i + 1) as f64 * e))
        .fold((0, 0.0), |best, x| if x.1 > best.1 { x } else { best });
    Ok(MmrReport { knot: knot.name(), k, delta, errors, sup_weighted, argmax })
}
