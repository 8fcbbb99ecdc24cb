use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use theta::{midpoints, QuantParams, Section};

use crate::{KnotStateError, StateCoeffs, SupportCurves};

/// Values and pointwise norms on the `N x N` midpoint grid of `[0,1)^2`,
/// row-major with `q` as the outer index.
#[derive(Clone, Debug, PartialEq)]
pub struct SectionGrid {
    pub n: usize,
    pub k: u32,
    pub tau: Complex64,
    pub label: String,
    pub values: Vec<Complex64>,
    pub norms: Vec<f64>,
}

impl SectionGrid {
    pub fn coords(&self, idx: usize) -> (f64, f64) {
        let h = 1.0 / self.n as f64;
        ((idx % self.n) as f64 * h + 0.5 * h, (idx / self.n) as f64 * h + 0.5 * h)
    }

    pub fn max_norm(&self) -> f64 {
        self.norms.iter().copied().fold(0.0, f64::max)
    }

    /// `int |Z|^2 |omega|` by the midpoint rule.
    pub fn quadrature_norm_sq(&self) -> f64 {
        let s: f64 = self.norms.iter().map(|x| x * x).sum();
        s * 4.0 * std::f64::consts::PI / (self.n * self.n) as f64
    }
}

/// `Z(x) = sum_l c_l Psi_l(x)` on the grid. Every cell is computed
/// independently, so the result does not depend on how rows are scheduled.
pub fn evaluate_grid(state: &StateCoeffs, params: &QuantParams, n: usize) -> Result<SectionGrid, KnotStateError> {
    if n < 16 {
        return Err(KnotStateError::GridTooSmall(n));
    }
    assert_eq!(state.k, params.k(), "state and parameters at different levels");
    let section = state.section(*params);
    let g = midpoints(n);
    let values: Vec<Complex64> =
        g.par_iter().flat_map_iter(|&q| g.iter().map(move |&p| (p, q))).map(|(p, q)| section.value(p, q)).collect();
    let f = params.frame_norm();
    let norms = values.iter().map(|v| v.norm() * f).collect();
    Ok(SectionGrid { n, k: state.k, tau: params.tau(), label: state.label.clone(), values, norms })
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct MicrosupportReport {
    pub knot: String,
    pub k: u32,
    pub curves: Vec<String>,
    pub margin: f64,
    /// Cells within this distance count as on the curves.
    pub on_band: f64,
    pub on_max: f64,
    /// 99.9th percentile of the norms farther than `margin`.
    pub off_max: f64,
    pub ratio: f64,
    pub off_cells: usize,
}

impl MicrosupportReport {
    pub fn passes(&self, threshold: f64) -> bool {
        self.ratio < threshold
    }
}

/// Nearest-rank percentile of unsorted data, `0 < pct <= 100`.
pub(crate) fn percentile(mut v: Vec<f64>, pct: f64) -> f64 {
    v.sort_by(|a, b| a.total_cmp(b));
    let rank = ((pct / 100.0) * v.len() as f64).ceil() as usize;
    v[rank.clamp(1, v.len()) - 1]
}

/// Splits the grid by distance to `curves` and compares the brightness far
/// from them with the brightness on them.
pub fn microsupport_report(
    grid: &SectionGrid,
    curves: &SupportCurves,
    margin: f64,
) -> Result<MicrosupportReport, KnotStateError> {
    let diagonal = std::f64::consts::SQRT_2 / grid.n as f64;
    if margin <= diagonal {
        return Err(KnotStateError::MarginTooSmall { margin, diagonal });
    }
    let on_band = (2.0 * diagonal).min(0.5 * margin);
    let cap = margin + 1e-6;
    let dist: Vec<f64> = (0..grid.norms.len())
        .into_par_iter()
        .map(|i| {
            let (p, q) = grid.coords(i);
            curves.distance(p, q, cap)
        })
        .collect();
    let mut on_max = 0f64;
    let mut off = Vec::new();
    for (d, &v) in dist.iter().zip(&grid.norms) {
        if *d <= on_band {
            on_max = on_max.max(v);
        } else if *d > margin {
            off.push(v);
        }
    }
    if off.is_empty() {
        return Err(KnotStateError::EmptyPartition { margin });
    }
    let off_cells = off.len();
    let off_max = percentile(off, 99.9);
    Ok(MicrosupportReport {
        knot: grid.label.clone(),
        k: grid.k,
        curves: curves.names(),
        margin,
        on_band,
        on_max,
        off_max,
        ratio: if on_max > 0.0 { off_max / on_max } else { f64::INFINITY },
        off_cells,
    })
}
