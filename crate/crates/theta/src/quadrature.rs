use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::{QuantParams, Section, ThetaError};

/// Cell centres `(i + 1/2)/n`.
pub fn midpoints(n: usize) -> Vec<f64> {
    (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect()
}

fn weight(params: &QuantParams, n: usize) -> f64 {
    params.frame_norm().powi(2) * 4.0 * PI / (n * n) as f64
}

/// `<A, B> = int_D conj(A) B ||Omega_mu||^2 |omega|` by the midpoint rule on
/// the square `[0,1)^2`, `|omega| = 4 pi dp dq`.
pub fn inner_product(
    params: &QuantParams,
    a: &dyn Section,
    b: &dyn Section,
    n: usize,
) -> Result<Complex64, ThetaError> {
    if n < 64 {
        return Err(ThetaError::CoarseQuadrature(n));
    }
    let g = midpoints(n);
    let rows: Vec<Complex64> =
        g.par_iter().map(|&q| g.iter().map(|&p| a.value(p, q).conj() * b.value(p, q)).sum()).collect();
    Ok(rows.into_iter().sum::<Complex64>() * weight(params, n))
}

/// `G[a][b] = <left_a, right_b>` for two families sampled jointly at each
/// point. Rows of the grid are reduced in a fixed order.
pub fn gram_matrix<L, R>(params: &QuantParams, n: usize, left: L, right: R) -> Result<Vec<Vec<Complex64>>, ThetaError>
where
    L: Fn(f64, f64) -> Vec<Complex64> + Sync,
    R: Fn(f64, f64) -> Vec<Complex64> + Sync,
{
    if n < 64 {
        return Err(ThetaError::CoarseQuadrature(n));
    }
    let g = midpoints(n);
    let partials: Vec<Vec<Vec<Complex64>>> = g
        .par_iter()
        .map(|&q| {
            let mut acc: Vec<Vec<Complex64>> = Vec::new();
            for &p in &g {
                let (l, r) = (left(p, q), right(p, q));
                if acc.is_empty() {
                    acc = vec![vec![Complex64::new(0.0, 0.0); r.len()]; l.len()];
                }
                for (row, la) in acc.iter_mut().zip(&l) {
                    let c = la.conj();
                    for (x, rb) in row.iter_mut().zip(&r) {
                        *x += c * rb;
                    }
                }
            }
            acc
        })
        .collect();
    let w = weight(params, n);
    let mut out = partials[0].clone();
    for part in &partials[1..] {
        for (row, prow) in out.iter_mut().zip(part) {
            for (x, y) in row.iter_mut().zip(prow) {
                *x += y;
            }
        }
    }
    out.iter_mut().flatten().for_each(|x| *x *= w);
    Ok(out)
}

/// `c_l -> (c_l - c_{-l}) / 2` over `Z/2kZ`.
pub fn alternating_project(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len();
    (0..n).map(|l| (c[l] - c[(n - l) % n]) * 0.5).collect()
}
