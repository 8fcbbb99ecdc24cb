use std::f64::consts::PI;

use num_complex::Complex64;

use crate::basis::{basis_values_at, dual_basis_values_at, heisenberg_translate, BasisSection, Section};
use crate::{gram_matrix, theta_basis_value, QuantParams, ThetaError};

/// `count` deterministic points of `[0,1)^2` from the golden-ratio sequence.
pub fn sample_points(count: usize) -> Vec<(f64, f64)> {
    let g1 = 0.754_877_666_246_692_8;
    let g2 = 0.569_840_290_998_053_3;
    (1..=count).map(|i| ((0.5 + g1 * i as f64).fract(), (0.5 + g2 * i as f64).fract())).collect()
}

/// Largest deviation in `T*_{mu/2k} Psi_l = e^{i pi l/k} Psi_l` and
/// `T*_{lambda/2k} Psi_l = Psi_{l+1}` over all `l` and the given points.
pub fn eigenrelation_deviation(params: &QuantParams, points: &[(f64, f64)]) -> f64 {
    let k = params.k();
    let step = 1.0 / (2.0 * k as f64);
    let mut worst = 0f64;
    for l in 0..params.dim() as i64 {
        let psi = BasisSection { params: *params, l };
        let next = BasisSection { params: *params, l: l + 1 };
        let tm = heisenberg_translate(k, (step, 0.0), psi);
        let tl = heisenberg_translate(k, (0.0, step), psi);
        let eig = Complex64::from_polar(1.0, PI * l as f64 / k as f64);
        for &(p, q) in points {
            worst = worst.max((tm.value(p, q) - eig * psi.value(p, q)).norm());
            worst = worst.max((tl.value(p, q) - next.value(p, q)).norm());
        }
    }
    worst
}

/// Both sides of `Psi'_0 = e^{-i pi/4} (2k)^{-1/2} sum_l Psi_l`, where `Psi'` is
/// the basis for `(lambda, -mu)`. Returns the smaller of the deviations for
/// the two signs.
pub fn s_transform_check(params: &QuantParams, points: &[(f64, f64)]) -> f64 {
    let c = Complex64::from_polar(1.0, -PI / 4.0) / (params.dim() as f64).sqrt();
    let (mut plus, mut minus) = (0f64, 0f64);
    for &(p, q) in points {
        let lhs = dual_basis_values_at(params, p, q)[0];
        let rhs: Complex64 = basis_values_at(params, p, q).iter().sum::<Complex64>() * c;
        plus = plus.max((lhs - rhs).norm());
        minus = minus.max((lhs + rhs).norm());
    }
    plus.min(minus)
}

/// Deviation in `Psi^T_l = e^{i pi l^2/2k} Psi_l`, where `Psi^T` is the basis
/// for `(mu, mu + lambda)` and the point `p mu + q lambda` has coordinates
/// `(p - q, q)` there. The `l = 0` case is the sign match of the ground state.
pub fn t_transform_check(params: &QuantParams, points: &[(f64, f64)]) -> f64 {
    let k = params.k() as f64;
    let dual = params.t_dual();
    let mut worst = 0f64;
    for &(p, q) in points {
        let a = basis_values_at(&dual, p - q, q);
        let b = basis_values_at(params, p, q);
        for (l, (x, y)) in a.iter().zip(&b).enumerate() {
            let phase = Complex64::from_polar(1.0, PI * (l * l) as f64 / (2.0 * k));
            worst = worst.max((x - phase * y).norm());
        }
    }
    worst
}

/// `max |<Psi_l, Psi_m> - delta_{lm}|` by quadrature.
pub fn orthonormality_deviation(params: &QuantParams, n: usize) -> Result<f64, ThetaError> {
    let f = |p, q| basis_values_at(params, p, q);
    let g = gram_matrix(params, n, f, f)?;
    let mut worst = 0f64;
    for (i, row) in g.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let want = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((x - want).norm());
        }
    }
    Ok(worst)
}

/// `max |norm(p,q)/norm(p,0) e^{2 pi beta k q^2} - 1|` for `Psi_0` along the
/// given `p` values and `|q| <= q_max`.
pub fn gaussian_profile_deviation(params: &QuantParams, ps: &[f64], q_max: f64, steps: usize) -> f64 {
    let kb = 2.0 * PI * params.beta() * params.k() as f64;
    let mut worst = 0f64;
    for &p in ps {
        let base = theta_basis_value(params, 0, (p, 0.0)).norm;
        for i in 0..=steps {
            let q = -q_max + 2.0 * q_max * i as f64 / steps as f64;
            let r = theta_basis_value(params, 0, (p, q)).norm / base;
            worst = worst.max((r * (kb * q * q).exp() - 1.0).abs());
        }
    }
    worst
}
