use std::f64::consts::PI;

use num_complex::Complex64;

use crate::QuantParams;

/// A section value in the `Omega_mu` frame with its pointwise norm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SectionValue {
    pub value: Complex64,
    pub norm: f64,
}

impl SectionValue {
    pub fn new(params: &QuantParams, value: Complex64) -> Self {
        Self { value, norm: value.norm() * params.frame_norm() }
    }
}

fn cis_turns(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * x.rem_euclid(1.0))
}

/// `(k/2pi)^{1/4} e^{2i pi k p q} sum_j c(j) e^{2i pi j p} e^{2i pi k tau (q + j/2k)^2}`,
/// summed over the `j` whose Gaussian factor exceeds `e^{-40}`.
pub(crate) fn theta_sum(params: &QuantParams, p: f64, q: f64, mut visit: impl FnMut(i64, Complex64)) {
    let k = params.k() as f64;
    let two_k = 2.0 * k;
    let w = params.window() + 1.0 / two_k;
    let lo = (two_k * (-q - w)).ceil() as i64;
    let hi = (two_k * (-q + w)).floor() as i64;
    let (alpha, beta) = (params.tau().re, params.beta());
    for j in lo..=hi {
        let u = q + j as f64 / two_k;
        let turns = j as f64 * p + k * alpha * u * u;
        visit(j, cis_turns(turns) * (-2.0 * PI * k * beta * u * u).exp());
    }
}

fn outer_factor(params: &QuantParams, p: f64, q: f64) -> Complex64 {
    cis_turns(params.k() as f64 * p * q) * params.prefactor()
}

/// `Psi_l(p mu + q lambda)`.
pub fn theta_basis_value(params: &QuantParams, l: i64, x: (f64, f64)) -> SectionValue {
    let two_k = params.dim() as i64;
    let r = l.rem_euclid(two_k);
    let mut s = Complex64::new(0.0, 0.0);
    theta_sum(params, x.0, x.1, |j, v| {
        if j.rem_euclid(two_k) == r {
            s += v;
        }
    });
    SectionValue::new(params, s * outer_factor(params, x.0, x.1))
}

/// `Psi_l(x)` for `l = 0..2k`, in the `Omega_mu` frame.
pub fn basis_values_at(params: &QuantParams, p: f64, q: f64) -> Vec<Complex64> {
    let two_k = params.dim() as i64;
    let mut out = vec![Complex64::new(0.0, 0.0); two_k as usize];
    theta_sum(params, p, q, |j, v| out[j.rem_euclid(two_k) as usize] += v);
    let f = outer_factor(params, p, q);
    out.iter_mut().for_each(|v| *v *= f);
    out
}

/// Basis of the quantization with lattice basis `(lambda, -mu)`, expressed in
/// the `Omega_mu` frame through `Omega_lambda = Omega_mu / sqrt(tau)`.
pub fn dual_basis_values_at(params: &QuantParams, p: f64, q: f64) -> Vec<Complex64> {
    let scale = 1.0 / params.tau().sqrt();
    let mut v = basis_values_at(&params.s_dual(), q, -p);
    v.iter_mut().for_each(|x| *x *= scale);
    v
}

/// A section sampled in the `Omega_mu` frame.
pub trait Section: Sync {
    fn value(&self, p: f64, q: f64) -> Complex64;
}

impl<F: Fn(f64, f64) -> Complex64 + Sync> Section for F {
    fn value(&self, p: f64, q: f64) -> Complex64 {
        self(p, q)
    }
}

/// `Psi_l` as a section.
#[derive(Clone, Copy, Debug)]
pub struct BasisSection {
    pub params: QuantParams,
    pub l: i64,
}

impl Section for BasisSection {
    fn value(&self, p: f64, q: f64) -> Complex64 {
        theta_basis_value(&self.params, self.l, (p, q)).value
    }
}

/// `sum_l c_l Psi_l` with `c` indexed by `Z/2kZ`.
#[derive(Clone, Debug)]
pub struct Combination {
    pub params: QuantParams,
    pub coeffs: Vec<Complex64>,
}

impl Combination {
    pub fn new(params: QuantParams, coeffs: Vec<Complex64>) -> Self {
        assert_eq!(coeffs.len(), params.dim(), "need one coefficient per residue mod 2k");
        Self { params, coeffs }
    }
}

impl Section for Combination {
    fn value(&self, p: f64, q: f64) -> Complex64 {
        let two_k = self.params.dim() as i64;
        let mut s = Complex64::new(0.0, 0.0);
        theta_sum(&self.params, p, q, |j, v| s += self.coeffs[j.rem_euclid(two_k) as usize] * v);
        s * outer_factor(&self.params, p, q)
    }
}

/// `(T*_{x0} s)(y) = e^{-i (k/2) omega(x0, y)} s(x0 + y)`.
#[derive(Clone, Debug)]
pub struct Translated<S> {
    pub k: u32,
    pub x0: (f64, f64),
    pub inner: S,
}

impl<S: Section> Section for Translated<S> {
    fn value(&self, p: f64, q: f64) -> Complex64 {
        let (p0, q0) = self.x0;
        // omega(x0, y) = 4 pi (p0 q - q0 p)
        let phase = Complex64::from_polar(1.0, -2.0 * PI * self.k as f64 * (p0 * q - q0 * p));
        phase * self.inner.value(p0 + p, q0 + q)
    }
}

pub fn heisenberg_translate<S: Section>(k: u32, x0: (f64, f64), section: S) -> Translated<S> {
    Translated { k, x0, inner: section }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_value_at_origin() {
        for k in [1u32, 5, 30] {
            let params = QuantParams::square(k).unwrap();
            let kf = k as f64;
            let series: f64 = (-5i64..=5).map(|n| (-2.0 * PI * kf * (n * n) as f64).exp()).sum();
            let want = (kf / (2.0 * PI)).powf(0.25) * series;
            let got = theta_basis_value(&params, 0, (0.0, 0.0));
            assert!((got.value - want).norm() < 1e-14 * want);
            assert!((got.norm - want * params.frame_norm()).abs() < 1e-14);
        }
    }

    #[test]
    fn vector_and_single_agree() {
        let params = QuantParams::new(7, Complex64::new(0.3, 0.8)).unwrap();
        let v = basis_values_at(&params, 0.37, 0.81);
        for l in 0..14 {
            assert!((v[l as usize] - theta_basis_value(&params, l, (0.37, 0.81)).value).norm() < 1e-14);
            assert_eq!(theta_basis_value(&params, l, (0.37, 0.81)), theta_basis_value(&params, l - 14, (0.37, 0.81)));
        }
    }
}
