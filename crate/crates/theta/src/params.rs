use std::f64::consts::PI;

use num_complex::Complex64;

use crate::ThetaError;

/// Level `k` and complex structure `tau = alpha + i beta`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuantParams {
    k: u32,
    tau: Complex64,
}

impl QuantParams {
    pub fn new(k: u32, tau: Complex64) -> Result<Self, ThetaError> {
        if k == 0 {
            return Err(ThetaError::ZeroLevel);
        }
        if tau.im.is_nan() || tau.im <= 0.0 || !tau.re.is_finite() {
            return Err(ThetaError::BadTau(tau.to_string()));
        }
        Ok(Self { k, tau })
    }

    /// `tau = i`.
    pub fn square(k: u32) -> Result<Self, ThetaError> {
        Self::new(k, Complex64::i())
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn tau(&self) -> Complex64 {
        self.tau
    }

    pub fn beta(&self) -> f64 {
        self.tau.im
    }

    /// Dimension `2k` of the space of sections.
    pub fn dim(&self) -> usize {
        2 * self.k as usize
    }

    /// `||Omega_mu|| = (beta / 2 pi)^{1/4}`.
    pub fn frame_norm(&self) -> f64 {
        (self.beta() / (2.0 * PI)).powf(0.25)
    }

    /// `(k / 2 pi)^{1/4}`.
    pub(crate) fn prefactor(&self) -> f64 {
        (self.k as f64 / (2.0 * PI)).powf(0.25)
    }

    /// Half-width in `q` beyond which a theta term is below `e^{-40}` of the peak.
    pub(crate) fn window(&self) -> f64 {
        (40.0 / (2.0 * PI * self.k as f64 * self.beta())).sqrt()
    }

    /// Parameters for the basis `(lambda, -mu)`: `tau' = -1/tau`.
    pub fn s_dual(&self) -> Self {
        Self { k: self.k, tau: -1.0 / self.tau }
    }

    /// Parameters for the basis `(mu, mu + lambda)`: `tau' = tau + 1`.
    pub fn t_dual(&self) -> Self {
        Self { k: self.k, tau: self.tau + 1.0 }
    }
}
