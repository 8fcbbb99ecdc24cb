use std::f64::consts::PI;

use jones::{jones_values_at_level, KnotSpec};
use num_complex::Complex64;
use theta::{Combination, QuantParams};

use crate::KnotStateError;

/// Coefficients of a section in the basis `Psi_l`, `l in Z/2kZ`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateCoeffs {
    pub k: u32,
    pub c: Vec<Complex64>,
    pub label: String,
}

impl StateCoeffs {
    pub fn new(k: u32, c: Vec<Complex64>, label: impl Into<String>) -> Self {
        assert_eq!(c.len(), 2 * k as usize);
        Self { k, c, label: label.into() }
    }

    /// `sum_l |c_l|^2`.
    pub fn norm_sq(&self) -> f64 {
        self.c.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn is_alternating(&self, tol: f64) -> bool {
        let n = self.c.len();
        (0..n).all(|l| (self.c[l] + self.c[(n - l) % n]).norm() <= tol)
    }

    /// Coefficients in the basis `e_l = (Psi_l - Psi_{-l}) / sqrt 2`, `l = 1..k-1`.
    pub fn e_coefficients(&self) -> Vec<Complex64> {
        let n = self.c.len();
        (1..self.k as usize).map(|l| (self.c[l] - self.c[n - l]) / 2f64.sqrt()).collect()
    }

    pub fn section(&self, params: QuantParams) -> Combination {
        Combination::new(params, self.c.clone())
    }
}

fn check_level(k: u32) -> Result<(), KnotStateError> {
    if k < 3 {
        return Err(KnotStateError::LevelTooSmall(k));
    }
    Ok(())
}

/// `c_l = sin(pi/k) k^{-1/2} J_l(-e^{i pi/2k})`.
pub fn knot_state(knot: KnotSpec, k: u32) -> Result<StateCoeffs, KnotStateError> {
    check_level(k)?;
    let f = (PI / k as f64).sin() / (k as f64).sqrt();
    let c = jones_values_at_level(knot, k).into_iter().map(|j| j * f).collect();
    Ok(StateCoeffs::new(k, c, knot.name()))
}

/// `c_l = 1 / (2 i sqrt k)` for every `l`.
pub fn ground_state(k: u32) -> Result<StateCoeffs, KnotStateError> {
    check_level(k)?;
    let c = Complex64::new(0.0, -0.5 / (k as f64).sqrt());
    Ok(StateCoeffs::new(k, vec![c; 2 * k as usize], "ground"))
}
