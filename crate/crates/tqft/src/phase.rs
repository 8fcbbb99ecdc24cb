use std::f64::consts::PI;

use num_complex::Complex64;
use num_integer::Integer;

/// A complex number known up to the group `{e^{i pi (n/4 + n'/2k)}}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseClass {
    pub value: Complex64,
    pub k: u32,
}

impl PhaseClass {
    pub fn new(value: Complex64, k: u32) -> Self {
        Self { value, k }
    }

    pub fn modulus(&self) -> f64 {
        self.value.norm()
    }

    /// Generator angle of the ambiguity group: `pi gcd(k, 2) / 4k`.
    pub fn quantum(k: u32) -> f64 {
        PI * (k.gcd(&2)) as f64 / (4.0 * k as f64)
    }

    /// Distance of the angle of `z` to the ambiguity group.
    pub fn phase_residual(z: Complex64, k: u32) -> f64 {
        let step = Self::quantum(k);
        let a = z.arg() / step;
        (a - a.round()).abs() * step
    }

    /// Equal moduli and a ratio inside the ambiguity group, both to `tol`.
    pub fn equivalent(&self, other: &Self, tol: f64) -> bool {
        assert_eq!(self.k, other.k);
        let (a, b) = (self.modulus(), other.modulus());
        if (a - b).abs() > tol * a.max(b).max(1e-300) {
            return false;
        }
        if a == 0.0 {
            return true;
        }
        Self::phase_residual(self.value / other.value, self.k) <= tol
    }
}
