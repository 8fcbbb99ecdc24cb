use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::word::Letter;
use crate::TqftError;

/// Matrices of the level-`k` representation in the basis `e_1..e_{k-1}`,
/// with all `tau_k` phase powers set to zero.
#[derive(Clone, Debug)]
pub struct TqftRep {
    pub k: u32,
    /// `sqrt(2/k) sin(pi l l'/k)`.
    pub s: DMatrix<Complex64>,
    /// Diagonal of `T`, `e^{i pi (l^2 - 1)/2k}`.
    pub t: DVector<Complex64>,
    /// Curve operator of `mu`: `diag(-2 cos(pi l/k))`.
    pub mu: DMatrix<Complex64>,
    /// Curve operator of `lambda`: `e_l -> -e_{l-1} - e_{l+1}` with `e_0 = e_k = 0`.
    pub lambda: DMatrix<Complex64>,
}

pub fn rep_matrices(k: u32) -> Result<TqftRep, TqftError> {
    if k < 3 {
        return Err(TqftError::LevelTooSmall(k));
    }
    let d = k as usize - 1;
    let kf = k as f64;
    let c = |x: f64| Complex64::new(x, 0.0);
    let s = DMatrix::from_fn(d, d, |i, j| c((2.0 / kf).sqrt() * (PI * ((i + 1) * (j + 1)) as f64 / kf).sin()));
    let t = DVector::from_fn(d, |i, _| {
        let l = (i + 1) as f64;
        Complex64::from_polar(1.0, PI * (l * l - 1.0) / (2.0 * kf))
    });
    let mu = DMatrix::from_fn(d, d, |i, j| if i == j { c(-2.0 * (PI * (i + 1) as f64 / kf).cos()) } else { c(0.0) });
    let lambda = DMatrix::from_fn(d, d, |i, j| if i.abs_diff(j) == 1 { c(-1.0) } else { c(0.0) });
    Ok(TqftRep { k, s, t, mu, lambda })
}

impl TqftRep {
    pub fn dim(&self) -> usize {
        self.k as usize - 1
    }

    /// `e_l`, `1 <= l <= k-1`.
    pub fn basis(&self, l: usize) -> DVector<Complex64> {
        assert!((1..self.k as usize).contains(&l));
        let mut v = DVector::zeros(self.dim());
        v[l - 1] = Complex64::new(1.0, 0.0);
        v
    }

    /// `rho(letter) v`.
    pub fn apply_letter(&self, letter: Letter, v: &DVector<Complex64>) -> DVector<Complex64> {
        match letter {
            Letter::S => &self.s * v,
            Letter::T(n) => {
                let mut w = v.clone();
                for (x, t) in w.iter_mut().zip(self.t.iter()) {
                    *x *= t.powi(n as i32);
                }
                w
            }
        }
    }

    /// `rho(w_1 w_2 ... w_n) v`, applying the rightmost letter first.
    pub fn apply_word(&self, word: &[Letter], v: &DVector<Complex64>) -> DVector<Complex64> {
        word.iter().rev().fold(v.clone(), |acc, &g| self.apply_letter(g, &acc))
    }

    /// Dense `T`.
    pub fn t_matrix(&self) -> DMatrix<Complex64> {
        DMatrix::from_diagonal(&self.t)
    }
}
