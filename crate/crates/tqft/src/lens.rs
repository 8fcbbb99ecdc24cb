use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::{rep_matrices, PhaseClass, TqftError, WordStrategy};

/// `<S e_1, rho(W) S e_1>` for a word `W` whose matrix has second column
/// `(p, q)`: the solid torus state glued to itself through `W`.
pub fn lens_invariant(p: i64, q: i64, k: u32, strategy: &dyn WordStrategy) -> Result<PhaseClass, TqftError> {
    let rep = rep_matrices(k)?;
    let word = strategy.word(p, q)?;
    let v = &rep.s * rep.basis(1);
    let w = rep.apply_word(&word, &v);
    Ok(PhaseClass::new(v.dotc(&w), k))
}

/// `sum_l k^{m(l)} e^{2 i pi q l^2 k/p} a_l` over `l in Z/pZ`. Order 0 keeps the
/// `k^{-1/2}` terms `a_l = sqrt(2/p) sin(2 pi q l/p) sin(2 pi l/p)`; order 1
/// adds the `k^{-3/2}` terms `-i sqrt 2 pi / p^{3/2}` at `l = 0` and `l = p/2`.
pub fn jeffrey_asymptotic(p: i64, q: i64, k: u32, order: u8) -> Result<Complex64, TqftError> {
    if !(1 < q && q < p) || order > 1 {
        return Err(TqftError::BadParameters(format!("need 1 < q < p and order 0 or 1, got ({p},{q}), order {order}")));
    }
    let kf = k as f64;
    let pf = p as f64;
    let mut s = Complex64::new(0.0, 0.0);
    for l in 0..p {
        // q l^2 k mod p, exactly
        let e = ((q as i128 * (l * l) as i128 * k as i128) % p as i128) as f64;
        let phase = Complex64::from_polar(1.0, 2.0 * PI * e / pf);
        if l == 0 || 2 * l == p {
            if order == 1 {
                s += phase * Complex64::new(0.0, -(2f64.sqrt()) * PI / pf.powf(1.5)) * kf.powf(-1.5);
            }
        } else {
            let a = (2.0 / pf).sqrt() * (2.0 * PI * (q * l) as f64 / pf).sin() * (2.0 * PI * l as f64 / pf).sin();
            s += phase * a / kf.sqrt();
        }
    }
    Ok(s)
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct LensReport {
    pub p: i64,
    pub q: i64,
    pub k: u32,
    pub order: u8,
    pub modulus_tqft: f64,
    pub modulus_jeffrey: f64,
    pub rel_gap: f64,
    /// `|order-0 sum| < 0.1 k^{-1/2}`: the comparison is not meaningful.
    pub degenerate: bool,
}

pub fn lens_compare(p: i64, q: i64, k: u32, order: u8, strategy: &dyn WordStrategy) -> Result<LensReport, TqftError> {
    let z = lens_invariant(p, q, k, strategy)?.modulus();
    let j = jeffrey_asymptotic(p, q, k, order)?.norm();
    let j0 = jeffrey_asymptotic(p, q, k, 0)?.norm();
    Ok(LensReport {
        p,
        q,
        k,
        order,
        modulus_tqft: z,
        modulus_jeffrey: j,
        rel_gap: (z - j).abs() / j,
        degenerate: j0 < 0.1 / (k as f64).sqrt(),
    })
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq)]
pub struct ManifoldConstants {
    /// `Z_k(S^3) = sqrt(2/k) sin(pi/k)`.
    pub s3: f64,
    /// `Z_k(S^2 x S^1) = k - 1`.
    pub s2_x_s1: f64,
}

pub fn manifold_constants(k: u32) -> Result<ManifoldConstants, TqftError> {
    if k < 3 {
        return Err(TqftError::LevelTooSmall(k));
    }
    let kf = k as f64;
    Ok(ManifoldConstants { s3: (2.0 / kf).sqrt() * (PI / kf).sin(), s2_x_s1: kf - 1.0 })
}

/// `Z(S^2 x S^1)^g / Z(S^3)^{g-1}`, the norm constant of a genus-`g` handlebody.
pub fn handlebody_norm(g: u32, k: u32) -> Result<f64, TqftError> {
    let c = manifold_constants(k)?;
    Ok(c.s2_x_s1.powi(g as i32) / c.s3.powi(g as i32 - 1))
}
