use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::LaurentPoly;

/// The evaluation point `-e^{i pi / 2k}`, a primitive `4k`-th root of unity.
pub fn level_root(k: u32) -> Complex64 {
    -Complex64::from_polar(1.0, PI / (2.0 * k as f64))
}

/// Powers `root^r` for `r` in `0..2k`; the upper half follows from `root^{2k} = -1`.
pub fn root_table(k: u32) -> Vec<Complex64> {
    let n = 2 * k as u64;
    (0..n)
        .map(|r| {
            // (-1)^r e^{i pi r / 2k}, angle reduced exactly before the trig call.
            let ang = PI * r as f64 / n as f64;
            let z = Complex64::from_polar(1.0, ang);
            if r % 2 == 0 {
                z
            } else {
                -z
            }
        })
        .collect()
}

/// Reduces `e` to `(r, sign)` with `root^e = sign * root^r`, `0 <= r < 2k`.
pub fn reduce_exponent(e: i64, k: u32) -> (usize, bool) {
    let m = 4 * k as i64;
    let r = e.rem_euclid(m);
    let half = 2 * k as i64;
    if r >= half {
        ((r - half) as usize, true)
    } else {
        (r as usize, false)
    }
}

impl LaurentPoly {
    /// Exact fold of the coefficients into the `2k` residues of `t` modulo `t^{2k} = -1`.
    pub fn fold_root_of_unity(&self, k: u32) -> Vec<BigInt> {
        let mut buckets = vec![BigInt::zero(); 2 * k as usize];
        for (e, c) in self.terms() {
            let (r, neg) = reduce_exponent(e, k);
            if neg {
                buckets[r] -= c;
            } else {
                buckets[r] += c;
            }
        }
        buckets
    }

    /// Value at `t = -e^{i pi/2k}` via exponent reduction and a power table.
    pub fn eval_root_of_unity(&self, k: u32) -> Complex64 {
        assert!(k >= 1, "level must be positive");
        let table = root_table(k);
        self.fold_root_of_unity(k)
            .iter()
            .zip(&table)
            .filter(|(b, _)| !b.is_zero())
            .map(|(b, z)| z * b.to_f64().unwrap_or(f64::NAN))
            .sum()
    }

    /// Direct evaluation at an arbitrary nonzero complex point (Horner in `z`, then `z^min`).
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let (min_exp, coeffs) = self.dense();
        if coeffs.is_empty() {
            return Complex64::zero();
        }
        let mut acc = Complex64::zero();
        for c in coeffs.iter().rev() {
            acc = acc * z + c.to_f64().unwrap_or(f64::NAN);
        }
        acc * z.powi(min_exp as i32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_turn_is_one() {
        for k in [1u32, 2, 7, 200] {
            let p = LaurentPoly::monomial(1, 4 * k as i64);
            let v = p.eval_root_of_unity(k);
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn half_turn_is_minus_one() {
        let v = LaurentPoly::monomial(1, 10).eval_root_of_unity(5);
        assert!((v + 1.0).norm() < 1e-15);
    }

    #[test]
    fn t2_plus_inverse_at_level_two() {
        let p: LaurentPoly = "1*t^2 + 1*t^-2".parse().unwrap();
        let direct = p.eval_complex(level_root(2));
        assert!((p.eval_root_of_unity(2) - direct).norm() < 1e-12);
        // t^2 = e^{i pi/2} = i, so t^2 + t^-2 = 0.
        assert!(direct.norm() < 1e-12);
    }

    #[test]
    fn periodicity_is_bit_exact() {
        let p: LaurentPoly = "3*t^-5 + -7*t^2 + 11*t^9".parse().unwrap();
        for k in [3u32, 8, 41] {
            let q = p.shift(4 * k as i64);
            assert_eq!(p.eval_root_of_unity(k), q.eval_root_of_unity(k));
        }
    }
}
