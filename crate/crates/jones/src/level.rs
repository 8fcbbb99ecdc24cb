use std::f64::consts::PI;

use laurent::{precise, reduce_exponent, root_table};
use num_bigint::BigInt;
use num_complex::Complex64;

use crate::{JonesError, KnotSpec};

/// Value of `J_l` at `t = -e^{i pi/2k}` for any integer color, using
/// `J_{-l} = -J_l` and the period `2k`.
pub fn colored_jones_at_level(knot: KnotSpec, l: i64, k: u32) -> Complex64 {
    assert!(k >= 2, "level must be at least 2");
    let (r, sign) = reduce_color(l, k);
    if r == 0 {
        return Complex64::new(0.0, 0.0);
    }
    let v = match knot {
        KnotSpec::Unknot => Complex64::new(unknot_value(r, k), 0.0),
        KnotSpec::Torus { a, b } => torus_value(a, b, r, k, &root_table(k)),
        KnotSpec::FigureEight => Complex64::new(Fig8Level::new(k).value(r), 0.0),
    };
    v * sign
}

/// `J_l` at the level-`k` root for `l = 0..2k`.
pub fn jones_values_at_level(knot: KnotSpec, k: u32) -> Vec<Complex64> {
    assert!(k >= 2, "level must be at least 2");
    let n = 2 * k as usize;
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    match knot {
        KnotSpec::Unknot => {
            for (l, v) in out.iter_mut().enumerate().skip(1) {
                *v = Complex64::new(unknot_value(l as i64, k), 0.0);
            }
        }
        KnotSpec::Torus { a, b } => {
            let table = root_table(k);
            for (l, v) in out.iter_mut().enumerate().skip(1) {
                *v = torus_value(a, b, l as i64, k, &table);
            }
        }
        KnotSpec::FigureEight => {
            let f = Fig8Level::new(k);
            for l in 1..=k as usize {
                let v = f.value(l as i64);
                out[l] = Complex64::new(v, 0.0);
                if l < k as usize {
                    out[n - l] = Complex64::new(-v, 0.0);
                }
            }
        }
    }
    out
}

/// `J~_l(e^{-2 i pi/k})` from `J_l(t) = J~_l(t^-4) (t^{2l} - t^{-2l}) / (t^2 - t^-2)`.
pub fn normalize_tilde(knot: KnotSpec, l: i64, k: u32) -> Result<Complex64, JonesError> {
    tilde_from_value(colored_jones_at_level(knot, l, k), l, k)
}

/// Same as [`normalize_tilde`] for an already computed `J_l` value.
pub fn tilde_from_value(j: Complex64, l: i64, k: u32) -> Result<Complex64, JonesError> {
    if l.rem_euclid(k as i64) == 0 {
        return Err(JonesError::DegenerateColor { l, k });
    }
    let kf = k as f64;
    Ok(j * ((PI / kf).sin() / (PI * l.rem_euclid(2 * k as i64) as f64 / kf).sin()))
}

fn reduce_color(l: i64, k: u32) -> (i64, f64) {
    let r = l.rem_euclid(2 * k as i64);
    if r > k as i64 {
        (2 * k as i64 - r, -1.0)
    } else {
        (r, 1.0)
    }
}

fn unknot_value(l: i64, k: u32) -> f64 {
    let kf = k as f64;
    (PI * l as f64 / kf).sin() / (PI / kf).sin()
}

fn torus_value(a: i64, b: i64, l: i64, k: u32, table: &[Complex64]) -> Complex64 {
    let ab = a * b;
    let pre = ab * (1 - l * l);
    let at = |e: i64| {
        let (r, neg) = reduce_exponent(e, k);
        if neg {
            -table[r]
        } else {
            table[r]
        }
    };
    let mut sum = Complex64::new(0.0, 0.0);
    let mut s = 1 - l;
    while s < l {
        sum += at(pre + ab * s * s - 2 * (a + b) * s + 2) - at(pre + ab * s * s - 2 * (a - b) * s - 2);
        s += 2;
    }
    // t^2 - t^-2 = 2 i sin(pi/k)
    sum / Complex64::new(0.0, 2.0 * (PI / k as f64).sin())
}

/// Figure-eight values at level `k` with `s_j = sin(pi j/k)`:
/// `J_n = (1/s_1) sum_m (-4)^m prod_{j=n-m}^{n+m} s_j`. The sum is real and
/// cancels heavily, so it runs in fixed point with enough bits to cover the
/// largest partial product.
pub struct Fig8Level {
    k: u32,
    bits: u64,
    sines: Vec<BigInt>,
}

impl Fig8Level {
    pub fn new(k: u32) -> Self {
        let bits = Self::required_bits(k);
        let sines = precise::sine_table(k, 2 * k as usize + 1, bits);
        Self { k, bits, sines }
    }

    /// Largest `log2 |term|` over all colors, plus guard bits.
    fn required_bits(k: u32) -> u64 {
        let kf = k as f64;
        let ls = |j: i64| (PI * j as f64 / kf).sin().abs().log2();
        let mut worst = 0f64;
        for n in 1..=k as i64 {
            let mut acc = ls(n);
            for m in 1..n.min(k as i64 - n) {
                acc += 2.0 + ls(n - m) + ls(n + m);
                worst = worst.max(acc);
            }
        }
        worst.ceil().max(0.0) as u64 + 96
    }

    pub fn precision_bits(&self) -> u64 {
        self.bits
    }

    /// `J_n` for `0 <= n <= k`.
    pub fn value(&self, n: i64) -> f64 {
        let k = self.k as i64;
        assert!((0..=k).contains(&n));
        if n == 0 || n == k {
            return 0.0;
        }
        let s = |j: i64| &self.sines[j as usize];
        let mut term = s(n).clone();
        let mut sum = term.clone();
        // Windows reaching 0 or k contain a vanishing factor.
        for m in 1..n.min(k - n) {
            term = precise::mul(&precise::mul(&term, s(n - m), self.bits), s(n + m), self.bits) * -4;
            sum += &term;
        }
        precise::to_f64(&sum, self.bits) / precise::to_f64(s(1), self.bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored_jones;

    #[test]
    fn unknot_sine_quotient() {
        for k in [5u32, 12, 200] {
            for l in 1..2 * k as i64 {
                let v = colored_jones_at_level(KnotSpec::Unknot, l, k);
                let want = (PI * l as f64 / k as f64).sin() / (PI / k as f64).sin();
                assert!((v.re - want).abs() < 1e-9 && v.im.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn agrees_with_exact_polynomials() {
        for knot in [KnotSpec::Unknot, KnotSpec::FigureEight, KnotSpec::trefoil(), KnotSpec::torus(3, 4).unwrap()] {
            for k in [3u32, 5, 8, 13] {
                for l in 1..=12 {
                    let exact = colored_jones(knot, l).unwrap().eval_root_of_unity(k);
                    let fast = colored_jones_at_level(knot, l, k);
                    assert!((exact - fast).norm() <= 1e-9 * exact.norm().max(1.0), "{knot} l={l} k={k}");
                }
            }
        }
    }

    #[test]
    fn figure_eight_color_one() {
        for k in [3u32, 10, 400] {
            assert!((Fig8Level::new(k).value(1) - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn tilde_degenerate() {
        assert!(normalize_tilde(KnotSpec::Unknot, 10, 10).is_err());
        assert!((normalize_tilde(KnotSpec::Unknot, 7, 10).unwrap() - 1.0).norm() < 1e-12);
    }
}
