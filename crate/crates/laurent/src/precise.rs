//! Fixed-point real arithmetic on big integers: a value `x` is held as the
//! integer `round(x * 2^bits)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

const GUARD: u64 = 64;

fn one(bits: u64) -> BigInt {
    BigInt::one() << bits
}

/// Product of two fixed-point numbers at the same scale.
pub fn mul(a: &BigInt, b: &BigInt, bits: u64) -> BigInt {
    (a * b) >> bits
}

/// `atan(1/x)` by its alternating series.
fn atan_inv(x: u64, bits: u64) -> BigInt {
    let x2 = BigInt::from(x * x);
    let mut power = one(bits) / x;
    let mut sum = power.clone();
    let mut n = 1u64;
    loop {
        power = &power / &x2;
        let term = &power / (2 * n + 1);
        if term.is_zero() {
            break;
        }
        if n % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        n += 1;
    }
    sum
}

/// `pi * 2^bits` (Machin's formula).
pub fn pi(bits: u64) -> BigInt {
    let w = bits + GUARD;
    let v = atan_inv(5, w) * 16 - atan_inv(239, w) * 4;
    v >> GUARD
}

/// `(cos x, sin x)` for a fixed-point `|x| <= 2` by Taylor series.
pub fn cos_sin(x: &BigInt, bits: u64) -> (BigInt, BigInt) {
    let w = bits + GUARD;
    let x = x << GUARD;
    let x2 = mul(&x, &x, w);
    let mut c = one(w);
    let mut s = x.clone();
    let mut tc = one(w);
    let mut ts = x;
    let mut n = 1u64;
    loop {
        tc = -mul(&tc, &x2, w) / ((2 * n - 1) * (2 * n));
        ts = -mul(&ts, &x2, w) / ((2 * n) * (2 * n + 1));
        if tc.is_zero() && ts.is_zero() {
            break;
        }
        c += &tc;
        s += &ts;
        n += 1;
    }
    (c >> GUARD, s >> GUARD)
}

/// `sin(pi j / k) * 2^bits` for `j = 0..count`, via repeated complex rotation.
pub fn sine_table(k: u32, count: usize, bits: u64) -> Vec<BigInt> {
    let w = bits + GUARD;
    let theta = pi(w) / k;
    let (c1, s1) = cos_sin(&theta, w);
    let mut out = Vec::with_capacity(count);
    let (mut c, mut s) = (one(w), BigInt::zero());
    for _ in 0..count {
        out.push(&s >> GUARD);
        let nc = mul(&c, &c1, w) - mul(&s, &s1, w);
        let ns = mul(&s, &c1, w) + mul(&c, &s1, w);
        c = nc;
        s = ns;
    }
    out
}

/// Nearest `f64` to a fixed-point value.
pub fn to_f64(x: &BigInt, bits: u64) -> f64 {
    let nb = x.bits();
    if nb <= 60 {
        return x.to_f64().unwrap() * 2f64.powi(-(bits as i32));
    }
    let excess = nb - 60;
    let head = (x.abs() >> excess).to_f64().unwrap();
    let v = head * 2f64.powi(excess as i32 - bits as i32);
    if x.is_negative() {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn pi_digits() {
        let p = pi(200);
        assert!((to_f64(&p, 200) - PI).abs() < 1e-15);
        // Known 30-digit prefix.
        let scaled = (p * BigInt::from(10u64).pow(30)) >> 200u64;
        assert_eq!(scaled.to_string(), "3141592653589793238462643383279");
    }

    #[test]
    fn sines_match_f64() {
        let k = 37;
        let tab = sine_table(k, 2 * k as usize + 1, 128);
        for (j, s) in tab.iter().enumerate() {
            let want = (PI * j as f64 / k as f64).sin();
            assert!((to_f64(s, 128) - want).abs() < 1e-15, "j={j}");
        }
    }

    #[test]
    fn pythagoras_high_precision() {
        let bits = 400;
        let x = pi(bits) / 7;
        let (c, s) = cos_sin(&x, bits);
        let err = mul(&c, &c, bits) + mul(&s, &s, bits) - one(bits);
        assert!(err.abs() < BigInt::from(16));
    }
}
