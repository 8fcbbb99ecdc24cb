use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::LaurentError;

/// Laurent polynomial in one variable with exact integer coefficients.
///
/// Stored densely from `min_exp`; the first and last stored coefficients are
/// nonzero unless the polynomial is zero, in which case `coeffs` is empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { min_exp: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * t^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_dense(e, vec![c.into()])
    }

    /// The variable itself, `t`.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds from a dense coefficient run starting at `min_exp`, trimming zeros.
    pub fn from_dense(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { min_exp, coeffs };
        p.normalize();
        p
    }

    /// Builds from sparse `(coefficient, exponent)` pairs; repeated exponents add up.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (C, i64)>) -> Self {
        let terms: Vec<(BigInt, i64)> = terms.into_iter().map(|(c, e)| (c.into(), e)).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.1).min().unwrap();
        let hi = terms.iter().map(|t| t.1).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (c, e) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.min_exp = 0;
            }
            Some(i) => {
                let j = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                self.coeffs.truncate(j + 1);
                self.coeffs.drain(..i);
                self.min_exp += i as i64;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (`None` for zero).
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.min_exp;
        if self.is_zero() || i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Multiplication by `t^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let min_exp = self.min_exp.checked_add(e).expect("exponent overflow");
        Self { min_exp, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_dense(self.min_exp, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Substitution `t -> t^-1`.
    pub fn reflect(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                Self { min_exp: -hi, coeffs }
            }
        }
    }

    /// Substitution `t -> t^m` for `m != 0`.
    pub fn inflate(&self, m: i64) -> Self {
        assert!(m != 0, "inflate by zero");
        Self::from_terms(self.terms().map(|(e, c)| (c.clone(), e.checked_mul(m).expect("exponent overflow"))))
    }

    /// Inverse of [`inflate`](Self::inflate) when every exponent is a multiple of `m`.
    pub fn deflate(&self, m: i64) -> Option<Self> {
        if self.terms().any(|(e, _)| e.rem_euclid(m) != 0) {
            return None;
        }
        Some(Self::from_terms(self.terms().map(|(e, c)| (c.clone(), e / m))))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact quotient `self / b`.
    pub fn div_exact(&self, b: &Self) -> Result<Self, LaurentError> {
        let (q, r) = self.div_rem(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(LaurentError::NonDivisible { remainder: r })
        }
    }

    /// Long division aligned at the top degree. The remainder's span lies within
    /// the lowest `span(b)` exponents of `self`'s span; it is zero iff `b` divides `self`.
    pub fn div_rem(&self, b: &Self) -> Result<(Self, Self), LaurentError> {
        if b.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok((Self::zero(), Self::zero()));
        }
        let lb = b.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let nb = b.coeffs.len();
        if rem.len() < nb {
            return Ok((Self::zero(), self.clone()));
        }
        let nq = rem.len() - nb + 1;
        let mut quot = vec![BigInt::zero(); nq];
        for i in (0..nq).rev() {
            let top = &rem[i + nb - 1];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lb);
            if !r.is_zero() {
                // Not integral; leave the rest as remainder.
                break;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                rem[i + j] -= &qc * bc;
            }
            quot[i] = qc;
        }
        let q = Self::from_dense(self.min_exp - b.min_exp, quot);
        let r = Self::from_dense(self.min_exp, rem);
        Ok((q, r))
    }

    /// Greatest absolute coefficient bit length.
    pub fn coeff_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.abs().bits()).max().unwrap_or(0)
    }

    pub(crate) fn dense(&self) -> (i64, &[BigInt]) {
        (self.min_exp, &self.coeffs)
    }
}

fn add_into(acc: &mut LaurentPoly, other: &LaurentPoly, sign: bool) {
    if other.is_zero() {
        return;
    }
    if acc.is_zero() {
        *acc = if sign { other.clone() } else { -other };
        return;
    }
    let lo = acc.min_exp.min(other.min_exp);
    let hi = acc.max_exp().unwrap().max(other.max_exp().unwrap());
    let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
    let off = (acc.min_exp - lo) as usize;
    for (i, c) in std::mem::take(&mut acc.coeffs).into_iter().enumerate() {
        coeffs[off + i] = c;
    }
    let off = (other.min_exp - lo) as usize;
    for (i, c) in other.coeffs.iter().enumerate() {
        if sign {
            coeffs[off + i] += c;
        } else {
            coeffs[off + i] -= c;
        }
    }
    *acc = LaurentPoly::from_dense(lo, coeffs);
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, true);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, false);
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r += rhs;
        r
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r -= rhs;
        r
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let min_exp = self.min_exp.checked_add(rhs.min_exp).expect("exponent overflow");
        LaurentPoly::from_dense(min_exp, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { min_exp: self.min_exp, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

/// Quantum integer `{n} = q^n - q^-n` written in `t` with `q = t^2`.
pub fn quantum_bracket(n: i64) -> LaurentPoly {
    LaurentPoly::from_terms([(1, 2 * n), (-1, -2 * n)])
}

/// Chebyshev-type sequence `T_0 = 0, T_1 = 1, T_{l+1} + x T_l + T_{l-1} = 0`
/// with `x` given as a polynomial.
pub fn chebyshev(x: &LaurentPoly, n: usize) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(), LaurentPoly::one()];
    while out.len() <= n {
        let l = out.len();
        let next = -(x * &out[l - 1]) - out[l - 2].clone();
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        let a = p(&[(1, 1), (-1, -1)]);
        let b = p(&[(1, 1), (1, -1)]);
        assert_eq!(&a * &b, p(&[(1, 2), (-1, -2)]));
    }

    #[test]
    fn canonical_trim() {
        let z = LaurentPoly::from_dense(-3, vec![0.into(), 0.into()]);
        assert!(z.is_zero());
        assert_eq!(z.min_exp(), None);
        let x = LaurentPoly::from_dense(-3, vec![0.into(), 2.into(), 0.into()]);
        assert_eq!(x.min_exp(), Some(-2));
        assert_eq!(x.max_exp(), Some(-2));
    }

    #[test]
    fn bracket_product() {
        // {2}{3} = q^5 - q - q^-1 + q^-5
        let prod = &quantum_bracket(2) * &quantum_bracket(3);
        assert_eq!(prod, p(&[(1, 10), (-1, 2), (-1, -2), (1, -10)]));
    }

    #[test]
    fn forced_factorizations() {
        let a = p(&[(1, 2), (-1, -2)]);
        let b = p(&[(1, 1), (-1, -1)]);
        assert_eq!(a.div_exact(&b).unwrap(), p(&[(1, 1), (1, -1)]));
        let a = p(&[(1, 4), (-1, -4)]);
        let b = p(&[(1, 2), (-1, -2)]);
        assert_eq!(a.div_exact(&b).unwrap(), p(&[(1, 2), (1, -2)]));
    }

    #[test]
    fn nondivisible_reports_remainder() {
        let a = p(&[(1, 2), (1, 0)]);
        let b = p(&[(1, 1), (-1, 0)]);
        match a.div_exact(&b) {
            Err(LaurentError::NonDivisible { remainder }) => assert_eq!(remainder, p(&[(2, 0)])),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn reflect_and_inflate() {
        let a = p(&[(3, -2), (5, 7)]);
        assert_eq!(a.reflect(), p(&[(3, 2), (5, -7)]));
        assert_eq!(a.reflect().reflect(), a);
        assert_eq!(a.inflate(2).deflate(2).unwrap(), a);
        assert!(a.deflate(2).is_none());
    }

    #[test]
    fn chebyshev_values_at_minus_two() {
        // x = -2 gives T_l = l.
        let t = chebyshev(&LaurentPoly::from(-2), 6);
        for (l, v) in t.iter().enumerate() {
            assert_eq!(*v, LaurentPoly::from(l as i64));
        }
    }
}
