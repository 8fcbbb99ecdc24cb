use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::{LaurentError, LaurentPoly};

/// Laurent polynomial in two commuting variables `M`, `L` with integer
/// coefficients, stored as `L`-exponent -> coefficient polynomial in `M`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly2 {
    rows: BTreeMap<i64, LaurentPoly>,
}

/// Quotient of a division in `Q(M)[L^{+-1}]`: `numer / denom` with `denom` in `Z[M^{+-1}]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LQuotient {
    pub numer: Poly2,
    pub denom: LaurentPoly,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(1, 0, 0)
    }

    /// `c * M^a * L^b`.
    pub fn term(c: impl Into<BigInt>, a: i64, b: i64) -> Self {
        Self::from_row(b, LaurentPoly::monomial(c, a))
    }

    /// `p(M) * L^b`.
    pub fn from_row(b: i64, p: LaurentPoly) -> Self {
        let mut rows = BTreeMap::new();
        if !p.is_zero() {
            rows.insert(b, p);
        }
        Self { rows }
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (C, i64, i64)>) -> Self {
        let mut out = Self::zero();
        for (c, a, b) in terms {
            out = &out + &Self::term(c, a, b);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Coefficient of `L^b` as a polynomial in `M`.
    pub fn row(&self, b: i64) -> LaurentPoly {
        self.rows.get(&b).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn rows(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> {
        self.rows.iter().map(|(b, p)| (*b, p))
    }

    pub fn l_range(&self) -> Option<(i64, i64)> {
        Some((*self.rows.keys().next()?, *self.rows.keys().next_back()?))
    }

    /// Multiplication by `M^a L^b`.
    pub fn shift(&self, a: i64, b: i64) -> Self {
        Self { rows: self.rows.iter().map(|(l, p)| (l + b, p.shift(a))).collect() }
    }

    pub fn scale_m(&self, p: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (b, r) in &self.rows {
            out = &out + &Self::from_row(*b, r * p);
        }
        out
    }

    pub fn eval(&self, m: Complex64, l: Complex64) -> Complex64 {
        self.rows.iter().map(|(b, p)| p.eval_complex(m) * l.powi(*b as i32)).sum()
    }

    /// All terms as `(coefficient, M-exponent, L-exponent)`.
    pub fn terms(&self) -> Vec<(BigInt, i64, i64)> {
        let mut out = Vec::new();
        for (b, p) in &self.rows {
            for (a, c) in p.terms() {
                out.push((c.clone(), a, *b));
            }
        }
        out
    }

    fn insert_row(&mut self, b: i64, p: LaurentPoly) {
        if p.is_zero() {
            self.rows.remove(&b);
        } else {
            self.rows.insert(b, p);
        }
    }

    /// Exact division in `Q(M)[L^{+-1}]`. Both sides are first multiplied by
    /// units `L^s` so that their lowest `L`-power is zero, then pseudo-divided.
    pub fn div_in_l(&self, b: &Poly2) -> Result<LQuotient, LaurentError> {
        let (blo, bhi) = b.l_range().ok_or(LaurentError::DivisionByZero)?;
        let Some((alo, _)) = self.l_range() else {
            return Ok(LQuotient { numer: Poly2::zero(), denom: LaurentPoly::one() });
        };
        let mut rem = self.shift(0, -alo);
        let bn = b.shift(0, -blo);
        let d = bhi - blo;
        let lc = bn.row(d);
        let mut quot = Poly2::zero();
        let mut power = 0u32;
        while let Some((_, top)) = rem.l_range() {
            if top < d {
                break;
            }
            let coef = rem.row(top);
            // Exact step when the leading coefficient divides; otherwise pseudo-step.
            match coef.div_exact(&lc) {
                Ok(c) => {
                    let step = Poly2::from_row(top - d, c);
                    rem = &rem - &(&step * &bn);
                    quot = &quot + &step;
                }
                Err(_) => {
                    rem = rem.scale_m(&lc);
                    quot = quot.scale_m(&lc);
                    power += 1;
                    let step = Poly2::from_row(top - d, coef);
                    rem = &rem - &(&step * &bn);
                    quot = &quot + &step;
                }
            }
        }
        if !rem.is_zero() {
            return Err(LaurentError::NonDivisibleL { remainder: rem.to_string() });
        }
        let mut denom = lc.pow(power);
        let mut numer = quot.shift(0, alo - blo);
        while power > 0 {
            let reduced: Option<Vec<(i64, LaurentPoly)>> =
                numer.rows().map(|(b, p)| p.div_exact(&lc).ok().map(|q| (b, q))).collect();
            match reduced {
                Some(rows) => {
                    numer = Poly2 { rows: rows.into_iter().collect() };
                    power -= 1;
                    denom = lc.pow(power);
                }
                None => break,
            }
        }
        Ok(LQuotient { numer, denom })
    }
}

impl Add<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (b, p) in &rhs.rows {
            let s = &out.row(*b) + p;
            out.insert_row(*b, s);
        }
        out
    }
}

impl Sub<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        self + &(-rhs)
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        Poly2 { rows: self.rows.iter().map(|(b, p)| (*b, -p)).collect() }
    }
}

impl Mul<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (b1, p1) in &self.rows {
            for (b2, p2) in &rhs.rows {
                let s = &out.row(b1 + b2) + &(p1 * p2);
                out.insert_row(b1 + b2, s);
            }
        }
        out
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms().into_iter().map(|(c, a, b)| format!("{c}*M^{a}*L^{b}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Display for LQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({}) / ({})", self.numer, self.denom.to_text("M"))
        }
    }
}

impl From<LaurentPoly> for Poly2 {
    fn from(p: LaurentPoly) -> Self {
        Poly2::from_row(0, p)
    }
}
