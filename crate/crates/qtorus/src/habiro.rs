use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use laurent::{quantum_bracket, LaurentPoly};

use crate::QTorusOp;

/// Commutative Laurent polynomial `P(q, M, x) = sum c_{a,c}(q) M^a x^c`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HabiroPoly {
    terms: BTreeMap<(i64, i64), LaurentPoly>,
}

impl HabiroPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::mono(1, 0, 0, 0)
    }

    pub fn x() -> Self {
        Self::mono(1, 0, 0, 1)
    }

    /// `s q^e M^a x^c`.
    pub fn mono(s: i64, e: i64, a: i64, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if s != 0 {
            terms.insert((a, c), LaurentPoly::monomial(s, e));
        }
        Self { terms }
    }

    fn accumulate(&mut self, key: (i64, i64), c: LaurentPoly) {
        let s = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !s.is_zero() {
            self.terms.insert(key, s);
        }
    }

    /// Substitution `x -> q^s x`.
    pub fn shift_x(&self, s: i64) -> Self {
        Self { terms: self.terms.iter().map(|((a, c), p)| ((*a, *c), p.shift(s * c))).collect() }
    }

    /// `P(q, M, 1)` as a multiplication operator.
    pub fn at_x_one(&self) -> QTorusOp {
        let mut out = QTorusOp::zero();
        for ((a, _), p) in &self.terms {
            out = &out + &QTorusOp::term(p.clone(), *a, 0);
        }
        out
    }

    /// `P(q, q^n, q^{2m})` as a polynomial in `q`.
    pub fn eval(&self, n: i64, m: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for ((a, c), p) in &self.terms {
            out += &p.shift(a * n + 2 * c * m);
        }
        out
    }
}

impl Add<&HabiroPoly> for &HabiroPoly {
    type Output = HabiroPoly;
    fn add(self, rhs: &HabiroPoly) -> HabiroPoly {
        let mut out = self.clone();
        for (k, p) in &rhs.terms {
            out.accumulate(*k, p.clone());
        }
        out
    }
}

impl Neg for &HabiroPoly {
    type Output = HabiroPoly;
    fn neg(self) -> HabiroPoly {
        HabiroPoly { terms: self.terms.iter().map(|(k, p)| (*k, -p)).collect() }
    }
}

impl Sub<&HabiroPoly> for &HabiroPoly {
    type Output = HabiroPoly;
    fn sub(self, rhs: &HabiroPoly) -> HabiroPoly {
        self + &(-rhs)
    }
}

impl Mul<&HabiroPoly> for &HabiroPoly {
    type Output = HabiroPoly;
    fn mul(self, rhs: &HabiroPoly) -> HabiroPoly {
        let mut out = HabiroPoly::zero();
        for ((a1, c1), p1) in &self.terms {
            for ((a2, c2), p2) in &rhs.terms {
                out.accumulate((a1 + a2, c1 + c2), p1 * p2);
            }
        }
        out
    }
}

/// `<P>_n = sum_m ({n+m}! / ({1} {n-m-1}!)) P(q, q^n, q^{2m})` in `t`, using
/// the product form `prod_{j=n-m}^{n+m} {j}`. Terms with `m >= |n|` contain `{0}`.
pub fn bracket(p: &HabiroPoly, n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let mut prod = quantum_bracket(n);
    let mut total = LaurentPoly::zero();
    for m in 0..n.abs() {
        if m > 0 {
            prod = &(&prod * &quantum_bracket(n - m)) * &quantum_bracket(n + m);
        }
        total += &(&prod * &p.eval(n, m).inflate(2));
    }
    total.div_exact(&quantum_bracket(1)).expect("bracket sums are divisible by {1}")
}
