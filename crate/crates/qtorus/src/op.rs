use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use laurent::{LaurentPoly, Poly2};

/// Element `sum c_{a,b}(q) M^a L^b` of the quantum torus `L M = q M L`,
/// kept in the normal order `M` before `L`. Coefficients are Laurent
/// polynomials in `q`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QTorusOp {
    terms: BTreeMap<(i64, i64), LaurentPoly>,
}

impl QTorusOp {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::term(LaurentPoly::one(), 0, 0)
    }

    /// `c(q) M^a L^b`.
    pub fn term(c: LaurentPoly, a: i64, b: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Self { terms }
    }

    /// `q^e M^a L^b` with unit coefficient sign `s`.
    pub fn mono(s: i64, e: i64, a: i64, b: i64) -> Self {
        Self::term(LaurentPoly::monomial(s, e), a, b)
    }

    pub fn m() -> Self {
        Self::mono(1, 0, 1, 0)
    }

    pub fn l() -> Self {
        Self::mono(1, 0, 0, 1)
    }

    /// A central scalar `c(q)`.
    pub fn scalar(c: LaurentPoly) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &LaurentPoly)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True when no `L` power appears, i.e. a multiplication operator in `M`.
    pub fn is_multiplication(&self) -> bool {
        self.terms.keys().all(|(_, b)| *b == 0)
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

    /// Product `self * rhs` using `L^b M^a = q^{ab} M^a L^b`.
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                let c = (c1 * c2).shift(b1 * a2);
                out.accumulate((a1 + a2, b1 + b2), c);
            }
        }
        out
    }

    /// Substitution `M -> q^s M`.
    pub fn rescale_m(&self, s: i64) -> Self {
        Self { terms: self.terms.iter().map(|((a, b), c)| ((*a, *b), c.shift(s * a))).collect() }
    }

    /// Value of a multiplication operator at `M = q^n`, as a polynomial in `q`.
    pub fn eval_m(&self, n: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for ((a, _), c) in &self.terms {
            out += &c.shift(a * n);
        }
        out
    }

    /// Specialization `q = 1`.
    pub fn epsilon(&self) -> Poly2 {
        let mut out = Poly2::zero();
        for ((a, b), c) in &self.terms {
            out = &out + &Poly2::term(c.eval_one(), *a, *b);
        }
        out
    }
}

impl Add<&QTorusOp> for &QTorusOp {
    type Output = QTorusOp;
    fn add(self, rhs: &QTorusOp) -> QTorusOp {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.accumulate(*k, c.clone());
        }
        out
    }
}

impl Sub<&QTorusOp> for &QTorusOp {
    type Output = QTorusOp;
    fn sub(self, rhs: &QTorusOp) -> QTorusOp {
        self + &(-rhs)
    }
}

impl Neg for &QTorusOp {
    type Output = QTorusOp;
    fn neg(self) -> QTorusOp {
        QTorusOp { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Mul<&QTorusOp> for &QTorusOp {
    type Output = QTorusOp;
    fn mul(self, rhs: &QTorusOp) -> QTorusOp {
        self.compose(rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QTorusOp> for QTorusOp {
            type Output = QTorusOp;
            fn $m(self, rhs: QTorusOp) -> QTorusOp {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QTorusOp {
    type Output = QTorusOp;
    fn neg(self) -> QTorusOp {
        -&self
    }
}

impl fmt::Display for QTorusOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|((a, b), c)| format!("({})*M^{a}*L^{b}", c.to_text("q"))).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relation() {
        let lm = QTorusOp::l() * QTorusOp::m();
        let qml = QTorusOp::mono(1, 1, 1, 1);
        assert_eq!(lm, qml);
        assert!((&lm - &qml).is_zero());
        assert!((lm - qml).epsilon().is_zero());
    }

    #[test]
    fn inverse_powers() {
        let linv = QTorusOp::mono(1, 0, 0, -1);
        assert_eq!(QTorusOp::l() * linv.clone(), QTorusOp::identity());
        let minv = QTorusOp::mono(1, 0, -1, 0);
        assert_eq!(minv.clone() * QTorusOp::m(), QTorusOp::identity());
        // L^-1 M = q^-1 M L^-1
        assert_eq!(linv * QTorusOp::m(), QTorusOp::mono(1, -1, 1, -1));
    }

    #[test]
    fn rescale_and_eval() {
        let op = &QTorusOp::mono(1, 0, 3, 0) + &QTorusOp::mono(-2, 1, -1, 0);
        // at M = q^2: q^6 - 2 q^-1
        assert_eq!(op.eval_m(2), LaurentPoly::from_terms([(1, 6), (-2, -1)]));
        // M -> qM
        assert_eq!(op.rescale_m(1).eval_m(2), op.eval_m(3));
    }
}
