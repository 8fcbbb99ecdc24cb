use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use jones::KnotSpec;
use laurent::LaurentPoly;

use crate::habiro::{bracket, HabiroPoly};
use crate::QTorusOp;

type Eval = dyn Fn(i64) -> LaurentPoly + Send + Sync;

/// Sequence `n -> f_n` of Laurent polynomials in `t`, memoized. Reads are
/// concurrent; a cache fill computes outside the lock and inserts the same
/// value whichever thread wins.
#[derive(Clone)]
pub struct PolySequence {
    eval: Arc<Eval>,
    cache: Arc<RwLock<HashMap<i64, LaurentPoly>>>,
}

impl PolySequence {
    pub fn new(f: impl Fn(i64) -> LaurentPoly + Send + Sync + 'static) -> Self {
        Self { eval: Arc::new(f), cache: Arc::new(RwLock::new(HashMap::new())) }
    }

    pub fn get(&self, n: i64) -> LaurentPoly {
        if let Some(v) = self.cache.read().unwrap().get(&n) {
            return v.clone();
        }
        let v = (self.eval)(n);
        self.cache.write().unwrap().entry(n).or_insert_with(|| v.clone());
        v
    }

    /// The colored Jones sequence, extended by `J_0 = 0` and `J_{-n} = -J_n`.
    pub fn jones(knot: KnotSpec) -> Self {
        Self::new(move |n| match n {
            0 => LaurentPoly::zero(),
            n if n > 0 => jones::colored_jones(knot, n).expect("positive color"),
            n => -jones::colored_jones(knot, -n).expect("positive color"),
        })
    }

    /// `n -> <P>_n`.
    pub fn bracket_of(p: HabiroPoly) -> Self {
        Self::new(move |n| bracket(&p, n))
    }

    /// Checks `f_{n+2k} = f_n` at `t = -e^{i pi/2k}` for the given samples.
    pub fn periodic_at(&self, n: i64, k: u32, tol: f64) -> bool {
        let a = self.get(n).eval_root_of_unity(k);
        let b = self.get(n + 2 * k as i64).eval_root_of_unity(k);
        (a - b).norm() <= tol * a.norm().max(1.0)
    }
}

/// `(op f)_n = sum c(q) q^{a n} f_{n+b}` with `q = t^2`.
pub fn apply_at(op: &QTorusOp, f: &PolySequence, n: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for ((a, b), c) in op.terms() {
        let term = &c.inflate(2) * &f.get(n + b);
        out += &term.shift(2 * a * n);
    }
    out
}

/// The sequence `op f`.
pub fn apply(op: &QTorusOp, f: &PolySequence) -> PolySequence {
    let op = op.clone();
    let f = f.clone();
    PolySequence::new(move |n| apply_at(&op, &f, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_shift() {
        let f = PolySequence::new(|n| LaurentPoly::monomial(n, n));
        let id = apply(&QTorusOp::identity(), &f);
        let sh = apply(&QTorusOp::l(), &f);
        let m = apply(&QTorusOp::m(), &f);
        for n in -3..4 {
            assert_eq!(id.get(n), f.get(n));
            assert_eq!(sh.get(n), f.get(n + 1));
            assert_eq!(m.get(n), f.get(n).shift(2 * n));
        }
    }

    #[test]
    fn memo_is_transparent() {
        let f = PolySequence::jones(KnotSpec::FigureEight);
        assert_eq!(f.get(3), f.get(3));
        assert_eq!(f.get(-3), -f.get(3));
        assert!(f.get(0).is_zero());
    }
}
