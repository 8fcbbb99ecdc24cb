use std::collections::BTreeMap;

use num_integer::Integer;
use once_cell::sync::Lazy;

use crate::TqftError;

/// `S` or `T^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    S,
    T(i64),
}

pub type Word = Vec<Letter>;

/// `S = [[0,-1],[1,0]]`, `T = [[1,1],[0,1]]`; the word's matrix is the
/// product left to right.
pub fn word_matrix(word: &[Letter]) -> [[i64; 2]; 2] {
    let mul = |a: [[i64; 2]; 2], b: [[i64; 2]; 2]| {
        [
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ]
    };
    word.iter().fold([[1, 0], [0, 1]], |m, g| match g {
        Letter::S => mul(m, [[0, -1], [1, 0]]),
        Letter::T(n) => mul(m, [[1, *n], [0, 1]]),
    })
}

/// A way to write an `SL_2(Z)` element with second column `(p, q)` as a word.
pub trait WordStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    /// Picks `a` with `|a q - p| < |q|` at each step of `p/q = a - 1/(p'/q')`.
    fn digit(&self, p: i64, q: i64) -> i64;

    fn word(&self, p: i64, q: i64) -> Result<Word, TqftError> {
        if !(1 < q && q < p) || p.gcd(&q) != 1 {
            return Err(TqftError::BadParameters(format!("need gcd(p,q) = 1 and 1 < q < p, got ({p},{q})")));
        }
        let (mut p, mut q) = (p, q);
        let mut word = Vec::new();
        while q != 0 {
            let a = self.digit(p, q);
            if !word.is_empty() {
                word.push(Letter::S);
            }
            if a != 0 {
                word.push(Letter::T(a));
            }
            (p, q) = (q, a * q - p);
        }
        // p = -1 leaves the second column negated; S^2 = -I fixes the sign.
        if p < 0 {
            word.push(Letter::S);
            word.push(Letter::S);
        }
        Ok(word)
    }
}

/// Ceiling digits: `p/q = a_1 - 1/(a_2 - ...)` with all `a_i >= 2` after the first.
pub struct NegativeContinuedFraction;

impl WordStrategy for NegativeContinuedFraction {
    fn name(&self) -> &'static str {
        "negative-cf"
    }
    fn digit(&self, p: i64, q: i64) -> i64 {
        Integer::div_ceil(&p, &q)
    }
}

/// Nearest-integer digits, giving shorter words with mixed signs.
pub struct NearestContinuedFraction;

impl WordStrategy for NearestContinuedFraction {
    fn name(&self) -> &'static str {
        "nearest-cf"
    }
    fn digit(&self, p: i64, q: i64) -> i64 {
        let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
        Integer::div_floor(&(2 * p + q), &(2 * q))
    }
}

static STRATEGIES: Lazy<BTreeMap<&'static str, Box<dyn WordStrategy>>> = Lazy::new(|| {
    let list: Vec<Box<dyn WordStrategy>> =
        vec![Box::new(NegativeContinuedFraction), Box::new(NearestContinuedFraction)];
    list.into_iter().map(|s| (s.name(), s)).collect()
});

pub fn strategy_names() -> Vec<&'static str> {
    STRATEGIES.keys().copied().collect()
}

pub fn strategy(name: &str) -> Result<&'static dyn WordStrategy, TqftError> {
    STRATEGIES.get(name).map(|b| b.as_ref()).ok_or_else(|| TqftError::UnknownStrategy(name.into()))
}

/// Word from the negative continued fraction.
pub fn sl2_word(p: i64, q: i64) -> Result<Word, TqftError> {
    NegativeContinuedFraction.word(p, q)
}
