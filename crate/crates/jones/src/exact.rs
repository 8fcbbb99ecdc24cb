use laurent::{quantum_bracket, LaurentPoly};

use crate::{JonesError, KnotSpec};

/// `t^2 - t^-2`, the common denominator.
pub fn bracket_one() -> LaurentPoly {
    quantum_bracket(1)
}

/// Exact colored Jones polynomial `J_l` in `t`, `l >= 1`.
pub fn colored_jones(knot: KnotSpec, l: i64) -> Result<LaurentPoly, JonesError> {
    if l < 1 {
        return Err(JonesError::UnsupportedColor(l));
    }
    Ok(match knot {
        KnotSpec::Unknot => quantum_bracket(l).div_exact(&bracket_one())?,
        KnotSpec::Torus { a, b } => morton(a, b, l)?,
        KnotSpec::FigureEight => habiro_sum(l)?,
    })
}

/// Torus knot sum with integer index `s = 2r` running over `1-l, 3-l, ..., l-1`.
pub fn morton(a: i64, b: i64, l: i64) -> Result<LaurentPoly, JonesError> {
    let ab = a * b;
    let mut terms = Vec::with_capacity(2 * l as usize);
    let mut s = 1 - l;
    while s < l {
        terms.push((1, ab * s * s - 2 * (a + b) * s + 2));
        terms.push((-1, ab * s * s - 2 * (a - b) * s - 2));
        s += 2;
    }
    let num = LaurentPoly::from_terms(terms).shift(ab * (1 - l * l));
    Ok(num.div_exact(&bracket_one())?)
}

/// Figure-eight sum `sum_m (1/{1}) prod_{j=l-m}^{l+m} {j}`, stopped at `m = l-1`
/// since every later product contains `{0} = 0`.
pub fn habiro_sum(l: i64) -> Result<LaurentPoly, JonesError> {
    let mut prod = quantum_bracket(l);
    let mut total = prod.clone();
    for m in 1..l {
        prod = &(&prod * &quantum_bracket(l - m)) * &quantum_bracket(l + m);
        total += &prod;
    }
    Ok(total.div_exact(&bracket_one())?)
}
