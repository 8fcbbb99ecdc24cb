use std::fmt;
use std::str::FromStr;

use laurent::{LaurentPoly, Poly2};
use num_integer::Integer;

use crate::JonesError;

/// The supported knots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KnotSpec {
    Unknot,
    Torus { a: i64, b: i64 },
    FigureEight,
}

impl KnotSpec {
    pub fn torus(a: i64, b: i64) -> Result<Self, JonesError> {
        if a < 2 || b < 2 || a.gcd(&b) != 1 {
            return Err(JonesError::BadTorus { a, b });
        }
        Ok(KnotSpec::Torus { a, b })
    }

    pub fn trefoil() -> Self {
        KnotSpec::Torus { a: 2, b: 3 }
    }

    /// Normalized Alexander polynomial, `Delta(1) = 1`, `Delta(1/t) = Delta(t)`.
    pub fn alexander(&self) -> LaurentPoly {
        match *self {
            KnotSpec::Unknot => LaurentPoly::one(),
            KnotSpec::FigureEight => LaurentPoly::from_terms([(-1, -1), (3, 0), (-1, 1)]),
            KnotSpec::Torus { a, b } => {
                let num = &LaurentPoly::from_terms([(1, 1), (-1, 0)]) * &LaurentPoly::from_terms([(1, a * b), (-1, 0)]);
                let den = &LaurentPoly::from_terms([(1, a), (-1, 0)]) * &LaurentPoly::from_terms([(1, b), (-1, 0)]);
                num.div_exact(&den).expect("torus Alexander quotient is polynomial").shift((a + b - a * b - 1) / 2)
            }
        }
    }

    /// A-polynomial in `(M, L)`, including the abelian factor `L - 1`.
    pub fn a_polynomial(&self) -> Poly2 {
        let abelian = Poly2::from_terms([(1, 0, 1), (-1, 0, 0)]);
        &abelian * &self.a_polynomial_nonabelian()
    }

    /// The A-polynomial with the factor `L - 1` removed.
    pub fn a_polynomial_nonabelian(&self) -> Poly2 {
        match *self {
            KnotSpec::Unknot => Poly2::one(),
            KnotSpec::Torus { a, b } if a == 2 || b == 2 => Poly2::from_terms([(1, a * b, 1), (1, 0, 0)]),
            KnotSpec::Torus { a, b } => Poly2::from_terms([(1, 2 * a * b, 2), (-1, 0, 0)]),
            KnotSpec::FigureEight => {
                Poly2::from_terms([(1, 4, 2), (1, 4, 0), (-1, 8, 1), (1, 6, 1), (2, 4, 1), (1, 2, 1), (-1, 0, 1)])
            }
        }
    }

    /// Upper limit for `l/k` in the Melvin-Morton-Rozansky regime: the first
    /// root of `Delta(e^{2 i pi q})` or irreducible character, whichever is smaller.
    pub fn mmr_bound(&self) -> f64 {
        match *self {
            KnotSpec::Unknot => 0.5,
            KnotSpec::Torus { a, b } => 1.0 / (a * b) as f64,
            KnotSpec::FigureEight => 1.0 / 6.0,
        }
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotSpec::Unknot => write!(f, "unknot"),
            KnotSpec::Torus { a, b } => write!(f, "torus:{a},{b}"),
            KnotSpec::FigureEight => write!(f, "fig8"),
        }
    }
}

impl FromStr for KnotSpec {
    type Err = JonesError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || JonesError::UnknownKnot(s.to_string());
        match s.trim() {
            "unknot" => Ok(KnotSpec::Unknot),
            "fig8" | "figure-eight" | "4_1" => Ok(KnotSpec::FigureEight),
            "trefoil" => Ok(KnotSpec::trefoil()),
            other => {
                let rest = other.strip_prefix("torus:").ok_or_else(bad)?;
                let (a, b) = rest.split_once(',').ok_or_else(bad)?;
                let a = a.trim().parse().map_err(|_| bad())?;
                let b = b.trim().parse().map_err(|_| bad())?;
                KnotSpec::torus(a, b)
            }
        }
    }
}
