use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::{LaurentError, LaurentPoly};

impl LaurentPoly {
    /// Canonical sparse text, ascending exponents: `1*t^-2 + -3*t^0 + 1*t^2`.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms().map(|(e, c)| format!("{c}*{var}^{e}")).collect::<Vec<_>>().join(" + ")
    }

    /// Parses the canonical format; also accepts bare constants and omitted
    /// coefficients or exponents (`t`, `3*t`, `t^4`, `-2`).
    pub fn parse_text(s: &str, var: &str) -> Result<Self, LaurentError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(LaurentError::Parse(s.to_string()));
        }
        let mut terms = Vec::new();
        for tok in compact.split('+') {
            terms.push(parse_term(tok, var).ok_or_else(|| LaurentError::Parse(tok.to_string()))?);
        }
        Ok(Self::from_terms(terms))
    }
}

fn parse_term(tok: &str, var: &str) -> Option<(BigInt, i64)> {
    if tok.is_empty() {
        return None;
    }
    let (coef, mono) = match tok.split_once('*') {
        Some((c, m)) => (c, Some(m)),
        None if tok.contains(var) => {
            let (sign, rest) = match tok.strip_prefix('-') {
                Some(r) => ("-1", r),
                None => ("1", tok),
            };
            (sign, Some(rest))
        }
        None => (tok, None),
    };
    let c = BigInt::from_str(coef).ok()?;
    let e = match mono {
        None => 0,
        Some(m) => {
            let rest = m.strip_prefix(var)?;
            if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')?.parse().ok()?
            }
        }
    };
    Some((c, e))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("t"))
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_text(s, "t")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        let s = "1*t^-2 + -3*t^0 + 1*t^2";
        let p: LaurentPoly = s.parse().unwrap();
        assert_eq!(p.to_string(), s);
    }

    #[test]
    fn lenient_forms() {
        let p: LaurentPoly = "t + -t^-1 + 3*t + 2".parse().unwrap();
        assert_eq!(p.to_string(), "-1*t^-1 + 2*t^0 + 4*t^1");
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn rejects_garbage() {
        assert!("1*x^2".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("1*t^".parse::<LaurentPoly>().is_err());
    }
}
