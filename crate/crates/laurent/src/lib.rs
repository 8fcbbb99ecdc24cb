//! Exact Laurent polynomials over the integers, evaluation at the roots of
//! unity `-e^{i pi/2k}`, and two-variable polynomials in `(M, L)`.

mod bivariate;
mod eval;
mod poly;
pub mod precise;
mod text;

pub use bivariate::{LQuotient, Poly2};
pub use eval::{level_root, reduce_exponent, root_table};
pub use poly::{chebyshev, quantum_bracket, LaurentPoly};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LaurentError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not exactly divisible; remainder {remainder}")]
    NonDivisible { remainder: LaurentPoly },
    #[error("not divisible in Q(M)[L]; remainder {remainder}")]
    NonDivisibleL { remainder: String },
    #[error("cannot parse polynomial term `{0}`")]
    Parse(String),
}
