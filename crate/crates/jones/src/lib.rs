//! Colored Jones polynomials of the unknot, torus knots and the figure-eight
//! knot, their values at `t = -e^{i pi/2k}`, Alexander and A-polynomials.

mod exact;
mod knot;
mod level;

pub use exact::{bracket_one, colored_jones, habiro_sum, morton};
pub use knot::KnotSpec;
pub use level::{colored_jones_at_level, jones_values_at_level, normalize_tilde, tilde_from_value, Fig8Level};

#[derive(Debug, thiserror::Error)]
pub enum JonesError {
    #[error("unknown knot `{0}` (expected unknot, fig8 or torus:a,b)")]
    UnknownKnot(String),
    #[error("torus knot needs coprime a, b >= 2, got ({a},{b})")]
    BadTorus { a: i64, b: i64 },
    #[error("color {0} is not positive")]
    UnsupportedColor(i64),
    #[error("color {l} is a multiple of the level {k}")]
    DegenerateColor { l: i64, k: u32 },
    #[error(transparent)]
    Laurent(#[from] laurent::LaurentError),
}
