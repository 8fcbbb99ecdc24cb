//! Theta-series quantization of the torus `E/R` with `R = Z mu + Z lambda`,
//! `omega(mu, lambda) = 4 pi`. Points are `x = p mu + q lambda`; section values
//! are reported in the half-form frame `Omega_mu`.

mod basis;
mod checks;
mod params;
mod quadrature;

pub use basis::{
    basis_values_at, dual_basis_values_at, heisenberg_translate, theta_basis_value, BasisSection, Combination, Section,
    SectionValue, Translated,
};
pub use checks::{
    eigenrelation_deviation, gaussian_profile_deviation, orthonormality_deviation, s_transform_check, sample_points,
    t_transform_check,
};
pub use params::QuantParams;
pub use quadrature::{alternating_project, gram_matrix, inner_product, midpoints};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ThetaError {
    #[error("level must be positive")]
    ZeroLevel,
    #[error("tau must have positive imaginary part, got {0}")]
    BadTau(String),
    #[error("quadrature needs N >= 64, got {0}")]
    CoarseQuadrature(usize),
}
