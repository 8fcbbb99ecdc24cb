//! The level-`k` TQFT representation of the torus: basis matrices, the
//! `SL_2(Z)` action, lens-space invariants against their large-`k`
//! expansion, the Melvin-Morton-Rozansky comparison, and the identification
//! with the theta-basis transform.

mod bridge;
mod lens;
mod mmr;
mod phase;
mod rep;
mod word;

pub use bridge::{bridge_check, BridgeReport};
pub use lens::{
    handlebody_norm, jeffrey_asymptotic, lens_compare, lens_invariant, manifold_constants, LensReport,
    ManifoldConstants,
};
pub use mmr::{mmr_check, MmrReport};
pub use phase::PhaseClass;
pub use rep::{rep_matrices, TqftRep};
pub use word::{
    sl2_word, strategy, strategy_names, word_matrix, Letter, NearestContinuedFraction, NegativeContinuedFraction, Word,
    WordStrategy,
};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum TqftError {
    #[error("level must be at least 3, got {0}")]
    LevelTooSmall(u32),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("delta = {delta} must lie in (0, {bound})")]
    DeltaOutOfRange { delta: f64, bound: f64 },
    #[error("unknown word strategy `{0}`")]
    UnknownStrategy(String),
}
