//! Knot states `Z_k(E_K) = sum_l c_l Psi_l` built from colored Jones values,
//! their evaluation on grids, and numerical checks of where they concentrate.

mod abelian;
mod curves;
mod grid;
mod io;
mod state;

pub use abelian::{abelian_ratio_test, admissibility_scan, AbelianSample, AdmissibilityScan};
pub use curves::{Line, SupportCurve, SupportCurves, X8Curve};
pub use grid::{evaluate_grid, microsupport_report, MicrosupportReport, SectionGrid};
pub use io::{write_csv, write_pgm};
pub use state::{ground_state, knot_state, StateCoeffs};

#[derive(Debug, thiserror::Error)]
pub enum KnotStateError {
    #[error("level must be at least 3, got {0}")]
    LevelTooSmall(u32),
    #[error("no grid points farther than {margin} from the curves")]
    EmptyPartition { margin: f64 },
    #[error("margin {margin} must exceed the grid cell diagonal {diagonal}")]
    MarginTooSmall { margin: f64, diagonal: f64 },
    #[error("grid needs N >= 16, got {0}")]
    GridTooSmall(usize),
    #[error("q = {q} is not a regular point: {reason}")]
    IrregularPoint { q: f64, reason: String },
    #[error("unknown curve `{0}`")]
    UnknownCurve(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
