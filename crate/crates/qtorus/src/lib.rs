//! The quantum torus `L M = q M L` acting on sequences of Laurent
//! polynomials, exact verification of q-difference relations, the Habiro
//! bracket and the `q = 1` specialization against A-polynomials.

mod aj;
mod habiro;
mod op;
mod relation;
mod seq;

pub use aj::{aj_divisibility, aj_divisibility_nonabelian, epsilon, homogenize};
pub use habiro::{bracket as habiro_bracket, HabiroPoly};
pub use op::QTorusOp;
pub use relation::{
    relation_from_id, relation_names, standard_suite, verify_recurrence, BracketShift, Fig8Inhomogeneous, Fig8System,
    LinearSystem, RecurrenceReport, Relation, Row, TorusOneStep, TorusTwoStep,
};
pub use seq::{apply, apply_at, PolySequence};

#[derive(Debug, thiserror::Error)]
pub enum QTorusError {
    #[error("unknown relation `{0}`")]
    UnknownRelation(String),
    #[error("bad parameters for {relation}: {reason}")]
    BadParams { relation: String, reason: String },
    #[error(transparent)]
    Jones(#[from] jones::JonesError),
    #[error(transparent)]
    Laurent(#[from] laurent::LaurentError),
}
