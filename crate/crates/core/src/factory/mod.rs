//! New LU-but-not-LC pairs by encoding one qubit of a seed pair with a CSS
//! code that has a diagonal non-Clifford transversal gate.

mod code;
mod lengths;
mod seed;

pub use code::{rep2, rm15, rm31, CssCode, DiagAction};
pub use lengths::{
    enumerate_lengths, enumerate_rm_lengths, length_plan, length_plan_rm, DistanceClass,
    LengthPlan, BASE_LENGTH,
};
pub use seed::{
    encode_pair, is_dlc_solution, pullback_dlc, transversal_angle_for, CounterexampleSeed,
};

use crate::oracle::OracleError;
use crate::stabilizer::StabilizerError;
use crate::text::ParseError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FactoryError {
    #[error("invalid CSS code: {0}")]
    InvalidCode(String),
    #[error("invalid seed: {0}")]
    InvalidSeed(String),
    #[error("qubit {} out of range for {n} qubits", qubit + 1)]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("qubit {} is constant on the subspace", .0 + 1)]
    ConstantQubit(usize),
    #[error("{code} has no non-Clifford transversal gate with logical angle {eighths}π/8")]
    NoTransversal { code: String, eighths: i64 },
    #[error(transparent)]
    Stabilizer(#[from] StabilizerError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
