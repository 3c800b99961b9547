use thiserror::Error;

use crate::cyclic_model::IndObj;
use crate::tilting::TiltingError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("vertex {vertex} is outside 1..={cycle_len}")]
    VertexOutOfRange { vertex: usize, cycle_len: usize },

    #[error("{0:?} is not an admissible subset")]
    Inadmissible(Vec<usize>),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("{0} is not an object of this model")]
    UnknownObject(IndObj),

    #[error(transparent)]
    Tilting(#[from] TiltingError),

    #[error("coefficient matrix for tilting object {tilting} has rank {rank} < {expected}")]
    RankDeficient { tilting: String, rank: usize, expected: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
