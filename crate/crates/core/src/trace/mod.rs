//! Partitions, the braids `b_lambda`, the normalized Markov trace and the
//! decomposition of closed braids in the basis `{v_lambda}` of the trace module.

mod decompose;
mod markov;
mod partition;

pub use decompose::{decompose_closure, decompose_closure_over, ClosureDecomposition, Decomposer};
pub use markov::{trace_of_braid, MarkovTrace};
pub use partition::{b_lambda, partitions_of, Partition};

use thiserror::Error;

use crate::braid::BraidError;
use crate::coefficients::CoeffError;
use crate::hecke::HeckeError;
use crate::specht::SpechtError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("{0:?} is not a partition")]
    NotAPartition(Vec<usize>),
    #[error("cannot parse partition '{0}'")]
    Unparseable(String),
    #[error("partitions of different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("q1 + q2 is not a unit")]
    SumNotUnit,
    #[error("character matrix is singular; use the generic field")]
    SingularCharacterMatrix,
    #[error("decomposition needs the generic field, not {0}")]
    NotGeneric(String),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Specht(#[from] Box<SpechtError>),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}
