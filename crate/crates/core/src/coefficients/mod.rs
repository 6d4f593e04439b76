//! Exact scalar arithmetic.
//!
//! Every coefficient in the crate is a [`Scalar`]: an element of one of three
//! exact fields selected by a [`FieldContext`]:
//!
//! * the rational function field `Q(q1, q2, q, s, A)` (only the variables that
//!   actually occur matter),
//! * the rationals `Q`,
//! * a prime field `F_p`.
//!
//! Rational functions are stored in a canonical form so that equality of values
//! is equality of representations. Laurent monomials are pulled out of the
//! denominator into the numerator, and the remaining ordinary polynomials are
//! made coprime with a multivariate gcd over `Z`.

mod ipoly;
mod laurent;
mod monomial;
mod parse;
mod ratfunc;
mod scalar;

pub use laurent::LaurentPoly;
pub use monomial::{Monomial, Var, NVARS};
pub use parse::parse_scalar;
pub use ratfunc::RationalFunction;
pub use scalar::{quantum_e, FieldContext, Fp, QuantumE, Scalar};

use thiserror::Error;

/// Errors raised by scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("operands live in different fields ({0} vs {1})")]
    ContextMismatch(String, String),
    #[error("variable {0} has no assigned value")]
    UnassignedVariable(Var),
    #[error("denominator vanishes under the specialization")]
    VanishingDenominator,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot represent {0} in {1}")]
    NotRepresentable(String, String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, CoeffError>;
