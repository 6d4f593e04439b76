//! Link invariants of braid closures.
//!
//! The HOMFLYPT polynomial is the normalized Markov trace of the Hecke image
//! over `Q(q1, q2)`. The Jones polynomial is its image under `q1 -> -s`,
//! `q2 -> s^3` with `s = t^(1/2)`. A Kauffman bracket state sum, sharing no
//! code with the Hecke pipeline, serves as an independent check.

mod bracket;
mod jones;

pub use bracket::{
    bracket_states, jones_via_bracket, kauffman_bracket_oracle, kauffman_bracket_with_cap, APoly,
    BracketState, Smoothing, DEFAULT_CROSSING_CAP,
};
pub use jones::JonesPolynomial;

use thiserror::Error;

use crate::braid::BraidWord;
use crate::coefficients::{FieldContext, Scalar, Var};
use crate::hecke::HeckeAlgebra;
use crate::trace::{MarkovTrace, TraceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error("Jones substitution did not give a Laurent polynomial in s: {0}")]
    NotLaurent(String),
    #[error("{crossings} crossings exceed the state-sum cap of {cap}")]
    TooManyCrossings { crossings: usize, cap: usize },
    #[error("bracket normalization left odd powers of A")]
    OddBracketExponent,
}

/// Computes invariants over the generic field, reusing trace values between
/// calls.
pub struct InvariantEngine {
    trace: MarkovTrace,
}

impl Default for InvariantEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl InvariantEngine {
    pub fn new() -> Self {
        let trace = MarkovTrace::new(&HeckeAlgebra::generic(1)).expect("q1 + q2 is a unit");
        InvariantEngine { trace }
    }

    /// The HOMFLYPT polynomial, normalized to `1` on the unknot.
    pub fn homflypt(&mut self, b: &BraidWord) -> Result<Scalar, InvariantError> {
        Ok(self.trace.trace_of_braid(b)?)
    }

    pub fn jones(&mut self, b: &BraidWord) -> Result<JonesPolynomial, InvariantError> {
        let p = self.homflypt(b)?;
        let rf = FieldContext::RationalFunctions;
        let s = rf.var(Var::S).expect("generic field has s");
        let cube = s.pow(3).expect("power");
        let v = p
            .specialize(&[(Var::Q1, -&s), (Var::Q2, cube)], rf)
            .map_err(|e| InvariantError::NotLaurent(e.to_string()))?;
        JonesPolynomial::from_scalar(&v, b.closure_components())
    }
}

pub fn homflypt(b: &BraidWord) -> Result<Scalar, InvariantError> {
    InvariantEngine::new().homflypt(b)
}

pub fn jones(b: &BraidWord) -> Result<JonesPolynomial, InvariantError> {
    InvariantEngine::new().jones(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::parse_scalar;

    fn word(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn rf(text: &str) -> Scalar {
        parse_scalar(text, FieldContext::RationalFunctions).unwrap()
    }

    #[test]
    fn homflypt_examples() {
        assert!(homflypt(&BraidWord::identity(1)).unwrap().is_one());
        assert_eq!(
            homflypt(&word(2, &[1, 1])).unwrap(),
            rf("(q1+q2) - q1*q2*(1+q1*q2)/(q1+q2)")
        );
        assert_eq!(
            homflypt(&word(2, &[1, 1, 1])).unwrap(),
            rf("(q1+q2)^2 - q1*q2 - q1*q2*(1+q1*q2)")
        );
    }

    #[test]
    fn jones_examples() {
        assert_eq!(jones(&BraidWord::identity(1)).unwrap().to_string(), "1");
        let trefoil = jones(&word(2, &[1, 1, 1])).unwrap();
        assert_eq!(trefoil.to_string(), "-t^4+t^3+t");
        let unlink = jones(&BraidWord::identity(2)).unwrap();
        assert_eq!(unlink.to_string(), "-s-s^-1");
        assert_eq!(unlink.components(), 2);
    }

    #[test]
    fn agrees_with_bracket_on_short_words() {
        let mut engine = InvariantEngine::new();
        let letters = [1, -1, 2, -2];
        for len in 0..=4u32 {
            for code in 0..4usize.pow(len) {
                let l: Vec<i32> = (0..len)
                    .map(|k| letters[code / 4usize.pow(k) % 4])
                    .collect();
                let b = word(3, &l);
                let j = engine.jones(&b).unwrap();
                assert_eq!(j, jones_via_bracket(&b).unwrap(), "{b}");
                let parity = (b.closure_components() as i32 - 1).rem_euclid(2);
                assert!(j.s_terms().keys().all(|e| e.rem_euclid(2) == parity), "{b}");
            }
        }
    }

    #[test]
    fn unlinks() {
        let mut engine = InvariantEngine::new();
        let d = JonesPolynomial::from_s_terms([(1, -1), (-1, -1)], 2);
        let mut want = JonesPolynomial::one();
        for n in 1..=4 {
            let got = engine.jones(&BraidWord::identity(n)).unwrap();
            assert_eq!(got.s_terms(), want.s_terms(), "{n} components");
            want = want.mul(&d);
        }
    }
}
