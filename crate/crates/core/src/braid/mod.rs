//! Braid words on a fixed number of strands and their image in the symmetric
//! group.

mod perm;
mod word;

pub use perm::Permutation;
pub use word::BraidWord;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("{0:?} is not a permutation")]
    NotAPermutation(Vec<usize>),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("generator {letter} out of range for {strands} strands")]
    GeneratorOutOfRange { letter: i32, strands: usize },
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("strand count not given")]
    MissingStrands,
    #[error("inline strand count {0} conflicts with {1}")]
    StrandConflict(usize, usize),
    #[error("word is not a stabilization")]
    CannotDestabilize,
}

/// One Markov move, replayable on any word of suitable shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum MarkovMoveRecord {
    Conjugate(BraidWord),
    StabilizePositive,
    StabilizeNegative,
    DestabilizePositive,
    DestabilizeNegative,
}

impl MarkovMoveRecord {
    pub fn apply(&self, b: &BraidWord) -> Result<BraidWord, BraidError> {
        match self {
            MarkovMoveRecord::Conjugate(a) => b.conjugate(a),
            MarkovMoveRecord::StabilizePositive => Ok(b.stabilize(true)),
            MarkovMoveRecord::StabilizeNegative => Ok(b.stabilize(false)),
            MarkovMoveRecord::DestabilizePositive | MarkovMoveRecord::DestabilizeNegative => {
                let want_positive = matches!(self, MarkovMoveRecord::DestabilizePositive);
                match b.letters().last() {
                    Some(&l) if (l > 0) == want_positive => b.destabilize(),
                    _ => Err(BraidError::CannotDestabilize),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_replay() {
        let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let up = MarkovMoveRecord::StabilizeNegative.apply(&b).unwrap();
        assert_eq!(up.letters(), &[1, 1, 1, -2]);
        assert_eq!(
            MarkovMoveRecord::DestabilizePositive.apply(&up),
            Err(BraidError::CannotDestabilize)
        );
        assert_eq!(MarkovMoveRecord::DestabilizeNegative.apply(&up).unwrap(), b);
        let a = BraidWord::new(2, vec![-1]).unwrap();
        let c = MarkovMoveRecord::Conjugate(a).apply(&b).unwrap();
        assert_eq!(c.letters(), &[-1, 1, 1, 1, 1]);
    }
}
