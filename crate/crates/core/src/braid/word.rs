use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use super::BraidError;

/// A word in the Artin generators on a fixed number of strands.
///
/// Letter `j > 0` is `sigma_j`, letter `j < 0` is `sigma_{|j|}^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(BraidError::GeneratorOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord::new(strands, Vec::new()).expect("at least one strand")
    }

    /// Parses `"1 -2 1"`, `"1,-2,1"` or `"B3: 1 -2 1"`.
    ///
    /// An inline `Bn:` prefix declares the strand count; otherwise `strands`
    /// must be given. When both are present they must agree.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self, BraidError> {
        let syntax = |pos: usize, msg: &str| BraidError::Syntax {
            pos,
            msg: msg.to_string(),
        };
        let trimmed_start = text.len() - text.trim_start().len();
        let mut body = &text[trimmed_start..];
        let mut offset = trimmed_start;
        let mut declared = None;
        if let Some(rest) = body.strip_prefix('B') {
            let colon = rest
                .find(':')
                .ok_or_else(|| syntax(offset + 1, "expected ':' after strand count"))?;
            let n: usize = rest[..colon]
                .trim()
                .parse()
                .map_err(|_| syntax(offset + 1, "invalid strand count"))?;
            declared = Some(n);
            body = &rest[colon + 1..];
            offset += colon + 2;
        }
        let n = match (declared, strands) {
            (Some(a), Some(b)) if a != b => return Err(BraidError::StrandConflict(a, b)),
            (Some(a), _) => a,
            (None, Some(b)) => b,
            (None, None) => return Err(BraidError::MissingStrands),
        };
        let mut letters = Vec::new();
        let bytes = body.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_ascii_whitespace() || c == b',' {
                i += 1;
                continue;
            }
            let start = i;
            if c == b'-' || c == b'+' {
                i += 1;
            }
            let digits = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if digits == i {
                return Err(syntax(offset + start, "expected a signed integer"));
            }
            if i < bytes.len() && !(bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
                return Err(syntax(offset + i, "unexpected character"));
            }
            let l: i32 = body[start..i]
                .parse()
                .map_err(|_| syntax(offset + start, "integer out of range"))?;
            letters.push(l);
        }
        BraidWord::new(n, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The product `self * other`: `self` stacked on top of `other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::DegreeMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Cancels adjacent pairs `j, -j` until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// The image in the symmetric group; letter signs are ignored.
    pub fn underlying_permutation(&self) -> Permutation {
        self.letters
            .iter()
            .fold(Permutation::identity(self.strands), |acc, &l| {
                acc.mul_simple(l.unsigned_abs() as usize)
            })
    }

    /// Exponent sum.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Exponent sum minus strand count.
    pub fn bennequin(&self) -> i64 {
        self.writhe() - self.strands as i64
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        self.underlying_permutation().cycle_count()
    }

    /// Adds a straight strand on the right.
    pub fn add_strand(&self) -> BraidWord {
        BraidWord {
            strands: self.strands + 1,
            letters: self.letters.clone(),
        }
    }

    /// `a * self * a^{-1}`.
    pub fn conjugate(&self, by: &BraidWord) -> Result<BraidWord, BraidError> {
        by.concat(self)?.concat(&by.inverse())
    }

    /// `sigma_n^{±1} * iota(self)`, a word on one more strand.
    ///
    /// The new generator is appended at the end; for closures this is the same
    /// link as prepending it, the two words being conjugate.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Inverse of [`stabilize`](Self::stabilize): requires the last generator
    /// to occur exactly once, as the final letter.
    pub fn destabilize(&self) -> Result<BraidWord, BraidError> {
        let top = self.strands as i32 - 1;
        let ok = self.strands >= 2
            && self.letters.last().is_some_and(|l| l.abs() == top)
            && self.letters.iter().filter(|l| l.abs() == top).count() == 1;
        if !ok {
            return Err(BraidError::CannotDestabilize);
        }
        Ok(BraidWord {
            strands: self.strands - 1,
            letters: self.letters[..self.letters.len() - 1].to_vec(),
        })
    }

    /// A uniformly random word of the given length.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
        let letters = if strands < 2 {
            Vec::new()
        } else {
            (0..len)
                .map(|_| {
                    let g = rng.random_range(1..strands as i32);
                    if rng.random_bool(0.5) {
                        g
                    } else {
                        -g
                    }
                })
                .collect()
        };
        BraidWord { strands, letters }
    }
}

impl fmt::Display for BraidWord {
    /// `B3: 1 -2 1`; parses back to the same word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            BraidWord::parse("1 1 1", Some(2)).unwrap().letters(),
            &[1, 1, 1]
        );
        assert_eq!(
            BraidWord::parse("1 -2 1", Some(3)).unwrap().letters(),
            &[1, -2, 1]
        );
        assert_eq!(
            BraidWord::parse("1,-2, 1", Some(3)).unwrap().letters(),
            &[1, -2, 1]
        );
        assert_eq!(
            BraidWord::parse("B3: 1 -2 1", None).unwrap(),
            w(3, &[1, -2, 1])
        );
        assert_eq!(
            BraidWord::parse("", Some(1)).unwrap(),
            BraidWord::identity(1)
        );
        assert_eq!(
            BraidWord::parse("3", Some(2)),
            Err(BraidError::GeneratorOutOfRange {
                letter: 3,
                strands: 2
            })
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            BraidWord::parse("1 x", Some(3)),
            Err(BraidError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            BraidWord::parse("1-2", Some(3)),
            Err(BraidError::Syntax { pos: 1, .. })
        ));
        assert!(matches!(
            BraidWord::parse("0", Some(3)),
            Err(BraidError::GeneratorOutOfRange { .. })
        ));
        assert_eq!(BraidWord::parse("1", None), Err(BraidError::MissingStrands));
        assert_eq!(
            BraidWord::parse("B3: 1", Some(4)),
            Err(BraidError::StrandConflict(3, 4))
        );
        assert!(matches!(
            BraidWord::parse("B3 1", None),
            Err(BraidError::Syntax { .. })
        ));
    }

    #[test]
    fn underlying_permutation_examples() {
        let p = |v: &[usize]| Permutation::from_images(v).unwrap();
        assert_eq!(w(2, &[1]).underlying_permutation(), p(&[2, 1]));
        assert_eq!(w(3, &[]).underlying_permutation(), p(&[1, 2, 3]));
        assert_eq!(w(3, &[1, 2]).underlying_permutation(), p(&[2, 3, 1]));
    }

    #[test]
    fn writhe_and_bennequin() {
        assert_eq!((w(2, &[1]).writhe(), w(2, &[1]).bennequin()), (1, -1));
        assert_eq!(
            (w(2, &[1, 1, 1]).writhe(), w(2, &[1, 1, 1]).bennequin()),
            (3, 1)
        );
        assert_eq!(
            (w(2, &[1, -1]).writhe(), w(2, &[1, -1]).bennequin()),
            (0, -2)
        );
    }

    #[test]
    fn stabilization() {
        let b = w(2, &[1, 1, 1]);
        let s = b.stabilize(true);
        assert_eq!(s, w(3, &[1, 1, 1, 2]));
        assert_eq!(s.destabilize().unwrap(), b);
        assert_eq!(
            w(3, &[2, 1, 2]).destabilize(),
            Err(BraidError::CannotDestabilize)
        );
        assert_eq!(
            w(3, &[2, 1]).destabilize(),
            Err(BraidError::CannotDestabilize)
        );
        assert_eq!(
            BraidWord::identity(1).destabilize(),
            Err(BraidError::CannotDestabilize)
        );
    }

    #[test]
    fn closure_components() {
        assert_eq!(BraidWord::identity(3).closure_components(), 3);
        assert_eq!(w(2, &[1]).closure_components(), 1);
        assert_eq!(w(3, &[1]).closure_components(), 2);
    }

    fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
        let g = (1..n as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        proptest::collection::vec(g, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
    }

    proptest! {
        #[test]
        fn permutation_is_multiplicative(u in arb_word(5, 8), v in arb_word(5, 8)) {
            let uv = u.concat(&v).unwrap().underlying_permutation();
            let composed = u.underlying_permutation().compose(&v.underlying_permutation()).unwrap();
            prop_assert_eq!(uv, composed);
        }

        #[test]
        fn bennequin_under_moves(b in arb_word(4, 8), a in arb_word(4, 6)) {
            prop_assert_eq!(b.conjugate(&a).unwrap().bennequin(), b.bennequin());
            prop_assert_eq!(b.stabilize(true).bennequin(), b.bennequin());
            prop_assert_eq!(b.stabilize(false).bennequin(), b.bennequin() - 2);
        }

        #[test]
        fn conjugation_undoes(b in arb_word(4, 8), a in arb_word(4, 6)) {
            let back = b.conjugate(&a).unwrap().conjugate(&a.inverse()).unwrap();
            prop_assert_eq!(back.free_reduce(), b.free_reduce());
        }

        #[test]
        fn free_reduction_keeps_permutation(b in arb_word(4, 12)) {
            let r = b.free_reduce();
            prop_assert_eq!(r.underlying_permutation(), b.underlying_permutation());
            prop_assert_eq!(r.writhe(), b.writhe());
            prop_assert_eq!((b.len() - r.len()) % 2, 0);
        }

        #[test]
        fn render_parse_round_trip(b in arb_word(5, 10)) {
            prop_assert_eq!(BraidWord::parse(&b.to_string(), None).unwrap(), b);
        }
    }
}
