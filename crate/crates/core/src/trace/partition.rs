use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::coefficients::QuantumE;

use super::TraceError;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TraceError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TraceError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The number being partitioned.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(start, len)` of each block of consecutive points, zero-based.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut k = 0;
        self.0
            .iter()
            .map(|&l| {
                let b = (k, l);
                k += l;
                b
            })
            .collect()
    }

    /// Prefix sums dominate: `mu_1 + ... + mu_j >= lambda_1 + ... + lambda_j`.
    pub fn dominates(&self, other: &Partition) -> Result<bool, TraceError> {
        if self.size() != other.size() {
            return Err(TraceError::SizeMismatch(self.size(), other.size()));
        }
        let (mut a, mut b) = (0, 0);
        for j in 0..self.len().max(other.len()) {
            a += self.0.get(j).copied().unwrap_or(0);
            b += other.0.get(j).copied().unwrap_or(0);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn strictly_dominates(&self, other: &Partition) -> Result<bool, TraceError> {
        Ok(self != other && self.dominates(other)?)
    }

    /// Every difference `lambda_i - lambda_{i+1}`, including the last part
    /// itself, is below `e`.
    pub fn is_e_restricted(&self, e: QuantumE) -> bool {
        let QuantumE::Finite(e) = e else {
            return true;
        };
        let padded = self.0.iter().copied().chain(std::iter::once(0));
        self.0
            .iter()
            .zip(padded.skip(1))
            .all(|(&a, b)| ((a - b) as u64) < e)
    }

    /// The braid whose closure is the basis element `v_lambda`: for each part a
    /// descending block `sigma_{k+l-1} ... sigma_{k+1}`.
    pub fn braid(&self) -> BraidWord {
        let letters = self
            .blocks()
            .into_iter()
            .flat_map(|(k, l)| (k + 1..k + l).rev().map(|i| i as i32))
            .collect();
        BraidWord::new(self.size().max(1), letters).expect("letters in range")
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The braid `b_lambda`; see [`Partition::braid`].
pub fn b_lambda(lambda: &Partition) -> BraidWord {
    lambda.braid()
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = TraceError;
    fn try_from(v: Vec<usize>) -> Result<Self, TraceError> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    /// `(3,2,1)`; the empty partition is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = TraceError;

    /// Accepts `(3,2,1)`, `3,2,1` or `3 2 1`.
    fn from_str(s: &str) -> Result<Self, TraceError> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| TraceError::Unparseable(s.to_string()))?;
        Partition::new(parts)
    }
}
