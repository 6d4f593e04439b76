use std::fmt;

use serde::{Deserialize, Serialize};

use super::BraidError;

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// Products follow the braid stacking convention: `a.compose(b)` is the map
/// `i -> a(b(i))`, so the word `s_1 s_2` is the permutation `[2, 3, 1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    // zero-based images
    img: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            img: (0..n as u8).collect(),
        }
    }

    /// Builds from one-based images.
    pub fn from_images(images: &[usize]) -> Result<Self, BraidError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(BraidError::NotAPermutation(images.to_vec()));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            img: images.iter().map(|&x| (x - 1) as u8).collect(),
        })
    }

    /// The simple transposition `(i, i+1)`, one-based.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "simple transposition index out of range");
        Self::identity(n).mul_simple(i)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// One-based image of the one-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation, BraidError> {
        if self.degree() != other.degree() {
            return Err(BraidError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            img: other.img.iter().map(|&j| self.img[j as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { img: inv }
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let n = self.degree();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.img[i] > self.img[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `self * s_i`: swaps the entries in positions `i` and `i+1`.
    pub fn mul_simple(&self, i: usize) -> Permutation {
        let mut img = self.img.clone();
        img.swap(i - 1, i);
        Permutation { img }
    }

    /// `s_i * self`: swaps the values `i` and `i+1`.
    pub fn simple_mul(&self, i: usize) -> Permutation {
        let (a, b) = ((i - 1) as u8, i as u8);
        Permutation {
            img: self
                .img
                .iter()
                .map(|&x| {
                    if x == a {
                        b
                    } else if x == b {
                        a
                    } else {
                        x
                    }
                })
                .collect(),
        }
    }

    /// True when `length(self * s_i) < length(self)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.img[i - 1] > self.img[i]
    }

    /// The canonical reduced word, built by selection sort: the largest value
    /// not yet in place is bubbled right to its position, and the generators
    /// used for that are emitted after the word for the remaining prefix.
    ///
    /// For `w` with `w(j) = n` this is `reduced_word(u) ++ [n-1, n-2, ..., j]`
    /// where `u = w * s_j * ... * s_{n-1}` fixes `n`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.img.clone();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for m in (1..w.len()).rev() {
            let j = w.iter().position(|&x| x as usize == m).unwrap();
            blocks.push((j + 1..=m).rev().collect());
            w[j..=m].rotate_left(1);
        }
        blocks.into_iter().rev().flatten().collect()
    }

    /// The factorization `self = u * (s_{n-1} ... s_j)` with `u` fixing `n`.
    /// Returns `(u, j)`; `j == n` when `self` already fixes `n`.
    pub fn split_last(&self) -> (Permutation, usize) {
        let n = self.degree();
        let j = self.img.iter().position(|&x| x as usize == n - 1).unwrap();
        let mut img = self.img.clone();
        img[j..].rotate_left(1);
        (Permutation { img }, j + 1)
    }

    pub fn fixes_last(&self) -> bool {
        self.img
            .last()
            .is_none_or(|&x| x as usize + 1 == self.degree())
    }

    /// Drops the last point; requires `self` to fix it.
    pub fn restrict(&self) -> Permutation {
        debug_assert!(self.fixes_last());
        Permutation {
            img: self.img[..self.degree() - 1].to_vec(),
        }
    }

    /// Adds a fixed point `n+1`.
    pub fn extend(&self) -> Permutation {
        let mut img = self.img.clone();
        img.push(self.degree() as u8);
        Permutation { img }
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.img[i] as usize;
            }
        }
        cycles
    }

    /// All permutations of degree `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Permutation { img: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1))
                .rev()
                .find(|&i| cur[i] < cur[i + 1])
            else {
                return out;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = BraidError;
    fn try_from(v: Vec<usize>) -> Result<Self, BraidError> {
        Permutation::from_images(&v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.images().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
