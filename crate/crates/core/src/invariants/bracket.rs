//! Kauffman bracket of a braid closure by brute-force state sum.
//!
//! Deliberately independent of the rest of the crate: its own one-variable
//! Laurent polynomial type and its own loop counting.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::braid::BraidWord;

use super::{InvariantError, JonesPolynomial};

/// Largest crossing count the state sum accepts by default.
pub const DEFAULT_CROSSING_CAP: usize = 16;

/// Laurent polynomial in `A` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct APoly(BTreeMap<i32, BigInt>);

impl APoly {
    pub fn zero() -> Self {
        APoly(BTreeMap::new())
    }

    pub fn monomial(e: i32, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, BigInt::from(c));
        p
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `d = -A^2 - A^-2`, the value of a disjoint loop.
    pub fn loop_value() -> Self {
        Self::monomial(2, -1).add(&Self::monomial(-2, -1))
    }

    fn add_term(&mut self, e: i32, c: BigInt) {
        let slot = self.0.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i32, BigInt> {
        &self.0
    }

    pub fn add(&self, other: &APoly) -> APoly {
        let mut out = self.clone();
        for (e, c) in &other.0 {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &APoly) -> APoly {
        let mut out = APoly::zero();
        for (ea, ca) in &self.0 {
            for (eb, cb) in &other.0 {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> APoly {
        (0..k).fold(APoly::one(), |acc, _| acc.mul(self))
    }
}

impl fmt::Display for APoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.0.iter().rev().enumerate() {
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            f.write_str("A")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothing {
    A,
    B,
}

/// One term of the state sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketState {
    pub smoothings: Vec<Smoothing>,
    pub loops: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            let next = self.0[x];
            self.0[x] = r;
            x = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// Loops in the closure when crossing `k` is replaced by straight strands
/// (`horizontal[k] == false`) or by a cup-cap pair.
fn count_loops(strands: usize, gens: &[usize], horizontal: &[bool]) -> usize {
    let c = gens.len();
    let node = |level: usize, pos: usize| level * strands + pos;
    let mut uf = UnionFind((0..(c + 1) * strands).collect());
    for (k, (&g, &h)) in gens.iter().zip(horizontal).enumerate() {
        for p in 0..strands {
            let crossing = p + 1 == g || p == g;
            if !(h && crossing) {
                uf.union(node(k, p), node(k + 1, p));
            }
        }
        if h {
            uf.union(node(k, g - 1), node(k, g));
            uf.union(node(k + 1, g - 1), node(k + 1, g));
        }
    }
    for p in 0..strands {
        uf.union(node(c, p), node(0, p));
    }
    (0..(c + 1) * strands).filter(|&x| uf.find(x) == x).count()
}

/// Every smoothing state with its loop count, in binary counting order.
///
/// The A-smoothing of a positive crossing joins its two strands with a
/// cup-cap pair; for a negative crossing the roles of A and B swap.
pub fn bracket_states(b: &BraidWord) -> Vec<BracketState> {
    let gens: Vec<usize> = b
        .letters()
        .iter()
        .map(|l| l.unsigned_abs() as usize)
        .collect();
    let c = gens.len();
    (0..1u64 << c)
        .map(|mask| {
            let smoothings: Vec<Smoothing> = (0..c)
                .map(|k| {
                    if mask >> k & 1 == 0 {
                        Smoothing::A
                    } else {
                        Smoothing::B
                    }
                })
                .collect();
            let horizontal: Vec<bool> = smoothings
                .iter()
                .zip(b.letters())
                .map(|(s, &l)| (*s == Smoothing::A) == (l > 0))
                .collect();
            BracketState {
                loops: count_loops(b.strands(), &gens, &horizontal),
                smoothings,
            }
        })
        .collect()
}

/// `<closure(b)> = sum over states of A^(#A - #B) d^(loops - 1)`.
pub fn kauffman_bracket_with_cap(b: &BraidWord, cap: usize) -> Result<APoly, InvariantError> {
    if b.len() > cap {
        return Err(InvariantError::TooManyCrossings {
            crossings: b.len(),
            cap,
        });
    }
    let d = APoly::loop_value();
    let mut d_pows = vec![APoly::one()];
    let mut total = APoly::zero();
    for state in bracket_states(b) {
        let a = state
            .smoothings
            .iter()
            .filter(|s| **s == Smoothing::A)
            .count() as i32;
        let e = 2 * a - state.smoothings.len() as i32;
        while d_pows.len() < state.loops {
            let next = d_pows.last().unwrap().mul(&d);
            d_pows.push(next);
        }
        total = total.add(&APoly::monomial(e, 1).mul(&d_pows[state.loops - 1]));
    }
    Ok(total)
}

pub fn kauffman_bracket_oracle(b: &BraidWord) -> Result<APoly, InvariantError> {
    kauffman_bracket_with_cap(b, DEFAULT_CROSSING_CAP)
}

/// `(-A^3)^w <closure(b)>` with `w` the writhe, read in `t = A^4`.
///
/// The sign of the writhe factor and the direction of `t` are calibrated so
/// that the right-handed trefoil gets positive powers of `t`, matching the
/// Hecke side.
pub fn jones_via_bracket(b: &BraidWord) -> Result<JonesPolynomial, InvariantError> {
    let bracket = kauffman_bracket_oracle(b)?;
    let w = b.writhe();
    let unit = APoly::monomial(3, -1).pow(w.unsigned_abs() as u32);
    let unit = if w >= 0 {
        unit
    } else {
        // (-A^3)^-1 = -A^-3
        APoly::monomial(-3, -1).pow(w.unsigned_abs() as u32)
    };
    let f = unit.mul(&bracket);
    let mut s_terms = BTreeMap::new();
    for (e, c) in f.terms() {
        if e % 2 != 0 {
            return Err(InvariantError::OddBracketExponent);
        }
        // t = A^4 means s = A^2
        s_terms.insert(e / 2, c.clone());
    }
    Ok(JonesPolynomial::from_big_terms(
        s_terms,
        b.closure_components(),
    ))
}
