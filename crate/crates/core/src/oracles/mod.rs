//! Brute-force references used to cross-check the Hecke algebra code.
//!
//! Nothing here calls `HeckeAlgebra::mul`: the group algebra product is plain
//! permutation composition, and the word check only multiplies by single
//! generators.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::braid::{BraidError, Permutation};
use crate::coefficients::{CoeffError, FieldContext, Scalar};
use crate::hecke::{HeckeAlgebra, HeckeElement, HeckeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("coefficients from different fields")]
    FieldMismatch,
    #[error("exhaustive check limited to n <= {max_n} and length <= {max_len}")]
    OutOfBounds { max_n: usize, max_len: usize },
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

pub type Result<T> = std::result::Result<T, OracleError>;

pub const MAX_EXHAUSTIVE_N: usize = 4;
pub const MAX_EXHAUSTIVE_LEN: usize = 8;
/// Violations kept in a report; the count covers all of them.
pub const MAX_REPORTED_VIOLATIONS: usize = 64;

/// Element of the group algebra `F S_n`, stored as `w -> coefficient`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricGroupAlgebraElement {
    n: usize,
    field: FieldContext,
    terms: BTreeMap<Permutation, Scalar>,
}

impl SymmetricGroupAlgebraElement {
    pub fn zero(n: usize, field: FieldContext) -> Self {
        SymmetricGroupAlgebraElement {
            n,
            field,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element of a single permutation.
    pub fn delta(w: &Permutation, field: FieldContext) -> Self {
        let mut x = Self::zero(w.degree(), field);
        x.terms.insert(w.clone(), field.one());
        x
    }

    pub fn from_terms(
        n: usize,
        field: FieldContext,
        terms: impl IntoIterator<Item = (Permutation, Scalar)>,
    ) -> Result<Self> {
        let mut x = Self::zero(n, field);
        for (w, c) in terms {
            if w.degree() != n {
                return Err(OracleError::DegreeMismatch {
                    expected: n,
                    found: w.degree(),
                });
            }
            if c.context() != field {
                return Err(OracleError::FieldMismatch);
            }
            x.accumulate(w, &c);
        }
        Ok(x)
    }

    fn accumulate(&mut self, w: Permutation, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&w) {
            Some(x) => x + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, sum);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldContext {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, w: &Permutation) -> Scalar {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }
}

impl fmt::Display for SymmetricGroupAlgebraElement {
    /// `(c)*[w] + [v]`, coefficient 1 omitted; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let images: Vec<String> = w.images().iter().map(|x| x.to_string()).collect();
            if c.is_one() {
                write!(f, "[{}]", images.join(","))?;
            } else {
                write!(f, "({c})*[{}]", images.join(","))?;
            }
        }
        Ok(())
    }
}

/// Convolution product: `delta_u * delta_v = delta_{u o v}`.
pub fn sga_mul(
    a: &SymmetricGroupAlgebraElement,
    b: &SymmetricGroupAlgebraElement,
) -> Result<SymmetricGroupAlgebraElement> {
    if a.n != b.n {
        return Err(OracleError::DegreeMismatch {
            expected: a.n,
            found: b.n,
        });
    }
    if a.field != b.field {
        return Err(OracleError::FieldMismatch);
    }
    let mut out = SymmetricGroupAlgebraElement::zero(a.n, a.field);
    for (u, c) in &a.terms {
        for (v, d) in &b.terms {
            out.accumulate(u.compose(v)?, &(c * d));
        }
    }
    Ok(out)
}

/// Random element of `Q S_n` with small integer coefficients.
pub fn random_sga_element(
    rng: &mut impl Rng,
    n: usize,
    terms: usize,
) -> SymmetricGroupAlgebraElement {
    let f = FieldContext::Rationals;
    let perms = Permutation::all(n);
    let mut x = SymmetricGroupAlgebraElement::zero(n, f);
    for _ in 0..terms {
        let w = perms[rng.random_range(0..perms.len())].clone();
        x.accumulate(w, &f.from_int(rng.random_range(-5..=5)));
    }
    x
}

/// Compares `sga_mul` with the Hecke product at `(q1, q2) = (1, -1)` on
/// `samples` random pairs; returns the number of disagreements.
pub fn group_algebra_mismatches(n: usize, samples: usize, seed: u64) -> Result<usize> {
    let f = FieldContext::Rationals;
    let h = HeckeAlgebra::new(n, f.one(), f.from_int(-1))?;
    let to_hecke = |x: &SymmetricGroupAlgebraElement| -> Result<HeckeElement> {
        Ok(h.element(x.terms.iter().map(|(w, c)| (w.clone(), c.clone())))?)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..samples {
        let a = random_sga_element(&mut rng, n, 4);
        let b = random_sga_element(&mut rng, n, 4);
        let want = sga_mul(&a, &b)?;
        let got = h.to_symmetric_group(&h.mul(&to_hecke(&a)?, &to_hecke(&b)?)?)?;
        if got != want.terms {
            bad += 1;
        }
    }
    Ok(bad)
}

/// Kind of single rewrite relating two braid words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rewrite {
    /// `i (i+1) i = (i+1) i (i+1)`, all letters of one sign.
    Braid,
    /// `i j = j i` for `|i - j| >= 2`.
    Commutation,
    /// `i (-i) = ()`.
    Cancellation,
}

impl Serialize for Rewrite {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            Rewrite::Braid => "braid",
            Rewrite::Commutation => "commutation",
            Rewrite::Cancellation => "cancellation",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub word: Vec<i32>,
    pub rewritten: Vec<i32>,
    pub rule: Rewrite,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    /// Number of word pairs compared.
    pub checked: u64,
    /// Total number of failing pairs.
    pub violation_count: u64,
    /// The first failing pairs, in enumeration order.
    pub violations: Vec<Violation>,
}

impl ClosureReport {
    pub fn is_clean(&self) -> bool {
        self.violation_count == 0
    }

    fn merge(&mut self, other: ClosureReport) {
        self.checked += other.checked;
        self.violation_count += other.violation_count;
        let room = MAX_REPORTED_VIOLATIONS.saturating_sub(self.violations.len());
        self.violations
            .extend(other.violations.into_iter().take(room));
    }
}

/// Every word of length at most `max_len` in `H_n(q1, q2)` over `Q(q1, q2)`.
pub fn exhaustive_word_closure(n: usize, max_len: usize) -> Result<ClosureReport> {
    exhaustive_word_closure_in(&HeckeAlgebra::generic(n), max_len)
}

/// Enumerates all braid words of length at most `max_len` and checks that
/// each single braid relation, far commutation or free cancellation applied
/// to a word leaves its image in `algebra` unchanged.
pub fn exhaustive_word_closure_in(algebra: &HeckeAlgebra, max_len: usize) -> Result<ClosureReport> {
    let n = algebra.n();
    if n > MAX_EXHAUSTIVE_N || max_len > MAX_EXHAUSTIVE_LEN {
        return Err(OracleError::OutOfBounds {
            max_n: MAX_EXHAUSTIVE_N,
            max_len: MAX_EXHAUSTIVE_LEN,
        });
    }
    let letters: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
    let identity = algebra.identity();
    if max_len == 0 {
        return Ok(ClosureReport::default());
    }
    let parts = letters
        .par_iter()
        .map(|&first| {
            let mut walk = Walk {
                algebra,
                letters: &letters,
                max_len,
                word: vec![first],
                prefixes: vec![identity.clone(), algebra.mul_letter(&identity, first)?],
                report: ClosureReport::default(),
            };
            walk.visit()?;
            Ok(walk.report)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = ClosureReport::default();
    for p in parts {
        report.merge(p);
    }
    Ok(report)
}

struct Walk<'a> {
    algebra: &'a HeckeAlgebra,
    letters: &'a [i32],
    max_len: usize,
    word: Vec<i32>,
    // prefixes[k] is the image of word[..k]
    prefixes: Vec<HeckeElement>,
    report: ClosureReport,
}

impl Walk<'_> {
    fn visit(&mut self) -> Result<()> {
        self.check_rewrites()?;
        if self.word.len() == self.max_len {
            return Ok(());
        }
        for &l in self.letters {
            let next = self.algebra.mul_letter(self.prefixes.last().unwrap(), l)?;
            self.word.push(l);
            self.prefixes.push(next);
            self.visit()?;
            self.word.pop();
            self.prefixes.pop();
        }
        Ok(())
    }

    fn check_rewrites(&mut self) -> Result<()> {
        let w = self.word.clone();
        for k in 0..w.len() {
            for (span, replacement, rule) in rewrites_at(&w[k..]) {
                let mut x = self.prefixes[k].clone();
                for &l in replacement.iter().chain(&w[k + span..]) {
                    x = self.algebra.mul_letter(&x, l)?;
                }
                self.report.checked += 1;
                if &x != self.prefixes.last().unwrap() {
                    self.report.violation_count += 1;
                    if self.report.violations.len() < MAX_REPORTED_VIOLATIONS {
                        let mut rewritten = w[..k].to_vec();
                        rewritten.extend(&replacement);
                        rewritten.extend(&w[k + span..]);
                        self.report.violations.push(Violation {
                            word: w.clone(),
                            rewritten,
                            rule,
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Rewrites applicable at the start of `tail`: (letters consumed, replacement, rule).
fn rewrites_at(tail: &[i32]) -> Vec<(usize, Vec<i32>, Rewrite)> {
    let mut out = Vec::new();
    if let [a, b, ..] = *tail {
        if a == -b {
            out.push((2, vec![], Rewrite::Cancellation));
        }
        if a.abs().abs_diff(b.abs()) >= 2 {
            out.push((2, vec![b, a], Rewrite::Commutation));
        }
    }
    if let [a, b, c, ..] = *tail {
        let same_sign = (a > 0) == (b > 0);
        if a == c && same_sign && a.abs().abs_diff(b.abs()) == 1 {
            out.push((3, vec![b, a, b], Rewrite::Braid));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_images(v).unwrap()
    }

    #[test]
    fn involution_and_composition() {
        let f = FieldContext::Rationals;
        let s1 = SymmetricGroupAlgebraElement::delta(&p(&[2, 1, 3]), f);
        let s2 = SymmetricGroupAlgebraElement::delta(&p(&[1, 3, 2]), f);
        let id = SymmetricGroupAlgebraElement::delta(&Permutation::identity(3), f);
        assert_eq!(sga_mul(&s1, &s1).unwrap(), id);
        let want = p(&[2, 1, 3]).compose(&p(&[1, 3, 2])).unwrap();
        assert_eq!(
            sga_mul(&s1, &s2).unwrap(),
            SymmetricGroupAlgebraElement::delta(&want, f)
        );
        assert_eq!(sga_mul(&s1, &s2).unwrap().to_string(), "[2,3,1]");
        let two = SymmetricGroupAlgebraElement::delta(&p(&[1, 2]), f);
        assert!(matches!(
            sga_mul(&s1, &two),
            Err(OracleError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn matches_hecke_at_one() {
        for n in 1..=4 {
            assert_eq!(group_algebra_mismatches(n, 40, n as u64).unwrap(), 0);
        }
    }

    #[test]
    fn small_exhaustive_runs_are_clean() {
        let r = exhaustive_word_closure(2, 4).unwrap();
        assert!(r.is_clean());
        assert!(r.checked > 0);
        let r = exhaustive_word_closure(3, 5).unwrap();
        assert!(r.is_clean(), "{:?}", r.violations.first());
    }

    #[test]
    fn fault_is_detected() {
        let h = HeckeAlgebra::generic(3).with_quadratic_fault();
        let r = exhaustive_word_closure_in(&h, 3).unwrap();
        assert!(r.violation_count > 0);
        assert!(!r.violations.is_empty());
        let json = serde_json::to_value(&r).unwrap();
        assert!(json["checked"].as_u64().unwrap() > 0);
    }

    #[test]
    fn bounds_enforced() {
        assert!(exhaustive_word_closure(5, 2).is_err());
        assert!(exhaustive_word_closure(2, 9).is_err());
    }

    #[test]
    fn rewrite_rules() {
        assert_eq!(
            rewrites_at(&[1, -1]),
            vec![(2, vec![], Rewrite::Cancellation)]
        );
        assert_eq!(
            rewrites_at(&[1, 3]),
            vec![(2, vec![3, 1], Rewrite::Commutation)]
        );
        assert_eq!(
            rewrites_at(&[-2, -1, -2]),
            vec![(3, vec![-1, -2, -1], Rewrite::Braid)]
        );
        assert!(rewrites_at(&[1, -2, 1]).is_empty());
    }
}
