//! The Iwahori-Hecke algebra `H_n(q1, q2)` in the `T_w` basis.
//!
//! Generators satisfy the braid relations and `(T_i - q1)(T_i - q2) = 0`.
//! Products are computed by folding the generators of a reduced word of the
//! right factor into the left factor one at a time:
//!
//! ```text
//! T_w T_i = T_{w s_i}                                 if l(w s_i) > l(w)
//! T_w T_i = (q1 + q2) T_w - q1 q2 T_{w s_i}           otherwise
//! ```

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::braid::{BraidError, BraidWord, Permutation};
use crate::coefficients::{CoeffError, FieldContext, Scalar, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("degree mismatch: algebra has n = {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("field mismatch: algebra is over {expected}, got {found}")]
    FieldMismatch { expected: String, found: String },
    #[error("generator index {index} out of range for n = {n}")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("parameters must be units")]
    ParameterNotUnit,
    #[error("operation requires parameters {0}")]
    WrongParameters(&'static str),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

pub type Result<T> = std::result::Result<T, HeckeError>;

/// `H_n(q1, q2)` for a fixed `n` and fixed parameter values.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    n: usize,
    field: FieldContext,
    q1: Scalar,
    q2: Scalar,
    sum: Scalar,
    prod: Scalar,
    fault: bool,
}

impl HeckeAlgebra {
    /// Parameters are the formal variables `q1`, `q2`.
    pub fn generic(n: usize) -> Self {
        let f = FieldContext::RationalFunctions;
        Self::new(n, f.var(Var::Q1).unwrap(), f.var(Var::Q2).unwrap()).unwrap()
    }

    pub fn new(n: usize, q1: Scalar, q2: Scalar) -> Result<Self> {
        let field = q1.context();
        if q2.context() != field {
            return Err(CoeffError::ContextMismatch(field.name(), q2.context().name()).into());
        }
        if q1.is_zero() || q2.is_zero() {
            return Err(HeckeError::ParameterNotUnit);
        }
        Ok(HeckeAlgebra {
            n,
            field,
            sum: &q1 + &q2,
            prod: &q1 * &q2,
            q1,
            q2,
            fault: false,
        })
    }

    /// Same algebra with the sign of the `q1 q2` term in the quadratic
    /// relation flipped. Only for checking that verification catches it.
    #[doc(hidden)]
    pub fn with_quadratic_fault(mut self) -> Self {
        self.fault = true;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldContext {
        self.field
    }

    pub fn q1(&self) -> &Scalar {
        &self.q1
    }

    pub fn q2(&self) -> &Scalar {
        &self.q2
    }

    /// `q1 + q2`.
    pub fn q_sum(&self) -> &Scalar {
        &self.sum
    }

    /// `q1 q2`.
    pub fn q_prod(&self) -> &Scalar {
        &self.prod
    }

    /// The same parameters on a different number of strands.
    pub fn with_strands(&self, n: usize) -> Self {
        HeckeAlgebra { n, ..self.clone() }
    }

    pub fn zero(&self) -> HeckeElement {
        HeckeElement {
            n: self.n,
            field: self.field,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(&self) -> HeckeElement {
        self.monomial(Permutation::identity(self.n), self.field.one())
    }

    pub fn basis_element(&self, w: &Permutation) -> Result<HeckeElement> {
        self.check_degree(w.degree())?;
        Ok(self.monomial(w.clone(), self.field.one()))
    }

    /// `sum c_w T_w`; repeated permutations are added.
    pub fn element(
        &self,
        terms: impl IntoIterator<Item = (Permutation, Scalar)>,
    ) -> Result<HeckeElement> {
        let mut out = self.zero();
        for (w, c) in terms {
            self.check_degree(w.degree())?;
            self.check_field(&c)?;
            accumulate(&mut out.terms, w, &c);
        }
        Ok(out)
    }

    fn monomial(&self, w: Permutation, c: Scalar) -> HeckeElement {
        let mut out = self.zero();
        if !c.is_zero() {
            out.terms.insert(w, c);
        }
        out
    }

    fn check_degree(&self, found: usize) -> Result<()> {
        if found != self.n {
            return Err(HeckeError::DegreeMismatch {
                expected: self.n,
                found,
            });
        }
        Ok(())
    }

    fn check_field(&self, c: &Scalar) -> Result<()> {
        if c.context() != self.field {
            return Err(HeckeError::FieldMismatch {
                expected: self.field.name(),
                found: c.context().name(),
            });
        }
        Ok(())
    }

    fn check(&self, a: &HeckeElement) -> Result<()> {
        self.check_degree(a.n)?;
        if a.field != self.field {
            return Err(HeckeError::FieldMismatch {
                expected: self.field.name(),
                found: a.field.name(),
            });
        }
        Ok(())
    }

    fn check_generator(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            return Err(HeckeError::GeneratorOutOfRange {
                index: i,
                n: self.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = a.clone();
        for (w, c) in &b.terms {
            accumulate(&mut out.terms, w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        self.add(a, &self.scalar_mul(&self.field.from_int(-1), b)?)
    }

    pub fn scalar_mul(&self, c: &Scalar, a: &HeckeElement) -> Result<HeckeElement> {
        self.check(a)?;
        self.check_field(c)?;
        Ok(scale(a, c))
    }

    /// `a * T_i`.
    pub fn mul_generator(&self, a: &HeckeElement, i: usize) -> Result<HeckeElement> {
        self.check(a)?;
        self.check_generator(i)?;
        Ok(self.fold(a, i, Side::Right))
    }

    /// `T_i * a`.
    pub fn generator_mul(&self, i: usize, a: &HeckeElement) -> Result<HeckeElement> {
        self.check(a)?;
        self.check_generator(i)?;
        Ok(self.fold(a, i, Side::Left))
    }

    fn fold(&self, a: &HeckeElement, i: usize, side: Side) -> HeckeElement {
        let mut out = BTreeMap::new();
        let quad = if self.fault {
            self.prod.clone()
        } else {
            -&self.prod
        };
        for (w, c) in &a.terms {
            let (ws, down) = match side {
                Side::Right => (w.mul_simple(i), w.has_right_descent(i)),
                Side::Left => {
                    let ws = w.simple_mul(i);
                    let down = ws.length() < w.length();
                    (ws, down)
                }
            };
            if down {
                accumulate(&mut out, w.clone(), &(c * &self.sum));
                accumulate(&mut out, ws, &(c * &quad));
            } else {
                accumulate(&mut out, ws, c);
            }
        }
        HeckeElement {
            n: self.n,
            field: self.field,
            terms: out,
        }
    }

    /// `a * T_w`.
    pub fn mul_basis(&self, a: &HeckeElement, w: &Permutation) -> Result<HeckeElement> {
        self.check(a)?;
        self.check_degree(w.degree())?;
        Ok(w.reduced_word()
            .into_iter()
            .fold(a.clone(), |x, i| self.fold(&x, i, Side::Right)))
    }

    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = BTreeMap::new();
        for (v, c) in &b.terms {
            let x = self.mul_basis(a, v)?;
            for (w, d) in x.terms {
                accumulate(&mut out, w, &(&d * c));
            }
        }
        Ok(HeckeElement {
            n: self.n,
            field: self.field,
            terms: out,
        })
    }

    /// `T_i` for `positive`, otherwise `T_i^{-1} = ((q1 + q2) - T_i) / (q1 q2)`.
    pub fn generator_image(&self, i: usize, positive: bool) -> Result<HeckeElement> {
        self.check_generator(i)?;
        self.apply_letter(&self.identity(), i, positive)
    }

    /// `a * T_i` for `letter = i`, `a * T_i^{-1}` for `letter = -i`.
    pub fn mul_letter(&self, a: &HeckeElement, letter: i32) -> Result<HeckeElement> {
        self.check(a)?;
        let i = letter.unsigned_abs() as usize;
        self.check_generator(i)?;
        self.apply_letter(a, i, letter > 0)
    }

    fn apply_letter(&self, a: &HeckeElement, i: usize, positive: bool) -> Result<HeckeElement> {
        let ati = self.fold(a, i, Side::Right);
        if positive {
            return Ok(ati);
        }
        let inv = self.prod.inv()?;
        let mut out = scale(a, &(&self.sum * &inv));
        for (w, c) in &ati.terms {
            accumulate(&mut out.terms, w.clone(), &-&(c * &inv));
        }
        Ok(out)
    }

    /// Image of a braid word: the product of its generator images.
    pub fn from_braid_word(&self, b: &BraidWord) -> Result<HeckeElement> {
        self.check_degree(b.strands())?;
        let mut acc = self.identity();
        for &l in b.letters() {
            acc = self.apply_letter(&acc, l.unsigned_abs() as usize, l > 0)?;
        }
        Ok(acc)
    }

    /// The antiautomorphism `T_w -> T_{w^{-1}}`.
    pub fn star(&self, a: &HeckeElement) -> HeckeElement {
        HeckeElement {
            n: a.n,
            field: a.field,
            terms: a
                .terms
                .iter()
                .map(|(w, c)| (w.inverse(), c.clone()))
                .collect(),
        }
    }

    /// Coordinates of `a` as an element of the group algebra of the symmetric
    /// group, which is this algebra when `(q1, q2) = (1, -1)`.
    pub fn to_symmetric_group(&self, a: &HeckeElement) -> Result<BTreeMap<Permutation, Scalar>> {
        self.check(a)?;
        if !(self.q1.is_one() && (-&self.q2).is_one()) {
            return Err(HeckeError::WrongParameters("(1, -1)"));
        }
        Ok(a.terms.clone())
    }
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

fn accumulate(map: &mut BTreeMap<Permutation, Scalar>, w: Permutation, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        Entry::Occupied(mut o) => {
            let s = o.get() + c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

fn scale(a: &HeckeElement, c: &Scalar) -> HeckeElement {
    let terms = if c.is_zero() {
        BTreeMap::new()
    } else {
        a.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect()
    };
    HeckeElement {
        n: a.n,
        field: a.field,
        terms,
    }
}

/// `sum c_w T_w` with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    field: FieldContext,
    terms: BTreeMap<Permutation, Scalar>,
}

impl HeckeElement {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldContext {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic order of the permutations.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> Scalar {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Terms in output order: by length, then one-line notation, both
    /// descending.
    pub fn sorted_terms(&self) -> Vec<(&Permutation, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| (b.0.length(), b.0).cmp(&(a.0.length(), a.0)));
        v
    }
}

impl fmt::Display for HeckeElement {
    /// `(q1+q2)*T[2,1] + (-q1*q2)*T[1,2]`; unit coefficients are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "T{w}")?;
            } else {
                write!(f, "({c})*T{w}")?;
            }
        }
        Ok(())
    }
}

struct JsonTerm<'a>(&'a Permutation, &'a Scalar);

impl Serialize for JsonTerm<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Term", 2)?;
        st.serialize_field("perm", self.0)?;
        st.serialize_field("coeff", &self.1.to_string())?;
        st.end()
    }
}

impl Serialize for HeckeElement {
    /// An array of `{"perm": [...], "coeff": "..."}` in output order.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.sorted_terms();
        let mut seq = s.serialize_seq(Some(terms.len()))?;
        for (w, c) in terms {
            seq.serialize_element(&JsonTerm(w, c))?;
        }
        seq.end()
    }
}
