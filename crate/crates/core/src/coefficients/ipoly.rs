//! Ordinary multivariate polynomials over `Z` and their gcd.
//!
//! The gcd is the recursive primitive-PRS algorithm: view both inputs as
//! univariate in their highest variable with coefficients in the remaining
//! variables, strip contents recursively and run pseudo-remainder sequences on
//! the primitive parts.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::NVARS;

pub(crate) type Exps = [u32; NVARS];

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct IntPoly {
    terms: BTreeMap<Exps, BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term([0; NVARS], c);
        p
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exps, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    fn add_term(&mut self, e: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn leading(&self) -> Option<(&Exps, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb) {
                    *x += y;
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    fn mul_term(&self, shift: &Exps, c: &BigInt) -> IntPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, a)| {
                let mut e = *e;
                for (x, y) in e.iter_mut().zip(shift) {
                    *x += y;
                }
                (e, a * c)
            })
            .collect();
        IntPoly { terms }
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn div_int(&self, d: &BigInt) -> IntPoly {
        IntPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c / d)).collect(),
        }
    }

    /// Nonnegative gcd of the integer coefficients.
    pub fn int_content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[v]).max()
    }

    /// Coefficients with respect to variable `v`, keyed by the power of `v`.
    fn coeffs_in(&self, v: usize) -> BTreeMap<u32, IntPoly> {
        let mut out: BTreeMap<u32, IntPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[v] = 0;
            out.entry(e[v]).or_default().add_term(e2, c.clone());
        }
        out
    }

    fn coeff_in(&self, v: usize, k: u32) -> IntPoly {
        IntPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[v] == k)
                .map(|(e, c)| {
                    let mut e2 = *e;
                    e2[v] = 0;
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    fn top_var(&self) -> Option<usize> {
        (0..NVARS)
            .rev()
            .find(|&v| self.terms.keys().any(|e| e[v] > 0))
    }

    /// Makes the leading coefficient (under the map's order) positive.
    pub fn normalize_sign(self) -> IntPoly {
        match self.leading() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self,
        }
    }

    /// Exact division; `None` if `d` does not divide `self` over `Z`.
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        let (de, dc) = d.leading()?;
        let (de, dc) = (*de, dc.clone());
        let mut rem = self.clone();
        let mut quot = IntPoly::zero();
        while let Some((re, rc)) = rem.leading() {
            let mut shift = [0u32; NVARS];
            for i in 0..NVARS {
                if re[i] < de[i] {
                    return None;
                }
                shift[i] = re[i] - de[i];
            }
            let (q, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            rem = rem.sub(&d.mul_term(&shift, &q));
            quot.add_term(shift, q);
        }
        Some(quot)
    }

    /// Content with respect to `v`: the gcd of the coefficients of the powers
    /// of `v`, itself a polynomial in the other variables.
    fn content_in(&self, v: usize) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs_in(v).into_values() {
            acc = gcd(&acc, &c);
            if acc.is_constant() && acc.int_content().is_one() {
                break;
            }
        }
        acc
    }

    fn primitive_part_in(&self, v: usize) -> IntPoly {
        let c = self.content_in(v);
        if c.is_zero() {
            return self.clone();
        }
        self.exact_div(&c).expect("content divides")
    }
}

/// Pseudo-remainder of `a` by `b` with respect to `v`.
fn prem(a: &IntPoly, b: &IntPoly, v: usize) -> IntPoly {
    let db = b.degree_in(v).expect("nonzero divisor");
    let lcb = b.coeff_in(v, db);
    let mut r = a.clone();
    while let Some(dr) = r.degree_in(v) {
        if dr < db {
            break;
        }
        let lcr = r.coeff_in(v, dr);
        let mut shift = [0u32; NVARS];
        shift[v] = dr - db;
        let t = lcr.mul(b).mul_term(&shift, &BigInt::one());
        r = r.mul(&lcb).sub(&t);
    }
    r
}

/// Greatest common divisor over `Z`, with positive leading coefficient.
pub(crate) fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.clone().normalize_sign();
    }
    if b.is_zero() {
        return a.clone().normalize_sign();
    }
    let v = match (a.top_var(), b.top_var()) {
        (None, None) => return IntPoly::constant(a.int_content().gcd(&b.int_content())),
        (x, y) => x.max(y).unwrap(),
    };
    if a.degree_in(v) == Some(0) {
        return gcd(a, &b.content_in(v));
    }
    if b.degree_in(v) == Some(0) {
        return gcd(&a.content_in(v), b);
    }
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let c = gcd(&ca, &cb);
    let mut pa = a.exact_div(&ca).expect("content divides");
    let mut pb = b.exact_div(&cb).expect("content divides");
    if pa.degree_in(v) < pb.degree_in(v) {
        std::mem::swap(&mut pa, &mut pb);
    }
    let g = loop {
        let r = prem(&pa, &pb, v);
        if r.is_zero() {
            break pb;
        }
        if r.degree_in(v) == Some(0) {
            break IntPoly::one();
        }
        pa = pb;
        pb = r.primitive_part_in(v);
    };
    c.mul(&g.primitive_part_in(v)).normalize_sign()
}
