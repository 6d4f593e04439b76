use std::collections::HashMap;

use crate::braid::{BraidWord, Permutation};
use crate::coefficients::Scalar;
use crate::hecke::{HeckeAlgebra, HeckeElement};

use super::TraceError;

/// Polynomial in the formal variable `delta`, lowest degree first.
type DeltaPoly = Vec<Scalar>;

/// The normalized Markov trace on `H_1, H_2, ...` at fixed parameters.
///
/// Values on basis elements are cached; the cache is keyed by permutation and
/// so shared across all `n`. Traces are accumulated as polynomials in
/// `delta = (1 + q1 q2) / (q1 + q2)` and only evaluated at the end.
pub struct MarkovTrace {
    algebra: HeckeAlgebra,
    memo: HashMap<Permutation, DeltaPoly>,
}

impl MarkovTrace {
    /// Only the parameters of `algebra` are used, not its strand count.
    pub fn new(algebra: &HeckeAlgebra) -> Result<Self, TraceError> {
        if algebra.q_sum().is_zero() {
            return Err(TraceError::SumNotUnit);
        }
        Ok(MarkovTrace {
            algebra: algebra.clone(),
            memo: HashMap::new(),
        })
    }

    pub fn algebra(&self) -> &HeckeAlgebra {
        &self.algebra
    }

    /// `(1 + q1 q2) / (q1 + q2)`.
    pub fn delta(&self) -> Scalar {
        let a = self.algebra.field().one() + self.algebra.q_prod().clone();
        a.try_div(self.algebra.q_sum()).expect("q1 + q2 is a unit")
    }

    pub fn trace(&mut self, h: &HeckeElement) -> Scalar {
        let mut acc: DeltaPoly = Vec::new();
        for (w, c) in h.terms() {
            let p = self.basis_trace(w);
            add_scaled(&mut acc, &p, c);
        }
        self.evaluate(&acc)
    }

    pub fn trace_of_braid(&mut self, b: &BraidWord) -> Result<Scalar, TraceError> {
        let h = self.algebra.with_strands(b.strands()).from_braid_word(b)?;
        Ok(self.trace(&h))
    }

    /// `sum c_k a^k s^(N-k) / s^N` with `a = 1 + q1 q2`, `s = q1 + q2`.
    fn evaluate(&self, p: &DeltaPoly) -> Scalar {
        let field = self.algebra.field();
        let Some(top) = p.len().checked_sub(1) else {
            return field.zero();
        };
        let a = field.one() + self.algebra.q_prod().clone();
        let s = self.algebra.q_sum();
        let mut num = field.zero();
        let mut a_pow = field.one();
        for (k, c) in p.iter().enumerate() {
            if !c.is_zero() {
                let s_pow = s.pow((top - k) as i32).expect("nonnegative power");
                num = &num + &(&(c * &a_pow) * &s_pow);
            }
            a_pow = &a_pow * &a;
        }
        num.try_div(&s.pow(top as i32).expect("nonnegative power"))
            .expect("q1 + q2 is a unit")
    }

    fn basis_trace(&mut self, w: &Permutation) -> DeltaPoly {
        if let Some(p) = self.memo.get(w) {
            return p.clone();
        }
        let n = w.degree();
        let field = self.algebra.field();
        let result = if n <= 1 {
            vec![field.one()]
        } else if w.fixes_last() {
            let mut p = self.basis_trace(&w.restrict());
            p.insert(0, field.zero());
            p
        } else {
            // w = u s_{n-1} y with y = s_{n-2} ... s_j; the trace of
            // T_u T_{n-1} T_y equals the trace of T_y T_u in H_{n-1}.
            let (u, j) = w.split_last();
            let small = self.algebra.with_strands(n - 1);
            let mut x = small.basis_element(&u.restrict()).expect("degree n - 1");
            for i in j..n - 1 {
                x = small.generator_mul(i, &x).expect("generator in range");
            }
            let mut acc = Vec::new();
            for (v, c) in x.terms() {
                let p = self.basis_trace(v);
                add_scaled(&mut acc, &p, c);
            }
            acc
        };
        self.memo.insert(w.clone(), result.clone());
        result
    }
}

fn add_scaled(acc: &mut DeltaPoly, p: &DeltaPoly, c: &Scalar) {
    if acc.len() < p.len() {
        let zero = c.context().zero();
        acc.resize(p.len(), zero);
    }
    for (a, x) in acc.iter_mut().zip(p) {
        if !x.is_zero() {
            *a = &*a + &(x * c);
        }
    }
}

/// `markov_trace(from_braid_word(b))` over the generic field.
pub fn trace_of_braid(b: &BraidWord) -> Result<Scalar, TraceError> {
    MarkovTrace::new(&HeckeAlgebra::generic(b.strands()))?.trace_of_braid(b)
}
