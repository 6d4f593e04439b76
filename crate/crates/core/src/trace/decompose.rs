use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::braid::{BraidWord, Permutation};
use crate::coefficients::{FieldContext, Scalar, Var};
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::specht::{Matrix, SpechtContext};

use super::{partitions_of, Partition, TraceError};

/// `closure(b) = sum c_lambda v_lambda` in the trace module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureDecomposition {
    n: usize,
    coeffs: BTreeMap<Partition, Scalar>,
}

impl ClosureDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, lambda: &Partition) -> Scalar {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(|| FieldContext::RationalFunctions.zero())
    }

    /// Nonzero coefficients in descending lexicographic order of partitions.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.coeffs.iter().rev()
    }

    /// `sum c_lambda delta^(k - 1)`, which must equal the trace of the braid.
    pub fn recombined_trace(&self) -> Scalar {
        let f = FieldContext::RationalFunctions;
        let (q1, q2) = (f.var(Var::Q1).unwrap(), f.var(Var::Q2).unwrap());
        let delta = (f.one() + &q1 * &q2).try_div(&(&q1 + &q2)).unwrap();
        self.terms().fold(f.zero(), |acc, (l, c)| {
            &acc + &(c * &delta.pow(l.len() as i32 - 1).unwrap())
        })
    }
}

impl std::fmt::Display for ClosureDecomposition {
    /// `(q1+q2)*v(2) + ... `; `0` when empty.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (l, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "v{l}")?;
            } else {
                write!(f, "({c})*v{l}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for ClosureDecomposition {
    /// `{"(2)": "q1+q2", ...}` in descending order of partitions.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.coeffs.len()))?;
        for (l, c) in self.terms() {
            map.serialize_entry(&l.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

/// Characters of `H_n(q1, q2)` over `Q(q1, q2)` and the inverse of the
/// character matrix of the braids `b_lambda`.
///
/// The characters come from the Specht modules of `H_n(-1, q)`: sending
/// `T_i` to `-q1 T_i` identifies `H_n(q1, q2)` with `H_n(-1, q)` at
/// `q = -q2 / q1`, so `chi(T_w) = (-q1)^l(w) chi'(T_w)`.
pub struct Decomposer {
    algebra: HeckeAlgebra,
    partitions: Vec<Partition>,
    characters: Vec<BTreeMap<Permutation, Scalar>>,
    matrix: Matrix,
}

impl Decomposer {
    pub fn new(n: usize) -> Result<Self, TraceError> {
        let f = FieldContext::RationalFunctions;
        let algebra = HeckeAlgebra::generic(n);
        let partitions = partitions_of(n);
        let ctx = SpechtContext::generic(n);
        let minus_q1 = -algebra.q1();
        let q = (-algebra.q2()).try_div(algebra.q1())?;
        let perms = Permutation::all(n);
        let mut characters = Vec::new();
        for mu in &partitions {
            let module = ctx.specht_module(mu).map_err(Box::new)?;
            let mut row = BTreeMap::new();
            for w in &perms {
                let chi = module.character(w).specialize(&[(Var::Q, q.clone())], f)?;
                let scale = minus_q1.pow(w.length() as i32)?;
                row.insert(w.clone(), &chi * &scale);
            }
            characters.push(row);
        }
        let mut dec = Decomposer {
            algebra,
            partitions,
            characters,
            matrix: Matrix::zeros(0, 0, f),
        };
        let k = dec.partitions.len();
        let mut matrix = Matrix::zeros(k, k, f);
        for (j, lambda) in dec.partitions.clone().iter().enumerate() {
            let h = dec.algebra.from_braid_word(&lambda.braid())?;
            for (i, chi) in dec.character_vector(&h).into_iter().enumerate() {
                matrix.set(i, j, chi);
            }
        }
        dec.matrix = matrix;
        Ok(dec)
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// `[chi_mu(b_lambda)]`, rows indexed by `mu`, columns by `lambda`.
    pub fn character_matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `chi_mu(h)` for every `mu`.
    pub fn character_vector(&self, h: &HeckeElement) -> Vec<Scalar> {
        let f = FieldContext::RationalFunctions;
        self.characters
            .iter()
            .map(|chi| {
                h.terms()
                    .fold(f.zero(), |acc, (w, c)| &acc + &(c * &chi[w]))
            })
            .collect()
    }

    pub fn decompose(&self, b: &BraidWord) -> Result<ClosureDecomposition, TraceError> {
        let h = self.algebra.from_braid_word(b)?;
        let rhs = self.character_vector(&h);
        let c = self
            .matrix
            .solve(&rhs)
            .ok_or(TraceError::SingularCharacterMatrix)?;
        let coeffs = self
            .partitions
            .iter()
            .cloned()
            .zip(c)
            .filter(|(_, x)| !x.is_zero())
            .collect();
        Ok(ClosureDecomposition {
            n: b.strands(),
            coeffs,
        })
    }
}

/// Decomposition of the closure of `b` over `Q(q1, q2)`.
pub fn decompose_closure(b: &BraidWord) -> Result<ClosureDecomposition, TraceError> {
    Decomposer::new(b.strands())?.decompose(b)
}

/// As [`decompose_closure`], refusing specialized fields where the character
/// matrix may degenerate.
pub fn decompose_closure_over(
    b: &BraidWord,
    field: FieldContext,
) -> Result<ClosureDecomposition, TraceError> {
    if field != FieldContext::RationalFunctions {
        return Err(TraceError::NotGeneric(field.name()));
    }
    decompose_closure(b)
}
