//! Specht modules of `H_n = H_n(-1, q)`.
//!
//! With `m_lambda` the sum of `T_w` over the Young subgroup, `M^lambda` is the
//! left ideal `H_n m_lambda` and `I^lambda` the two-sided ideal generated by
//! all `m_mu` with `mu` strictly dominating `lambda`. The Specht module is
//! `S^lambda = M^lambda / (M^lambda ∩ I^lambda)`. It carries a bilinear form
//! defined by `(x)^* y = <x, y> m_lambda` modulo `I^lambda`; the quotient by
//! its radical is `D^lambda`.
//!
//! Everything is computed by linear algebra in the `T_w` coordinates.

mod matrix;
mod subspace;
mod tableaux;

pub use matrix::Matrix;
pub use subspace::{SparseVec, SubspaceBasis};
pub use tableaux::count_standard_tableaux;

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::braid::Permutation;
use crate::coefficients::{quantum_e, CoeffError, FieldContext, QuantumE, Scalar, Var};
use crate::hecke::{HeckeAlgebra, HeckeElement, HeckeError};
use crate::trace::{partitions_of, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpechtError {
    #[error("partition {lambda} does not have size {n}")]
    SizeMismatch { lambda: String, n: usize },
    #[error("q must be a unit")]
    ParameterNotUnit,
    #[error("m_lambda h m_lambda is not a multiple of m_lambda modulo I for {lambda}")]
    MurphyViolation { lambda: String },
    #[error("element does not lie in the Specht module of {lambda}")]
    NotInModule { lambda: String },
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

pub type Result<T> = std::result::Result<T, SpechtError>;

/// All permutations preserving each block of consecutive points of `lambda`,
/// in lexicographic order.
pub fn young_subgroup(lambda: &Partition) -> Vec<Permutation> {
    let mut images: Vec<Vec<usize>> = vec![Vec::new()];
    for (start, len) in lambda.blocks() {
        let block = Permutation::all(len);
        images = images
            .into_iter()
            .flat_map(|prefix| {
                block.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.extend(p.images().into_iter().map(|x| x + start));
                    v
                })
            })
            .collect();
    }
    images
        .into_iter()
        .map(|v| Permutation::from_images(&v).expect("block permutation"))
        .collect()
}

struct Inner {
    algebra: HeckeAlgebra,
    perms: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

/// `H_n(-1, q)` together with the coordinate indexing of its `T_w` basis.
#[derive(Clone)]
pub struct SpechtContext(Arc<Inner>);

impl SpechtContext {
    /// `q` is the formal variable over `Q(q)`.
    pub fn generic(n: usize) -> Self {
        let q = FieldContext::RationalFunctions
            .var(Var::Q)
            .expect("variable q");
        Self::new(n, q).expect("q is a unit")
    }

    /// Parameters `(-1, q)` in the field of `q`.
    pub fn new(n: usize, q: Scalar) -> Result<Self> {
        if q.is_zero() {
            return Err(SpechtError::ParameterNotUnit);
        }
        let minus_one = q.context().from_int(-1);
        let algebra = HeckeAlgebra::new(n, minus_one, q)?;
        let perms = Permutation::all(n);
        let index = perms
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        Ok(SpechtContext(Arc::new(Inner {
            algebra,
            perms,
            index,
        })))
    }

    pub fn n(&self) -> usize {
        self.0.algebra.n()
    }

    pub fn q(&self) -> &Scalar {
        self.0.algebra.q2()
    }

    pub fn field(&self) -> FieldContext {
        self.0.algebra.field()
    }

    pub fn algebra(&self) -> &HeckeAlgebra {
        &self.0.algebra
    }

    /// The quantum characteristic of `q`.
    pub fn e(&self) -> QuantumE {
        quantum_e(self.q())
    }

    pub fn to_vec(&self, h: &HeckeElement) -> SparseVec {
        h.terms()
            .map(|(w, c)| (self.0.index[w], c.clone()))
            .collect()
    }

    pub fn to_element(&self, v: &SparseVec) -> HeckeElement {
        self.0
            .algebra
            .element(v.iter().map(|(k, c)| (self.0.perms[*k].clone(), c.clone())))
            .expect("coordinates of this algebra")
    }

    fn check(&self, lambda: &Partition) -> Result<()> {
        if lambda.size() != self.n() {
            return Err(SpechtError::SizeMismatch {
                lambda: lambda.to_string(),
                n: self.n(),
            });
        }
        Ok(())
    }

    pub fn m_lambda(&self, lambda: &Partition) -> Result<HeckeElement> {
        self.check(lambda)?;
        let one = self.field().one();
        Ok(self
            .0
            .algebra
            .element(young_subgroup(lambda).into_iter().map(|w| (w, one.clone())))?)
    }

    /// Smallest subspace containing `seeds` and closed under multiplication
    /// by every generator on the left, and also on the right if `two_sided`.
    fn closure(&self, seeds: Vec<HeckeElement>, two_sided: bool) -> SubspaceBasis {
        let h = &self.0.algebra;
        let mut basis = SubspaceBasis::new(self.0.perms.len(), self.field());
        let mut queue: VecDeque<HeckeElement> = seeds.into();
        while let Some(x) = queue.pop_front() {
            let Some(r) = basis.insert(self.to_vec(&x)) else {
                continue;
            };
            let r = self.to_element(&r);
            for i in 1..self.n() {
                queue.push_back(h.generator_mul(i, &r).expect("generator in range"));
                if two_sided {
                    queue.push_back(h.mul_generator(&r, i).expect("generator in range"));
                }
            }
        }
        basis
    }

    /// `M^lambda = H_n m_lambda`.
    pub fn module_basis_m(&self, lambda: &Partition) -> Result<SubspaceBasis> {
        Ok(self.closure(vec![self.m_lambda(lambda)?], false))
    }

    /// `I^lambda`, spanned by `T_u m_mu T_v` for `mu` strictly dominating
    /// `lambda`.
    pub fn ideal_i(&self, lambda: &Partition) -> Result<SubspaceBasis> {
        self.check(lambda)?;
        let seeds = partitions_of(self.n())
            .into_iter()
            .filter(|mu| mu.strictly_dominates(lambda).expect("same size"))
            .map(|mu| self.m_lambda(&mu))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.closure(seeds, true))
    }

    pub fn specht_module(&self, lambda: &Partition) -> Result<SpechtModule> {
        SpechtModule::build(self, lambda)
    }

    /// One row of the summary table for every partition of `n`; empty for
    /// `n = 0`.
    pub fn table(&self) -> Result<Vec<SpechtRow>> {
        if self.n() == 0 {
            return Ok(Vec::new());
        }
        let generic = self.field() == FieldContext::RationalFunctions;
        partitions_of(self.n())
            .into_iter()
            .map(|l| {
                let m = self.specht_module(&l)?;
                Ok(SpechtRow {
                    partition: l.to_string(),
                    dim_s: m.dim(),
                    dim_d: m.dim_d(),
                    gram_determinant: generic.then(|| m.gram_determinant().to_string()),
                    e_restricted: l.is_e_restricted(self.e()),
                })
            })
            .collect()
    }
}

/// Summary of one Specht module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpechtRow {
    pub partition: String,
    pub dim_s: usize,
    pub dim_d: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gram_determinant: Option<String>,
    pub e_restricted: bool,
}

/// `S^lambda` with a basis of cosets `T_w m_lambda`, the matrices of the
/// generators in that basis and the Gram matrix of the bilinear form.
pub struct SpechtModule {
    ctx: SpechtContext,
    lambda: Partition,
    ideal: SubspaceBasis,
    // I^lambda plus the representatives, tagged with their index
    quotient: SubspaceBasis,
    m_reduced: SparseVec,
    reps: Vec<Permutation>,
    rep_elements: Vec<HeckeElement>,
    actions: Vec<Matrix>,
    gram: Matrix,
    d_actions: Vec<Matrix>,
}

impl SpechtModule {
    fn build(ctx: &SpechtContext, lambda: &Partition) -> Result<Self> {
        let h = ctx.algebra();
        let field = ctx.field();
        let m = ctx.m_lambda(lambda)?;
        let ideal = ctx.ideal_i(lambda)?;
        let mut m_reduced = ctx.to_vec(&m);
        ideal.reduce(&mut m_reduced);

        let mut order = ctx.0.perms.clone();
        order.sort_by_key(|w| w.length());
        let mut quotient = ideal.clone();
        let mut reps = Vec::new();
        let mut rep_elements = Vec::new();
        // T_w m_lambda = T_i (T_{s_i w} m_lambda) for a left descent i of w
        let mut products: HashMap<Permutation, HeckeElement> = HashMap::new();
        for w in order {
            let x = match (1..ctx.n()).find(|&i| w.simple_mul(i).length() < w.length()) {
                None => m.clone(),
                Some(i) => h.generator_mul(i, &products[&w.simple_mul(i)])?,
            };
            products.insert(w.clone(), x.clone());
            let tag = SparseVec::from([(reps.len(), field.one())]);
            if quotient.insert_tagged(ctx.to_vec(&x), tag).is_some() {
                reps.push(w);
                rep_elements.push(x);
            }
        }

        let mut module = SpechtModule {
            ctx: ctx.clone(),
            lambda: lambda.clone(),
            ideal,
            quotient,
            m_reduced,
            reps,
            rep_elements,
            actions: Vec::new(),
            gram: Matrix::zeros(0, 0, field),
            d_actions: Vec::new(),
        };
        let d = module.dim();
        for i in 1..ctx.n() {
            let mut a = Matrix::zeros(d, d, field);
            for j in 0..d {
                let y = h.generator_mul(i, &module.rep_elements[j])?;
                for (k, c) in module.coordinates(&y)? {
                    a.set(k, j, c);
                }
            }
            module.actions.push(a);
        }
        let mut gram = Matrix::zeros(d, d, field);
        for j in 0..d {
            for k in j..d {
                let g = module.gram_entry(&module.rep_elements[j], &module.rep_elements[k])?;
                gram.set(j, k, g.clone());
                gram.set(k, j, g);
            }
        }
        module.gram = gram;
        module.d_actions = module.radical_quotient_actions();
        Ok(module)
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn context(&self) -> &SpechtContext {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// `I^lambda`.
    pub fn ideal(&self) -> &SubspaceBasis {
        &self.ideal
    }

    /// The `w` with `T_w m_lambda` forming the chosen basis.
    pub fn representatives(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn basis_elements(&self) -> &[HeckeElement] {
        &self.rep_elements
    }

    /// Matrix of `T_i` acting on the left.
    pub fn action(&self, i: usize) -> &Matrix {
        &self.actions[i - 1]
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn gram_determinant(&self) -> Scalar {
        self.gram.determinant()
    }

    /// `dim D^lambda`, the rank of the Gram matrix.
    pub fn dim_d(&self) -> usize {
        self.d_actions
            .first()
            .map_or_else(|| self.gram.rank(), |a| a.rows())
    }

    /// Coordinates of an element of `M^lambda` in the basis of the quotient.
    pub fn coordinates(&self, x: &HeckeElement) -> Result<SparseVec> {
        let mut v = self.ctx.to_vec(x);
        let tag = self.quotient.reduce(&mut v);
        if !v.is_empty() {
            return Err(SpechtError::NotInModule {
                lambda: self.lambda.to_string(),
            });
        }
        Ok(tag)
    }

    /// The scalar `r` with `x = r m_lambda` modulo `I^lambda`.
    pub fn murphy_scalar(&self, x: &HeckeElement) -> Result<Scalar> {
        let mut v = self.ctx.to_vec(x);
        self.ideal.reduce(&mut v);
        let field = self.ctx.field();
        let Some((c, m0)) = self.m_reduced.iter().next() else {
            return Err(SpechtError::MurphyViolation {
                lambda: self.lambda.to_string(),
            });
        };
        let r = v
            .get(c)
            .cloned()
            .unwrap_or_else(|| field.zero())
            .try_div(m0)?;
        let proportional = v.len() <= self.m_reduced.len()
            && self.m_reduced.iter().all(|(k, mk)| {
                let want = &r * mk;
                match v.get(k) {
                    Some(x) => *x == want,
                    None => want.is_zero(),
                }
            });
        if !proportional {
            return Err(SpechtError::MurphyViolation {
                lambda: self.lambda.to_string(),
            });
        }
        Ok(r)
    }

    /// `<x, y>`, read off from `x^* y` modulo `I^lambda`.
    pub fn gram_entry(&self, x: &HeckeElement, y: &HeckeElement) -> Result<Scalar> {
        let h = self.ctx.algebra();
        self.murphy_scalar(&h.mul(&h.star(x), y)?)
    }

    /// `m_lambda T_w m_lambda` reduced to a multiple of `m_lambda`.
    pub fn murphy_check(&self, w: &Permutation) -> Result<Scalar> {
        let h = self.ctx.algebra();
        let m = self.ctx.m_lambda(&self.lambda)?;
        let x = h.mul(&h.mul(&m, &h.basis_element(w)?)?, &m)?;
        self.murphy_scalar(&x)
    }

    fn word_product(mats: &[Matrix], w: &Permutation, d: usize, field: FieldContext) -> Matrix {
        w.reduced_word()
            .into_iter()
            .fold(Matrix::identity(d, field), |acc, i| acc.mul(&mats[i - 1]))
    }

    /// Trace of `T_w` on `S^lambda`.
    pub fn character(&self, w: &Permutation) -> Scalar {
        Self::word_product(&self.actions, w, self.dim(), self.ctx.field()).trace()
    }

    /// Trace of `T_w` on `D^lambda`.
    pub fn d_character(&self, w: &Permutation) -> Scalar {
        Self::word_product(&self.d_actions, w, self.dim_d(), self.ctx.field()).trace()
    }

    /// Generator matrices on `S / rad`, realized as the column space of the
    /// Gram matrix: `G v` is sent to `G A_i v`.
    fn radical_quotient_actions(&self) -> Vec<Matrix> {
        let field = self.ctx.field();
        let g = &self.gram;
        let cols = g.pivot_columns();
        let r = cols.len();
        let basis = Matrix::from_fn(g.rows(), r, field, |i, j| g.get(i, cols[j]).clone());
        let rows = basis.transpose().pivot_columns();
        let square = Matrix::from_fn(r, r, field, |i, j| basis.get(rows[i], j).clone());
        self.actions
            .iter()
            .map(|a| {
                let image = g.mul(a);
                let mut out = Matrix::zeros(r, r, field);
                for (j, &c) in cols.iter().enumerate() {
                    let col = image.column(c);
                    let rhs: Vec<Scalar> = rows.iter().map(|&i| col[i].clone()).collect();
                    let x = square.solve(&rhs).expect("Gram columns are independent");
                    for (k, v) in x.into_iter().enumerate() {
                        out.set(k, j, v);
                    }
                }
                out
            })
            .collect()
    }
}
