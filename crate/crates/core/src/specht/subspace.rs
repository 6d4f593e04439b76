use std::collections::BTreeMap;

use crate::coefficients::{FieldContext, Scalar};

/// Sparse coordinate vector.
pub type SparseVec = BTreeMap<usize, Scalar>;

#[derive(Clone, Debug)]
struct Row {
    v: SparseVec,
    tag: SparseVec,
}

/// A subspace of `F^N` in reduced echelon form.
///
/// Every row has a pivot entry equal to `1`, and every row vanishes in the
/// pivot columns of the other rows, so reducing a vector is one pass over the
/// pivots it touches and the remainder is a canonical coset representative.
/// Pivots are chosen to be monomial units where possible, which keeps the
/// rows free of denominators in the Hecke algebra computations.
///
/// Rows can carry a tag vector; reduction returns the matching combination of
/// tags, which is how coordinates in a quotient are read off.
#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    ambient: usize,
    field: FieldContext,
    rows: Vec<Row>,
    pivot_row: BTreeMap<usize, usize>,
}

fn axpy(v: &mut SparseVec, a: &Scalar, x: &SparseVec) {
    for (k, xv) in x {
        let d = a * xv;
        match v.get_mut(k) {
            Some(slot) => {
                let s = &*slot - &d;
                if s.is_zero() {
                    v.remove(k);
                } else {
                    *slot = s;
                }
            }
            None => {
                v.insert(*k, -d);
            }
        }
    }
}

impl SubspaceBasis {
    pub fn new(ambient: usize, field: FieldContext) -> Self {
        SubspaceBasis {
            ambient,
            field,
            rows: Vec::new(),
            pivot_row: BTreeMap::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldContext {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Rows ordered by pivot column.
    pub fn rows(&self) -> Vec<&SparseVec> {
        self.pivot_row.values().map(|&r| &self.rows[r].v).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.pivot_row.keys().copied().collect()
    }

    /// Reduces `v` in place and returns the tag combination removed from it:
    /// `v_in = v_out + sum tag_k * (row with tag e_k)`.
    pub fn reduce(&self, v: &mut SparseVec) -> SparseVec {
        let mut tag = SparseVec::new();
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter_map(|(c, x)| self.pivot_row.get(c).map(|&r| (r, x.clone())))
            .collect();
        for (r, a) in hits {
            let row = &self.rows[r];
            axpy(v, &a, &row.v);
            axpy(&mut tag, &-&a, &row.tag);
        }
        tag
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut v = v.clone();
        self.reduce(&mut v);
        v.is_empty()
    }

    /// Adds `v` to the span. Returns the reduced vector that became a new row,
    /// or `None` if `v` was already in the span.
    pub fn insert(&mut self, v: SparseVec) -> Option<SparseVec> {
        self.insert_tagged(v, SparseVec::new())
    }

    /// Like [`insert`](Self::insert), attaching `tag` to the new row.
    pub fn insert_tagged(&mut self, mut v: SparseVec, tag: SparseVec) -> Option<SparseVec> {
        let removed = self.reduce(&mut v);
        if v.is_empty() {
            return None;
        }
        let mut tag = tag;
        axpy(&mut tag, &self.field.one(), &removed);
        let pivot = v
            .iter()
            .find(|(_, x)| x.is_monomial_unit())
            .or_else(|| v.iter().next())
            .map(|(c, _)| *c)
            .unwrap();
        let inv = v[&pivot].inv().expect("pivot is nonzero");
        let reduced = v.clone();
        let scale =
            |m: &SparseVec| -> SparseVec { m.iter().map(|(k, x)| (*k, x * &inv)).collect() };
        let row = Row {
            v: scale(&v),
            tag: scale(&tag),
        };
        for other in &mut self.rows {
            if let Some(a) = other.v.get(&pivot).cloned() {
                axpy(&mut other.v, &a, &row.v);
                axpy(&mut other.tag, &a, &row.tag);
            }
        }
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(row);
        Some(reduced)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: FieldContext, entries: &[(usize, i64)]) -> SparseVec {
        entries
            .iter()
            .filter(|(_, c)| *c != 0)
            .map(|&(k, c)| (k, f.from_int(c)))
            .collect()
    }

    #[test]
    fn membership_and_dimension() {
        let f = FieldContext::Rationals;
        let mut b = SubspaceBasis::new(3, f);
        assert!(b.insert(v(f, &[(0, 1), (1, 2)])).is_some());
        assert!(b.insert(v(f, &[(0, 2), (1, 4)])).is_none());
        assert!(b.insert(v(f, &[(1, 1), (2, 1)])).is_some());
        assert_eq!(b.dim(), 2);
        assert!(b.contains(&v(f, &[(0, 1), (1, 3), (2, 1)])));
        assert!(!b.contains(&v(f, &[(2, 1)])));
        let pivots = b.pivots();
        for (i, row) in b.rows().iter().enumerate() {
            for (j, p) in pivots.iter().enumerate() {
                let x = row.get(p);
                if i == j {
                    assert!(x.unwrap().is_one());
                } else {
                    assert!(x.is_none());
                }
            }
        }
    }

    #[test]
    fn tags_track_combinations() {
        let f = FieldContext::Rationals;
        let mut b = SubspaceBasis::new(3, f);
        let x = v(f, &[(0, 1), (1, 1)]);
        let y = v(f, &[(1, 1), (2, 1)]);
        b.insert_tagged(x.clone(), v(f, &[(0, 1)]));
        // x + y is reduced by x before becoming a row
        b.insert_tagged(v(f, &[(0, 1), (1, 2), (2, 1)]), v(f, &[(1, 1)]));
        let mut y2 = y.clone();
        assert_eq!(b.reduce(&mut y2), v(f, &[(0, -1), (1, 1)]));
        assert!(y2.is_empty());
        // 2x - 3y = 5x - 3(x + y)
        let mut z = v(f, &[(0, 2), (1, -1), (2, -3)]);
        let tag = b.reduce(&mut z);
        assert!(z.is_empty());
        assert_eq!(tag, v(f, &[(0, 5), (1, -3)]));
    }
}
