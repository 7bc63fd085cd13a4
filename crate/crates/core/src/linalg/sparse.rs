//! Column-sparse matrices, sparse vectors and filtration-aware quotients.

use std::collections::BTreeMap;

use super::{Field, Matrix};

/// A sparse vector: `(index, value)` pairs sorted by index, no explicit zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// `y + a * x` for sorted sparse vectors.
pub fn axpy<F: Field>(f: &F, a: &F::Elem, x: &[(usize, F::Elem)], y: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, f.mul(a, &x[i].1)));
            i += 1;
        } else if take_y {
            out.push(y[j].clone());
            j += 1;
        } else {
            let v = f.add(&y[j].1, &f.mul(a, &x[i].1));
            if !f.is_zero(&v) {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Sorts, merges duplicates and drops zeros.
pub fn normalize<F: Field>(f: &F, mut v: SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y = f.add(y, &x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !f.is_zero(x));
    out
}

/// A matrix stored as sorted sparse columns.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Self { field: field.clone(), rows, cols: vec![Vec::new(); cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let cols = (0..n).map(|i| vec![(i, field.one())]).collect();
        Self { field: field.clone(), rows: n, cols }
    }

    /// Builds from columns that need not be sorted or duplicate-free.
    pub fn from_columns(field: &F, rows: usize, cols: Vec<SparseVec<F::Elem>>) -> Self {
        let cols = cols
            .into_iter()
            .map(|c| {
                let c = normalize(field, c);
                debug_assert!(c.last().is_none_or(|(i, _)| *i < rows));
                c
            })
            .collect();
        Self { field: field.clone(), rows, cols }
    }

    pub fn from_triplets(field: &F, rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, F::Elem)>) -> Self {
        let mut cs: Vec<SparseVec<F::Elem>> = vec![Vec::new(); cols];
        for (r, c, v) in entries {
            cs[c].push((r, v));
        }
        Self::from_columns(field, rows, cs)
    }

    pub fn from_dense(m: &Matrix<F>) -> Self {
        let f = m.field();
        let mut cols: Vec<SparseVec<F::Elem>> = vec![Vec::new(); m.cols()];
        for (r, c, v) in m.nonzero_entries() {
            cols[c].push((r, v.clone()));
        }
        Self { field: f.clone(), rows: m.rows(), cols }
    }

    pub fn to_dense(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(&self.field, self.rows, self.cols.len());
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, c: usize) -> &SparseVec<F::Elem> {
        &self.cols[c]
    }

    pub fn columns(&self) -> &[SparseVec<F::Elem>] {
        &self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> F::Elem {
        match self.cols[c].binary_search_by_key(&r, |(i, _)| *i) {
            Ok(k) => self.cols[c][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    /// Iterates over `(row, col, value)` column by column.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &F::Elem)> + '_ {
        self.cols.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn mul_sparse_vec(&self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let f = &self.field;
        let mut acc = Vec::new();
        for (j, x) in v {
            acc.extend(self.cols[*j].iter().map(|(i, a)| (*i, f.mul(a, x))));
        }
        normalize(f, acc)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols(), "matrix-vector dimension mismatch");
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (r, a) in &self.cols[c] {
                f.add_mul_assign(&mut out[*r], a, x);
            }
        }
        out
    }

    /// `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols(), other.rows, "sparse product dimension mismatch");
        let cols = other.cols.iter().map(|c| self.mul_sparse_vec(c)).collect();
        Self { field: self.field.clone(), rows: self.rows, cols }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()), "shape mismatch");
        let one = self.field.one();
        let cols = self.cols.iter().zip(&other.cols).map(|(a, b)| axpy(&self.field, &one, a, b)).collect();
        Self { field: self.field.clone(), rows: self.rows, cols }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = &self.field;
        if f.is_zero(s) {
            return Self::zeros(f, self.rows, self.cols());
        }
        let cols = self.cols.iter().map(|c| c.iter().map(|(i, x)| (*i, f.mul(s, x))).collect()).collect();
        Self { field: f.clone(), rows: self.rows, cols }
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<SparseVec<F::Elem>> = vec![Vec::new(); self.rows];
        for (r, c, v) in self.entries() {
            cols[r].push((c, v.clone()));
        }
        Self { field: self.field.clone(), rows: self.cols(), cols }
    }

    /// Kronecker product with the first factor most significant.
    pub fn kron(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut cols = Vec::with_capacity(self.cols() * other.cols());
        for a in &self.cols {
            for b in &other.cols {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (i, x) in a {
                    for (k, y) in b {
                        col.push((i * other.rows + k, f.mul(x, y)));
                    }
                }
                cols.push(col);
            }
        }
        Self { field: f.clone(), rows: self.rows * other.rows, cols }
    }

    /// Block embedding: places `self` at row offset `r0` into a taller matrix.
    pub fn embed_rows(&self, total_rows: usize, r0: usize) -> Self {
        let cols = self.cols.iter().map(|c| c.iter().map(|(i, x)| (i + r0, x.clone())).collect()).collect();
        Self { field: self.field.clone(), rows: total_rows, cols }
    }

    pub fn rank(&self) -> usize {
        let order: Vec<usize> = (0..self.rows).collect();
        let mut red = Reducer::new(&self.field);
        self.cols.iter().filter(|c| red.insert(relabel(c, &order))).count()
    }
}

fn relabel<E: Clone>(v: &[(usize, E)], pos: &[usize]) -> SparseVec<E> {
    let mut out: SparseVec<E> = v.iter().map(|(i, x)| (pos[*i], x.clone())).collect();
    out.sort_by_key(|(i, _)| *i);
    out
}

/// Incremental echelon reduction pivoting on the largest index of each vector.
struct Reducer<'a, F: Field> {
    f: &'a F,
    rows: BTreeMap<usize, SparseVec<F::Elem>>,
}

impl<'a, F: Field> Reducer<'a, F> {
    fn new(f: &'a F) -> Self {
        Self { f, rows: BTreeMap::new() }
    }

    /// Reduces `v` against the stored rows; stores it (normalized) if it is new.
    fn insert(&mut self, mut v: SparseVec<F::Elem>) -> bool {
        let f = self.f;
        while let Some((lead, c)) = v.last().cloned() {
            match self.rows.get(&lead) {
                Some(row) => v = axpy(f, &f.neg(&c), row, &v),
                None => {
                    let inv = f.inv(&c).expect("nonzero leading coefficient");
                    let v = v.into_iter().map(|(i, x)| (i, f.mul(&inv, &x))).collect();
                    self.rows.insert(lead, v);
                    return true;
                }
            }
        }
        false
    }

    /// Makes every stored row free of other pivot coordinates.
    fn back_substitute(&mut self) {
        let f = self.f;
        let leads: Vec<usize> = self.rows.keys().copied().collect();
        for &lead in &leads {
            let mut v = self.rows[&lead].clone();
            let mut k = v.len().saturating_sub(1);
            // entries other than the lead sit below it; scan downward
            while k > 0 {
                k -= 1;
                let (idx, c) = v[k].clone();
                if idx != lead {
                    if let Some(row) = self.rows.get(&idx) {
                        v = axpy(f, &f.neg(&c), row, &v);
                        k = v.partition_point(|(i, _)| *i < idx);
                    }
                }
            }
            self.rows.insert(lead, v);
        }
    }
}

/// The quotient `V / span(relations)` with a complement spanned by the
/// coordinate vectors that never became pivots.
///
/// `priority[c]` ranks coordinate `c`; each relation is pivoted on its
/// highest-priority coordinate, so every pivot coordinate is rewritten in
/// terms of lower-priority ones. Keeping low-priority coordinates (for
/// instance higher filtration degrees) makes the projection filtration
/// preserving.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    /// Kept coordinates of `V`, ascending.
    pub complement: Vec<usize>,
    /// Projection `V -> V/R` in the complement basis.
    pub projection: SparseMatrix<F>,
    /// Section `V/R -> V` sending each quotient basis vector to its coordinate vector.
    pub section: SparseMatrix<F>,
    /// Dimension of the relation span.
    pub relation_rank: usize,
}

impl<F: Field> Quotient<F> {
    pub fn new(f: &F, dim: usize, priority: &[usize], relations: impl IntoIterator<Item = SparseVec<F::Elem>>) -> Self {
        assert_eq!(priority.len(), dim, "priority length mismatch");
        // position of each coordinate in priority order
        let mut by_priority: Vec<usize> = (0..dim).collect();
        by_priority.sort_by_key(|&c| (priority[c], c));
        let mut pos = vec![0; dim];
        for (p, &c) in by_priority.iter().enumerate() {
            pos[c] = p;
        }
        let mut red = Reducer::new(f);
        for r in relations {
            red.insert(relabel(&r, &pos));
        }
        red.back_substitute();
        let relation_rank = red.rows.len();
        let complement: Vec<usize> = (0..dim).filter(|c| !red.rows.contains_key(&pos[*c])).collect();
        let mut qidx = vec![usize::MAX; dim];
        for (k, &c) in complement.iter().enumerate() {
            qidx[c] = k;
        }
        let q = complement.len();
        let mut cols: Vec<SparseVec<F::Elem>> = Vec::with_capacity(dim);
        for c in 0..dim {
            match red.rows.get(&pos[c]) {
                None => cols.push(vec![(qidx[c], f.one())]),
                Some(row) => cols.push(
                    row.iter()
                        .filter(|(p, _)| *p != pos[c])
                        .map(|(p, x)| (qidx[by_priority[*p]], f.neg(x)))
                        .collect(),
                ),
            }
        }
        let projection = SparseMatrix::from_columns(f, q, cols);
        let section = SparseMatrix::from_columns(f, dim, complement.iter().map(|&c| vec![(c, f.one())]).collect());
        Self { complement, projection, section, relation_rank }
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Fp, Rationals};

    #[test]
    fn sparse_and_dense_products_agree() {
        let f = Fp::new(7).unwrap();
        let a = Matrix::from_i64(&f, &[&[1, 0, 2], &[0, 3, 0]]);
        let b = Matrix::from_i64(&f, &[&[1, 1], &[0, 5], &[4, 0]]);
        let sa = SparseMatrix::from_dense(&a);
        let sb = SparseMatrix::from_dense(&b);
        assert_eq!(sa.mul(&sb).to_dense(), a.mul(&b));
        assert_eq!(sa.kron(&sb).to_dense(), a.kron(&b));
        assert_eq!(sa.transpose().to_dense(), a.transpose());
        assert_eq!(sa.rank(), a.rank());
    }

    #[test]
    fn quotient_keeps_low_priority_coordinates() {
        let q = Rationals;
        let one = q.one();
        // relation e0 - e1; e0 has higher priority so it is eliminated
        let quot = Quotient::new(&q, 3, &[2, 1, 0], vec![vec![(0, one.clone()), (1, q.neg(&one))]]);
        assert_eq!(quot.complement, vec![1, 2]);
        assert_eq!(quot.projection.get(0, 0), one);
        assert_eq!(quot.projection.get(0, 1), one);
        assert_eq!(quot.projection.get(1, 2), one);
    }

    #[test]
    fn quotient_with_dependent_relations() {
        let f = Fp::new(3).unwrap();
        let rels = vec![vec![(0, 1), (1, 1)], vec![(1, 1), (2, 1)], vec![(0, 1), (2, 2)]];
        let quot = Quotient::new(&f, 3, &[0, 1, 2], rels);
        assert_eq!(quot.relation_rank, 2);
        assert_eq!(quot.dim(), 1);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn projection_kills_relations_and_splits(
                dim in 1usize..7,
                raw in proptest::collection::vec(proptest::collection::vec((0usize..7, 0u64..5), 0..4), 0..5),
                prio_seed in proptest::collection::vec(0usize..4, 7),
            ) {
                let f = Fp::new(5).unwrap();
                let rels: Vec<SparseVec<u64>> = raw
                    .into_iter()
                    .map(|r| normalize(&f, r.into_iter().filter(|(i, _)| *i < dim).collect()))
                    .collect();
                let prio: Vec<usize> = prio_seed[..dim].to_vec();
                let quot = Quotient::new(&f, dim, &prio, rels.clone());
                let dense_rank = SparseMatrix::from_columns(&f, dim, rels.clone()).to_dense().rank();
                prop_assert_eq!(quot.relation_rank, dense_rank);
                prop_assert_eq!(quot.dim() + dense_rank, dim);
                for r in &rels {
                    prop_assert!(quot.projection.mul_sparse_vec(r).is_empty());
                }
                let ps = quot.projection.mul(&quot.section);
                prop_assert_eq!(ps, SparseMatrix::identity(&f, quot.dim()));
            }
        }
    }
}
