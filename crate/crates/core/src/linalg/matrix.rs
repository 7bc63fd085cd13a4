//! Dense row-major matrices with deterministic Gauss-Jordan elimination.

use std::fmt;

use super::{Field, LinalgError};

/// A dense matrix over `F`. Entries are always reduced field elements.
#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| self.field.format(x)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Self { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch(format!(
                    "row {i} has length {} but {cols} columns were declared",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(Self { field: field.clone(), rows: n, cols, data })
    }

    /// Builds a matrix from small integers, reduced into the field.
    pub fn from_i64(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| field.from_i64(x))
            })
            .collect();
        Self { field: field.clone(), rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
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
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &F::Elem) {
        let i = r * self.cols + c;
        self.data[i] = self.field.add(&self.data[i], v);
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    /// Iterates over nonzero entries as `(row, col, value)`.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &F::Elem)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !self.field.is_zero(x))
            .map(|(i, x)| (i / self.cols, i % self.cols, x))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !f.is_zero(b) {
                        let idx = i * out.cols + j;
                        f.add_mul_assign(&mut out.data[idx], a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        f.add_mul_assign(&mut acc, a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |f, a, b| f.sub(a, b))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&F, &F::Elem, &F::Elem) -> F::Elem) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| op(&self.field, a, b)).collect();
        Self { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(s, a)).collect();
        Self { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker product; row index `i*other.rows + k` (first factor most significant).
    pub fn kron(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows * other.rows, self.cols * other.cols);
        for (i, j, a) in self.nonzero_entries() {
            for (k, l, b) in other.nonzero_entries() {
                out.set(i * other.rows + k, j * other.cols + l, f.mul(a, b));
            }
        }
        out
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut out = Self::zeros(&self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Reduced row echelon form. Columns are scanned left to right and the
    /// first row (from the top) with a nonzero entry becomes the pivot row.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = f.neg(m.get(i, c));
                for j in c..m.cols {
                    let pj = m.get(r, j).clone();
                    if !f.is_zero(&pj) {
                        let idx = i * m.cols + j;
                        f.add_mul_assign(&mut m.data[idx], &factor, &pj);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space: one vector per free column, with a 1 in that
    /// column and the negated pivot-row entries in the pivot columns.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(r.get(row, free));
                }
                v
            })
            .collect()
    }

    /// Some solution `x` of `self * x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let f = &self.field;
        let rhs = Self::from_columns(f, self.rows, &[b.to_vec()]);
        let (r, pivots) = self.hstack(&rhs).rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }
}

impl<F: Field> Matrix<F> {
    /// Inverse of a square matrix, or `None` if it is singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let (r, pivots) = self.hstack(&Self::identity(&self.field, n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// `dim(span_a + span_b) - dim(span_b)`, i.e. the dimension of the image of
/// `span_a` in the quotient by `span_b`.
pub fn image_membership_rank<F: Field>(
    field: &F,
    len: usize,
    span_a: &[Vec<F::Elem>],
    span_b: &[Vec<F::Elem>],
) -> usize {
    let b = Matrix::from_columns(field, len, span_b);
    let ab = Matrix::from_columns(field, len, &[span_b, span_a].concat());
    ab.rank() - b.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Fp, Rationals};

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn identity_has_full_rank() {
        assert_eq!(Matrix::identity(&f2(), 3).rank(), 3);
        assert!(Matrix::identity(&f2(), 3).kernel_basis().is_empty());
    }

    #[test]
    fn proportional_rows_over_f5() {
        let f = Fp::new(5).unwrap();
        assert_eq!(Matrix::from_i64(&f, &[&[2, 4], &[1, 2]]).rank(), 1);
    }

    #[test]
    fn equal_rows_kernel() {
        let m = Matrix::from_i64(&f2(), &[&[1, 1], &[1, 1]]);
        assert_eq!(m.kernel_basis(), vec![vec![1, 1]]);
    }

    #[test]
    fn membership_rank_of_coordinate_vectors() {
        let f = f2();
        let e1 = vec![1, 0];
        let e2 = vec![0, 1];
        assert_eq!(image_membership_rank(&f, 2, &[e1.clone()], &[e1.clone()]), 0);
        assert_eq!(image_membership_rank(&f, 2, &[e1], &[e2]), 1);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, &[&[1, 2], &[2, 4]]);
        assert!(m.solve(&[q.from_i64(1), q.from_i64(3)]).is_none());
        let x = m.solve(&[q.from_i64(1), q.from_i64(2)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![q.from_i64(1), q.from_i64(2)]);
    }

    #[test]
    fn inverse_round_trip() {
        let f = Fp::new(5).unwrap();
        let m = Matrix::from_i64(&f, &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(&f, 2));
        assert!(Matrix::from_i64(&f, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn kron_ordering_is_first_factor_major() {
        let f = Fp::new(7).unwrap();
        let a = Matrix::from_i64(&f, &[&[1, 2]]);
        let b = Matrix::from_i64(&f, &[&[3], &[4]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 2));
        assert_eq!(k.row(0), &[3, 6]);
        assert_eq!(k.row(1), &[4, 1]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
            (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
                (Just(r), Just(c), proptest::collection::vec(-3i64..4, r * c))
            })
        }

        fn build<F: Field>(f: &F, r: usize, c: usize, v: &[i64]) -> Matrix<F> {
            let rows: Vec<&[i64]> = v.chunks(c).collect();
            assert_eq!(rows.len(), r);
            Matrix::from_i64(f, &rows)
        }

        proptest! {
            #[test]
            fn rank_nullity_over_f3((r, c, v) in small_matrix()) {
                let f = Fp::new(3).unwrap();
                let m = build(&f, r, c, &v);
                let ker = m.kernel_basis();
                prop_assert_eq!(m.rank() + ker.len(), c);
                for k in &ker {
                    prop_assert!(m.mul_vec(k).iter().all(|x| *x == 0));
                }
                prop_assert_eq!(Matrix::from_columns(&f, c, &ker).rank(), ker.len());
            }

            #[test]
            fn rank_nullity_over_q((r, c, v) in small_matrix()) {
                let q = Rationals;
                let m = build(&q, r, c, &v);
                let ker = m.kernel_basis();
                prop_assert_eq!(m.rank() + ker.len(), c);
                for k in &ker {
                    prop_assert!(m.mul_vec(k).iter().all(|x| q.is_zero(x)));
                }
            }

            #[test]
            fn transpose_preserves_rank((r, c, v) in small_matrix()) {
                let f = Fp::new(5).unwrap();
                let m = build(&f, r, c, &v);
                prop_assert_eq!(m.rank(), m.transpose().rank());
            }
        }
    }
}
