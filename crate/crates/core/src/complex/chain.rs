//! Bounded cochain complexes of internally graded or filtered spaces.

use crate::algebra::{AxiomReport, GradingMode};
use crate::linalg::{Field, SparseMatrix};

use super::polynomial::Laurent;

/// `C^start → C^{start+1} → …` with an internal degree on every generator.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainComplex<F: Field> {
    pub field: F,
    /// Cohomological degree of `terms[0]`.
    pub start: i64,
    /// Internal degree of each generator, per term.
    pub terms: Vec<Vec<i64>>,
    /// `diffs[i]: terms[i] → terms[i+1]`.
    pub diffs: Vec<SparseMatrix<F>>,
    pub mode: GradingMode,
}

impl<F: Field> ChainComplex<F> {
    /// Checks shapes and builds the complex.
    pub fn new(field: &F, start: i64, terms: Vec<Vec<i64>>, diffs: Vec<SparseMatrix<F>>, mode: GradingMode) -> Self {
        assert_eq!(diffs.len(), terms.len().saturating_sub(1), "one differential between consecutive terms");
        for (i, d) in diffs.iter().enumerate() {
            assert_eq!((d.rows(), d.cols()), (terms[i + 1].len(), terms[i].len()), "differential {i} shape");
        }
        Self { field: field.clone(), start, terms, diffs, mode }
    }

    /// The complex with a single term.
    pub fn single(field: &F, degree: i64, term: Vec<i64>, mode: GradingMode) -> Self {
        Self::new(field, degree, vec![term], Vec::new(), mode)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Cohomological degrees present, in order.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.terms.len() as i64).map(move |i| self.start + i)
    }

    pub fn term(&self, r: i64) -> &[i64] {
        let i = r - self.start;
        if i < 0 || i as usize >= self.terms.len() { &[] } else { &self.terms[i as usize] }
    }

    /// `d^r`, if both ends are present.
    pub fn diff(&self, r: i64) -> Option<&SparseMatrix<F>> {
        let i = r - self.start;
        if i < 0 { None } else { self.diffs.get(i as usize) }
    }

    pub fn total_dim(&self) -> usize {
        self.terms.iter().map(Vec::len).sum()
    }

    /// `V{j}`: raises every internal degree by `j`.
    pub fn shift_internal(&self, j: i64) -> Self {
        self.clone().into_shifted(j, 0)
    }

    /// `C[ℓ]`: `C[ℓ]^r = C^{r-ℓ}` with differential `(-1)^ℓ d`.
    pub fn shift_cohomological(&self, l: i64) -> Self {
        self.clone().into_shifted(0, l)
    }

    /// `C{j}[ℓ]` without copying.
    pub fn into_shifted(mut self, j: i64, l: i64) -> Self {
        if j != 0 {
            self.terms.iter_mut().flatten().for_each(|k| *k += j);
        }
        if l.rem_euclid(2) == 1 {
            let m1 = self.field.neg(&self.field.one());
            self.diffs = self.diffs.iter().map(|d| d.scale(&m1)).collect();
        }
        self.start += l;
        self
    }

    /// Drops leading and trailing zero terms.
    pub fn trimmed(&self) -> Self {
        let first = self.terms.iter().position(|t| !t.is_empty());
        let Some(first) = first else {
            return Self { start: 0, terms: Vec::new(), diffs: Vec::new(), ..self.clone() };
        };
        let last = self.terms.iter().rposition(|t| !t.is_empty()).unwrap();
        Self {
            start: self.start + first as i64,
            terms: self.terms[first..=last].to_vec(),
            diffs: self.diffs[first..last].to_vec(),
            ..self.clone()
        }
    }

    /// The degree-preserving part of every differential.
    pub fn associated_graded(&self) -> Self {
        let diffs = self
            .diffs
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let (rin, rout) = (&self.terms[i], &self.terms[i + 1]);
                let entries = d.entries().filter(|(r, c, _)| rout[*r] == rin[*c]).map(|(r, c, v)| (r, c, v.clone()));
                SparseMatrix::from_triplets(&self.field, d.rows(), d.cols(), entries.collect::<Vec<_>>())
            })
            .collect();
        let mode = if self.mode == GradingMode::None { GradingMode::None } else { GradingMode::Graded };
        Self { diffs, mode, ..self.clone() }
    }

    /// `Σ_r (-1)^r Σ_k dim C^{k,r} A^k` from the term dimensions.
    pub fn graded_euler_characteristic(&self) -> Laurent {
        let mut out = Laurent::zero();
        for (r, t) in self.degrees().zip(&self.terms) {
            let s = if r.rem_euclid(2) == 0 { 1 } else { -1 };
            for &k in t {
                out.add_term(k, s);
            }
        }
        out
    }

    /// Dimensions of the terms by `(r, k)`.
    pub fn term_dims(&self) -> super::BigradedDims {
        let mut d = super::BigradedDims::default();
        for (r, t) in self.degrees().zip(&self.terms) {
            for &k in t {
                d.add(k, r, 1);
            }
        }
        d
    }
}

/// Checks `d∘d = 0` and the degree discipline of every differential.
pub fn verify_complex<F: Field>(c: &ChainComplex<F>) -> AxiomReport {
    let mut rep = AxiomReport::new();
    for i in 0..c.diffs.len().saturating_sub(1) {
        let dd = c.diffs[i + 1].mul(&c.diffs[i]);
        let witness = dd.entries().next().map(|(row, col, v)| {
            format!("d^{} d^{} has entry {} at (out {row}, in {col})", c.start + i as i64 + 1, c.start + i as i64, c.field.format(v))
        });
        rep.push(format!("d_squared.{}", c.start + i as i64), witness);
    }
    let mode = if c.mode == GradingMode::None { GradingMode::Filtered } else { c.mode };
    for (i, d) in c.diffs.iter().enumerate() {
        let (rin, rout) = (&c.terms[i], &c.terms[i + 1]);
        let bad = d.entries().find(|(r, col, _)| match mode {
            GradingMode::Graded => rout[*r] != rin[*col],
            _ => rout[*r] < rin[*col],
        });
        let witness = bad.map(|(r, col, _)| format!("entry (out {r}, in {col}) maps degree {} to {}", rin[col], rout[r]));
        rep.push(format!("degree.{}", c.start + i as i64), witness);
    }
    rep
}

/// Tensor product of complexes with the Koszul sign on `d ⊗ 1 + (-1)^p 1 ⊗ d`;
/// generators are ordered with the first factor most significant within
/// each pair of terms, and pairs by the first term's degree.
pub fn tensor_complexes<F: Field>(a: &ChainComplex<F>, b: &ChainComplex<F>) -> ChainComplex<F> {
    let f = &a.field;
    if a.is_empty() || b.is_empty() {
        return ChainComplex::new(f, 0, Vec::new(), Vec::new(), a.mode.meet(b.mode));
    }
    let start = a.start + b.start;
    let top = a.start + a.len() as i64 - 1 + b.start + b.len() as i64 - 1;
    let (b_lo, b_hi) = (b.start, b.start + b.len() as i64 - 1);
    // Blocks of total degree r: (p, q) with p + q = r, p ascending.
    let blocks = |r: i64| -> Vec<(i64, i64)> { a.degrees().map(|p| (p, r - p)).filter(|(_, q)| (b_lo..=b_hi).contains(q)).collect() };
    let mut terms = Vec::new();
    let mut offsets = Vec::new();
    for r in start..=top {
        let mut degs = Vec::new();
        let mut off = Vec::new();
        for (p, q) in blocks(r) {
            off.push((p, q, degs.len()));
            for &x in a.term(p) {
                for &y in b.term(q) {
                    degs.push(x + y);
                }
            }
        }
        terms.push(degs);
        offsets.push(off);
    }
    let mut diffs = Vec::new();
    let m1 = f.neg(&f.one());
    for i in 0..terms.len() - 1 {
        let mut trip = Vec::new();
        for &(p, q, o) in &offsets[i] {
            let (na, nb) = (a.term(p).len(), b.term(q).len());
            let target = |pp: i64, qq: i64| offsets[i + 1].iter().find(|(x, y, _)| *x == pp && *y == qq).map(|t| t.2);
            if let (Some(da), Some(ot)) = (a.diff(p), target(p + 1, q)) {
                for (ra, ca, v) in da.entries() {
                    for y in 0..nb {
                        trip.push((ot + ra * nb + y, o + ca * nb + y, v.clone()));
                    }
                }
            }
            if let (Some(db), Some(ot)) = (b.diff(q), target(p, q + 1)) {
                let nb2 = b.term(q + 1).len();
                let sign = if p.rem_euclid(2) == 1 { m1.clone() } else { f.one() };
                for x in 0..na {
                    for (rb, cb, v) in db.entries() {
                        trip.push((ot + x * nb2 + rb, o + x * nb + cb, f.mul(&sign, v)));
                    }
                }
            }
        }
        diffs.push(SparseMatrix::from_triplets(f, terms[i + 1].len(), terms[i].len(), trip));
    }
    ChainComplex::new(f, start, terms, diffs, a.mode.meet(b.mode))
}
