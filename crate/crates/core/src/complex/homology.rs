//! Bigraded homology and spectral-sequence pages of filtered complexes.
//!
//! Generators of each term are ordered by internal degree, highest first,
//! which makes every prefix of the complex a subcomplex. Column reduction
//! in that order pairs generators; a pair whose ends sit `ℓ` filtration
//! steps apart survives to `E_ℓ` and is killed by `d_ℓ`, and unpaired
//! generators span `E_∞`, the associated graded of the homology.

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::{Field, SparseVec};

use super::chain::ChainComplex;
use super::polynomial::Polynomial2;

/// Non-negative ranks indexed by internal degree `k` and cohomological
/// degree `r`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BigradedDims {
    /// Keyed by `(r, k)`; zero entries are absent.
    ranks: BTreeMap<(i64, i64), usize>,
}

impl BigradedDims {
    pub fn add(&mut self, k: i64, r: i64, n: usize) {
        if n > 0 {
            *self.ranks.entry((r, k)).or_insert(0) += n;
        }
    }

    pub fn get(&self, k: i64, r: i64) -> usize {
        self.ranks.get(&(r, k)).copied().unwrap_or(0)
    }

    /// `(k, r, rank)`, ascending in `r` then `k`.
    pub fn entries(&self) -> impl Iterator<Item = (i64, i64, usize)> + '_ {
        self.ranks.iter().map(|((r, k), n)| (*k, *r, *n))
    }

    pub fn total(&self) -> usize {
        self.ranks.values().sum()
    }

    /// Total rank in cohomological degree `r`.
    pub fn in_degree(&self, r: i64) -> usize {
        self.ranks.iter().filter(|((rr, _), _)| *rr == r).map(|(_, n)| n).sum()
    }

    /// Ranks summed over the internal degree, by `r`.
    pub fn ungraded(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for ((r, _), n) in &self.ranks {
            *out.entry(*r).or_insert(0) += n;
        }
        out
    }

    pub fn shifted(&self, dk: i64, dr: i64) -> Self {
        Self { ranks: self.ranks.iter().map(|((r, k), n)| ((r + dr, k + dk), *n)).collect() }
    }

    pub fn poincare(&self) -> Polynomial2 {
        let mut p = Polynomial2::zero();
        for (k, r, n) in self.entries() {
            p.add_term(r, k, n as i64);
        }
        p
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (i64, i64, usize)>) -> Self {
        let mut d = Self::default();
        for (k, r, n) in entries {
            d.add(k, r, n);
        }
        d
    }
}

impl fmt::Display for BigradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().map(|(k, r, n)| format!("H^{{{k},{r}}}={n}")).collect();
        write!(f, "{}", if parts.is_empty() { "0".to_string() } else { parts.join(" ") })
    }
}

/// A persistence pair: generator `source` of term `r` reduces to a column
/// whose lowest entry is generator `target` of term `r + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PersistencePair {
    pub r: i64,
    pub source: usize,
    pub target: usize,
    /// Filtration steps between the two ends.
    pub length: i64,
}

/// The output of reducing every differential once.
#[derive(Clone, Debug, PartialEq)]
pub struct Persistence {
    pub pairs: Vec<PersistencePair>,
    /// Unpaired generators per term, as `(r, generator)`.
    pub essential: Vec<(i64, usize)>,
    terms: Vec<(i64, Vec<i64>)>,
}

/// Generators of a term in filtration order: degree descending, then index.
fn filtration_order(degs: &[i64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..degs.len()).collect();
    order.sort_by_key(|&g| (std::cmp::Reverse(degs[g]), g));
    order
}

fn reduce_differential<F: Field>(
    f: &F,
    col_order: &[usize],
    row_time: &[usize],
    row_order: &[usize],
    column: impl Fn(usize) -> SparseVec<F::Elem>,
) -> Vec<(usize, usize)> {
    let mut pivot_of: Vec<Option<usize>> = vec![None; row_time.len()];
    let mut reduced: Vec<SparseVec<F::Elem>> = Vec::new();
    let mut pairs = Vec::new();
    for &g in col_order {
        let mut v: SparseVec<F::Elem> = column(g).into_iter().map(|(row, x)| (row_time[row], x)).collect();
        v.sort_by_key(|(t, _)| *t);
        while let Some((low, lv)) = v.last().cloned() {
            let Some(pi) = pivot_of[low] else { break };
            let p = &reduced[pi];
            let pv = &p.last().unwrap().1;
            let c = f.neg(&f.mul(&lv, &f.inv(pv).expect("pivot is nonzero")));
            v = crate::linalg::axpy(f, &c, p, &v);
        }
        if let Some((low, _)) = v.last() {
            pivot_of[*low] = Some(reduced.len());
            pairs.push((g, row_order[*low]));
            reduced.push(v);
        }
    }
    pairs
}

/// Reduces every differential of `c` in filtration order.
pub fn persistence<F: Field>(c: &ChainComplex<F>) -> Persistence {
    let f = &c.field;
    let orders: Vec<Vec<usize>> = c.terms.iter().map(|t| filtration_order(t)).collect();
    let mut pairs = Vec::new();
    let mut paired: Vec<Vec<bool>> = c.terms.iter().map(|t| vec![false; t.len()]).collect();
    for (i, d) in c.diffs.iter().enumerate() {
        let mut row_time = vec![0; c.terms[i + 1].len()];
        for (t, &g) in orders[i + 1].iter().enumerate() {
            row_time[g] = t;
        }
        let found = reduce_differential(f, &orders[i], &row_time, &orders[i + 1], |g| d.column(g).clone());
        for (s, t) in found {
            paired[i][s] = true;
            paired[i + 1][t] = true;
            let length = c.terms[i + 1][t] - c.terms[i][s];
            pairs.push(PersistencePair { r: c.start + i as i64, source: s, target: t, length });
        }
    }
    let mut essential = Vec::new();
    for (i, p) in paired.iter().enumerate() {
        for &g in &orders[i] {
            if !p[g] {
                essential.push((c.start + i as i64, g));
            }
        }
    }
    let terms = c.degrees().zip(c.terms.iter().cloned()).collect();
    Persistence { pairs, essential, terms }
}

impl Persistence {
    fn degree(&self, r: i64, g: usize) -> i64 {
        let i = (r - self.terms[0].0) as usize;
        self.terms[i].1[g]
    }

    /// Ranks of `E_r`; `None` gives `E_∞`.
    pub fn page(&self, r: Option<i64>) -> BigradedDims {
        let mut d = BigradedDims::default();
        for &(rr, g) in &self.essential {
            d.add(self.degree(rr, g), rr, 1);
        }
        if let Some(r) = r {
            for p in self.pairs.iter().filter(|p| p.length >= r) {
                d.add(self.degree(p.r, p.source), p.r, 1);
                d.add(self.degree(p.r + 1, p.target), p.r + 1, 1);
            }
        }
        d
    }

    /// Rank of each component `E_r^{k,s} → E_r^{k+r,s+1}` of `d_r`, keyed
    /// by `((k, s), (k + r, s + 1))`.
    pub fn differential_ranks(&self, r: i64) -> BTreeMap<((i64, i64), (i64, i64)), usize> {
        let mut out = BTreeMap::new();
        for p in self.pairs.iter().filter(|p| p.length == r) {
            let from = (self.degree(p.r, p.source), p.r);
            let to = (self.degree(p.r + 1, p.target), p.r + 1);
            *out.entry((from, to)).or_insert(0) += 1;
        }
        out
    }

    /// The largest pair length; pages from `max_length + 1` on equal `E_∞`.
    pub fn max_length(&self) -> i64 {
        self.pairs.iter().map(|p| p.length).max().unwrap_or(0)
    }
}

/// `dim F^k H^r / F^{k+1} H^r`, the bigraded ranks of the homology.
pub fn homology_bigraded<F: Field>(c: &ChainComplex<F>) -> BigradedDims {
    persistence(c).page(None)
}

/// One page of the spectral sequence of the internal filtration.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralPage {
    pub r: i64,
    pub dims: BigradedDims,
    /// Ranks of the components of `d_r`.
    pub differential: BTreeMap<((i64, i64), (i64, i64)), usize>,
}

/// `E_r` together with the ranks of `d_r`. Internal degrees of the
/// catalog algebras move in steps of two, so a page `r` keeps every pair
/// at least `r` steps apart in the internal degree.
pub fn spectral_page<F: Field>(c: &ChainComplex<F>, r: i64) -> SpectralPage {
    let p = persistence(c);
    SpectralPage { r, dims: p.page(Some(r)), differential: p.differential_ranks(r) }
}

/// Every page from `E_0` until the sequence stabilises, then `E_∞`.
pub fn spectral_sequence<F: Field>(c: &ChainComplex<F>) -> (Vec<SpectralPage>, BigradedDims) {
    let p = persistence(c);
    let pages = (0..=p.max_length())
        .map(|r| SpectralPage { r, dims: p.page(Some(r)), differential: p.differential_ranks(r) })
        .collect();
    (pages, p.page(None))
}
