//! Independent closed-link constructions used as cross-checks: the
//! Kauffman bracket by recursive skein evaluation, and Khovanov homology
//! from an unoriented point-tracing of smoothings with dense ranks.

use std::collections::BTreeMap;

use crate::algebra::FrobeniusData;
use crate::linalg::{Field, Matrix};
use crate::tangle::{Slice, TangleDiagram};

use super::homology::BigradedDims;
use super::polynomial::Laurent;
use super::ComplexError;

/// Slices with orientation forgotten.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Plain {
    Cap(usize),
    Cup(usize),
    /// A crossing at `pos`; `vertical_first` when its 0-smoothing is vertical.
    Cross { pos: usize, vertical_first: bool },
    /// Horizontal smoothing of a crossing: a cap followed by a cup.
    Turn(usize),
    /// Vertical smoothing of a crossing.
    Id,
}

fn plain_word(t: &TangleDiagram) -> Vec<Plain> {
    t.word
        .slices
        .iter()
        .map(|s| match *s {
            Slice::Cap(i) => Plain::Cap(i),
            Slice::Cup(i, _) => Plain::Cup(i),
            Slice::CrossOver(i) => Plain::Cross { pos: i, vertical_first: true },
            Slice::CrossUnder(i) => Plain::Cross { pos: i, vertical_first: false },
        })
        .collect()
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Traces a crossingless closed plain word: returns the circle index of
/// every boundary point of every level, circles numbered by first point.
fn trace(inputs: usize, word: &[Plain]) -> (usize, Vec<usize>) {
    let mut widths = vec![inputs];
    for s in word {
        let w = *widths.last().unwrap();
        widths.push(match s {
            Plain::Cap(_) => w - 2,
            Plain::Cup(_) => w + 2,
            Plain::Turn(_) | Plain::Id => w,
            Plain::Cross { .. } => panic!("trace needs a crossingless word"),
        });
    }
    let mut base = vec![0];
    for w in &widths {
        base.push(base.last().unwrap() + w);
    }
    let mut dsu = Dsu((0..*base.last().unwrap()).collect());
    for (l, s) in word.iter().enumerate() {
        let (lo, hi) = (base[l], base[l + 1]);
        let through = |b: usize| -> Option<usize> {
            match *s {
                Plain::Id => Some(b),
                Plain::Cap(i) => (b < i).then_some(b).or((b > i + 1).then(|| b - 2)),
                Plain::Cup(i) => Some(if b < i { b } else { b + 2 }),
                Plain::Turn(i) => (b < i || b > i + 1).then_some(b),
                Plain::Cross { .. } => unreachable!(),
            }
        };
        for b in 0..widths[l] {
            if let Some(a) = through(b) {
                dsu.union(lo + b, hi + a);
            }
        }
        match *s {
            Plain::Cap(i) => dsu.union(lo + i, lo + i + 1),
            Plain::Cup(i) => dsu.union(hi + i, hi + i + 1),
            Plain::Turn(i) => {
                dsu.union(lo + i, lo + i + 1);
                dsu.union(hi + i, hi + i + 1);
            }
            _ => {}
        }
    }
    let mut label = BTreeMap::new();
    let mut of_point = Vec::with_capacity(dsu.0.len());
    for x in 0..dsu.0.len() {
        let r = dsu.find(x);
        let n = label.len();
        of_point.push(*label.entry(r).or_insert(n));
    }
    (label.len(), of_point)
}

/// Replaces crossing `k` (in slice order) by its smoothing `α_k`.
fn smooth(word: &[Plain], alpha: usize) -> Vec<Plain> {
    let mut k = 0;
    word.iter()
        .map(|s| match *s {
            Plain::Cross { pos, vertical_first } => {
                let one = alpha >> k & 1 == 1;
                k += 1;
                if one == vertical_first { Plain::Turn(pos) } else { Plain::Id }
            }
            other => other,
        })
        .collect()
}

fn bracket_rec(inputs: usize, word: &[Plain], q: &Laurent, loop_value: &Laurent) -> Laurent {
    let Some(i) = word.iter().position(|s| matches!(s, Plain::Cross { .. })) else {
        return loop_value.pow(trace(inputs, word).0);
    };
    let Plain::Cross { pos, vertical_first } = word[i] else { unreachable!() };
    let with = |s: Plain| -> Vec<Plain> {
        let mut w = word[..i].to_vec();
        w.push(s);
        w.extend_from_slice(&word[i + 1..]);
        w
    };
    let (zero, one) = if vertical_first { (with(Plain::Id), with(Plain::Turn(pos))) } else { (with(Plain::Turn(pos)), with(Plain::Id)) };
    let b0 = bracket_rec(inputs, &zero, q, loop_value);
    let b1 = bracket_rec(inputs, &one, q, loop_value);
    b0.add(&q.mul(&b1).scale(-1))
}

/// `⟨D⟩` with `⟨X⟩ = ⟨0-smoothing⟩ - q⟨1-smoothing⟩`, each circle worth
/// `q + q⁻¹`, and `q = A²`.
pub fn kauffman_bracket(t: &TangleDiagram) -> Result<Laurent, ComplexError> {
    if !t.is_link() {
        return Err(ComplexError::NotALink);
    }
    let q = Laurent::monomial(1, 2);
    let loop_value = Laurent::monomial(1, 2).add(&Laurent::monomial(1, -2));
    Ok(bracket_rec(0, &plain_word(t), &q, &loop_value))
}

/// `(-1)^{n₋} A^{2n₊-4n₋} ⟨D⟩`, the expected graded Euler characteristic.
pub fn normalized_bracket(t: &TangleDiagram) -> Result<Laurent, ComplexError> {
    let (np, nm) = t.crossing_signs();
    let sign = if nm % 2 == 0 { 1 } else { -1 };
    Ok(kauffman_bracket(t)?.mul(&Laurent::monomial(sign, 2 * np as i64 - 4 * nm as i64)))
}

fn pow_shape(d: usize, c: usize) -> usize {
    d.pow(c as u32)
}

fn digits(mut idx: usize, d: usize, c: usize) -> Vec<usize> {
    let mut v = vec![0; c];
    for k in (0..c).rev() {
        v[k] = idx % d;
        idx /= d;
    }
    v
}

fn undigits(v: &[usize], d: usize) -> usize {
    v.iter().fold(0, |acc, x| acc * d + x)
}

/// Bigraded Khovanov-type homology of a link diagram with circle algebra
/// `c`, built without the tangle resolution machinery.
pub fn khovanov_link_oracle<F: Field>(t: &TangleDiagram, c: &FrobeniusData<F>) -> Result<BigradedDims, ComplexError> {
    if !t.is_link() {
        return Err(ComplexError::NotALink);
    }
    let f = &c.field;
    let word = plain_word(t);
    let n = t.n();
    let d = c.dim();
    let states: Vec<(usize, Vec<usize>)> = (0..1usize << n).map(|a| trace(0, &smooth(&word, a))).collect();
    let (np, nm) = t.crossing_signs();
    let shift = 2 * np as i64 - 4 * nm as i64;
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for a in 0..1usize << n {
        members[a.count_ones() as usize].push(a);
    }
    let mut offset = vec![0; 1 << n];
    let mut degs: Vec<Vec<i64>> = Vec::new();
    for (r, m) in members.iter().enumerate() {
        let mut v = Vec::new();
        for &a in m {
            offset[a] = v.len();
            for idx in 0..pow_shape(d, states[a].0) {
                let k: i64 = digits(idx, d, states[a].0).iter().map(|&x| c.degrees[x]).sum();
                v.push(k + 2 * r as i64 + shift);
            }
        }
        degs.push(v);
    }
    let mut diffs = Vec::new();
    for r in 0..n {
        let mut m = Matrix::zeros(f, degs[r + 1].len(), degs[r].len());
        for &a in &members[r] {
            for j in (0..n).filter(|&j| a >> j & 1 == 0) {
                let b = a | 1 << j;
                let sign = if (a & ((1 << j) - 1)).count_ones() % 2 == 1 { f.neg(&f.one()) } else { f.one() };
                add_edge(c, &states[a], &states[b], &sign, offset[a], offset[b], &mut m);
            }
        }
        diffs.push(m);
    }
    let start = -(nm as i64);
    Ok(dense_filtered_homology(f, start, &degs, &diffs))
}

/// Adds the merge or split between two states into `m`.
fn add_edge<F: Field>(
    c: &FrobeniusData<F>,
    src: &(usize, Vec<usize>),
    tgt: &(usize, Vec<usize>),
    sign: &F::Elem,
    o_in: usize,
    o_out: usize,
    m: &mut Matrix<F>,
) {
    let f = &c.field;
    let d = c.dim();
    // Circle correspondences through shared boundary points.
    let mut links: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut back: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (p, &s) in src.1.iter().enumerate() {
        let t = tgt.1[p];
        let e = links.entry(s).or_default();
        if !e.contains(&t) {
            e.push(t);
        }
        let e = back.entry(t).or_default();
        if !e.contains(&s) {
            e.push(s);
        }
    }
    let merge = tgt.0 + 1 == src.0;
    for idx in 0..pow_shape(d, src.0) {
        let dg = digits(idx, d, src.0);
        let mut out = vec![0; tgt.0];
        let mut terms: Vec<(Vec<usize>, F::Elem)> = Vec::new();
        if merge {
            let (tc, pair) = back.iter().find(|(_, v)| v.len() == 2).map(|(k, v)| (*k, v.clone())).unwrap();
            for (&s, ts) in &links {
                if !pair.contains(&s) {
                    out[ts[0]] = dg[s];
                }
            }
            let col = dg[pair[0]] * d + dg[pair[1]];
            for x in 0..d {
                let v = c.mu.get(x, col);
                if !f.is_zero(v) {
                    let mut o = out.clone();
                    o[tc] = x;
                    terms.push((o, v.clone()));
                }
            }
        } else {
            let (sc, pair) = links.iter().find(|(_, v)| v.len() == 2).map(|(k, v)| (*k, v.clone())).unwrap();
            for (&s, ts) in &links {
                if s != sc {
                    out[ts[0]] = dg[s];
                }
            }
            for x in 0..d {
                for y in 0..d {
                    let v = c.delta.get(x * d + y, dg[sc]);
                    if !f.is_zero(v) {
                        let mut o = out.clone();
                        o[pair[0]] = x;
                        o[pair[1]] = y;
                        terms.push((o, v.clone()));
                    }
                }
            }
        }
        for (o, v) in terms {
            m.add_to(o_out + undigits(&o, d), o_in + idx, &f.mul(sign, &v));
        }
    }
}

fn columns_where<F: Field>(m: &Matrix<F>, keep: impl Fn(usize) -> bool) -> Matrix<F> {
    let cols: Vec<Vec<F::Elem>> = (0..m.cols()).filter(|&c| keep(c)).map(|c| m.column(c)).collect();
    Matrix::from_columns(m.field(), m.rows(), &cols)
}

fn rows_where<F: Field>(m: &Matrix<F>, keep: impl Fn(usize) -> bool) -> Matrix<F> {
    columns_where(&m.transpose(), keep).transpose()
}

/// `dim F^kH^r - dim F^{k'}H^r` with ranks of dense restrictions, where
/// `F^k` is spanned by generators of degree at least `k`.
pub fn dense_filtered_homology<F: Field>(f: &F, start: i64, degs: &[Vec<i64>], diffs: &[Matrix<F>]) -> BigradedDims {
    let graded = diffs.iter().enumerate().all(|(i, m)| m.nonzero_entries().all(|(r, c, _)| degs[i + 1][r] == degs[i][c]));
    let mut out = BigradedDims::default();
    for (i, term) in degs.iter().enumerate() {
        let mut ks: Vec<i64> = term.clone();
        ks.sort_unstable();
        ks.dedup();
        let zero_in = |len: usize| Matrix::zeros(f, 0, len);
        let d_out = diffs.get(i).cloned().unwrap_or_else(|| zero_in(term.len()));
        let d_in = if i > 0 { Some(&diffs[i - 1]) } else { None };
        if graded {
            for &k in &ks {
                let cols = |x: usize| term[x] == k;
                let z = term.iter().filter(|&&x| x == k).count() - columns_where(&d_out, cols).rank();
                let b = d_in.map_or(0, |m| rows_where(&columns_where(m, |x| degs[i - 1][x] == k), cols).rank());
                out.add(k, start + i as i64, z - b);
            }
            continue;
        }
        // dim F^k H for every k, then successive differences.
        let fk = |k: i64| -> usize {
            let z = term.iter().filter(|&&x| x >= k).count() - columns_where(&d_out, |x| term[x] >= k).rank();
            let b = d_in.map_or(0, |m| m.rank() - rows_where(m, |x| term[x] < k).rank());
            z - b
        };
        let vals: Vec<usize> = ks.iter().map(|&k| fk(k)).collect();
        for (j, &k) in ks.iter().enumerate() {
            let next = vals.get(j + 1).copied().unwrap_or(0);
            out.add(k, start + i as i64, vals[j] - next);
        }
    }
    out
}
