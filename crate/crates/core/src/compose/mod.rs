//! Local-to-global tangle calculus: bimodule building blocks for arcs and
//! crossings, coequalizer gluing over `A`, composition of a slice word cell
//! by cell, and comparison with the global tangle complex.

mod bimodule;

pub use bimodule::{coequalize, tangle_bimodule, tensor, BimoduleComplex, BoundaryPoint};

use std::collections::BTreeMap;

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::complex::{homology_bigraded, tangle_complex, BigradedDims, ComplexError};
use crate::linalg::Field;
use crate::tangle::{Dir, PointSign, Slice, SliceWord, TangleDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComposeError {
    #[error("algebra is not strongly separable; local composition is unavailable")]
    NotStronglySeparable,
    #[error("points {plus} and {minus} do not carry opposite signs")]
    SignMismatch { plus: usize, minus: usize },
    #[error("unknown building block {0}")]
    UnknownVariant(String),
    #[error("induced map is not well defined: {0}")]
    NotWellDefined(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Checkerboard colouring around a crossing: which pair of opposite
/// regions is shaded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shading {
    LeftRight,
    TopBottom,
}

/// The elementary pieces of a composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    Arc,
    /// A crossing of two upward strands.
    Crossing { positive: bool, shading: Shading },
}

impl BlockKind {
    /// Parses `arc`, `crossing+LR`, `crossing-TB` and so on.
    pub fn parse(s: &str) -> Result<Self, ComposeError> {
        let bad = || ComposeError::UnknownVariant(s.to_string());
        if s == "arc" {
            return Ok(Self::Arc);
        }
        let rest = s.strip_prefix("crossing").ok_or_else(bad)?;
        let (positive, colour) = match rest.chars().next() {
            Some('+') => (true, &rest[1..]),
            Some('-') => (false, &rest[1..]),
            _ => return Err(bad()),
        };
        let shading = match colour {
            "LR" => Shading::LeftRight,
            "TB" => Shading::TopBottom,
            _ => return Err(bad()),
        };
        Ok(Self::Crossing { positive, shading })
    }

    /// The one-cell diagram and colouring realizing this block.
    pub fn diagram(self) -> (TangleDiagram, i8) {
        let (slices, eps) = match self {
            Self::Arc => (Vec::new(), 1),
            Self::Crossing { positive, shading } => {
                let s = if positive { Slice::CrossOver(0) } else { Slice::CrossUnder(0) };
                let eps = if shading == Shading::LeftRight { 1 } else { -1 };
                (vec![s], eps)
            }
        };
        let inputs = if self == Self::Arc { vec![Dir::Up] } else { vec![Dir::Up, Dir::Up] };
        (TangleDiagram::new(SliceWord::new(inputs, slices).expect("valid block word")).expect("valid block"), eps)
    }
}

/// The bimodule complex of a single arc or crossing: `A` with `λ = ρ = μ`,
/// or the two-term complex `(A⊗A){2} → (A⊗A){4}` (positive) or
/// `(A⊗A){-4} → (A⊗A){-2}` (negative) with the saddle differential.
pub fn building_block<F: Field>(kind: BlockKind, alg: &Algebra<F>) -> Result<BimoduleComplex<F>, ComposeError> {
    let (t, eps) = kind.diagram();
    tangle_bimodule(&t, eps, alg)
}

fn require_separable<F: Field>(alg: &Algebra<F>) -> Result<(), ComposeError> {
    let k = alg.knowledgeable().ok_or(ComposeError::Complex(ComplexError::AlgebraNotKnowledgeable))?;
    if !k.a.is_strongly_separable()? {
        return Err(ComposeError::NotStronglySeparable);
    }
    Ok(())
}

/// Coequalizes the two points tagged `(level, pos)`.
fn glue_at<F: Field>(c: BimoduleComplex<F>, level: usize, pos: usize) -> Result<BimoduleComplex<F>, ComposeError> {
    let hits: Vec<usize> = (0..c.points.len()).filter(|&i| c.points[i].level == level && c.points[i].pos == pos).collect();
    if hits.len() < 2 {
        return Ok(c);
    }
    let (x, y) = (hits[0], hits[1]);
    let (plus, minus) = if c.points[x].sign == PointSign::Plus { (x, y) } else { (y, x) };
    coequalize(&c, plus, minus)
}

/// One cell of the slice grid: its local diagram, colouring, and the global
/// tags of its boundary points (bottoms, then tops).
struct Cell {
    diagram: TangleDiagram,
    epsilon: i8,
    tags: Vec<(usize, usize)>,
}

fn cells(t: &TangleDiagram, epsilon: i8) -> Vec<Vec<Cell>> {
    let parity = |pos: usize| if pos % 2 == 0 { epsilon } else { -epsilon };
    let local = |inputs: Vec<Dir>, slices: Vec<Slice>| {
        TangleDiagram::new(SliceWord::new(inputs, slices).expect("cell word")).expect("cell diagram")
    };
    let mut out = Vec::new();
    for (s, slice) in t.word.slices.iter().enumerate() {
        let ors = &t.orientations[s];
        let (w0, w1) = (t.widths[s], t.widths[s + 1]);
        let i = slice.position();
        let consumed = if matches!(slice, Slice::Cup(..)) { 0 } else { 2 };
        let mut row = Vec::new();
        for j in 0..w0 {
            if j >= i && j < i + consumed {
                continue;
            }
            let jt = if j < i { j } else { j + w1 - w0 };
            row.push(Cell { diagram: local(vec![ors[j]], Vec::new()), epsilon: parity(j), tags: vec![(s, j), (s + 1, jt)] });
        }
        let (inputs, sl, mut tags) = match *slice {
            Slice::Cap(_) => (vec![ors[i], ors[i + 1]], Slice::Cap(0), vec![(s, i), (s, i + 1)]),
            Slice::Cup(_, d) => (Vec::new(), Slice::Cup(0, d), Vec::new()),
            Slice::CrossOver(_) => (vec![ors[i], ors[i + 1]], Slice::CrossOver(0), vec![(s, i), (s, i + 1)]),
            Slice::CrossUnder(_) => (vec![ors[i], ors[i + 1]], Slice::CrossUnder(0), vec![(s, i), (s, i + 1)]),
        };
        if !matches!(slice, Slice::Cap(_)) {
            tags.extend([(s + 1, i), (s + 1, i + 1)]);
        }
        row.push(Cell { diagram: local(inputs, vec![sl]), epsilon: parity(i), tags });
        out.push(row);
    }
    out
}

/// `C(T, ε, 𝔸)`: the building blocks of every cell of the slice grid,
/// tensored together and coequalized at every internal point. External
/// points are tagged `(0, i)` at the bottom and `(slices, j)` at the top.
pub fn compose_tangle<F: Field>(t: &TangleDiagram, epsilon: i8, alg: &Algebra<F>) -> Result<BimoduleComplex<F>, ComposeError> {
    require_separable(alg)?;
    if t.word.slices.is_empty() {
        return tangle_bimodule(t, epsilon, alg);
    }
    let mut acc = BimoduleComplex::unit(alg.field(), alg.grading());
    for row in cells(t, epsilon) {
        for cell in row {
            let b = tangle_bimodule(&cell.diagram, cell.epsilon, alg)?.retag(|i, _| cell.tags[i]);
            acc = tensor(&acc, &b);
            for &(level, pos) in cell.tags.iter().filter(|x| x.0 > 0) {
                acc = glue_at(acc, level, pos)?;
            }
        }
    }
    Ok(acc.sort_points())
}

/// Tensors `c1` and `c2` and coequalizes each matched pair `(i in c1, j in
/// c2)`; the pair may be `(+, -)` or `(-, +)`.
pub fn glue_tangles<F: Field>(
    c1: &BimoduleComplex<F>,
    c2: &BimoduleComplex<F>,
    matching: &[(usize, usize)],
) -> Result<BimoduleComplex<F>, ComposeError> {
    let n1 = c1.points.len();
    for &(i, j) in matching {
        if c1.points[i].sign == c2.points[j].sign {
            return Err(ComposeError::SignMismatch { plus: i, minus: j });
        }
    }
    // Tag every point by its index in the tensor product so pairs can be
    // found after earlier coequalizers have removed points.
    let mut acc = tensor(c1, c2).retag(|i, _| (0, i));
    let originals: Vec<BoundaryPoint> = c1.points.iter().chain(&c2.points).copied().collect();
    for &(i, j) in matching {
        let find = |acc: &BimoduleComplex<F>, k: usize| acc.points.iter().position(|p| p.pos == k).expect("unmatched point");
        let (x, y) = (find(&acc, i), find(&acc, n1 + j));
        let (plus, minus) = if acc.points[x].sign == PointSign::Plus { (x, y) } else { (y, x) };
        acc = coequalize(&acc, plus, minus)?;
    }
    Ok(acc.retag(|_, p| (originals[p.pos].level, originals[p.pos].pos)))
}

/// Comparison of the composed and global complexes of one diagram.
#[derive(Clone, Debug, PartialEq)]
pub struct CompositionReport {
    pub gluings: usize,
    pub composed_terms: BigradedDims,
    pub global_terms: BigradedDims,
    pub composed_homology: BigradedDims,
    pub global_homology: BigradedDims,
}

impl CompositionReport {
    /// Equal term dimensions per `(k, r)` and equal homology rank tables.
    pub fn holds(&self) -> bool {
        self.composed_terms == self.global_terms && self.composed_homology == self.global_homology
    }

    /// Agreement after forgetting the internal degree.
    pub fn holds_ungraded(&self) -> bool {
        self.composed_terms.ungraded() == self.global_terms.ungraded()
            && self.composed_homology.ungraded() == self.global_homology.ungraded()
    }

    /// Per-degree homology ranks of both sides.
    pub fn ungraded_homology(&self) -> (BTreeMap<i64, usize>, BTreeMap<i64, usize>) {
        (self.composed_homology.ungraded(), self.global_homology.ungraded())
    }

    pub fn to_json(&self) -> Value {
        let table = |d: &BigradedDims| -> Vec<Value> { d.entries().map(|(k, r, n)| json!({ "r": r, "k": k, "rank": n })).collect() };
        json!({
            "holds": self.holds(),
            "holds_ungraded": self.holds_ungraded(),
            "gluings": self.gluings,
            "composed_homology": table(&self.composed_homology),
            "global_homology": table(&self.global_homology),
        })
    }
}

/// Composes `t` locally and compares the result with `tangle_complex`.
pub fn composition_report<F: Field>(t: &TangleDiagram, epsilon: i8, alg: &Algebra<F>) -> Result<CompositionReport, ComposeError> {
    let composed = compose_tangle(t, epsilon, alg)?;
    let global = tangle_complex(t, epsilon, alg)?;
    Ok(CompositionReport {
        gluings: composed.gluings,
        composed_terms: composed.complex.term_dims(),
        global_terms: global.term_dims(),
        composed_homology: homology_bigraded(&composed.complex),
        global_homology: homology_bigraded(&global),
    })
}

/// True iff the composed and global complexes agree on term dimensions and
/// homology in every bidegree.
pub fn verify_composition<F: Field>(t: &TangleDiagram, epsilon: i8, alg: &Algebra<F>) -> Result<bool, ComposeError> {
    Ok(composition_report(t, epsilon, alg)?.holds())
}
