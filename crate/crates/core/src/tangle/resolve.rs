//! Smoothings of a diagram, their oriented components, saddle classification
//! and the cube of resolutions.
//!
//! A strand segment is a pair `(level, position)`: level `ℓ` is the
//! horizontal line between slice `ℓ-1` and slice `ℓ`, so level 0 carries the
//! bottom boundary points and the last level the top ones. The checkerboard
//! colouring shades gap `g` (the region left of position `g`) iff `g` is even
//! for `ε = +1` and odd for `ε = -1`, and a segment points up iff the region
//! on its west is shaded.

use super::diagram::{Point, TangleDiagram};
use super::slice::Slice;

/// `true` iff the segment at 0-based `pos` points up under colouring `epsilon`.
pub fn segment_up(pos: usize, epsilon: i8) -> bool {
    (pos % 2 == 0) == (epsilon > 0)
}

/// Whether the gap left of 0-based position `gap` is shaded.
pub fn gap_shaded(gap: usize, epsilon: i8) -> bool {
    (gap % 2 == 0) == (epsilon > 0)
}

/// Sign of a boundary point relative to the colouring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointSign {
    /// The tail of an arc; carries a left action.
    Minus,
    /// The head of an arc; carries a right action.
    Plus,
}

impl PointSign {
    pub fn symbol(self) -> char {
        match self {
            PointSign::Minus => '-',
            PointSign::Plus => '+',
        }
    }
}

/// Signs of all boundary points, bottom then top.
pub fn boundary_signs(t: &TangleDiagram, epsilon: i8) -> Vec<PointSign> {
    let bottom = (0..t.p()).map(|i| if segment_up(i, epsilon) { PointSign::Minus } else { PointSign::Plus });
    let top = (0..t.q()).map(|j| if segment_up(j, epsilon) { PointSign::Plus } else { PointSign::Minus });
    bottom.chain(top).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    Circle,
    /// Oriented from the `-` endpoint to the `+` endpoint.
    Arc { start: Point, end: Point },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub kind: ComponentKind,
    /// The smallest `(level, position)` segment on the component.
    pub anchor: (usize, usize),
}

impl Component {
    pub fn is_arc(&self) -> bool {
        matches!(self.kind, ComponentKind::Arc { .. })
    }

    pub fn start(&self) -> Option<Point> {
        match self.kind {
            ComponentKind::Arc { start, .. } => Some(start),
            ComponentKind::Circle => None,
        }
    }
}

/// The smoothing `D_α` with its components in canonical order.
#[derive(Clone, Debug, PartialEq)]
pub struct ResolvedDiagram {
    pub alpha: usize,
    pub epsilon: i8,
    pub components: Vec<Component>,
    /// Component of each segment, indexed by `segment_index`.
    pub segment_component: Vec<usize>,
}

impl ResolvedDiagram {
    /// `0` for circles, `1` for arcs.
    pub fn type_word(&self) -> Vec<u8> {
        self.components.iter().map(|c| u8::from(c.is_arc())).collect()
    }

    pub fn arcs(&self) -> usize {
        self.components.iter().filter(|c| c.is_arc()).count()
    }

    pub fn circles(&self) -> usize {
        self.components.len() - self.arcs()
    }
}

/// Offsets of each level in the flat segment numbering.
pub fn segment_offsets(t: &TangleDiagram) -> Vec<usize> {
    let mut off = Vec::with_capacity(t.levels() + 1);
    let mut acc = 0;
    for &w in &t.widths {
        off.push(acc);
        acc += w;
    }
    off.push(acc);
    off
}

/// Whether crossing `c` is smoothed vertically (strands kept) in state `alpha`.
fn vertical(t: &TangleDiagram, j: usize, alpha: usize) -> bool {
    let one = alpha >> j & 1 == 1;
    t.crossings[j].left_over != one
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Replaces each crossing by its 0- or 1-smoothing and traces components.
///
/// Crossing `j` (bit `j` of `alpha`) of an `XO` slice is smoothed vertically
/// for 0 and horizontally for 1; `XU` slices use the other assignment.
pub fn resolve(t: &TangleDiagram, alpha: usize, epsilon: i8) -> ResolvedDiagram {
    let off = segment_offsets(t);
    let total = off[t.levels()];
    let mut parent: Vec<usize> = (0..total).collect();
    let at_slice = t.crossing_at_slice();
    for (s, sl) in t.word.slices.iter().enumerate() {
        let (lo, hi) = (off[s], off[s + 1]);
        let wb = t.widths[s];
        let i = sl.position();
        match *sl {
            Slice::Cap(_) => {
                union(&mut parent, lo + i, lo + i + 1);
                for k in 0..wb {
                    if k < i {
                        union(&mut parent, lo + k, hi + k);
                    } else if k > i + 1 {
                        union(&mut parent, lo + k, hi + k - 2);
                    }
                }
            }
            Slice::Cup(..) => {
                union(&mut parent, hi + i, hi + i + 1);
                for k in 0..wb {
                    let up = if k < i { k } else { k + 2 };
                    union(&mut parent, lo + k, hi + up);
                }
            }
            Slice::CrossOver(_) | Slice::CrossUnder(_) => {
                let j = at_slice[s].expect("crossing slice");
                if vertical(t, j, alpha) {
                    union(&mut parent, lo + i, hi + i);
                    union(&mut parent, lo + i + 1, hi + i + 1);
                } else {
                    union(&mut parent, lo + i, lo + i + 1);
                    union(&mut parent, hi + i, hi + i + 1);
                }
                for k in (0..wb).filter(|&k| k != i && k != i + 1) {
                    union(&mut parent, lo + k, hi + k);
                }
            }
        }
    }
    let mut root_comp = vec![usize::MAX; total];
    let mut roots = Vec::new();
    let mut segment_component = vec![0; total];
    for x in 0..total {
        let r = find(&mut parent, x);
        if root_comp[r] == usize::MAX {
            root_comp[r] = roots.len();
            roots.push(x);
        }
        segment_component[x] = root_comp[r];
    }
    // Roots were met in increasing segment order, so `roots[c]` is the anchor
    // and components are already in canonical order.
    let top = t.levels() - 1;
    let mut ends: Vec<(Option<Point>, Option<Point>)> = vec![(None, None); roots.len()];
    for i in 0..t.p() {
        let c = segment_component[off[0] + i];
        let pt = Some(Point::Bottom(i));
        if segment_up(i, epsilon) { ends[c].0 = pt } else { ends[c].1 = pt }
    }
    for j in 0..t.q() {
        let c = segment_component[off[top] + j];
        let pt = Some(Point::Top(j));
        if segment_up(j, epsilon) { ends[c].1 = pt } else { ends[c].0 = pt }
    }
    let level_of = |x: usize| {
        let l = off.partition_point(|&o| o <= x) - 1;
        (l, x - off[l])
    };
    let components = roots
        .iter()
        .zip(&ends)
        .map(|(&r, e)| {
            let kind = match *e {
                (None, None) => ComponentKind::Circle,
                (Some(start), Some(end)) => ComponentKind::Arc { start, end },
                _ => unreachable!("arc with a single endpoint"),
            };
            Component { kind, anchor: level_of(r) }
        })
        .collect();
    ResolvedDiagram { alpha, epsilon, components, segment_component }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SaddleKind {
    /// `A ⊗ A → A ⊗ A`
    ArcArc,
    /// `A → C ⊗ A`
    ArcToCircleArc,
    /// `C ⊗ A → A`
    CircleArcToArc,
    /// `C ⊗ C → C`
    MergeCC,
    /// `C → C ⊗ C`
    SplitCC,
}

impl SaddleKind {
    pub fn name(self) -> &'static str {
        match self {
            SaddleKind::ArcArc => "ArcArc",
            SaddleKind::ArcToCircleArc => "ArcToCircleArc",
            SaddleKind::CircleArcToArc => "CircleArcToArc",
            SaddleKind::MergeCC => "Merge_CC",
            SaddleKind::SplitCC => "Split_CC",
        }
    }
}

/// Local frame of the crossing: `X` when its west and east wedges are
/// shaded, `Y` when north and south are.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalVariant {
    X,
    Y,
}

/// The saddle on edge `(α, j)` of the cube.
///
/// `source` and `target` list the touched components in the order the local
/// map expects:
/// `ArcArc` takes `[a₁, a₂]` (canonical order) to `[b₁, b₂]` where `b₁` starts
/// where `a₁` starts; `CircleArcToArc` takes `[circle, arc]` to `[arc]`;
/// `ArcToCircleArc` the reverse; `MergeCC` and `SplitCC` use canonical order.
#[derive(Clone, Debug, PartialEq)]
pub struct SaddleDescriptor {
    pub crossing: usize,
    pub alpha: usize,
    pub kind: SaddleKind,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    /// `(source component, target component)` for the untouched ones.
    pub untouched: Vec<(usize, usize)>,
    pub variant: LocalVariant,
}

fn touched(t: &TangleDiagram, off: &[usize], r: &ResolvedDiagram, j: usize) -> Vec<usize> {
    let c = t.crossings[j];
    let (lo, hi) = (off[c.slice], off[c.slice + 1]);
    let mut v: Vec<usize> =
        [lo + c.pos, lo + c.pos + 1, hi + c.pos, hi + c.pos + 1].iter().map(|&x| r.segment_component[x]).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Classifies the saddle from `src = D_α` to `tgt = D_{α ∪ {j}}`.
pub fn saddle_classify(t: &TangleDiagram, src: &ResolvedDiagram, tgt: &ResolvedDiagram, j: usize) -> SaddleDescriptor {
    assert!(src.alpha >> j & 1 == 0 && tgt.alpha == src.alpha | 1 << j);
    let off = segment_offsets(t);
    let s = touched(t, &off, src, j);
    let g = touched(t, &off, tgt, j);
    let arc = |r: &ResolvedDiagram, c: usize| r.components[c].is_arc();
    let (kind, source, target) = match (s.len(), g.len()) {
        (2, 1) => match (arc(src, s[0]), arc(src, s[1])) {
            (false, false) => (SaddleKind::MergeCC, s.clone(), g.clone()),
            (false, true) => (SaddleKind::CircleArcToArc, s.clone(), g.clone()),
            (true, false) => (SaddleKind::CircleArcToArc, vec![s[1], s[0]], g.clone()),
            (true, true) => unreachable!("two arcs cannot merge into one component"),
        },
        (1, 2) => match (arc(tgt, g[0]), arc(tgt, g[1])) {
            (false, false) => (SaddleKind::SplitCC, s.clone(), g.clone()),
            (false, true) => (SaddleKind::ArcToCircleArc, s.clone(), g.clone()),
            (true, false) => (SaddleKind::ArcToCircleArc, s.clone(), vec![g[1], g[0]]),
            (true, true) => unreachable!("one arc cannot split into two arcs"),
        },
        (2, 2) => {
            debug_assert!(s.iter().all(|&c| arc(src, c)) && g.iter().all(|&c| arc(tgt, c)));
            let first = src.components[s[0]].start();
            let target = if tgt.components[g[0]].start() == first { g.clone() } else { vec![g[1], g[0]] };
            (SaddleKind::ArcArc, s.clone(), target)
        }
        other => unreachable!("saddle touching {other:?} components"),
    };
    let mut untouched = Vec::new();
    for (ci, c) in src.components.iter().enumerate() {
        if s.contains(&ci) {
            continue;
        }
        let (l, p) = c.anchor;
        let tc = tgt.segment_component[off[l] + p];
        untouched.push((ci, tc));
    }
    let cr = t.crossings[j];
    let variant = if gap_shaded(cr.pos, src.epsilon) { LocalVariant::X } else { LocalVariant::Y };
    SaddleDescriptor { crossing: j, alpha: src.alpha, kind, source, target, untouched, variant }
}

/// All smoothings and saddles of a diagram.
#[derive(Clone, Debug, PartialEq)]
pub struct TangleCube {
    pub n: usize,
    pub epsilon: i8,
    /// Indexed by the bitmask `α`.
    pub vertices: Vec<ResolvedDiagram>,
    /// Edges `(α, j)` with `j ∉ α`, sorted by `α` then `j`.
    pub edges: Vec<SaddleDescriptor>,
}

impl TangleCube {
    /// Internal degree shift `2|α|` of a vertex.
    pub fn vertex_shift(alpha: usize) -> i64 {
        2 * alpha.count_ones() as i64
    }

    pub fn edge(&self, alpha: usize, j: usize) -> &SaddleDescriptor {
        let k = self.edges.partition_point(|e| (e.alpha, e.crossing) < (alpha, j));
        &self.edges[k]
    }
}

pub fn build_cube(t: &TangleDiagram, epsilon: i8) -> TangleCube {
    let n = t.n();
    let vertices: Vec<ResolvedDiagram> = (0..1usize << n).map(|a| resolve(t, a, epsilon)).collect();
    let mut edges = Vec::with_capacity(n << n.saturating_sub(1));
    for a in 0..1usize << n {
        for j in (0..n).filter(|&j| a >> j & 1 == 0) {
            edges.push(saddle_classify(t, &vertices[a], &vertices[a | 1 << j], j));
        }
    }
    TangleCube { n, epsilon, vertices, edges }
}
