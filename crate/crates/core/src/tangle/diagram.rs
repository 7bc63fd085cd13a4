//! Oriented tangle diagrams: crossings, signs and boundary points.

use super::slice::{Dir, Slice, SliceWord};
use super::TangleError;

/// A boundary point of a `(p, q)`-tangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Bottom(usize),
    Top(usize),
}

impl Point {
    /// Global index: bottom points first, then top points.
    pub fn index(self, p: usize) -> usize {
        match self {
            Point::Bottom(i) => i,
            Point::Top(j) => p + j,
        }
    }
}

/// A crossing of the diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// Index of the slice holding the crossing.
    pub slice: usize,
    /// 0-based position of the left strand.
    pub pos: usize,
    /// Whether the strand entering on the left passes over.
    pub left_over: bool,
    /// `+1` or `-1`.
    pub sign: i8,
}

/// A parsed and validated diagram with crossings numbered in the order
/// given by `crossings` (initially bottom to top).
#[derive(Clone, Debug, PartialEq)]
pub struct TangleDiagram {
    pub word: SliceWord,
    pub widths: Vec<usize>,
    pub orientations: Vec<Vec<Dir>>,
    pub crossings: Vec<Crossing>,
}

fn direction(d: Dir, from_left: bool) -> (i64, i64) {
    match (d, from_left) {
        (Dir::Up, true) => (1, 1),
        (Dir::Down, true) => (-1, -1),
        (Dir::Up, false) => (-1, 1),
        (Dir::Down, false) => (1, -1),
    }
}

impl TangleDiagram {
    pub fn new(word: SliceWord) -> Result<Self, TangleError> {
        let orientations = word.orientations()?;
        let widths = word.widths();
        let mut crossings = Vec::new();
        for (s, sl) in word.slices.iter().enumerate() {
            if let Slice::CrossOver(i) | Slice::CrossUnder(i) = *sl {
                let left_over = matches!(sl, Slice::CrossOver(_));
                let below = &orientations[s];
                let l = direction(below[i], true);
                let r = direction(below[i + 1], false);
                let (o, u) = if left_over { (l, r) } else { (r, l) };
                let cross = o.0 * u.1 - o.1 * u.0;
                crossings.push(Crossing { slice: s, pos: i, left_over, sign: if cross > 0 { 1 } else { -1 } });
            }
        }
        Ok(Self { word, widths, orientations, crossings })
    }

    pub fn parse(text: &str) -> Result<Self, TangleError> {
        Self::new(super::parse_slice_word(text)?)
    }

    pub fn n(&self) -> usize {
        self.crossings.len()
    }

    /// Number of bottom boundary points.
    pub fn p(&self) -> usize {
        self.widths[0]
    }

    /// Number of top boundary points.
    pub fn q(&self) -> usize {
        *self.widths.last().unwrap()
    }

    pub fn levels(&self) -> usize {
        self.widths.len()
    }

    pub fn is_link(&self) -> bool {
        self.p() == 0 && self.q() == 0
    }

    /// `(n₊, n₋)`
    pub fn crossing_signs(&self) -> (usize, usize) {
        let plus = self.crossings.iter().filter(|c| c.sign > 0).count();
        (plus, self.n() - plus)
    }

    /// The same diagram with crossing `k` renumbered as `perm[k]`.
    pub fn renumbered(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n());
        let mut crossings = self.crossings.clone();
        for (k, &to) in perm.iter().enumerate() {
            crossings[to] = self.crossings[k];
        }
        Self { crossings, ..self.clone() }
    }

    /// Crossing number (index into `crossings`) for each slice, if any.
    pub fn crossing_at_slice(&self) -> Vec<Option<usize>> {
        let mut m = vec![None; self.word.slices.len()];
        for (j, c) in self.crossings.iter().enumerate() {
            m[c.slice] = Some(j);
        }
        m
    }

    pub fn mirror(&self) -> Self {
        Self::new(self.word.mirror()).expect("mirror of a valid diagram")
    }
}
