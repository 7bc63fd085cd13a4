//! Oriented tangle diagrams as slice words: parsing, crossing signs,
//! checkerboard-oriented smoothings, saddle classification and the cube of
//! resolutions.

mod diagram;
mod random;
mod resolve;
mod slice;

pub use diagram::{Crossing, Point, TangleDiagram};
pub use random::{apply_move, random_move_pair, random_slice_word, random_slice_word_with, Move, RandomConfig};
pub use resolve::{
    boundary_signs, build_cube, gap_shaded, resolve, saddle_classify, segment_offsets, segment_up, Component,
    ComponentKind, LocalVariant, PointSign, ResolvedDiagram, SaddleDescriptor, SaddleKind, TangleCube,
};
pub use slice::{parse_slice_word, Dir, Slice, SliceWord};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("orientation mismatch: {0}")]
    OrientationMismatch(String),
}

/// The two-strand diagram with two positive crossings.
pub const TWIST_TWO: &str = "in 2 / orient u u / XO 1 / XO 1";
/// Two crossings of opposite sign cancelling by a second Reidemeister move.
pub const R2_PAIR: &str = "in 2 / orient u u / XO 1 / XU 1";
/// A single kink closed off by a cap.
pub const R1_KINK: &str = "in 2 / orient u d / XU 1 / CAP 1";

#[cfg(test)]
mod tests;
