//! Open-closed TQFT tangle homology over exact fields.

pub mod algebra;
pub mod linalg;
pub mod tangle;
pub mod complex;
pub mod compose;
pub mod cli;
