//! Realized cubes, signed total complexes, bigraded homology, tangle
//! polynomials, spectral-sequence pages and independent link oracles.

mod chain;
mod homology;
mod oracle;
mod polynomial;
mod realize;

pub use chain::{tensor_complexes, verify_complex, ChainComplex};
pub use homology::{
    homology_bigraded, persistence, spectral_page, spectral_sequence, BigradedDims, Persistence, PersistencePair,
    SpectralPage,
};
pub use oracle::{dense_filtered_homology, kauffman_bracket, khovanov_link_oracle, normalized_bracket};
pub use polynomial::{Laurent, Polynomial2};
pub use realize::{realize_cube, tangle_complex, term_layout, total_complex, LocalMaps, RealizedCube, TensorShape, VertexSpace};

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::linalg::Field;
use crate::tangle::TangleDiagram;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("diagram has arcs but the algebra has no open part")]
    AlgebraNotKnowledgeable,
    #[error("cube square at alpha={alpha:#b} for crossings {j} and {l} does not commute")]
    NonCommutingSquare { alpha: usize, j: usize, l: usize },
    #[error("diagram has boundary points; a link diagram is required")]
    NotALink,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Bigraded homology together with the data printed by the CLI.
#[derive(Clone, Debug, PartialEq)]
pub struct HomologyReport {
    pub field_char: u64,
    pub algebra: String,
    pub epsilon: i8,
    pub n_plus: usize,
    pub n_minus: usize,
    pub homology: BigradedDims,
}

impl HomologyReport {
    pub fn compute<F: Field>(t: &TangleDiagram, epsilon: i8, alg: &Algebra<F>, name: &str) -> Result<Self, ComplexError> {
        let c = tangle_complex(t, epsilon, alg)?;
        let (n_plus, n_minus) = t.crossing_signs();
        Ok(Self {
            field_char: alg.field().characteristic(),
            algebra: name.to_string(),
            epsilon,
            n_plus,
            n_minus,
            homology: homology_bigraded(&c),
        })
    }

    pub fn polynomial(&self) -> Polynomial2 {
        self.homology.poincare()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> =
            self.homology.entries().map(|(k, r, n)| json!({ "r": r, "k": k, "rank": n })).collect();
        json!({
            "field": { "char": self.field_char },
            "algebra": self.algebra,
            "epsilon": self.epsilon,
            "n_plus": self.n_plus,
            "n_minus": self.n_minus,
            "homology": rows,
            "polynomial": self.polynomial().to_string(),
        })
    }
}

/// The Poincaré polynomial `Σ dim H^{k,r} t^r A^k` of the tangle complex.
pub fn tangle_polynomial<F: Field>(t: &TangleDiagram, epsilon: i8, alg: &Algebra<F>) -> Result<Polynomial2, ComplexError> {
    Ok(homology_bigraded(&tangle_complex(t, epsilon, alg)?).poincare())
}

/// `Σ_r (-1)^r Σ_k dim C^{k,r} A^k`.
pub fn graded_euler_characteristic<F: Field>(c: &ChainComplex<F>) -> Laurent {
    c.graded_euler_characteristic()
}

#[cfg(test)]
mod tests;
