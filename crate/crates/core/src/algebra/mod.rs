//! Frobenius and knowledgeable Frobenius algebras by structure constants:
//! axiom checks, window elements, the state-sum construction and a catalog.

mod catalog;
mod frobenius;
mod json;
mod knowledgeable;
mod report;
mod separable;

pub use catalog::{
    a_ht, barnatan_pair_data, builtin, c_ht, hk_plus_k_data, khovanov_pair_data, lee_pair_data, m2k_plus_k_data,
    matrix_data, modp_x_data, quadratic, quaternion_data, scalar_algebra, truncated_poly_data, Params, CATALOG,
};
pub use frobenius::{
    degree_extremal_part, degree_violation, tau, tensor_degrees, BarNatanReport, FrobeniusData, GradingMode,
};
pub use json::FORMAT_VERSION;
pub use knowledgeable::KnowledgeableFrobenius;
pub use report::{compare_maps, AxiomCheck, AxiomReport, TensorLabels};
pub use separable::Window;

use thiserror::Error;

use crate::linalg::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("algebra is not strongly separable")]
    NotStronglySeparable,
    #[error("{name} requires characteristic {required}, got {characteristic}")]
    IncompatibleCharacteristic { name: String, characteristic: u64, required: String },
    #[error("unknown algebra {0}")]
    UnknownAlgebra(String),
    #[error("algebra has no grading or filtration")]
    GradingAbsent,
    #[error("bad parameter {0}")]
    BadParameter(String),
    #[error("invalid algebra document: {0}")]
    Json(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// A catalog or imported algebra: either a bare (commutative) Frobenius
/// algebra usable on closed components only, or a knowledgeable one.
#[derive(Clone, Debug, PartialEq)]
pub enum Algebra<F: Field> {
    Frobenius(FrobeniusData<F>),
    Knowledgeable(KnowledgeableFrobenius<F>),
}

impl<F: Field> Algebra<F> {
    /// The algebra attached to circles.
    pub fn closed(&self) -> &FrobeniusData<F> {
        match self {
            Algebra::Frobenius(c) => c,
            Algebra::Knowledgeable(k) => &k.c,
        }
    }

    pub fn knowledgeable(&self) -> Option<&KnowledgeableFrobenius<F>> {
        match self {
            Algebra::Frobenius(_) => None,
            Algebra::Knowledgeable(k) => Some(k),
        }
    }

    pub fn field(&self) -> &F {
        &self.closed().field
    }

    /// Full axiom report: Frobenius axioms, or the knowledgeable ones.
    pub fn validate(&self) -> Result<AxiomReport, AlgebraError> {
        match self {
            Algebra::Frobenius(c) => c.validate(),
            Algebra::Knowledgeable(k) => k.validate(),
        }
    }

    pub fn grading(&self) -> GradingMode {
        match self {
            Algebra::Frobenius(c) => c.grading,
            Algebra::Knowledgeable(k) => k.grading(),
        }
    }

    pub fn associated_graded(&self) -> Result<Self, AlgebraError> {
        match self {
            Algebra::Frobenius(c) if c.grading == GradingMode::None => Err(AlgebraError::GradingAbsent),
            Algebra::Frobenius(c) => Ok(Algebra::Frobenius(c.associated_graded())),
            Algebra::Knowledgeable(k) => Ok(Algebra::Knowledgeable(k.associated_graded()?)),
        }
    }
}
