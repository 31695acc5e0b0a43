//! Mod-2 simplicial cohomology: coboundaries, bases, cup products and the
//! evaluation of classes on marked loops.

mod bridge;
mod cochain;
mod ring;

pub use bridge::{cocycle_for_hom, LoopRef, Triangulation};
pub use cochain::{coboundary, coboundary_matrix, cup, is_cocycle, Cochain};
pub use ring::{betti_numbers, cohomology_basis, Class, CohomologyBasis, CohomologyRing, CubeResult};

use thiserror::Error;

use crate::simplicial::ComplexError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("complex is empty")]
    EmptyComplex,
    #[error("degree {degree} out of range for a complex of dimension {dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },
    #[error("cochain of degree {0} is not a cocycle")]
    NotACocycle(usize),
    #[error("H^1 has dimension {classes} but {loops} loops are marked")]
    LoopCountMismatch { classes: usize, loops: usize },
    #[error("evaluation of H^1 on the marked loops is singular")]
    SingularEvaluation,
    #[error("no class takes the given values on the marked loops")]
    NotRealized,
    #[error("no marked loop named '{0}'")]
    UnknownLoop(String),
    #[error("homomorphism has {got} values, expected {expected}")]
    ValueCount { got: usize, expected: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}
