//! Ordered simplicial complexes and the constructions used to build the
//! catalog triangulations.

mod complex;
mod construct;
mod consum;
mod quotient;
mod recipe;
mod validate;

pub use complex::{EdgeLoop, MarkedComplex, OrderedComplex, Simplex, SimplicialInvolution, MAX_DIM};
pub use construct::{barycentric_subdivision, build_primitive, mapping_torus, ordered_product, Primitive};
pub use consum::{connected_sum, connected_sum_default, default_gluing_facet};
pub use quotient::{fiber_counts, free_quotient, quotient_subdividing, MAX_QUOTIENT_SUBDIVISIONS};
pub use recipe::Recipe;
pub use validate::{validate_closed_3complex, ValidationReport};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("simplex {0:?} repeats a vertex")]
    RepeatedVertex(Simplex),
    #[error("simplex {0:?} uses a vertex out of range")]
    VertexOutOfRange(Simplex),
    #[error("dimension {0} exceeds the supported maximum")]
    DimensionTooHigh(usize),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("bad loop: {0}")]
    BadLoop(String),
    #[error("bad involution: {0}")]
    BadInvolution(String),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("quotient invalid: {first:?} and {second:?} have the same image")]
    QuotientInvalid { first: Simplex, second: Simplex },
    #[error("not a closed 3-pseudomanifold: {0}")]
    NotClosedPseudomanifold(String),
    #[error("gluing facet {0:?} meets a marked loop")]
    FacetMeetsLoop(Simplex),
    #[error("recipe error at column {column}: {message}")]
    Recipe { column: usize, message: String },
}
