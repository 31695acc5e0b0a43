//! Double covers from maps onto Z/2: kernels, identification among the four
//! catalog manifolds, and equivalence under automorphisms.

mod equiv;
mod identify;
mod model;
mod normal_form;
mod schreier;

pub use equiv::equivalence_orbits;
pub use identify::{
    analyze_cover, cover_orientable, identify_cover, verify_stated_kernel, CoverInfo, KernelVerification, Witness,
    MAX_KERNEL_PRODUCT,
};
pub use model::{AutGenerator, Eps, InvolutionLabel, Manifold, ManifoldModel, SeifertSymbol};
pub use normal_form::{CatalogElement, NormalForm};
pub use schreier::{reidemeister_schreier_index2, KernelPresentation};

use thiserror::Error;

use crate::fpgroup::GroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("homomorphism is not surjective")]
    NotEpimorphism,
    #[error("kernel of {phi} on {base} is not a catalog group: {kernel}")]
    UnknownCover { base: String, phi: String, kernel: String },
    #[error("stated generator {0} is not in the kernel")]
    NotInKernel(String),
    #[error("{0} has no normal form")]
    NoNormalForm(String),
    #[error("invalid automorphism {0}")]
    InvalidAut(String),
    #[error("{0} has no triangulation")]
    NoTriangulation(String),
    #[error("triangulation failed: {0}")]
    Triangulation(String),
    #[error("invalid model: {0}")]
    Model(String),
}
