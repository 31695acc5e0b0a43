//! Finitely presented groups: words, presentations, abelianization, maps onto Z/2
//! and Tietze simplification.

mod abelian;
mod hom;
mod presentation;
pub mod snf;
mod tietze;
mod word;

pub use abelian::{abelianization, recognize_catalog_group, relator_matrix, AbelianizationData, CatalogGroup};
pub use hom::{enumerate_epis_z2, evaluate_hom2, GroupHom2};
pub(crate) use presentation::Parser;
pub use presentation::{Presentation, MAX_GENERATORS};
pub use snf::{smith_normal_form, IntMatrix, SmithForm};
pub use tietze::{tietze_simplify, tietze_simplify_tracked, Simplified};
pub use word::{free_reduce, Letter, Word};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("duplicate generator '{0}'")]
    DuplicateGenerator(String),
    #[error("generator index {gen} out of range for {count} generators")]
    GeneratorOutOfRange { gen: usize, count: usize },
    #[error("relator {0} is not killed")]
    RelatorNotKilled(String),
    #[error("homomorphism is not surjective")]
    NotEpimorphism,
}
