//! The Z/2-index of a free involution, decided from its quotient and
//! classifying map onto Z/2.

mod reference;

pub use reference::{reference_index, ReferenceRow, REFERENCE_TABLE};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::cohomology::{cocycle_for_hom, CohomologyError};
use crate::covers::{CoverError, Manifold, ManifoldModel};
use crate::fpgroup::{enumerate_epis_z2, relator_matrix, smith_normal_form, GroupHom2, Presentation};
use crate::gf2::{BitVec, F2Matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error("{0} has no triangulation, which the cube test needs")]
    MissingTriangulation(String),
    #[error("homomorphism is not surjective")]
    NotEpimorphism,
    #[error("{0} is not one of the four catalog manifolds")]
    UnknownManifold(String),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Witness {
    /// Integer lift of the map that kills every relator.
    ZFactorization(Vec<i64>),
    CupCubeNonzero,
    DefaultTwo,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ZFactorization(psi) => {
                let parts: Vec<String> = psi.iter().map(i64::to_string).collect();
                write!(f, "factors through Z via ({})", parts.join(","))
            }
            Witness::CupCubeNonzero => write!(f, "cup cube nonzero"),
            Witness::DefaultTwo => write!(f, "neither criterion holds"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexDecision {
    pub index: u8,
    pub witness: Witness,
}

/// An integer vector `psi` with `psi = phi (mod 2)` and zero exponent sum on
/// every relator, if one exists.
///
/// The integer solutions of `R psi = 0` are the combinations of the last
/// columns of `Q` in the Smith form `D = P R Q`, so it is enough to solve the
/// reduced system mod 2 and lift.
pub fn factors_through_z(p: &Presentation, phi: &GroupHom2) -> Option<Vec<i64>> {
    let n = p.generator_count();
    let snf = smith_normal_form(&relator_matrix(p));
    let r = snf.nonzero_count();
    let kernel: Vec<Vec<i128>> = (r..n).map(|j| snf.q.column(j)).collect();
    let rows = (0..n).map(|i| BitVec::from_bits(kernel.iter().map(|col| col[i].rem_euclid(2) == 1))).collect();
    let m = F2Matrix::from_rows(kernel.len(), rows);
    let target = BitVec::from_bits(phi.values().iter().map(|&x| x == 1));
    let c = m.solve(&target)?;
    let mut psi: Vec<i64> = (0..n)
        .map(|i| {
            let s: i128 = c.ones().map(|j| kernel[j][i]).sum();
            i64::try_from(s).expect("lift fits in i64")
        })
        .collect();
    if psi.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        psi.iter_mut().for_each(|x| *x = -*x);
    }
    Some(psi)
}

/// Index 1 if `phi` lifts to Z, else 3 if the cube of its class is nonzero, else 2.
pub fn bu_index(model: &ManifoldModel, phi: &GroupHom2) -> Result<IndexDecision, IndexError> {
    if !phi.is_epimorphism() {
        return Err(IndexError::NotEpimorphism);
    }
    phi.check_relators(&model.presentation).map_err(CoverError::from)?;
    if let Some(psi) = factors_through_z(&model.presentation, phi) {
        return Ok(IndexDecision { index: 1, witness: Witness::ZFactorization(psi) });
    }
    if !model.has_triangulation() {
        return Err(IndexError::MissingTriangulation(model.name.clone()));
    }
    if cube_nonzero(model, phi)? {
        Ok(IndexDecision { index: 3, witness: Witness::CupCubeNonzero })
    } else {
        Ok(IndexDecision { index: 2, witness: Witness::DefaultTwo })
    }
}

/// Whether `[phi]^3` is nonzero on the model's triangulation.
pub fn cube_nonzero(model: &ManifoldModel, phi: &GroupHom2) -> Result<bool, IndexError> {
    let t = model.triangulation()?;
    let class = cocycle_for_hom(&t, phi)?;
    Ok(t.ring.cup_cube_class(&class)?.is_nonzero)
}

/// Table lookup by manifold and generator values, no cohomology involved.
///
/// For RP2xS1 index 3 is read as "both values nonzero".
pub fn closed_form_index(model: &ManifoldModel, phi: &GroupHom2) -> Result<u8, IndexError> {
    let kind = model.kind.ok_or_else(|| IndexError::UnknownManifold(model.name.clone()))?;
    if !phi.is_epimorphism() {
        return Err(IndexError::NotEpimorphism);
    }
    let v = phi.values();
    Ok(match kind {
        Manifold::S2xS1 | Manifold::E => 1,
        Manifold::RP2xS1 if v[0] == 0 => 1,
        Manifold::RP2xS1 if v[1] == 0 => 2,
        Manifold::RP2xS1 => 3,
        Manifold::RP3RP3 if v[1] == 0 => 2,
        Manifold::RP3RP3 => 3,
    })
}

/// Four predictions of whether the cube of one class is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubeComparison {
    pub phi: Vec<u8>,
    /// (a) computed on the triangulation.
    pub computed: bool,
    /// (b) exceptional case with the Z/2 sum `phi(h) + phi(v) != 0`.
    pub literal_sum: bool,
    /// (c) exceptional case with both values nonzero.
    pub both_nonzero: bool,
    /// (d) index 3 in the reference table.
    pub reference: Option<bool>,
    pub disagreements: Vec<String>,
}

/// Compares the computed cube with the three table-based predictions for
/// every epimorphism of `model`. Disagreements are listed, never reconciled.
pub fn cross_check(model: &ManifoldModel) -> Result<Vec<CubeComparison>, IndexError> {
    let kind = model.kind.ok_or_else(|| IndexError::UnknownManifold(model.name.clone()))?;
    if !model.has_triangulation() {
        return Err(IndexError::MissingTriangulation(model.name.clone()));
    }
    let mut out = Vec::new();
    for phi in enumerate_epis_z2(&model.presentation) {
        let v = phi.values().to_vec();
        let computed = cube_nonzero(model, &phi)?;
        let (literal_sum, both_nonzero) = match kind {
            Manifold::RP2xS1 => ((v[0] ^ v[1]) == 1, v[0] == 1 && v[1] == 1),
            Manifold::RP3RP3 => (v[1] == 1, v[1] == 1),
            _ => (false, false),
        };
        let reference = reference_index(kind, &v).map(|i| i == 3);
        let mut disagreements = Vec::new();
        for (label, value) in [
            ("literal sum reading", Some(literal_sum)),
            ("both-nonzero reading", Some(both_nonzero)),
            ("reference index", reference),
        ] {
            if let Some(x) = value {
                if x != computed {
                    disagreements.push(format!("{label} predicts {}, computed {}", zero_word(x), zero_word(computed)));
                }
            }
        }
        out.push(CubeComparison { phi: v, computed, literal_sum, both_nonzero, reference, disagreements });
    }
    Ok(out)
}

fn zero_word(nonzero: bool) -> &'static str {
    if nonzero {
        "nonzero"
    } else {
        "zero"
    }
}
