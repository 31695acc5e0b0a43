use rayon::prelude::*;
use serde::Serialize;

use crate::buindex::{bu_index, cross_check, CubeComparison, IndexDecision};
use crate::covers::{analyze_cover, equivalence_orbits, Manifold, ManifoldModel};
use crate::fpgroup::{enumerate_epis_z2, GroupHom2};

use super::catalog::Catalog;
use super::PipelineError;

/// One equivalence class of double covers of a base manifold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoveringRecord {
    pub theorem_case: String,
    pub base: String,
    pub generators: Vec<String>,
    /// Values of the class representative, the first member of the orbit.
    pub phi: Vec<u8>,
    pub cover: Manifold,
    pub involution: String,
    pub index: u8,
    pub equiv_class: usize,
    pub witness: String,
    pub orbit: Vec<Vec<u8>>,
}

impl CoveringRecord {
    pub fn phi_of(&self, generator: &str) -> Option<u8> {
        self.generators.iter().position(|g| g == generator).map(|i| self.phi[i])
    }
}

/// The result for a single epimorphism, before grouping into classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairResult {
    pub base: String,
    pub phi: Vec<u8>,
    pub kernel: String,
    pub kernel_group: String,
    pub orientable: bool,
    pub cover: Manifold,
    pub decision: IndexDecision,
    pub equiv_class: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckReport {
    pub base: String,
    pub rows: Vec<CubeComparison>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub nodes: Vec<String>,
    pub records: Vec<CoveringRecord>,
    pub pairs: Vec<PairResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<Vec<CrossCheckReport>>,
}

impl ClassificationReport {
    /// `(cover, base, index)` per record.
    pub fn edges(&self) -> Vec<(String, String, u8)> {
        self.records.iter().map(|r| (r.cover.name().to_string(), r.base.clone(), r.index)).collect()
    }
}

struct Evaluated {
    phi: GroupHom2,
    kernel: String,
    group: String,
    orientable: bool,
    cover: Manifold,
    decision: IndexDecision,
}

fn evaluate(model: &ManifoldModel, phi: &GroupHom2) -> Result<Evaluated, PipelineError> {
    let info = analyze_cover(model, phi)?;
    let decision = bu_index(model, phi)?;
    Ok(Evaluated {
        phi: phi.clone(),
        kernel: info.simplified.presentation.to_string(),
        group: info.group.to_string(),
        orientable: info.orientable,
        cover: info.cover,
        decision,
    })
}

/// Enumerates, identifies and indexes every double cover of every model, and
/// groups them into equivalence classes. Records follow catalog order, then
/// the value vector of the class representative.
pub fn run_classification(catalog: &Catalog, with_cross_check: bool) -> Result<ClassificationReport, PipelineError> {
    let tasks: Vec<(usize, GroupHom2)> = catalog
        .models
        .iter()
        .enumerate()
        .flat_map(|(i, m)| enumerate_epis_z2(&m.presentation).into_iter().map(move |phi| (i, phi)))
        .collect();
    // independent per pair; collect keeps task order
    let evaluated: Vec<Evaluated> =
        tasks.par_iter().map(|(i, phi)| evaluate(&catalog.models[*i], phi)).collect::<Result<_, _>>()?;

    let mut records = Vec::new();
    let mut pairs = Vec::new();
    for (mi, model) in catalog.models.iter().enumerate() {
        let mine: Vec<&Evaluated> = tasks.iter().zip(&evaluated).filter(|(t, _)| t.0 == mi).map(|(_, e)| e).collect();
        let epis: Vec<GroupHom2> = mine.iter().map(|e| e.phi.clone()).collect();
        let orbits = equivalence_orbits(model, &epis)?;
        let class_of =
            |phi: &GroupHom2| orbits.iter().position(|o| o.contains(phi)).expect("every epimorphism has an orbit");
        for e in &mine {
            pairs.push(PairResult {
                base: model.name.clone(),
                phi: e.phi.values().to_vec(),
                kernel: e.kernel.clone(),
                kernel_group: e.group.clone(),
                orientable: e.orientable,
                cover: e.cover,
                decision: e.decision.clone(),
                equiv_class: class_of(&e.phi),
            });
        }
        for (class, orbit) in orbits.iter().enumerate() {
            let members: Vec<&&Evaluated> = mine.iter().filter(|e| orbit.contains(&e.phi)).collect();
            let rep = members[0];
            if let Some(odd) = members.iter().find(|e| e.cover != rep.cover || e.decision.index != rep.decision.index) {
                return Err(PipelineError::Inconsistent(format!(
                    "{}: {} and {} are equivalent but differ in cover or index",
                    model.name, rep.phi, odd.phi
                )));
            }
            let label = model.label_for(&rep.phi);
            records.push(CoveringRecord {
                theorem_case: label.map(|l| l.case.clone()).unwrap_or_default(),
                base: model.name.clone(),
                generators: model.presentation.generator_names().to_vec(),
                phi: rep.phi.values().to_vec(),
                cover: rep.cover,
                involution: label.map(|l| l.tau.clone()).unwrap_or_default(),
                index: rep.decision.index,
                equiv_class: class,
                witness: rep.decision.witness.to_string(),
                orbit: orbit.iter().map(|p| p.values().to_vec()).collect(),
            });
        }
    }
    records.sort_by(|a, b| {
        let pos = |r: &CoveringRecord| catalog.models.iter().position(|m| m.name == r.base);
        (pos(a), &a.phi).cmp(&(pos(b), &b.phi))
    });

    let mut nodes: Vec<String> = catalog.models.iter().map(|m| m.name.clone()).collect();
    for r in &records {
        if !nodes.iter().any(|n| n == r.cover.name()) {
            nodes.push(r.cover.name().to_string());
        }
    }

    let cross = if with_cross_check {
        let mut out = Vec::new();
        for m in catalog.models.iter().filter(|m| m.has_triangulation() && m.kind.is_some()) {
            out.push(CrossCheckReport { base: m.name.clone(), rows: cross_check(m)? });
        }
        Some(out)
    } else {
        None
    };
    Ok(ClassificationReport { nodes, records, pairs, cross_check: cross })
}
