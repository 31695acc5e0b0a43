use std::collections::HashMap;

use crate::fpgroup::{evaluate_hom2, recognize_catalog_group, CatalogGroup, GroupHom2, Word};

use super::model::{Manifold, ManifoldModel};
use super::normal_form::CatalogElement;
use super::schreier::{reidemeister_schreier_index2, KernelPresentation};
use super::CoverError;

/// Longest product of stated generators tried by [`verify_stated_kernel`].
pub const MAX_KERNEL_PRODUCT: usize = 4;

/// The cover is orientable iff `w1` vanishes on every kernel generator.
pub fn cover_orientable(model: &ManifoldModel, k: &KernelPresentation) -> bool {
    k.inclusion.iter().all(|w| evaluate_hom2(&model.w1, w) == Ok(0))
}

/// Everything computed about one double cover.
#[derive(Clone, Debug)]
pub struct CoverInfo {
    pub kernel: KernelPresentation,
    pub simplified: KernelPresentation,
    pub group: CatalogGroup,
    pub orientable: bool,
    pub cover: Manifold,
}

pub fn analyze_cover(model: &ManifoldModel, phi: &GroupHom2) -> Result<CoverInfo, CoverError> {
    let kernel = reidemeister_schreier_index2(&model.presentation, phi)?;
    let simplified = kernel.simplified();
    let orientable = cover_orientable(model, &kernel);
    let group = recognize_catalog_group(&simplified.presentation, Some(u8::from(!orientable)));
    let cover = match (group, orientable) {
        (CatalogGroup::InfCyclic, true) => Manifold::S2xS1,
        (CatalogGroup::InfCyclic, false) => Manifold::E,
        (CatalogGroup::Z2TimesZ, _) => Manifold::RP2xS1,
        (CatalogGroup::Z2FreeZ2, _) => Manifold::RP3RP3,
        (CatalogGroup::Unknown, _) => {
            return Err(CoverError::UnknownCover {
                base: model.name.clone(),
                phi: phi.describe(model.presentation.generator_names()),
                kernel: simplified.presentation.to_string(),
            })
        }
    };
    Ok(CoverInfo { kernel, simplified, group, orientable, cover })
}

/// Names the double cover of `model` determined by `phi`.
pub fn identify_cover(model: &ManifoldModel, phi: &GroupHom2) -> Result<Manifold, CoverError> {
    Ok(analyze_cover(model, phi)?.cover)
}

/// How one kernel generator was written in the stated generators:
/// `(stated index, exponent)` factors.
pub type Witness = Vec<(usize, i8)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelVerification {
    Verified {
        witnesses: Vec<Witness>,
    },
    /// Kernel generators (as ambient words) not reached by the bounded search.
    Inconclusive {
        unmatched: Vec<String>,
    },
}

impl KernelVerification {
    pub fn is_verified(&self) -> bool {
        matches!(self, KernelVerification::Verified { .. })
    }
}

/// Checks that `stated` lies in `ker phi` and generates it: every
/// Reidemeister-Schreier generator must equal, in the model's normal form, a
/// product of at most [`MAX_KERNEL_PRODUCT`] stated generators or inverses.
pub fn verify_stated_kernel(
    model: &ManifoldModel,
    phi: &GroupHom2,
    stated: &[Word],
) -> Result<KernelVerification, CoverError> {
    let p = &model.presentation;
    let nf = model.normal_form.as_ref().ok_or_else(|| CoverError::NoNormalForm(model.name.clone()))?;
    for w in stated {
        if evaluate_hom2(phi, w)? != 0 {
            return Err(CoverError::NotInKernel(p.display_word(w)));
        }
    }
    let kernel = reidemeister_schreier_index2(p, phi)?;

    // breadth-first over products, keeping the first (shortest) witness per element
    let mut reached: HashMap<CatalogElement, Witness> = HashMap::from([(nf.identity(), Vec::new())]);
    let mut frontier = vec![(nf.identity(), Vec::new())];
    let steps: Vec<(CatalogElement, (usize, i8))> =
        stated.iter().enumerate().flat_map(|(i, w)| [(nf.eval(w), (i, 1)), (nf.eval(&w.inverse()), (i, -1))]).collect();
    for _ in 0..MAX_KERNEL_PRODUCT {
        let mut next = Vec::new();
        for (x, wit) in &frontier {
            for (s, factor) in &steps {
                let y = nf.multiply(x, s);
                if !reached.contains_key(&y) {
                    let mut w: Witness = wit.clone();
                    w.push(*factor);
                    reached.insert(y.clone(), w.clone());
                    next.push((y, w));
                }
            }
        }
        frontier = next;
    }

    let mut witnesses = Vec::new();
    let mut unmatched = Vec::new();
    for w in &kernel.inclusion {
        match reached.get(&nf.eval(w)) {
            Some(wit) => witnesses.push(wit.clone()),
            None => unmatched.push(p.display_word(w)),
        }
    }
    Ok(if unmatched.is_empty() {
        KernelVerification::Verified { witnesses }
    } else {
        KernelVerification::Inconclusive { unmatched }
    })
}
