use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::cohomology::{LoopRef, Triangulation};
use crate::fpgroup::{GroupHom2, Presentation, Word};
use crate::simplicial::Recipe;

use super::normal_form::NormalForm;
use super::CoverError;

/// The four closed manifolds with S2xR geometry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Manifold {
    #[serde(rename = "S2xS1")]
    S2xS1,
    #[serde(rename = "E")]
    E,
    #[serde(rename = "RP2xS1")]
    RP2xS1,
    #[serde(rename = "RP3#RP3")]
    RP3RP3,
}

impl Manifold {
    pub const ALL: [Manifold; 4] = [Manifold::S2xS1, Manifold::E, Manifold::RP2xS1, Manifold::RP3RP3];

    pub fn name(self) -> &'static str {
        match self {
            Manifold::S2xS1 => "S2xS1",
            Manifold::E => "E",
            Manifold::RP2xS1 => "RP2xS1",
            Manifold::RP3RP3 => "RP3#RP3",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == s)
    }

    pub fn seifert(self) -> SeifertSymbol {
        let (b, eps, g) = match self {
            Manifold::S2xS1 => (0, Eps::O1, 0),
            Manifold::E => (1, Eps::N1, 1),
            Manifold::RP2xS1 => (0, Eps::N1, 1),
            Manifold::RP3RP3 => (0, Eps::N2, 1),
        };
        SeifertSymbol { b, eps, g }
    }
}

impl fmt::Display for Manifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Eps {
    O1,
    N1,
    N2,
}

/// Seifert symbol `{b;(eps,g)}` of a fibration without exceptional fibres.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeifertSymbol {
    pub b: i64,
    pub eps: Eps,
    pub g: u32,
}

impl fmt::Display for SeifertSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eps = match self.eps {
            Eps::O1 => "o1",
            Eps::N1 => "n1",
            Eps::N2 => "n2",
        };
        write!(f, "{{{};({},{})}}", self.b, eps, self.g)
    }
}

impl FromStr for SeifertSymbol {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || format!("bad Seifert symbol '{s}'");
        let inner = compact.strip_prefix('{').and_then(|t| t.strip_suffix('}')).ok_or_else(bad)?;
        let (b, rest) = inner.split_once(';').ok_or_else(bad)?;
        let rest = rest.strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let (eps, g) = rest.split_once(',').ok_or_else(bad)?;
        let eps = match eps {
            "o1" => Eps::O1,
            "n1" => Eps::N1,
            "n2" => Eps::N2,
            _ => return Err(bad()),
        };
        Ok(Self { b: b.parse().map_err(|_| bad())?, eps, g: g.parse().map_err(|_| bad())? })
    }
}

/// An endomorphism given by generator images, with a claimed inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGenerator {
    pub images: Vec<Word>,
    pub inverse: Vec<Word>,
}

impl AutGenerator {
    pub fn display(&self, p: &Presentation) -> String {
        let side = |imgs: &[Word]| {
            let parts: Vec<String> =
                p.generator_names().iter().zip(imgs).map(|(n, w)| format!("{n}->{}", p.display_word(w))).collect();
            format!("({})", parts.join(", "))
        };
        format!("{} inverse {}", side(&self.images), side(&self.inverse))
    }
}

/// Name of the involution and the theorem case it belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionLabel {
    pub tau: String,
    pub case: String,
}

/// A catalog entry: one manifold with its group data and triangulation recipe.
#[derive(Debug)]
pub struct ManifoldModel {
    pub name: String,
    pub kind: Option<Manifold>,
    pub seifert: Option<SeifertSymbol>,
    pub presentation: Presentation,
    pub w1: GroupHom2,
    pub recipe: Option<Recipe>,
    /// Loop reference per generator, in generator order; empty when not given.
    pub loops: Vec<LoopRef>,
    pub normal_form: Option<NormalForm>,
    pub aut_generators: Vec<AutGenerator>,
    pub involution_labels: Vec<(GroupHom2, InvolutionLabel)>,
    triangulation: OnceLock<Result<Arc<Triangulation>, CoverError>>,
}

impl Clone for ManifoldModel {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            kind: self.kind,
            seifert: self.seifert,
            presentation: self.presentation.clone(),
            w1: self.w1.clone(),
            recipe: self.recipe.clone(),
            loops: self.loops.clone(),
            normal_form: self.normal_form.clone(),
            aut_generators: self.aut_generators.clone(),
            involution_labels: self.involution_labels.clone(),
            triangulation: OnceLock::new(),
        }
    }
}

impl ManifoldModel {
    pub fn new(name: impl Into<String>, presentation: Presentation, w1: GroupHom2) -> Self {
        let name = name.into();
        Self {
            kind: Manifold::from_name(&name),
            name,
            seifert: None,
            presentation,
            w1,
            recipe: None,
            loops: Vec::new(),
            normal_form: None,
            aut_generators: Vec::new(),
            involution_labels: Vec::new(),
            triangulation: OnceLock::new(),
        }
    }

    pub fn is_orientable(&self) -> bool {
        !self.w1.is_epimorphism()
    }

    pub fn label_for(&self, phi: &GroupHom2) -> Option<&InvolutionLabel> {
        self.involution_labels.iter().find(|(p, _)| p == phi).map(|(_, l)| l)
    }

    pub fn has_triangulation(&self) -> bool {
        self.recipe.is_some()
    }

    /// Builds the triangulation on first use and keeps it for later calls.
    pub fn triangulation(&self) -> Result<Arc<Triangulation>, CoverError> {
        self.triangulation
            .get_or_init(|| {
                let recipe = self.recipe.as_ref().ok_or_else(|| CoverError::NoTriangulation(self.name.clone()))?;
                if self.loops.len() != self.presentation.generator_count() {
                    return Err(CoverError::Model(format!("{}: every generator needs a marked loop", self.name)));
                }
                let marked = recipe.build().map_err(|e| CoverError::Triangulation(e.to_string()))?;
                let t =
                    Triangulation::new(marked, &self.loops).map_err(|e| CoverError::Triangulation(e.to_string()))?;
                Ok(Arc::new(t))
            })
            .clone()
    }

    /// Checks that `w1` and the normal form kill every relator and that every
    /// automorphism generator is a homomorphism inverted by its stated inverse.
    pub fn validate(&self) -> Result<(), CoverError> {
        let p = &self.presentation;
        let n = p.generator_count();
        self.w1.check_relators(p).map_err(|e| CoverError::Model(format!("{}: w1: {e}", self.name)))?;
        if let Some(nf) = &self.normal_form {
            if nf.generator_count() != n {
                return Err(CoverError::Model(format!("{}: normal form has wrong generator count", self.name)));
            }
            for r in p.relators() {
                if !nf.is_identity(r) {
                    return Err(CoverError::Model(format!(
                        "{}: normal form does not kill relator {}",
                        self.name,
                        p.display_word(r)
                    )));
                }
            }
        }
        for a in &self.aut_generators {
            validate_aut(self, a)?;
        }
        Ok(())
    }
}

fn validate_aut(model: &ManifoldModel, a: &AutGenerator) -> Result<(), CoverError> {
    let p = &model.presentation;
    let n = p.generator_count();
    let shown = a.display(p);
    if a.images.len() != n || a.inverse.len() != n {
        return Err(CoverError::InvalidAut(format!("{shown}: wrong number of images")));
    }
    let nf = model
        .normal_form
        .as_ref()
        .ok_or_else(|| CoverError::InvalidAut(format!("{shown}: model has no normal form to check against")))?;
    for map in [&a.images, &a.inverse] {
        for r in p.relators() {
            if !nf.is_identity(&r.substitute(map)) {
                return Err(CoverError::InvalidAut(format!("{shown}: relator {} not killed", p.display_word(r))));
            }
        }
    }
    for g in 0..n {
        let x = Word::generator(g);
        let there_and_back = x.substitute(&a.images).substitute(&a.inverse);
        let back_and_there = x.substitute(&a.inverse).substitute(&a.images);
        if !nf.equal(&there_and_back, &x) || !nf.equal(&back_and_there, &x) {
            return Err(CoverError::InvalidAut(format!("{shown}: stated inverse fails on {}", p.generator_names()[g])));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seifert_round_trip() {
        for m in Manifold::ALL {
            let s = m.seifert();
            assert_eq!(s.to_string().parse::<SeifertSymbol>().unwrap(), s);
        }
        assert_eq!(Manifold::E.seifert().to_string(), "{1;(n1,1)}");
        assert_eq!(" { 0 ; ( n2 , 1 ) } ".parse::<SeifertSymbol>().unwrap(), Manifold::RP3RP3.seifert());
        assert!("{0;(x1,0)}".parse::<SeifertSymbol>().is_err());
    }

    #[test]
    fn aut_validation() {
        let p: Presentation = "<v, h | v^2, (v h)^2>".parse().unwrap();
        let mut m = ManifoldModel::new("RP3#RP3", p.clone(), GroupHom2::zero(2));
        m.normal_form = Some(NormalForm::Dihedral(vec![vec![0], vec![0, 1]]));
        let w = |s: &str| p.parse_word(s).unwrap();
        m.aut_generators.push(AutGenerator { images: vec![w("v h"), w("h^-1")], inverse: vec![w("v h"), w("h^-1")] });
        m.validate().unwrap();
        m.aut_generators.push(AutGenerator { images: vec![w("v h"), w("h^-1")], inverse: vec![w("v"), w("h")] });
        assert!(matches!(m.validate(), Err(CoverError::InvalidAut(_))));
        m.aut_generators.pop();
        m.aut_generators.push(AutGenerator { images: vec![w("h"), w("h")], inverse: vec![w("h"), w("h")] });
        assert!(matches!(m.validate(), Err(CoverError::InvalidAut(msg)) if msg.contains("not killed")));
    }
}
