use std::fmt;

use serde::Serialize;

use super::presentation::Presentation;
use super::snf::{smith_normal_form, IntMatrix, SmithForm};

/// Free rank and invariant factors of `H_1`, with the Smith form they came from.
#[derive(Clone, Debug)]
pub struct AbelianizationData {
    pub rank: usize,
    pub torsion: Vec<u64>,
    pub snf: SmithForm,
}

impl AbelianizationData {
    pub fn invariants(&self) -> (usize, &[u64]) {
        (self.rank, &self.torsion)
    }
}

impl fmt::Display for AbelianizationData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|t| format!("Z{t}")).collect();
        parts.extend(std::iter::repeat_n("Z".to_string(), self.rank));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

pub fn relator_matrix(p: &Presentation) -> IntMatrix {
    IntMatrix::from_rows(&p.relator_matrix(), p.generator_count())
}

pub fn abelianization(p: &Presentation) -> AbelianizationData {
    let snf = smith_normal_form(&relator_matrix(p));
    let nonzero: Vec<i128> = snf.d.diagonal().into_iter().filter(|&x| x != 0).collect();
    let rank = p.generator_count() - nonzero.len();
    let torsion = nonzero.into_iter().filter(|&x| x > 1).map(|x| x as u64).collect();
    AbelianizationData { rank, torsion, snf }
}

/// The groups that occur as fundamental groups of closed S2xR manifolds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CatalogGroup {
    #[serde(rename = "Z")]
    InfCyclic,
    #[serde(rename = "Z2xZ")]
    Z2TimesZ,
    #[serde(rename = "Z2*Z2")]
    Z2FreeZ2,
    #[serde(rename = "unknown")]
    Unknown,
}

impl fmt::Display for CatalogGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CatalogGroup::InfCyclic => "Z",
            CatalogGroup::Z2TimesZ => "Z2xZ",
            CatalogGroup::Z2FreeZ2 => "Z2*Z2",
            CatalogGroup::Unknown => "unknown",
        })
    }
}

/// Tags a group by its abelian invariants alone.
///
/// Only meaningful for fundamental groups of closed S2xR manifolds, where the
/// three possible groups have pairwise distinct abelianizations. The
/// orientation hint is accepted for interface compatibility and does not change
/// the tag: Z is reported for both S2xS1 and E.
pub fn recognize_catalog_group(p: &Presentation, _orientable_hint: Option<u8>) -> CatalogGroup {
    let ab = abelianization(p);
    match (ab.rank, ab.torsion.as_slice()) {
        (1, []) => CatalogGroup::InfCyclic,
        (1, [2]) => CatalogGroup::Z2TimesZ,
        (0, [2, 2]) => CatalogGroup::Z2FreeZ2,
        _ => CatalogGroup::Unknown,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(s: &str) -> (usize, Vec<u64>) {
        let a = abelianization(&s.parse().unwrap());
        (a.rank, a.torsion)
    }

    #[test]
    fn catalog_abelianizations() {
        assert_eq!(ab("<h | >"), (1, vec![]));
        assert_eq!(ab("<v, h | v^2 h^-1>"), (1, vec![]));
        assert_eq!(ab("<v, h | v^2, v h v^-1 h^-1>"), (1, vec![2]));
        assert_eq!(ab("<v, h | v^2, (v h)^2>"), (0, vec![2, 2]));
    }

    #[test]
    fn recognition() {
        let r = |s: &str| recognize_catalog_group(&s.parse().unwrap(), None);
        assert_eq!(r("<b | >"), CatalogGroup::InfCyclic);
        assert_eq!(r("<a, b | a^3>"), CatalogGroup::Unknown);
        assert_eq!(r("<a, b | a^2, b^2>"), CatalogGroup::Z2FreeZ2);
        assert_eq!(r("<x | x>"), CatalogGroup::Unknown);
    }

    #[test]
    fn display() {
        let a = abelianization(&"<v, h | v^2, v h v^-1 h^-1>".parse().unwrap());
        assert_eq!(a.to_string(), "Z2 + Z");
    }
}
