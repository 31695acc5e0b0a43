use std::fmt;

use super::presentation::Presentation;
use super::word::Word;
use super::GroupError;

/// A homomorphism to Z/2 given by its values on the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupHom2 {
    values: Vec<u8>,
}

impl GroupHom2 {
    /// Values are reduced mod 2.
    pub fn new(values: impl IntoIterator<Item = u8>) -> Self {
        Self { values: values.into_iter().map(|v| v & 1).collect() }
    }

    pub fn zero(n: usize) -> Self {
        Self { values: vec![0; n] }
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn value(&self, gen: usize) -> u8 {
        self.values[gen]
    }

    pub fn generator_count(&self) -> usize {
        self.values.len()
    }

    pub fn is_epimorphism(&self) -> bool {
        self.values.contains(&1)
    }

    /// Checks that every relator maps to zero.
    pub fn check_relators(&self, p: &Presentation) -> Result<(), GroupError> {
        if self.values.len() != p.generator_count() {
            return Err(GroupError::GeneratorOutOfRange { gen: self.values.len(), count: p.generator_count() });
        }
        for r in p.relators() {
            if evaluate_hom2(self, r)? != 0 {
                return Err(GroupError::RelatorNotKilled(p.display_word(r)));
            }
        }
        Ok(())
    }

    /// `g -> self(image[g])`, i.e. precomposition with a map on generators.
    pub fn precompose(&self, images: &[Word]) -> Result<GroupHom2, GroupError> {
        images.iter().map(|w| evaluate_hom2(self, w)).collect::<Result<Vec<_>, _>>().map(Self::new)
    }

    /// `gen:value` pairs, e.g. `v:1,h:0`.
    pub fn describe(&self, names: &[String]) -> String {
        names.iter().zip(&self.values).map(|(n, v)| format!("{n}:{v}")).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for GroupHom2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Sum over letters of the generator values; the exponent sign does not matter mod 2.
pub fn evaluate_hom2(phi: &GroupHom2, w: &Word) -> Result<u8, GroupError> {
    let mut acc = 0u8;
    for l in w.letters() {
        let v = phi.values.get(l.gen).ok_or(GroupError::GeneratorOutOfRange { gen: l.gen, count: phi.values.len() })?;
        acc ^= v;
    }
    Ok(acc)
}

/// All surjections onto Z/2, in lexicographic order of their value vectors.
pub fn enumerate_epis_z2(p: &Presentation) -> Vec<GroupHom2> {
    let n = p.generator_count();
    assert!(n <= 26, "too many generators for exhaustive enumeration");
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        // most significant bit is generator 0, so numeric order is lexicographic order
        let values = (0..n).map(|g| ((mask >> (n - 1 - g)) & 1) as u8);
        let phi = GroupHom2::new(values);
        if phi.check_relators(p).is_ok() {
            out.push(phi);
        }
    }
    out
}
