use std::fmt;
use std::str::FromStr;

use crate::fpgroup::GroupHom2;
use crate::gf2::{BitVec, F2Matrix};
use crate::simplicial::MarkedComplex;

use super::ring::{Class, CohomologyRing};
use super::{Cochain, CohomologyError};

/// A formal mod-2 sum of marked loops, written `left.q+right.q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopRef {
    pub terms: Vec<String>,
}

impl fmt::Display for LoopRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.terms.join("+"))
    }
}

impl FromStr for LoopRef {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let terms: Vec<String> = s.split('+').map(|t| t.trim().to_string()).collect();
        for t in &terms {
            if t.is_empty() || !t.chars().all(|c| c.is_ascii_alphanumeric() || c == '.' || c == '_') {
                return Err(format!("bad loop reference '{s}'"));
            }
        }
        Ok(Self { terms })
    }
}

/// A built complex, its cohomology ring and one mod-2 edge cycle per group generator.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub marked: MarkedComplex,
    pub ring: CohomologyRing,
    generator_cycles: Vec<BitVec>,
}

impl Triangulation {
    /// `loops[i]` is the loop reference of generator `i`.
    pub fn new(marked: MarkedComplex, loops: &[LoopRef]) -> Result<Self, CohomologyError> {
        let ring = CohomologyRing::new(&marked.complex)?;
        let edges = marked.complex.count(1);
        let mut generator_cycles = Vec::with_capacity(loops.len());
        for r in loops {
            let mut cycle = BitVec::zeros(edges);
            for name in &r.terms {
                let lp = marked.loop_named(name).ok_or_else(|| CohomologyError::UnknownLoop(name.clone()))?;
                for (a, b) in lp.edges() {
                    let i = marked.complex.index_of(&[a.min(b), a.max(b)]).expect("loop edges are checked");
                    cycle.flip(i);
                }
            }
            generator_cycles.push(cycle);
        }
        Ok(Self { marked, ring, generator_cycles })
    }

    pub fn generator_cycles(&self) -> &[BitVec] {
        &self.generator_cycles
    }

    /// Values of a 1-cocycle on the generator cycles.
    pub fn evaluate_cochain(&self, c: &Cochain) -> Vec<u8> {
        self.generator_cycles.iter().map(|z| u8::from(z.dot(&c.values))).collect()
    }

    pub fn evaluate(&self, class: &Class) -> Vec<u8> {
        self.evaluate_cochain(&self.ring.representative(class))
    }

    /// Rows are generators, columns are basis classes of `H^1`.
    pub fn evaluation_matrix(&self) -> F2Matrix {
        let basis = &self.ring.basis(1).representatives;
        let rows =
            self.generator_cycles.iter().map(|z| BitVec::from_bits(basis.iter().map(|b| z.dot(&b.values)))).collect();
        F2Matrix::from_rows(basis.len(), rows)
    }
}

/// The class of `H^1` whose value on the loop of each generator `g` is `phi(g)`.
///
/// The evaluation matrix must have full column rank, so that a class is
/// determined by its values. With as many loops as classes this is
/// invertibility; extra loops (such as a loop for a generator that is a
/// square of another) are allowed and must then agree with `phi`.
pub fn cocycle_for_hom(t: &Triangulation, phi: &GroupHom2) -> Result<Class, CohomologyError> {
    let loops = t.generator_cycles.len();
    if phi.generator_count() != loops {
        return Err(CohomologyError::ValueCount { got: phi.generator_count(), expected: loops });
    }
    let classes = t.ring.basis(1).dim();
    if classes > loops {
        return Err(CohomologyError::LoopCountMismatch { classes, loops });
    }
    let m = t.evaluation_matrix();
    if m.rank() != classes {
        return Err(CohomologyError::SingularEvaluation);
    }
    let target = BitVec::from_bits(phi.values().iter().map(|&x| x == 1));
    let coords = m.solve(&target).ok_or(CohomologyError::NotRealized)?;
    Ok(t.ring.class(1, coords))
}
