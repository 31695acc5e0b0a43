//! Solvable word problems for the three catalog groups.

use std::fmt;

use crate::fpgroup::{CatalogGroup, Word};

/// Canonical element of a catalog group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogElement {
    Z(i64),
    /// `(parity of the Z2 factor, Z coordinate)`.
    Z2xZ(u8, i64),
    /// Reduced alternating word in the involutions `a` (0) and `b` (1).
    Dihedral(Vec<u8>),
}

impl fmt::Display for CatalogElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogElement::Z(n) => write!(f, "{n}"),
            CatalogElement::Z2xZ(p, n) => write!(f, "({p},{n})"),
            CatalogElement::Dihedral(w) if w.is_empty() => write!(f, "1"),
            CatalogElement::Dihedral(w) => {
                let s: Vec<&str> = w.iter().map(|&x| if x == 0 { "a" } else { "b" }).collect();
                write!(f, "{}", s.join(" "))
            }
        }
    }
}

/// A map from presentation generators into a catalog group, given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalForm {
    Z(Vec<i64>),
    Z2xZ(Vec<(u8, i64)>),
    Dihedral(Vec<Vec<u8>>),
}

fn reduce_dihedral(letters: impl IntoIterator<Item = u8>) -> Vec<u8> {
    let mut out: Vec<u8> = Vec::new();
    for x in letters {
        if out.last() == Some(&x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

impl NormalForm {
    pub fn group(&self) -> CatalogGroup {
        match self {
            NormalForm::Z(_) => CatalogGroup::InfCyclic,
            NormalForm::Z2xZ(_) => CatalogGroup::Z2TimesZ,
            NormalForm::Dihedral(_) => CatalogGroup::Z2FreeZ2,
        }
    }

    pub fn generator_count(&self) -> usize {
        match self {
            NormalForm::Z(v) => v.len(),
            NormalForm::Z2xZ(v) => v.len(),
            NormalForm::Dihedral(v) => v.len(),
        }
    }

    pub fn identity(&self) -> CatalogElement {
        match self {
            NormalForm::Z(_) => CatalogElement::Z(0),
            NormalForm::Z2xZ(_) => CatalogElement::Z2xZ(0, 0),
            NormalForm::Dihedral(_) => CatalogElement::Dihedral(Vec::new()),
        }
    }

    pub fn eval(&self, w: &Word) -> CatalogElement {
        match self {
            NormalForm::Z(img) => CatalogElement::Z(w.letters().iter().map(|l| img[l.gen] * i64::from(l.exp)).sum()),
            NormalForm::Z2xZ(img) => {
                let (mut p, mut n) = (0u8, 0i64);
                for l in w.letters() {
                    p ^= img[l.gen].0;
                    n += img[l.gen].1 * i64::from(l.exp);
                }
                CatalogElement::Z2xZ(p, n)
            }
            NormalForm::Dihedral(img) => {
                // a and b are involutions, so an inverse is the reversed word
                CatalogElement::Dihedral(reduce_dihedral(w.letters().iter().flat_map(|l| {
                    let g = &img[l.gen];
                    let seq: Vec<u8> = if l.exp > 0 { g.clone() } else { g.iter().rev().copied().collect() };
                    seq
                })))
            }
        }
    }

    pub fn multiply(&self, x: &CatalogElement, y: &CatalogElement) -> CatalogElement {
        match (x, y) {
            (CatalogElement::Z(a), CatalogElement::Z(b)) => CatalogElement::Z(a + b),
            (CatalogElement::Z2xZ(p, a), CatalogElement::Z2xZ(q, b)) => CatalogElement::Z2xZ(p ^ q, a + b),
            (CatalogElement::Dihedral(u), CatalogElement::Dihedral(v)) => {
                CatalogElement::Dihedral(reduce_dihedral(u.iter().chain(v).copied()))
            }
            _ => panic!("mixed catalog elements"),
        }
    }

    pub fn inverse(&self, x: &CatalogElement) -> CatalogElement {
        match x {
            CatalogElement::Z(a) => CatalogElement::Z(-a),
            CatalogElement::Z2xZ(p, a) => CatalogElement::Z2xZ(*p, -a),
            CatalogElement::Dihedral(u) => CatalogElement::Dihedral(u.iter().rev().copied().collect()),
        }
    }

    pub fn is_identity(&self, w: &Word) -> bool {
        self.eval(w) == self.identity()
    }

    pub fn equal(&self, u: &Word, v: &Word) -> bool {
        self.eval(u) == self.eval(v)
    }
}
