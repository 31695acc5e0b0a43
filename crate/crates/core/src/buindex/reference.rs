//! Known classification of the free involutions, used as a golden reference.

use crate::covers::Manifold;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReferenceRow {
    pub case: &'static str,
    pub base: Manifold,
    /// Values on the generators of the base presentation.
    pub phi: &'static [u8],
    pub cover: Manifold,
    pub tau: &'static str,
    pub index: u8,
}

const fn row(
    case: &'static str,
    base: Manifold,
    phi: &'static [u8],
    cover: Manifold,
    tau: &'static str,
    index: u8,
) -> ReferenceRow {
    ReferenceRow { case, base, phi, cover, tau, index }
}

/// One row per equivalence class, in catalog order then by value vector. For
/// RP3#RP3 the class `{(0,1), (1,1)}` is listed under its first member.
pub const REFERENCE_TABLE: [ReferenceRow; 7] = [
    row("A1", Manifold::S2xS1, &[1], Manifold::S2xS1, "tau1", 1),
    row("A2", Manifold::E, &[1, 0], Manifold::S2xS1, "tau2", 1),
    row("C", Manifold::RP2xS1, &[0, 1], Manifold::RP2xS1, "tau6", 1),
    row("A3", Manifold::RP2xS1, &[1, 0], Manifold::S2xS1, "tau3", 2),
    row("B", Manifold::RP2xS1, &[1, 1], Manifold::E, "tau5", 3),
    row("D", Manifold::RP3RP3, &[0, 1], Manifold::RP3RP3, "tau7", 3),
    row("A4", Manifold::RP3RP3, &[1, 0], Manifold::S2xS1, "tau4", 2),
];

/// Every epimorphism, including the second member of the RP3#RP3 class.
pub fn reference_index(base: Manifold, phi: &[u8]) -> Option<u8> {
    if base == Manifold::RP3RP3 && phi == [1, 1] {
        return Some(3);
    }
    REFERENCE_TABLE.iter().find(|r| r.base == base && r.phi == phi).map(|r| r.index)
}
