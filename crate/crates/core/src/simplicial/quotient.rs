//! Quotients by free simplicial involutions.

use std::collections::{BTreeMap, HashMap};

use super::complex::{EdgeLoop, MarkedComplex, OrderedComplex, Simplex, SimplicialInvolution};
use super::construct::barycentric_subdivision;
use super::ComplexError;

/// Number of extra barycentric subdivisions tried by [`quotient_subdividing`].
pub const MAX_QUOTIENT_SUBDIVISIONS: usize = 2;

/// Vertex orbits numbered in order of their smallest member.
fn orbit_ids(tau: &SimplicialInvolution) -> Vec<u32> {
    let n = tau.vertex_map().len();
    let mut ids = vec![u32::MAX; n];
    let mut next = 0;
    for v in 0..n as u32 {
        if ids[v as usize] == u32::MAX {
            ids[v as usize] = next;
            ids[tau.image(v) as usize] = next;
            next += 1;
        }
    }
    ids
}

fn image_of(ids: &[u32], s: &[u32]) -> Simplex {
    let mut img: Simplex = s.iter().map(|&v| ids[v as usize]).collect();
    img.sort_unstable();
    img.dedup();
    img
}

/// `K / tau`, valid when no simplex meets its image and distinct simplices
/// that are not swapped by `tau` have distinct images.
///
/// The result carries one loop `q`: the image of a shortest edge path from
/// vertex 0 to its partner.
pub fn free_quotient(k: &MarkedComplex, tau: &SimplicialInvolution) -> Result<MarkedComplex, ComplexError> {
    let kc = &k.complex;
    if !tau.is_free_on_vertices() {
        return Err(ComplexError::BadInvolution("involution fixes a vertex".into()));
    }
    let ids = orbit_ids(tau);
    let mut facets = Vec::new();
    for d in 0..=kc.dim().unwrap_or(0) {
        let mut seen: HashMap<Simplex, &Simplex> = HashMap::new();
        for s in kc.simplices(d) {
            let img = image_of(&ids, s);
            if img.len() != s.len() {
                return Err(ComplexError::QuotientInvalid { first: s.clone(), second: tau.apply(s) });
            }
            match seen.get(&img) {
                None => {
                    seen.insert(img.clone(), s);
                }
                Some(&prev) => {
                    // the only other preimage allowed is the partner simplex, which comes later
                    if tau.apply(prev) != *s {
                        return Err(ComplexError::QuotientInvalid { first: prev.clone(), second: s.clone() });
                    }
                }
            }
            facets.push(img);
        }
    }
    let complex = OrderedComplex::from_facets(kc.vertex_count() / 2, facets)?;

    let path = kc
        .shortest_path(0, tau.image(0))
        .ok_or_else(|| ComplexError::BadLoop("vertex 0 not connected to its image".into()))?;
    let verts: Vec<u32> = path[..path.len() - 1].iter().map(|&v| ids[v as usize]).collect();
    let q = EdgeLoop::new(verts, &complex)?;
    Ok(MarkedComplex { complex, loops: BTreeMap::from([("q".to_string(), q)]), involution: None })
}

/// Quotient by the carried involution, subdividing and retrying on a validity failure.
pub fn quotient_subdividing(k: &MarkedComplex) -> Result<MarkedComplex, ComplexError> {
    let mut current = k.clone();
    let mut attempt = 0;
    loop {
        let tau = current
            .involution
            .clone()
            .ok_or_else(|| ComplexError::BadInvolution("complex carries no involution".into()))?;
        match free_quotient(&current, &tau) {
            Err(ComplexError::QuotientInvalid { .. }) if attempt < MAX_QUOTIENT_SUBDIVISIONS => {
                current = barycentric_subdivision(&current)?;
                attempt += 1;
            }
            other => return other,
        }
    }
}

/// Counts the preimages of every simplex of `quotient` under the orbit map.
/// A valid double cover gives exactly two everywhere.
pub fn fiber_counts(k: &OrderedComplex, tau: &SimplicialInvolution, quotient: &OrderedComplex) -> Vec<Vec<usize>> {
    let ids = orbit_ids(tau);
    let mut counts: Vec<Vec<usize>> = (0..=quotient.dim().unwrap_or(0)).map(|d| vec![0; quotient.count(d)]).collect();
    for (d, row) in counts.iter_mut().enumerate().take(k.dim().map_or(1, |x| x + 1)) {
        for s in k.simplices(d) {
            let img = image_of(&ids, s);
            if let Some(i) = quotient.index_of(&img) {
                if img.len() == s.len() {
                    row[i] += 1;
                }
            }
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::construct::{build_primitive, Primitive};

    #[test]
    fn unsubdivided_cross_polytope_fails() {
        let x4 = build_primitive(Primitive::CrossPolytopeBoundary(4)).unwrap();
        let tau = x4.involution.clone().unwrap();
        match free_quotient(&x4, &tau) {
            Err(ComplexError::QuotientInvalid { first, second }) => {
                // two facets differing in the sign of one axis have the same orbit set
                assert_ne!(tau.apply(&first), second);
                assert_eq!(first.len(), second.len());
            }
            other => panic!("expected a validity failure, got {other:?}"),
        }
    }

    #[test]
    fn projective_plane_from_octahedron() {
        let sd = barycentric_subdivision(&build_primitive(Primitive::CrossPolytopeBoundary(3)).unwrap()).unwrap();
        let tau = sd.involution.clone().unwrap();
        let rp2 = free_quotient(&sd, &tau).unwrap();
        assert_eq!(rp2.complex.f_vector(), vec![13, 36, 24]);
        assert_eq!(rp2.complex.euler_characteristic(), 1);
        let counts = fiber_counts(&sd.complex, &tau, &rp2.complex);
        assert!(counts.iter().flatten().all(|&c| c == 2));
        assert!(rp2.loops["q"].len() >= 3);
    }

    #[test]
    fn subdividing_quotient_retries() {
        let x4 = build_primitive(Primitive::CrossPolytopeBoundary(4)).unwrap();
        let rp3 = quotient_subdividing(&x4).unwrap();
        assert_eq!(rp3.complex.vertex_count(), 40);
        assert_eq!(rp3.complex.count(3), 192);
        assert_eq!(rp3.complex.euler_characteristic(), 0);
    }

    #[test]
    fn requires_free_involution() {
        let c = build_primitive(Primitive::Cycle(4)).unwrap();
        let flip = SimplicialInvolution::new(vec![0, 3, 2, 1], &c.complex).unwrap();
        assert!(matches!(free_quotient(&c, &flip), Err(ComplexError::BadInvolution(_))));
    }
}
