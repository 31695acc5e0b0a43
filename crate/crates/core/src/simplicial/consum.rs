use std::collections::{BTreeMap, HashMap};

use super::complex::{MarkedComplex, OrderedComplex, Simplex};
use super::ComplexError;

fn check_closed_pseudomanifold(k: &OrderedComplex) -> Result<(), ComplexError> {
    if k.dim() != Some(3) {
        return Err(ComplexError::NotClosedPseudomanifold("complex is not 3-dimensional".into()));
    }
    let mut degree: HashMap<&[u32], usize> = HashMap::new();
    for t in k.simplices(3) {
        for skip in 0..4 {
            let face: Simplex = t.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
            let idx = k.index_of(&face).expect("face closure");
            *degree.entry(k.simplices(2)[idx].as_slice()).or_default() += 1;
        }
    }
    for tri in k.simplices(2) {
        let d = degree.get(tri.as_slice()).copied().unwrap_or(0);
        if d != 2 {
            return Err(ComplexError::NotClosedPseudomanifold(format!("triangle {tri:?} lies in {d} tetrahedra")));
        }
    }
    Ok(())
}

fn loop_vertices(k: &MarkedComplex) -> Vec<u32> {
    k.loops.values().flat_map(|l| l.vertices().iter().copied()).collect()
}

/// Last tetrahedron (in sorted order) sharing no vertex with a marked loop.
pub fn default_gluing_facet(k: &MarkedComplex) -> Option<Simplex> {
    let used = loop_vertices(k);
    k.complex.simplices(3).iter().rev().find(|t| t.iter().all(|v| !used.contains(v))).cloned()
}

/// Removes the open tetrahedra `fk` and `fl` and glues the two boundary
/// spheres along `matching` (pairs `(vertex of fk, vertex of fl)`).
///
/// Vertices of `K` keep their numbers; the remaining vertices of `L` follow in
/// order. Loops are renamed `left.<name>` and `right.<name>`.
pub fn connected_sum(
    k: &MarkedComplex,
    l: &MarkedComplex,
    fk: &[u32],
    fl: &[u32],
    matching: &[(u32, u32)],
) -> Result<MarkedComplex, ComplexError> {
    for (side, m, f) in [("left", k, fk), ("right", l, fl)] {
        check_closed_pseudomanifold(&m.complex)?;
        if f.len() != 4 || !m.complex.contains(f) {
            return Err(ComplexError::Parameter(format!("{side} gluing facet {f:?} is not a tetrahedron")));
        }
        let used = loop_vertices(m);
        if f.iter().any(|v| used.contains(v)) {
            return Err(ComplexError::FacetMeetsLoop(f.to_vec()));
        }
    }
    let mut mk: Vec<u32> = matching.iter().map(|p| p.0).collect();
    let mut ml: Vec<u32> = matching.iter().map(|p| p.1).collect();
    mk.sort_unstable();
    ml.sort_unstable();
    mk.dedup();
    ml.dedup();
    if mk != fk || ml != fl || matching.len() != 4 {
        return Err(ComplexError::Parameter("matching is not a bijection between the gluing facets".into()));
    }

    let nk = k.complex.vertex_count() as u32;
    let mut relabel = vec![u32::MAX; l.complex.vertex_count()];
    for &(a, b) in matching {
        relabel[b as usize] = a;
    }
    let mut next = nk;
    for r in relabel.iter_mut() {
        if *r == u32::MAX {
            *r = next;
            next += 1;
        }
    }

    let mut facets: Vec<Simplex> = k.complex.facets().into_iter().filter(|f| f != fk).collect();
    facets.extend(
        l.complex.facets().into_iter().filter(|f| f != fl).map(|f| f.iter().map(|&v| relabel[v as usize]).collect()),
    );
    let complex = OrderedComplex::from_facets(next as usize, facets)?;
    let mut loops = BTreeMap::new();
    for (name, lp) in &k.loops {
        loops.insert(format!("left.{name}"), lp.clone());
    }
    for (name, lp) in &l.loops {
        loops.insert(format!("right.{name}"), lp.map_vertices(|v| relabel[v as usize]));
    }
    for lp in loops.values() {
        lp.check(&complex)?;
    }
    Ok(MarkedComplex { complex, loops, involution: None })
}

/// Connected sum along the default facets, matched in sorted vertex order.
pub fn connected_sum_default(k: &MarkedComplex, l: &MarkedComplex) -> Result<MarkedComplex, ComplexError> {
    check_closed_pseudomanifold(&k.complex)?;
    check_closed_pseudomanifold(&l.complex)?;
    let fk = default_gluing_facet(k).ok_or_else(|| ComplexError::FacetMeetsLoop(vec![]))?;
    let fl = default_gluing_facet(l).ok_or_else(|| ComplexError::FacetMeetsLoop(vec![]))?;
    let matching: Vec<(u32, u32)> = fk.iter().copied().zip(fl.iter().copied()).collect();
    connected_sum(k, l, &fk, &fl, &matching)
}
