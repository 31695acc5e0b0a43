//! Primitive complexes, staircase products and barycentric subdivision.

use std::collections::BTreeMap;

use super::complex::{EdgeLoop, MarkedComplex, OrderedComplex, Simplex, SimplicialInvolution, MAX_DIM};
use super::ComplexError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Primitive {
    /// The n-gon, a circle. Carries the loop `c`.
    Cycle(usize),
    /// Boundary of the d-simplex, a (d-1)-sphere.
    SimplexBoundary(usize),
    /// Boundary of the d-dimensional cross-polytope, with the antipodal involution.
    CrossPolytopeBoundary(usize),
}

pub fn build_primitive(kind: Primitive) -> Result<MarkedComplex, ComplexError> {
    match kind {
        Primitive::Cycle(n) => {
            if n < 3 {
                return Err(ComplexError::Parameter(format!("cycle({n}) needs at least 3 vertices")));
            }
            let edges = (0..n as u32).map(|i| vec![i, (i + 1) % n as u32]);
            let complex = OrderedComplex::from_facets(n, edges)?;
            let c = EdgeLoop::new((0..n as u32).collect(), &complex)?;
            let mut m = MarkedComplex::plain(complex);
            m.loops.insert("c".into(), c);
            Ok(m)
        }
        Primitive::SimplexBoundary(d) => {
            if !(2..=4).contains(&d) {
                return Err(ComplexError::Parameter(format!("simplex boundary dimension {d} not in 2..=4")));
            }
            let facets = (0..=d as u32).map(|skip| (0..=d as u32).filter(|&v| v != skip).collect());
            Ok(MarkedComplex::plain(OrderedComplex::from_facets(d + 1, facets)?))
        }
        Primitive::CrossPolytopeBoundary(d) => {
            if !(2..=4).contains(&d) {
                return Err(ComplexError::Parameter(format!("cross-polytope dimension {d} not in 2..=4")));
            }
            // +e_i is vertex i, -e_i is vertex d + i
            let facets = (0u32..(1 << d))
                .map(|signs| (0..d as u32).map(|i| if signs >> i & 1 == 0 { i } else { d as u32 + i }).collect());
            let complex = OrderedComplex::from_facets(2 * d, facets)?;
            let map = (0..2 * d as u32).map(|v| (v + d as u32) % (2 * d as u32)).collect();
            let antipode = SimplicialInvolution::new(map, &complex)?;
            Ok(MarkedComplex { complex, loops: BTreeMap::new(), involution: Some(antipode) })
        }
    }
}

/// Staircase triangulation of `|K| x |L|` on the lexicographic product order.
///
/// Loops of `K` become `left.<name>` at the first vertex of `L`; loops of `L`
/// become `right.<name>` at the first vertex of `K`.
pub fn ordered_product(k: &MarkedComplex, l: &MarkedComplex) -> Result<MarkedComplex, ComplexError> {
    let (kc, lc) = (&k.complex, &l.complex);
    let (dk, dl) = (kc.dim().unwrap_or(0), lc.dim().unwrap_or(0));
    if dk + dl > MAX_DIM {
        return Err(ComplexError::DimensionTooHigh(dk + dl));
    }
    let nl = lc.vertex_count() as u32;
    let vid = |a: u32, b: u32| a * nl + b;
    let mut facets: Vec<Simplex> = Vec::new();
    for s in kc.facets() {
        for t in lc.facets() {
            let (p, q) = (s.len() - 1, t.len() - 1);
            for steps in 0u32..(1 << (p + q)) {
                if steps.count_ones() as usize != p {
                    continue;
                }
                let (mut i, mut j) = (0, 0);
                let mut simplex = vec![vid(s[0], t[0])];
                for step in 0..p + q {
                    if steps >> step & 1 == 1 {
                        i += 1;
                    } else {
                        j += 1;
                    }
                    simplex.push(vid(s[i], t[j]));
                }
                facets.push(simplex);
            }
        }
    }
    let complex = OrderedComplex::from_facets(kc.vertex_count() * lc.vertex_count(), facets)?;
    let mut loops = BTreeMap::new();
    for (name, lp) in &k.loops {
        loops.insert(format!("left.{name}"), lp.map_vertices(|a| vid(a, 0)));
    }
    for (name, lp) in &l.loops {
        loops.insert(format!("right.{name}"), lp.map_vertices(|b| vid(0, b)));
    }
    for lp in loops.values() {
        lp.check(&complex)?;
    }
    Ok(MarkedComplex { complex, loops, involution: None })
}

/// Barycentric subdivision. New vertices are the simplices of `K` ordered by
/// dimension, then lexicographically.
pub fn barycentric_subdivision(k: &MarkedComplex) -> Result<MarkedComplex, ComplexError> {
    let kc = &k.complex;
    let dim = kc.dim().unwrap_or(0);
    let mut offset = vec![0usize; dim + 2];
    for d in 0..=dim {
        offset[d + 1] = offset[d] + kc.count(d);
    }
    let id = |s: &[u32]| -> u32 {
        let idx = kc.index_of(s).expect("face of a simplex in the complex");
        (offset[s.len() - 1] + idx) as u32
    };
    let mut facets: Vec<Simplex> = Vec::new();
    for f in kc.facets() {
        for perm in permutations(&f) {
            let chain: Simplex = (1..=perm.len())
                .map(|len| {
                    let mut face = perm[..len].to_vec();
                    face.sort_unstable();
                    id(&face)
                })
                .collect();
            facets.push(chain);
        }
    }
    let complex = OrderedComplex::from_facets(offset[dim + 1], facets)?;

    let mut loops = BTreeMap::new();
    for (name, lp) in &k.loops {
        let mut verts = Vec::with_capacity(2 * lp.len());
        for (a, b) in lp.edges() {
            verts.push(id(&[a]));
            verts.push(id(&[a.min(b), a.max(b)]));
        }
        loops.insert(name.clone(), EdgeLoop::new(verts, &complex)?);
    }
    let involution = match &k.involution {
        None => None,
        Some(t) => {
            let mut map = vec![0u32; complex.vertex_count()];
            for d in 0..=dim {
                for s in kc.simplices(d) {
                    map[id(s) as usize] = id(&t.apply(s));
                }
            }
            Some(SimplicialInvolution::new(map, &complex)?)
        }
    };
    Ok(MarkedComplex { complex, loops, involution })
}

/// Mapping torus of the carried involution: `n` prism slabs `K x [i, i+1]`,
/// the top of the last glued to the bottom of the first through the involution.
///
/// Vertex `(a, i)` is numbered `a * n + i`. Loops of `K` keep their names at
/// level 0; the new loop `t` runs once around the circle direction from vertex 0.
pub fn mapping_torus(k: &MarkedComplex, n: usize) -> Result<MarkedComplex, ComplexError> {
    if n < 3 {
        return Err(ComplexError::Parameter(format!("mapping torus needs at least 3 slabs, got {n}")));
    }
    let tau =
        k.involution.as_ref().ok_or_else(|| ComplexError::BadInvolution("complex carries no involution".into()))?;
    let kc = &k.complex;
    if kc.dim().unwrap_or(0) + 1 > MAX_DIM {
        return Err(ComplexError::DimensionTooHigh(kc.dim().unwrap_or(0) + 1));
    }
    let n32 = n as u32;
    let vid = |a: u32, level: u32| if level == n32 { tau.image(a) * n32 } else { a * n32 + level };
    let mut facets: Vec<Simplex> = Vec::new();
    for s in kc.facets() {
        for i in 0..n32 {
            for j in 0..s.len() {
                let lower = s[..=j].iter().map(|&a| vid(a, i));
                let upper = s[j..].iter().map(|&a| vid(a, i + 1));
                facets.push(lower.chain(upper).collect());
            }
        }
    }
    let complex = OrderedComplex::from_facets(kc.vertex_count() * n, facets)?;
    let mut loops = BTreeMap::new();
    for (name, lp) in &k.loops {
        loops.insert(name.clone(), lp.map_vertices(|a| vid(a, 0)));
    }
    let back = kc
        .shortest_path(tau.image(0), 0)
        .ok_or_else(|| ComplexError::BadLoop("vertex 0 not connected to its image".into()))?;
    let mut t: Vec<u32> = (0..n32).map(|i| vid(0, i)).collect();
    t.extend(back[..back.len() - 1].iter().map(|&a| vid(a, 0)));
    loops.insert("t".to_string(), EdgeLoop::new(t, &complex)?);
    Ok(MarkedComplex { complex, loops, involution: None })
}

fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, first);
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn prim(p: Primitive) -> MarkedComplex {
        build_primitive(p).unwrap()
    }

    #[test]
    fn primitive_counts() {
        let c3 = prim(Primitive::Cycle(3)).complex;
        assert_eq!(c3.f_vector(), vec![3, 3]);
        assert_eq!(c3.euler_characteristic(), 0);
        let s2 = prim(Primitive::SimplexBoundary(3)).complex;
        assert_eq!(s2.f_vector(), vec![4, 6, 4]);
        assert_eq!(s2.euler_characteristic(), 2);
        let x4 = prim(Primitive::CrossPolytopeBoundary(4));
        assert_eq!(x4.complex.vertex_count(), 8);
        // one facet per sign vector
        assert_eq!(x4.complex.count(3), 1 << 4);
        assert_eq!(x4.complex.facets().len(), 16);
        assert!(x4.involution.unwrap().is_free_on_vertices());
        assert!(build_primitive(Primitive::Cycle(2)).is_err());
        assert!(build_primitive(Primitive::SimplexBoundary(5)).is_err());
    }

    #[test]
    fn torus_product() {
        let c = prim(Primitive::Cycle(3));
        let t = ordered_product(&c, &c).unwrap();
        // 9 grid squares, 2 triangles each
        assert_eq!(t.complex.f_vector(), vec![9, 27, 18]);
        assert_eq!(t.complex.euler_characteristic(), 0);
        assert!(t.loops.contains_key("left.c") && t.loops.contains_key("right.c"));
        assert!(t.complex.check_invariants().is_ok());
    }

    #[test]
    fn product_with_point_is_identity() {
        let s2 = prim(Primitive::SimplexBoundary(3));
        let point = MarkedComplex::plain(OrderedComplex::from_facets(1, vec![]).unwrap());
        assert_eq!(ordered_product(&s2, &point).unwrap().complex, s2.complex);
        assert_eq!(ordered_product(&point, &s2).unwrap().complex, s2.complex);
    }

    #[test]
    fn product_dimension_overflow() {
        let s2 = prim(Primitive::SimplexBoundary(3));
        assert!(matches!(ordered_product(&s2, &s2), Err(ComplexError::DimensionTooHigh(4))));
    }

    #[test]
    fn subdivision_counts() {
        let sd = barycentric_subdivision(&prim(Primitive::SimplexBoundary(3))).unwrap();
        // 4 + 6 + 4 new vertices, 6 chains per triangle
        assert_eq!(sd.complex.f_vector(), vec![14, 36, 24]);
        assert_eq!(sd.complex.euler_characteristic(), 2);
        let c = barycentric_subdivision(&prim(Primitive::Cycle(3))).unwrap();
        assert_eq!(c.complex.f_vector(), vec![6, 6]);
        assert_eq!(c.loops["c"].len(), 6);
    }

    #[test]
    fn subdivision_transports_involution() {
        let sd = barycentric_subdivision(&prim(Primitive::CrossPolytopeBoundary(3))).unwrap();
        assert_eq!(sd.complex.f_vector(), vec![26, 72, 48]);
        assert!(sd.involution.unwrap().is_free_on_vertices());
    }

    #[test]
    fn mapping_torus_of_antipode() {
        let x3 = prim(Primitive::CrossPolytopeBoundary(3));
        let e = mapping_torus(&x3, 3).unwrap();
        assert_eq!(e.complex.vertex_count(), 18);
        // three prism slabs over 8 triangles, three tetrahedra per prism
        assert_eq!(e.complex.count(3), 72);
        assert_eq!(e.complex.euler_characteristic(), 0);
        assert_eq!(e.loops["t"].len(), 5);
        assert!(mapping_torus(&x3, 2).is_err());
        assert!(mapping_torus(&prim(Primitive::Cycle(4)), 3).is_err());
    }

    fn arb_complex(max_facet: usize) -> impl Strategy<Value = MarkedComplex> {
        (3usize..7).prop_flat_map(move |n| {
            prop::collection::vec(prop::collection::btree_set(0..n as u32, 1..=max_facet), 1..6).prop_map(move |fs| {
                let facets = fs.into_iter().map(|s| s.into_iter().collect::<Vec<_>>());
                MarkedComplex::plain(OrderedComplex::from_facets(n, facets).unwrap())
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn euler_multiplicative_under_product(k in arb_complex(3), l in arb_complex(2)) {
            let p = ordered_product(&k, &l).unwrap();
            p.complex.check_invariants().unwrap();
            prop_assert_eq!(
                p.complex.euler_characteristic(),
                k.complex.euler_characteristic() * l.complex.euler_characteristic()
            );
        }

        #[test]
        fn euler_invariant_under_subdivision(k in arb_complex(4)) {
            let sd = barycentric_subdivision(&k).unwrap();
            sd.complex.check_invariants().unwrap();
            prop_assert_eq!(sd.complex.euler_characteristic(), k.complex.euler_characteristic());
        }
    }
}
