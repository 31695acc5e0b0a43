use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use s2r_core::buindex::{cube_nonzero, factors_through_z};
use s2r_core::cohomology::{coboundary, coboundary_matrix, cocycle_for_hom, Class, Cochain, CohomologyRing};
use s2r_core::covers::ManifoldModel;
use s2r_core::fpgroup::{enumerate_epis_z2, GroupHom2};
use s2r_core::gf2::BitVec;
use s2r_core::pipeline::default_catalog;
use s2r_core::simplicial::{barycentric_subdivision, validate_closed_3complex, OrderedComplex, Recipe};

fn model(name: &str) -> ManifoldModel {
    default_catalog().model(name).unwrap().clone()
}

fn add(a: &Class, b: &Class) -> Class {
    let mut coords = a.coords.clone();
    coords.xor_assign(&b.coords);
    Class { degree: a.degree, coords }
}

/// Cube of a 1-cochain evaluated on the mod-2 fundamental cycle, the sum of all
/// tetrahedra: the product of the values on the three edges of each path.
fn cube_on_fundamental_cycle(k: &OrderedComplex, a: &Cochain) -> bool {
    k.simplices(3)
        .iter()
        .filter(|s| a.value_on(k, &s[0..2]) && a.value_on(k, &s[1..3]) && a.value_on(k, &s[2..4]))
        .count()
        % 2
        == 1
}

fn phi_from(values: [u8; 2]) -> GroupHom2 {
    GroupHom2::new(values)
}

#[test]
fn built_models_are_closed_3_complexes() {
    for (name, betti) in
        [("S2xS1", [1, 1, 1, 1]), ("E", [1, 1, 1, 1]), ("RP2xS1", [1, 2, 2, 1]), ("RP3#RP3", [1, 2, 2, 1])]
    {
        let t = model(name).triangulation().unwrap();
        let report = validate_closed_3complex(&t.marked.complex);
        assert!(report.is_ok(), "{name}: {:?}", report.failures);
        assert_eq!(report.betti, betti, "{name}");
    }
}

#[test]
fn projective_space_betti() {
    let rp3 = "quotient(subdiv(crosspoly(4)),antipode)".parse::<Recipe>().unwrap().build().unwrap();
    let ring = CohomologyRing::new(&rp3.complex).unwrap();
    assert_eq!(ring.betti_numbers(), [1, 1, 1, 1]);
    let x = &ring.all_classes(1)[1];
    assert!(ring.cup_cube_class(x).unwrap().is_nonzero);
}

#[test]
fn coboundary_squares_to_zero() {
    for m in &default_catalog().models {
        let k = m.triangulation().unwrap().marked.complex.clone();
        for d in 0..2 {
            let twice = coboundary_matrix(&k, d + 1).unwrap().mul(&coboundary_matrix(&k, d).unwrap());
            assert!(twice.is_zero(), "{} degree {d}", m.name);
        }
    }
}

#[test]
fn cube_suite_matches_fundamental_cycle_oracle() {
    let expected = [("RP2xS1", vec![[1, 1]]), ("RP3#RP3", vec![[0, 1], [1, 1]])];
    for (name, nonzero) in expected {
        let m = model(name);
        let t = m.triangulation().unwrap();
        let k = &t.marked.complex;
        for phi in [[0, 1], [1, 0], [1, 1]] {
            let class = cocycle_for_hom(&t, &phi_from(phi)).unwrap();
            let computed = t.ring.cup_cube_class(&class).unwrap().is_nonzero;
            let oracle = cube_on_fundamental_cycle(k, &t.ring.representative(&class));
            assert_eq!(computed, oracle, "{name} {phi:?}");
            assert_eq!(computed, nonzero.contains(&phi), "{name} {phi:?}");
        }
    }
}

#[test]
fn cup_is_bilinear_commutative_associative() {
    for name in ["S2xS1", "E", "RP2xS1", "RP3#RP3"] {
        let t = model(name).triangulation().unwrap();
        let ring = &t.ring;
        let classes = ring.all_classes(1);
        for a in &classes {
            for b in &classes {
                let ab = ring.cup_classes(a, b).unwrap();
                assert_eq!(ab, ring.cup_classes(b, a).unwrap(), "{name}");
                for c in &classes {
                    let lhs = ring.cup_classes(&add(a, b), c).unwrap();
                    let rhs = add(&ring.cup_classes(a, c).unwrap(), &ring.cup_classes(b, c).unwrap());
                    assert_eq!(lhs, rhs, "{name}");
                    let left = ring.cup_classes(&ab, c).unwrap();
                    let right = ring.cup_classes(a, &ring.cup_classes(b, c).unwrap()).unwrap();
                    assert_eq!(left, right, "{name}");
                }
            }
        }
    }
}

#[test]
fn cube_is_a_cubic_form() {
    // (a+b)^3 = a^3 + a^2 b + a b^2 + b^3 over F2
    for name in ["RP2xS1", "RP3#RP3"] {
        let t = model(name).triangulation().unwrap();
        let ring = &t.ring;
        let cube = |x: &Class| ring.cup_cube_class(x).unwrap().class;
        let classes = ring.all_classes(1);
        for a in &classes {
            for b in &classes {
                let aa = ring.cup_classes(a, a).unwrap();
                let bb = ring.cup_classes(b, b).unwrap();
                let mut rhs = add(&cube(a), &cube(b));
                rhs = add(&rhs, &ring.cup_classes(&aa, b).unwrap());
                rhs = add(&rhs, &ring.cup_classes(a, &bb).unwrap());
                assert_eq!(cube(&add(a, b)), rhs, "{name}");
            }
        }
    }
}

#[test]
fn cube_ignores_coboundary_perturbation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in ["RP2xS1", "RP3#RP3"] {
        let t = model(name).triangulation().unwrap();
        let k = &t.marked.complex;
        for class in t.ring.all_classes(1) {
            let base = cube_on_fundamental_cycle(k, &t.ring.representative(&class));
            for _ in 0..20 {
                let x = Cochain { degree: 0, values: BitVec::from_bits((0..k.count(0)).map(|_| rng.gen::<bool>())) };
                let r = t.ring.representative(&class).add(&coboundary(k, &x));
                assert_eq!(t.ring.class_of(&r).unwrap(), class);
                assert_eq!(cube_on_fundamental_cycle(k, &r), base, "{name}");
            }
        }
    }
}

#[test]
fn loop_values_survive_subdivision() {
    for name in ["S2xS1", "E", "RP2xS1", "RP3#RP3"] {
        let t = model(name).triangulation().unwrap();
        let k = &t.marked.complex;
        let sd = barycentric_subdivision(&t.marked).unwrap();
        // a subdivision vertex is a simplex of k; send it to its last vertex
        let faces: Vec<&[u32]> = (0..=3).flat_map(|d| k.simplices(d).iter().map(Vec::as_slice)).collect();
        let last = |v: u32| *faces[v as usize].last().unwrap();
        for class in t.ring.all_classes(1) {
            let c = t.ring.representative(&class);
            let pulled = Cochain {
                degree: 1,
                values: BitVec::from_bits(sd.complex.simplices(1).iter().map(|e| {
                    let (a, b) = (last(e[0]), last(e[1]));
                    a != b && c.value_on(k, &[a.min(b), a.max(b)])
                })),
            };
            assert!(coboundary(&sd.complex, &pulled).is_zero(), "{name}");
            for (name_loop, lp) in &sd.loops {
                let original = &t.marked.loops[name_loop];
                let on = |cx: &Cochain, kx: &OrderedComplex, edges: Vec<(u32, u32)>| {
                    edges.iter().filter(|&&(a, b)| cx.value_on(kx, &[a.min(b), a.max(b)])).count() % 2
                };
                assert_eq!(
                    on(&pulled, &sd.complex, lp.edges().collect()),
                    on(&c, k, original.edges().collect()),
                    "{name} {name_loop}"
                );
            }
        }
    }
}

#[test]
fn z_factorization_excludes_nonzero_cube() {
    let mut pairs = 0;
    for m in &default_catalog().models {
        for phi in enumerate_epis_z2(&m.presentation) {
            pairs += 1;
            if factors_through_z(&m.presentation, &phi).is_some() {
                assert!(!cube_nonzero(m, &phi).unwrap(), "{} {phi:?}", m.name);
            }
        }
    }
    assert_eq!(pairs, 8);
}
