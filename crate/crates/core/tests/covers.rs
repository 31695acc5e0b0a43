use s2r_core::covers::{
    analyze_cover, equivalence_orbits, identify_cover, reidemeister_schreier_index2, verify_stated_kernel, CoverError,
    KernelVerification, Manifold, ManifoldModel,
};
use s2r_core::fpgroup::{enumerate_epis_z2, recognize_catalog_group, CatalogGroup, GroupHom2, Word};
use s2r_core::pipeline::default_catalog;

fn model(name: &str) -> ManifoldModel {
    default_catalog().model(name).unwrap().clone()
}

fn words(m: &ManifoldModel, texts: &[&str]) -> Vec<Word> {
    texts.iter().map(|t| m.presentation.parse_word(t).unwrap()).collect()
}

fn verify(name: &str, phi: [u8; 2], stated: &[&str]) -> Result<KernelVerification, CoverError> {
    let m = model(name);
    verify_stated_kernel(&m, &GroupHom2::new(phi), &words(&m, stated))
}

#[test]
fn stated_kernels_generate() {
    for (name, phi, stated) in [
        ("RP2xS1", [0, 1], &["v", "h^2"][..]),
        ("RP3#RP3", [0, 1], &["v", "h^2"][..]),
        ("RP3#RP3", [1, 0], &["h"][..]),
        ("RP3#RP3", [1, 1], &["h v", "h^2"][..]),
    ] {
        let result = verify(name, phi, stated).unwrap();
        assert!(result.is_verified(), "{name} {phi:?}: {result:?}");
    }
}

#[test]
fn element_outside_kernel_is_rejected() {
    assert!(matches!(verify("RP2xS1", [1, 0], &["v"]), Err(CoverError::NotInKernel(_))));
}

#[test]
fn proper_subgroup_is_inconclusive() {
    // <h^2> misses v, which lies in the kernel of (0,1)
    let result = verify("RP2xS1", [0, 1], &["h^2"]).unwrap();
    assert!(matches!(result, KernelVerification::Inconclusive { ref unmatched } if !unmatched.is_empty()));
}

#[test]
fn witnesses_multiply_back() {
    let m = model("RP3#RP3");
    let stated = words(&m, &["h v", "h^2"]);
    let KernelVerification::Verified { witnesses } =
        verify_stated_kernel(&m, &GroupHom2::new([1, 1]), &stated).unwrap()
    else {
        panic!("not verified");
    };
    let nf = m.normal_form.as_ref().unwrap();
    let kernel = reidemeister_schreier_index2(&m.presentation, &GroupHom2::new([1, 1])).unwrap();
    assert_eq!(witnesses.len(), kernel.inclusion.len());
    for (w, target) in witnesses.iter().zip(&kernel.inclusion) {
        let product = w.iter().fold(Word::identity(), |acc, &(i, e)| acc.mul(&stated[i].pow(e as i64)));
        assert!(nf.equal(&product, target));
    }
}

#[test]
fn base_groups_recognized() {
    let got: Vec<CatalogGroup> =
        default_catalog().models.iter().map(|m| recognize_catalog_group(&m.presentation, None)).collect();
    assert_eq!(got, [CatalogGroup::InfCyclic, CatalogGroup::InfCyclic, CatalogGroup::Z2TimesZ, CatalogGroup::Z2FreeZ2]);
}

#[test]
fn kernel_groups_match_covers() {
    for m in &default_catalog().models {
        for phi in enumerate_epis_z2(&m.presentation) {
            let info = analyze_cover(m, &phi).unwrap();
            let expected = match info.cover {
                Manifold::S2xS1 | Manifold::E => CatalogGroup::InfCyclic,
                Manifold::RP2xS1 => CatalogGroup::Z2TimesZ,
                Manifold::RP3RP3 => CatalogGroup::Z2FreeZ2,
            };
            assert_eq!(info.group, expected, "{} {phi:?}", m.name);
            assert_eq!(info.orientable, matches!(info.cover, Manifold::S2xS1 | Manifold::RP3RP3));
        }
    }
}

#[test]
fn covers_stay_in_catalog() {
    let catalog = default_catalog();
    for m in &catalog.models {
        for phi in enumerate_epis_z2(&m.presentation) {
            let cover = identify_cover(m, &phi).unwrap();
            assert!(catalog.model(cover.name()).is_some(), "{} -> {cover}", m.name);
        }
    }
}

#[test]
fn orbit_sizes() {
    let sizes: Vec<Vec<usize>> = default_catalog()
        .models
        .iter()
        .map(|m| {
            let epis = enumerate_epis_z2(&m.presentation);
            equivalence_orbits(m, &epis).unwrap().iter().map(Vec::len).collect()
        })
        .collect();
    assert_eq!(sizes, [vec![1], vec![1], vec![1, 1, 1], vec![2, 1]]);
}

#[test]
fn rp3_sum_merges_core_loop_classes() {
    let m = model("RP3#RP3");
    let orbits = equivalence_orbits(&m, &enumerate_epis_z2(&m.presentation)).unwrap();
    let values: Vec<Vec<Vec<u8>>> =
        orbits.iter().map(|o| o.iter().map(|phi| phi.values().to_vec()).collect()).collect();
    // (0,1) and (1,1) are nonzero on exactly one of the core loops a, b = v^-1 h
    assert_eq!(values, [vec![vec![0, 1], vec![1, 1]], vec![vec![1, 0]]]);
}

#[test]
fn w1_changing_automorphism_is_ignored() {
    let m = model("RP2xS1");
    let counter = m.aut_generators.iter().find(|a| m.w1.precompose(&a.images).unwrap() != m.w1).unwrap();
    // it would merge (1,0) with (1,1), which have different covers
    let moved = GroupHom2::new([1, 0]).precompose(&counter.images).unwrap();
    assert_eq!(moved.values(), [1, 1]);
    assert_ne!(identify_cover(&m, &GroupHom2::new([1, 0])).unwrap(), identify_cover(&m, &moved).unwrap());
    let orbits = equivalence_orbits(&m, &enumerate_epis_z2(&m.presentation)).unwrap();
    assert!(orbits.iter().all(|o| o.len() == 1));
}

#[test]
fn every_model_validates() {
    for m in &default_catalog().models {
        m.validate().unwrap();
    }
}
