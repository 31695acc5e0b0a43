//! Reidemeister-Schreier rewriting for kernels of maps onto Z/2.

use crate::fpgroup::{evaluate_hom2, tietze_simplify_tracked, GroupHom2, Letter, Presentation, Word};

use super::CoverError;

/// A presentation of a subgroup with the ambient word of each generator.
#[derive(Clone, Debug)]
pub struct KernelPresentation {
    pub presentation: Presentation,
    pub inclusion: Vec<Word>,
}

impl KernelPresentation {
    /// Tietze-simplified presentation; inclusion words follow the surviving generators.
    pub fn simplified(&self) -> KernelPresentation {
        let s = tietze_simplify_tracked(&self.presentation);
        let inclusion = s.kept.iter().map(|&i| self.inclusion[i].clone()).collect();
        KernelPresentation { presentation: s.presentation, inclusion }
    }
}

/// Presentation of `ker phi` on the transversal `{1, t}`, `t` the first
/// generator with `phi(t) = 1`.
///
/// Generators are `s(c, x) = rep(c) x rep(c + phi(x))^-1`, named `{x}{c}`,
/// ordered by coset and then by generator, with the trivial `s(0, t)` left out.
/// Every relator is rewritten once from each coset.
pub fn reidemeister_schreier_index2(p: &Presentation, phi: &GroupHom2) -> Result<KernelPresentation, CoverError> {
    phi.check_relators(p)?;
    let n = p.generator_count();
    let t = (0..n).find(|&g| phi.value(g) == 1).ok_or(CoverError::NotEpimorphism)?;
    let rep = |c: u8| if c == 0 { Word::identity() } else { Word::generator(t) };

    // index of s(c, x) among the kernel generators
    let mut index = vec![[None; 2]; n];
    let mut names = Vec::new();
    let mut inclusion = Vec::new();
    for c in 0..2u8 {
        for (x, slot) in index.iter_mut().enumerate() {
            if c == 0 && x == t {
                continue;
            }
            slot[c as usize] = Some(names.len());
            names.push(format!("{}{c}", p.generator_names()[x]));
            let w = rep(c).mul(&Word::generator(x)).mul(&rep(c ^ phi.value(x)).inverse());
            inclusion.push(w);
        }
    }

    let mut relators = Vec::with_capacity(2 * p.relators().len());
    for start in 0..2u8 {
        for r in p.relators() {
            let mut coset = start;
            let mut letters = Vec::new();
            for l in r.letters() {
                let step = phi.value(l.gen);
                if l.exp > 0 {
                    if let Some(i) = index[l.gen][coset as usize] {
                        letters.push(Letter::pos(i));
                    }
                    coset ^= step;
                } else {
                    coset ^= step;
                    if let Some(i) = index[l.gen][coset as usize] {
                        letters.push(Letter::neg(i));
                    }
                }
            }
            debug_assert_eq!(coset, start, "relator must return to its coset");
            relators.push(Word::raw(letters));
        }
    }
    let presentation = Presentation::new(names, relators)?;
    for w in &inclusion {
        debug_assert_eq!(evaluate_hom2(phi, w), Ok(0));
    }
    Ok(KernelPresentation { presentation, inclusion })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::{abelianization, enumerate_epis_z2, recognize_catalog_group, CatalogGroup};
    use proptest::prelude::*;

    fn pres(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    #[test]
    fn circle_kernel_is_squares() {
        let p = pres("<h | >");
        let k = reidemeister_schreier_index2(&p, &GroupHom2::new([1])).unwrap();
        assert_eq!(k.presentation.to_string(), "<h1 |>");
        assert_eq!(p.display_word(&k.inclusion[0]), "h^2");
    }

    #[test]
    fn product_kernel_counts() {
        let p = pres("<v, h | v^2, v h v^-1 h^-1>");
        let k = reidemeister_schreier_index2(&p, &GroupHom2::new([1, 0])).unwrap();
        assert_eq!(k.presentation.generator_names(), ["h0", "v1", "h1"]);
        assert_eq!(k.presentation.relators().len(), 4);
        let incl: Vec<String> = k.inclusion.iter().map(|w| p.display_word(w)).collect();
        assert_eq!(incl, ["h", "v^2", "v h v^-1"]);
        let s = k.simplified();
        assert_eq!(s.presentation.generator_count(), 1);
        assert_eq!(p.display_word(&s.inclusion[0]), "h");
        assert_eq!(recognize_catalog_group(&s.presentation, None), CatalogGroup::InfCyclic);
    }

    #[test]
    fn connected_sum_kernels() {
        let p = pres("<v, h | v^2, (v h)^2>");
        let k = reidemeister_schreier_index2(&p, &GroupHom2::new([1, 0])).unwrap().simplified();
        assert_eq!(recognize_catalog_group(&k.presentation, None), CatalogGroup::InfCyclic);
        assert_eq!(p.display_word(&k.inclusion[0]), "h");
        for phi in [[0, 1], [1, 1]] {
            let k = reidemeister_schreier_index2(&p, &GroupHom2::new(phi)).unwrap();
            assert_eq!(recognize_catalog_group(&k.presentation, None), CatalogGroup::Z2FreeZ2);
        }
    }

    #[test]
    fn rejects_bad_maps() {
        let p = pres("<v, h | v^2 h^-1>");
        assert!(matches!(reidemeister_schreier_index2(&p, &GroupHom2::new([0, 1])), Err(CoverError::Group(_))));
        assert!(matches!(reidemeister_schreier_index2(&p, &GroupHom2::new([0, 0])), Err(CoverError::NotEpimorphism)));
    }

    fn arb_presentation() -> impl Strategy<Value = Presentation> {
        (1usize..4).prop_flat_map(|n| {
            let letter = (0..n, prop::bool::ANY).prop_map(|(g, s)| if s { Letter::pos(g) } else { Letter::neg(g) });
            prop::collection::vec(prop::collection::vec(letter, 0..7).prop_map(Word::from_letters), 0..4)
                .prop_map(move |rels| Presentation::new((0..n).map(|i| format!("x{i}")).collect(), rels).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn counts_and_inclusions(p in arb_presentation()) {
            for phi in enumerate_epis_z2(&p) {
                let k = reidemeister_schreier_index2(&p, &phi).unwrap();
                prop_assert_eq!(k.presentation.generator_count(), 2 * p.generator_count() - 1);
                prop_assert_eq!(k.presentation.relators().len(), 2 * p.relators().len());
                for w in &k.inclusion {
                    prop_assert_eq!(evaluate_hom2(&phi, w).unwrap(), 0);
                }
                // rational transfer: H1(G; Q) is a quotient of H1(ker; Q)
                let (a, b) = (abelianization(&p), abelianization(&k.presentation));
                prop_assert!(b.rank >= a.rank);
            }
        }
    }
}
