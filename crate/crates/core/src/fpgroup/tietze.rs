//! Heuristic Tietze simplification.
//!
//! Moves used: drop empty relators, free and cyclic reduction, deduplication
//! of relators up to cyclic rotation and inversion, and elimination of a
//! generator that occurs exactly once in some relator.

use std::collections::HashSet;

use super::presentation::Presentation;
use super::word::Word;

/// Simplified presentation plus, for each surviving generator, its index in the input.
#[derive(Clone, Debug)]
pub struct Simplified {
    pub presentation: Presentation,
    pub kept: Vec<usize>,
}

pub fn tietze_simplify(p: &Presentation) -> Presentation {
    tietze_simplify_tracked(p).presentation
}

pub fn tietze_simplify_tracked(p: &Presentation) -> Simplified {
    let n = p.generator_count();
    let mut alive = vec![true; n];
    let mut relators: Vec<Word> = p.relators().to_vec();

    loop {
        relators = tidy(&relators);
        match find_elimination(&relators) {
            Some((ri, gen)) => {
                let image = solve_for(&relators[ri], gen);
                let mut images: Vec<Word> = (0..n).map(Word::generator).collect();
                images[gen] = image;
                relators.remove(ri);
                relators = relators.iter().map(|r| r.substitute(&images)).collect();
                alive[gen] = false;
            }
            None => break,
        }
    }

    let kept: Vec<usize> = (0..n).filter(|&g| alive[g]).collect();
    let mut map = vec![None; n];
    for (new, &old) in kept.iter().enumerate() {
        map[old] = Some(new);
    }
    let names = kept.iter().map(|&g| p.generator_names()[g].clone()).collect();
    let relators = relators.iter().map(|r| r.reindex(&map)).collect();
    let presentation = Presentation::new(names, relators).expect("renumbered generators are in range");
    Simplified { presentation, kept }
}

fn tidy(relators: &[Word]) -> Vec<Word> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in relators {
        let r = r.cyclically_reduced();
        if r.is_empty() {
            continue;
        }
        if seen.insert(r.cyclic_key()) {
            out.push(r);
        }
    }
    out
}

/// Shortest relator first (ties by position); within it, the highest-index
/// generator occurring exactly once.
fn find_elimination(relators: &[Word]) -> Option<(usize, usize)> {
    let mut order: Vec<usize> = (0..relators.len()).collect();
    order.sort_by_key(|&i| (relators[i].len(), i));
    for i in order {
        let r = &relators[i];
        let mut gens: Vec<usize> = r.letters().iter().map(|l| l.gen).collect();
        gens.sort_unstable();
        gens.dedup();
        if let Some(&g) = gens.iter().rev().find(|&&g| r.occurrences(g) == 1) {
            return Some((i, g));
        }
    }
    None
}

/// Given a relator `u g^e w` with a single occurrence of `g`, returns the word `g` equals.
fn solve_for(relator: &Word, gen: usize) -> Word {
    let letters = relator.letters();
    let pos = letters.iter().position(|l| l.gen == gen).expect("generator occurs in relator");
    // rotate to g^e s; then g^e = s^-1
    let rest = Word::from_letters(letters[pos + 1..].iter().chain(&letters[..pos]).copied());
    if letters[pos].exp > 0 {
        rest.inverse()
    } else {
        rest
    }
}
