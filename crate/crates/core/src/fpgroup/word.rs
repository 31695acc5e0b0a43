//! Words in a free group on indexed generators.

use std::fmt;

/// A generator raised to the power `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub exp: i8,
}

impl Letter {
    pub fn new(gen: usize, exp: i8) -> Self {
        assert!(exp == 1 || exp == -1, "letter exponent must be +1 or -1, got {exp}");
        Self { gen, exp }
    }

    pub fn pos(gen: usize) -> Self {
        Self { gen, exp: 1 }
    }

    pub fn neg(gen: usize) -> Self {
        Self { gen, exp: -1 }
    }

    pub fn inverse(self) -> Self {
        Self { gen: self.gen, exp: -self.exp }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.exp == -other.exp
    }
}

/// A word in the free group. Constructors other than [`Word::raw`] return
/// freely reduced words.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Freely reduces a word with a single left-to-right stack pass.
pub fn free_reduce(w: &Word) -> Word {
    Word { letters: reduce_letters(w.letters.iter().copied()) }
}

fn reduce_letters(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

impl Word {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds a word without reducing it.
    pub fn raw(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Self { letters: reduce_letters(letters) }
    }

    pub fn generator(gen: usize) -> Self {
        Self { letters: vec![Letter::pos(gen)] }
    }

    /// `gen^exp` for any integer exponent.
    pub fn power_of(gen: usize, exp: i64) -> Self {
        let l = if exp >= 0 { Letter::pos(gen) } else { Letter::neg(gen) };
        Self { letters: vec![l; exp.unsigned_abs() as usize] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| !p[0].cancels(p[1]))
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn mul(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn pow(&self, exp: i64) -> Word {
        let base = if exp >= 0 { self.clone() } else { self.inverse() };
        let mut out = Word::identity();
        for _ in 0..exp.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Free and cyclic reduction.
    pub fn cyclically_reduced(&self) -> Word {
        let mut letters = reduce_letters(self.letters.iter().copied());
        while letters.len() >= 2 && letters[0].cancels(letters[letters.len() - 1]) {
            letters.pop();
            letters.remove(0);
        }
        Word { letters }
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    pub fn occurrences(&self, gen: usize) -> usize {
        self.letters.iter().filter(|l| l.gen == gen).count()
    }

    /// Signed exponent sum of each generator, for `n` generators.
    pub fn exponent_sums(&self, n: usize) -> Vec<i64> {
        let mut sums = vec![0i64; n];
        for l in &self.letters {
            sums[l.gen] += l.exp as i64;
        }
        sums
    }

    /// Replaces every generator `g` by `images[g]`, reducing the result.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for l in &self.letters {
            let img = &images[l.gen];
            if l.exp > 0 {
                out.extend(img.letters.iter().copied());
            } else {
                out.extend(img.letters.iter().rev().map(|x| x.inverse()));
            }
        }
        Word::from_letters(out)
    }

    /// Renumbers generators through `map`; entries of `None` must not occur.
    pub fn reindex(&self, map: &[Option<usize>]) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .map(|l| Letter { gen: map[l.gen].expect("generator was eliminated"), exp: l.exp })
                .collect(),
        }
    }

    /// Smallest word among all cyclic rotations of `self` and of its inverse.
    /// Two cyclically reduced relators with the same key define the same normal closure.
    pub fn cyclic_key(&self) -> Word {
        let base = self.cyclically_reduced();
        let inv = base.inverse();
        let n = base.len();
        let mut best = base.clone();
        for w in [&base, &inv] {
            for k in 0..n {
                let rot: Vec<Letter> = w.letters[k..].iter().chain(w.letters[..k].iter()).copied().collect();
                if rot < best.letters {
                    best = Word { letters: rot };
                }
            }
        }
        best
    }

    /// Formats the word with generator names; exponents are collapsed (`v^2`).
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        let letters = self.word.letters();
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            let exp = (j - i) as i64 * letters[i].exp as i64;
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let name = self.names.get(letters[i].gen).map(String::as_str).unwrap_or("?");
            if exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
            i = j;
        }
        Ok(())
    }
}
