use std::fmt;
use std::str::FromStr;

use super::word::{Letter, Word};
use super::GroupError;

/// Presentations with more generators than this are rejected by the parser.
pub const MAX_GENERATORS: usize = 26;

/// A finitely presented group `<generators | relators>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Builds a presentation, cyclically reducing every relator.
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self, GroupError> {
        for (i, name) in generator_names.iter().enumerate() {
            if generator_names[..i].contains(name) {
                return Err(GroupError::DuplicateGenerator(name.clone()));
            }
        }
        let n = generator_names.len();
        for r in &relators {
            if let Some(g) = r.max_generator() {
                if g >= n {
                    return Err(GroupError::GeneratorOutOfRange { gen: g, count: n });
                }
            }
        }
        let relators = relators.iter().map(Word::cyclically_reduced).collect();
        Ok(Self { generator_names, relators })
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|g| g == name)
    }

    /// Rows are relators, columns are generators, entries are signed exponent sums.
    pub fn relator_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.generator_count();
        self.relators.iter().map(|r| r.exponent_sums(n)).collect()
    }

    /// Parses a word over this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<Word, GroupError> {
        let mut p = Parser::new(text);
        let w = p.word(&mut |name| self.generator_index(name))?;
        p.skip_ws();
        if let Some(c) = p.peek() {
            return Err(p.error(format!("unexpected '{c}' after word")));
        }
        Ok(w)
    }

    pub fn display_word(&self, w: &Word) -> String {
        w.display(&self.generator_names).to_string()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} |", self.generator_names.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{}", r.display(&self.generator_names))?;
        }
        write!(f, ">")
    }
}

impl FromStr for Presentation {
    type Err = GroupError;

    /// Syntax: `<v, h | v^2, v h v^-1 h^-1>`; parenthesised subwords may carry exponents.
    fn from_str(s: &str) -> Result<Self, GroupError> {
        let mut p = Parser::new(s);
        p.expect('<')?;
        let mut names = Vec::new();
        p.skip_ws();
        if p.peek() != Some('|') {
            loop {
                let col = p.column();
                let name = p.ident()?;
                if names.contains(&name) {
                    return Err(GroupError::Parse { column: col, message: format!("duplicate generator '{name}'") });
                }
                names.push(name);
                p.skip_ws();
                if p.peek() == Some(',') {
                    p.bump();
                } else {
                    break;
                }
            }
        }
        if names.len() > MAX_GENERATORS {
            return Err(p.error(format!("more than {MAX_GENERATORS} generators")));
        }
        p.expect('|')?;
        let mut relators = Vec::new();
        p.skip_ws();
        if p.peek() != Some('>') {
            loop {
                let w = p.word(&mut |name| names.iter().position(|g| g == name))?;
                relators.push(w);
                p.skip_ws();
                if p.peek() == Some(',') {
                    p.bump();
                } else {
                    break;
                }
            }
        }
        p.expect('>')?;
        p.skip_ws();
        if let Some(c) = p.peek() {
            return Err(p.error(format!("trailing input starting at '{c}'")));
        }
        Presentation::new(names, relators)
    }
}

/// Hand-written recursive-descent parser for words and presentations.
pub(crate) struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Self { chars: src.chars().collect(), pos: 0, _src: src }
    }

    /// 1-based column of the next character.
    pub(crate) fn column(&self) -> usize {
        self.pos + 1
    }

    pub(crate) fn error(&self, message: String) -> GroupError {
        GroupError::Parse { column: self.column(), message }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), GroupError> {
        self.skip_ws();
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(self.error(format!("expected '{c}', found '{x}'"))),
            None => Err(self.error(format!("expected '{c}', found end of input"))),
        }
    }

    pub(crate) fn at_ident_start(&self) -> bool {
        self.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
    }

    pub(crate) fn ident(&mut self) -> Result<String, GroupError> {
        self.skip_ws();
        if !self.at_ident_start() {
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected identifier, found '{c}'")),
                None => self.error("expected identifier, found end of input".into()),
            });
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    pub(crate) fn integer(&mut self) -> Result<i64, GroupError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') || self.peek() == Some('+') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse::<i64>()
            .map_err(|_| GroupError::Parse { column: start + 1, message: format!("expected integer, found '{text}'") })
    }

    /// word := factor*, factor := (ident | '1' | '(' word ')') ('^' integer)?
    pub(crate) fn word(&mut self, lookup: &mut dyn FnMut(&str) -> Option<usize>) -> Result<Word, GroupError> {
        let mut letters: Vec<Letter> = Vec::new();
        loop {
            self.skip_ws();
            let base = match self.peek() {
                Some('(') => {
                    self.bump();
                    let inner = self.word(lookup)?;
                    self.expect(')')?;
                    inner
                }
                Some('1') => {
                    self.bump();
                    Word::identity()
                }
                Some('*') if !letters.is_empty() => {
                    self.bump();
                    continue;
                }
                _ if self.at_ident_start() => {
                    let col = self.column();
                    let name = self.ident()?;
                    let g = lookup(&name)
                        .ok_or(GroupError::Parse { column: col, message: format!("unknown generator '{name}'") })?;
                    Word::generator(g)
                }
                _ => break,
            };
            self.skip_ws();
            let factor = if self.peek() == Some('^') {
                self.bump();
                let e = self.integer()?;
                base.pow(e)
            } else {
                base
            };
            letters.extend_from_slice(factor.letters());
        }
        Ok(Word::from_letters(letters))
    }
}
