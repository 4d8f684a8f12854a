//! Generators, alphabets and words.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a generator inside its [`Alphabet`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GenId(pub u16);

impl GenId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Colour {
    Base,
    Module,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Generator {
    pub name: String,
    pub degree: i64,
    pub colour: Colour,
}

impl Generator {
    pub fn base(name: &str, degree: i64) -> Self {
        Generator {
            name: name.to_string(),
            degree,
            colour: Colour::Base,
        }
    }

    pub fn module(name: &str, degree: i64) -> Self {
        Generator {
            name: name.to_string(),
            degree,
            colour: Colour::Module,
        }
    }
}

/// An ordered, named set of graded generators.
///
/// Declaration order fixes the word order used for canonical forms.
#[derive(Clone, Debug)]
pub struct Alphabet {
    gens: Vec<Generator>,
    index: HashMap<String, GenId>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    pub fn new(gens: Vec<Generator>) -> Result<Self> {
        if gens.len() > u16::MAX as usize {
            return Err(Error::Invalid("too many generators".into()));
        }
        let mut index = HashMap::new();
        for (i, g) in gens.iter().enumerate() {
            if index.insert(g.name.clone(), GenId(i as u16)).is_some() {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Alphabet { gens, index })
    }

    /// Convenience constructor for an alphabet of base generators.
    pub fn base(gens: &[(&str, i64)]) -> Result<Self> {
        Alphabet::new(gens.iter().map(|&(n, d)| Generator::base(n, d)).collect())
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn ids(&self) -> impl Iterator<Item = GenId> + '_ {
        (0..self.gens.len()).map(|i| GenId(i as u16))
    }

    pub fn gen(&self, id: GenId) -> &Generator {
        &self.gens[id.index()]
    }

    pub fn degree(&self, id: GenId) -> i64 {
        self.gens[id.index()].degree
    }

    pub fn colour(&self, id: GenId) -> Colour {
        self.gens[id.index()].colour
    }

    pub fn name(&self, id: GenId) -> &str {
        &self.gens[id.index()].name
    }

    pub fn lookup(&self, name: &str) -> Result<GenId> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn contains(&self, id: GenId) -> bool {
        id.index() < self.gens.len()
    }

    pub fn word_degree(&self, w: &Word) -> i64 {
        w.0.iter().map(|&g| self.degree(g)).sum()
    }

    /// Number of module-coloured letters.
    pub fn weight(&self, w: &Word) -> usize {
        w.0.iter()
            .filter(|&&g| self.colour(g) == Colour::Module)
            .count()
    }

    pub fn is_base_word(&self, w: &Word) -> bool {
        self.weight(w) == 0
    }

    pub fn render(&self, w: &Word) -> String {
        if w.is_unit() {
            return "1".to_string();
        }
        let names: Vec<&str> = w.0.iter().map(|&g| self.name(g)).collect();
        names.join(".")
    }

    /// Parses `"1"` or dot-separated generator names.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::unit());
        }
        s.split('.')
            .map(|part| self.lookup(part.trim()))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// All words of length `1..=max_len`, ordered by length then lexicographically.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        words_over(&self.ids().collect::<Vec<_>>(), max_len)
    }
}

/// All words of length `1..=max_len` over `letters`, by length then lexicographic.
pub fn words_over(letters: &[GenId], max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer = vec![Word::unit()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for w in &layer {
            for &g in letters {
                let mut v = w.0.clone();
                v.push(g);
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// A monomial; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<GenId>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: GenId) -> Self {
        Word(vec![g])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[GenId] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn split_at(&self, i: usize) -> (Word, Word) {
        (Word(self.0[..i].to_vec()), Word(self.0[i..].to_vec()))
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|g| format!("g{}", g.0)).collect();
        write!(f, "{}", parts.join("."))
    }
}
