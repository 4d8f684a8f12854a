//! Free bimodules and the free algebras `T_A(M)` they generate.

use std::sync::Arc;

use crate::algebra::{Alphabet, Colour, GenId, Generator, Word};
use crate::error::{Error, Result};

/// The free `A`-bimodule on finitely many generators, over a free algebra `A`.
///
/// `T_A(M)` is the free algebra on the union of both generator sets; the
/// total alphabet lists base generators first, so base words have the same
/// letters in both alphabets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    base: Arc<Alphabet>,
    total: Arc<Alphabet>,
}

impl Bimodule {
    pub fn new(base: Arc<Alphabet>, mgens: Vec<Generator>) -> Result<Self> {
        if let Some(g) = base.gens().iter().find(|g| g.colour != Colour::Base) {
            return Err(Error::Colour(format!(
                "base generator '{}' is module-coloured",
                g.name
            )));
        }
        let mut gens = base.gens().to_vec();
        for g in mgens {
            if base.lookup(&g.name).is_ok() {
                return Err(Error::DuplicateGenerator(g.name));
            }
            gens.push(Generator {
                colour: Colour::Module,
                ..g
            });
        }
        Ok(Bimodule {
            base,
            total: Arc::new(Alphabet::new(gens)?),
        })
    }

    /// Recovers the presentation from an alphabet listing base generators first.
    pub fn from_total(total: Arc<Alphabet>) -> Result<Self> {
        let n = total
            .gens()
            .iter()
            .take_while(|g| g.colour == Colour::Base)
            .count();
        if total.gens()[n..].iter().any(|g| g.colour == Colour::Base) {
            return Err(Error::Colour(
                "base generators must precede module generators".into(),
            ));
        }
        let base = Arc::new(Alphabet::new(total.gens()[..n].to_vec())?);
        Ok(Bimodule { base, total })
    }

    pub fn base(&self) -> &Arc<Alphabet> {
        &self.base
    }

    pub fn total(&self) -> &Arc<Alphabet> {
        &self.total
    }

    pub fn base_ids(&self) -> impl Iterator<Item = GenId> + '_ {
        self.base.ids()
    }

    pub fn module_ids(&self) -> impl Iterator<Item = GenId> + '_ {
        (self.base.len()..self.total.len()).map(|i| GenId(i as u16))
    }

    pub fn module_gens(&self) -> &[Generator] {
        &self.total.gens()[self.base.len()..]
    }

    pub fn is_module(&self, g: GenId) -> bool {
        self.total.colour(g) == Colour::Module
    }

    /// Splits a weight-one word as `p · m · q`.
    pub fn decompose(&self, w: &Word) -> Option<(Word, GenId, Word)> {
        let mut pos = w.0.iter().enumerate().filter(|(_, &g)| self.is_module(g));
        let (i, &m) = pos.next()?;
        if pos.next().is_some() {
            return None;
        }
        Some((w.slice(0..i), m, w.slice(i + 1..w.len())))
    }

    pub fn base_words(&self, max_len: usize) -> Vec<Word> {
        self.base.words_up_to(max_len)
    }

    /// Words with exactly one module letter, of length `1..=max_len`.
    pub fn module_words(&self, max_len: usize) -> Vec<Word> {
        self.total
            .words_up_to(max_len)
            .into_iter()
            .filter(|w| self.total.weight(w) == 1)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposition() {
        let base = Arc::new(Alphabet::base(&[("x", 0)]).unwrap());
        let m = Bimodule::new(base, vec![Generator::module("e", 0)]).unwrap();
        let w = m.total().parse_word("x.e.x.x").unwrap();
        let (p, g, q) = m.decompose(&w).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(m.total().name(g), "e");
        assert_eq!(q.len(), 2);
        assert_eq!(m.module_words(2).len(), 3);
    }

    #[test]
    fn names_disjoint() {
        let base = Arc::new(Alphabet::base(&[("x", 0)]).unwrap());
        assert!(Bimodule::new(base, vec![Generator::module("x", 1)]).is_err());
    }
}
