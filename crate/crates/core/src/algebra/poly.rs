//! Noncommutative polynomials over a fixed alphabet.

use std::fmt;
use std::sync::Arc;

use super::combination::{render_terms, Combination};
use super::rational::Rational;
use super::word::{Alphabet, Word};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct NCPoly {
    alphabet: Arc<Alphabet>,
    terms: Combination<Word>,
}

impl NCPoly {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        NCPoly {
            alphabet: alphabet.clone(),
            terms: Combination::zero(),
        }
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::word(alphabet, Word::unit())
    }

    pub fn word(alphabet: &Arc<Alphabet>, w: Word) -> Self {
        Self::from_terms(alphabet, Combination::single(w, Rational::one()))
    }

    pub fn from_terms(alphabet: &Arc<Alphabet>, terms: Combination<Word>) -> Self {
        NCPoly {
            alphabet: alphabet.clone(),
            terms,
        }
    }

    /// Parses `"x.y"`-style words into a single-term polynomial.
    pub fn parse_word(alphabet: &Arc<Alphabet>, s: &str) -> Result<Self> {
        Ok(Self::word(alphabet, alphabet.parse_word(s)?))
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> &Combination<Word> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// The common degree of all terms, `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(|w| self.alphabet.word_degree(w));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn add(&self, other: &NCPoly) -> Result<NCPoly> {
        self.same_algebra(other)?;
        Ok(NCPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.plus(&other.terms),
        })
    }

    pub fn scale(&self, c: Rational) -> NCPoly {
        NCPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.scale(c),
        }
    }

    fn same_algebra(&self, other: &NCPoly) -> Result<()> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::IncompatibleAlgebras)
        }
    }

    pub fn render(&self) -> String {
        render_terms(
            self.terms
                .iter()
                .map(|(w, c)| (self.alphabet.render(w), *c)),
        )
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Concatenation product, extended bilinearly.
pub fn poly_mul(a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
    a.same_algebra(b)?;
    let mut terms = Combination::zero();
    for (u, c) in a.terms.iter() {
        for (v, d) in b.terms.iter() {
            terms.add_term(u.concat(v), *c * *d);
        }
    }
    Ok(NCPoly {
        alphabet: a.alphabet.clone(),
        terms,
    })
}
