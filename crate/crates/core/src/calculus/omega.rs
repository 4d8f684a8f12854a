//! Noncommutative 1-forms of a free algebra.

use std::sync::Arc;

use crate::algebra::{koszul_sign, Alphabet, Colour, Combination, GenId, Generator, NCPoly, Word};
use crate::error::{Error, Result};
use crate::free::Bimodule;

/// `Ω_A` for free `A`: the free bimodule on one `dx` per generator `x`,
/// with `|dx| = |x|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaPresentation {
    bimodule: Arc<Bimodule>,
}

impl OmegaPresentation {
    pub fn new(base: &Arc<Alphabet>) -> Result<Self> {
        if let Some(g) = base.gens().iter().find(|g| g.colour != Colour::Base) {
            return Err(Error::NonFreeBase(g.name.clone()));
        }
        let forms = base
            .gens()
            .iter()
            .map(|g| Generator::module(&format!("d{}", g.name), g.degree))
            .collect();
        Ok(OmegaPresentation {
            bimodule: Arc::new(Bimodule::new(base.clone(), forms)?),
        })
    }

    pub fn bimodule(&self) -> &Arc<Bimodule> {
        &self.bimodule
    }

    pub fn base(&self) -> &Arc<Alphabet> {
        self.bimodule.base()
    }

    pub fn total(&self) -> &Arc<Alphabet> {
        self.bimodule.total()
    }

    /// `dx` for the base generator `x`.
    pub fn d_gen(&self, x: GenId) -> GenId {
        GenId((self.base().len() + x.index()) as u16)
    }

    /// The base generator `x` of `dx`.
    pub fn x_of(&self, dx: GenId) -> GenId {
        GenId((dx.index() - self.base().len()) as u16)
    }

    /// `d` on a base word, as a combination of weight-one words.
    pub fn d_word(&self, w: &Word) -> Combination<Word> {
        let base = self.base();
        let mut out = Combination::zero();
        for (j, &x) in w.letters().iter().enumerate() {
            let prefix = base.word_degree(&w.slice(0..j));
            let s = koszul_sign(&[0], &[prefix]);
            let mut letters = w.0.clone();
            letters[j] = self.d_gen(x);
            out.add_term(Word(letters), s.to_rational());
        }
        out
    }
}

/// The universal derivation `d: A → Ω_A`, landing in `T_A(Ω_A)`.
pub fn universal_derivation(p: &OmegaPresentation, a: &NCPoly) -> Result<NCPoly> {
    if a.alphabet().as_ref() != p.base().as_ref() {
        return Err(Error::IncompatibleAlgebras);
    }
    let mut out = Combination::zero();
    for (w, c) in a.terms().iter() {
        out.add_scaled(&p.d_word(w), *c);
    }
    Ok(NCPoly::from_terms(p.total(), out))
}
