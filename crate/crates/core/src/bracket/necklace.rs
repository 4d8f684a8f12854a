//! The bracket induced on cyclic words.

use std::time::Instant;

use super::checks::{render_input, render_poly_chain, triples};
use super::engine::{leibniz_residual, Engine};
use super::spec::BracketSpec;
use crate::algebra::cells::{Cell, Chain};
use crate::algebra::{cyclic_normalize, Alphabet, Combination, Rational, Word};
use crate::error::{Error, Result};
use crate::report::{AxiomEntry, CheckReport, Violation};

/// Normal form of a word in the cyclic quotient; the unit stands for its own class.
pub fn cyclic_class(alphabet: &Alphabet, w: &Word) -> (Word, Rational) {
    if w.is_unit() {
        return (Word::unit(), Rational::one());
    }
    cyclic_normalize(alphabet, w).expect("nonempty word")
}

/// Projects a combination of words onto cyclic normal forms.
pub fn project_cyclic(alphabet: &Alphabet, p: &Combination<Word>) -> Combination<Word> {
    let mut out = Combination::zero();
    for (w, c) in p.iter() {
        let (v, s) = cyclic_class(alphabet, w);
        out.add_term(v, *c * s);
    }
    out
}

impl<'s> Engine<'s> {
    pub fn necklace_words(&self, a: &Word, b: &Word) -> Combination<Word> {
        project_cyclic(self.spec().alphabet(), &self.leibniz_words(a, b))
    }

    /// `{ā, b̄}` on rows `[Σ, a, Σ, b] -> [Σ, w]` with `w` in normal form.
    pub fn g_necklace(&self) -> impl Fn(&[Cell]) -> Chain + '_ {
        move |c: &[Cell]| {
            let r = self.spec().shift();
            self.necklace_words(c[1].word(), c[3].word())
                .map_keys(|w| vec![Cell::Shift(r), Cell::Word(w.clone())])
        }
    }
}

/// The necklace bracket of two nonempty words, keyed by cyclic normal forms.
pub fn necklace_bracket(spec: &BracketSpec, w1: &Word, w2: &Word) -> Result<Combination<Word>> {
    if w1.is_unit() || w2.is_unit() {
        return Err(Error::UnitHasNoCyclicClass);
    }
    Ok(Engine::new(spec).necklace_words(w1, w2))
}

/// Normal forms of the nonzero cyclic classes of words of length `1..=max_len`.
pub fn cyclic_classes(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    let mut reps: Vec<Word> = alphabet
        .words_up_to(max_len)
        .iter()
        .filter_map(|w| {
            let (v, s) = cyclic_class(alphabet, w);
            (!s.is_zero() && v == *w).then_some(v)
        })
        .collect();
    reps.dedup();
    reps
}

fn rotations(w: &Word) -> Vec<Word> {
    (1..w.len())
        .map(|k| {
            let mut v = w.0.clone();
            v.rotate_right(k);
            Word(v)
        })
        .collect()
}

/// Jacobi identity (in Leibniz form) on cyclic classes, and independence of
/// the chosen representatives.
pub fn check_necklace(spec: &BracketSpec, max_len: usize) -> CheckReport {
    let start = Instant::now();
    let engine = Engine::new(spec);
    let alphabet = spec.alphabet();
    let reps = cyclic_classes(alphabet, max_len);
    let cells = engine.cells();
    let r = spec.shift();
    let g = engine.g_necklace();
    let jacobi = AxiomEntry::run("necklace-jacobi", &triples(reps.len()), |&(i, j, k)| {
        let (a, b, c) = (&reps[i], &reps[j], &reps[k]);
        let res = leibniz_residual(&cells, r, a, b, c, &g);
        (!res.is_zero()).then(|| Violation {
            input: render_input(alphabet, &[a, b, c]),
            residual: render_poly_chain(alphabet, &res),
        })
    });
    let pairs: Vec<(usize, usize)> = (0..reps.len())
        .flat_map(|i| (0..reps.len()).map(move |j| (i, j)))
        .collect();
    let well_defined = AxiomEntry::run("necklace-well-defined", &pairs, |&(i, j)| {
        let (a, b) = (&reps[i], &reps[j]);
        let base = engine.necklace_words(a, b);
        let left = rotations(a).into_iter().map(|ra| {
            let (_, s) = cyclic_class(alphabet, &ra);
            (
                ra.clone(),
                b.clone(),
                engine.necklace_words(&ra, b).minus(&base.scale(s)),
            )
        });
        let right = rotations(b).into_iter().map(|rb| {
            let (_, s) = cyclic_class(alphabet, &rb);
            (
                a.clone(),
                rb.clone(),
                engine.necklace_words(a, &rb).minus(&base.scale(s)),
            )
        });
        left.chain(right)
            .find(|t| !t.2.is_zero())
            .map(|(x, y, res)| Violation {
                input: render_input(alphabet, &[&x, &y]),
                residual: crate::algebra::combination::render_words(alphabet, &res),
            })
    });
    CheckReport::with_entries("necklace", max_len, vec![jacobi, well_defined]).timed(start)
}
