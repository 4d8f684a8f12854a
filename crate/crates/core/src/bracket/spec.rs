//! Generator tables of shifted double brackets.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::algebra::cells::{chain_to_tensor, tensor_to_chain, Cell, Cells};
use crate::algebra::{render_tensor, Alphabet, Colour, GenId, Tensor2, Word};
use crate::error::{Error, Result};

/// A double bracket of degree `shift` given on pairs of generators.
///
/// Only one orientation of each unordered pair is stored: `(module, base)`
/// for mixed pairs and `(i, j)` with `i <= j` otherwise. The other orientation
/// is derived by antisymmetry. A table value `u'⊗u''` for `(g1, g2)` has
/// degree `|g1| + |g2| + shift`.
#[derive(Clone, Debug)]
pub struct BracketSpec {
    alphabet: Arc<Alphabet>,
    shift: i64,
    table: BTreeMap<(GenId, GenId), Tensor2>,
    full: HashMap<(GenId, GenId), Tensor2>,
}

impl PartialEq for BracketSpec {
    fn eq(&self, other: &Self) -> bool {
        self.shift == other.shift && self.alphabet == other.alphabet && self.table == other.table
    }
}

impl Eq for BracketSpec {}

/// Whether `(i, j)` is the stored orientation of its unordered pair.
pub fn is_canonical(alphabet: &Alphabet, i: GenId, j: GenId) -> bool {
    match (alphabet.colour(i), alphabet.colour(j)) {
        (Colour::Module, Colour::Base) => true,
        (Colour::Base, Colour::Module) => false,
        _ => i <= j,
    }
}

/// Given `f(a, b) = value`, returns `f(b, a)` as prescribed by antisymmetry,
/// evaluated as `-Στ ∘ f ∘ τ` on the row `[Σ, b, Σ, a]`.
pub fn swap_by_antisymmetry(
    alphabet: &Alphabet,
    shift: i64,
    a: &Word,
    b: &Word,
    value: &Tensor2,
) -> Tensor2 {
    let cells = Cells::new(alphabet);
    let row = Cells::row(vec![
        Cell::Shift(shift),
        Cell::Word(b.clone()),
        Cell::Shift(shift),
        Cell::Word(a.clone()),
    ]);
    let ch = cells.tau(&row, 0, 2, 2);
    let ch = cells.apply(&ch, 0, 4, |_| tensor_to_chain(shift, value));
    let ch = cells.tau(&ch, 1, 1, 1);
    chain_to_tensor::<2>(&ch).neg()
}

impl BracketSpec {
    pub fn zero(alphabet: Arc<Alphabet>, shift: i64) -> Self {
        BracketSpec {
            alphabet,
            shift,
            table: BTreeMap::new(),
            full: HashMap::new(),
        }
    }

    /// Validates and canonicalizes a table.
    ///
    /// Pairs given in both orientations must agree up to antisymmetry; a pair
    /// given only in the non-stored orientation is converted.
    pub fn new(
        alphabet: Arc<Alphabet>,
        shift: i64,
        entries: impl IntoIterator<Item = ((GenId, GenId), Tensor2)>,
    ) -> Result<Self> {
        let mut canon: BTreeMap<(GenId, GenId), Tensor2> = BTreeMap::new();
        let mut other: BTreeMap<(GenId, GenId), Tensor2> = BTreeMap::new();
        for ((i, j), v) in entries {
            validate_entry(&alphabet, shift, i, j, &v)?;
            let target = if is_canonical(&alphabet, i, j) {
                &mut canon
            } else {
                &mut other
            };
            if target.insert((i, j), v).is_some() {
                return Err(Error::DuplicateEntry(pair_name(&alphabet, i, j)));
            }
        }
        for ((j, i), v) in other {
            let (wi, wj) = (Word::letter(i), Word::letter(j));
            let converted = swap_by_antisymmetry(&alphabet, shift, &wj, &wi, &v);
            match canon.get(&(i, j)) {
                Some(given) if *given != converted => {
                    return Err(Error::Antisymmetry(pair_name(&alphabet, i, j)));
                }
                Some(_) => {}
                None => {
                    canon.insert((i, j), converted);
                }
            }
        }
        canon.retain(|_, v| !v.is_zero());
        let mut full = HashMap::new();
        for (&(i, j), v) in &canon {
            full.insert((i, j), v.clone());
            if i != j {
                let (wi, wj) = (Word::letter(i), Word::letter(j));
                full.insert((j, i), swap_by_antisymmetry(&alphabet, shift, &wi, &wj, v));
            }
        }
        Ok(BracketSpec {
            alphabet,
            shift,
            table: canon,
            full,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// The stored orientations, nonzero entries only.
    pub fn table(&self) -> &BTreeMap<(GenId, GenId), Tensor2> {
        &self.table
    }

    /// `{{g1, g2}}` for generators, either orientation.
    pub fn value(&self, i: GenId, j: GenId) -> Option<&Tensor2> {
        self.full.get(&(i, j))
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    pub fn render_entry(&self, i: GenId, j: GenId) -> String {
        match self.value(i, j) {
            Some(v) => render_tensor(&self.alphabet, v),
            None => "0".to_string(),
        }
    }
}

pub(crate) fn pair_name(alphabet: &Alphabet, i: GenId, j: GenId) -> String {
    format!("[{},{}]", alphabet.name(i), alphabet.name(j))
}

fn validate_entry(alphabet: &Alphabet, shift: i64, i: GenId, j: GenId, v: &Tensor2) -> Result<()> {
    for g in [i, j] {
        if !alphabet.contains(g) {
            return Err(Error::UnknownGenerator(format!("#{}", g.0)));
        }
    }
    let expected = alphabet.degree(i) + alphabet.degree(j) + shift;
    for legs in v.keys() {
        for w in legs {
            if let Some(g) = w.0.iter().find(|g| !alphabet.contains(**g)) {
                return Err(Error::UnknownGenerator(format!("#{}", g.0)));
            }
        }
        let found = alphabet.word_degree(&legs[0]) + alphabet.word_degree(&legs[1]);
        if found != expected {
            return Err(Error::Degree {
                pair: pair_name(alphabet, i, j),
                expected,
                found,
            });
        }
    }
    Ok(())
}
