//! Associative products on a graded vector space and their linear brackets.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use super::bimodule::Bimodule;
use super::dlr::{dlr_to_linear, DlrData};
use crate::algebra::{render_tensor, Alphabet, Combination, GenId, Tensor2, Word};
use crate::bracket::checks::render_input;
use crate::bracket::spec::{pair_name, swap_by_antisymmetry};
use crate::bracket::Engine;
use crate::error::{Error, Result};
use crate::report::{AxiomEntry, CheckReport, Violation};

/// A bilinear product `f: M⊗M -> M` on generators, of degree `shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocProduct {
    alphabet: Arc<Alphabet>,
    shift: i64,
    table: BTreeMap<(GenId, GenId), Combination<GenId>>,
}

impl AssocProduct {
    pub fn new(
        alphabet: Arc<Alphabet>,
        shift: i64,
        entries: impl IntoIterator<Item = ((GenId, GenId), Combination<GenId>)>,
    ) -> Result<Self> {
        let mut table = BTreeMap::new();
        for ((i, j), v) in entries {
            let expected = alphabet.degree(i) + alphabet.degree(j) + shift;
            for &k in v.keys() {
                if alphabet.degree(k) != expected {
                    return Err(Error::Degree {
                        pair: pair_name(&alphabet, i, j),
                        expected,
                        found: alphabet.degree(k),
                    });
                }
            }
            if table.insert((i, j), v).is_some() {
                return Err(Error::DuplicateEntry(pair_name(&alphabet, i, j)));
            }
        }
        table.retain(|_, v: &mut Combination<GenId>| !v.is_zero());
        Ok(AssocProduct {
            alphabet,
            shift,
            table,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn product(&self, i: GenId, j: GenId) -> Combination<GenId> {
        self.table.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// The product extended bilinearly.
    pub fn apply(&self, x: &Combination<GenId>, y: &Combination<GenId>) -> Combination<GenId> {
        let mut out = Combination::zero();
        for (&i, c) in x.iter() {
            for (&j, d) in y.iter() {
                out.add_scaled(&self.product(i, j), *c * *d);
            }
        }
        out
    }

    /// The linear bracket `{{m, m'}} = f(m, m')⊗1 + (antisymmetric partner)`
    /// on `T_𝟙(M)`.
    pub fn to_dlr(&self) -> DlrData {
        let bimodule = Arc::new(
            Bimodule::new(
                Arc::new(Alphabet::new(vec![]).unwrap()),
                self.alphabet.gens().to_vec(),
            )
            .expect("module generators only"),
        );
        let total = bimodule.total().clone();
        let left = |i: GenId, j: GenId| -> Tensor2 {
            self.product(i, j)
                .map_keys(|&k| [Word::letter(k), Word::unit()])
        };
        let mut entries = Vec::new();
        for i in self.alphabet.ids() {
            for j in self.alphabet.ids().filter(|&j| j >= i) {
                let l = left(i, j);
                let r = swap_by_antisymmetry(
                    &total,
                    self.shift,
                    &Word::letter(j),
                    &Word::letter(i),
                    &left(j, i),
                );
                entries.push(((i, j), l.plus(&r)));
            }
        }
        DlrData::new(bimodule, self.shift, [], entries).expect("product data is well formed")
    }
}

/// Checks associativity through the induced linear bracket: its double
/// jacobiator on every triple of generators.
pub fn assoc_product_check(f: &AssocProduct) -> CheckReport {
    let start = Instant::now();
    let spec = dlr_to_linear(&f.to_dlr());
    let engine = Engine::new(&spec);
    let alphabet = spec.alphabet();
    let ids: Vec<GenId> = alphabet.ids().collect();
    let cases = crate::bracket::checks::triples(ids.len());
    let entry = AxiomEntry::run("associativity", &cases, |&(i, j, k)| {
        let ws = [ids[i], ids[j], ids[k]].map(Word::letter);
        let res = engine.jacobiator_words(&ws[0], &ws[1], &ws[2]);
        (!res.is_zero()).then(|| Violation {
            input: render_input(alphabet, &[&ws[0], &ws[1], &ws[2]]),
            residual: render_tensor(alphabet, &res),
        })
    });
    CheckReport::with_entries("associativity", 1, vec![entry]).timed(start)
}
