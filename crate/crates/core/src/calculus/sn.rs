//! The Schouten-Nijenhuis double bracket on `T_A(Der(A))`.
//!
//! `Der(A)` is realized for free `A` as the free bimodule on one `Dx` per
//! generator, with `Dx(y) = δ 1⊗1`. The bracket of two generators is read
//! off from the composites
//!
//! ```text
//! Φ(δ, Δ) = (ev⊗1)(δ ⊗ ev(Δ)) - (1⊗ev)(Δ ⊗ ev(δ))   (twisted)
//! Ψ(δ, Δ) = (1⊗ev)(δ ⊗ ev(Δ)) - (ev⊗1)(Δ ⊗ ev(δ))   (twisted)
//! ```
//!
//! evaluated on every generator, then reassembled into `Der⊗A ⊕ A⊗Der`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::cells::{Cell, Cells, Chain};
use crate::algebra::{koszul_sign, Alphabet, Colour, GenId, Generator, Tensor2, Tensor3, Word};
use crate::bracket::BracketSpec;
use crate::error::{Error, Result};
use crate::free::Bimodule;

pub struct SN {
    bimodule: Arc<Bimodule>,
    shift: i64,
    spec: BracketSpec,
}

impl SN {
    pub fn new(base: &Arc<Alphabet>, shift: i64) -> Result<Self> {
        if let Some(g) = base.gens().iter().find(|g| g.colour != Colour::Base) {
            return Err(Error::NonFreeBase(g.name.clone()));
        }
        let ders = base
            .gens()
            .iter()
            .map(|g| Generator::module(&format!("D{}", g.name), -g.degree - shift))
            .collect();
        let bimodule = Arc::new(Bimodule::new(base.clone(), ders)?);
        let mut sn = SN {
            spec: BracketSpec::zero(bimodule.total().clone(), shift),
            bimodule,
            shift,
        };
        sn.spec = sn.build()?;
        Ok(sn)
    }

    pub fn bimodule(&self) -> &Arc<Bimodule> {
        &self.bimodule
    }

    pub fn spec(&self) -> &BracketSpec {
        &self.spec
    }

    fn total(&self) -> &Arc<Alphabet> {
        self.bimodule.total()
    }

    fn cells(&self) -> Cells<'_> {
        Cells::new(self.total())
    }

    /// `Dx` for the base generator `x`.
    pub fn der_gen(&self, x: GenId) -> GenId {
        GenId((self.bimodule.base().len() + x.index()) as u16)
    }

    fn x_of(&self, dx: GenId) -> GenId {
        GenId((dx.index() - self.bimodule.base().len()) as u16)
    }

    /// `ev(δ, a)` for a generator `δ` and a base word `a`: the derivation rule
    /// for the outer structure, with `Σ^r δ` passing the letters in front.
    pub fn ev_word(&self, d: &Word, a: &Word) -> Tensor2 {
        let total = self.total();
        let mut out = Tensor2::zero();
        let [g] = d.letters() else {
            return out;
        };
        if !self.bimodule.is_module(*g) {
            return out;
        }
        let x = self.x_of(*g);
        let k = total.degree(*g) + self.shift;
        for (j, &y) in a.letters().iter().enumerate() {
            if y != x {
                continue;
            }
            let s = koszul_sign(&[k], &[total.word_degree(&a.slice(0..j))]);
            out.add_term([a.slice(0..j), a.slice(j + 1..a.len())], s.to_rational());
        }
        out
    }

    fn ev(&self) -> impl Fn(&[Cell]) -> Chain + '_ {
        move |cells: &[Cell]| {
            self.ev_word(cells[0].word(), cells[1].word())
                .map_keys(|[u, v]| vec![Cell::Word(u.clone()), Cell::Word(v.clone())])
        }
    }

    fn start(&self, i: GenId, j: GenId, k: GenId) -> Chain {
        Cells::row(vec![
            Cell::Word(Word::letter(self.der_gen(i))),
            Cell::Word(Word::letter(self.der_gen(j))),
            Cell::Word(Word::letter(k)),
        ])
    }

    fn to3(ch: &Chain) -> Tensor3 {
        ch.map_keys(|row| std::array::from_fn(|n| row[n].word().clone()))
    }

    /// `Φ(Dx_i, Dx_j)` on the generator `x_k`.
    pub fn phi(&self, i: GenId, j: GenId, k: GenId) -> Tensor3 {
        let c = self.cells();
        let row = self.start(i, j, k);
        let t1 = c.apply(&row, 1, 2, self.ev());
        let t1 = c.apply(&t1, 0, 2, self.ev());
        let t1 = c.tau(&t1, 1, 1, 1);
        let t2 = c.tau(&row, 0, 1, 1);
        let t2 = c.apply(&t2, 1, 2, self.ev());
        let t2 = c.tau(&t2, 0, 1, 1);
        let t2 = c.apply(&t2, 1, 2, self.ev());
        let t2 = c.tau(&t2, 1, 1, 1);
        Self::to3(&t1.minus(&t2))
    }

    /// `Ψ(Dx_i, Dx_j)` on the generator `x_k`.
    pub fn psi(&self, i: GenId, j: GenId, k: GenId) -> Tensor3 {
        let c = self.cells();
        let row = self.start(i, j, k);
        let s1 = c.apply(&row, 1, 2, self.ev());
        let s1 = c.tau(&s1, 0, 1, 1);
        let s1 = c.apply(&s1, 1, 2, self.ev());
        let s1 = c.tau(&s1, 0, 1, 1);
        let s2 = c.tau(&row, 0, 1, 1);
        let s2 = c.apply(&s2, 1, 2, self.ev());
        let s2 = c.apply(&s2, 0, 2, self.ev());
        let s2 = c.tau(&s2, 0, 1, 1);
        Self::to3(&s1.minus(&s2))
    }

    /// `{{Dx_i, Dx_j}}`: a term `v ⊗ u ⊗ w` of `Φ` on `x_k` contributes
    /// `±(u Dx_k v) ⊗ w`, and a term of `Ψ` contributes `±w ⊗ (u Dx_k v)`,
    /// the sign being that of `u` passing `v`.
    pub fn der_bracket(&self, i: GenId, j: GenId) -> Tensor2 {
        let total = self.total().clone();
        let mut out = Tensor2::zero();
        for k in self.bimodule.base_ids() {
            let dk = Word::letter(self.der_gen(k));
            let assemble = |v: &Word, u: &Word| {
                let s = koszul_sign(&[total.word_degree(u)], &[total.word_degree(v)]);
                (u.concat(&dk).concat(v), s.to_rational())
            };
            for ([v, u, w], c) in self.phi(i, j, k).iter() {
                let (n, s) = assemble(v, u);
                out.add_term([n, w.clone()], *c * s);
            }
            for ([v, u, w], c) in self.psi(i, j, k).iter() {
                let (n, s) = assemble(v, u);
                out.add_term([w.clone(), n], *c * s);
            }
        }
        out
    }

    fn build(&self) -> Result<BracketSpec> {
        let mut entries = BTreeMap::new();
        for i in self.bimodule.base_ids() {
            let di = Word::letter(self.der_gen(i));
            for j in self.bimodule.base_ids() {
                entries.insert((self.der_gen(i), j), self.ev_word(&di, &Word::letter(j)));
                if i <= j {
                    entries.insert((self.der_gen(i), self.der_gen(j)), self.der_bracket(i, j));
                }
            }
        }
        BracketSpec::new(self.total().clone(), self.shift, entries)
    }
}

/// The Schouten-Nijenhuis bracket of a free algebra, as a bracket table.
pub fn sn_bracket(base: &Arc<Alphabet>, shift: i64) -> Result<BracketSpec> {
    Ok(SN::new(base, shift)?.spec)
}
