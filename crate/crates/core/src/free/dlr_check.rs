//! Direct evaluation of the double Lie-Rinehart axioms.
//!
//! The evaluator here works only with the anchor and the module bracket,
//! extended to words of weight one by the bimodule and derivation rules of
//! the data; it does not go through the linear bracket on `T_A(M)`.

use std::time::Instant;

use dashmap::DashMap;

use super::dlr::DlrData;
use crate::algebra::cells::{chain_to_tensor, tensor_to_chain, Cell, Cells, Chain};
use crate::algebra::{render_tensor, Alphabet, Combination, Tensor2, Word};
use crate::bracket::checks::render_input;
use crate::report::{AxiomEntry, CheckReport, Violation};

pub const ANCHOR: &str = "anchor";
pub const ANTISYMMETRY: &str = "a:antisymmetry";
pub const DERIVATION: &str = "b:derivation";
pub const ANCHOR_JACOBI: &str = "c:anchor-jacobi";
pub const JACOBI: &str = "d:double-jacobi";

pub struct DlrEval<'d> {
    d: &'d DlrData,
    anchor_cache: DashMap<(Word, Word), Tensor2>,
    bracket_cache: DashMap<(Word, Word), Tensor2>,
}

type CellMap<'a> = Box<dyn Fn(&[Cell]) -> Chain + Sync + 'a>;

impl<'d> DlrEval<'d> {
    pub fn new(d: &'d DlrData) -> Self {
        DlrEval {
            d,
            anchor_cache: DashMap::new(),
            bracket_cache: DashMap::new(),
        }
    }

    fn alphabet(&self) -> &'d Alphabet {
        self.d.bimodule().total()
    }

    fn cells(&self) -> Cells<'d> {
        Cells::new(self.alphabet())
    }

    fn r(&self) -> i64 {
        self.d.shift()
    }

    fn row(&self, words: &[&Word]) -> Chain {
        let mut row = Vec::with_capacity(2 * words.len());
        for w in words {
            row.push(Cell::Shift(self.r()));
            row.push(Cell::Word((*w).clone()));
        }
        Cells::row(row)
    }

    /// `ρ(n, a)` for `n` of weight one and `a` a base word.
    pub fn anchor(&self, n: &Word, a: &Word) -> Tensor2 {
        if n.is_unit() || a.is_unit() {
            return Tensor2::zero();
        }
        let key = (n.clone(), a.clone());
        if let Some(v) = self.anchor_cache.get(&key) {
            return v.clone();
        }
        let v = self.compute_anchor(n, a);
        self.anchor_cache.insert(key, v.clone());
        v
    }

    fn compute_anchor(&self, n: &Word, a: &Word) -> Tensor2 {
        let cells = self.cells();
        let (p, m, q) = self.d.bimodule().decompose(n).expect("weight-one word");
        if p.is_unit() && q.is_unit() {
            if a.len() == 1 {
                return self.d.anchor_value(m, a.0[0]).cloned().unwrap_or_default();
            }
            let (a1, a2) = a.split_at(1);
            return chain_to_tensor::<2>(&self.second_slot(&cells, n, &a1, &a2));
        }
        // ρ(p m q, a): p and q act through the inner bimodule structure.
        let row = Cells::row(vec![
            Cell::Shift(self.r()),
            Cell::Word(p),
            Cell::Word(Word::letter(m)),
            Cell::Word(q),
            Cell::Shift(self.r()),
            Cell::Word(a.clone()),
        ]);
        let ch = cells.tau(&row, 0, 1, 1);
        let ch = cells.tau(&ch, 3, 1, 2);
        let ch = cells.apply(&ch, 1, 4, self.rho());
        let ch = cells.tau(&ch, 3, 1, 1);
        let ch = cells.mul(&ch, 2);
        let ch = cells.tau(&ch, 0, 1, 2);
        let ch = cells.mul(&ch, 2);
        chain_to_tensor::<2>(&ch)
    }

    /// `ρ(n, a1 a2)` by the derivation rule in the second slot.
    fn second_slot(&self, cells: &Cells, n: &Word, a1: &Word, a2: &Word) -> Chain {
        let row = Cells::row(vec![
            Cell::Shift(self.r()),
            Cell::Word(n.clone()),
            Cell::Shift(self.r()),
            Cell::Word(a1.clone()),
            Cell::Word(a2.clone()),
        ]);
        let t1 = cells.tau(&row, 0, 3, 1);
        let t1 = cells.apply(&t1, 1, 4, self.rho());
        let t1 = cells.tau(&t1, 0, 1, 1);
        let t1 = cells.mul(&t1, 1);
        let t2 = cells.apply(&row, 0, 4, self.rho());
        let t2 = cells.mul(&t2, 2);
        t1.plus(&t2)
    }

    /// `ρ_τ(a, n) = -Στ ∘ ρ ∘ τ`.
    pub fn anchor_swapped(&self, a: &Word, n: &Word) -> Tensor2 {
        let cells = self.cells();
        let ch = cells.tau(&self.row(&[a, n]), 0, 2, 2);
        let ch = cells.apply(&ch, 0, 4, self.rho());
        let ch = cells.tau(&ch, 1, 1, 1);
        chain_to_tensor::<2>(&ch).neg()
    }

    /// `{{n, n'}}` for words of weight one.
    pub fn bracket(&self, n: &Word, n2: &Word) -> Tensor2 {
        if n.is_unit() || n2.is_unit() {
            return Tensor2::zero();
        }
        let key = (n.clone(), n2.clone());
        if let Some(v) = self.bracket_cache.get(&key) {
            return v.clone();
        }
        let v = self.compute_bracket(n, n2);
        self.bracket_cache.insert(key, v.clone());
        v
    }

    fn compute_bracket(&self, n: &Word, n2: &Word) -> Tensor2 {
        let cells = self.cells();
        let b = self.d.bimodule();
        let (p2, m2, q2) = b.decompose(n2).expect("weight-one word");
        if !p2.is_unit() {
            let (a, rest) = n2.split_at(1);
            return chain_to_tensor::<2>(&self.phi_l(&cells, n, &a, &rest));
        }
        if !q2.is_unit() {
            let (rest, q) = n2.split_at(n2.len() - 1);
            return chain_to_tensor::<2>(&self.phi_r(&cells, n, &rest, &q));
        }
        if n.len() == 1 {
            return self
                .d
                .bracket_value(n.0[0], m2)
                .cloned()
                .unwrap_or_default();
        }
        // {{n, m'}} from {{m', n}} by antisymmetry.
        let ch = cells.tau(&self.row(&[n, n2]), 0, 2, 2);
        let ch = cells.apply(&ch, 0, 4, self.br());
        let ch = cells.tau(&ch, 1, 1, 1);
        chain_to_tensor::<2>(&ch).neg()
    }

    /// `{{n, p n''}} = ρ(n, p) n'' ± p {{n, n''}}` with `p` a base word.
    fn phi_l(&self, cells: &Cells, n: &Word, p: &Word, rest: &Word) -> Chain {
        let row = Cells::row(vec![
            Cell::Shift(self.r()),
            Cell::Word(n.clone()),
            Cell::Shift(self.r()),
            Cell::Word(p.clone()),
            Cell::Word(rest.clone()),
        ]);
        let t1 = cells.tau(&row, 0, 3, 1);
        let t1 = cells.apply(&t1, 1, 4, self.br());
        let t1 = cells.tau(&t1, 0, 1, 1);
        let t1 = cells.mul(&t1, 1);
        let t2 = cells.apply(&row, 0, 4, self.rho());
        let t2 = cells.mul(&t2, 2);
        t1.plus(&t2)
    }

    /// `{{n, n'' q}} = {{n, n''}} q ± n'' ρ(n, q)` with `q` a base word.
    fn phi_r(&self, cells: &Cells, n: &Word, rest: &Word, q: &Word) -> Chain {
        let row = Cells::row(vec![
            Cell::Shift(self.r()),
            Cell::Word(n.clone()),
            Cell::Shift(self.r()),
            Cell::Word(rest.clone()),
            Cell::Word(q.clone()),
        ]);
        let t1 = cells.tau(&row, 0, 3, 1);
        let t1 = cells.apply(&t1, 1, 4, self.rho());
        let t1 = cells.tau(&t1, 0, 1, 1);
        let t1 = cells.mul(&t1, 1);
        let t2 = cells.apply(&row, 0, 4, self.br());
        let t2 = cells.mul(&t2, 2);
        t1.plus(&t2)
    }

    fn rho(&self) -> CellMap<'_> {
        Box::new(move |c: &[Cell]| {
            tensor_to_chain(self.r(), &self.anchor(c[1].word(), c[3].word()))
        })
    }

    fn rho_tau(&self) -> CellMap<'_> {
        Box::new(move |c: &[Cell]| {
            tensor_to_chain(self.r(), &self.anchor_swapped(c[1].word(), c[3].word()))
        })
    }

    fn br(&self) -> CellMap<'_> {
        Box::new(move |c: &[Cell]| {
            tensor_to_chain(self.r(), &self.bracket(c[1].word(), c[3].word()))
        })
    }

    fn weight_at(&self, ch: &Chain, at: usize) -> Chain {
        let alphabet = self.alphabet();
        ch.filter(|row| alphabet.weight(row[at].word()) == 1)
    }

    /// The `A⊗A⊗A` relation between anchor, swapped anchor and bracket.
    pub fn anchor_jacobi(&self, a: &Word, n: &Word, n2: &Word) -> Chain {
        let cells = self.cells();
        let row = self.row(&[a, n, n2]);
        let t1 = cells.apply(&row, 2, 4, self.br());
        let t1 = self.weight_at(&t1, 3);
        let t1 = cells.apply(&t1, 0, 4, self.rho_tau());
        let t2 = cells.tau(&row, 0, 2, 4);
        let t2 = cells.apply(&t2, 2, 4, self.rho());
        let t2 = cells.apply(&t2, 0, 4, self.rho());
        let t2 = cells.tau(&t2, 1, 2, 1);
        let t3 = cells.tau(&row, 0, 4, 2);
        let t3 = cells.apply(&t3, 2, 4, self.rho_tau());
        let t3 = cells.apply(&t3, 0, 4, self.rho());
        let t3 = cells.tau(&t3, 1, 1, 2);
        t1.plus(&t2).plus(&t3)
    }

    /// The `M⊗A⊗A` component of the double jacobiator on three module words.
    pub fn module_jacobi(&self, n: &Word, n2: &Word, n3: &Word) -> Chain {
        let cells = self.cells();
        let row = self.row(&[n, n2, n3]);
        let t1 = cells.apply(&row, 2, 4, self.br());
        let t1 = self.weight_at(&t1, 3);
        let t1 = cells.apply(&t1, 0, 4, self.br());
        let t1 = self.weight_at(&t1, 1);
        let t2 = cells.tau(&row, 0, 4, 2);
        let t2 = cells.apply(&t2, 2, 4, self.br());
        let t2 = self.weight_at(&t2, 3);
        let t2 = cells.apply(&t2, 0, 4, self.br());
        let t2 = self.weight_at(&t2, 2);
        let t2 = cells.tau(&t2, 1, 1, 2);
        let t3 = cells.tau(&row, 0, 2, 4);
        let t3 = cells.apply(&t3, 2, 4, self.br());
        let t3 = self.weight_at(&t3, 4);
        let t3 = cells.apply(&t3, 0, 4, self.rho());
        let t3 = cells.tau(&t3, 1, 2, 1);
        t1.plus(&t2).plus(&t3)
    }
}

fn violation<const N: usize>(
    alphabet: &Alphabet,
    input: &[&Word],
    res: &Combination<[Word; N]>,
) -> Violation {
    Violation {
        input: render_input(alphabet, input),
        residual: render_tensor(alphabet, res),
    }
}

fn first_nonzero(
    alphabet: &Alphabet,
    input: &[&Word],
    residuals: impl IntoIterator<Item = Tensor2>,
) -> Option<Violation> {
    residuals
        .into_iter()
        .find(|r| !r.is_zero())
        .map(|r| violation(alphabet, input, &r))
}

/// Checks the anchor rules and conditions (a)-(d) on all base words and all
/// weight-one module words of length at most `max_len`.
pub fn dlr_check(d: &DlrData, max_len: usize) -> CheckReport {
    let start = Instant::now();
    let ev = DlrEval::new(d);
    let b = d.bimodule();
    let alphabet = b.total();
    let bases = b.base_words(max_len);
    let mods = b.module_words(max_len);
    let cells = ev.cells();

    let anchor_cases: Vec<(usize, usize)> = (0..mods.len())
        .flat_map(|i| (0..bases.len()).map(move |j| (i, j)))
        .collect();
    let anchor = AxiomEntry::run(ANCHOR, &anchor_cases, |&(i, j)| {
        let (n, a) = (&mods[i], &bases[j]);
        let value = ev.anchor(n, a);
        let splits = (1..a.len()).map(|k| {
            let (a1, a2) = a.split_at(k);
            chain_to_tensor::<2>(&ev.second_slot(&cells, n, &a1, &a2)).minus(&value)
        });
        let left = (n.len() > 1 && !b.is_module(n.0[0])).then(|| {
            let (x, n1) = n.split_at(1);
            let row = Cells::row(vec![
                Cell::Shift(ev.r()),
                Cell::Word(x),
                Cell::Word(n1),
                Cell::Shift(ev.r()),
                Cell::Word(a.clone()),
            ]);
            let ch = cells.tau(&row, 0, 1, 1);
            let ch = cells.apply(&ch, 1, 4, ev.rho());
            let ch = cells.tau(&ch, 0, 1, 2);
            chain_to_tensor::<2>(&cells.mul(&ch, 2)).minus(&value)
        });
        let right = (n.len() > 1 && !b.is_module(n.0[n.len() - 1])).then(|| {
            let (n1, y) = n.split_at(n.len() - 1);
            let row = Cells::row(vec![
                Cell::Shift(ev.r()),
                Cell::Word(n1),
                Cell::Word(y),
                Cell::Shift(ev.r()),
                Cell::Word(a.clone()),
            ]);
            let ch = cells.tau(&row, 2, 1, 2);
            let ch = cells.apply(&ch, 0, 4, ev.rho());
            let ch = cells.tau(&ch, 2, 1, 1);
            chain_to_tensor::<2>(&cells.mul(&ch, 1)).minus(&value)
        });
        first_nonzero(alphabet, &[n, a], splits.chain(left).chain(right))
    });

    let pair_cases: Vec<(usize, usize)> = (0..mods.len())
        .flat_map(|i| (0..mods.len()).map(move |j| (i, j)))
        .collect();
    let antisymmetry = AxiomEntry::run(ANTISYMMETRY, &pair_cases, |&(i, j)| {
        let (n, n2) = (&mods[i], &mods[j]);
        let ch = cells.tau(&ev.row(&[n, n2]), 0, 2, 2);
        let ch = cells.apply(&ch, 0, 4, ev.br());
        let ch = cells.tau(&ch, 1, 1, 1);
        let image = chain_to_tensor::<2>(&ch).neg();
        first_nonzero(alphabet, &[n, n2], [ev.bracket(n, n2).minus(&image)])
    });

    let derivation = AxiomEntry::run(DERIVATION, &pair_cases, |&(i, j)| {
        let (n, n2) = (&mods[i], &mods[j]);
        let value = ev.bracket(n, n2);
        let (p2, _, q2) = b.decompose(n2).expect("weight-one word");
        let lefts = (1..=p2.len()).map(|k| {
            let (p, rest) = n2.split_at(k);
            chain_to_tensor::<2>(&ev.phi_l(&cells, n, &p, &rest)).minus(&value)
        });
        let rights = (1..=q2.len()).map(|k| {
            let (rest, q) = n2.split_at(n2.len() - k);
            chain_to_tensor::<2>(&ev.phi_r(&cells, n, &rest, &q)).minus(&value)
        });
        first_nonzero(alphabet, &[n, n2], lefts.chain(rights))
    });

    let c_cases: Vec<(usize, usize, usize)> = (0..bases.len())
        .flat_map(|i| {
            let m = mods.len();
            (0..m).flat_map(move |j| (0..m).map(move |k| (i, j, k)))
        })
        .collect();
    let anchor_jacobi = AxiomEntry::run(ANCHOR_JACOBI, &c_cases, |&(i, j, k)| {
        let (a, n, n2) = (&bases[i], &mods[j], &mods[k]);
        let res = chain_to_tensor::<3>(&ev.anchor_jacobi(a, n, n2));
        (!res.is_zero()).then(|| violation(alphabet, &[a, n, n2], &res))
    });

    let d_cases = crate::bracket::checks::triples(mods.len());
    let jacobi = AxiomEntry::run(JACOBI, &d_cases, |&(i, j, k)| {
        let (n, n2, n3) = (&mods[i], &mods[j], &mods[k]);
        let res = chain_to_tensor::<3>(&ev.module_jacobi(n, n2, n3));
        (!res.is_zero()).then(|| violation(alphabet, &[n, n2, n3], &res))
    });

    CheckReport::with_entries(
        "dlr",
        max_len,
        vec![anchor, antisymmetry, derivation, anchor_jacobi, jacobi],
    )
    .timed(start)
}
