//! Evaluation of composite morphisms on elementary tensors.
//!
//! An elementary tensor is a row of cells: shift symbols (a suspension of
//! some degree) and words. Composites are applied step by step: swapping two
//! adjacent blocks costs the Koszul sign of the blocks' degrees, multiplying
//! adjacent words and splitting a word are free, and degree-zero maps replace
//! a run of cells by a linear combination of rows. Every sign produced by the
//! engine therefore comes from [`koszul_sign`].

use super::combination::Combination;
use super::rational::Rational;
use super::sign::koszul_sign;
use super::word::{Alphabet, Word};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Cell {
    /// A suspension symbol of the given degree.
    Shift(i64),
    Word(Word),
}

impl Cell {
    pub fn word(&self) -> &Word {
        match self {
            Cell::Word(w) => w,
            Cell::Shift(d) => panic!("expected a word cell, found shift of degree {d}"),
        }
    }

    pub fn shift(&self) -> i64 {
        match self {
            Cell::Shift(d) => *d,
            Cell::Word(_) => panic!("expected a shift cell"),
        }
    }
}

pub type Row = Vec<Cell>;
pub type Chain = Combination<Row>;

/// Degree bookkeeping for rows over one alphabet.
#[derive(Clone, Copy)]
pub struct Cells<'a> {
    alphabet: &'a Alphabet,
}

impl<'a> Cells<'a> {
    pub fn new(alphabet: &'a Alphabet) -> Self {
        Cells { alphabet }
    }

    pub fn alphabet(&self) -> &'a Alphabet {
        self.alphabet
    }

    pub fn degree(&self, c: &Cell) -> i64 {
        match c {
            Cell::Shift(d) => *d,
            Cell::Word(w) => self.alphabet.word_degree(w),
        }
    }

    fn degrees(&self, cells: &[Cell]) -> Vec<i64> {
        cells.iter().map(|c| self.degree(c)).collect()
    }

    pub fn row(cells: Row) -> Chain {
        Chain::single(cells, Rational::one())
    }

    fn each(chain: &Chain, mut f: impl FnMut(&Row, Rational, &mut Chain)) -> Chain {
        let mut out = Chain::zero();
        for (row, c) in chain.iter() {
            f(row, *c, &mut out);
        }
        out
    }

    /// Swaps the block `at..at+left` with the following block of `right` cells.
    pub fn tau(&self, chain: &Chain, at: usize, left: usize, right: usize) -> Chain {
        Self::each(chain, |row, c, out| {
            let mid = at + left;
            let end = mid + right;
            let s = koszul_sign(&self.degrees(&row[at..mid]), &self.degrees(&row[mid..end]));
            let mut r = Vec::with_capacity(row.len());
            r.extend_from_slice(&row[..at]);
            r.extend_from_slice(&row[mid..end]);
            r.extend_from_slice(&row[at..mid]);
            r.extend_from_slice(&row[end..]);
            out.add_term(r, c * s.to_rational());
        })
    }

    /// Multiplies the words at `at` and `at + 1`.
    pub fn mul(&self, chain: &Chain, at: usize) -> Chain {
        Self::each(chain, |row, c, out| {
            let w = row[at].word().concat(row[at + 1].word());
            let mut r = row.clone();
            r.splice(at..at + 2, [Cell::Word(w)]);
            out.add_term(r, c);
        })
    }

    /// Replaces cells `at..at+arity` by `f` of them.
    pub fn apply(
        &self,
        chain: &Chain,
        at: usize,
        arity: usize,
        f: impl Fn(&[Cell]) -> Chain,
    ) -> Chain {
        Self::each(chain, |row, c, out| {
            let image = f(&row[at..at + arity]);
            for (cells, d) in image.iter() {
                let mut r = Vec::with_capacity(row.len() - arity + cells.len());
                r.extend_from_slice(&row[..at]);
                r.extend_from_slice(cells);
                r.extend_from_slice(&row[at + arity..]);
                out.add_term(r, c * *d);
            }
        })
    }

    /// Splits the word at `at` after `pos(word)` letters.
    pub fn split(&self, chain: &Chain, at: usize, pos: impl Fn(&Word) -> usize) -> Chain {
        Self::each(chain, |row, c, out| {
            let w = row[at].word();
            let (u, v) = w.split_at(pos(w));
            let mut r = row.clone();
            r.splice(at..at + 1, [Cell::Word(u), Cell::Word(v)]);
            out.add_term(r, c);
        })
    }

    /// Fuses two adjacent shift symbols into one.
    pub fn merge_shifts(&self, chain: &Chain, at: usize) -> Chain {
        Self::each(chain, |row, c, out| {
            let d = row[at].shift() + row[at + 1].shift();
            let mut r = row.clone();
            r.splice(at..at + 2, [Cell::Shift(d)]);
            out.add_term(r, c);
        })
    }

    /// Splits a shift symbol into two, the first of degree `first`.
    pub fn split_shift(&self, chain: &Chain, at: usize, first: i64) -> Chain {
        Self::each(chain, |row, c, out| {
            let d = row[at].shift();
            let mut r = row.clone();
            r.splice(at..at + 1, [Cell::Shift(first), Cell::Shift(d - first)]);
            out.add_term(r, c);
        })
    }

    /// Inserts an inverse pair of shift symbols `Σ^{-d} Σ^{d}` before `at`.
    pub fn insert_pair(&self, chain: &Chain, at: usize, d: i64) -> Chain {
        Self::each(chain, |row, c, out| {
            let mut r = row.clone();
            r.splice(at..at, [Cell::Shift(-d), Cell::Shift(d)]);
            out.add_term(r, c);
        })
    }

    /// Removes an adjacent inverse pair of shift symbols.
    pub fn cancel_pair(&self, chain: &Chain, at: usize) -> Chain {
        Self::each(chain, |row, c, out| {
            assert_eq!(
                row[at].shift() + row[at + 1].shift(),
                0,
                "cancelled shifts are not inverse"
            );
            let mut r = row.clone();
            r.drain(at..at + 2);
            out.add_term(r, c);
        })
    }

    /// Keeps the rows satisfying `pred`.
    pub fn project(&self, chain: &Chain, pred: impl Fn(&Row) -> bool) -> Chain {
        chain.filter(|r| pred(r))
    }
}

/// Reads rows `[Σ, w_1, .., w_N]` as a tensor, dropping the leading shift.
pub fn chain_to_tensor<const N: usize>(chain: &Chain) -> Combination<[Word; N]> {
    chain.map_keys(|row| {
        assert_eq!(row.len(), N + 1, "row has unexpected shape");
        std::array::from_fn(|i| row[i + 1].word().clone())
    })
}

/// Builds rows `[Σ^r, w_1, .., w_N]` from a tensor.
pub fn tensor_to_chain<const N: usize>(r: i64, t: &Combination<[Word; N]>) -> Chain {
    t.map_keys(|legs| {
        let mut row = Vec::with_capacity(N + 1);
        row.push(Cell::Shift(r));
        row.extend(legs.iter().cloned().map(Cell::Word));
        row
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::word::GenId;

    #[test]
    fn tau_uses_block_degrees() {
        let a = Alphabet::base(&[("a", 1), ("b", 1), ("c", 2)]).unwrap();
        let cells = Cells::new(&a);
        let w = |i| Cell::Word(Word::letter(GenId(i)));
        let ch = Cells::row(vec![w(0), w(1), w(2)]);
        let swapped = cells.tau(&ch, 0, 1, 1);
        assert_eq!(swapped.coeff(&vec![w(1), w(0), w(2)]), -Rational::one());
        let moved = cells.tau(&ch, 0, 2, 1);
        assert_eq!(moved.coeff(&vec![w(2), w(0), w(1)]), Rational::one());
        let shifted = cells.tau(&Cells::row(vec![Cell::Shift(1), w(0)]), 0, 1, 1);
        assert_eq!(shifted.coeff(&vec![w(0), Cell::Shift(1)]), -Rational::one());
    }

    #[test]
    fn double_swap_is_identity() {
        let a = Alphabet::base(&[("a", 1), ("b", 3)]).unwrap();
        let cells = Cells::new(&a);
        let ch = Cells::row(vec![
            Cell::Shift(1),
            Cell::Word(Word(vec![GenId(0), GenId(1)])),
            Cell::Word(Word::letter(GenId(0))),
        ]);
        let back = cells.tau(&cells.tau(&ch, 0, 2, 1), 0, 1, 2);
        assert_eq!(back, ch);
    }
}
