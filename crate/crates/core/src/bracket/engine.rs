//! Extension of a generator table to all words by the derivation rules.

use dashmap::DashMap;

use super::spec::BracketSpec;
use crate::algebra::cells::{chain_to_tensor, tensor_to_chain, Cell, Cells, Chain};
use crate::algebra::{Combination, NCPoly, Rational, Tensor2, Tensor3, Word};
use crate::error::{Error, Result};

/// Which slot is expanded first when both arguments are longer than a letter.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ExpansionOrder {
    #[default]
    LeftFirst,
    RightFirst,
}

/// A memoizing evaluator for one bracket table.
pub struct Engine<'s> {
    spec: &'s BracketSpec,
    order: ExpansionOrder,
    cache: DashMap<(Word, Word), Tensor2>,
}

impl<'s> Engine<'s> {
    pub fn new(spec: &'s BracketSpec) -> Self {
        Self::with_order(spec, ExpansionOrder::default())
    }

    pub fn with_order(spec: &'s BracketSpec, order: ExpansionOrder) -> Self {
        Engine {
            spec,
            order,
            cache: DashMap::new(),
        }
    }

    pub fn spec(&self) -> &'s BracketSpec {
        self.spec
    }

    pub fn cells(&self) -> Cells<'s> {
        Cells::new(self.spec.alphabet())
    }

    fn r(&self) -> i64 {
        self.spec.shift()
    }

    /// `{{a, b}}` on words.
    pub fn words(&self, a: &Word, b: &Word) -> Tensor2 {
        if a.is_unit() || b.is_unit() {
            return Tensor2::zero();
        }
        let key = (a.clone(), b.clone());
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let v = self.compute(a, b);
        self.cache.insert(key, v.clone());
        v
    }

    fn compute(&self, a: &Word, b: &Word) -> Tensor2 {
        if a.len() == 1 && b.len() == 1 {
            return self.spec.value(a.0[0], b.0[0]).cloned().unwrap_or_default();
        }
        let left = match self.order {
            ExpansionOrder::LeftFirst => a.len() > 1,
            ExpansionOrder::RightFirst => b.len() == 1,
        };
        if left {
            self.left_derivation(a, b)
        } else {
            self.right_derivation(a, b)
        }
    }

    /// The bracket as a map on rows `[Σ, a, Σ, b] -> [Σ, u', u'']`.
    pub fn f(&self) -> impl Fn(&[Cell]) -> Chain + '_ {
        move |c: &[Cell]| tensor_to_chain(self.r(), &self.words(c[1].word(), c[3].word()))
    }

    /// `{{a1 a2, c}}` through the inner bimodule structure, `a1` a letter.
    fn left_derivation(&self, a: &Word, c: &Word) -> Tensor2 {
        let cells = self.cells();
        let (a1, a2) = a.split_at(1);
        let row = Cells::row(vec![
            Cell::Shift(self.r()),
            Cell::Word(a1),
            Cell::Word(a2),
            Cell::Shift(self.r()),
            Cell::Word(c.clone()),
        ]);
        // a1 acts on the second leg of {{a2, c}}.
        let t1 = cells.tau(&row, 0, 1, 1);
        let t1 = cells.apply(&t1, 1, 4, self.f());
        let t1 = cells.tau(&t1, 0, 1, 2);
        let t1 = cells.mul(&t1, 2);
        // a2 acts on the first leg of {{a1, c}}.
        let t2 = cells.tau(&row, 2, 1, 2);
        let t2 = cells.apply(&t2, 0, 4, self.f());
        let t2 = cells.tau(&t2, 2, 1, 1);
        let t2 = cells.mul(&t2, 1);
        chain_to_tensor::<2>(&t1.plus(&t2))
    }

    /// `{{a, b1 b2}}` through the outer bimodule structure, `b1` a letter.
    fn right_derivation(&self, a: &Word, b: &Word) -> Tensor2 {
        let cells = self.cells();
        let (b1, b2) = b.split_at(1);
        let row = Cells::row(vec![
            Cell::Shift(self.r()),
            Cell::Word(a.clone()),
            Cell::Shift(self.r()),
            Cell::Word(b1),
            Cell::Word(b2),
        ]);
        let t1 = cells.tau(&row, 0, 3, 1);
        let t1 = cells.apply(&t1, 1, 4, self.f());
        let t1 = cells.tau(&t1, 0, 1, 1);
        let t1 = cells.mul(&t1, 1);
        let t2 = cells.apply(&row, 0, 4, self.f());
        let t2 = cells.mul(&t2, 2);
        chain_to_tensor::<2>(&t1.plus(&t2))
    }

    fn check_alphabet(&self, p: &NCPoly) -> Result<()> {
        if **p.alphabet() != **self.spec.alphabet() {
            return Err(Error::IncompatibleAlgebras);
        }
        Ok(())
    }

    /// Bilinear extension to polynomials.
    pub fn bracket(&self, a: &NCPoly, b: &NCPoly) -> Result<Tensor2> {
        self.check_alphabet(a)?;
        self.check_alphabet(b)?;
        let mut out = Tensor2::zero();
        for (u, c) in a.terms().iter() {
            for (v, d) in b.terms().iter() {
                out.add_scaled(&self.words(u, v), *c * *d);
            }
        }
        Ok(out)
    }

    /// `-Στ ∘ f ∘ τ` at `(a, b)`: what antisymmetry predicts for `{{a, b}}`.
    pub fn antisymmetric_image(&self, a: &Word, b: &Word) -> Tensor2 {
        let cells = self.cells();
        let row = Cells::row(vec![
            Cell::Shift(self.r()),
            Cell::Word(a.clone()),
            Cell::Shift(self.r()),
            Cell::Word(b.clone()),
        ]);
        let ch = cells.tau(&row, 0, 2, 2);
        let ch = cells.apply(&ch, 0, 4, self.f());
        let ch = cells.tau(&ch, 1, 1, 1);
        chain_to_tensor::<2>(&ch).neg()
    }

    fn triple_row(&self, a: &Word, b: &Word, c: &Word) -> Chain {
        Cells::row(vec![
            Cell::Shift(self.r()),
            Cell::Word(a.clone()),
            Cell::Shift(self.r()),
            Cell::Word(b.clone()),
            Cell::Shift(self.r()),
            Cell::Word(c.clone()),
        ])
    }

    /// `(f ⊗ A)(ΣA ⊗ f)` on rows `[Σ, a, Σ, b, Σ, c]`.
    fn iterated(&self, ch: &Chain) -> Chain {
        let cells = self.cells();
        let ch = cells.apply(ch, 2, 4, self.f());
        cells.apply(&ch, 0, 4, self.f())
    }

    /// The double jacobiator on words, as rows `[Σ, x, y, z]`.
    pub fn jacobiator_chain(&self, a: &Word, b: &Word, c: &Word) -> Chain {
        let cells = self.cells();
        let row = self.triple_row(a, b, c);
        let t1 = self.iterated(&row);
        let t2 = cells.tau(&self.iterated(&cells.tau(&row, 0, 4, 2)), 1, 1, 2);
        let t3 = cells.tau(&self.iterated(&cells.tau(&row, 0, 2, 4)), 1, 2, 1);
        t1.plus(&t2).plus(&t3)
    }

    pub fn jacobiator_words(&self, a: &Word, b: &Word, c: &Word) -> Tensor3 {
        chain_to_tensor::<3>(&self.jacobiator_chain(a, b, c))
    }

    /// Trilinear double jacobiator; inputs must be homogeneous.
    pub fn jacobiator(&self, a: &NCPoly, b: &NCPoly, c: &NCPoly) -> Result<Tensor3> {
        for p in [a, b, c] {
            self.check_alphabet(p)?;
            if !p.is_homogeneous() {
                return Err(Error::Inhomogeneous(p.render()));
            }
        }
        let mut out = Tensor3::zero();
        for (u, cu) in a.terms().iter() {
            for (v, cv) in b.terms().iter() {
                for (w, cw) in c.terms().iter() {
                    out.add_scaled(&self.jacobiator_words(u, v, w), *cu * *cv * *cw);
                }
            }
        }
        Ok(out)
    }

    /// `Σμ ∘ f` on rows `[Σ, a, Σ, b] -> [Σ, w]`.
    pub fn g(&self) -> impl Fn(&[Cell]) -> Chain + '_ {
        move |c: &[Cell]| {
            let cells = self.cells();
            let ch = self.f()(c);
            cells.mul(&ch, 1)
        }
    }

    pub fn leibniz_words(&self, a: &Word, b: &Word) -> Combination<Word> {
        let row = [
            Cell::Shift(self.r()),
            Cell::Word(a.clone()),
            Cell::Shift(self.r()),
            Cell::Word(b.clone()),
        ];
        self.g()(&row).map_keys(|r| r[1].word().clone())
    }

    pub fn leibniz(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
        self.check_alphabet(a)?;
        self.check_alphabet(b)?;
        let mut out = Combination::zero();
        for (u, c) in a.terms().iter() {
            for (v, d) in b.terms().iter() {
                out.add_scaled(&self.leibniz_words(u, v), *c * *d);
            }
        }
        Ok(NCPoly::from_terms(a.alphabet(), out))
    }

    /// The sign of `τ` bringing `Σa Σb Σc` to `Σc Σa Σb`.
    pub fn rotation_sign(&self, a: &Word, b: &Word, c: &Word) -> Rational {
        let cells = self.cells();
        let ch = cells.tau(&self.triple_row(a, b, c), 0, 4, 2);
        let s = *ch.iter().next().unwrap().1;
        s
    }
}

/// Left Leibniz residual `g(a,g(b,c)) - g(g(a,b),c) - g(ΣA⊗g)(τ⊗ΣA)` for
/// any map `g` on rows `[Σ, a, Σ, b] -> [Σ, w]`.
pub fn leibniz_residual(
    cells: &Cells,
    r: i64,
    a: &Word,
    b: &Word,
    c: &Word,
    g: &dyn Fn(&[Cell]) -> Chain,
) -> Chain {
    let row = Cells::row(vec![
        Cell::Shift(r),
        Cell::Word(a.clone()),
        Cell::Shift(r),
        Cell::Word(b.clone()),
        Cell::Shift(r),
        Cell::Word(c.clone()),
    ]);
    let lhs = cells.apply(&cells.apply(&row, 2, 4, g), 0, 4, g);
    let t2 = cells.apply(&cells.apply(&row, 0, 4, g), 0, 4, g);
    let swapped = cells.tau(&row, 0, 2, 2);
    let t3 = cells.apply(&cells.apply(&swapped, 2, 4, g), 0, 4, g);
    lhs.minus(&t2).minus(&t3)
}

/// `{{a, b}}` for polynomials.
pub fn extend_bracket(spec: &BracketSpec, a: &NCPoly, b: &NCPoly) -> Result<Tensor2> {
    Engine::new(spec).bracket(a, b)
}

pub fn double_jacobiator(
    spec: &BracketSpec,
    a: &NCPoly,
    b: &NCPoly,
    c: &NCPoly,
) -> Result<Tensor3> {
    Engine::new(spec).jacobiator(a, b, c)
}

/// `μ ∘ {{a, b}}`.
pub fn leibniz_bracket(spec: &BracketSpec, a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
    Engine::new(spec).leibniz(a, b)
}
