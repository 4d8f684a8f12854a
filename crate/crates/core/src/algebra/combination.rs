//! Sparse finite linear combinations with rational coefficients.

use std::collections::btree_map::{self, BTreeMap};

use super::rational::Rational;
use super::word::{Alphabet, Word};

/// A finite sum `Σ c_k · k`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> Rational {
        self.terms.get(k).copied().unwrap_or_default()
    }

    pub fn add_term(&mut self, k: K, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = *e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: Rational) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), *v * c);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.add_scaled(other, Rational::one());
    }

    pub fn sub_assign(&mut self, other: &Self) {
        self.add_scaled(other, -Rational::one());
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn scale(&self, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(-Rational::one())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Relabels every term; colliding images are summed.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> Combination<L> {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), *c);
        }
        out
    }

    /// Keeps the terms satisfying `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&K) -> bool) -> Self {
        Combination {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, c)| (k.clone(), *c))
                .collect(),
        }
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord> IntoIterator for Combination<K> {
    type Item = (K, Rational);
    type IntoIter = btree_map::IntoIter<K, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

/// Elements of `A⊗A`.
pub type Tensor2 = Combination<[Word; 2]>;
/// Elements of `A⊗A⊗A`.
pub type Tensor3 = Combination<[Word; 3]>;

/// Renders a tensor term list in the document grammar, `0` when empty.
pub fn render_tensor<const N: usize>(alphabet: &Alphabet, t: &Combination<[Word; N]>) -> String {
    render_terms(t.iter().map(|(k, c)| {
        let legs: Vec<String> = k.iter().map(|w| alphabet.render(w)).collect();
        (legs.join(" (*) "), *c)
    }))
}

/// Renders a polynomial, `0` when empty.
pub fn render_words(alphabet: &Alphabet, p: &Combination<Word>) -> String {
    render_terms(p.iter().map(|(w, c)| (alphabet.render(w), *c)))
}

pub(crate) fn render_terms(terms: impl Iterator<Item = (String, Rational)>) -> String {
    let mut out = String::new();
    for (i, (body, c)) in terms.enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push_str(&format!("-{a} * "));
            } else if !a.is_one() {
                out.push_str(&format!("{a} * "));
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
            if !a.is_one() {
                out.push_str(&format!("{a} * "));
            }
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Degrees of the terms of a tensor, each leg summed.
pub fn tensor_degrees<const N: usize>(alphabet: &Alphabet, t: &Combination<[Word; N]>) -> Vec<i64> {
    t.keys()
        .map(|k| k.iter().map(|w| alphabet.word_degree(w)).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::word::GenId;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut c: Combination<u8> = Combination::single(1, q(2));
        c.add_term(1, q(-2));
        assert!(c.is_zero());
        c.add_term(3, q(0));
        assert!(c.is_zero());
    }

    #[test]
    fn rendering() {
        let a = Alphabet::base(&[("x", 0), ("y", 0)]).unwrap();
        let x = Word::letter(GenId(0));
        let mut t = Tensor2::zero();
        t.add_term([Word::unit(), x.clone()], q(-1));
        t.add_term([x.clone(), Word::unit()], Rational::new(1, 2).unwrap());
        assert_eq!(render_tensor(&a, &t), "-1 * 1 (*) x + 1/2 * x (*) 1");
        assert_eq!(render_tensor(&a, &Tensor2::zero()), "0");
    }
}
