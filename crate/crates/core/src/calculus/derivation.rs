//! Double derivations `A → A⊗A` and their lifts through `Ω_A`.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::omega::OmegaPresentation;
use crate::algebra::{koszul_sign, Alphabet, GenId, Tensor2, Word};
use crate::error::{Error, Result};

/// A derivation of degree `k` for the outer bimodule structure on `A⊗A`,
/// given by its values on generators:
/// `h(ab) = h(a)·b + (-1)^{k|a|} a·h(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    alphabet: Arc<Alphabet>,
    degree: i64,
    values: BTreeMap<GenId, Tensor2>,
}

impl Derivation {
    pub fn new(
        alphabet: Arc<Alphabet>,
        degree: i64,
        values: impl IntoIterator<Item = (GenId, Tensor2)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (g, v) in values {
            let expected = alphabet.degree(g) + degree;
            for legs in v.keys() {
                let found = alphabet.word_degree(&legs[0]) + alphabet.word_degree(&legs[1]);
                if found != expected {
                    return Err(Error::Degree {
                        pair: alphabet.name(g).to_string(),
                        expected,
                        found,
                    });
                }
            }
            if map.insert(g, v).is_some() {
                return Err(Error::DuplicateEntry(alphabet.name(g).to_string()));
            }
        }
        map.retain(|_, v: &mut Tensor2| !v.is_zero());
        Ok(Derivation {
            alphabet,
            degree,
            values: map,
        })
    }

    pub fn zero(alphabet: Arc<Alphabet>, degree: i64) -> Self {
        Derivation {
            alphabet,
            degree,
            values: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn value(&self, g: GenId) -> Option<&Tensor2> {
        self.values.get(&g)
    }

    pub fn values(&self) -> &BTreeMap<GenId, Tensor2> {
        &self.values
    }

    pub fn eval(&self, w: &Word) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (j, &x) in w.letters().iter().enumerate() {
            let Some(v) = self.values.get(&x) else {
                continue;
            };
            let (u, rest) = w.split_at(j);
            let q = rest.slice(1..rest.len());
            let s = koszul_sign(&[self.degree], &[self.alphabet.word_degree(&u)]);
            for (legs, c) in v.iter() {
                out.add_term(
                    [u.concat(&legs[0]), legs[1].concat(&q)],
                    *c * s.to_rational(),
                );
            }
        }
        out
    }
}

/// The bimodule map `Ω_A → A⊗A` with `dx ↦ h(x)`, applied to
/// `u·dx·v` as `(-1)^{k|u|} u h(x)' ⊗ h(x)'' v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedDerivation {
    omega: OmegaPresentation,
    h: Derivation,
}

impl LiftedDerivation {
    /// `dx_i ↦ h(x_i)`.
    pub fn table(&self) -> BTreeMap<GenId, Tensor2> {
        self.h
            .values()
            .iter()
            .map(|(&x, v)| (self.omega.d_gen(x), v.clone()))
            .collect()
    }

    /// Applies the map to a weight-one word of `T_A(Ω_A)`.
    pub fn apply(&self, w: &Word) -> Result<Tensor2> {
        let b = self.omega.bimodule();
        let (u, dx, v) = b.decompose(w).ok_or_else(|| {
            Error::Invalid(format!(
                "'{}' is not a weight-one word",
                b.total().render(w)
            ))
        })?;
        let mut out = Tensor2::zero();
        if let Some(val) = self.h.value(self.omega.x_of(dx)) {
            let s = koszul_sign(&[self.h.degree()], &[b.total().word_degree(&u)]);
            for (legs, c) in val.iter() {
                out.add_term(
                    [u.concat(&legs[0]), legs[1].concat(&v)],
                    *c * s.to_rational(),
                );
            }
        }
        Ok(out)
    }

    /// The map applied to `d(w)`.
    pub fn apply_to_d(&self, w: &Word) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (n, c) in self.omega.d_word(w).iter() {
            out.add_scaled(&self.apply(n).expect("d has weight one"), *c);
        }
        out
    }
}

pub fn lift_derivation(p: &OmegaPresentation, h: &Derivation) -> Result<LiftedDerivation> {
    if h.alphabet.as_ref() != p.base().as_ref() {
        return Err(Error::IncompatibleAlgebras);
    }
    Ok(LiftedDerivation {
        omega: p.clone(),
        h: h.clone(),
    })
}
