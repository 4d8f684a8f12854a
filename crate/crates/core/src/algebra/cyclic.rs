//! Cyclic words: normal forms for the quotient by graded commutators.

use super::rational::Rational;
use super::sign::koszul_sign;
use super::word::{Alphabet, Word};
use crate::error::{Error, Result};

/// Returns the least rotation `v` of `w` and `s` with `w ≡ s·v` modulo commutators.
///
/// Each rotation moves the last letter to the front and costs
/// `(-1)^{|last|·|rest|}`. When the least rotation is reached with both
/// signs the class is zero, which is reported as `s = 0`.
pub fn cyclic_normalize(alphabet: &Alphabet, w: &Word) -> Result<(Word, Rational)> {
    if w.is_unit() {
        return Err(Error::UnitHasNoCyclicClass);
    }
    let n = w.len();
    let total = alphabet.word_degree(w);
    let mut cur = w.clone();
    let mut sign = Rational::one();
    let mut best = (cur.clone(), sign);
    let mut clash = false;
    for _ in 1..n {
        let last = *cur.0.last().unwrap();
        let dl = alphabet.degree(last);
        sign *= koszul_sign(&[dl], &[total - dl]).to_rational();
        cur.0.rotate_right(1);
        if cur < best.0 {
            best = (cur.clone(), sign);
            clash = false;
        } else if cur == best.0 && sign != best.1 {
            clash = true;
        }
    }
    if clash {
        return Ok((best.0, Rational::zero()));
    }
    Ok(best)
}
