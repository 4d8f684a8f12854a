//! Closed formulas for brackets with every degree and the shift equal to
//! zero, written out directly from the derivation rules.

use std::collections::BTreeMap;

use doublebracket::algebra::{GenId, Rational, Word};

pub type T2 = BTreeMap<(Vec<GenId>, Vec<GenId>), Rational>;
pub type T3 = BTreeMap<(Vec<GenId>, Vec<GenId>, Vec<GenId>), Rational>;

/// A generator table with values as lists of `(coeff, left, right)`.
pub type Table = BTreeMap<(GenId, GenId), Vec<(Rational, Vec<GenId>, Vec<GenId>)>>;

fn add<K: Ord>(m: &mut BTreeMap<K, Rational>, k: K, c: Rational) {
    let e = m.entry(k).or_insert_with(Rational::zero);
    *e += c;
}

fn clean<K: Ord>(mut m: BTreeMap<K, Rational>) -> BTreeMap<K, Rational> {
    m.retain(|_, c| !c.is_zero());
    m
}

fn cat(parts: &[&[GenId]]) -> Vec<GenId> {
    parts.concat()
}

/// `{{a, b}} = Σ b_<j u a_>i ⊗ a_<i v b_>j` over `{{a_i, b_j}} = u⊗v`.
pub fn bracket(table: &Table, a: &[GenId], b: &[GenId]) -> T2 {
    let mut out = T2::new();
    for i in 0..a.len() {
        for j in 0..b.len() {
            let Some(terms) = table.get(&(a[i], b[j])) else {
                continue;
            };
            for (c, u, v) in terms {
                let l = cat(&[&b[..j], u, &a[i + 1..]]);
                let r = cat(&[&a[..i], v, &b[j + 1..]]);
                add(&mut out, (l, r), *c);
            }
        }
    }
    clean(out)
}

/// `{{a, b', c}}_L ⊗ ...`: `{{a, {{b,c}}'}} ⊗ {{b,c}}''`.
fn left(table: &Table, a: &[GenId], b: &[GenId], c: &[GenId]) -> T3 {
    let mut out = T3::new();
    for ((u, v), k) in bracket(table, b, c) {
        for ((p, q), l) in bracket(table, a, &u) {
            add(&mut out, (p, q, v.clone()), k * l);
        }
    }
    out
}

/// The double jacobiator with the cyclic leg permutation `x⊗y⊗z ↦ z⊗x⊗y`.
pub fn jacobiator(table: &Table, a: &[GenId], b: &[GenId], c: &[GenId]) -> T3 {
    let mut out = left(table, a, b, c);
    for ((x, y, z), k) in left(table, b, c, a) {
        add(&mut out, (z, x, y), k);
    }
    for ((x, y, z), k) in left(table, c, a, b) {
        add(&mut out, (y, z, x), k);
    }
    clean(out)
}

/// Least rotation of a word.
pub fn necklace_rep(w: &[GenId]) -> Vec<GenId> {
    (0..w.len().max(1))
        .map(|k| cat(&[&w[k.min(w.len())..], &w[..k.min(w.len())]]))
        .min()
        .unwrap_or_default()
}

/// `{w1, w2} = Σ c(a_i, b_j) · a_>i a_<i b_>j b_<j` for constant tables.
pub fn necklace_constant(
    c: &BTreeMap<(GenId, GenId), Rational>,
    a: &[GenId],
    b: &[GenId],
) -> BTreeMap<Vec<GenId>, Rational> {
    let mut out = BTreeMap::new();
    for i in 0..a.len() {
        for j in 0..b.len() {
            if let Some(k) = c.get(&(a[i], b[j])) {
                let w = cat(&[&a[i + 1..], &a[..i], &b[j + 1..], &b[..j]]);
                add(&mut out, necklace_rep(&w), *k);
            }
        }
    }
    clean(out)
}

/// The table of a spec with all degrees zero, both orientations.
pub fn table_of(spec: &doublebracket::bracket::BracketSpec) -> Table {
    let a = spec.alphabet();
    let mut t = Table::new();
    for i in a.ids() {
        for j in a.ids() {
            if let Some(v) = spec.value(i, j) {
                let terms = v
                    .iter()
                    .map(|(legs, c)| (*c, legs[0].0.clone(), legs[1].0.clone()))
                    .collect();
                t.insert((i, j), terms);
            }
        }
    }
    t
}

pub fn t2_of(v: &doublebracket::algebra::Tensor2) -> T2 {
    v.iter()
        .map(|(legs, c)| ((legs[0].0.clone(), legs[1].0.clone()), *c))
        .collect()
}

pub fn t3_of(v: &doublebracket::algebra::Tensor3) -> T3 {
    v.iter()
        .map(|(legs, c)| {
            (
                (legs[0].0.clone(), legs[1].0.clone(), legs[2].0.clone()),
                *c,
            )
        })
        .collect()
}

pub fn word(w: &[GenId]) -> Word {
    Word(w.to_vec())
}
