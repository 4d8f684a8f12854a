//! Brute-force axiom checks over all words up to a length bound.

use std::time::Instant;

use super::engine::{leibniz_residual, Engine};
use super::spec::BracketSpec;
use crate::algebra::cells::{chain_to_tensor, tensor_to_chain};
use crate::algebra::{render_tensor, Alphabet, Combination, Tensor3, Word};
use crate::report::{AxiomEntry, CheckReport, Violation};

pub(crate) fn render_input(alphabet: &Alphabet, words: &[&Word]) -> String {
    let parts: Vec<String> = words.iter().map(|w| alphabet.render(w)).collect();
    format!("({})", parts.join(", "))
}

pub(crate) fn pairs(words: &[Word]) -> Vec<(usize, usize)> {
    let n = words.len();
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
}

pub(crate) fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .collect()
}

pub fn antisymmetry_entry(engine: &Engine, max_len: usize) -> AxiomEntry {
    let alphabet = engine.spec().alphabet();
    let words = alphabet.words_up_to(max_len);
    AxiomEntry::run("antisymmetry", &pairs(&words), |&(i, j)| {
        let (a, b) = (&words[i], &words[j]);
        let residual = engine.words(a, b).minus(&engine.antisymmetric_image(a, b));
        (!residual.is_zero()).then(|| Violation {
            input: render_input(alphabet, &[a, b]),
            residual: render_tensor(alphabet, &residual),
        })
    })
}

/// The double Jacobi entry, and the cyclic-stability entry computed from the
/// same jacobiators.
pub fn double_jacobi_entries(engine: &Engine, max_len: usize) -> Vec<AxiomEntry> {
    use rayon::prelude::*;
    let alphabet = engine.spec().alphabet();
    let words = alphabet.words_up_to(max_len);
    let n = words.len();
    let cases = triples(n);
    let values: Vec<Tensor3> = cases
        .par_iter()
        .map(|&(i, j, k)| engine.jacobiator_words(&words[i], &words[j], &words[k]))
        .collect();
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let dj = AxiomEntry::run("double-jacobi", &cases, |&(i, j, k)| {
        let v = &values[idx(i, j, k)];
        (!v.is_zero()).then(|| Violation {
            input: render_input(alphabet, &[&words[i], &words[j], &words[k]]),
            residual: render_tensor(alphabet, v),
        })
    });
    let cells = engine.cells();
    let r = engine.spec().shift();
    let z3 = AxiomEntry::run("z3-stability", &cases, |&(i, j, k)| {
        let (a, b, c) = (&words[i], &words[j], &words[k]);
        let here = tensor_to_chain(r, &values[idx(i, j, k)]);
        let rotated_out = chain_to_tensor::<3>(&cells.tau(&here, 1, 2, 1));
        let rotated_in = values[idx(k, i, j)].scale(engine.rotation_sign(a, b, c));
        let residual = rotated_out.minus(&rotated_in);
        (!residual.is_zero()).then(|| Violation {
            input: render_input(alphabet, &[a, b, c]),
            residual: render_tensor(alphabet, &residual),
        })
    });
    vec![dj, z3]
}

pub fn left_leibniz_entry(engine: &Engine, max_len: usize) -> AxiomEntry {
    let alphabet = engine.spec().alphabet();
    let words = alphabet.words_up_to(max_len);
    let cells = engine.cells();
    let r = engine.spec().shift();
    let g = engine.g();
    AxiomEntry::run("left-leibniz", &triples(words.len()), |&(i, j, k)| {
        let (a, b, c) = (&words[i], &words[j], &words[k]);
        let res = leibniz_residual(&cells, r, a, b, c, &g);
        (!res.is_zero()).then(|| Violation {
            input: render_input(alphabet, &[a, b, c]),
            residual: render_poly_chain(alphabet, &res),
        })
    })
}

pub(crate) fn render_poly_chain(alphabet: &Alphabet, ch: &crate::algebra::Chain) -> String {
    let t: Combination<[Word; 1]> = chain_to_tensor::<1>(ch);
    render_tensor(alphabet, &t)
}

pub fn check_antisymmetry(spec: &BracketSpec, max_len: usize) -> CheckReport {
    let start = Instant::now();
    let engine = Engine::new(spec);
    CheckReport::with_entries(
        "antisymmetry",
        max_len,
        vec![antisymmetry_entry(&engine, max_len)],
    )
    .timed(start)
}

pub fn check_double_jacobi(spec: &BracketSpec, max_len: usize) -> CheckReport {
    let start = Instant::now();
    let engine = Engine::new(spec);
    CheckReport::with_entries(
        "double-jacobi",
        max_len,
        double_jacobi_entries(&engine, max_len),
    )
    .timed(start)
}

pub fn check_left_leibniz(spec: &BracketSpec, max_len: usize) -> CheckReport {
    let start = Instant::now();
    let engine = Engine::new(spec);
    CheckReport::with_entries(
        "left-leibniz",
        max_len,
        vec![left_leibniz_entry(&engine, max_len)],
    )
    .timed(start)
}

/// Antisymmetry and double Jacobi with a shared cache.
pub fn check_double_poisson(spec: &BracketSpec, max_len: usize) -> CheckReport {
    let start = Instant::now();
    let engine = Engine::new(spec);
    let mut entries = vec![antisymmetry_entry(&engine, max_len)];
    entries.extend(double_jacobi_entries(&engine, max_len));
    CheckReport::with_entries("double-poisson", max_len, entries).timed(start)
}

/// Antisymmetry, double Jacobi and the left Leibniz identity.
pub fn check_all(spec: &BracketSpec, max_len: usize) -> CheckReport {
    let start = Instant::now();
    let engine = Engine::new(spec);
    let mut entries = vec![antisymmetry_entry(&engine, max_len)];
    entries.extend(double_jacobi_entries(&engine, max_len));
    entries.push(left_leibniz_entry(&engine, max_len));
    CheckReport::with_entries("bracket", max_len, entries).timed(start)
}
