#![allow(dead_code)]

pub mod oracle;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

use doublebracket::algebra::{Alphabet, Combination, GenId, Generator, Rational, Tensor2};
use doublebracket::bracket::engine::Engine;
use doublebracket::bracket::BracketSpec;
use doublebracket::calculus::{d_legwise, koszul_bracket, OmegaPresentation};
use doublebracket::cli::{parse, parse_tensor2, Document};
use doublebracket::free::{AssocProduct, DlrData, DlrEval};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap()
}

pub fn fixture(name: &str) -> Document {
    parse(&fixture_text(name)).unwrap()
}

/// Every fixture that parses.
pub fn valid_fixtures() -> Vec<&'static str> {
    vec![
        "f1.dbr",
        "f2.dbr",
        "fail.dbr",
        "graded.dbr",
        "koszul_f2.dbr",
        "idempotent.dbr",
        "broken_anchor.dbr",
        "broken_derivation.dbr",
        "zero.dbr",
    ]
}

pub fn f1() -> BracketSpec {
    fixture("f1.dbr").bracket("B").unwrap().clone()
}

pub fn f2() -> BracketSpec {
    fixture("f2.dbr").bracket("B").unwrap().clone()
}

pub fn dlr(file: &str) -> DlrData {
    let doc = fixture(file);
    doc.blocks
        .iter()
        .find_map(|b| match b {
            doublebracket::cli::Block::Dlr { data, .. } => Some(data.clone()),
            _ => None,
        })
        .unwrap()
}

pub fn base(gens: &[(&str, i64)]) -> Arc<Alphabet> {
    Arc::new(Alphabet::base(gens).unwrap())
}

pub fn t2(a: &Alphabet, s: &str) -> Tensor2 {
    parse_tensor2(a, s).unwrap()
}

pub fn g(a: &Alphabet, name: &str) -> GenId {
    a.lookup(name).unwrap()
}

pub fn spec(a: &Arc<Alphabet>, r: i64, entries: &[(&str, &str, &str)]) -> BracketSpec {
    let e: Vec<_> = entries
        .iter()
        .map(|(i, j, v)| ((g(a, i), g(a, j)), t2(a, v)))
        .collect();
    BracketSpec::new(a.clone(), r, e).unwrap()
}

pub fn module_alphabet(gens: &[(&str, i64)]) -> Arc<Alphabet> {
    Arc::new(Alphabet::new(gens.iter().map(|(n, d)| Generator::module(n, *d)).collect()).unwrap())
}

pub type Prod = BTreeMap<(usize, usize), BTreeMap<usize, i64>>;

/// Direct check of `(ab)c = a(bc)` on basis triples.
pub fn associative_oracle(n: usize, f: &Prod) -> bool {
    let mul = |x: &BTreeMap<usize, i64>, y: &BTreeMap<usize, i64>| {
        let mut out: BTreeMap<usize, i64> = BTreeMap::new();
        for (&i, &c) in x {
            for (&j, &d) in y {
                for (&k, &e) in f.get(&(i, j)).into_iter().flatten() {
                    *out.entry(k).or_default() += c * d * e;
                }
            }
        }
        out.retain(|_, v| *v != 0);
        out
    };
    let e = |i: usize| BTreeMap::from([(i, 1)]);
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| mul(&mul(&e(a), &e(b)), &e(c)) == mul(&e(a), &mul(&e(b), &e(c))))
        })
    })
}

pub fn product(names: &[&str], table: &Prod) -> AssocProduct {
    let a = module_alphabet(&names.iter().map(|n| (*n, 0)).collect::<Vec<_>>());
    let entries = table.iter().map(|(&(i, j), v)| {
        let mut c = Combination::zero();
        for (&k, &e) in v {
            c.add_term(GenId(k as u16), Rational::from_integer(e));
        }
        ((GenId(i as u16), GenId(j as u16)), c)
    });
    AssocProduct::new(a, 0, entries).unwrap()
}

pub fn products() -> Vec<(Vec<&'static str>, Prod)> {
    let p = |e: &[((usize, usize), usize)]| -> Prod {
        e.iter()
            .map(|&(k, v)| (k, BTreeMap::from([(v, 1)])))
            .collect()
    };
    vec![
        (vec!["e"], p(&[((0, 0), 0)])),
        // e11, e12 of 2x2 matrices
        (vec!["a", "b"], p(&[((0, 0), 0), ((0, 1), 1)])),
        (vec!["e", "g"], p(&[((0, 0), 0), ((0, 1), 0), ((1, 0), 1)])),
        (
            vec!["e", "g"],
            p(&[((0, 0), 0), ((0, 1), 1), ((1, 0), 1), ((1, 1), 0)]),
        ),
    ]
}

/// `(d⊗1 + 1⊗d){{a, b}}` against `{{da, db}}` and `ρ(da, b)` against `{{a, b}}`.
pub fn defining_square_holds(spec: &BracketSpec, max_len: usize) -> bool {
    let k = koszul_bracket(spec).unwrap();
    let om = OmegaPresentation::new(spec.alphabet()).unwrap();
    let e = Engine::new(spec);
    let ev = DlrEval::new(&k);
    let words = spec.alphabet().words_up_to(max_len);
    words.iter().all(|a| {
        let da = om.d_word(a);
        words.iter().all(|b| {
            let db = om.d_word(b);
            let value = e.words(a, b);
            let mut lhs = Tensor2::zero();
            let mut anchor = Tensor2::zero();
            for (n, c) in da.iter() {
                for (n2, c2) in db.iter() {
                    lhs.add_scaled(&ev.bracket(n, n2), *c * *c2);
                }
                if !b.is_unit() {
                    anchor.add_scaled(&ev.anchor(n, b), *c);
                }
            }
            lhs == d_legwise(&om, &value) && anchor == value
        })
    })
}
