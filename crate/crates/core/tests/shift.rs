mod common;

use common::*;
use doublebracket::algebra::{Rational, Word};
use doublebracket::calculus::koszul_bracket;
use doublebracket::free::{dlr_check, DlrData, DlrEval};
use doublebracket::shift::{shift_dlr, verify_shift_equivalence, ShiftedDLR};
use proptest::prelude::*;

const DELTAS: [i64; 4] = [-2, -1, 1, 2];

fn graded_koszul() -> Vec<DlrData> {
    let odd = base(&[("x", 1)]);
    vec![
        koszul_bracket(&fixture("graded.dbr").bracket("B").unwrap().clone()).unwrap(),
        koszul_bracket(&spec(&odd, -1, &[("x", "x", "x (*) 1 - 1 (*) x")])).unwrap(),
    ]
}

fn all_data() -> Vec<DlrData> {
    let mut v: Vec<DlrData> = [
        "koszul_f2.dbr",
        "idempotent.dbr",
        "zero.dbr",
        "broken_anchor.dbr",
        "broken_derivation.dbr",
    ]
    .iter()
    .map(|f| dlr(f))
    .collect();
    v.extend(graded_koszul());
    v
}

#[test]
fn zero_delta_is_the_identity() {
    for d in all_data() {
        assert_eq!(shift_dlr(&d, 0), d);
    }
}

#[test]
fn shifting_back_recovers_the_data() {
    for d in all_data() {
        for delta in DELTAS {
            let s = shift_dlr(&d, delta);
            assert_eq!(shift_dlr(&s, -delta), d);
            let audited = ShiftedDLR::new(d.clone()).shift(delta);
            assert_eq!(audited.r, d.shift() - delta);
            assert_eq!(audited.data, s);
        }
    }
}

/// `Σ^r m` keeps its degree, every entry still has degree inputs plus
/// shift, and the words of every entry are unchanged.
#[test]
fn degrees_are_conserved() {
    for d in all_data() {
        for delta in DELTAS {
            let s = shift_dlr(&d, delta);
            let (t0, t1) = (d.bimodule().total(), s.bimodule().total());
            for m in d.bimodule().module_ids() {
                assert_eq!(t1.degree(m) + s.shift(), t0.degree(m) + d.shift());
            }
            for b in d.bimodule().base_ids() {
                assert_eq!(t1.degree(b), t0.degree(b));
            }
            let entries = |x: &DlrData| -> Vec<((_, _), doublebracket::algebra::Tensor2)> {
                x.anchor()
                    .iter()
                    .map(|(k, v)| (*k, v.clone()))
                    .chain(x.mbracket().iter().map(|(k, v)| (*k, v.total())))
                    .collect()
            };
            let (old, new) = (entries(&d), entries(&s));
            assert_eq!(old.len(), new.len());
            for (((i, j), v0), (k, v1)) in old.iter().zip(&new) {
                assert_eq!((*i, *j), *k);
                assert_eq!(v0.keys().collect::<Vec<_>>(), v1.keys().collect::<Vec<_>>());
                for legs in v1.keys() {
                    let found = t1.word_degree(&legs[0]) + t1.word_degree(&legs[1]);
                    assert_eq!(found, t1.degree(*i) + t1.degree(*j) + s.shift());
                }
            }
        }
    }
}

#[test]
fn verdicts_transport() {
    for d in all_data() {
        let before = dlr_check(&d, 3).verdicts();
        for delta in DELTAS {
            assert_eq!(dlr_check(&shift_dlr(&d, delta), 3).verdicts(), before);
            let report = verify_shift_equivalence(&d, delta, 3);
            assert!(report.passed(), "{}", report.render_text(false));
        }
    }
}

#[test]
fn idempotent_becomes_a_degree_minus_one_product() {
    let d = dlr("idempotent.dbr");
    let s = shift_dlr(&d, 1);
    let t = s.bimodule().total().clone();
    let e = g(&t, "e");
    assert_eq!(t.degree(e), 1);
    assert_eq!(s.shift(), -1);
    let v = &s.mbracket()[&(e, e)];
    assert_eq!(v.l, t2(&t, "e (*) 1"));
    assert_eq!(v.r, t2(&t, "-1 * 1 (*) e"));
    assert!(dlr_check(&s, 3).passed());
}

#[test]
fn flipped_and_dropped_fail_on_both_sides() {
    for (file, axiom) in [
        ("broken_anchor.dbr", "c:anchor-jacobi"),
        ("broken_derivation.dbr", "a:antisymmetry"),
    ] {
        let d = dlr(file);
        for delta in DELTAS {
            let s = shift_dlr(&d, delta);
            assert!(
                !dlr_check(&s, 3).entry(axiom).unwrap().passed,
                "{file} {delta}"
            );
        }
    }
}

fn parity(x: i64) -> Rational {
    if x.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// The shifted structure, evaluated on any weight-one words, is the original
/// one transported along `p·m·q ↦ (-1)^{δ|p|} Σ^δ(p m q)`, with `Σ^δ` moved
/// to the front of each output in the order the structure maps dictate.
#[test]
fn shift_is_natural_on_all_words() {
    for d in graded_koszul().into_iter().chain([dlr("koszul_f2.dbr")]) {
        let b = d.bimodule().clone();
        let t = b.total().clone();
        let r = d.shift();
        let prefix = |w: &Word| t.word_degree(&b.decompose(w).unwrap().0);
        let mods = b.module_words(3);
        let bases = b.base_words(2);
        for delta in DELTAS {
            let s = shift_dlr(&d, delta);
            let (e0, e1) = (DlrEval::new(&d), DlrEval::new(&s));
            for n in &mods {
                for a in &bases {
                    let sign = parity(delta * (r + t.word_degree(n) + prefix(n)));
                    assert_eq!(e1.anchor(n, a), e0.anchor(n, a).scale(sign));
                }
                for n2 in &mods {
                    let mut expected = doublebracket::algebra::Tensor2::zero();
                    for (legs, c) in e0.bracket(n, n2).iter() {
                        let out = if t.weight(&legs[0]) == 1 {
                            prefix(&legs[0])
                        } else {
                            t.word_degree(&legs[0]) + prefix(&legs[1])
                        };
                        let sign = parity(delta * (prefix(n) + prefix(n2) + out));
                        expected.add_term(legs.clone(), *c * sign);
                    }
                    assert_eq!(e1.bracket(n, n2), expected);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn composite_shifts_add(a in -3i64..=3, b in -3i64..=3) {
        for d in graded_koszul() {
            prop_assert_eq!(shift_dlr(&shift_dlr(&d, a), b), shift_dlr(&d, a + b));
        }
    }
}
