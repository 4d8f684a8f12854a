use std::sync::Arc;

use doublebracket::algebra::{
    cyclic_normalize, koszul_sign, poly_mul, Alphabet, Combination, NCPoly, Rational, Sign, Word,
};
use doublebracket::cli::parse_poly;
use doublebracket::Error;
use proptest::prelude::*;

fn graded() -> Arc<Alphabet> {
    Arc::new(Alphabet::base(&[("x", 0), ("y", 1), ("z", 2)]).unwrap())
}

fn p(a: &Arc<Alphabet>, s: &str) -> NCPoly {
    parse_poly(a, s).unwrap()
}

#[test]
fn products_of_examples() {
    let a = Arc::new(Alphabet::base(&[("x", 0), ("y", 0)]).unwrap());
    assert_eq!(poly_mul(&p(&a, "x"), &p(&a, "y")).unwrap(), p(&a, "x.y"));
    assert_eq!(
        poly_mul(&p(&a, "1"), &p(&a, "x + 2 * y")).unwrap(),
        p(&a, "x + 2 * y")
    );
    assert_eq!(
        poly_mul(&p(&a, "x + y"), &p(&a, "x - y")).unwrap(),
        p(&a, "x.x - x.y + y.x - y.y")
    );
}

#[test]
fn mixing_alphabets_is_an_error() {
    let a = Arc::new(Alphabet::base(&[("x", 0)]).unwrap());
    let b = Arc::new(Alphabet::base(&[("x", 1)]).unwrap());
    assert!(matches!(
        poly_mul(&p(&a, "x"), &p(&b, "x")),
        Err(Error::IncompatibleAlgebras)
    ));
}

#[test]
fn sign_examples() {
    assert_eq!(koszul_sign(&[2], &[3]), Sign::Plus);
    assert_eq!(koszul_sign(&[1], &[1]), Sign::Minus);
    assert_eq!(koszul_sign(&[1, 1], &[1]), Sign::Plus);
    assert_eq!(koszul_sign(&[-1], &[3]), Sign::Minus);
}

#[test]
fn cyclic_examples() {
    let a = Alphabet::base(&[("x", 0), ("y", 0), ("z", 0)]).unwrap();
    let w = |s: &str| a.parse_word(s).unwrap();
    assert_eq!(
        cyclic_normalize(&a, &w("y.x")).unwrap(),
        (w("x.y"), Rational::one())
    );
    assert_eq!(
        cyclic_normalize(&a, &w("z.y.x")).unwrap(),
        (w("x.z.y"), Rational::one())
    );
    let odd = Alphabet::base(&[("a", 1), ("b", 1)]).unwrap();
    let (n, s) = cyclic_normalize(&odd, &odd.parse_word("b.a").unwrap()).unwrap();
    assert_eq!(odd.render(&n), "a.b");
    assert_eq!(s, -Rational::one());
    // a.a with a odd equals minus itself under rotation
    let (_, s) = cyclic_normalize(&odd, &odd.parse_word("a.a").unwrap()).unwrap();
    assert!(s.is_zero());
    assert!(matches!(
        cyclic_normalize(&a, &Word::unit()),
        Err(Error::UnitHasNoCyclicClass)
    ));
}

#[test]
fn rationals_are_exact() {
    let third = Rational::new(1, 3).unwrap();
    assert_eq!(third + third + third, Rational::one());
    assert_eq!("-4/6".parse::<Rational>().unwrap().to_string(), "-2/3");
    assert!(matches!(Rational::new(1, 0), Err(Error::ZeroDenominator)));
}

fn word_strategy(n: u16, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..n, 0..=max)
        .prop_map(|v| Word(v.into_iter().map(doublebracket::algebra::GenId).collect()))
}

fn poly_strategy(a: Arc<Alphabet>) -> impl Strategy<Value = NCPoly> {
    let n = a.len() as u16;
    prop::collection::vec((word_strategy(n, 3), -3i64..=3), 0..4).prop_map(move |terms| {
        let mut c = Combination::zero();
        for (w, k) in terms {
            c.add_term(w, Rational::from_integer(k));
        }
        NCPoly::from_terms(&a, c)
    })
}

proptest! {
    #[test]
    fn poly_mul_is_associative_and_unital(
        x in poly_strategy(graded()),
        y in poly_strategy(graded()),
        z in poly_strategy(graded()),
    ) {
        let a = x.alphabet().clone();
        let xy_z = poly_mul(&poly_mul(&x, &y).unwrap(), &z).unwrap();
        let x_yz = poly_mul(&x, &poly_mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(xy_z, x_yz);
        prop_assert_eq!(poly_mul(&NCPoly::one(&a), &x).unwrap(), x.clone());
        prop_assert_eq!(poly_mul(&x, &NCPoly::one(&a)).unwrap(), x);
    }

    #[test]
    fn degrees_add_under_multiplication(u in word_strategy(3, 4), v in word_strategy(3, 4)) {
        let a = graded();
        let prod = poly_mul(&NCPoly::word(&a, u.clone()), &NCPoly::word(&a, v.clone())).unwrap();
        prop_assert_eq!(
            prod.homogeneous_degree(),
            Some(a.word_degree(&u) + a.word_degree(&v))
        );
    }

    #[test]
    fn swapping_twice_is_trivial(
        m in prop::collection::vec(-5i64..5, 0..4),
        q in prop::collection::vec(-5i64..5, 0..4),
    ) {
        prop_assert_eq!(koszul_sign(&m, &q).times(koszul_sign(&q, &m)), Sign::Plus);
    }

    #[test]
    fn cyclic_normal_forms_are_fixed(w in word_strategy(3, 6)) {
        prop_assume!(!w.is_unit());
        let a = graded();
        let (n, s) = cyclic_normalize(&a, &w).unwrap();
        prop_assume!(!s.is_zero());
        let (n2, s2) = cyclic_normalize(&a, &n).unwrap();
        prop_assert_eq!(n2, n.clone());
        prop_assert_eq!(s2, Rational::one());
        // n is a rotation of w
        let rotations: Vec<Word> = (0..w.len())
            .map(|k| { let (l, r) = w.split_at(k); r.concat(&l) })
            .collect();
        prop_assert!(rotations.contains(&n));
    }

    #[test]
    fn rational_text_round_trip(n in -1000i64..1000, d in 1i64..50) {
        let r = Rational::new(n, d).unwrap();
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }
}
