use markov_deform::arith::{BigInt, BigRational, Mat2, RatFunc};
use markov_deform::bridge::bridge_check;
use markov_deform::castling::{f_of_word, pv_of_fraction, CastlingTuple, Move};
use markov_deform::contfrac::{CFNegative, CFRegular};
use markov_deform::markov::{
    cohn_matrix_classical, eval_word, fricke_check, is_markov, markov_number, q_markov_value,
    verify_q_markov, vieta_move, QMarkovTriple, Slot,
};
use markov_deform::qrat::{a_q, b_q, q_rational_negative, q_rational_regular, QRational};
use markov_deform::words::{word_of_fraction, Word, WordTriple};
use proptest::prelude::*;

fn arb_word(max: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(prop_oneof![Just('a'), Just('b')], 1..=max)
        .prop_map(|v| Word::new(v.into_iter().collect::<String>()).unwrap())
}

fn arb_fraction() -> impl Strategy<Value = BigRational> {
    (1i64..300, 1i64..300).prop_map(|(r, s)| BigRational::new(r.into(), s.into()))
}

/// Slope in `(0, 1)` in lowest terms, small enough to keep words short.
fn arb_slope() -> impl Strategy<Value = BigRational> {
    (2i64..14)
        .prop_flat_map(|s| (1..s, Just(s)))
        .prop_filter("coprime", |(r, s)| num_integer::gcd(*r, *s) == 1)
        .prop_map(|(r, s)| BigRational::new(r.into(), s.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn q_rationals_agree_and_specialise(x in arb_fraction()) {
        let reg = q_rational_regular(&CFRegular::from_rational(&x).unwrap());
        let neg = q_rational_negative(&CFNegative::from_rational(&x).unwrap());
        prop_assert_eq!(&reg, &neg);
        prop_assert_eq!(reg.at_one(), x);
    }

    #[test]
    fn fricke_on_random_words(u in arb_word(10), v in arb_word(10)) {
        let (a, b) = (a_q(), b_q());
        let r = fricke_check(&eval_word(&u, &a, &b), &eval_word(&v, &a, &b)).unwrap();
        prop_assert!(r.holds, "{} {}", u, v);
    }

    #[test]
    fn christoffel_words_carry_markov_data(x in arb_slope()) {
        let w = word_of_fraction(&x).unwrap();
        prop_assert!(w.is_christoffel());
        let m = markov_number(&w).unwrap();
        let h = q_markov_value(&w).unwrap();
        prop_assert_eq!(h.eval_at_one(), m.clone());
        prop_assert!(h.is_palindromic());
        prop_assert_eq!(f_of_word(&w).unwrap().eval(&BigInt::from(3)), m.clone());
        prop_assert!(bridge_check(&w).unwrap().holds);
        prop_assert_eq!(cohn_matrix_classical(&w).trace(), &m * BigInt::from(3));
    }

    #[test]
    fn pv_report_is_markov(x in arb_slope()) {
        let r = pv_of_fraction(&x).unwrap();
        let (a, b, c) = r.label.tuple();
        prop_assert!(is_markov(&a, &b, &c));
        prop_assert!(a <= b && b <= c);
    }

    #[test]
    fn vieta_moves_stay_on_the_surface(path in proptest::collection::vec(any::<bool>(), 0..5),
                                       slot in prop_oneof![Just(Slot::X), Just(Slot::Y), Just(Slot::Z)]) {
        let mut t = WordTriple::root();
        for left in path {
            t = if left { t.left_child() } else { t.right_child() };
        }
        let q = QMarkovTriple::from_words(&t).unwrap();
        let moved = vieta_move(&q, slot);
        prop_assert!(verify_q_markov(&moved).holds);
        prop_assert_eq!(vieta_move(&moved, slot), q);
    }

    #[test]
    fn flat_moves_are_involutions(entries in proptest::collection::vec(1i64..50, 1..4),
                                  dim in 2i64..6, i in 0usize..4) {
        let c = CastlingTuple::new(BigInt::from(dim), entries.iter().map(|&e| e.into()).collect()).unwrap();
        let i = i % c.len();
        let flat = c.apply(Move::Flat(i));
        // dim * prod(others) == f_i lands on zero, which is rejected
        prop_assume!(flat.is_ok());
        let flat = flat.unwrap();
        prop_assert_eq!(flat.apply(Move::Flat(i)).unwrap(), c.clone());
        let up = c.apply(Move::Up).unwrap();
        prop_assert_eq!(up.len(), c.len() + 1);
    }
}

#[test]
fn generators_are_unimodular() {
    let one = RatFunc::from_i64(1);
    for m in [a_q(), b_q()] {
        let m: Mat2<RatFunc> = m.map(|e| RatFunc::from(e.clone()));
        assert_eq!(m.det(), one);
    }
}

#[test]
fn serde_round_trips() {
    let x = BigRational::new(7.into(), 5.into());
    let q = QRational::from_rational(&x).unwrap();
    let json = serde_json::to_string(&q).unwrap();
    assert_eq!(serde_json::from_str::<QRational>(&json).unwrap(), q);

    let t = QMarkovTriple::from_words(&WordTriple::root()).unwrap();
    let json = serde_json::to_string(&t).unwrap();
    assert_eq!(serde_json::from_str::<QMarkovTriple>(&json).unwrap(), t);

    let r = pv_of_fraction(&BigRational::new(8.into(), 13.into())).unwrap();
    let back: markov_deform::castling::PvReport =
        serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(back, r);
}

#[test]
fn errata_are_stable() {
    let a = markov_deform::errata::errata().unwrap();
    let b = markov_deform::errata::errata().unwrap();
    assert_eq!(a, b);
    assert!(a.iter().any(|e| e.id == "markov-7561"));
}
