//! Passing between the two deformations: `f_w((1 + q + q^2)/q) = q h_w(q)`.

use crate::arith::{LaurentPoly, RatFunc};
use crate::castling::f_of_word;
use crate::markov::{q_markov_constant, q_markov_value, QMarkovTriple, Witness};
use crate::tree::word_triples;
use crate::words::Word;
use crate::Result;
use rayon::prelude::*;
use std::collections::BTreeSet;

/// `s = q^-1 [3]_q = q^-1 + 1 + q`.
pub fn bridge_point() -> LaurentPoly {
    LaurentPoly::from_i64s(-1, &[1, 1, 1])
}

/// Compares `f_w(s)` with `q h_w(q)` in the fraction field.
pub fn bridge_check(w: &Word) -> Result<Witness<RatFunc>> {
    let f = f_of_word(w)?;
    let lhs = RatFunc::compose_intpoly(&f, &RatFunc::from_laurent(bridge_point()));
    let rhs = RatFunc::from_laurent(q_markov_value(w)?.shift(1));
    Ok(Witness::compare(lhs, rhs))
}

/// Distinct words appearing in the triple tree to `depth`, in sorted order.
pub fn tree_words(depth: usize) -> Vec<Word> {
    let set: BTreeSet<Word> = word_triples(depth)
        .into_iter()
        .flat_map(|t| [t.left, t.middle, t.right])
        .collect();
    set.into_iter().collect()
}

/// `bridge_check` over every word of the tree to `depth`; returns the
/// failures (empty when all pass).
pub fn bridge_check_tree(depth: usize) -> Result<Vec<(Word, Witness<RatFunc>)>> {
    let checks: Vec<_> = tree_words(depth)
        .into_par_iter()
        .map(|w| bridge_check(&w).map(|r| (w, r)))
        .collect::<Result<_>>()?;
    Ok(checks.into_iter().filter(|(_, r)| !r.holds).collect())
}

/// With `X = q h_x` etc., `X^2 + Y^2 + Z^2 + (s - 3) = s X Y Z`.
pub fn transported_equation(t: &QMarkovTriple) -> Witness<LaurentPoly> {
    let s = bridge_point();
    let (x, y, z) = (t.x.shift(1), t.y.shift(1), t.z.shift(1));
    let lhs = &(&(&(&x * &x) + &(&y * &y)) + &(&z * &z)) + &(&s - &LaurentPoly::constant(3));
    let rhs = &(&(&s * &x) * &y) * &z;
    Witness::compare(lhs, rhs)
}

/// `q^2 (q-1)^2/q^3 = s - 3`.
pub fn constant_identity() -> bool {
    q_markov_constant().shift(2) == &bridge_point() - &LaurentPoly::constant(3)
}

/// The transported equation on every triple to `depth`, plus the constant
/// identity.
pub fn equation_transport_check(depth: usize) -> Result<bool> {
    let all = word_triples(depth)
        .par_iter()
        .map(|t| QMarkovTriple::from_words(t).map(|q| transported_equation(&q).holds))
        .collect::<Result<Vec<_>>>()?;
    Ok(constant_identity() && all.into_iter().all(|b| b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::BigInt;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn worked_examples() {
        let r = bridge_check(&w("a^2b")).unwrap();
        assert!(r.holds);
        let expected = LaurentPoly::from_i64s(-3, &[1, 2, 2, 3, 2, 2, 1]);
        assert_eq!(r.rhs, RatFunc::from_laurent(expected));
        assert!(bridge_check(&w("a^2bab")).unwrap().holds);
        let a = bridge_check(&w("a")).unwrap();
        assert_eq!(a.lhs, RatFunc::from_i64(1));
        assert!(a.holds);
    }

    #[test]
    fn whole_tree() {
        let words = tree_words(6);
        assert_eq!(words.len(), 65);
        assert!(bridge_check_tree(6).unwrap().is_empty());
        let three = BigInt::from(3);
        for word in &words {
            let f = f_of_word(word).unwrap().eval(&three);
            let h = q_markov_value(word).unwrap().shift(1).eval_at_one();
            assert_eq!(f, h, "{word}");
        }
    }

    #[test]
    fn transport() {
        assert!(constant_identity());
        assert!(equation_transport_check(5).unwrap());
        let bad = QMarkovTriple::new(
            LaurentPoly::constant(1),
            LaurentPoly::constant(1),
            LaurentPoly::constant(1),
        );
        assert!(!transported_equation(&bad).holds);
    }
}
