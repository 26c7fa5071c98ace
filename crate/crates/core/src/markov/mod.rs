//! Classical and q-deformed Markov triples from Cohn matrices.

mod alt;
mod fixed_point;

pub use alt::{
    alt_deformation_2_search, verify_alt_deformation_1, verify_alt_deformation_2,
    verify_alt_deformation_2_corrected, AltWitness, ALT2_WINDOW,
};
pub use fixed_point::{fixed_point, period_tag, FixedPoint, QuadraticSurd, SurdValue};

use crate::arith::{BigInt, LaurentPoly, Mat2, Ring};
use crate::qrat::{a_classical, a_q, b_classical, b_q};
use crate::tree::{self, TripleNode};
use crate::words::{Word, WordTriple};
use crate::{Error, Result};
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Which pair of generators a word is evaluated at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    Classical,
    Q,
}

/// Substitutes `a -> a_mat`, `b -> b_mat` and multiplies left to right.
pub fn eval_word<R: Ring>(w: &Word, a_mat: &Mat2<R>, b_mat: &Mat2<R>) -> Mat2<R> {
    w.letters().fold(Mat2::identity(), |acc, c| {
        acc.mul(if c == 'a' { a_mat } else { b_mat })
    })
}

/// `w(A, B)` with `A = [[2,1],[1,1]]`, `B = [[5,2],[2,1]]`.
pub fn cohn_matrix_classical(w: &Word) -> Mat2<BigInt> {
    eval_word(w, &a_classical(), &b_classical())
}

/// `w(A_q, B_q)`.
pub fn cohn_matrix_q(w: &Word) -> Mat2<LaurentPoly> {
    eval_word(w, &a_q(), &b_q())
}

/// Matrices of a word triple; `m12 = m1 * m2`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CohnTriple<R> {
    pub m1: Mat2<R>,
    pub m12: Mat2<R>,
    pub m2: Mat2<R>,
    pub words: WordTriple,
}

impl CohnTriple<BigInt> {
    pub fn classical(t: &WordTriple) -> Self {
        let m1 = cohn_matrix_classical(&t.left);
        let m2 = cohn_matrix_classical(&t.right);
        CohnTriple {
            m12: m1.mul(&m2),
            m1,
            m2,
            words: t.clone(),
        }
    }
}

impl CohnTriple<LaurentPoly> {
    pub fn q(t: &WordTriple) -> Self {
        let m1 = cohn_matrix_q(&t.left);
        let m2 = cohn_matrix_q(&t.right);
        CohnTriple {
            m12: m1.mul(&m2),
            m1,
            m2,
            words: t.clone(),
        }
    }
}

fn trace_over_three(m: &Mat2<BigInt>) -> Result<BigInt> {
    let tr = m.trace();
    let (q, r) = tr.div_rem(&BigInt::from(3));
    if !Zero::is_zero(&r) {
        return Err(Error::NotDivisible {
            dividend: tr.to_string(),
            divisor: "3".into(),
        });
    }
    Ok(q)
}

/// Classical Markov number of a word: `Tr(w(A, B)) / 3`.
pub fn markov_number(w: &Word) -> Result<BigInt> {
    trace_over_three(&cohn_matrix_classical(w))
}

/// `(Tr(w)/3, Tr(ww')/3, Tr(w')/3)` for a word triple.
pub fn markov_triple(t: &WordTriple) -> Result<(BigInt, BigInt, BigInt)> {
    let c = CohnTriple::classical(t);
    Ok((
        trace_over_three(&c.m1)?,
        trace_over_three(&c.m12)?,
        trace_over_three(&c.m2)?,
    ))
}

pub fn is_markov(x: &BigInt, y: &BigInt, z: &BigInt) -> bool {
    x * x + y * y + z * z == BigInt::from(3) * x * y * z
}

/// `[3]_q = 1 + q + q^2`.
pub fn q_three() -> LaurentPoly {
    LaurentPoly::q_int(3)
}

/// `(q - 1)^2 / q^3`.
pub fn q_markov_constant() -> LaurentPoly {
    LaurentPoly::from_i64s(-3, &[1, -2, 1])
}

/// `h_w(q) = Tr(w(A_q, B_q)) / [3]_q`, by exact division.
pub fn q_markov_value(w: &Word) -> Result<LaurentPoly> {
    q_markov_value_of(&cohn_matrix_q(w))
}

/// `Tr(m) / [3]_q`.
pub fn q_markov_value_of(m: &Mat2<LaurentPoly>) -> Result<LaurentPoly> {
    m.trace().divexact(&q_three())
}

/// `q * m12 - (q - 1) * m22`: the entry form of `h_w` for a q-Cohn matrix.
pub fn entry_form(m: &Mat2<LaurentPoly>) -> LaurentPoly {
    let q = LaurentPoly::q();
    let q_minus_one = LaurentPoly::from_i64s(0, &[-1, 1]);
    &(&q * &m.a12) - &(&q_minus_one * &m.a22)
}

/// `m12 - (q - 1) * m22`, the entry form without the factor `q` on `m12`;
/// kept to show it does not equal `h_w`.
pub fn entry_form_unscaled(m: &Mat2<LaurentPoly>) -> LaurentPoly {
    let q_minus_one = LaurentPoly::from_i64s(0, &[-1, 1]);
    &m.a12 - &(&q_minus_one * &m.a22)
}

/// `(h_w, h_{ww'}, h_{w'})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QMarkovTriple {
    pub x: LaurentPoly,
    pub y: LaurentPoly,
    pub z: LaurentPoly,
}

impl QMarkovTriple {
    pub fn new(x: LaurentPoly, y: LaurentPoly, z: LaurentPoly) -> Self {
        QMarkovTriple { x, y, z }
    }

    pub fn from_words(t: &WordTriple) -> Result<Self> {
        let c = CohnTriple::q(t);
        Ok(QMarkovTriple {
            x: q_markov_value_of(&c.m1)?,
            y: q_markov_value_of(&c.m12)?,
            z: q_markov_value_of(&c.m2)?,
        })
    }

    pub fn at_one(&self) -> (BigInt, BigInt, BigInt) {
        (
            self.x.eval_at_one(),
            self.y.eval_at_one(),
            self.z.eval_at_one(),
        )
    }
}

/// Outcome of an exact identity check: the residual `lhs - rhs` is zero
/// exactly when the identity holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness<T> {
    pub holds: bool,
    pub lhs: T,
    pub rhs: T,
    pub residual: T,
}

impl<T: Ring> Witness<T> {
    pub fn compare(lhs: T, rhs: T) -> Self {
        let residual = lhs.sub_ref(&rhs);
        Witness {
            holds: residual.is_zero(),
            lhs,
            rhs,
            residual,
        }
    }
}

/// `x^2 + y^2 + z^2 + (q-1)^2/q^3 = [3]_q x y z`.
pub fn verify_q_markov(t: &QMarkovTriple) -> Witness<LaurentPoly> {
    let (x, y, z) = (&t.x, &t.y, &t.z);
    let lhs = &(&(&(x * x) + &(y * y)) + &(z * z)) + &q_markov_constant();
    let rhs = &(&(&q_three() * x) * y) * z;
    Witness::compare(lhs, rhs)
}

/// Trace form: with `X = [3]_q x` etc., `X^2 + Y^2 + Z^2 + (q-1)^2 [3]_q^2 / q^3 = X Y Z`.
pub fn verify_q_markov_scaled(t: &QMarkovTriple) -> Witness<LaurentPoly> {
    let k = q_three();
    let (x, y, z) = (&k * &t.x, &k * &t.y, &k * &t.z);
    let lhs = &(&(&(&x * &x) + &(&y * &y)) + &(&z * &z)) + &(&(&k * &k) * &q_markov_constant());
    let rhs = &(&x * &y) * &z;
    Witness::compare(lhs, rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Slot {
    X,
    Y,
    Z,
}

/// Replaces one slot by `[3]_q * (product of the other two) - slot`.
pub fn vieta_move(t: &QMarkovTriple, slot: Slot) -> QMarkovTriple {
    let k = q_three();
    let flip = |v: &LaurentPoly, a: &LaurentPoly, b: &LaurentPoly| &(&(&k * a) * b) - v;
    let mut out = t.clone();
    match slot {
        Slot::X => out.x = flip(&t.x, &t.y, &t.z),
        Slot::Y => out.y = flip(&t.y, &t.x, &t.z),
        Slot::Z => out.z = flip(&t.z, &t.x, &t.y),
    }
    out
}

/// `-(q-1)^2 [3]_q^2 / q^3`.
pub fn commutator_target() -> LaurentPoly {
    let k = q_three();
    -&(&(&k * &k) * &q_markov_constant())
}

/// `Tr(M N M^-1 N^-1) + 2 = -(q-1)^2 [3]_q^2 / q^3` for the outer matrices.
pub fn commutator_trace_check(t: &CohnTriple<LaurentPoly>) -> Result<Witness<LaurentPoly>> {
    let c = t.m1.commutator(&t.m2)?;
    Ok(Witness::compare(
        &c.trace() + &LaurentPoly::constant(2),
        commutator_target(),
    ))
}

/// `Tr(X)^2 + Tr(XY)^2 + Tr(Y)^2 = Tr(X) Tr(XY) Tr(Y) + Tr([X, Y]) + 2`
/// for `det X = det Y = 1`.
pub fn fricke_check<R: Ring>(x: &Mat2<R>, y: &Mat2<R>) -> Result<Witness<R>> {
    for m in [x, y] {
        let d = m.det();
        if !d.is_one() {
            return Err(Error::NotUnimodular { det: d.to_string() });
        }
    }
    let (tx, ty) = (x.trace(), y.trace());
    let txy = x.mul(y).trace();
    let comm = x.commutator(y)?.trace();
    let lhs = tx
        .mul_ref(&tx)
        .add_ref(&txy.mul_ref(&txy))
        .add_ref(&ty.mul_ref(&ty));
    let rhs = tx
        .mul_ref(&txy)
        .mul_ref(&ty)
        .add_ref(&comm)
        .add_ref(&R::from_i64(2));
    Ok(Witness::compare(lhs, rhs))
}

/// `x^2 + y^2 + z^2 - [3]_q x y z`, which is `-(q-1)^2/q^3` on every
/// q-Markov triple.
pub fn near_orthogonality(t: &QMarkovTriple) -> LaurentPoly {
    let (x, y, z) = (&t.x, &t.y, &t.z);
    &(&(&(x * x) + &(y * y)) + &(z * z)) - &(&(&(&q_three() * x) * y) * z)
}

/// Classical Markov tree from `(1, 5, 2)` by Vieta jumps.
pub fn markov_tree(depth: usize) -> Vec<TripleNode<BigInt>> {
    let three = BigInt::from(3);
    tree::enumerate(
        (BigInt::from(1), BigInt::from(5), BigInt::from(2)),
        depth,
        move |x, y, z| &three * x * y - z,
    )
}

/// q-Markov tree from `(h_a, h_ab, h_b)` by q-Vieta jumps.
pub fn q_markov_tree(depth: usize) -> Vec<TripleNode<LaurentPoly>> {
    let root = QMarkovTriple::from_words(&WordTriple::root()).expect("root traces divide");
    let k = q_three();
    tree::enumerate((root.x, root.y, root.z), depth, move |x, y, z| {
        &(&(&k * x) * y) - z
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn lp(o: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(o, c)
    }

    fn triple(l: &str, r: &str) -> WordTriple {
        WordTriple::from_outer(w(l), w(r))
    }

    #[test]
    fn classical_cohn_matrices() {
        assert_eq!(
            cohn_matrix_classical(&w("ab")),
            Mat2::new(12.into(), 5.into(), 7.into(), 3.into())
        );
        assert_eq!(cohn_matrix_classical(&w("a^4b")).a12, BigInt::from(89));
        assert_eq!(cohn_matrix_q(&w("a")), a_q());
    }

    #[test]
    fn classical_triples() {
        let t = markov_triple(&WordTriple::root()).unwrap();
        assert_eq!(t, (1.into(), 5.into(), 2.into()));
        let t = markov_triple(&triple("abab^2", "ab^2")).unwrap();
        assert_eq!(t.1, BigInt::from(37666));
        assert!(markov_number(&w("abab")).is_err());
    }

    #[test]
    fn q_values() {
        assert_eq!(q_markov_value(&w("ab")).unwrap(), lp(-3, &[1, 1, 1, 1, 1]));
        assert_eq!(q_markov_value(&w("b")).unwrap(), lp(-2, &[1, 0, 1]));
        assert_eq!(q_markov_value(&w("a")).unwrap(), LaurentPoly::q_pow(-1));
        let h = q_markov_value(&w("a^4b")).unwrap();
        assert_eq!(h.eval_at_one(), BigInt::from(89));
        assert!(matches!(
            q_markov_value(&w("abab")),
            Err(Error::NotDivisible { .. })
        ));
    }

    #[test]
    fn entry_forms() {
        for s in ["a", "b", "ab", "a^2b", "a^2bab", "ab^2", "abab^2"] {
            let m = cohn_matrix_q(&w(s));
            let h = q_markov_value_of(&m).unwrap();
            assert_eq!(entry_form(&m), h, "{s}");
        }
        let m = cohn_matrix_q(&w("ab"));
        assert_ne!(entry_form_unscaled(&m), q_markov_value_of(&m).unwrap());
    }

    #[test]
    fn q_equation_and_moves() {
        let root = QMarkovTriple::from_words(&WordTriple::root()).unwrap();
        assert!(verify_q_markov(&root).holds);
        assert!(verify_q_markov_scaled(&root).holds);
        let one = QMarkovTriple::new(lp(0, &[1]), lp(0, &[1]), lp(0, &[1]));
        let bad = verify_q_markov(&one);
        assert!(!bad.holds);
        assert!(!bad.residual.is_zero());

        let z = vieta_move(&root, Slot::Z);
        assert_eq!(z.z, q_markov_value(&w("a^2b")).unwrap());
        assert_eq!(vieta_move(&z, Slot::Z), root);
        let x = vieta_move(&root, Slot::X);
        assert_eq!(x.x, q_markov_value(&w("ab^2")).unwrap());
        assert!(verify_q_markov(&x).holds);
    }

    #[test]
    fn commutator_and_orthogonality() {
        let c = CohnTriple::q(&WordTriple::root());
        assert!(commutator_trace_check(&c).unwrap().holds);
        let c = CohnTriple::q(&triple("a^2b", "ab"));
        assert!(commutator_trace_check(&c).unwrap().holds);
        let root = QMarkovTriple::from_words(&WordTriple::root()).unwrap();
        assert_eq!(near_orthogonality(&root), -&q_markov_constant());
        assert_eq!(near_orthogonality(&root).eval_at_one(), BigInt::from(0));
        // classical commutator trace is -2
        let c = CohnTriple::classical(&WordTriple::root());
        assert_eq!(c.m1.commutator(&c.m2).unwrap().trace(), BigInt::from(-2));
    }

    #[test]
    fn fricke() {
        assert!(fricke_check(&a_q(), &b_q()).unwrap().holds);
        let i = Mat2::<BigInt>::identity();
        let wit = fricke_check(&i, &i).unwrap();
        assert_eq!((wit.lhs, wit.rhs), (12.into(), 12.into()));
        let two = Mat2::new(2.into(), 0.into(), 0.into(), 1.into());
        assert!(matches!(
            fricke_check(&two, &i),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn trees_agree_with_traces() {
        let classical = markov_tree(6);
        for n in &classical {
            let (x, y, z) = &n.values;
            assert!(is_markov(x, y, z));
            assert_eq!(markov_triple(&n.words).unwrap(), n.values);
            let c = CohnTriple::classical(&n.words);
            assert_eq!(&c.m12.a12, y);
        }
        assert_eq!(classical[1].values, (1.into(), 13.into(), 5.into()));
        assert_eq!(classical[2].values, (5.into(), 29.into(), 2.into()));

        for (qn, cn) in q_markov_tree(5).iter().zip(&classical) {
            let t = QMarkovTriple::new(
                qn.values.0.clone(),
                qn.values.1.clone(),
                qn.values.2.clone(),
            );
            assert_eq!(t, QMarkovTriple::from_words(&qn.words).unwrap());
            assert_eq!(t.at_one(), cn.values);
        }
    }
}
