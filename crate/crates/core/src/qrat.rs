//! q-deformed rationals: q-integers, the two continued-fraction evaluators,
//! and the matrix products built from the generators `R_q`, `L_q`, `S_q`.

use crate::arith::{BigRational, LaurentPoly, Mat2, RatFunc};
use crate::contfrac::{CFNegative, CFRegular};
use crate::Result;
use serde::{Deserialize, Serialize};
use std::fmt;

/// `[a]_q = 1 + q + ... + q^(a-1)`.
pub fn q_int(a: u64) -> LaurentPoly {
    LaurentPoly::q_int(a as i64)
}

/// `[a]_{q^-1}`.
fn q_int_inv(a: u64) -> LaurentPoly {
    q_int(a).invert_var()
}

/// A q-rational `R(q)/S(q)` in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QRational(RatFunc);

impl QRational {
    pub fn num(&self) -> &LaurentPoly {
        self.0.num()
    }

    pub fn den(&self) -> &LaurentPoly {
        self.0.den()
    }

    pub fn as_ratfunc(&self) -> &RatFunc {
        &self.0
    }

    /// The classical rational recovered at `q = 1`.
    pub fn at_one(&self) -> BigRational {
        self.0
            .eval_at_one()
            .expect("q-rational denominators are nonzero at 1")
    }

    pub fn from_rational(x: &BigRational) -> Result<Self> {
        Ok(q_rational_regular(&CFRegular::from_rational(x)?))
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Evaluates `[a1, ..., an]_q` from the inside out, alternating the base
/// between `q` (odd positions) and `q^-1` (even positions).
pub fn q_rational_regular(cf: &CFRegular) -> QRational {
    let terms = cf.terms();
    let n = terms.len();
    let odd = |i: usize| i.is_multiple_of(2); // 0-based index of a 1-based odd position
    let last = terms[n - 1];
    let mut v = RatFunc::from(if odd(n - 1) {
        q_int(last)
    } else {
        q_int_inv(last)
    });
    for i in (0..n - 1).rev() {
        let a = terms[i];
        let (base, weight) = if odd(i) {
            (q_int(a), LaurentPoly::q_pow(a as i64))
        } else {
            (q_int_inv(a), LaurentPoly::q_pow(-(a as i64)))
        };
        let tail = RatFunc::from(weight).div(&v).expect("tails are nonzero");
        v = &RatFunc::from(base) + &tail;
    }
    QRational(v)
}

/// Evaluates `[[c1, ..., ck]]_q = [c1]_q - q^(c1-1) / [[c2, ...]]_q`.
pub fn q_rational_negative(cf: &CFNegative) -> QRational {
    let terms = cf.terms();
    let mut v = RatFunc::from(q_int(*terms.last().unwrap()));
    for &c in terms.iter().rev().skip(1) {
        let tail = RatFunc::from(LaurentPoly::q_pow(c as i64 - 1))
            .div(&v)
            .expect("tails are nonzero");
        v = &RatFunc::from(q_int(c)) - &tail;
    }
    QRational(v)
}

/// Ratio of the first column of [`generator_product`].
pub fn q_rational_matrix(cf: &CFRegular) -> QRational {
    let m = generator_product(cf);
    QRational(RatFunc::new(m.a11, m.a21).expect("lower-left entry is nonzero"))
}

fn lp(c: i64) -> LaurentPoly {
    LaurentPoly::constant(c)
}

/// `R_q = [[q, 1], [0, 1]]`.
pub fn r_q() -> Mat2<LaurentPoly> {
    Mat2::new(LaurentPoly::q(), lp(1), lp(0), lp(1))
}

/// `L_q = [[1, 0], [1, q^-1]]`.
pub fn l_q() -> Mat2<LaurentPoly> {
    Mat2::new(lp(1), lp(0), lp(1), LaurentPoly::q_pow(-1))
}

/// `S_q = [[0, -q^-1], [1, 0]]`.
pub fn s_q() -> Mat2<LaurentPoly> {
    Mat2::new(lp(0), LaurentPoly::monomial(-1, -1), lp(1), lp(0))
}

/// `A_q = R_q L_q`.
pub fn a_q() -> Mat2<LaurentPoly> {
    r_q().mul(&l_q())
}

/// `B_q = R_q^2 L_q^2`.
pub fn b_q() -> Mat2<LaurentPoly> {
    r_q().pow(2).mul(&l_q().pow(2))
}

/// `R_q^n = [[q^n, [n]_q], [0, 1]]`.
fn r_pow(n: u64) -> Mat2<LaurentPoly> {
    Mat2::new(LaurentPoly::q_pow(n as i64), q_int(n), lp(0), lp(1))
}

/// `L_q^n = [[1, 0], [[n]_{q^-1}, q^-n]]`.
fn l_pow(n: u64) -> Mat2<LaurentPoly> {
    Mat2::new(lp(1), lp(0), q_int_inv(n), LaurentPoly::q_pow(-(n as i64)))
}

/// Product of the per-term matrices
/// `[[ [a]_q, q^a ], [1, 0]]` (odd positions) and
/// `[[ [a]_{q^-1}, q^-a ], [1, 0]]` (even positions) over the even form.
pub fn mq_plus(cf: &CFRegular) -> Mat2<LaurentPoly> {
    let factors: Vec<_> = cf
        .even_terms()
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            if i % 2 == 0 {
                Mat2::new(q_int(a), LaurentPoly::q_pow(a as i64), lp(1), lp(0))
            } else {
                Mat2::new(q_int_inv(a), LaurentPoly::q_pow(-(a as i64)), lp(1), lp(0))
            }
        })
        .collect();
    Mat2::product(&factors)
}

/// Product of `[[ [c]_q, -q^(c-1) ], [1, 0]]` over the terms.
pub fn mq_neg(cf: &CFNegative) -> Mat2<LaurentPoly> {
    let factors: Vec<_> = cf
        .terms()
        .iter()
        .map(|&c| {
            Mat2::new(
                q_int(c),
                LaurentPoly::monomial(-1, c as i64 - 1),
                lp(1),
                lp(0),
            )
        })
        .collect();
    Mat2::product(&factors)
}

/// `R_q^{a1} L_q^{a2} ... R_q^{a_{2m-1}} L_q^{a_{2m}}` over the even form.
pub fn generator_product(cf: &CFRegular) -> Mat2<LaurentPoly> {
    generator_product_terms(&cf.even_terms())
}

/// Generator product over an explicit even-length list.
pub fn generator_product_terms(terms: &[u64]) -> Mat2<LaurentPoly> {
    assert!(terms.len().is_multiple_of(2), "generator products need an even list");
    let factors: Vec<_> = terms
        .chunks(2)
        .map(|p| r_pow(p[0]).mul(&l_pow(p[1])))
        .collect();
    Mat2::product(&factors)
}

/// `R_q^{c1} S_q R_q^{c2} S_q ... R_q^{ck} S_q`.
pub fn generator_product_negative(cf: &CFNegative) -> Mat2<LaurentPoly> {
    let s = s_q();
    let factors: Vec<_> = cf.terms().iter().map(|&c| r_pow(c).mul(&s)).collect();
    Mat2::product(&factors)
}

/// Classical `A = [[2, 1], [1, 1]]`.
pub fn a_classical() -> Mat2<crate::arith::BigInt> {
    Mat2::new(2.into(), 1.into(), 1.into(), 1.into())
}

/// Classical `B = [[5, 2], [2, 1]]`.
pub fn b_classical() -> Mat2<crate::arith::BigInt> {
    Mat2::new(5.into(), 2.into(), 2.into(), 1.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::BigInt;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn poly(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(0, c)
    }

    fn reg(s: &str) -> CFRegular {
        s.parse().unwrap()
    }

    fn neg(s: &str) -> CFNegative {
        s.parse().unwrap()
    }

    #[test]
    fn q_integers() {
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(3), poly(&[1, 1, 1]));
        assert_eq!(q_int(2).eval_at_one(), BigInt::from(2));
    }

    #[test]
    fn regular_evaluator() {
        let x = q_rational_regular(&reg("2,2"));
        assert_eq!((x.num(), x.den()), (&poly(&[1, 2, 1, 1]), &poly(&[1, 1])));
        let x = q_rational_regular(&reg("1,1,1,1"));
        assert_eq!(
            (x.num(), x.den()),
            (&poly(&[1, 1, 2, 1]), &poly(&[1, 1, 1]))
        );
        let x = q_rational_regular(&reg("1,1"));
        assert_eq!((x.num(), x.den()), (&poly(&[1, 1]), &poly(&[1])));
    }

    #[test]
    fn negative_evaluator() {
        let x = q_rational_negative(&neg("3,2"));
        assert_eq!((x.num(), x.den()), (&poly(&[1, 2, 1, 1]), &poly(&[1, 1])));
        let x = q_rational_negative(&neg("2,4"));
        assert_eq!(
            (x.num(), x.den()),
            (&poly(&[1, 1, 2, 2, 1]), &poly(&[1, 1, 1, 1]))
        );
        let x = q_rational_negative(&neg("2"));
        assert_eq!((x.num(), x.den()), (&poly(&[1, 1]), &poly(&[1])));
    }

    #[test]
    fn fractions_below_one() {
        // [1/2]_q = q / (1 + q)
        let x = QRational::from_rational(&r(1, 2)).unwrap();
        assert_eq!(x.num(), &LaurentPoly::q());
        assert_eq!(x.den(), &poly(&[1, 1]));
        let y = q_rational_negative(&CFNegative::from_rational(&r(1, 2)).unwrap());
        assert_eq!(x, y);
    }

    #[test]
    fn generators() {
        let a = a_q();
        assert_eq!(a.a11, poly(&[1, 1]));
        assert_eq!(a.a12, LaurentPoly::q_pow(-1));
        assert_eq!(a.a21, poly(&[1]));
        assert_eq!(a.a22, LaurentPoly::q_pow(-1));
        let b = b_q();
        assert_eq!(b.a11, LaurentPoly::from_i64s(-1, &[1, 2, 1, 1]));
        assert_eq!(b.a12, LaurentPoly::from_i64s(-2, &[1, 1]));
        assert_eq!(b.a21, LaurentPoly::from_i64s(-1, &[1, 1]));
        assert_eq!(b.a22, LaurentPoly::q_pow(-2));
        assert_eq!(a.det(), lp(1));
        assert_eq!(b.det(), lp(1));
        assert_eq!(r_q().det(), LaurentPoly::q());
        assert_eq!(r_pow(5), r_q().pow(5));
        assert_eq!(l_pow(4), l_q().pow(4));
    }

    #[test]
    fn matrix_routes() {
        assert_eq!(mq_plus(&reg("1,1")), a_q());
        assert_eq!(mq_plus(&reg("2,2")), b_q());
        assert_eq!(generator_product(&reg("1,1")), a_q());
        assert_eq!(generator_product_terms(&[]), Mat2::identity());
        let m = mq_neg(&neg("2"));
        assert_eq!(
            m,
            Mat2::new(poly(&[1, 1]), LaurentPoly::monomial(-1, 1), lp(1), lp(0))
        );
        let m = mq_neg(&neg("3,2"));
        assert_eq!((m.a11, m.a21), (poly(&[1, 2, 1, 1]), poly(&[1, 1])));
    }

    /// First column of the matrix equals `q^k (R, S)` for some `k`.
    fn column_matches_up_to_monomial(m: &Mat2<LaurentPoly>, x: &QRational) -> bool {
        let k = m.a21.offset() - x.den().offset();
        m.a11 == x.num().shift(k) && m.a21 == x.den().shift(k)
    }

    #[test]
    fn first_column_is_the_q_rational() {
        let cf = reg("2,3");
        let x = q_rational_regular(&cf);
        let m = mq_plus(&cf);
        assert!(column_matches_up_to_monomial(&m, &x));
        assert_eq!(m.a21, x.den().shift(-2));
        assert_eq!(q_rational_matrix(&cf), x);
    }

    #[test]
    fn classical_generators() {
        assert_eq!(
            a_classical().mul(&b_classical()),
            Mat2::new(12.into(), 5.into(), 7.into(), 3.into())
        );
        assert_eq!(a_q().map(|e| e.eval_at_one()), a_classical());
        assert_eq!(b_q().map(|e| e.eval_at_one()), b_classical());
    }

    #[test]
    fn regular_and_negative_agree_up_to_60() {
        for s in 1..=60i64 {
            for n in 1..=60i64 {
                if n.gcd(&s) != 1 {
                    continue;
                }
                let x = r(n, s);
                let a = q_rational_regular(&CFRegular::from_rational(&x).unwrap());
                let b = q_rational_negative(&CFNegative::from_rational(&x).unwrap());
                assert_eq!(a, b, "{x}");
                assert_eq!(a.at_one(), x);
            }
        }
    }

    fn arb_cf() -> impl Strategy<Value = CFRegular> {
        (0u64..4, prop::collection::vec(1u64..5, 1..8)).prop_map(|(h, t)| {
            let mut v = vec![h];
            v.extend(t);
            CFRegular::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn matrix_forms_agree(cf in arb_cf()) {
            let g = generator_product(&cf);
            prop_assert_eq!(&g, &mq_plus(&cf));
            let signed: i64 = cf
                .even_terms()
                .iter()
                .enumerate()
                .map(|(i, &a)| if i % 2 == 0 { a as i64 } else { -(a as i64) })
                .sum();
            prop_assert_eq!(g.det(), LaurentPoly::q_pow(signed));
            let x = q_rational_regular(&cf);
            prop_assert!(column_matches_up_to_monomial(&g, &x));
            let n = cf.to_negative();
            let m = mq_neg(&n);
            prop_assert_eq!(&m, &generator_product_negative(&n));
            prop_assert_eq!((&m.a11, &m.a21), (x.num(), x.den()));
        }
    }
}
