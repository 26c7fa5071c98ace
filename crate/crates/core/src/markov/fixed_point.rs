//! Attracting fixed points of q-Cohn matrices as quadratic surds over `Q(q)`.

use super::{cohn_matrix_q, Witness};
use crate::arith::{BigInt, BigRational, LaurentPoly, Mat2, RatFunc};
use crate::words::Word;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// `(p + sqrt(d * q^-scale)) / s` with `d` an ordinary polynomial of
/// nonzero constant term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticSurd {
    pub p: RatFunc,
    pub d: LaurentPoly,
    pub s: RatFunc,
    pub scale: i64,
}

/// Value of a surd at a rational point: `(p + sqrt(disc)) / s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurdValue {
    pub p: BigRational,
    pub disc: BigRational,
    pub s: BigRational,
}

impl QuadraticSurd {
    /// The radicand `d * q^-scale` as a Laurent polynomial.
    pub fn radicand(&self) -> LaurentPoly {
        self.d.shift(-self.scale)
    }

    /// For even `scale = 2k`, `(p q^k, s q^k)` so that the surd reads
    /// `(p q^k + sqrt(d)) / (s q^k)`.
    pub fn cleared(&self) -> Option<(RatFunc, RatFunc)> {
        if self.scale % 2 != 0 {
            return None;
        }
        let k = self.scale / 2;
        Some((self.p.shift(k), self.s.shift(k)))
    }

    pub fn eval(&self, x: &BigRational) -> Result<SurdValue> {
        Ok(SurdValue {
            p: self.p.eval(x)?,
            disc: self.radicand().eval(x)?,
            s: self.s.eval(x)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPoint {
    pub word: Word,
    pub matrix: Mat2<LaurentPoly>,
    pub surd: QuadraticSurd,
    pub tag: Vec<u64>,
}

impl FixedPoint {
    /// Checks `s θ^2 + (u - r) θ - t = 0` for `θ = (P + sqrt(D)) / S` by
    /// splitting into rational and surd parts after multiplying by `S^2`.
    /// Residuals are returned as `lhs` (rational part) and `rhs` (surd part),
    /// both required to vanish.
    pub fn verify(&self) -> Witness<LaurentPoly> {
        let m = &self.matrix;
        let p = &m.a11 - &m.a22;
        let big_s = &m.a21 * &LaurentPoly::constant(2);
        let disc = self.surd.radicand();
        let u_minus_r = &m.a22 - &m.a11;
        let surd_part = &(&(&m.a21 * &LaurentPoly::constant(2)) * &p) + &(&u_minus_r * &big_s);
        let rational_part = &(&(&m.a21 * &(&(&p * &p) + &disc)) + &(&(&u_minus_r * &p) * &big_s))
            - &(&(&m.a12 * &big_s) * &big_s);
        Witness {
            holds: rational_part.is_zero() && surd_part.is_zero(),
            residual: &rational_part + &surd_part,
            lhs: rational_part,
            rhs: surd_part,
        }
    }

    /// The tag sequence evaluated as a generator product reproduces the matrix.
    pub fn tag_matches(&self) -> bool {
        crate::qrat::generator_product_terms(&self.tag) == self.matrix
    }
}

/// Periodic continued-fraction tag of a word: `a -> 1,1`, `b -> 2,2`.
pub fn period_tag(w: &Word) -> Vec<u64> {
    w.letters()
        .flat_map(|c| if c == 'a' { [1, 1] } else { [2, 2] })
        .collect()
}

/// The `+` root of `s θ^2 + (u - r) θ - t = 0` for `w(A_q, B_q) = [[r, t], [s, u]]`,
/// i.e. `((r - u) + sqrt(Tr^2 - 4)) / (2s)`.
pub fn fixed_point(w: &Word) -> Result<FixedPoint> {
    let m = cohn_matrix_q(w);
    if m.a21.is_zero() {
        return Err(Error::DegenerateMatrix);
    }
    let tr = m.trace();
    let disc = &(&tr * &tr) - &LaurentPoly::constant(4);
    let scale = -disc.min_exp().unwrap_or(0);
    let surd = QuadraticSurd {
        p: RatFunc::from_laurent(&m.a11 - &m.a22),
        d: disc.shift(scale),
        s: RatFunc::from_laurent(&m.a21 * &LaurentPoly::constant(2)),
        scale,
    };
    Ok(FixedPoint {
        word: w.clone(),
        tag: period_tag(w),
        matrix: m,
        surd,
    })
}

impl SurdValue {
    /// Approximate value, for display only.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        let f = |x: &BigRational| x.to_f64().unwrap_or(f64::NAN);
        (f(&self.p) + f(&self.disc).sqrt()) / f(&self.s)
    }

    pub fn is_integer_disc(&self) -> Option<BigInt> {
        self.disc.is_integer().then(|| self.disc.to_integer())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::word_triples;
    use num_traits::Zero;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn a2b_matches_worked_example() {
        let fp = fixed_point(&w("a^2b")).unwrap();
        let d = LaurentPoly::from_i64s(
            0,
            &[
                1, 6, 19, 44, 81, 126, 171, 204, 213, 204, 171, 126, 81, 44, 19, 6, 1,
            ],
        );
        assert_eq!(fp.surd.d, d);
        assert_eq!(fp.surd.scale, 8);
        let (_, s) = fp.surd.cleared().unwrap();
        let expected = LaurentPoly::from_i64s(1, &[1, 3, 4, 4, 4, 2, 1]).scale(&2.into());
        assert_eq!(s, RatFunc::from_laurent(expected));
        assert_eq!(fp.tag, vec![1, 1, 1, 1, 2, 2]);
        assert!(fp.tag_matches());
        assert!(fp.verify().holds);
    }

    #[test]
    fn ab_at_one() {
        let fp = fixed_point(&w("ab")).unwrap();
        let v = fp.surd.eval(&BigRational::from_integer(1.into())).unwrap();
        assert_eq!(v.p, BigRational::from_integer(9.into()));
        assert_eq!(v.is_integer_disc(), Some(221.into()));
        assert_eq!(v.s, BigRational::from_integer(14.into()));
        assert!((v.approx() - (9.0 + 221f64.sqrt()) / 14.0).abs() < 1e-12);
    }

    #[test]
    fn all_words_to_depth_4() {
        for t in word_triples(4) {
            for word in t.words() {
                let fp = fixed_point(word).unwrap();
                assert!(fp.verify().holds, "{word}");
                assert!(fp.tag_matches(), "{word}");
                assert!(fp.surd.d.is_palindromic(), "{word}");
                assert!(!fp.surd.d.coeff(0).is_zero());
            }
        }
    }
}
