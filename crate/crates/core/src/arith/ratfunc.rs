use super::intpoly::forward_owned;
use super::{IntPoly, LaurentPoly};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of the fraction field `Q(q)`, stored as `num / den` with
/// `den` an ordinary polynomial (offset 0) of positive leading coefficient and
/// no common factor with `num` over `Z[q]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::from_laurent(LaurentPoly::default()));
        }
        let shift = num.offset() - den.offset();
        let (n, d) = (num.unshifted(), den.unshifted());
        let g = n.gcd(&d);
        let mut n = n.divexact(&g).expect("gcd divides numerator");
        let mut d = d.divexact(&g).expect("gcd divides denominator");
        if d.leading().is_some_and(Signed::is_negative) {
            n = -n;
            d = -d;
        }
        Ok(RatFunc {
            num: LaurentPoly::from_intpoly(&n).shift(shift),
            den: LaurentPoly::from_intpoly(&d),
        })
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::constant(1),
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_laurent(LaurentPoly::constant(n))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this equals, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        (self.den == LaurentPoly::constant(1)).then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x)?;
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.eval(x)? / d)
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> Result<BigRational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(BigRational::new(self.num.eval_at_one(), d))
    }

    /// Substitutes `q := q^-1`.
    pub fn invert_var(&self) -> Self {
        RatFunc::new(self.num.invert_var(), self.den.invert_var()).expect("nonzero denominator")
    }

    /// `p(s)`, computed over a common denominator so only one gcd is taken.
    pub fn compose_intpoly(p: &IntPoly, s: &RatFunc) -> RatFunc {
        let Some(deg) = p.degree() else {
            return RatFunc::from_i64(0);
        };
        // p(N/D) = (sum c_k N^k D^(deg-k)) / D^deg
        let mut num = LaurentPoly::default();
        let mut npow = LaurentPoly::constant(1);
        let mut dpows = vec![LaurentPoly::constant(1)];
        for k in 1..=deg {
            dpows.push(&dpows[k - 1] * &s.den);
        }
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                num = &num + &(&npow * &dpows[deg - k]).scale(c);
            }
            if k < deg {
                npow = &npow * &s.num;
            }
        }
        RatFunc::new(num, dpows[deg].clone()).expect("nonzero denominator")
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        RatFunc {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        RatFunc::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_laurent(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_laurent() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero")
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned!(RatFunc, Add add, Sub sub, Mul mul);

impl super::Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::from_i64(0)
    }
    fn one() -> Self {
        RatFunc::from_i64(1)
    }
    fn from_i64(n: i64) -> Self {
        RatFunc::from_i64(n)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
}

#[derive(Serialize, Deserialize)]
struct RatFuncRepr {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFuncRepr {
            num: self.num.clone(),
            den: self.den.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RatFuncRepr::deserialize(d)?;
        RatFunc::new(r.num, r.den).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(offset: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(offset, c)
    }

    fn rf(n: LaurentPoly, d: LaurentPoly) -> RatFunc {
        RatFunc::new(n, d).unwrap()
    }

    #[test]
    fn normal_form() {
        // (q^2 - 1) / (2q - 2) = (q + 1) / 2
        let x = rf(lp(0, &[-1, 0, 1]), lp(0, &[-2, 2]));
        assert_eq!(x.num(), &lp(0, &[1, 1]));
        assert_eq!(x.den(), &lp(0, &[2]));
        // powers of q move into the numerator
        let y = rf(lp(0, &[1]), lp(2, &[1, 1]));
        assert_eq!(y.num(), &lp(-2, &[1]));
        assert_eq!(y.den(), &lp(0, &[1, 1]));
        // negative leading coefficient flips sign
        let z = rf(lp(0, &[1]), lp(0, &[1, -1]));
        assert_eq!(z.num(), &lp(0, &[-1]));
        assert_eq!(z.den(), &lp(0, &[-1, 1]));
        assert!(RatFunc::new(lp(0, &[1]), LaurentPoly::default()).is_err());
    }

    #[test]
    fn compose_identity_and_markov_value() {
        let s = rf(LaurentPoly::q_int(3), LaurentPoly::q());
        assert_eq!(RatFunc::compose_intpoly(&IntPoly::t(), &s), s);
        // t^2 - t - 1 at (1+q+q^2)/q
        let got = RatFunc::compose_intpoly(&IntPoly::from_i64s(&[-1, -1, 1]), &s);
        assert_eq!(got, RatFunc::from(lp(-2, &[1, 1, 1, 1, 1])));
        let got = RatFunc::compose_intpoly(&IntPoly::from_i64s(&[1, -2, -1, 1]), &s);
        assert_eq!(got, RatFunc::from(lp(-3, &[1, 2, 2, 3, 2, 2, 1])));
    }

    #[test]
    fn compose_agrees_with_horner() {
        let s = rf(lp(0, &[1, 2]), lp(0, &[3, 0, 1]));
        let p = IntPoly::from_i64s(&[4, -1, 0, 2, 5]);
        assert_eq!(RatFunc::compose_intpoly(&p, &s), p.compose(&s));
    }

    #[test]
    fn json_roundtrip() {
        let x = rf(lp(-1, &[1, 1]), lp(0, &[1, 0, 1]));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<RatFunc>(&s).unwrap(), x);
    }

    fn arb_rat() -> impl Strategy<Value = RatFunc> {
        let lp = |n| {
            (-3i64..3, prop::collection::vec(-6i64..6, 1..n))
                .prop_map(|(o, v)| LaurentPoly::from_i64s(o, &v))
        };
        (lp(4), lp(4)).prop_filter_map("nonzero den", |(n, d)| RatFunc::new(n, d).ok())
    }

    proptest! {
        #[test]
        fn field_laws(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).div(&b).unwrap(), a.clone());
            }
        }

        #[test]
        fn renormalising_is_idempotent(a in arb_rat()) {
            prop_assert_eq!(RatFunc::new(a.num().clone(), a.den().clone()).unwrap(), a);
        }
    }
}
