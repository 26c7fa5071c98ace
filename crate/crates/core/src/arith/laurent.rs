use super::intpoly::forward_owned;
use super::{format_terms, parse_bigint, IntPoly};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of `Z[q, q^-1]`: `sum coeffs[i] * q^(offset + i)`.
///
/// Both ends of `coeffs` are nonzero; zero is the empty list with offset 0.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(offset: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return LaurentPoly::default();
        }
        coeffs.drain(..lead);
        LaurentPoly {
            offset: offset + lead as i64,
            coeffs,
        }
    }

    pub fn from_i64s(offset: i64, coeffs: &[i64]) -> Self {
        Self::new(offset, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(0, vec![c.into()])
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        Self::new(k, vec![c.into()])
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(1, k)
    }

    /// The q-integer `[n]_q = (1 - q^n) / (1 - q)`; for negative `n` this is
    /// `-q^n [-n]_q`.
    pub fn q_int(n: i64) -> Self {
        if n >= 0 {
            Self::new(0, vec![BigInt::one(); n as usize])
        } else {
            Self::new(n, vec![-BigInt::one(); n.unsigned_abs() as usize])
        }
    }

    pub fn from_intpoly(p: &IntPoly) -> Self {
        Self::new(0, p.coeffs().to_vec())
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.offset)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.offset + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        usize::try_from(exp - self.offset)
            .ok()
            .and_then(|i| self.coeffs.get(i).cloned())
            .unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Terms as `(exponent, coefficient)`, nonzero only, ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.offset + i as i64, c))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// The ordinary polynomial `q^-offset * self`, which has nonzero constant
    /// term.
    pub fn unshifted(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }

    /// The polynomial itself when no negative powers occur.
    pub fn to_intpoly(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::default());
        }
        let shift = usize::try_from(self.offset).ok()?;
        let mut v = vec![BigInt::zero(); shift];
        v.extend(self.coeffs.iter().cloned());
        Some(IntPoly::new(v))
    }

    /// Sum of coefficients, i.e. the value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if x.is_zero() && self.offset < 0 {
            return Err(Error::ZeroDenominator);
        }
        let body = self
            .coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            });
        let scale = if self.offset >= 0 {
            num_traits::pow(x.clone(), self.offset as usize)
        } else {
            num_traits::pow(x.recip(), self.offset.unsigned_abs() as usize)
        };
        Ok(body * scale)
    }

    /// Substitutes `q := q^-1`.
    pub fn invert_var(&self) -> Self {
        match self.max_exp() {
            None => self.clone(),
            Some(top) => {
                let mut c = self.coeffs.clone();
                c.reverse();
                LaurentPoly {
                    offset: -top,
                    coeffs: c,
                }
            }
        }
    }

    /// Substitutes `q := q^k` for `k >= 1`.
    pub fn subst_power(&self, k: u32) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let k = k as usize;
        let mut v = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Self::new(self.offset * k as i64, v)
    }

    /// True when the coefficient list reads the same reversed.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 {
            self.unit_inverse().ok_or_else(|| Error::NotDivisible {
                dividend: "1".into(),
                divisor: self.to_string(),
            })?
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut b = base;
        let mut acc = LaurentPoly::constant(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Exact quotient `self / divisor` in `Z[q, q^-1]`.
    pub fn divexact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::default());
        }
        let q = self
            .unshifted()
            .divexact(&divisor.unshifted())
            .map_err(|_| Error::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            })?;
        Ok(LaurentPoly::from_intpoly(&q).shift(self.offset - divisor.offset))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.offset, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Inverse when `self` is a unit, i.e. exactly `±q^k`.
    pub fn unit_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] if One::is_one(&c.abs()) => Some(LaurentPoly::monomial(c.clone(), -self.offset)),
            _ => None,
        }
    }

    /// Gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(f, "q", self.terms().rev().map(|(e, c)| (e, c.clone())))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let hi = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms().chain(rhs.terms()) {
            v[(e - lo) as usize] += c;
        }
        LaurentPoly::new(lo, v)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::default();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.offset + rhs.offset, v)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

forward_owned!(LaurentPoly, Add add, Sub sub, Mul mul);

impl super::Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }
    fn one() -> Self {
        LaurentPoly::constant(1)
    }
    fn from_i64(n: i64) -> Self {
        LaurentPoly::constant(n)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
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
        LaurentPoly::unit_inverse(self)
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentRepr {
    offset: i64,
    coeffs: Vec<String>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentRepr {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = LaurentRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| parse_bigint(c))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(LaurentPoly::new(repr.offset, coeffs))
    }
}
