//! Regular and negative continued fractions of positive rationals, and nested
//! fractions with polynomial partial quotients.

use crate::arith::{BigInt, BigRational, IntPoly};
use crate::{Error, Result};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Regular expansion `a1 + 1/(a2 + 1/(...))` in normal form.
///
/// For values `>= 1` the list has even length. For values `< 1` it is a
/// leading `0` followed by an even-length tail, e.g. `8/13 = [0,1,1,1,1,1,1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct CFRegular {
    terms: Vec<u64>,
}

/// Negative expansion `c1 - 1/(c2 - 1/(...))` with `c1 >= 1`, `ci >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct CFNegative {
    terms: Vec<u64>,
}

fn to_term(x: &BigInt) -> Result<u64> {
    x.to_u64().ok_or_else(|| Error::TermTooLarge(x.to_string()))
}

fn require_positive(x: &BigRational) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositive(x.to_string()))
    }
}

impl CFRegular {
    /// Validates and normalises any regular expansion: `a1 >= 0`, later
    /// terms `>= 1`.
    pub fn new(terms: Vec<u64>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidContinuedFraction("empty expansion".into()));
        }
        if terms[1..].contains(&0) {
            return Err(Error::InvalidContinuedFraction(
                "only the first term may be 0".into(),
            ));
        }
        if terms.len() == 1 && terms[0] == 0 {
            return Err(Error::NonPositive("0".into()));
        }
        Ok(CFRegular {
            terms: normalize_regular(terms),
        })
    }

    pub fn from_rational(x: &BigRational) -> Result<Self> {
        require_positive(x)?;
        let (mut n, mut d) = (x.numer().clone(), x.denom().clone());
        let mut terms = Vec::new();
        while !d.is_zero() {
            let (a, r) = n.div_rem(&d);
            terms.push(to_term(&a)?);
            n = d;
            d = r;
        }
        Ok(CFRegular {
            terms: normalize_regular(terms),
        })
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    /// The same value as an even-length list, counting a leading `0`.
    /// This is the form the generator products use.
    pub fn even_terms(&self) -> Vec<u64> {
        let mut t = self.terms.clone();
        if t.len().is_multiple_of(2) {
            return t;
        }
        let last = t.pop().unwrap();
        if last >= 2 {
            t.push(last - 1);
            t.push(1);
        } else {
            // tail ends in 1: merge it back
            *t.last_mut().unwrap() += 1;
        }
        t
    }

    pub fn value(&self) -> BigRational {
        eval_regular(&self.terms)
    }

    pub fn to_negative(&self) -> CFNegative {
        let even = self.even_terms();
        let mut out = Vec::new();
        for (k, pair) in even.chunks(2).enumerate() {
            out.push(if k == 0 { pair[0] + 1 } else { pair[0] + 2 });
            out.extend(std::iter::repeat_n(2, (pair[1] - 1) as usize));
        }
        CFNegative { terms: out }
    }
}

/// Euclidean form first (merge a trailing 1), then split or keep so that the
/// list (or the tail after a leading 0) has even length.
fn normalize_regular(mut t: Vec<u64>) -> Vec<u64> {
    if t.len() >= 2 && *t.last().unwrap() == 1 {
        t.pop();
        *t.last_mut().unwrap() += 1;
    }
    let tail_len = if t[0] == 0 { t.len() - 1 } else { t.len() };
    if tail_len % 2 == 1 {
        let last = t.pop().unwrap();
        t.push(last - 1);
        t.push(1);
    }
    t
}

fn eval_regular(terms: &[u64]) -> BigRational {
    let mut it = terms.iter().rev();
    let mut v = BigRational::from_integer(BigInt::from(*it.next().unwrap()));
    for &a in it {
        v = BigRational::from_integer(BigInt::from(a)) + v.recip();
    }
    v
}

impl CFNegative {
    pub fn new(terms: Vec<u64>) -> Result<Self> {
        match terms.split_first() {
            None => Err(Error::InvalidContinuedFraction("empty expansion".into())),
            Some((&c1, _)) if c1 < 1 => Err(Error::InvalidContinuedFraction(
                "first term must be at least 1".into(),
            )),
            Some((_, rest)) if rest.iter().any(|&c| c < 2) => Err(Error::InvalidContinuedFraction(
                "terms after the first must be at least 2".into(),
            )),
            _ => Ok(CFNegative { terms }),
        }
    }

    pub fn from_rational(x: &BigRational) -> Result<Self> {
        require_positive(x)?;
        let mut x = x.clone();
        let mut terms = Vec::new();
        loop {
            let c = x.ceil();
            terms.push(to_term(c.numer())?);
            if c == x {
                return Ok(CFNegative { terms });
            }
            x = (c - x).recip();
        }
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn value(&self) -> BigRational {
        let mut it = self.terms.iter().rev();
        let mut v = BigRational::from_integer(BigInt::from(*it.next().unwrap()));
        for &c in it {
            v = BigRational::from_integer(BigInt::from(c)) - v.recip();
        }
        v
    }

    pub fn to_regular(&self) -> CFRegular {
        let c = &self.terms;
        let mut a = vec![c[0] - 1];
        let mut i = 1;
        loop {
            let twos = c[i..].iter().take_while(|&&x| x == 2).count();
            a.push(twos as u64 + 1);
            i += twos;
            if i == c.len() {
                break;
            }
            a.push(c[i] - 2);
            i += 1;
        }
        CFRegular {
            terms: normalize_regular(a),
        }
    }
}

macro_rules! cf_plumbing {
    ($t:ty, $open:literal, $close:literal) => {
        impl TryFrom<Vec<u64>> for $t {
            type Error = Error;
            fn try_from(v: Vec<u64>) -> Result<Self> {
                <$t>::new(v)
            }
        }

        impl From<$t> for Vec<u64> {
            fn from(c: $t) -> Vec<u64> {
                c.terms
            }
        }

        impl std::str::FromStr for $t {
            type Err = Error;
            /// Parses `"a1,a2,..."`, optionally wrapped in brackets.
            fn from_str(s: &str) -> Result<Self> {
                let body = s.trim().trim_start_matches('[').trim_end_matches(']');
                let terms = body
                    .split(|c| c == ',' || c == ';')
                    .map(|p| {
                        p.trim()
                            .parse::<u64>()
                            .map_err(|e| Error::Parse(format!("{p:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                <$t>::new(terms)
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let body: Vec<String> = self.terms.iter().map(ToString::to_string).collect();
                write!(f, "{}{}{}", $open, body.join(","), $close)
            }
        }
    };
}

cf_plumbing!(CFRegular, "[", "]");
cf_plumbing!(CFNegative, "[[", "]]");

/// `[x0; x1, x2, ...] = x0 + 1/(x1 + 1/(x2 + ...))` with polynomial quotients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolyCF {
    pub quotients: Vec<IntPoly>,
}

impl PolyCF {
    pub fn new(quotients: Vec<IntPoly>) -> Self {
        PolyCF { quotients }
    }

    /// Evaluates to a reduced `(numerator, denominator)` pair with the
    /// denominator's leading coefficient positive.
    pub fn eval(&self) -> Result<(IntPoly, IntPoly)> {
        let mut it = self.quotients.iter().rev();
        let last = it
            .next()
            .ok_or_else(|| Error::InvalidContinuedFraction("no quotients".into()))?;
        let (mut num, mut den) = (last.clone(), IntPoly::constant(1));
        for x in it {
            if num.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            // x + den/num
            let next = &(x * &num) + &den;
            den = num;
            num = next;
        }
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let mut num = num.divexact(&g)?;
        let mut den = den.divexact(&g)?;
        if den.leading().is_some_and(Signed::is_negative) {
            num = -num;
            den = -den;
        }
        Ok((num, den))
    }
}

/// Farey sum `(r + r') / (s + s')` of two reduced fractions.
pub fn farey_sum(x: &BigRational, y: &BigRational) -> BigRational {
    BigRational::new(x.numer() + y.numer(), x.denom() + y.denom())
}

/// Convergents `p_k / q_k` of a regular expansion.
pub fn convergents(terms: &[u64]) -> Vec<BigRational> {
    let (mut p0, mut p1) = (BigInt::zero(), BigInt::one());
    let (mut q0, mut q1) = (BigInt::one(), BigInt::zero());
    terms
        .iter()
        .map(|&a| {
            let a = BigInt::from(a);
            let p = &a * &p1 + &p0;
            let q = &a * &q1 + &q0;
            (p0, p1) = (p1.clone(), p.clone());
            (q0, q1) = (q1.clone(), q.clone());
            BigRational::new(p, q)
        })
        .collect()
}
