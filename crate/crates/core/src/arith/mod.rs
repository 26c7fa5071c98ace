//! Exact arithmetic: big integers and rationals, integer polynomials in `t`,
//! Laurent polynomials in `q`, their fraction field, and 2×2 matrices over
//! any of these.
//!
//! Every value is immutable once built and always kept in canonical form, so
//! `==` is structural equality of the underlying mathematical object.

mod intpoly;
mod laurent;
mod mat2;
mod ratfunc;

pub use intpoly::IntPoly;
pub use laurent::LaurentPoly;
pub use mat2::Mat2;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use ratfunc::RatFunc;

use num_traits::{One, Signed, Zero};
use std::fmt;

/// The operations [`Mat2`] needs from its entries.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Inverse if `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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
        if One::is_one(&self.abs()) {
            Some(self.clone())
        } else {
            None
        }
    }
}

/// Parses a decimal integer, used by the JSON decoders.
pub(crate) fn parse_bigint(s: &str) -> crate::Result<BigInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|e| crate::Error::Parse(format!("{s:?}: {e}")))
}

/// Parses `"r/s"` or `"n"` into a reduced rational.
pub fn parse_rational(s: &str) -> crate::Result<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_bigint(n)?;
            let d = parse_bigint(d)?;
            if Zero::is_zero(&d) {
                return Err(crate::Error::ZeroDenominator);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(parse_bigint(s)?)),
    }
}

/// Formats a polynomial-like sum of `coeff * var^exp` terms, highest exponent
/// first, e.g. `t^2 - t - 1`.
pub(crate) fn format_terms<I>(f: &mut fmt::Formatter<'_>, var: &str, terms: I) -> fmt::Result
where
    I: Iterator<Item = (i64, BigInt)>,
{
    let mut first = true;
    for (exp, c) in terms {
        if Zero::is_zero(&c) {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let unit = One::is_one(&mag);
        match exp {
            0 => write!(f, "{mag}")?,
            1 if unit => f.write_str(var)?,
            1 => write!(f, "{mag}*{var}")?,
            e if unit => write!(f, "{var}^{e}")?,
            e => write!(f, "{mag}*{var}^{e}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
