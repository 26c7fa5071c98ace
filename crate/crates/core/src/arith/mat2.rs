use super::Ring;
use crate::{Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// 2×2 matrix `[[a11, a12], [a21, a22]]` over a commutative ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat2<R> {
    pub a11: R,
    pub a12: R,
    pub a21: R,
    pub a22: R,
}

impl<R: Ring> Mat2<R> {
    pub fn new(a11: R, a12: R, a21: R, a22: R) -> Self {
        Mat2 { a11, a12, a21, a22 }
    }

    pub fn identity() -> Self {
        Mat2::new(R::one(), R::zero(), R::zero(), R::one())
    }

    pub fn mul(&self, rhs: &Mat2<R>) -> Mat2<R> {
        Mat2 {
            a11: self
                .a11
                .mul_ref(&rhs.a11)
                .add_ref(&self.a12.mul_ref(&rhs.a21)),
            a12: self
                .a11
                .mul_ref(&rhs.a12)
                .add_ref(&self.a12.mul_ref(&rhs.a22)),
            a21: self
                .a21
                .mul_ref(&rhs.a11)
                .add_ref(&self.a22.mul_ref(&rhs.a21)),
            a22: self
                .a21
                .mul_ref(&rhs.a12)
                .add_ref(&self.a22.mul_ref(&rhs.a22)),
        }
    }

    pub fn trace(&self) -> R {
        self.a11.add_ref(&self.a22)
    }

    pub fn det(&self) -> R {
        self.a11
            .mul_ref(&self.a22)
            .sub_ref(&self.a12.mul_ref(&self.a21))
    }

    pub fn inverse(&self) -> Result<Mat2<R>> {
        let det = self.det();
        let inv = det.unit_inverse().ok_or_else(|| Error::NotInvertible {
            det: det.to_string(),
        })?;
        Ok(Mat2 {
            a11: self.a22.mul_ref(&inv),
            a12: self.a12.neg_ref().mul_ref(&inv),
            a21: self.a21.neg_ref().mul_ref(&inv),
            a22: self.a11.mul_ref(&inv),
        })
    }

    pub fn pow(&self, mut e: u64) -> Mat2<R> {
        let mut base = self.clone();
        let mut acc = Mat2::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Product of the matrices in order; the identity for an empty list.
    pub fn product<'a, I>(factors: I) -> Mat2<R>
    where
        I: IntoIterator<Item = &'a Mat2<R>>,
        R: 'a,
    {
        factors
            .into_iter()
            .fold(Mat2::identity(), |acc, m| acc.mul(m))
    }

    /// Group commutator `X Y X^-1 Y^-1`.
    pub fn commutator(&self, y: &Mat2<R>) -> Result<Mat2<R>> {
        Ok(self.mul(y).mul(&self.inverse()?).mul(&y.inverse()?))
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> Mat2<S> {
        Mat2 {
            a11: f(&self.a11),
            a12: f(&self.a12),
            a21: f(&self.a21),
            a22: f(&self.a22),
        }
    }

    pub fn entries(&self) -> [&R; 4] {
        [&self.a11, &self.a12, &self.a21, &self.a22]
    }
}

impl<R: fmt::Display> fmt::Display for Mat2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a11, self.a12, self.a21, self.a22
        )
    }
}

impl<R: Serialize> Serialize for Mat2<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [&self.a11, &self.a12, &self.a21, &self.a22].serialize(s)
    }
}

impl<'de, R: Deserialize<'de>> Deserialize<'de> for Mat2<R> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<R>::deserialize(d)?;
        let [a11, a12, a21, a22]: [R; 4] = v
            .try_into()
            .map_err(|v: Vec<R>| D::Error::invalid_length(v.len(), &"4 entries"))?;
        Ok(Mat2 { a11, a12, a21, a22 })
    }
}
