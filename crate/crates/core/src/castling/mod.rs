//! The t-deformed side: castling tuples and their two moves, the t-Markov
//! tree of polynomials `f_w(t)`, Chebyshev identities, searches through
//! castling trees and PV labels.

mod chebyshev;
pub mod polycf;
mod pv;
mod scan;
mod tmarkov;

pub use chebyshev::{
    chebyshev_t, chebyshev_u, f_ab_power, p_poly, pq_recurrence_check, q_poly, s_poly,
    s_poly_chebyshev, s_poly_determinant, s_poly_printed, s_poly_recurrence, PqReport, SPolyForms,
};
pub use pv::{pv_of_fraction, PVLabel, PvReport};
pub use scan::{
    castling_bfs, figure4_search, figure4_targets, markov_subtree_scan, path_to, Figure4Outcome,
    Figure4Report, SearchNode, FIGURE4_MAX_DEGREE, FIGURE4_MAX_LEN,
};
pub use tmarkov::{
    f_of_word, t_markov_children, t_markov_root, t_markov_tree, verify_t_markov, TMarkovTriple,
};

use crate::arith::Ring;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// `(dim; f_1, ..., f_l)` where `dim` is an integer or the formal `t`.
/// Entries keep the order the moves produced them in; [`canonical`]
/// gives the sorted form used for deduplication.
///
/// [`canonical`]: CastlingTuple::canonical
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CastlingTuple<R> {
    pub dim: R,
    pub entries: Vec<R>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    Up,
    Flat(usize),
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Up => f.write_str("up"),
            Move::Flat(i) => write!(f, "flat{i}"),
        }
    }
}

impl<R: Ring + Ord> CastlingTuple<R> {
    pub fn new(dim: R, entries: Vec<R>) -> Result<Self> {
        if entries.iter().any(Ring::is_zero) {
            return Err(Error::ZeroEntry);
        }
        Ok(CastlingTuple { dim, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn product_except(&self, skip: Option<usize>) -> R {
        self.entries
            .iter()
            .enumerate()
            .filter(|(j, _)| Some(*j) != skip)
            .fold(R::one(), |acc, (_, f)| acc.mul_ref(f))
    }

    /// Appends `dim * prod(entries) - 1`.
    pub fn ct_up(&self) -> Result<Self> {
        let new = self
            .dim
            .mul_ref(&self.product_except(None))
            .sub_ref(&R::one());
        if new.is_zero() {
            return Err(Error::ZeroEntry);
        }
        let mut entries = self.entries.clone();
        entries.push(new);
        Ok(CastlingTuple {
            dim: self.dim.clone(),
            entries,
        })
    }

    /// Replaces entry `i` by `dim * prod(others) - f_i`.
    pub fn ct_flat(&self, i: usize) -> Result<Self> {
        if i >= self.entries.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.entries.len(),
            });
        }
        let new = self
            .dim
            .mul_ref(&self.product_except(Some(i)))
            .sub_ref(&self.entries[i]);
        if new.is_zero() {
            return Err(Error::ZeroEntry);
        }
        let mut entries = self.entries.clone();
        entries[i] = new;
        Ok(CastlingTuple {
            dim: self.dim.clone(),
            entries,
        })
    }

    pub fn apply(&self, m: Move) -> Result<Self> {
        match m {
            Move::Up => self.ct_up(),
            Move::Flat(i) => self.ct_flat(i),
        }
    }

    /// Entries sorted ascending.
    pub fn canonical(&self) -> Vec<R> {
        let mut v = self.entries.clone();
        v.sort();
        v
    }
}

impl<R: fmt::Display> fmt::Display for CastlingTuple<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.dim)?;
        for (i, e) in self.entries.iter().enumerate() {
            write!(f, "{}{e}", if i == 0 { " " } else { ", " })?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{BigInt, IntPoly};

    fn ints(v: &[i64]) -> CastlingTuple<BigInt> {
        CastlingTuple::new(3.into(), v.iter().map(|&x| x.into()).collect()).unwrap()
    }

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn polynomial_moves() {
        let seed = CastlingTuple::new(IntPoly::t(), vec![p(&[1])]).unwrap();
        let one = seed.ct_up().unwrap();
        assert_eq!(one.entries, vec![p(&[1]), p(&[-1, 1])]);
        let two = one.ct_up().unwrap();
        assert_eq!(two.entries[2], p(&[-1, -1, 1]));
        let three = two.ct_up().unwrap();
        assert_eq!(three.entries[3], p(&[-1, 1, 0, -2, 1]));
        let flat = two.ct_flat(0).unwrap();
        assert_eq!(flat.entries[0], p(&[-1, 1, 0, -2, 1]));
        assert_eq!(
            three.to_string(),
            "(t; 1, t - 1, t^2 - t - 1, t^4 - 2*t^3 + t - 1)"
        );
    }

    #[test]
    fn integer_moves() {
        let c = ints(&[2, 5, 29]);
        assert_eq!(
            c.ct_flat(0).unwrap().canonical(),
            ints(&[5, 29, 433]).entries
        );
        for i in 0..3 {
            assert_eq!(c.ct_flat(i).unwrap().ct_flat(i).unwrap(), c);
        }
        assert!(matches!(
            c.ct_flat(3),
            Err(Error::IndexOutOfRange { index: 3, len: 3 })
        ));
        // up then flat on the new entry gives back 1
        let up = c.ct_up().unwrap();
        assert_eq!(up.ct_flat(3).unwrap().entries[3], BigInt::from(1));
        assert!(CastlingTuple::new(BigInt::from(3), vec![BigInt::from(0)]).is_err());
        assert_eq!(c.apply(Move::Flat(0)).unwrap(), c.ct_flat(0).unwrap());
    }
}
