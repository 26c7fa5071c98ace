//! Two further q-deformations of the Markov equation built from matrix
//! entries rather than traces.

use super::{q_markov_constant, q_markov_value_of, q_three, CohnTriple};
use crate::arith::LaurentPoly;
use crate::words::WordTriple;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Default exponent window `[-ALT2_WINDOW, ALT2_WINDOW]`.
pub const ALT2_WINDOW: i64 = 80;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AltWitness {
    pub holds: bool,
    pub exponent: Option<i64>,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

/// `q^-3 x^2 + y^2 + z^2 = [3]_q x' y z` where `x, y, z` are the `(1,2)`
/// entries of the q-Cohn triple and `x' = h_{w1}`.
pub fn verify_alt_deformation_1(t: &WordTriple) -> Result<AltWitness> {
    let c = CohnTriple::q(t);
    let x_prime = q_markov_value_of(&c.m1)?;
    Ok(alt1_with(&c, &x_prime))
}

pub(crate) fn alt1_with(c: &CohnTriple<LaurentPoly>, x_prime: &LaurentPoly) -> AltWitness {
    let (x, y, z) = (&c.m1.a12, &c.m12.a12, &c.m2.a12);
    let lhs = &(&(x * x).shift(-3) + &(y * y)) + &(z * z);
    let rhs = &(&(&q_three() * x_prime) * y) * z;
    AltWitness {
        holds: lhs == rhs,
        exponent: None,
        lhs,
        rhs,
    }
}

/// Both sides of the second deformation with `e = 0`, for a given
/// coefficient in front of the right-hand side.
fn alt2_sides(t: &WordTriple, factor: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
    let c = CohnTriple::q(t);
    let x = q_markov_value_of(&c.m1)?;
    let y = q_markov_value_of(&c.m12)?;
    let z = q_markov_value_of(&c.m2)?;
    let lhs = &(&(&(&x * &x).shift(-3) + &(&y * &y)) + &(&z * &z)) + &q_markov_constant();
    let y_prime = c.m12.a12.invert_var();
    let z_prime = &c.m2.a12;
    let rhs = &(&(factor * &x) * &y_prime) * z_prime;
    Ok((lhs, rhs))
}

fn search(lhs: LaurentPoly, rhs0: LaurentPoly, lo: i64, hi: i64) -> Result<AltWitness> {
    for e in lo..=hi {
        let rhs = rhs0.shift(e);
        if rhs == lhs {
            return Ok(AltWitness {
                holds: true,
                exponent: Some(e),
                lhs,
                rhs,
            });
        }
    }
    Err(Error::NoExponentFound { lo, hi })
}

/// `q^-3 x^2 + y^2 + z^2 + (q-1)^2/q^3 = [3]_q x y' z'` with
/// `x, y, z = h_{w1}, h_{w1w2}, h_{w2}`, `y' = q^e (w1w2)_{12}(q^-1)` and
/// `z' = (w2)_{12}`, searching `e` over `lo..=hi` (empty when `lo > hi`).
pub fn alt_deformation_2_search(t: &WordTriple, lo: i64, hi: i64) -> Result<AltWitness> {
    let (lhs, rhs0) = alt2_sides(t, &q_three())?;
    search(lhs, rhs0, lo, hi)
}

/// [`alt_deformation_2_search`] over the default window.
pub fn verify_alt_deformation_2(t: &WordTriple) -> Result<AltWitness> {
    alt_deformation_2_search(t, -ALT2_WINDOW, ALT2_WINDOW)
}

/// The same identity with `[3]_{q^2} = (q^2+q+1)(q^2-q+1)` in place of
/// `[3]_q` on the right.
pub fn verify_alt_deformation_2_corrected(t: &WordTriple) -> Result<AltWitness> {
    let (lhs, rhs0) = alt2_sides(t, &q_three().subst_power(2))?;
    search(lhs, rhs0, -ALT2_WINDOW, ALT2_WINDOW)
}
