//! Polynomial continued fractions `[0; q1, q2, ...]` claimed to evaluate to
//! ratios `f_w / f_w''` of t-Markov polynomials.

use super::f_of_word;
use crate::arith::IntPoly;
use crate::contfrac::PolyCF;
use crate::words::Word;
use crate::Result;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// One partial quotient as printed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quot {
    Zero,
    /// `±t`.
    T(i64),
    /// `± f_w` or `± t f_w`.
    F {
        sign: i64,
        times_t: bool,
        word: &'static str,
    },
    /// Explicit coefficients, highest degree first.
    Lit(&'static [i64]),
}

#[derive(Clone, Copy, Debug)]
pub struct PolyCfDisplay {
    pub label: &'static str,
    pub numerator: &'static str,
    pub denominator: &'static str,
    pub quotients: &'static [Quot],
}

const fn f(sign: i64, word: &'static str) -> Quot {
    Quot::F {
        sign,
        times_t: false,
        word,
    }
}

const fn tf(sign: i64, word: &'static str) -> Quot {
    Quot::F {
        sign,
        times_t: true,
        word,
    }
}

const TF_A3B: &[i64] = &[1, -1, -3, 2, 1, 0];
const NEG_TF_A3B: &[i64] = &[-1, 1, 3, -2, -1, 0];
const NEG_F_A2B: &[i64] = &[-1, 1, 2, -1];

/// The printed list. The first ratio is given three times: as a nested
/// fraction with three quotients, as an explicit bracket, and in terms of
/// `f_w`.
pub const DISPLAYS: &[PolyCfDisplay] = &[
    PolyCfDisplay {
        label: "1 (nested fraction)",
        numerator: "a^3ba^3ba^2b",
        denominator: "a^3ba^3ba^3ba^2b",
        quotients: &[
            Quot::Zero,
            Quot::Lit(TF_A3B),
            Quot::Lit(NEG_TF_A3B),
            Quot::Lit(NEG_F_A2B),
        ],
    },
    PolyCfDisplay {
        label: "1 (explicit bracket)",
        numerator: "a^3ba^3ba^2b",
        denominator: "a^3ba^3ba^3ba^2b",
        quotients: &[
            Quot::Zero,
            Quot::Lit(TF_A3B),
            Quot::Lit(NEG_TF_A3B),
            Quot::Lit(TF_A3B),
            Quot::Lit(NEG_F_A2B),
        ],
    },
    PolyCfDisplay {
        label: "1 (in f_w)",
        numerator: "a^3ba^3ba^2b",
        denominator: "a^3ba^3ba^3ba^2b",
        quotients: &[
            Quot::Zero,
            tf(1, "a^3b"),
            tf(-1, "a^3b"),
            tf(1, "a^3b"),
            f(-1, "a^2b"),
        ],
    },
    PolyCfDisplay {
        label: "2",
        numerator: "a^2ba^2bab",
        denominator: "a^2ba^2baba^2bab",
        quotients: &[
            Quot::Zero,
            tf(1, "a^2b"),
            tf(-1, "a^2bab"),
            Quot::T(1),
            Quot::T(-1),
            f(1, "b"),
        ],
    },
    PolyCfDisplay {
        label: "3",
        numerator: "a^2ba^2baba^2bab",
        denominator: "a^2baba^2ba^2baba^2bab",
        quotients: &[
            Quot::Zero,
            tf(1, "a^2bab"),
            tf(-1, "a^2b"),
            tf(1, "a^2bab"),
            Quot::T(-1),
            Quot::T(1),
            f(-1, "b"),
        ],
    },
    PolyCfDisplay {
        label: "4",
        numerator: "a^2babab",
        denominator: "a^2baba^2babab",
        quotients: &[
            Quot::Zero,
            tf(1, "a^2bab"),
            tf(-1, "a^2bab"),
            Quot::T(-1),
            f(1, "b"),
        ],
    },
    PolyCfDisplay {
        label: "5",
        numerator: "a^2baba^2babab",
        denominator: "a^2baba^2baba^2babab",
        quotients: &[
            Quot::Zero,
            tf(1, "a^2bab"),
            tf(-1, "a^2bab"),
            tf(1, "a^2bab"),
            Quot::T(1),
            f(-1, "b"),
        ],
    },
    PolyCfDisplay {
        label: "6",
        numerator: "ababab^2",
        denominator: "ababab^2abab^2",
        quotients: &[
            Quot::Zero,
            tf(1, "abab^2"),
            tf(-1, "abab^2"),
            f(1, "ab"),
            f(-1, "ab"),
        ],
    },
    PolyCfDisplay {
        label: "7",
        numerator: "ababab^2abab^2",
        denominator: "ababab^2abab^2abab^2",
        quotients: &[
            Quot::Zero,
            tf(1, "abab^2"),
            tf(-1, "abab^2"),
            tf(1, "abab^2"),
            f(-1, "ab"),
            f(1, "ab"),
        ],
    },
    PolyCfDisplay {
        label: "8",
        numerator: "abab^2abab^2ab^2",
        denominator: "abab^2abab^2abab^2ab^2",
        quotients: &[
            Quot::Zero,
            tf(1, "abab^2"),
            tf(-1, "abab^2"),
            tf(1, "b"),
            f(-1, "ab"),
        ],
    },
    PolyCfDisplay {
        label: "9",
        numerator: "ab^2ab^3",
        denominator: "ab^2ab^3ab^3",
        quotients: &[
            Quot::Zero,
            tf(1, "ab^3"),
            tf(-1, "ab^3"),
            f(1, "a^2b"),
            f(-1, "b"),
        ],
    },
    PolyCfDisplay {
        label: "10",
        numerator: "ab^2ab^3ab^3",
        denominator: "ab^2ab^3ab^3ab^3",
        quotients: &[
            Quot::Zero,
            tf(1, "ab^2"),
            tf(-1, "ab^2"),
            tf(1, "ab^2"),
            f(-1, "ab^2"),
            f(-1, "a^2b"),
            f(1, "b"),
        ],
    },
    PolyCfDisplay {
        label: "11",
        numerator: "ab^4",
        denominator: "ab^3ab^4",
        quotients: &[
            Quot::Zero,
            tf(1, "ab^3"),
            f(-1, "ab^2"),
            f(-1, "ab"),
            f(1, "ab^2"),
        ],
    },
];

fn word(s: &str) -> Result<Word> {
    s.parse()
}

impl Quot {
    pub fn eval(&self) -> Result<IntPoly> {
        Ok(match *self {
            Quot::Zero => IntPoly::default(),
            Quot::T(s) => IntPoly::monomial(s, 1),
            Quot::F {
                sign,
                times_t,
                word: w,
            } => {
                let mut p = f_of_word(&word(w)?)?.scale(&sign.into());
                if times_t {
                    p = &p * &IntPoly::t();
                }
                p
            }
            Quot::Lit(c) => {
                let mut v = c.to_vec();
                v.reverse();
                IntPoly::from_i64s(&v)
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisplayCheck {
    pub label: String,
    pub numerator: String,
    pub denominator: String,
    /// Reduced value of the continued fraction.
    pub value: Option<(IntPoly, IntPoly)>,
    /// `f_numerator / f_denominator`, when both words lie in the tree.
    pub stated: Option<(IntPoly, IntPoly)>,
    pub matches: bool,
    pub note: Option<String>,
}

impl PolyCfDisplay {
    pub fn check(&self) -> DisplayCheck {
        let mut out = DisplayCheck {
            label: self.label.into(),
            numerator: self.numerator.into(),
            denominator: self.denominator.into(),
            value: None,
            stated: None,
            matches: false,
            note: None,
        };
        let value = self
            .quotients
            .iter()
            .map(Quot::eval)
            .collect::<Result<Vec<_>>>()
            .and_then(|q| PolyCF::new(q).eval());
        match value {
            Ok(v) => out.value = Some(v),
            Err(e) => out.note = Some(format!("continued fraction: {e}")),
        }
        let stated = word(self.numerator)
            .and_then(|w| f_of_word(&w))
            .and_then(|n| Ok((n, f_of_word(&word(self.denominator)?)?)));
        match stated {
            Ok(s) => out.stated = Some(s),
            Err(e) => {
                out.note.get_or_insert_with(|| format!("stated ratio: {e}"));
            }
        }
        if let (Some((a, b)), Some((c, d))) = (&out.value, &out.stated) {
            out.matches = a * d == b * c;
        }
        out
    }
}

pub fn check_all() -> Vec<DisplayCheck> {
    DISPLAYS.par_iter().map(PolyCfDisplay::check).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_quotients_match_symbolic() {
        assert_eq!(
            Quot::Lit(TF_A3B).eval().unwrap(),
            tf(1, "a^3b").eval().unwrap()
        );
        assert_eq!(
            Quot::Lit(NEG_F_A2B).eval().unwrap(),
            f(-1, "a^2b").eval().unwrap()
        );
    }

    #[test]
    fn outcomes() {
        let all = check_all();
        assert_eq!(all.len(), 13);
        let ok: Vec<_> = all
            .iter()
            .filter(|c| c.matches)
            .map(|c| c.label.as_str())
            .collect();
        assert_eq!(ok, ["1 (explicit bracket)", "1 (in f_w)"]);
        // the third ratio names a word outside the tree
        let third = &all[4];
        assert!(third.stated.is_none());
        assert!(third
            .note
            .as_deref()
            .unwrap()
            .contains("not a Christoffel word"));
    }
}
