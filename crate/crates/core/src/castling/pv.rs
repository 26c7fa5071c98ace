use crate::arith::{BigInt, BigRational};
use crate::markov::{is_markov, markov_number, markov_triple};
use crate::words::{triple_of_fraction, Word, WordTriple};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A Markov triple labelling the space `(3, m1, m2, m3)`, stored ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PVLabel {
    pub m1: BigInt,
    pub m2: BigInt,
    pub m3: BigInt,
}

impl PVLabel {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Result<Self> {
        if !is_markov(&a, &b, &c) {
            return Err(Error::NotMarkov(
                a.to_string(),
                b.to_string(),
                c.to_string(),
            ));
        }
        let mut v = [a, b, c];
        v.sort();
        let [m1, m2, m3] = v;
        Ok(PVLabel { m1, m2, m3 })
    }

    pub fn tuple(&self) -> (BigInt, BigInt, BigInt) {
        (self.m1.clone(), self.m2.clone(), self.m3.clone())
    }

    pub fn render(&self) -> String {
        let (a, b, c) = (&self.m1, &self.m2, &self.m3);
        format!("(SO(3) × GL({a}) × GL({b}) × GL({c}), V(3)⊗V({a})⊗V({b})⊗V({c}))")
    }
}

impl fmt::Display for PVLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.m1, self.m2, self.m3)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PvReport {
    pub fraction: String,
    pub word: Word,
    /// `None` for `1/1`, whose word `b` heads no triple.
    pub triple: Option<WordTriple>,
    /// Markov numbers in tree order `(left, middle, right)`.
    pub tree_order: (BigInt, BigInt, BigInt),
    pub label: PVLabel,
    pub pv: String,
}

/// Fraction in `(0, 1]` -> Christoffel word -> Markov triple -> PV label.
/// `1/1` maps to word `b` and the triple `(m_a, m_b, m_a) = (1, 2, 1)`.
pub fn pv_of_fraction(f: &BigRational) -> Result<PvReport> {
    let triple = triple_of_fraction(f)?;
    let (word, tree_order) = match &triple {
        Some(t) => (t.middle.clone(), markov_triple(t)?),
        None => {
            let one = markov_number(&Word::a())?;
            (Word::b(), (one.clone(), markov_number(&Word::b())?, one))
        }
    };
    let label = PVLabel::new(
        tree_order.0.clone(),
        tree_order.1.clone(),
        tree_order.2.clone(),
    )?;
    Ok(PvReport {
        fraction: f.to_string(),
        word,
        triple,
        tree_order,
        pv: label.render(),
        label,
    })
}
