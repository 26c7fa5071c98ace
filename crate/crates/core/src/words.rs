//! Christoffel words over `{a, b}`, the tree of word triples, and the
//! Farey correspondence between fractions in `(0, 1]` and words.

use crate::arith::{BigInt, BigRational};
use crate::{Error, Result};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

pub use crate::contfrac::farey_sum;

/// Nonempty word over the alphabet `{a, b}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Word(String);

impl Word {
    pub fn new(letters: impl Into<String>) -> Result<Self> {
        let s = letters.into();
        if s.is_empty() || !s.bytes().all(|c| c == b'a' || c == b'b') {
            return Err(Error::InvalidWord(s));
        }
        Ok(Word(s))
    }

    pub fn a() -> Self {
        Word("a".into())
    }

    pub fn b() -> Self {
        Word("b".into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn letters(&self) -> impl Iterator<Item = char> + '_ {
        self.0.chars()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(format!("{}{}", self.0, other.0))
    }

    pub fn count_b(&self) -> usize {
        self.0.bytes().filter(|&c| c == b'b').count()
    }

    /// `#b / length`, the slope this word encodes.
    pub fn fraction(&self) -> BigRational {
        BigRational::new(BigInt::from(self.count_b()), BigInt::from(self.len()))
    }

    /// Run-length form such as `a^2bab^2`.
    pub fn compact(&self) -> String {
        let mut out = String::new();
        let bytes = self.0.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let run = bytes[i..].iter().take_while(|&&c| c == bytes[i]).count();
            out.push(bytes[i] as char);
            if run > 1 {
                out.push_str(&format!("^{run}"));
            }
            i += run;
        }
        out
    }

    /// Whether this word sits in the triple tree (or is `a` / `b`).
    pub fn is_christoffel(&self) -> bool {
        word_of_fraction(&self.fraction()).is_ok_and(|w| &w == self) || self.0 == "a"
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts plain letters and run-length forms: `aab`, `a^2b`, `a2b`.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = String::new();
        let mut chars = s.trim().chars().peekable();
        while let Some(c) = chars.next() {
            if c != 'a' && c != 'b' {
                return Err(Error::InvalidWord(s.to_string()));
            }
            if chars.peek() == Some(&'^') {
                chars.next();
            }
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            let n: usize = if digits.is_empty() {
                1
            } else {
                digits
                    .parse()
                    .map_err(|_| Error::InvalidWord(s.to_string()))?
            };
            out.extend(std::iter::repeat_n(c, n));
        }
        Word::new(out).map_err(|_| Error::InvalidWord(s.to_string()))
    }
}

impl TryFrom<String> for Word {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// `(u, uv, v)`: a node of the Christoffel tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WordTriple {
    pub left: Word,
    pub middle: Word,
    pub right: Word,
}

impl WordTriple {
    pub fn new(left: Word, middle: Word, right: Word) -> Result<Self> {
        if middle != left.concat(&right) {
            return Err(Error::InvalidTriple {
                left: left.to_string(),
                middle: middle.to_string(),
                right: right.to_string(),
            });
        }
        Ok(WordTriple {
            left,
            middle,
            right,
        })
    }

    /// Builds `(u, uv, v)` from the two outer words.
    pub fn from_outer(left: Word, right: Word) -> Self {
        let middle = left.concat(&right);
        WordTriple {
            left,
            middle,
            right,
        }
    }

    pub fn root() -> Self {
        WordTriple::from_outer(Word::a(), Word::b())
    }

    /// `(u, u·uv, uv)`.
    pub fn left_child(&self) -> Self {
        WordTriple::from_outer(self.left.clone(), self.middle.clone())
    }

    /// `(uv, uv·v, v)`.
    pub fn right_child(&self) -> Self {
        WordTriple::from_outer(self.middle.clone(), self.right.clone())
    }

    pub fn children(&self) -> (Self, Self) {
        (self.left_child(), self.right_child())
    }

    pub fn words(&self) -> [&Word; 3] {
        [&self.left, &self.middle, &self.right]
    }
}

impl fmt::Display for WordTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.left, self.middle, self.right)
    }
}

pub fn triple_root() -> WordTriple {
    WordTriple::root()
}

pub fn triple_children(t: &WordTriple) -> (WordTriple, WordTriple) {
    t.children()
}

fn check_unit_interval(f: &BigRational) -> Result<()> {
    if f <= &BigRational::zero() || f > &BigRational::one() {
        return Err(Error::OutOfRange(f.to_string()));
    }
    Ok(())
}

/// Descends the Farey tree from `0/1 ~ a` and `1/1 ~ b`, returning the
/// triple whose middle word corresponds to `f`. `1/1` has no triple.
pub fn triple_of_fraction(f: &BigRational) -> Result<Option<WordTriple>> {
    check_unit_interval(f)?;
    if f.is_one() {
        return Ok(None);
    }
    let mut node = WordTriple::root();
    let (mut lo, mut hi) = (BigRational::zero(), BigRational::one());
    loop {
        let m = farey_sum(&lo, &hi);
        if &m == f {
            return Ok(Some(node));
        }
        if f < &m {
            node = node.left_child();
            hi = m;
        } else {
            node = node.right_child();
            lo = m;
        }
    }
}

/// The Christoffel word of a reduced fraction in `(0, 1]`.
pub fn word_of_fraction(f: &BigRational) -> Result<Word> {
    Ok(match triple_of_fraction(f)? {
        Some(t) => t.middle,
        None => Word::b(),
    })
}

/// Path of `L`/`R` moves from the root triple to the node whose middle word
/// corresponds to `f`. `1/1` has no node.
pub fn path_of_fraction(f: &BigRational) -> Result<String> {
    check_unit_interval(f)?;
    if f.is_one() {
        return Err(Error::OutOfRange(f.to_string()));
    }
    let mut path = String::new();
    let (mut lo, mut hi) = (BigRational::zero(), BigRational::one());
    loop {
        let m = farey_sum(&lo, &hi);
        if &m == f {
            return Ok(path);
        }
        if f < &m {
            path.push('L');
            hi = m;
        } else {
            path.push('R');
            lo = m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!(w("a^2bab^2").as_str(), "aababb");
        assert_eq!(w("a3b").as_str(), "aaab");
        assert_eq!(w("aab").compact(), "a^2b");
        assert!("abc".parse::<Word>().is_err());
        assert!("".parse::<Word>().is_err());
        assert!(Word::new("").is_err());
    }

    #[test]
    fn tree_shape() {
        let root = triple_root();
        assert_eq!(root.to_string(), "(a, ab, b)");
        let (l, r) = triple_children(&root);
        assert_eq!(l.to_string(), "(a, aab, ab)");
        assert_eq!(r.to_string(), "(ab, abb, b)");
        assert!(WordTriple::new(w("a"), w("a"), w("a")).is_err());
    }

    #[test]
    fn fraction_to_word() {
        assert_eq!(word_of_fraction(&r(3, 5)).unwrap(), w("abab^2"));
        assert_eq!(word_of_fraction(&r(5, 8)).unwrap(), w("abab^2ab^2"));
        assert_eq!(word_of_fraction(&r(8, 13)).unwrap(), w("abab^2abab^2ab^2"));
        assert_eq!(word_of_fraction(&r(1, 2)).unwrap(), w("ab"));
        assert_eq!(word_of_fraction(&r(1, 1)).unwrap(), w("b"));
        for p in 2..12 {
            assert_eq!(
                word_of_fraction(&r(1, p)).unwrap(),
                w(&format!("a^{}b", p - 1))
            );
            assert_eq!(
                word_of_fraction(&r(p - 1, p)).unwrap(),
                w(&format!("ab^{}", p - 1))
            );
        }
        assert!(matches!(
            word_of_fraction(&r(3, 2)),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            word_of_fraction(&r(0, 1)),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn paths() {
        assert_eq!(path_of_fraction(&r(1, 2)).unwrap(), "");
        assert_eq!(path_of_fraction(&r(1, 3)).unwrap(), "L");
        assert_eq!(path_of_fraction(&r(3, 5)).unwrap(), "RL");
    }

    #[test]
    fn christoffel_membership() {
        assert!(w("a").is_christoffel());
        assert!(w("b").is_christoffel());
        assert!(w("a^2bab").is_christoffel());
        assert!(!w("abab").is_christoffel());
        assert!(!w("ba").is_christoffel());
    }

    /// Exhaustive checks to depth 8: concatenation invariant, bijection with
    /// fractions, and mediants of Farey parents.
    #[test]
    fn bijection_to_depth_8() {
        let mut level = vec![(triple_root(), r(0, 1), r(1, 1))];
        let mut seen = HashSet::new();
        for _ in 0..8 {
            let mut next = Vec::new();
            for (t, lo, hi) in level {
                assert_eq!(t.middle, t.left.concat(&t.right));
                let m = farey_sum(&lo, &hi);
                assert_eq!(t.middle.fraction(), m);
                assert_eq!(word_of_fraction(&m).unwrap(), t.middle);
                assert_eq!(t.left.fraction(), lo);
                assert!(t.right.fraction() == hi);
                assert!(seen.insert(t.middle.clone()));
                let (l, r) = t.children();
                next.push((l, lo.clone(), m.clone()));
                next.push((r, m, hi));
            }
            level = next;
        }
        assert_eq!(seen.len(), 255);
    }
}
