use crate::arith::{BigRational, IntPoly};
use crate::markov::Witness;
use crate::tree::{self, TripleNode};
use crate::words::{path_of_fraction, Word, WordTriple};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// `(f_w, f_{ww'}, f_{w'})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TMarkovTriple {
    pub x: IntPoly,
    pub y: IntPoly,
    pub z: IntPoly,
}

impl TMarkovTriple {
    pub fn new(x: IntPoly, y: IntPoly, z: IntPoly) -> Self {
        TMarkovTriple { x, y, z }
    }

    fn values(&self) -> (IntPoly, IntPoly, IntPoly) {
        (self.x.clone(), self.y.clone(), self.z.clone())
    }
}

fn step(x: &IntPoly, y: &IntPoly, z: &IntPoly) -> IntPoly {
    &(&(&IntPoly::t() * x) * y) - z
}

/// `(f_a, f_ab, f_b) = (1, t^2 - t - 1, t - 1)`.
pub fn t_markov_root() -> TMarkovTriple {
    TMarkovTriple::new(
        IntPoly::from_i64s(&[1]),
        IntPoly::from_i64s(&[-1, -1, 1]),
        IntPoly::from_i64s(&[-1, 1]),
    )
}

/// `(f_u, t f_u f_uv - f_v, f_uv)` and `(f_uv, t f_uv f_v - f_u, f_v)`.
pub fn t_markov_children(x: &TMarkovTriple) -> (TMarkovTriple, TMarkovTriple) {
    (
        TMarkovTriple::new(x.x.clone(), step(&x.x, &x.y, &x.z), x.y.clone()),
        TMarkovTriple::new(x.y.clone(), step(&x.y, &x.z, &x.x), x.z.clone()),
    )
}

/// `x^2 + y^2 + z^2 + (t - 3) = t x y z`.
pub fn verify_t_markov(x: &TMarkovTriple) -> Witness<IntPoly> {
    let (a, b, c) = (&x.x, &x.y, &x.z);
    let lhs = &(&(&(a * a) + &(b * b)) + &(c * c)) + &IntPoly::from_i64s(&[-3, 1]);
    let rhs = &(&(&IntPoly::t() * a) * b) * c;
    Witness::compare(lhs, rhs)
}

pub fn t_markov_tree(depth: usize) -> Vec<TripleNode<IntPoly>> {
    tree::enumerate(t_markov_root().values(), depth, step)
}

/// `f_w(t)` for a Christoffel word, by descending the tree along the
/// Farey path of the word's slope.
pub fn f_of_word(w: &Word) -> Result<IntPoly> {
    match w.as_str() {
        "a" => return Ok(t_markov_root().x),
        "b" => return Ok(t_markov_root().z),
        _ => {}
    }
    let frac: BigRational = w.fraction();
    let path = path_of_fraction(&frac).map_err(|_| Error::NotChristoffel(w.to_string()))?;
    let mut node = TripleNode {
        words: WordTriple::root(),
        values: t_markov_root().values(),
        path: String::new(),
    };
    for c in path.chars() {
        let (l, r) = node.children(&step);
        node = if c == 'L' { l } else { r };
    }
    if &node.words.middle != w {
        return Err(Error::NotChristoffel(w.to_string()));
    }
    Ok(node.values.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::BigInt;
    use crate::markov::markov_tree;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn children_of_root() {
        let (l, r) = t_markov_children(&t_markov_root());
        assert_eq!(l.y, p(&[1, -2, -1, 1]));
        assert_eq!(r.y, p(&[-1, 1, 0, -2, 1]));
        let (_, lr) = t_markov_children(&l);
        assert_eq!(lr.y, p(&[-1, -1, 1, 4, -2, -2, 1]));
        assert_eq!(f_of_word(&w("a^2bab")).unwrap(), lr.y);
    }

    #[test]
    fn equation_to_depth_6_and_t_equals_3() {
        let classical = markov_tree(6);
        let tm = t_markov_tree(6);
        assert_eq!(tm.len(), 63);
        for (n, c) in tm.iter().zip(&classical) {
            let t = TMarkovTriple::new(n.values.0.clone(), n.values.1.clone(), n.values.2.clone());
            assert!(verify_t_markov(&t).holds, "{}", n.words);
            let three = BigInt::from(3);
            let at3 = (t.x.eval(&three), t.y.eval(&three), t.z.eval(&three));
            assert_eq!(at3, c.values);
        }
        let f = f_of_word(&w("a^2ba^2bab")).unwrap();
        assert_eq!(f.eval(&BigInt::from(3)), BigInt::from(7561));
    }

    #[test]
    fn words_outside_tree() {
        assert!(matches!(
            f_of_word(&w("abab")),
            Err(Error::NotChristoffel(_))
        ));
        assert!(matches!(f_of_word(&w("ba")), Err(Error::NotChristoffel(_))));
        assert_eq!(f_of_word(&w("b")).unwrap(), p(&[-1, 1]));
        let bad = TMarkovTriple::new(p(&[1]), p(&[1]), p(&[2]));
        assert!(!verify_t_markov(&bad).holds);
    }
}
