//! Binary triple trees shared by the Markov, q-Markov and t-Markov worlds.
//!
//! Every tree here has the same shape as the Christoffel word tree: a node
//! `(x, y, z)` has children `(x, step(x, y, z), y)` and `(y, step(y, z, x), z)`
//! where `step(u, v, w) = k*u*v - w` for the tree's constant `k`.

use crate::words::WordTriple;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// A node carrying its word labels, its values and its `L`/`R` path from the
/// root (empty at the root).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleNode<T> {
    pub words: WordTriple,
    pub values: (T, T, T),
    pub path: String,
}

impl<T> TripleNode<T> {
    /// Root is depth 1.
    pub fn depth(&self) -> usize {
        self.path.len() + 1
    }

    pub fn map<S>(&self, mut f: impl FnMut(&T) -> S) -> TripleNode<S> {
        TripleNode {
            words: self.words.clone(),
            values: (f(&self.values.0), f(&self.values.1), f(&self.values.2)),
            path: self.path.clone(),
        }
    }
}

impl<T: Clone + Send + Sync> TripleNode<T> {
    pub fn children<F>(&self, step: &F) -> (TripleNode<T>, TripleNode<T>)
    where
        F: Fn(&T, &T, &T) -> T,
    {
        let (x, y, z) = &self.values;
        let (lw, rw) = self.words.children();
        let left = TripleNode {
            words: lw,
            values: (x.clone(), step(x, y, z), y.clone()),
            path: format!("{}L", self.path),
        };
        let right = TripleNode {
            words: rw,
            values: (y.clone(), step(y, z, x), z.clone()),
            path: format!("{}R", self.path),
        };
        (left, right)
    }
}

/// All nodes down to `depth` levels (root = level 1), in breadth-first,
/// left-to-right order: `2^depth - 1` nodes. Each level is expanded in
/// parallel; the output order does not depend on scheduling.
pub fn enumerate<T, F>(root: (T, T, T), depth: usize, step: F) -> Vec<TripleNode<T>>
where
    T: Clone + Send + Sync,
    F: Fn(&T, &T, &T) -> T + Sync,
{
    if depth == 0 {
        return Vec::new();
    }
    let mut level = vec![TripleNode {
        words: WordTriple::root(),
        values: root,
        path: String::new(),
    }];
    let mut out = Vec::with_capacity((1usize << depth.min(40)) - 1);
    for d in 1..=depth {
        let next: Vec<TripleNode<T>> = if d < depth {
            level
                .par_iter()
                .flat_map_iter(|n| {
                    let (l, r) = n.children(&step);
                    [l, r]
                })
                .collect()
        } else {
            Vec::new()
        };
        out.append(&mut level);
        level = next;
    }
    out
}

/// Word triples only, in the same order as [`enumerate`].
pub fn word_triples(depth: usize) -> Vec<WordTriple> {
    enumerate(((), (), ()), depth, |_, _, _| ())
        .into_iter()
        .map(|n| n.words)
        .collect()
}
