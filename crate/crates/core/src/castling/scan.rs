//! Breadth-first searches through castling trees.

use super::{CastlingTuple, Move, PVLabel};
use crate::arith::{BigInt, IntPoly, Ring};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

pub const FIGURE4_MAX_DEGREE: usize = 30;
pub const FIGURE4_MAX_LEN: usize = 5;

/// A visited tuple and how it was first reached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchNode<R> {
    pub tuple: CastlingTuple<R>,
    pub parent: Option<usize>,
    pub via: Option<Move>,
    pub depth: usize,
}

/// Visits every tuple reachable from `seed` by castling moves whose length
/// stays at most `max_len` and which satisfies `keep`, deduplicating on the
/// sorted entries. Nodes come out in BFS order; within a level, in the order
/// of their parents and then of the moves `up, flat0, flat1, ...`, so the
/// result does not depend on how the parallel expansion is scheduled.
/// Stops adding nodes once `max_states` have been visited.
pub fn castling_bfs<R, K>(
    seed: CastlingTuple<R>,
    max_len: usize,
    keep: K,
    max_states: usize,
) -> (Vec<SearchNode<R>>, bool)
where
    R: Ring + Ord,
    K: Fn(&CastlingTuple<R>) -> bool + Sync,
{
    let mut seen = BTreeSet::new();
    seen.insert(seed.canonical());
    let mut nodes = vec![SearchNode {
        tuple: seed,
        parent: None,
        via: None,
        depth: 0,
    }];
    let mut frontier = vec![0usize];
    let mut truncated = false;
    while !frontier.is_empty() && !truncated {
        let expanded: Vec<Vec<(usize, Move, CastlingTuple<R>)>> = frontier
            .par_iter()
            .map(|&i| {
                let t = &nodes[i].tuple;
                let moves = (t.len() < max_len)
                    .then_some(Move::Up)
                    .into_iter()
                    .chain((0..t.len()).map(Move::Flat));
                moves
                    .filter_map(|m| t.apply(m).ok().map(|c| (i, m, c)))
                    .filter(|(_, _, c)| keep(c))
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for (parent, via, tuple) in expanded.into_iter().flatten() {
            if !seen.insert(tuple.canonical()) {
                continue;
            }
            if nodes.len() >= max_states {
                truncated = true;
                break;
            }
            next.push(nodes.len());
            nodes.push(SearchNode {
                tuple,
                parent: Some(parent),
                via: Some(via),
                depth: nodes[parent].depth + 1,
            });
        }
        frontier = next;
    }
    (nodes, truncated)
}

/// Moves leading from the root to node `i`.
pub fn path_to<R>(nodes: &[SearchNode<R>], mut i: usize) -> Vec<Move> {
    let mut path = Vec::new();
    while let (Some(p), Some(m)) = (nodes[i].parent, nodes[i].via) {
        path.push(m);
        i = p;
    }
    path.reverse();
    path
}

/// All 3-entry tuples reachable from an integer seed with dimension 3 by
/// flats, every entry at most `budget`, as PV labels in BFS order. Fails
/// with `NotMarkov` if a reached tuple breaks the Markov equation.
pub fn markov_subtree_scan(seed: &CastlingTuple<BigInt>, budget: &BigInt) -> Result<Vec<PVLabel>> {
    if seed.dim != BigInt::from(3) {
        return Err(Error::OutOfRange(format!(
            "dimension {} (expected 3)",
            seed.dim
        )));
    }
    if seed.len() != 3 {
        return Err(Error::OutOfRange(format!(
            "{} entries (expected 3)",
            seed.len()
        )));
    }
    let keep = |c: &CastlingTuple<BigInt>| c.entries.iter().all(|e| e <= budget);
    if !keep(seed) {
        return Ok(Vec::new());
    }
    let (nodes, _) = castling_bfs(seed.clone(), 3, keep, usize::MAX);
    nodes
        .iter()
        .map(|n| {
            let e = &n.tuple.entries;
            PVLabel::new(e[0].clone(), e[1].clone(), e[2].clone())
        })
        .collect()
}

/// Outcome of looking for one polynomial among the entries of the tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Figure4Outcome {
    pub name: String,
    pub target: IntPoly,
    /// Moves from `(t; 1)` to the first tuple containing the target.
    pub path: Option<Vec<Move>>,
    pub tuple: Option<CastlingTuple<IntPoly>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Figure4Report {
    pub max_degree: usize,
    pub max_len: usize,
    pub states: usize,
    pub truncated: bool,
    pub outcomes: Vec<Figure4Outcome>,
}

impl Figure4Report {
    pub fn found(&self, name: &str) -> bool {
        self.outcomes
            .iter()
            .any(|o| o.name == name && o.path.is_some())
    }
}

/// The polynomials listed next to the t-castling tree picture, with their
/// labels. `f_3a` is listed twice with different values, so both are kept.
pub fn figure4_targets() -> Vec<(String, IntPoly)> {
    let p = |name: &str, hi_to_lo: &[i64]| {
        let mut c = hi_to_lo.to_vec();
        c.reverse();
        (name.to_string(), IntPoly::from_i64s(&c))
    };
    vec![
        p("f_2", &[1, -1, -1]),
        p("f_3", &[1, -2, 0, 1, -1]),
        p("f_4", &[1, -3, 1, 2, 1, -1, -1, -1]),
        p(
            "f_5",
            &[1, -6, 11, -2, -9, -4, 10, 7, -2, -7, -3, 1, 2, 1, -1],
        ),
        p(
            "f_6",
            &[
                1, -12, 58, -136, 127, 56, -126, -158, 229, 196, -158, -314, 34, 294, 146, -142,
                -213, -26, 116, 90, -9, -45, -23, 5, 9, 3, -1, -1, -1,
            ],
        ),
        p("f_3a (first)", &[1, -2, 0, 0, 2, 1]),
        p("f_3a (second)", &[1, -2, 0, -1, 2, 1]),
        p("f_2a^(1)", &[1, -2, -2, 4, -1, -1, -1]),
        p("(f_2a^(1))_a", &[1, -3, -1, 8, -1, -6, -2, 3, 3, -1]),
        p("(f_2a^(1))_b", &[1, -3, -2, 11, -1, -12, 2, 0, 3, 0, 1]),
        p(
            "f_2a^(2)",
            &[1, -4, 0, 16, -10, -22, 15, 14, -5, -6, 0, 1, -1],
        ),
        p("f_3aa", &[1, -1, -3, 2, 1]),
    ]
}

/// Cap on visited tuples for [`figure4_search`].
const FIGURE4_MAX_STATES: usize = 20_000_000;

/// BFS from `(t; 1)` with every entry of degree at most `max_degree` and at
/// most `max_len` entries, reporting for each target the first tuple (and
/// the move path to it) in which it appears as an entry.
pub fn figure4_search(
    targets: &[(String, IntPoly)],
    max_degree: usize,
    max_len: usize,
) -> Figure4Report {
    let seed = CastlingTuple::new(IntPoly::t(), vec![IntPoly::constant(1)]).expect("nonzero seed");
    let keep = |c: &CastlingTuple<IntPoly>| {
        c.entries
            .iter()
            .all(|e| e.degree().is_some_and(|d| d <= max_degree))
    };
    let (nodes, truncated) = castling_bfs(seed, max_len, keep, FIGURE4_MAX_STATES);
    let outcomes = targets
        .par_iter()
        .map(|(name, target)| {
            let hit = nodes.iter().position(|n| n.tuple.entries.contains(target));
            Figure4Outcome {
                name: name.clone(),
                target: target.clone(),
                path: hit.map(|i| path_to(&nodes, i)),
                tuple: hit.map(|i| nodes[i].tuple.clone()),
            }
        })
        .collect();
    Figure4Report {
        max_degree,
        max_len,
        states: nodes.len(),
        truncated,
        outcomes,
    }
}
