//! Exact computations with q- and t-deformations of Markov triples:
//! q-rationals and continued fractions, Christoffel words, Cohn matrices,
//! castling tuples, and the passage between the q and t pictures.

pub mod arith;
pub mod bridge;
pub mod castling;
pub mod contfrac;
pub mod errata;
mod error;
pub mod golden;
pub mod markov;
pub mod qrat;
pub mod tree;
pub mod words;

pub use error::{Error, Result};
