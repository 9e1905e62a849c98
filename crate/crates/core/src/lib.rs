//! Quantitative semantics for jumping finite automata.
//!
//! A jumping automaton reads its input in any order; the four semantics here
//! measure how far from sequential that reading has to be:
//!
//! * `Abs` – total jump distance,
//! * `Rev` – number of head reversals,
//! * `Ham` – Hamming distance to the nearest accepted permutation,
//! * `Max` – largest single jump.
//!
//! [`oracle`] computes costs by brute force, [`constructions`] builds the
//! automata accepting exactly the words of cost at most `k`, and
//! [`boundedness`] decides whether a cost bound holds over a whole language.

pub mod automata;
pub mod boundedness;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod interplay;
pub mod oracle;
pub mod parikh;

pub use automata::{Alphabet, ImplicitAutomaton, Letter, Nfa};
pub use error::{Error, ResourceExceeded, Result};
pub use oracle::{CostValue, Semantics};
