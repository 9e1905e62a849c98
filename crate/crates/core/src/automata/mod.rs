//! Explicit and implicit automata, the text format, and universality.

mod alphabet;
mod format;
mod implicit;
mod nfa;

pub use alphabet::{Alphabet, Letter, WordsOfLength};
pub use format::{parse_automaton, serialize_automaton};
pub use implicit::{
    as_implicit, implicit_member, is_universal, materialize, member_letters, member_within,
    ImplicitAutomaton, NfaView, UniversalityVerdict,
};
pub use nfa::{Nfa, StateId};
