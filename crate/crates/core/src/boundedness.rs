//! Deciding whether a cost bound `k` holds over all of `Σ*` (universal mode)
//! or over the jumping language of the automaton.

use std::fmt;

use crate::automata::{is_universal, materialize, member_within, Letter, Nfa, UniversalityVerdict};
use crate::constructions::{build, cost_via_construction_letters, DEFAULT_MACRO_BUDGET};
use crate::oracle::{CostValue, Oracle, Semantics};
use crate::parikh::{
    jumping_member_letters, parikh_intersection_empty_with, word_with_vector, IntersectionConfig,
    IntersectionVerdict, DEFAULT_NODE_LIMIT,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundednessVerdict {
    Bounded,
    Unbounded { witness: String, cost: CostValue },
    /// Nothing definite; describes how far the check got.
    Unknown(String),
}

impl BoundednessVerdict {
    pub fn is_bounded(&self) -> bool {
        matches!(self, BoundednessVerdict::Bounded)
    }

    pub fn is_unbounded(&self) -> bool {
        matches!(self, BoundednessVerdict::Unbounded { .. })
    }
}

impl fmt::Display for BoundednessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundednessVerdict::Bounded => write!(f, "bounded"),
            BoundednessVerdict::Unbounded { witness, cost } => write!(f, "unbounded witness={witness} cost={cost}"),
            BoundednessVerdict::Unknown(why) => write!(f, "unknown {why}"),
        }
    }
}

/// Cost of a candidate witness, by construction first and by the oracle
/// when the construction runs out of budget.
fn witness_cost(aut: &Nfa, word: &[Letter], sem: Semantics, budget: usize) -> Option<CostValue> {
    match cost_via_construction_letters(aut, word, sem, budget) {
        Ok(c) => Some(c),
        Err(_) => Oracle::default().cost(aut, word, sem).ok(),
    }
}

fn unbounded(aut: &Nfa, word: &[Letter], sem: Semantics, k: usize, budget: usize) -> BoundednessVerdict {
    let text = aut.alphabet().decode(word);
    match witness_cost(aut, word, sem, budget) {
        Some(cost) if !cost.at_most(k) => BoundednessVerdict::Unbounded { witness: text, cost },
        Some(cost) => BoundednessVerdict::Unknown(format!("witness {text:?} has cost {cost}, not above {k}")),
        None => BoundednessVerdict::Unknown(format!("could not determine the cost of witness {text:?}")),
    }
}

/// Whether every word over the alphabet has cost at most `k`.
///
/// `budget` bounds the number of macro-states kept by the universality
/// check.
pub fn univ_bounded(aut: &Nfa, sem: Semantics, k: usize, budget: usize) -> BoundednessVerdict {
    match is_universal(&build(aut, sem, k), budget) {
        Ok(UniversalityVerdict::Universal) => BoundednessVerdict::Bounded,
        Ok(UniversalityVerdict::NotUniversal(w)) => {
            let letters = aut.alphabet().encode(&w).expect("witness over the automaton's alphabet");
            unbounded(aut, &letters, sem, k, DEFAULT_MACRO_BUDGET)
        }
        Err(e) => BoundednessVerdict::Unknown(format!("after {e}")),
    }
}

/// Resource limits of [`jlang_bounded_exact`].
#[derive(Clone, Copy, Debug)]
pub struct ExactBudgets {
    /// Reachable states of the materialized construction.
    pub construction_states: usize,
    /// States of its determinized complement.
    pub complement_states: usize,
    /// Per-transition bound for the Parikh engine; `None` picks the default.
    pub flow_bound: Option<u64>,
    pub node_limit: usize,
}

impl Default for ExactBudgets {
    fn default() -> Self {
        ExactBudgets {
            construction_states: 20_000,
            complement_states: 20_000,
            flow_bound: None,
            node_limit: DEFAULT_NODE_LIMIT,
        }
    }
}

/// Whether every word of the jumping language has cost at most `k`, decided
/// as Parikh-image disjointness of the automaton and the complement of the
/// cost-`k` construction.
pub fn jlang_bounded_exact(aut: &Nfa, sem: Semantics, k: usize, budgets: &ExactBudgets) -> BoundednessVerdict {
    let explicit = match materialize(&build(aut, sem, k), budgets.construction_states) {
        Ok(b) => b,
        Err(e) => return BoundednessVerdict::Unknown(format!("while materializing: {e}")),
    };
    let complement = match explicit.complement(budgets.complement_states) {
        Ok(c) => c,
        Err(e) => return BoundednessVerdict::Unknown(format!("while complementing: {e}")),
    };
    let config = IntersectionConfig {
        flow_bound: budgets.flow_bound.unwrap_or_else(|| crate::parikh::default_flow_bound(&complement, aut)),
        node_limit: budgets.node_limit,
    };
    match parikh_intersection_empty_with(&complement, aut, &config).expect("alphabets agree") {
        IntersectionVerdict::Empty => BoundednessVerdict::Bounded,
        IntersectionVerdict::Unknown(why) => BoundednessVerdict::Unknown(why),
        IntersectionVerdict::NonEmpty(v) => {
            // a word outside the construction whose letters some word of
            // the automaton rearranges
            let word = word_with_vector(&v, &complement).expect("vector is in the complement's image");
            debug_assert!(jumping_member_letters(aut, &word));
            unbounded(aut, &word, sem, k, DEFAULT_MACRO_BUDGET)
        }
    }
}

/// Searches the words of length at most `max_len`, shortest first and then
/// lexicographically, for a member of the jumping language with cost above
/// `k`. Never answers `Bounded`.
pub fn jlang_bounded_search(aut: &Nfa, sem: Semantics, k: usize, max_len: usize) -> BoundednessVerdict {
    let b = build(aut, sem, k);
    for word in aut.alphabet().words_up_to(max_len) {
        if !jumping_member_letters(aut, &word) {
            continue;
        }
        match member_within(&b, &word, DEFAULT_MACRO_BUDGET) {
            Ok(true) => {}
            Ok(false) => return unbounded(aut, &word, sem, k, DEFAULT_MACRO_BUDGET),
            Err(e) => {
                let text = aut.alphabet().decode(&word);
                return BoundednessVerdict::Unknown(format!("at {text:?}: {e}"));
            }
        }
    }
    BoundednessVerdict::Unknown(format!("up to {max_len}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab2() -> Nfa {
        Nfa::from_symbol_transitions("ab", 2, &[0], &[0], &[(0, 'a', 1), (1, 'b', 0)]).unwrap()
    }

    fn asb() -> Nfa {
        Nfa::from_symbol_transitions("ab", 2, &[0], &[0, 1], &[(0, 'a', 0), (0, 'b', 1), (1, 'b', 1)])
            .unwrap()
    }

    #[test]
    fn universal_mode() {
        assert_eq!(univ_bounded(&asb(), Semantics::Rev, 2, 100_000), BoundednessVerdict::Bounded);
        assert_eq!(
            univ_bounded(&asb(), Semantics::Rev, 0, 100_000),
            BoundednessVerdict::Unbounded { witness: "ba".into(), cost: CostValue::Finite(2) }
        );
        for k in 0..=4 {
            assert_eq!(
                univ_bounded(&ab2(), Semantics::Abs, k, 100_000),
                BoundednessVerdict::Unbounded { witness: "a".into(), cost: CostValue::Infinite }
            );
        }
    }

    #[test]
    fn search_mode() {
        assert_eq!(
            jlang_bounded_search(&ab2(), Semantics::Rev, 2, 6),
            BoundednessVerdict::Unbounded { witness: "bbaa".into(), cost: CostValue::Finite(4) }
        );
        assert_eq!(jlang_bounded_search(&asb(), Semantics::Rev, 2, 8), BoundednessVerdict::Unknown("up to 8".into()));
        assert!(jlang_bounded_search(&asb(), Semantics::Ham, 2, 6).is_unbounded());
    }

    #[test]
    fn exact_mode() {
        let budgets = ExactBudgets::default();
        assert_eq!(jlang_bounded_exact(&asb(), Semantics::Rev, 2, &budgets), BoundednessVerdict::Bounded);
        match jlang_bounded_exact(&ab2(), Semantics::Rev, 2, &budgets) {
            BoundednessVerdict::Unbounded { cost, .. } => assert!(!cost.at_most(3)),
            other => panic!("unexpected {other:?}"),
        }
        let all_a = Nfa::from_symbol_transitions("a", 1, &[0], &[0], &[(0, 'a', 0)]).unwrap();
        for sem in Semantics::ALL {
            assert_eq!(jlang_bounded_exact(&all_a, sem, 0, &budgets), BoundednessVerdict::Bounded);
        }
    }
}
