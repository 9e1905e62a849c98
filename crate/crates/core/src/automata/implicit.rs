use std::collections::VecDeque;
use std::fmt::Debug;
use std::hash::Hash;

use rustc_hash::{FxHashMap, FxHashSet};

use super::alphabet::{Alphabet, Letter};
use super::nfa::{Nfa, StateId};
use crate::error::{ResourceExceeded, Result};

/// An automaton given by its successor function, explored lazily.
///
/// `successors` and `is_accepting` must be pure.
pub trait ImplicitAutomaton {
    type State: Clone + Eq + Hash + Ord + Debug;

    fn alphabet(&self) -> &Alphabet;
    fn initial_states(&self) -> Vec<Self::State>;
    fn successors(&self, state: &Self::State, letter: Letter) -> Vec<Self::State>;
    fn is_accepting(&self, state: &Self::State) -> bool;
}

/// Implicit view of an explicit automaton.
#[derive(Clone, Copy, Debug)]
pub struct NfaView<'a>(pub &'a Nfa);

pub fn as_implicit(aut: &Nfa) -> NfaView<'_> {
    NfaView(aut)
}

impl ImplicitAutomaton for NfaView<'_> {
    type State = StateId;

    fn alphabet(&self) -> &Alphabet {
        self.0.alphabet()
    }

    fn initial_states(&self) -> Vec<StateId> {
        self.0.initial().iter().copied().collect()
    }

    fn successors(&self, state: &StateId, letter: Letter) -> Vec<StateId> {
        self.0.successors(*state, letter).to_vec()
    }

    fn is_accepting(&self, state: &StateId) -> bool {
        self.0.is_accepting(*state)
    }
}

fn normalize<S: Ord>(mut states: Vec<S>) -> Vec<S> {
    states.sort_unstable();
    states.dedup();
    states
}

fn step_macro<A: ImplicitAutomaton>(aut: &A, current: &[A::State], letter: Letter) -> Vec<A::State> {
    let mut next = FxHashSet::default();
    for s in current {
        next.extend(aut.successors(s, letter));
    }
    normalize(next.into_iter().collect())
}

/// Membership by propagating the reachable macro-state letter by letter.
pub fn implicit_member<A: ImplicitAutomaton>(aut: &A, word: &str) -> Result<bool> {
    let letters = aut.alphabet().encode(word)?;
    Ok(member_letters(aut, &letters))
}

pub fn member_letters<A: ImplicitAutomaton>(aut: &A, word: &[Letter]) -> bool {
    member_within(aut, word, usize::MAX).expect("unbounded budget")
}

/// Like [`member_letters`] but gives up once a macro-state holds more than
/// `budget` states.
pub fn member_within<A: ImplicitAutomaton>(
    aut: &A,
    word: &[Letter],
    budget: usize,
) -> Result<bool, ResourceExceeded> {
    let mut current = normalize(aut.initial_states());
    for &l in word {
        if current.is_empty() {
            return Ok(false);
        }
        if current.len() > budget {
            return Err(ResourceExceeded::new(budget, "states in a macro-state"));
        }
        current = step_macro(aut, &current, l);
    }
    if current.len() > budget {
        return Err(ResourceExceeded::new(budget, "states in a macro-state"));
    }
    Ok(current.iter().any(|s| aut.is_accepting(s)))
}

/// Reachable part as an explicit automaton, states numbered in breadth-first
/// discovery order and named `s0, s1, ...`.
pub fn materialize<A: ImplicitAutomaton>(aut: &A, state_budget: usize) -> Result<Nfa, ResourceExceeded> {
    let mut index: FxHashMap<A::State, StateId> = FxHashMap::default();
    let mut states: Vec<A::State> = Vec::new();
    let mut queue = VecDeque::new();
    let mut intern = |s: A::State,
                      states: &mut Vec<A::State>,
                      queue: &mut VecDeque<StateId>|
     -> Result<StateId, ResourceExceeded> {
        if let Some(&id) = index.get(&s) {
            return Ok(id);
        }
        if states.len() >= state_budget {
            return Err(ResourceExceeded::new(state_budget, "reachable states"));
        }
        let id = states.len();
        index.insert(s.clone(), id);
        states.push(s);
        queue.push_back(id);
        Ok(id)
    };

    let mut initial = Vec::new();
    for s in normalize(aut.initial_states()) {
        initial.push(intern(s, &mut states, &mut queue)?);
    }
    let mut transitions = Vec::new();
    while let Some(id) = queue.pop_front() {
        for l in aut.alphabet().letters() {
            let src = states[id].clone();
            for t in normalize(aut.successors(&src, l)) {
                let tid = intern(t, &mut states, &mut queue)?;
                transitions.push((id, l, tid));
            }
        }
    }
    let accepting: Vec<StateId> = (0..states.len()).filter(|&i| aut.is_accepting(&states[i])).collect();
    let names = (0..states.len()).map(|i| format!("s{i}")).collect();
    Ok(Nfa::new(aut.alphabet().clone(), names, initial, accepting, transitions)
        .expect("materialized indices are in range"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniversalityVerdict {
    Universal,
    /// A shortest rejected word.
    NotUniversal(String),
}

/// Universality by breadth-first on-the-fly determinization.
///
/// A macro-state is skipped when one of its subsets was already discovered:
/// every word rejected from the larger set is rejected from the smaller one,
/// at no greater depth, so witnesses stay shortest. `max_macro_states` bounds
/// the number of retained macro-states.
pub fn is_universal<A: ImplicitAutomaton>(
    aut: &A,
    max_macro_states: usize,
) -> Result<UniversalityVerdict, ResourceExceeded> {
    let rejecting = |m: &[A::State]| !m.iter().any(|s| aut.is_accepting(s));

    let start = normalize(aut.initial_states());
    if rejecting(&start) {
        return Ok(witness(aut, String::new()));
    }

    struct Node {
        parent: usize,
        letter: Letter,
    }
    let mut macros: Vec<Vec<A::State>> = vec![start.clone()];
    let mut nodes = vec![Node { parent: usize::MAX, letter: 0 }];
    let mut seen: FxHashSet<Vec<A::State>> = FxHashSet::default();
    // state -> ids of retained macro-states containing it
    let mut containing: FxHashMap<A::State, Vec<usize>> = FxHashMap::default();
    let register = |id: usize, m: &[A::State], containing: &mut FxHashMap<A::State, Vec<usize>>| {
        for s in m {
            containing.entry(s.clone()).or_default().push(id);
        }
    };
    seen.insert(start.clone());
    register(0, &start, &mut containing);
    let mut queue = VecDeque::from([0usize]);
    let mut counts: Vec<usize> = Vec::new();

    while let Some(id) = queue.pop_front() {
        for l in aut.alphabet().letters() {
            let next = step_macro(aut, &macros[id], l);
            if rejecting(&next) {
                let mut word = vec![l];
                let mut cur = id;
                while cur != 0 {
                    word.push(nodes[cur].letter);
                    cur = nodes[cur].parent;
                }
                word.reverse();
                return Ok(witness(aut, aut.alphabet().decode(&word)));
            }
            if seen.contains(&next) || subsumed(&next, &macros, &containing, &mut counts) {
                continue;
            }
            if macros.len() >= max_macro_states {
                return Err(ResourceExceeded::new(max_macro_states, "macro-states"));
            }
            let nid = macros.len();
            seen.insert(next.clone());
            register(nid, &next, &mut containing);
            macros.push(next);
            nodes.push(Node { parent: id, letter: l });
            queue.push_back(nid);
        }
    }
    Ok(UniversalityVerdict::Universal)
}

/// Whether some retained macro-state is a subset of `m`.
fn subsumed<S: Clone + Eq + Hash>(
    m: &[S],
    macros: &[Vec<S>],
    containing: &FxHashMap<S, Vec<usize>>,
    counts: &mut Vec<usize>,
) -> bool {
    counts.clear();
    counts.resize(macros.len(), 0);
    for s in m {
        if let Some(ids) = containing.get(s) {
            for &id in ids {
                counts[id] += 1;
                if counts[id] == macros[id].len() {
                    return true;
                }
            }
        }
    }
    false
}

fn witness<A: ImplicitAutomaton>(aut: &A, word: String) -> UniversalityVerdict {
    let letters = aut.alphabet().encode(&word).expect("witness over own alphabet");
    assert!(!member_letters(aut, &letters), "universality witness must be rejected");
    UniversalityVerdict::NotUniversal(word)
}
