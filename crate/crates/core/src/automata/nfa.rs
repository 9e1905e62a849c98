use std::collections::{BTreeSet, HashMap, VecDeque};

use super::alphabet::{Alphabet, Letter};
use crate::error::{Error, ResourceExceeded, Result};

pub type StateId = usize;

/// Explicit nondeterministic automaton with dense state indices.
///
/// Missing transitions mean the run dies; several initial states are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    names: Vec<String>,
    initial: BTreeSet<StateId>,
    accepting: BTreeSet<StateId>,
    transitions: BTreeSet<(StateId, Letter, StateId)>,
    // succ[q][l] / pred[q][l], sorted
    succ: Vec<Vec<Vec<StateId>>>,
    pred: Vec<Vec<Vec<StateId>>>,
}

impl Nfa {
    /// Builds an automaton, checking index ranges. Duplicate transitions are
    /// merged.
    pub fn new(
        alphabet: Alphabet,
        names: Vec<String>,
        initial: impl IntoIterator<Item = StateId>,
        accepting: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = (StateId, Letter, StateId)>,
    ) -> Result<Self> {
        let n = names.len();
        let initial: BTreeSet<_> = initial.into_iter().collect();
        let accepting: BTreeSet<_> = accepting.into_iter().collect();
        let transitions: BTreeSet<_> = transitions.into_iter().collect();
        let bad_state = |q: StateId| Error::Syntax {
            line: 0,
            message: format!("state index {q} out of range ({n} states)"),
        };
        if let Some(&q) = initial.iter().chain(accepting.iter()).find(|&&q| q >= n) {
            return Err(bad_state(q));
        }
        let mut succ = vec![vec![Vec::new(); alphabet.len()]; n];
        let mut pred = vec![vec![Vec::new(); alphabet.len()]; n];
        for &(p, l, q) in &transitions {
            if p >= n || q >= n {
                return Err(bad_state(p.max(q)));
            }
            if l >= alphabet.len() {
                return Err(Error::Syntax {
                    line: 0,
                    message: format!("letter index {l} out of range"),
                });
            }
            succ[p][l].push(q);
            pred[q][l].push(p);
        }
        for row in pred.iter_mut() {
            for targets in row.iter_mut() {
                targets.sort_unstable();
            }
        }
        Ok(Nfa {
            alphabet,
            names,
            initial,
            accepting,
            transitions,
            succ,
            pred,
        })
    }

    /// Same as [`Nfa::new`] with states named `q0, q1, ...`.
    pub fn with_default_names(
        alphabet: Alphabet,
        state_count: usize,
        initial: impl IntoIterator<Item = StateId>,
        accepting: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = (StateId, Letter, StateId)>,
    ) -> Result<Self> {
        let names = (0..state_count).map(|i| format!("q{i}")).collect();
        Self::new(alphabet, names, initial, accepting, transitions)
    }

    /// Builds from symbol-labelled transitions; handy for fixed automata.
    pub fn from_symbol_transitions(
        alphabet: &str,
        state_count: usize,
        initial: &[StateId],
        accepting: &[StateId],
        transitions: &[(StateId, char, StateId)],
    ) -> Result<Self> {
        let alphabet = Alphabet::from_symbols(alphabet)?;
        let mut trans = Vec::with_capacity(transitions.len());
        for &(p, c, q) in transitions {
            let l = alphabet
                .letter(c)
                .ok_or(Error::UnknownSymbol { symbol: c, line: None })?;
            trans.push((p, l, q));
        }
        Self::with_default_names(
            alphabet,
            state_count,
            initial.iter().copied(),
            accepting.iter().copied(),
            trans,
        )
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.names.len()
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.names[q]
    }

    pub fn state_names(&self) -> &[String] {
        &self.names
    }

    pub fn initial(&self) -> &BTreeSet<StateId> {
        &self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        &self.accepting
    }

    pub fn is_initial(&self, q: StateId) -> bool {
        self.initial.contains(&q)
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting.contains(&q)
    }

    /// Transitions in lexicographic (source, letter, target) order.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Letter, StateId)> + '_ {
        self.transitions.iter().copied()
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn successors(&self, q: StateId, l: Letter) -> &[StateId] {
        &self.succ[q][l]
    }

    pub fn predecessors(&self, q: StateId, l: Letter) -> &[StateId] {
        &self.pred[q][l]
    }

    /// Sequential acceptance by subset simulation.
    pub fn accepts(&self, word: &str) -> Result<bool> {
        Ok(self.accepts_letters(&self.alphabet.encode(word)?))
    }

    pub fn accepts_letters(&self, word: &[Letter]) -> bool {
        let mut current = vec![false; self.state_count()];
        for &q in &self.initial {
            current[q] = true;
        }
        for &l in word {
            let mut next = vec![false; self.state_count()];
            let mut any = false;
            for (p, _) in current.iter().enumerate().filter(|(_, &on)| on) {
                for &q in &self.succ[p][l] {
                    next[q] = true;
                    any = true;
                }
            }
            if !any {
                return false;
            }
            current = next;
        }
        self.accepting.iter().any(|&q| current[q])
    }

    /// States reachable from an initial state.
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        let mut stack: Vec<StateId> = self.initial.iter().copied().collect();
        for &q in &stack {
            seen[q] = true;
        }
        while let Some(p) = stack.pop() {
            for targets in &self.succ[p] {
                for &q in targets {
                    if !seen[q] {
                        seen[q] = true;
                        stack.push(q);
                    }
                }
            }
        }
        seen
    }

    /// States from which an accepting state is reachable.
    pub fn coreachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        let mut stack: Vec<StateId> = self.accepting.iter().copied().collect();
        for &q in &stack {
            seen[q] = true;
        }
        while let Some(q) = stack.pop() {
            for sources in &self.pred[q] {
                for &p in sources {
                    if !seen[p] {
                        seen[p] = true;
                        stack.push(p);
                    }
                }
            }
        }
        seen
    }

    pub fn is_empty_language(&self) -> bool {
        let reach = self.reachable();
        !self.accepting.iter().any(|&q| reach[q])
    }

    /// Minimal complete deterministic automaton: subset construction
    /// (breadth-first, letters in alphabet order, the empty subset as an
    /// explicit sink) followed by partition refinement. States are numbered
    /// in breadth-first order. Fails once more than `budget` subsets have
    /// been discovered.
    pub fn determinize(&self, budget: usize) -> Result<Nfa, ResourceExceeded> {
        self.subset_construction(budget, false)
    }

    /// Minimal complete deterministic automaton for the complement language.
    pub fn complement(&self, budget: usize) -> Result<Nfa, ResourceExceeded> {
        self.subset_construction(budget, true)
    }

    fn subset_construction(&self, budget: usize, flip: bool) -> Result<Nfa, ResourceExceeded> {
        let start: Vec<StateId> = self.initial.iter().copied().collect();
        let mut index: HashMap<Vec<StateId>, StateId> = HashMap::new();
        let mut subsets = vec![start.clone()];
        index.insert(start, 0);
        let mut queue = VecDeque::from([0usize]);
        let mut transitions = Vec::new();
        while let Some(id) = queue.pop_front() {
            for l in self.alphabet.letters() {
                let mut next: Vec<StateId> = subsets[id]
                    .iter()
                    .flat_map(|&p| self.succ[p][l].iter().copied())
                    .collect();
                next.sort_unstable();
                next.dedup();
                let target = match index.get(&next) {
                    Some(&t) => t,
                    None => {
                        if subsets.len() >= budget {
                            return Err(ResourceExceeded::new(budget, "subset states"));
                        }
                        let t = subsets.len();
                        index.insert(next.clone(), t);
                        subsets.push(next);
                        queue.push_back(t);
                        t
                    }
                };
                transitions.push((id, l, target));
            }
        }
        let accepting = subsets.iter().enumerate().filter_map(|(i, s)| {
            let acc = s.iter().any(|&q| self.is_accepting(q));
            (acc != flip).then_some(i)
        });
        let accepting: Vec<_> = accepting.collect();
        let dfa = Nfa::with_default_names(self.alphabet.clone(), subsets.len(), [0], accepting, transitions)
            .expect("subset construction yields consistent indices");
        Ok(dfa.minimize_complete_dfa())
    }

    /// Moore partition refinement on a complete DFA whose single initial
    /// state is 0 and whose states are all reachable.
    fn minimize_complete_dfa(&self) -> Nfa {
        let n = self.state_count();
        let letters = self.alphabet.len();
        let mut class: Vec<usize> = (0..n).map(|q| self.is_accepting(q) as usize).collect();
        let mut count = 0;
        loop {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let next: Vec<usize> = (0..n)
                .map(|q| {
                    let mut sig = Vec::with_capacity(letters + 1);
                    sig.push(class[q]);
                    sig.extend((0..letters).map(|l| class[self.succ[q][l][0]]));
                    let fresh = ids.len();
                    *ids.entry(sig).or_insert(fresh)
                })
                .collect();
            let classes = ids.len();
            class = next;
            if classes == count {
                break;
            }
            count = classes;
        }
        // renumber classes breadth-first from the initial state
        let mut order = vec![usize::MAX; count];
        let mut queue = VecDeque::from([0usize]);
        let mut reps = Vec::new();
        order[class[0]] = 0;
        reps.push(0);
        while let Some(q) = queue.pop_front() {
            for l in 0..letters {
                let t = self.succ[q][l][0];
                if order[class[t]] == usize::MAX {
                    order[class[t]] = reps.len();
                    reps.push(t);
                    queue.push_back(t);
                }
            }
        }
        let transitions: Vec<_> = reps
            .iter()
            .enumerate()
            .flat_map(|(i, &q)| (0..letters).map(move |l| (i, l, q)))
            .map(|(i, l, q)| (i, l, order[class[self.succ[q][l][0]]]))
            .collect();
        let accepting: Vec<_> = (0..reps.len()).filter(|&i| self.is_accepting(reps[i])).collect();
        Nfa::with_default_names(self.alphabet.clone(), reps.len(), [0], accepting, transitions)
            .expect("quotient of a consistent automaton")
    }
}
