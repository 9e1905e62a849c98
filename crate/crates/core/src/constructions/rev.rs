use crate::automata::{Alphabet, ImplicitAutomaton, Letter, Nfa, StateId};

/// One simulated state per segment of the shuffle decomposition
/// `w ∈ s_1 ⧢ s_2^R ⧢ s_3 ⧢ ...`. Even coordinates (0-based) run the
/// automaton forwards, odd ones backwards.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RevState {
    pub coords: Vec<StateId>,
}

/// Accepts the words whose reversal cost is at most `k`.
///
/// A backward coordinate starts at the state where its segment ends and
/// finishes where it begins, so neighbouring coordinates are chained by
/// equalities: at the start between a backward coordinate and its right
/// neighbour, at the end between a forward coordinate and its right
/// neighbour. The last coordinate runs forwards into an accepting state.
///
/// Reversal costs are even (the head ends moving right), so an odd `k`
/// behaves like `k - 1`: a trailing backward segment could never be
/// followed by the final jump to the right end.
#[derive(Clone, Debug)]
pub struct RevConstruction<'a> {
    aut: &'a Nfa,
    k: usize,
}

pub fn build_rev(aut: &Nfa, k: usize) -> RevConstruction<'_> {
    RevConstruction { aut, k }
}

impl RevConstruction<'_> {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of segments tracked.
    fn width(&self) -> usize {
        self.k / 2 * 2 + 1
    }
}

impl ImplicitAutomaton for RevConstruction<'_> {
    type State = RevState;

    fn alphabet(&self) -> &Alphabet {
        self.aut.alphabet()
    }

    fn initial_states(&self) -> Vec<RevState> {
        let width = self.width();
        let mut partial: Vec<Vec<StateId>> = self.aut.initial().iter().map(|&q| vec![q]).collect();
        while !partial.is_empty() && partial[0].len() < width {
            let c = partial[0].len();
            let mut next = Vec::new();
            for p in partial {
                if c % 2 == 0 {
                    // forward coordinate starts where the backward one on its left starts
                    let mut p = p;
                    p.push(p[c - 1]);
                    next.push(p);
                } else {
                    for q in 0..self.aut.state_count() {
                        let mut p = p.clone();
                        p.push(q);
                        next.push(p);
                    }
                }
            }
            partial = next;
            if partial.is_empty() {
                return Vec::new();
            }
        }
        partial.into_iter().map(|coords| RevState { coords }).collect()
    }

    fn successors(&self, s: &RevState, sigma: Letter) -> Vec<RevState> {
        let mut out = Vec::new();
        for (c, &q) in s.coords.iter().enumerate() {
            let moves = if c % 2 == 0 {
                self.aut.successors(q, sigma)
            } else {
                self.aut.predecessors(q, sigma)
            };
            for &q2 in moves {
                let mut coords = s.coords.clone();
                coords[c] = q2;
                out.push(RevState { coords });
            }
        }
        out
    }

    fn is_accepting(&self, s: &RevState) -> bool {
        let last = self.width() - 1;
        let chained = (0..last).step_by(2).all(|c| s.coords[c] == s.coords[c + 1]);
        chained && self.aut.is_accepting(s.coords[last])
    }
}
