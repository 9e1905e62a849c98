use crate::automata::{Alphabet, ImplicitAutomaton, Letter, Nfa, StateId};

/// `(q, balance, swaps)`: `balance[σ]` counts letters simulated as σ minus
/// letters actually read as σ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HamState {
    pub q: StateId,
    pub balance: Vec<i8>,
    pub swaps: u8,
}

/// Accepts the words whose Hamming cost is at most `k`.
#[derive(Clone, Debug)]
pub struct HamConstruction<'a> {
    aut: &'a Nfa,
    k: usize,
}

pub fn build_ham(aut: &Nfa, k: usize) -> HamConstruction<'_> {
    assert!(k < i8::MAX as usize, "k too large for the balance counters");
    HamConstruction { aut, k }
}

impl HamConstruction<'_> {
    pub fn k(&self) -> usize {
        self.k
    }
}

impl ImplicitAutomaton for HamConstruction<'_> {
    type State = HamState;

    fn alphabet(&self) -> &Alphabet {
        self.aut.alphabet()
    }

    fn initial_states(&self) -> Vec<HamState> {
        let zero = vec![0; self.aut.alphabet().len()];
        self.aut
            .initial()
            .iter()
            .map(|&q| HamState { q, balance: zero.clone(), swaps: 0 })
            .collect()
    }

    fn successors(&self, s: &HamState, sigma: Letter) -> Vec<HamState> {
        let k = self.k as i8;
        let mut out: Vec<HamState> = self
            .aut
            .successors(s.q, sigma)
            .iter()
            .map(|&q| HamState { q, ..s.clone() })
            .collect();
        if (s.swaps as usize) < self.k && s.balance[sigma] > -k {
            for tau in self.aut.alphabet().letters().filter(|&t| t != sigma) {
                if s.balance[tau] >= k {
                    continue;
                }
                let mut balance = s.balance.clone();
                balance[sigma] -= 1;
                balance[tau] += 1;
                for &q in self.aut.successors(s.q, tau) {
                    out.push(HamState { q, balance: balance.clone(), swaps: s.swaps + 1 });
                }
            }
        }
        out
    }

    fn is_accepting(&self, s: &HamState) -> bool {
        self.aut.is_accepting(s.q) && s.balance.iter().all(|&b| b == 0)
    }
}
