//! Automata accepting exactly the words of cost at most `k`, one per
//! semantics, all explored lazily.

mod abs;
mod ham;
mod max;
mod rev;

pub use abs::{build_abs, AbsConstruction, AbsState, Cell};
pub use ham::{build_ham, HamConstruction, HamState};
pub use max::{build_max, Direction, MaxConstruction, MaxCoordinate, MaxState, Operation};
pub use rev::{build_rev, RevConstruction, RevState};

use crate::automata::{member_within, Alphabet, ImplicitAutomaton, Letter, Nfa};
use crate::error::{ResourceExceeded, Result};
use crate::oracle::{CostValue, Semantics};
use crate::parikh;

/// Any of the four constructions behind one type.
#[derive(Clone, Debug)]
pub enum BoundedCost<'a> {
    Abs(AbsConstruction<'a>),
    Rev(RevConstruction<'a>),
    Ham(HamConstruction<'a>),
    Max(MaxConstruction<'a>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundedCostState {
    Abs(AbsState),
    Rev(RevState),
    Ham(HamState),
    Max(MaxState),
}

pub fn build(aut: &Nfa, sem: Semantics, k: usize) -> BoundedCost<'_> {
    match sem {
        Semantics::Abs => BoundedCost::Abs(build_abs(aut, k)),
        Semantics::Rev => BoundedCost::Rev(build_rev(aut, k)),
        Semantics::Ham => BoundedCost::Ham(build_ham(aut, k)),
        Semantics::Max => BoundedCost::Max(build_max(aut, k)),
    }
}

impl ImplicitAutomaton for BoundedCost<'_> {
    type State = BoundedCostState;

    fn alphabet(&self) -> &Alphabet {
        match self {
            BoundedCost::Abs(b) => b.alphabet(),
            BoundedCost::Rev(b) => b.alphabet(),
            BoundedCost::Ham(b) => b.alphabet(),
            BoundedCost::Max(b) => b.alphabet(),
        }
    }

    fn initial_states(&self) -> Vec<BoundedCostState> {
        match self {
            BoundedCost::Abs(b) => b.initial_states().into_iter().map(BoundedCostState::Abs).collect(),
            BoundedCost::Rev(b) => b.initial_states().into_iter().map(BoundedCostState::Rev).collect(),
            BoundedCost::Ham(b) => b.initial_states().into_iter().map(BoundedCostState::Ham).collect(),
            BoundedCost::Max(b) => b.initial_states().into_iter().map(BoundedCostState::Max).collect(),
        }
    }

    fn successors(&self, state: &BoundedCostState, letter: Letter) -> Vec<BoundedCostState> {
        match (self, state) {
            (BoundedCost::Abs(b), BoundedCostState::Abs(s)) => {
                b.successors(s, letter).into_iter().map(BoundedCostState::Abs).collect()
            }
            (BoundedCost::Rev(b), BoundedCostState::Rev(s)) => {
                b.successors(s, letter).into_iter().map(BoundedCostState::Rev).collect()
            }
            (BoundedCost::Ham(b), BoundedCostState::Ham(s)) => {
                b.successors(s, letter).into_iter().map(BoundedCostState::Ham).collect()
            }
            (BoundedCost::Max(b), BoundedCostState::Max(s)) => {
                b.successors(s, letter).into_iter().map(BoundedCostState::Max).collect()
            }
            _ => Vec::new(),
        }
    }

    fn is_accepting(&self, state: &BoundedCostState) -> bool {
        match (self, state) {
            (BoundedCost::Abs(b), BoundedCostState::Abs(s)) => b.is_accepting(s),
            (BoundedCost::Rev(b), BoundedCostState::Rev(s)) => b.is_accepting(s),
            (BoundedCost::Ham(b), BoundedCostState::Ham(s)) => b.is_accepting(s),
            (BoundedCost::Max(b), BoundedCostState::Max(s)) => b.is_accepting(s),
            _ => false,
        }
    }
}

/// Closed-form bound on the reachable states of the ABS, REV and HAM
/// constructions (`None` for MAX, which has no simple closed form here).
pub fn state_space_bound(aut: &Nfa, sem: Semantics, k: usize) -> Option<u128> {
    let q = aut.state_count() as u128;
    let s = aut.alphabet().len() as u128;
    let k128 = k as u128;
    match sem {
        Semantics::Abs => Some(q * (2 * s).pow(2 * k as u32 + 1) * (2 * k128 + 1) * (k128 + 1)),
        Semantics::Rev => Some(q.pow((k / 2 * 2 + 1) as u32)),
        Semantics::Ham => Some(q * (2 * k128 + 1).pow(s as u32) * (k128 + 1)),
        Semantics::Max => None,
    }
}

/// Default per-query bound on macro-state size for [`cost_via_construction`].
pub const DEFAULT_MACRO_BUDGET: usize = 2_000_000;

/// Cost as the least `k` whose construction accepts the word.
///
/// Words outside the jumping language are `Infinite` right away; otherwise `k`
/// is scanned upwards to the semantics' trivial upper bound (ABS in steps of
/// two, as its costs are even; REV likewise).
pub fn cost_via_construction(aut: &Nfa, word: &str, sem: Semantics) -> Result<CostValue> {
    let letters = aut.alphabet().encode(word)?;
    Ok(cost_via_construction_letters(aut, &letters, sem, DEFAULT_MACRO_BUDGET)?)
}

pub fn cost_via_construction_letters(
    aut: &Nfa,
    word: &[Letter],
    sem: Semantics,
    budget: usize,
) -> Result<CostValue, ResourceExceeded> {
    if !parikh::jumping_member_letters(aut, word) {
        return Ok(CostValue::Infinite);
    }
    let n = word.len();
    let (upper, step) = match sem {
        Semantics::Abs => (n * n, 2),
        Semantics::Rev => (n, 2),
        Semantics::Ham | Semantics::Max => (n, 1),
    };
    let mut k = 0;
    while k <= upper {
        if member_within(&build(aut, sem, k), word, budget)? {
            return Ok(CostValue::Finite(k));
        }
        k += step;
    }
    Ok(CostValue::Infinite)
}
