//! Brute-force ground truth: jump sequences, their costs, and exhaustive
//! minimum-cost computation.

mod jump;
mod sweeps;

use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;

use crate::automata::{Letter, Nfa};
use crate::error::{Error, Result};

pub use jump::{
    abs_cost, apply_jump, crossings, enumerate_jump_sequences, hamming_distance, max_cost,
    rev_cost, turning_indices, JumpSequence, JumpSequences, DEFAULT_ENUMERATION_LIMIT,
};
pub(crate) use jump::next_permutation;
pub use sweeps::{max_simultaneous_sweeps, sweep_range_bound_holds, sweeps, Sweep, SweepKind};

/// A cost: a natural number or infinity (`min` of the empty set).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CostValue {
    Finite(usize),
    Infinite,
}

impl CostValue {
    pub fn is_finite(self) -> bool {
        matches!(self, CostValue::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            CostValue::Finite(c) => Some(c),
            CostValue::Infinite => None,
        }
    }

    /// `self <= k`.
    pub fn at_most(self, k: usize) -> bool {
        self <= CostValue::Finite(k)
    }
}

impl fmt::Display for CostValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CostValue::Finite(c) => write!(f, "{c}"),
            CostValue::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Semantics {
    Abs,
    Rev,
    Ham,
    Max,
}

impl Semantics {
    pub const ALL: [Semantics; 4] = [Semantics::Abs, Semantics::Rev, Semantics::Ham, Semantics::Max];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::Abs => "abs",
            Semantics::Rev => "rev",
            Semantics::Ham => "ham",
            Semantics::Max => "max",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "abs" => Ok(Semantics::Abs),
            "rev" => Ok(Semantics::Rev),
            "ham" => Ok(Semantics::Ham),
            "max" => Ok(Semantics::Max),
            _ => Err(format!("unknown semantics `{s}` (expected abs, rev, ham or max)")),
        }
    }
}

/// All four costs of one word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Costs {
    pub abs: CostValue,
    pub rev: CostValue,
    pub ham: CostValue,
    pub max: CostValue,
}

impl Costs {
    pub fn get(&self, sem: Semantics) -> CostValue {
        match sem {
            Semantics::Abs => self.abs,
            Semantics::Rev => self.rev,
            Semantics::Ham => self.ham,
            Semantics::Max => self.max,
        }
    }
}

/// Exhaustive cost computation up to a configurable word length.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { limit: DEFAULT_ENUMERATION_LIMIT }
    }
}

impl Oracle {
    pub fn with_limit(limit: usize) -> Self {
        Oracle { limit }
    }

    fn check(&self, word: &[Letter]) -> Result<()> {
        if word.len() > self.limit {
            return Err(Error::EnumerationLimit { len: word.len(), limit: self.limit });
        }
        Ok(())
    }

    pub fn cost(&self, aut: &Nfa, word: &[Letter], sem: Semantics) -> Result<CostValue> {
        match sem {
            Semantics::Ham => self.ham(aut, word),
            _ => Ok(self.sequence_costs(aut, word)?.get(sem)),
        }
    }

    pub fn all_costs(&self, aut: &Nfa, word: &[Letter]) -> Result<Costs> {
        let mut costs = self.sequence_costs(aut, word)?;
        costs.ham = self.ham(aut, word)?;
        Ok(costs)
    }

    /// ABS, REV and MAX in one pass over all jump sequences (HAM left
    /// `Infinite`).
    fn sequence_costs(&self, aut: &Nfa, word: &[Letter]) -> Result<Costs> {
        self.check(word)?;
        let mut best = [usize::MAX; 3];
        let mut accepted: FxHashMap<Vec<Letter>, bool> = FxHashMap::default();
        for js in enumerate_jump_sequences(word.len(), self.limit)? {
            let permuted = js.apply(word)?;
            let ok = *accepted
                .entry(permuted)
                .or_insert_with_key(|w| aut.accepts_letters(w));
            if ok {
                best[0] = best[0].min(js.abs_cost());
                best[1] = best[1].min(js.rev_cost());
                best[2] = best[2].min(js.max_cost());
            }
        }
        let value = |c: usize| if c == usize::MAX { CostValue::Infinite } else { CostValue::Finite(c) };
        Ok(Costs {
            abs: value(best[0]),
            rev: value(best[1]),
            ham: CostValue::Infinite,
            max: value(best[2]),
        })
    }

    /// Minimum Hamming distance to an accepted permutation, over distinct
    /// permutations only.
    pub fn ham(&self, aut: &Nfa, word: &[Letter]) -> Result<CostValue> {
        self.check(word)?;
        let mut perm = word.to_vec();
        perm.sort_unstable();
        let mut best = CostValue::Infinite;
        loop {
            if aut.accepts_letters(&perm) {
                let d = perm.iter().zip(word).filter(|(a, b)| a != b).count();
                best = best.min(CostValue::Finite(d));
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Ok(best)
    }
}

/// Cost of `word` in `aut` by exhaustive search, with the default length limit.
pub fn oracle_cost(aut: &Nfa, word: &str, sem: Semantics) -> Result<CostValue> {
    let letters = aut.alphabet().encode(word)?;
    Oracle::default().cost(aut, &letters, sem)
}
