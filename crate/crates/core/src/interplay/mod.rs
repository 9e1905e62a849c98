//! Relations between the semantics: bounded-length cost scans, the per-word
//! inequalities linking the four costs, and the separation suite in
//! [`table2`].

mod report;
pub mod table2;

use std::fmt;

use crate::automata::{Letter, Nfa};
use crate::constructions::{cost_via_construction_letters, DEFAULT_MACRO_BUDGET};
use crate::error::{Error, Result};
use crate::oracle::{CostValue, Oracle, Semantics, DEFAULT_ENUMERATION_LIMIT};
use crate::parikh::{jumping_member_letters, ParikhVector};

pub use report::{rows_to_csv, rows_to_markdown, ReportRow};
pub use table2::{
    table2_languages, table2_suite, table2_suite_with, Class, Evidence, Expectation, Family, Table2Cell, Table2Config,
    Table2Language, Table2Report,
};

/// Maximum cost among the jumping-language members of one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub length: usize,
    /// `None` when no word of this length is in the jumping language.
    pub max_cost: Option<usize>,
    /// Lexicographically first word attaining `max_cost`.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CostScan {
    pub semantics: Semantics,
    pub rows: Vec<ScanRow>,
}

impl CostScan {
    pub fn overall_max(&self) -> Option<usize> {
        self.rows.iter().filter_map(|r| r.max_cost).max()
    }

    pub fn row(&self, length: usize) -> Option<&ScanRow> {
        self.rows.iter().find(|r| r.length == length)
    }
}

fn check_limit(max_len: usize) -> Result<()> {
    if max_len > DEFAULT_ENUMERATION_LIMIT {
        return Err(Error::EnumerationLimit { len: max_len, limit: DEFAULT_ENUMERATION_LIMIT });
    }
    Ok(())
}

/// Cost by construction, falling back to the oracle when the construction
/// runs out of budget.
pub(crate) fn cost_with_fallback(aut: &Nfa, word: &[Letter], sem: Semantics, budget: usize) -> Result<CostValue> {
    match cost_via_construction_letters(aut, word, sem, budget) {
        Ok(c) => Ok(c),
        Err(_) => Oracle::default().cost(aut, word, sem),
    }
}

/// Exhaustive scan of all words up to `max_len`.
///
/// Witnesses are re-checked against the oracle; a mismatch is reported as
/// [`Error::Disagreement`].
pub fn scan_costs(aut: &Nfa, sem: Semantics, max_len: usize) -> Result<CostScan> {
    check_limit(max_len)?;
    let alphabet = aut.alphabet();
    let mut rows = Vec::with_capacity(max_len + 1);
    for length in 0..=max_len {
        let mut best: Option<(usize, Vec<Letter>)> = None;
        for word in alphabet.words_of_length(length) {
            if !jumping_member_letters(aut, &word) {
                continue;
            }
            let cost = cost_with_fallback(aut, &word, sem, DEFAULT_MACRO_BUDGET)?
                .finite()
                .expect("members of the jumping language have finite cost");
            if best.as_ref().is_none_or(|(b, _)| cost > *b) {
                best = Some((cost, word));
            }
        }
        if let Some((cost, word)) = &best {
            let checked = Oracle::default().cost(aut, word, sem)?;
            if checked != CostValue::Finite(*cost) {
                return Err(Error::Disagreement(format!(
                    "{sem} cost of {:?}: construction {cost}, oracle {checked}",
                    alphabet.decode(word)
                )));
            }
        }
        rows.push(ScanRow {
            length,
            max_cost: best.as_ref().map(|(c, _)| *c),
            witness: best.map(|(_, w)| alphabet.decode(&w)),
        });
    }
    Ok(CostScan { semantics: sem, rows })
}

/// The per-word inequalities between the semantics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Inequality {
    /// `max(w) <= abs(w)`
    MaxAtMostAbs,
    /// `ham(w) <= (2 abs(w) + 1)(abs(w) + 1)`
    HamFromAbs,
    /// `rev(w) <= 3 ham(w)`
    RevFromHam,
    /// `rev(w) <= (|Σ| - 1)(2m + 1) + 1`, `m` the MAX cost of the letters of
    /// `w` sorted by alphabet order
    RevFromSortedMax,
}

impl Inequality {
    pub const ALL: [Inequality; 4] = [
        Inequality::MaxAtMostAbs,
        Inequality::HamFromAbs,
        Inequality::RevFromHam,
        Inequality::RevFromSortedMax,
    ];
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Inequality::MaxAtMostAbs => "max <= abs",
            Inequality::HamFromAbs => "ham <= (2abs+1)(abs+1)",
            Inequality::RevFromHam => "rev <= 3ham",
            Inequality::RevFromSortedMax => "rev <= (|S|-1)(2m+1)+1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub word: String,
    pub inequality: Inequality,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InterplayReport {
    /// Jumping-language members examined.
    pub words_checked: usize,
    pub violations: Vec<Violation>,
}

impl InterplayReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the four inequalities on every jumping-language member of length
/// at most `max_len`, with all costs from the oracle.
pub fn check_interplay(aut: &Nfa, max_len: usize) -> Result<InterplayReport> {
    check_limit(max_len)?;
    let oracle = Oracle::default();
    let sigma = aut.alphabet().len();
    let mut report = InterplayReport::default();
    for word in aut.alphabet().words_up_to(max_len) {
        if !jumping_member_letters(aut, &word) {
            continue;
        }
        report.words_checked += 1;
        let costs = oracle.all_costs(aut, &word)?;
        let get = |sem| costs.get(sem).finite().expect("finite on the jumping language");
        let (abs, rev, ham, max) = (get(Semantics::Abs), get(Semantics::Rev), get(Semantics::Ham), get(Semantics::Max));
        let sorted = ParikhVector::of_letters(&word, aut.alphabet()).sorted_word();
        let m = oracle
            .cost(aut, &sorted, Semantics::Max)?
            .finite()
            .expect("a permutation of a jumping-language member");
        let checks = [
            (Inequality::MaxAtMostAbs, max, abs),
            (Inequality::HamFromAbs, ham, (2 * abs + 1) * (abs + 1)),
            (Inequality::RevFromHam, rev, 3 * ham),
            (Inequality::RevFromSortedMax, rev, sigma.saturating_sub(1) * (2 * m + 1) + 1),
        ];
        for (inequality, lhs, rhs) in checks {
            if lhs > rhs {
                report.violations.push(Violation {
                    word: aut.alphabet().decode(&word),
                    inequality,
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(report)
}
