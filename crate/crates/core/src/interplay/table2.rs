//! Six languages that realise every bounded/unbounded combination of the
//! semantics, and the evidence for each classification.
//!
//! A bounded cell is supported by a full scan staying within a known ceiling
//! (optionally certified by the universality or Parikh checks at that
//! ceiling); an unbounded cell by a word family whose costs strictly grow.

use std::fmt;
use std::fmt::Write as _;

use super::report::{rows_to_csv, rows_to_markdown, ReportRow};
use super::{cost_with_fallback, scan_costs};
use crate::automata::Nfa;
use crate::boundedness::{jlang_bounded_exact, univ_bounded, BoundednessVerdict, ExactBudgets};
use crate::error::{Error, Result};
use crate::oracle::{CostValue, Oracle, Semantics, DEFAULT_ENUMERATION_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Class {
    Bounded,
    Unbounded,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::Bounded => "bounded",
            Class::Unbounded => "unbounded",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// The cost-`k` construction accepts every word.
    UniversalityCertified { k: usize },
    /// The jumping language lies inside the cost-`k` construction.
    ParikhCertified { k: usize },
    /// Every scanned word stays within the ceiling.
    ScanWithinCeiling { ceiling: usize },
    /// The family's costs strictly increase.
    GrowingFamily { family: &'static str },
    Inconclusive(String),
}

impl Evidence {
    pub fn kind(&self) -> &'static str {
        match self {
            Evidence::UniversalityCertified { .. } => "universality-certified",
            Evidence::ParikhCertified { .. } => "parikh-certified",
            Evidence::ScanWithinCeiling { .. } => "scan-within-ceiling",
            Evidence::GrowingFamily { .. } => "witness-family",
            Evidence::Inconclusive(_) => "inconclusive",
        }
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::UniversalityCertified { k } => write!(f, "every word has cost <= {k}"),
            Evidence::ParikhCertified { k } => write!(f, "every jumping-language word has cost <= {k}"),
            Evidence::ScanWithinCeiling { ceiling } => write!(f, "scan stays within ceiling {ceiling}"),
            Evidence::GrowingFamily { family } => write!(f, "costs of {family} strictly increase"),
            Evidence::Inconclusive(why) => f.write_str(why),
        }
    }
}

/// A word family `n ↦ f(n)` for `n = 1, 2, ...`.
#[derive(Clone, Copy, Debug)]
pub struct Family {
    pub name: &'static str,
    pub word: fn(usize) -> String,
    /// Use exactly `1..=n` instead of deriving the members from `max_len`.
    pub fixed_members: Option<usize>,
}

impl Family {
    /// Members fitting in `max_len`, and at least three.
    pub fn members(&self, max_len: usize) -> Vec<usize> {
        if let Some(n) = self.fixed_members {
            return (1..=n).collect();
        }
        let fitting = (1..).take_while(|&n| (self.word)(n).len() <= max_len).last().unwrap_or(0);
        (1..=fitting.max(3)).collect()
    }
}

/// Expected behaviour of one semantics on one language.
#[derive(Clone, Copy, Debug)]
pub enum Expectation {
    /// Bounded, with a ceiling known to hold for every word.
    Bounded { ceiling: usize },
    Unbounded(Family),
}

impl Expectation {
    pub fn class(&self) -> Class {
        match self {
            Expectation::Bounded { .. } => Class::Bounded,
            Expectation::Unbounded(_) => Class::Unbounded,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Table2Language {
    pub tag: &'static str,
    pub nfa: Nfa,
    /// Indexed like [`Semantics::ALL`].
    pub expectations: [Expectation; 4],
}

impl Table2Language {
    pub fn expectation(&self, sem: Semantics) -> Expectation {
        self.expectations[Semantics::ALL.iter().position(|&s| s == sem).unwrap()]
    }
}

fn repeat(parts: &[(&str, usize)]) -> String {
    parts.iter().map(|(s, n)| s.repeat(*n)).collect()
}

const B_N_A_N: Family = Family { name: "b^n a^n", word: |n| repeat(&[("b", n), ("a", n)]), fixed_members: None };
// the HAM cost of b^n a^n only grows at odd n
const B_N_A_N_ODD: Family = Family {
    name: "b^(2n-1) a^(2n-1)",
    word: |n| repeat(&[("b", 2 * n - 1), ("a", 2 * n - 1)]),
    fixed_members: Some(3),
};
const A_B_N: Family = Family { name: "a b^n", word: |n| repeat(&[("a", 1), ("b", n)]), fixed_members: None };
const B_C_N_A: Family =
    Family { name: "b c^n a", word: |n| repeat(&[("b", 1), ("c", n), ("a", 1)]), fixed_members: None };
// no family in the odd-block language grows within the scan length; these
// run past it. ABS grows with every repetition, HAM only every other one.
const AABB: Family = Family { name: "(aabb)^n", word: |n| "aabb".repeat(n), fixed_members: Some(3) };
const AABB_ODD: Family =
    Family { name: "(aabb)^(2n-1)", word: |n| "aabb".repeat(2 * n - 1), fixed_members: Some(3) };

fn bounded(ceiling: usize) -> Expectation {
    Expectation::Bounded { ceiling }
}

/// The six languages with their expected classifications (ABS, REV, HAM,
/// MAX order) and known ceilings.
pub fn table2_languages() -> Vec<Table2Language> {
    use Expectation::Unbounded as U;
    let nfa = |alphabet: &str, n: usize, init: &[usize], acc: &[usize], t: &[(usize, char, usize)]| {
        Nfa::from_symbol_transitions(alphabet, n, init, acc, t).expect("fixed automaton")
    };
    vec![
        Table2Language {
            tag: "(a+b)*",
            nfa: nfa("ab", 1, &[0], &[0], &[(0, 'a', 0), (0, 'b', 0)]),
            expectations: [bounded(0), bounded(0), bounded(0), bounded(0)],
        },
        Table2Language {
            tag: "c*ac*bc*",
            nfa: nfa(
                "abc",
                3,
                &[0],
                &[2],
                &[(0, 'c', 0), (0, 'a', 1), (1, 'c', 1), (1, 'b', 2), (2, 'c', 2)],
            ),
            // REV from HAM via rev <= 3 ham
            expectations: [U(B_C_N_A), bounded(6), bounded(2), bounded(2)],
        },
        Table2Language {
            tag: "(a+b)*a",
            nfa: nfa("ab", 2, &[0], &[1], &[(0, 'a', 0), (0, 'b', 0), (0, 'a', 1)]),
            expectations: [U(A_B_N), bounded(2), bounded(2), U(A_B_N)],
        },
        Table2Language {
            tag: "odd-blocks",
            // states: start, odd/even a-block, odd/even b-block
            nfa: nfa(
                "ab",
                5,
                &[0],
                &[0, 1, 2, 3, 4],
                &[
                    (0, 'a', 1),
                    (0, 'b', 3),
                    (1, 'a', 2),
                    (2, 'a', 1),
                    (1, 'b', 3),
                    (3, 'b', 4),
                    (4, 'b', 3),
                    (3, 'a', 1),
                ],
            ),
            // REV from MAX <= 2 via rev <= (|S|-1)(2m+1)+1
            expectations: [U(AABB), bounded(6), U(AABB_ODD), bounded(2)],
        },
        Table2Language {
            tag: "a*b*",
            nfa: nfa("ab", 2, &[0], &[0, 1], &[(0, 'a', 0), (0, 'b', 1), (1, 'b', 1)]),
            expectations: [U(B_N_A_N), bounded(2), U(B_N_A_N), U(B_N_A_N)],
        },
        Table2Language {
            tag: "(ab)*",
            nfa: nfa("ab", 2, &[0], &[0], &[(0, 'a', 1), (1, 'b', 0)]),
            expectations: [U(B_N_A_N), U(B_N_A_N), U(B_N_A_N_ODD), U(B_N_A_N)],
        },
    ]
}

#[derive(Clone, Debug)]
pub struct Table2Config {
    pub max_len: usize,
    /// Try to certify bounded cells with the universality and Parikh checks.
    pub certify: bool,
    /// Macro-state budget of the universality check; also the state budget
    /// of the Parikh check.
    pub certify_budget: usize,
    /// Macro-state budget when computing family costs.
    pub family_budget: usize,
}

impl Default for Table2Config {
    fn default() -> Self {
        Table2Config { max_len: 6, certify: true, certify_budget: 20_000, family_budget: 2_000_000 }
    }
}

#[derive(Clone, Debug)]
pub struct Table2Cell {
    pub language: &'static str,
    pub semantics: Semantics,
    pub expected: Class,
    /// `None` when the evidence is inconclusive.
    pub observed: Option<Class>,
    pub evidence: Evidence,
    pub rows: Vec<ReportRow>,
}

impl Table2Cell {
    pub fn matches(&self) -> bool {
        self.observed == Some(self.expected)
    }
}

#[derive(Clone, Debug)]
pub struct Table2Report {
    pub max_len: usize,
    pub cells: Vec<Table2Cell>,
}

impl Table2Report {
    pub fn all_match(&self) -> bool {
        self.cells.iter().all(Table2Cell::matches)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Table2Cell> {
        self.cells.iter().filter(|c| !c.matches())
    }

    pub fn cell(&self, language: &str, sem: Semantics) -> Option<&Table2Cell> {
        self.cells.iter().find(|c| c.language == language && c.semantics == sem)
    }

    pub fn rows(&self) -> Vec<ReportRow> {
        self.cells.iter().flat_map(|c| c.rows.iter().cloned()).collect()
    }

    pub fn to_csv(&self) -> String {
        rows_to_csv(&self.rows())
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# Separation suite (max length {})\n", self.max_len).unwrap();
        writeln!(out, "| language | semantics | expected | observed | evidence_kind | evidence |").unwrap();
        writeln!(out, "|---|---|---|---|---|---|").unwrap();
        for c in &self.cells {
            let observed = c.observed.map_or("inconclusive".to_string(), |o| o.to_string());
            writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                c.language,
                c.semantics,
                c.expected,
                observed,
                c.evidence.kind(),
                c.evidence
            )
            .unwrap();
        }
        writeln!(out, "\n## Rows\n").unwrap();
        out.push_str(&rows_to_markdown(&self.rows()));
        out
    }
}

pub fn table2_suite(max_len: usize) -> Result<Table2Report> {
    table2_suite_with(&Table2Config { max_len, ..Table2Config::default() })
}

pub fn table2_suite_with(config: &Table2Config) -> Result<Table2Report> {
    let mut cells = Vec::new();
    for lang in table2_languages() {
        for sem in Semantics::ALL {
            cells.push(match lang.expectation(sem) {
                Expectation::Bounded { ceiling } => bounded_cell(&lang, sem, ceiling, config)?,
                Expectation::Unbounded(family) => unbounded_cell(&lang, sem, family, config)?,
            });
        }
    }
    Ok(Table2Report { max_len: config.max_len, cells })
}

fn bounded_cell(lang: &Table2Language, sem: Semantics, ceiling: usize, config: &Table2Config) -> Result<Table2Cell> {
    let scan = scan_costs(&lang.nfa, sem, config.max_len)?;
    let within = scan.overall_max().is_none_or(|m| m <= ceiling);
    let (observed, evidence) = if !within {
        (None, Evidence::Inconclusive(format!("scan exceeds ceiling {ceiling}")))
    } else if config.certify {
        certify(lang, sem, ceiling, config)
    } else {
        (Some(Class::Bounded), Evidence::ScanWithinCeiling { ceiling })
    };
    let rows = scan
        .rows
        .iter()
        .map(|r| ReportRow {
            language: lang.tag.to_string(),
            semantics: sem,
            length: r.length,
            max_cost: r.max_cost.map(|c| c.to_string()),
            witness: r.witness.clone(),
            evidence_kind: evidence.kind().to_string(),
        })
        .collect();
    Ok(Table2Cell { language: lang.tag, semantics: sem, expected: Class::Bounded, observed, evidence, rows })
}

fn certify(lang: &Table2Language, sem: Semantics, ceiling: usize, config: &Table2Config) -> (Option<Class>, Evidence) {
    if univ_bounded(&lang.nfa, sem, ceiling, config.certify_budget) == BoundednessVerdict::Bounded {
        return (Some(Class::Bounded), Evidence::UniversalityCertified { k: ceiling });
    }
    let budgets = ExactBudgets {
        construction_states: config.certify_budget,
        complement_states: config.certify_budget,
        ..ExactBudgets::default()
    };
    match jlang_bounded_exact(&lang.nfa, sem, ceiling, &budgets) {
        BoundednessVerdict::Bounded => (Some(Class::Bounded), Evidence::ParikhCertified { k: ceiling }),
        BoundednessVerdict::Unbounded { witness, cost } => (
            None,
            Evidence::Inconclusive(format!("{witness:?} has cost {cost}, above ceiling {ceiling}")),
        ),
        BoundednessVerdict::Unknown(_) => (Some(Class::Bounded), Evidence::ScanWithinCeiling { ceiling }),
    }
}

fn unbounded_cell(lang: &Table2Language, sem: Semantics, family: Family, config: &Table2Config) -> Result<Table2Cell> {
    let alphabet = lang.nfa.alphabet();
    let mut costs = Vec::new();
    let mut rows = Vec::new();
    for n in family.members(config.max_len) {
        let word = (family.word)(n);
        let letters = alphabet.encode(&word)?;
        let cost = cost_with_fallback(&lang.nfa, &letters, sem, config.family_budget)?;
        if letters.len() <= DEFAULT_ENUMERATION_LIMIT {
            let checked = Oracle::default().cost(&lang.nfa, &letters, sem)?;
            if checked != cost {
                return Err(Error::Disagreement(format!(
                    "{sem} cost of {word:?} in {}: construction {cost}, oracle {checked}",
                    lang.tag
                )));
            }
        }
        rows.push(ReportRow {
            language: lang.tag.to_string(),
            semantics: sem,
            length: word.len(),
            max_cost: Some(cost.to_string()),
            witness: Some(word),
            evidence_kind: "witness-family".to_string(),
        });
        costs.push(cost);
    }
    let growing = costs.iter().all(|c| c.is_finite()) && costs.windows(2).all(|w| w[0] < w[1]);
    let (observed, evidence) = if growing {
        (Some(Class::Unbounded), Evidence::GrowingFamily { family: family.name })
    } else {
        let listed: Vec<String> = costs.iter().map(CostValue::to_string).collect();
        (None, Evidence::Inconclusive(format!("{} costs not increasing: {}", family.name, listed.join(", "))))
    };
    if observed.is_none() {
        for r in &mut rows {
            r.evidence_kind = "inconclusive".to_string();
        }
    }
    Ok(Table2Cell { language: lang.tag, semantics: sem, expected: Class::Unbounded, observed, evidence, rows })
}
