use std::fs;
use std::path::Path;

use jumpcost::automata::{materialize, member_letters, parse_automaton, serialize_automaton};
use jumpcost::boundedness::{jlang_bounded_exact, jlang_bounded_search, univ_bounded, BoundednessVerdict, ExactBudgets};
use jumpcost::constructions::{build, cost_via_construction_letters, DEFAULT_MACRO_BUDGET};
use jumpcost::corpus::random_corpus;
use jumpcost::interplay::{check_interplay, rows_to_csv, rows_to_markdown, scan_costs, table2_suite, ReportRow};
use jumpcost::oracle::Oracle;
use jumpcost::parikh::jumping_member_letters;
use jumpcost::{CostValue, Error, Letter, Nfa, Semantics};

use crate::{Global, Method, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Answer,
    Negative,
    Unknown,
    Failure,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Answer => 0,
            Status::Negative => 1,
            Status::Unknown => 2,
            Status::Failure => 3,
        }
    }
}

/// Diagnostic on stderr, status by error kind.
fn fail(e: &Error) -> Status {
    eprintln!("error: {e}");
    match e {
        Error::EnumerationLimit { .. } | Error::Resource(_) => Status::Unknown,
        _ => Status::Failure,
    }
}

fn usage(msg: &str) -> Status {
    eprintln!("error: {msg}");
    Status::Failure
}

fn load(g: &Global) -> Result<Nfa, Status> {
    let path = g.aut.as_ref().ok_or_else(|| usage("--aut FILE is required"))?;
    let text = fs::read_to_string(path).map_err(|e| usage(&format!("{}: {e}", path.display())))?;
    parse_automaton(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        Status::Failure
    })
}

/// `""` on the command line stands for the empty word.
fn encode(aut: &Nfa, word: &str) -> Result<Vec<Letter>, Status> {
    let word = if word == "\"\"" { "" } else { word };
    aut.alphabet().encode(word).map_err(|e| fail(&e))
}

fn show_word(w: &str) -> &str {
    if w.is_empty() {
        "\"\""
    } else {
        w
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

pub fn cost(g: &Global, word: &str, sem: Semantics, method: Method) -> Status {
    let aut = tri!(load(g));
    let letters = tri!(encode(&aut, word));
    let budget = g.budget.unwrap_or(DEFAULT_MACRO_BUDGET);
    let by_oracle = || Oracle::default().cost(&aut, &letters, sem);
    let by_construction = || cost_via_construction_letters(&aut, &letters, sem, budget).map_err(Error::from);
    match method {
        Method::Oracle => match by_oracle() {
            Ok(c) => println!("{c}"),
            Err(e) => return fail(&e),
        },
        Method::Construction => match by_construction() {
            Ok(c) => println!("{c}"),
            Err(e) => return fail(&e),
        },
        Method::Both => {
            let (o, c) = match (by_oracle(), by_construction()) {
                (Ok(o), Ok(c)) => (o, c),
                (Err(e), _) | (_, Err(e)) => return fail(&e),
            };
            println!("{o}");
            println!("{c}");
            if o != c {
                eprintln!("error: oracle says {o}, construction says {c}");
                return Status::Failure;
            }
        }
    }
    Status::Answer
}

pub fn member(g: &Global, word: &str) -> Status {
    let aut = tri!(load(g));
    let letters = tri!(encode(&aut, word));
    let answer = jumping_member_letters(&aut, &letters);
    println!("{answer}");
    if answer {
        Status::Answer
    } else {
        Status::Negative
    }
}

pub fn construct(g: &Global, sem: Semantics, k: usize, out: &Path) -> Status {
    let aut = tri!(load(g));
    let budget = g.budget.unwrap_or(100_000);
    let explicit = match materialize(&build(&aut, sem, k), budget) {
        Ok(b) => b,
        Err(e) => return fail(&Error::from(e)),
    };
    if let Err(e) = fs::write(out, serialize_automaton(&explicit)) {
        return usage(&format!("{}: {e}", out.display()));
    }
    println!("states={} transitions={}", explicit.state_count(), explicit.transition_count());
    Status::Answer
}

pub fn bounded(g: &Global, sem: Semantics, k: usize, universal: bool, mode: Mode) -> Status {
    let aut = tri!(load(g));
    let verdict = if universal {
        univ_bounded(&aut, sem, k, g.budget.unwrap_or(1_000_000))
    } else {
        match mode {
            Mode::Search => jlang_bounded_search(&aut, sem, k, g.max_len),
            Mode::Exact => {
                let mut budgets = ExactBudgets::default();
                if let Some(b) = g.budget {
                    budgets.construction_states = b;
                    budgets.complement_states = b;
                }
                jlang_bounded_exact(&aut, sem, k, &budgets)
            }
        }
    };
    match &verdict {
        BoundednessVerdict::Bounded => {
            println!("bounded");
            Status::Answer
        }
        BoundednessVerdict::Unbounded { witness, cost } => {
            println!("unbounded witness={} cost={cost}", show_word(witness));
            Status::Negative
        }
        BoundednessVerdict::Unknown(_) => {
            println!("{verdict}");
            Status::Unknown
        }
    }
}

fn write_report(csv_path: &Path, csv: &str, markdown: &str) -> Result<(), Status> {
    let md_path = csv_path.with_extension("md");
    fs::write(csv_path, csv)
        .and_then(|_| fs::write(&md_path, markdown))
        .map_err(|e| usage(&format!("{}: {e}", csv_path.display())))
}

pub fn interplay(g: &Global, out: Option<&Path>) -> Status {
    let aut = tri!(load(g));
    let report = match check_interplay(&aut, g.max_len) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let name = g.aut.as_ref().and_then(|p| p.file_stem()).map_or("input".into(), |s| s.to_string_lossy().into_owned());
    let mut rows = Vec::new();
    for sem in Semantics::ALL {
        let scan = match scan_costs(&aut, sem, g.max_len) {
            Ok(s) => s,
            Err(e) => return fail(&e),
        };
        rows.extend(scan.rows.into_iter().map(|r| ReportRow {
            language: name.clone(),
            semantics: sem,
            length: r.length,
            max_cost: r.max_cost.map(|c| c.to_string()),
            witness: r.witness,
            evidence_kind: "scan".into(),
        }));
    }
    for v in &report.violations {
        println!("violation word={} {} ({} > {})", show_word(&v.word), v.inequality, v.lhs, v.rhs);
    }
    println!("words={} violations={}", report.words_checked, report.violations.len());
    if let Some(path) = out {
        let mut md = format!(
            "# Interplay check: {name} (max length {})\n\n{} words checked, {} violations\n\n",
            g.max_len,
            report.words_checked,
            report.violations.len()
        );
        for v in &report.violations {
            md.push_str(&format!("- `{}`: {} ({} > {})\n", v.word, v.inequality, v.lhs, v.rhs));
        }
        md.push_str("\n## Cost scan\n\n");
        md.push_str(&rows_to_markdown(&rows));
        tri!(write_report(path, &rows_to_csv(&rows), &md));
    }
    if report.is_clean() {
        Status::Answer
    } else {
        Status::Negative
    }
}

pub fn table2(g: &Global, out: Option<&Path>) -> Status {
    let report = match table2_suite(g.max_len) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    for c in &report.cells {
        let observed = c.observed.map_or("inconclusive".to_string(), |o| o.to_string());
        println!(
            "{} {} expected={} observed={} evidence={} {}",
            c.language,
            c.semantics,
            c.expected,
            observed,
            c.evidence.kind(),
            if c.matches() { "ok" } else { "MISMATCH" }
        );
    }
    if let Some(dir) = out {
        if let Err(e) = fs::create_dir_all(dir) {
            return usage(&format!("{}: {e}", dir.display()));
        }
        tri!(write_report(&dir.join("table2.csv"), &report.to_csv(), &report.to_markdown()));
    }
    if report.all_match() {
        Status::Answer
    } else {
        Status::Negative
    }
}

pub fn selftest(g: &Global, count: usize) -> Status {
    let corpus = random_corpus(g.seed, count);
    let oracle = Oracle::default();
    let max_len = g.max_len.min(oracle.limit);
    let (mut compared, mut disagreements) = (0usize, 0usize);
    for (i, aut) in corpus.iter().enumerate() {
        let words: Vec<Vec<Letter>> = aut.alphabet().words_up_to(max_len).collect();
        let costs: Vec<_> = match words.iter().map(|w| oracle.all_costs(aut, w)).collect::<Result<_, _>>() {
            Ok(c) => c,
            Err(e) => return fail(&e),
        };
        for sem in Semantics::ALL {
            let ks: &[usize] = if sem == Semantics::Max { &[0, 1] } else { &[0, 1, 2] };
            for &k in ks {
                let b = build(aut, sem, k);
                for (w, c) in words.iter().zip(&costs) {
                    compared += 1;
                    let expected: CostValue = c.get(sem);
                    if member_letters(&b, w) != expected.at_most(k) {
                        disagreements += 1;
                        eprintln!(
                            "disagreement: automaton {i}, {sem} k={k}, word {}, oracle cost {expected}",
                            show_word(&aut.alphabet().decode(w))
                        );
                    }
                }
            }
        }
    }
    println!("automata={} comparisons={compared} disagreements={disagreements}", corpus.len());
    if disagreements == 0 {
        Status::Answer
    } else {
        Status::Failure
    }
}
