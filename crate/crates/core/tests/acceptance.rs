//! Acceptance criteria 1–8, one PASS/FAIL line each.
//!
//! Runs as a plain binary (no libtest harness) so the lines are always
//! printed; exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use jumpcost::automata::{is_universal, member_letters, UniversalityVerdict};
use jumpcost::boundedness::{jlang_bounded_exact, jlang_bounded_search, univ_bounded, BoundednessVerdict, ExactBudgets};
use jumpcost::constructions::{build, build_rev, cost_via_construction};
use jumpcost::corpus::random_corpus;
use jumpcost::interplay::{check_interplay, table2_languages, table2_suite, Class};
use jumpcost::oracle::{
    crossings, enumerate_jump_sequences, oracle_cost, sweep_range_bound_holds, Oracle, DEFAULT_ENUMERATION_LIMIT,
};
use jumpcost::parikh::{parikh_intersection_empty, IntersectionVerdict, ParikhVector};
use jumpcost::{CostValue, Nfa, Semantics};

const CORPUS_SEED: u64 = 0;
const CORPUS_SIZE: usize = 50;

fn ab2() -> Nfa {
    Nfa::from_symbol_transitions("ab", 2, &[0], &[0], &[(0, 'a', 1), (1, 'b', 0)]).unwrap()
}

fn asb() -> Nfa {
    Nfa::from_symbol_transitions("ab", 2, &[0], &[0, 1], &[(0, 'a', 0), (0, 'b', 1), (1, 'b', 1)]).unwrap()
}

/// Outcome of one criterion: failures collected as messages.
struct Check {
    failures: Vec<String>,
    detail: String,
}

impl Check {
    fn new() -> Self {
        Check { failures: Vec::new(), detail: String::new() }
    }

    fn require(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }
}

fn criterion_1() -> Check {
    let mut c = Check::new();
    let a = ab2();
    let expected = [
        (Semantics::Abs, 2, 4),
        (Semantics::Rev, 2, 2),
        (Semantics::Ham, 2, 4),
        (Semantics::Max, 1, 2),
    ];
    let mut slowest = Duration::ZERO;
    for (sem, c1, c2) in expected {
        for (word, want) in [("ababbaab", c1), ("ababbaba", c2)] {
            for method in ["oracle", "construction"] {
                let start = Instant::now();
                let got = if method == "oracle" {
                    oracle_cost(&a, word, sem).unwrap()
                } else {
                    cost_via_construction(&a, word, sem).unwrap()
                };
                let took = start.elapsed();
                slowest = slowest.max(took);
                c.require(got == CostValue::Finite(want), || format!("{sem} {word} via {method}: {got}, want {want}"));
                c.require(took < Duration::from_secs(1), || format!("{sem} {word} via {method} took {took:?}"));
            }
        }
    }
    c.detail = format!("16 queries exact, slowest {slowest:?}");
    c
}

fn criterion_2() -> Check {
    let mut c = Check::new();
    let start = Instant::now();
    let a = asb();
    let direct = is_universal(&build_rev(&a, 2), 1_000_000).unwrap();
    c.require(direct == UniversalityVerdict::Universal, || format!("is_universal(rev, 2) = {direct:?}"));
    let v2 = univ_bounded(&a, Semantics::Rev, 2, 1_000_000);
    c.require(v2 == BoundednessVerdict::Bounded, || format!("univ_bounded(rev, 2) = {v2:?}"));
    let v0 = univ_bounded(&a, Semantics::Rev, 0, 1_000_000);
    match &v0 {
        BoundednessVerdict::Unbounded { witness, cost } => {
            let checked = oracle_cost(&a, witness, Semantics::Rev).unwrap();
            c.require(checked == *cost && !cost.at_most(0), || {
                format!("witness {witness:?}: reported {cost}, oracle {checked}")
            });
        }
        other => c.failures.push(format!("univ_bounded(rev, 0) = {other:?}")),
    }
    let took = start.elapsed();
    c.require(took < Duration::from_secs(5), || format!("took {took:?}"));
    c.detail = format!("k=2 bounded, k=0 {v0}, {took:?}");
    c
}

fn criterion_3() -> Check {
    let mut c = Check::new();
    let start = Instant::now();
    let corpus = random_corpus(CORPUS_SEED, CORPUS_SIZE);
    let oracle = Oracle::default();
    let mut comparisons = 0usize;
    for (i, aut) in corpus.iter().enumerate() {
        let words: Vec<Vec<usize>> = aut.alphabet().words_up_to(6).collect();
        let costs: Vec<_> = words.iter().map(|w| oracle.all_costs(aut, w).unwrap()).collect();
        for sem in Semantics::ALL {
            let ks: &[usize] = if sem == Semantics::Max { &[0, 1] } else { &[0, 1, 2] };
            for &k in ks {
                let b = build(aut, sem, k);
                for (w, cost) in words.iter().zip(&costs) {
                    comparisons += 1;
                    let member = member_letters(&b, w);
                    let want = cost.get(sem).at_most(k);
                    if member != want && c.failures.len() < 10 {
                        c.failures.push(format!(
                            "automaton {i}, {sem} k={k}, word {:?}: construction {member}, oracle cost {}",
                            aut.alphabet().decode(w),
                            cost.get(sem)
                        ));
                    }
                }
            }
        }
    }
    let took = start.elapsed();
    c.require(took < Duration::from_secs(600), || format!("took {took:?}"));
    c.detail = format!("{} automata, {comparisons} comparisons, {took:?}", corpus.len());
    c
}

fn criterion_4() -> Check {
    let mut c = Check::new();
    let mut sequences = 0usize;
    for n in 0..=6 {
        for js in enumerate_jump_sequences(n, DEFAULT_ENUMERATION_LIMIT).unwrap() {
            sequences += 1;
            let pos = js.positions();
            let abs = js.abs_cost();
            let max = js.max_cost();
            let mut bad = Vec::new();
            if abs % 2 != 0 {
                bad.push("abs odd");
            }
            if js.turning_indices().len() % 2 != 0 {
                bad.push("odd number of turning indices");
            }
            if pos.iter().enumerate().any(|(j, &a)| abs < a.abs_diff(j)) {
                bad.push("abs below displacement");
            }
            if max > abs {
                bad.push("max above abs");
            }
            if (0..=n).any(|m| crossings(&js, m).unwrap() > 2 * max + 1) {
                bad.push("too many crossings");
            }
            if !sweep_range_bound_holds(&js) {
                bad.push("too many sweep ranges");
            }
            if !bad.is_empty() && c.failures.len() < 10 {
                c.failures.push(format!("{pos:?}: {}", bad.join(", ")));
            }
        }
    }
    c.detail = format!("{sequences} jump sequences with n <= 6");
    c
}

fn criterion_5() -> Check {
    let mut c = Check::new();
    let mut automata: Vec<(String, Nfa)> =
        random_corpus(CORPUS_SEED, CORPUS_SIZE).into_iter().enumerate().map(|(i, a)| (format!("corpus {i}"), a)).collect();
    automata.extend(table2_languages().into_iter().map(|l| (l.tag.to_string(), l.nfa)));
    let mut words = 0;
    for (name, aut) in &automata {
        let report = check_interplay(aut, 6).unwrap();
        words += report.words_checked;
        for v in &report.violations {
            c.failures.push(format!("{name}: {:?} violates {} ({} > {})", v.word, v.inequality, v.lhs, v.rhs));
        }
    }
    c.detail = format!("{} automata, {words} words, 4 inequalities each", automata.len());
    c
}

fn criterion_6() -> Check {
    let mut c = Check::new();
    let report = table2_suite(6).unwrap();
    c.require(report.cells.len() == 24, || format!("{} cells", report.cells.len()));
    for cell in report.mismatches() {
        c.failures.push(format!(
            "{} {}: expected {}, observed {:?} ({})",
            cell.language, cell.semantics, cell.expected, cell.observed, cell.evidence
        ));
    }
    // REV cost of b^n a^n in (ab)* is 2n
    let rev = report.cell("(ab)*", Semantics::Rev).unwrap();
    for (n, row) in rev.rows.iter().enumerate().map(|(i, r)| (i + 1, r)) {
        c.require(row.max_cost.as_deref() == Some(&(2 * n).to_string()), || {
            format!("(ab)* rev of {:?} = {:?}, want {}", row.witness, row.max_cost, 2 * n)
        });
    }
    let bounded = report.cells.iter().filter(|x| x.expected == Class::Bounded).count();
    let certified = report
        .cells
        .iter()
        .filter(|x| x.expected == Class::Bounded && x.evidence.kind() != "scan-within-ceiling")
        .count();
    c.detail = format!(
        "{}/24 cells match; {bounded} bounded ({certified} certified), {} unbounded",
        report.cells.iter().filter(|x| x.matches()).count(),
        24 - bounded
    );
    c
}

/// Parikh vectors of the accepted words up to `max_len`.
fn parikh_image(aut: &Nfa, max_len: usize) -> BTreeSet<ParikhVector> {
    aut.alphabet()
        .words_up_to(max_len)
        .filter(|w| aut.accepts_letters(w))
        .map(|w| ParikhVector::of_letters(&w, aut.alphabet()))
        .collect()
}

fn criterion_7() -> Check {
    let mut c = Check::new();
    let budgets = ExactBudgets::default();
    let e1 = jlang_bounded_exact(&asb(), Semantics::Rev, 2, &budgets);
    c.require(e1 == BoundednessVerdict::Bounded, || format!("exact(a*b*, rev, 2) = {e1:?}"));
    let s1 = jlang_bounded_search(&asb(), Semantics::Rev, 2, 6);
    c.require(!s1.is_unbounded(), || format!("search(a*b*, rev, 2, 6) = {s1:?}"));
    let e2 = jlang_bounded_exact(&ab2(), Semantics::Rev, 2, &budgets);
    c.require(e2.is_unbounded(), || format!("exact((ab)*, rev, 2) = {e2:?}"));
    if let BoundednessVerdict::Unbounded { witness, cost } = &e2 {
        let checked = oracle_cost(&ab2(), witness, Semantics::Rev).unwrap();
        c.require(checked == *cost && !cost.at_most(2), || format!("exact witness {witness:?}: {cost} vs oracle {checked}"));
    }
    let s2 = jlang_bounded_search(&ab2(), Semantics::Rev, 2, 6);
    c.require(s2.is_unbounded(), || format!("search((ab)*, rev, 2, 6) = {s2:?}"));

    let corpus = random_corpus(CORPUS_SEED + 1, 40);
    let (mut empty, mut nonempty) = (0, 0);
    for (i, pair) in corpus.chunks(2).enumerate() {
        let (a1, a2) = (&pair[0], &pair[1]);
        let verdict = parikh_intersection_empty(a1, a2, 1 << 20).unwrap();
        let common: Vec<_> = parikh_image(a1, 6).intersection(&parikh_image(a2, 6)).cloned().collect();
        match &verdict {
            IntersectionVerdict::Empty => {
                empty += 1;
                c.require(common.is_empty(), || format!("pair {i}: Empty but both contain {:?}", common[0]));
            }
            IntersectionVerdict::NonEmpty(v) => {
                nonempty += 1;
                if v.total() <= 6 {
                    c.require(
                        parikh_image(a1, 6).contains(v) && parikh_image(a2, 6).contains(v),
                        || format!("pair {i}: vector {v:?} not found by search"),
                    );
                }
            }
            IntersectionVerdict::Unknown(why) => c.failures.push(format!("pair {i}: unknown ({why})")),
        }
        if !common.is_empty() {
            c.require(matches!(verdict, IntersectionVerdict::NonEmpty(_)), || {
                format!("pair {i}: search found {:?} but verdict {verdict:?}", common[0])
            });
        }
    }
    c.detail = format!("exact/search consistent; 20 pairs: {empty} empty, {nonempty} non-empty");
    c
}

fn criterion_8() -> Check {
    let mut c = Check::new();
    let corpus = random_corpus(CORPUS_SEED, CORPUS_SIZE);
    let mut checks = 0usize;
    for (i, aut) in corpus.iter().enumerate() {
        let words: Vec<Vec<usize>> = aut.alphabet().words_up_to(6).collect();
        for sem in Semantics::ALL {
            let top = if sem == Semantics::Max { 2 } else { 3 };
            let member: Vec<Vec<bool>> = (0..=top)
                .map(|k| {
                    let b = build(aut, sem, k);
                    words.iter().map(|w| member_letters(&b, w)).collect()
                })
                .collect();
            for (j, w) in words.iter().enumerate() {
                checks += 1;
                let word = aut.alphabet().decode(w);
                let mut fail = |what: String| {
                    if c.failures.len() < 10 {
                        c.failures.push(format!("automaton {i}, {sem}, {word:?}: {what}"));
                    }
                };
                if member[0][j] != aut.accepts_letters(w) {
                    fail("B_0 differs from A".into());
                }
                for k in 0..top {
                    if member[k][j] && !member[k + 1][j] {
                        fail(format!("in B_{k} but not B_{}", k + 1));
                    }
                }
                if sem == Semantics::Abs {
                    for m in 0..=1 {
                        if member[2 * m][j] != member[2 * m + 1][j] {
                            fail(format!("B_{} differs from B_{}", 2 * m, 2 * m + 1));
                        }
                    }
                }
            }
        }
    }
    c.detail = format!("{checks} (automaton, semantics, word) triples; k up to 3 (MAX up to 2)");
    c
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("example costs on (ab)*", criterion_1),
        ("universality for a*b* in REV", criterion_2),
        ("construction equals oracle on the corpus", criterion_3),
        ("jump-sequence invariants", criterion_4),
        ("interplay inequalities", criterion_5),
        ("separation table", criterion_6),
        ("boundedness via Parikh images", criterion_7),
        ("monotonicity and zero law", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let check = run();
        let status = if check.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} - {name}: {} [{:.1?}]", i + 1, check.detail, start.elapsed());
        for f in &check.failures {
            println!("    {f}");
        }
        if !check.failures.is_empty() {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
