use jumpcost::automata::{materialize, member_letters, ImplicitAutomaton};
use jumpcost::constructions::{
    build, build_abs, build_ham, build_max, build_rev, cost_via_construction, cost_via_construction_letters,
    state_space_bound, DEFAULT_MACRO_BUDGET,
};
use jumpcost::corpus::random_corpus;
use jumpcost::interplay::table2_languages;
use jumpcost::oracle::Oracle;
use jumpcost::{CostValue, Letter, Nfa, Semantics};

fn ab2() -> Nfa {
    Nfa::from_symbol_transitions("ab", 2, &[0], &[0], &[(0, 'a', 1), (1, 'b', 0)]).unwrap()
}

fn asb() -> Nfa {
    Nfa::from_symbol_transitions("ab", 2, &[0], &[0, 1], &[(0, 'a', 0), (0, 'b', 1), (1, 'b', 1)]).unwrap()
}

fn accepts<A: ImplicitAutomaton>(b: &A, w: &str) -> bool {
    member_letters(b, &b.alphabet().encode(w).unwrap())
}

#[test]
fn worked_examples() {
    let a = ab2();
    assert!(accepts(&build_abs(&a, 2), "ababbaab"));
    assert!(!accepts(&build_abs(&a, 2), "ababbaba"));
    assert!(!accepts(&build_abs(&a, 1), "ababbaab"));
    assert!(accepts(&build_abs(&a, 0), "abab"));

    assert!(accepts(&build_rev(&a, 2), "ababbaba"));
    assert!(!accepts(&build_rev(&a, 2), "bbaa"));

    assert!(accepts(&build_ham(&a, 2), "ababbaab"));
    assert!(!accepts(&build_ham(&a, 2), "ababbaba"));

    assert!(accepts(&build_max(&a, 1), "ababbaab"));
    assert!(!accepts(&build_max(&a, 0), "ababbaab"));
    assert!(!accepts(&build_max(&a, 1), "ababbaba"));
    assert!(accepts(&build_max(&a, 2), "ababbaba"));
}

#[test]
fn costs_via_construction() {
    let a = ab2();
    assert_eq!(cost_via_construction(&a, "ababbaba", Semantics::Abs).unwrap(), CostValue::Finite(4));
    assert_eq!(cost_via_construction(&a, "abab", Semantics::Max).unwrap(), CostValue::Finite(0));
    assert_eq!(cost_via_construction(&a, "aab", Semantics::Ham).unwrap(), CostValue::Infinite);
    // beyond the oracle's reach: b^5 a^5 needs every position to be a turn
    assert_eq!(cost_via_construction(&a, "bbbbbaaaaa", Semantics::Rev).unwrap(), CostValue::Finite(10));
    assert!(cost_via_construction(&a, "abx", Semantics::Rev).is_err());
}

#[test]
fn zero_cost_is_sequential_acceptance() {
    let mut all = vec![ab2(), asb()];
    all.extend(random_corpus(2, 30));
    all.extend(table2_languages().into_iter().map(|l| l.nfa));
    for a in &all {
        for sem in Semantics::ALL {
            let b = build(a, sem, 0);
            for w in a.alphabet().words_up_to(6) {
                assert_eq!(member_letters(&b, &w), a.accepts_letters(&w), "{sem}");
            }
        }
    }
}

fn words(a: &Nfa, max: usize) -> Vec<Vec<Letter>> {
    a.alphabet().words_up_to(max).collect()
}

#[test]
fn construction_costs_agree_with_oracle() {
    let oracle = Oracle::default();
    let mut all = random_corpus(4, 25);
    all.extend(table2_languages().into_iter().map(|l| l.nfa));
    for a in &all {
        for w in words(a, 5) {
            let costs = oracle.all_costs(a, &w).unwrap();
            for sem in Semantics::ALL {
                let c = cost_via_construction_letters(a, &w, sem, DEFAULT_MACRO_BUDGET).unwrap();
                assert_eq!(c, costs.get(sem), "{sem} on {}", a.alphabet().decode(&w));
            }
        }
    }
}

/// The mandatory differential range stops at k = 1 for MAX; k = 2 is checked
/// here on a smaller slice of the corpus.
#[test]
fn max_k2_agrees_with_oracle() {
    let oracle = Oracle::default();
    let mut all = random_corpus(0, 20);
    all.extend(table2_languages().into_iter().map(|l| l.nfa));
    for a in &all {
        let b = build_max(a, 2);
        for w in words(a, 6) {
            let c = oracle.cost(a, &w, Semantics::Max).unwrap();
            assert_eq!(member_letters(&b, &w), c.at_most(2), "{}", a.alphabet().decode(&w));
        }
    }
}

#[test]
fn max_symmetry_reduction_preserves_language() {
    // the unreduced automaton is slow at k = 2, hence the short words
    for a in random_corpus(9, 20) {
        for k in 0..=2 {
            let plain = build_max(&a, k).with_symmetry_reduction(false);
            let reduced = build_max(&a, k).with_symmetry_reduction(true);
            for w in words(&a, if k < 2 { 6 } else { 4 }) {
                assert_eq!(member_letters(&plain, &w), member_letters(&reduced, &w));
            }
        }
    }
}

#[test]
fn ham_agrees_on_three_letters() {
    let c = table2_languages().into_iter().find(|l| l.tag == "c*ac*bc*").unwrap().nfa;
    let oracle = Oracle::default();
    for k in 0..=2 {
        let b = build_ham(&c, k);
        for w in words(&c, 6) {
            assert_eq!(member_letters(&b, &w), oracle.cost(&c, &w, Semantics::Ham).unwrap().at_most(k));
        }
    }
}

#[test]
fn reachable_states_within_closed_form() {
    let mut all = vec![ab2(), asb()];
    all.extend(random_corpus(0, 50));
    for a in &all {
        for sem in [Semantics::Abs, Semantics::Rev, Semantics::Ham] {
            for k in 0..=2 {
                let bound = state_space_bound(a, sem, k).unwrap();
                let m = materialize(&build(a, sem, k), 1_000_000).unwrap();
                assert!(m.state_count() as u128 <= bound, "{sem} k={k}: {} > {bound}", m.state_count());
            }
        }
    }
    assert_eq!(state_space_bound(&ab2(), Semantics::Rev, 2), Some(8));
    assert_eq!(state_space_bound(&ab2(), Semantics::Max, 2), None);
}

#[test]
fn odd_reversal_budget_adds_nothing() {
    for a in random_corpus(6, 20) {
        for m in 0..=1 {
            let even = build_rev(&a, 2 * m);
            let odd = build_rev(&a, 2 * m + 1);
            for w in words(&a, 6) {
                assert_eq!(member_letters(&even, &w), member_letters(&odd, &w));
            }
        }
    }
}
