use jumpcost::boundedness::{
    jlang_bounded_exact, jlang_bounded_search, univ_bounded, BoundednessVerdict, ExactBudgets,
};
use jumpcost::corpus::random_corpus;
use jumpcost::oracle::{oracle_cost, Oracle};
use jumpcost::{CostValue, Nfa, Semantics};

fn ab2() -> Nfa {
    Nfa::from_symbol_transitions("ab", 2, &[0], &[0], &[(0, 'a', 1), (1, 'b', 0)]).unwrap()
}

fn asb() -> Nfa {
    Nfa::from_symbol_transitions("ab", 2, &[0], &[0, 1], &[(0, 'a', 0), (0, 'b', 1), (1, 'b', 1)]).unwrap()
}

fn a_star() -> Nfa {
    Nfa::from_symbol_transitions("a", 1, &[0], &[0], &[(0, 'a', 0)]).unwrap()
}

fn unbounded(w: &str, c: CostValue) -> BoundednessVerdict {
    BoundednessVerdict::Unbounded { witness: w.into(), cost: c }
}

#[test]
fn universal_examples() {
    assert_eq!(univ_bounded(&asb(), Semantics::Rev, 2, 100_000), BoundednessVerdict::Bounded);
    assert_eq!(univ_bounded(&asb(), Semantics::Rev, 0, 100_000), unbounded("ba", CostValue::Finite(2)));
    for k in 0..=4 {
        assert_eq!(univ_bounded(&ab2(), Semantics::Abs, k, 100_000), unbounded("a", CostValue::Infinite));
    }
    assert!(matches!(univ_bounded(&asb(), Semantics::Rev, 2, 1), BoundednessVerdict::Unknown(_)));
}

#[test]
fn exact_examples() {
    let budgets = ExactBudgets::default();
    assert_eq!(jlang_bounded_exact(&asb(), Semantics::Rev, 2, &budgets), BoundednessVerdict::Bounded);
    match jlang_bounded_exact(&ab2(), Semantics::Rev, 2, &budgets) {
        BoundednessVerdict::Unbounded { witness, cost } => {
            assert!(cost >= CostValue::Finite(4));
            assert_eq!(oracle_cost(&ab2(), &witness, Semantics::Rev).unwrap(), cost);
        }
        other => panic!("{other}"),
    }
    for sem in Semantics::ALL {
        assert_eq!(jlang_bounded_exact(&a_star(), sem, 0, &budgets), BoundednessVerdict::Bounded);
    }
    let tiny = ExactBudgets { construction_states: 1, ..ExactBudgets::default() };
    assert!(matches!(jlang_bounded_exact(&asb(), Semantics::Rev, 2, &tiny), BoundednessVerdict::Unknown(_)));
}

#[test]
fn search_examples() {
    assert_eq!(jlang_bounded_search(&ab2(), Semantics::Rev, 2, 6), unbounded("bbaa", CostValue::Finite(4)));
    match jlang_bounded_search(&asb(), Semantics::Ham, 2, 6) {
        BoundednessVerdict::Unbounded { witness, cost } => {
            // b^2 a^2 already differs from aabb everywhere
            assert_eq!((witness.as_str(), cost), ("bbaa", CostValue::Finite(4)));
        }
        other => panic!("{other}"),
    }
    let v = jlang_bounded_search(&asb(), Semantics::Rev, 2, 8);
    assert_eq!(v, BoundednessVerdict::Unknown("up to 8".into()));
    assert_eq!(v.to_string(), "unknown up to 8");
}

#[test]
fn verdict_display() {
    assert_eq!(BoundednessVerdict::Bounded.to_string(), "bounded");
    assert_eq!(unbounded("bbaa", CostValue::Finite(4)).to_string(), "unbounded witness=bbaa cost=4");
}

/// Maximum finite-or-infinite cost over the jumping language up to `max`.
fn scanned_max(a: &Nfa, sem: Semantics, max: usize, universal: bool) -> CostValue {
    let oracle = Oracle::default();
    a.alphabet()
        .words_up_to(max)
        .map(|w| oracle.cost(a, &w, sem).unwrap())
        .filter(|c| universal || c.is_finite())
        .max()
        .unwrap_or(CostValue::Finite(0))
}

/// The three procedures must never contradict each other or the oracle.
#[test]
fn procedures_agree_on_corpus() {
    let budgets = ExactBudgets::default();
    for a in random_corpus(0, 20) {
        for sem in [Semantics::Abs, Semantics::Rev, Semantics::Ham, Semantics::Max] {
            for k in 0..=2 {
                if sem == Semantics::Max && k == 2 {
                    continue;
                }
                let univ = univ_bounded(&a, sem, k, 100_000);
                let exact = jlang_bounded_exact(&a, sem, k, &budgets);
                let search = jlang_bounded_search(&a, sem, k, 6);

                for v in [&univ, &exact, &search] {
                    if let BoundednessVerdict::Unbounded { witness, cost } = v {
                        assert!(*cost > CostValue::Finite(k));
                        if witness.chars().count() <= 9 {
                            assert_eq!(oracle_cost(&a, witness, sem).unwrap(), *cost);
                        }
                    }
                }
                if univ.is_bounded() {
                    assert!(scanned_max(&a, sem, 6, true).at_most(k));
                    assert!(!exact.is_unbounded() && !search.is_unbounded());
                }
                if exact.is_bounded() {
                    assert!(scanned_max(&a, sem, 6, false).at_most(k));
                    assert!(!search.is_unbounded());
                }
                if search.is_unbounded() {
                    assert!(!exact.is_bounded());
                }
                if scanned_max(&a, sem, 6, false).at_most(k) {
                    assert!(!search.is_unbounded());
                } else {
                    assert!(search.is_unbounded());
                }
            }
        }
    }
}
