//! Parikh-image intersection emptiness by branch-and-bound over flow
//! constraints.
//!
//! For each automaton, one integer variable per transition counts how often
//! a run uses it, plus 0/1 variables choosing the start and end state. Flow
//! conservation makes every integral solution a union of a path and cycles;
//! it is a single run exactly when every used transition is reachable from
//! the chosen start through used transitions. Disconnected solutions are cut
//! off by branching, fractional ones by the usual bound split.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::lp::{Lp, LpOutcome};
use super::{check_alphabets, parikh_member, ParikhVector};
use crate::automata::{Letter, Nfa, StateId};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntersectionVerdict {
    Empty,
    NonEmpty(ParikhVector),
    /// The search could not conclude; the string says why.
    Unknown(String),
}

pub const DEFAULT_NODE_LIMIT: usize = 1_000_000;

#[derive(Clone, Copy, Debug)]
pub struct IntersectionConfig {
    /// Upper bound imposed on every transition variable.
    pub flow_bound: u64,
    /// Maximal number of branch-and-bound nodes.
    pub node_limit: usize,
}

/// `2^(|T1| + |T2|)`, capped at `2^32`.
pub fn default_flow_bound(a1: &Nfa, a2: &Nfa) -> u64 {
    let e = (a1.transition_count() + a2.transition_count()).min(32);
    1u64 << e
}

/// Whether the Parikh images of `a1` and `a2` are disjoint.
///
/// `Empty` is only reported when no branch was cut off by `flow_bound`
/// alone, so it holds without any bound on word length.
pub fn parikh_intersection_empty(a1: &Nfa, a2: &Nfa, flow_bound: u64) -> Result<IntersectionVerdict> {
    parikh_intersection_empty_with(a1, a2, &IntersectionConfig { flow_bound, node_limit: DEFAULT_NODE_LIMIT })
}

pub fn parikh_intersection_empty_with(
    a1: &Nfa,
    a2: &Nfa,
    config: &IntersectionConfig,
) -> Result<IntersectionVerdict> {
    check_alphabets(a1, a2)?;
    let (Some(s1), Some(s2)) = (Side::trimmed(a1), Side::trimmed(a2)) else {
        return Ok(IntersectionVerdict::Empty);
    };
    let system = FlowSystem::new(a1, [s1, s2]);
    Ok(system.search(a1, a2, config))
}

/// Useful part of one automaton and its variable layout.
struct Side {
    /// (source, letter, target) of each transition variable
    transitions: Vec<(StateId, Letter, StateId)>,
    sources: Vec<StateId>,
    sinks: Vec<StateId>,
    states: Vec<StateId>,
    /// first variable index of transitions, sources, sinks
    offset: usize,
}

impl Side {
    fn trimmed(aut: &Nfa) -> Option<Side> {
        let reach = aut.reachable();
        let coreach = aut.coreachable();
        let useful = |q: StateId| reach[q] && coreach[q];
        let states: Vec<StateId> = (0..aut.state_count()).filter(|&q| useful(q)).collect();
        if states.is_empty() {
            return None;
        }
        Some(Side {
            transitions: aut.transitions().filter(|&(p, _, q)| useful(p) && useful(q)).collect(),
            sources: aut.initial().iter().copied().filter(|&q| useful(q)).collect(),
            sinks: aut.accepting().iter().copied().filter(|&q| useful(q)).collect(),
            states,
            offset: 0,
        })
    }

    fn var_count(&self) -> usize {
        self.transitions.len() + self.sources.len() + self.sinks.len()
    }

    fn t(&self, i: usize) -> usize {
        self.offset + i
    }

    fn s(&self, i: usize) -> usize {
        self.offset + self.transitions.len() + i
    }

    fn f(&self, i: usize) -> usize {
        self.offset + self.transitions.len() + self.sources.len() + i
    }
}

struct FlowSystem {
    sides: [Side; 2],
    lp: Lp,
    /// variables carrying the artificial flow bound
    flow_vars: Vec<usize>,
    letters: usize,
}

struct Node {
    lower: Vec<BigInt>,
    upper: Vec<Option<BigInt>>,
}

impl FlowSystem {
    fn new(a1: &Nfa, mut sides: [Side; 2]) -> Self {
        sides[1].offset = sides[0].var_count();
        let vars = sides[0].var_count() + sides[1].var_count();
        let letters = a1.alphabet().len();
        let mut rows = Vec::new();
        for side in &sides {
            for &q in &side.states {
                let mut coeffs = Vec::new();
                for (i, &(p, _, r)) in side.transitions.iter().enumerate() {
                    let c = (r == q) as i64 - (p == q) as i64;
                    if c != 0 {
                        coeffs.push((side.t(i), c));
                    }
                }
                if let Some(i) = side.sources.iter().position(|&s| s == q) {
                    coeffs.push((side.s(i), 1));
                }
                if let Some(i) = side.sinks.iter().position(|&s| s == q) {
                    coeffs.push((side.f(i), -1));
                }
                if !coeffs.is_empty() {
                    rows.push((coeffs, 0));
                }
            }
            rows.push(((0..side.sources.len()).map(|i| (side.s(i), 1)).collect(), 1));
            rows.push(((0..side.sinks.len()).map(|i| (side.f(i), 1)).collect(), 1));
        }
        for l in 0..letters {
            let mut coeffs = Vec::new();
            for (i, &(_, a, _)) in sides[0].transitions.iter().enumerate() {
                if a == l {
                    coeffs.push((sides[0].t(i), 1));
                }
            }
            for (i, &(_, a, _)) in sides[1].transitions.iter().enumerate() {
                if a == l {
                    coeffs.push((sides[1].t(i), -1));
                }
            }
            if !coeffs.is_empty() {
                rows.push((coeffs, 0));
            }
        }
        let mut objective = vec![0; vars];
        for i in 0..sides[0].transitions.len() {
            objective[sides[0].t(i)] = 1;
        }
        let flow_vars = sides
            .iter()
            .flat_map(|s| (0..s.transitions.len()).map(move |i| s.t(i)))
            .collect();
        FlowSystem { sides, lp: Lp { vars, rows, objective }, flow_vars, letters }
    }

    fn root(&self) -> Node {
        let mut upper = vec![None; self.lp.vars];
        for side in &self.sides {
            for i in 0..side.sources.len() {
                upper[side.s(i)] = Some(BigInt::from(1));
            }
            for i in 0..side.sinks.len() {
                upper[side.f(i)] = Some(BigInt::from(1));
            }
        }
        Node { lower: vec![BigInt::zero(); self.lp.vars], upper }
    }

    fn search(&self, a1: &Nfa, a2: &Nfa, config: &IntersectionConfig) -> IntersectionVerdict {
        let bound = BigInt::from(config.flow_bound);
        let mut stack = vec![self.root()];
        let mut nodes = 0usize;
        let mut bound_pruned = false;

        while let Some(node) = stack.pop() {
            nodes += 1;
            if nodes > config.node_limit {
                return IntersectionVerdict::Unknown(format!("node limit {} reached", config.node_limit));
            }
            let mut capped = node.upper.clone();
            for &j in &self.flow_vars {
                capped[j] = Some(match &capped[j] {
                    Some(u) if *u < bound => u.clone(),
                    _ => bound.clone(),
                });
            }
            let x = match self.lp.solve(&node.lower, &capped) {
                LpOutcome::Optimal(x) => x,
                LpOutcome::Infeasible => {
                    if !bound_pruned && self.lp.solve(&node.lower, &node.upper) != LpOutcome::Infeasible {
                        bound_pruned = true;
                    }
                    continue;
                }
            };

            if let Some(j) = x.iter().position(|v| !v.is_integer()) {
                let floor = x[j].floor().to_integer();
                let mut up = Node { lower: node.lower.clone(), upper: node.upper.clone() };
                up.lower[j] = &floor + 1;
                let mut down = node;
                down.upper[j] = Some(floor);
                stack.push(up);
                stack.push(down);
                continue;
            }

            let values: Vec<BigInt> = x.iter().map(|v| v.to_integer()).collect();
            match self.disconnected(&values) {
                None => {
                    let v = self.vector(&values);
                    assert!(
                        parikh_member(&v, a1) && parikh_member(&v, a2),
                        "connected integral flow must yield a common Parikh vector"
                    );
                    return IntersectionVerdict::NonEmpty(v);
                }
                Some((stranded, entering)) => {
                    // connected solutions either drop a stranded transition or
                    // use a transition entering the stranded part; the
                    // children below partition those cases
                    let mut children = Vec::new();
                    for (i, &c) in stranded.iter().enumerate() {
                        let mut child = Node { lower: node.lower.clone(), upper: node.upper.clone() };
                        for &prev in &stranded[..i] {
                            child.lower[prev] = child.lower[prev].clone().max(BigInt::from(1));
                        }
                        child.upper[c] = Some(BigInt::zero());
                        children.push(child);
                    }
                    for (i, &e) in entering.iter().enumerate() {
                        let mut child = Node { lower: node.lower.clone(), upper: node.upper.clone() };
                        for &c in &stranded {
                            child.lower[c] = child.lower[c].clone().max(BigInt::from(1));
                        }
                        for &prev in &entering[..i] {
                            child.upper[prev] = Some(BigInt::zero());
                        }
                        child.lower[e] = child.lower[e].clone().max(BigInt::from(1));
                        children.push(child);
                    }
                    stack.extend(children.into_iter().rev());
                }
            }
        }
        if bound_pruned {
            IntersectionVerdict::Unknown(format!(
                "no common vector with every transition used at most {} times",
                config.flow_bound
            ))
        } else {
            IntersectionVerdict::Empty
        }
    }

    /// For the first side whose used transitions are not all reachable from
    /// its chosen source: the stranded transition variables and the variables
    /// of transitions entering their source states from outside.
    fn disconnected(&self, values: &[BigInt]) -> Option<(Vec<usize>, Vec<usize>)> {
        for side in &self.sides {
            let start = side
                .sources
                .iter()
                .enumerate()
                .find(|(i, _)| !values[side.s(*i)].is_zero())
                .map(|(_, &q)| q)?;
            let used: Vec<usize> = (0..side.transitions.len())
                .filter(|&i| !values[side.t(i)].is_zero())
                .collect();
            let mut reached = vec![start];
            let mut changed = true;
            while changed {
                changed = false;
                for &i in &used {
                    let (p, _, q) = side.transitions[i];
                    if reached.contains(&p) && !reached.contains(&q) {
                        reached.push(q);
                        changed = true;
                    }
                }
            }
            let stranded: Vec<usize> = used
                .iter()
                .copied()
                .filter(|&i| !reached.contains(&side.transitions[i].0))
                .collect();
            if stranded.is_empty() {
                continue;
            }
            let origins: Vec<StateId> = stranded.iter().map(|&i| side.transitions[i].0).collect();
            let entering: Vec<usize> = (0..side.transitions.len())
                .filter(|&i| {
                    let (p, _, q) = side.transitions[i];
                    !origins.contains(&p) && origins.contains(&q)
                })
                .map(|i| side.t(i))
                .collect();
            return Some((stranded.into_iter().map(|i| side.t(i)).collect(), entering));
        }
        None
    }

    fn vector(&self, values: &[BigInt]) -> ParikhVector {
        let mut counts = vec![0usize; self.letters];
        let side = &self.sides[0];
        for (i, &(_, l, _)) in side.transitions.iter().enumerate() {
            counts[l] += values[side.t(i)].to_usize().expect("flow fits in usize");
        }
        ParikhVector(counts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab2() -> Nfa {
        Nfa::from_symbol_transitions("ab", 2, &[0], &[0], &[(0, 'a', 1), (1, 'b', 0)]).unwrap()
    }

    fn asb() -> Nfa {
        Nfa::from_symbol_transitions("ab", 2, &[0], &[0, 1], &[(0, 'a', 0), (0, 'b', 1), (1, 'b', 1)])
            .unwrap()
    }

    fn word_a() -> Nfa {
        Nfa::from_symbol_transitions("ab", 2, &[0], &[1], &[(0, 'a', 1)]).unwrap()
    }

    #[test]
    fn examples() {
        let v = parikh_intersection_empty(&ab2(), &asb(), 1 << 10).unwrap();
        assert!(matches!(v, IntersectionVerdict::NonEmpty(ParikhVector(ref c)) if c[0] == c[1]));
        assert_eq!(parikh_intersection_empty(&ab2(), &word_a(), 1 << 10).unwrap(), IntersectionVerdict::Empty);
        assert!(matches!(
            parikh_intersection_empty(&asb(), &asb(), 1 << 10).unwrap(),
            IntersectionVerdict::NonEmpty(_)
        ));
    }

    #[test]
    fn needs_connectivity() {
        // a1: a from q0 to q1 (accepting) plus a disconnected b-loop on q2;
        // a2 only accepts words with one a and one b.
        let a1 = Nfa::from_symbol_transitions("ab", 3, &[0], &[1], &[(0, 'a', 1), (2, 'b', 2)]).unwrap();
        let a2 = Nfa::from_symbol_transitions("ab", 3, &[0], &[2], &[(0, 'a', 1), (1, 'b', 2)]).unwrap();
        assert_eq!(parikh_intersection_empty(&a1, &a2, 1 << 10).unwrap(), IntersectionVerdict::Empty);
    }

    #[test]
    fn alphabet_mismatch() {
        let other = Nfa::from_symbol_transitions("ba", 1, &[0], &[0], &[]).unwrap();
        assert!(parikh_intersection_empty(&ab2(), &other, 4).is_err());
    }

    #[test]
    fn tight_bound_gives_unknown() {
        // a^4 versus (aa)* restricted to 4: needs a transition used 4 times in a1
        let a1 = Nfa::from_symbol_transitions("a", 2, &[0], &[1], &[(0, 'a', 0), (0, 'a', 1)]).unwrap();
        let a2 = Nfa::from_symbol_transitions(
            "a",
            5,
            &[0],
            &[4],
            &[(0, 'a', 1), (1, 'a', 2), (2, 'a', 3), (3, 'a', 4)],
        )
        .unwrap();
        assert!(matches!(
            parikh_intersection_empty(&a1, &a2, 2).unwrap(),
            IntersectionVerdict::Unknown(_)
        ));
        assert_eq!(
            parikh_intersection_empty(&a1, &a2, 8).unwrap(),
            IntersectionVerdict::NonEmpty(ParikhVector(vec![4]))
        );
    }
}
