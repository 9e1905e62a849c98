use std::fmt;

use crate::automata::{Alphabet, ImplicitAutomaton, Letter, Nfa, StateId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Right,
    Left,
}

/// One tracked sweep. `t` counts steps since the coordinate last read a
/// letter; `component` is the bit set of coordinates already joined to this
/// one by activations and deactivations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MaxCoordinate {
    Inactive,
    Active { dir: Direction, q: StateId, t: u8, component: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MaxState {
    pub coords: Vec<MaxCoordinate>,
}

/// Per-letter choice of what the letter does to the tracked sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operation {
    /// A left sweep ends here and the following right sweep starts.
    Activate { left: usize, right: usize },
    /// A right sweep ends here and the following left sweep starts.
    Deactivate { left: usize, right: usize },
    /// The letter continues the sweep in coordinate `j`.
    None(usize),
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operation::Activate { left, right } => write!(f, "activate({left},{right})"),
            Operation::Deactivate { left, right } => write!(f, "deactivate({left},{right})"),
            Operation::None(j) => write!(f, "none({j})"),
        }
    }
}

/// Accepts the words whose maximum-jump cost is at most `k`.
///
/// Keeps `2k + 2` coordinates, each simulating one sweep of the jump
/// sequence: right sweeps run the automaton forwards, left sweeps backwards.
/// Every jump of the sequence is the wait of exactly one coordinate between
/// two of its reads (or until activation/deactivation), so bounding every
/// wait by `k` bounds the maximum jump.
#[derive(Clone, Debug)]
pub struct MaxConstruction<'a> {
    aut: &'a Nfa,
    k: usize,
    canonical: bool,
}

pub fn build_max(aut: &Nfa, k: usize) -> MaxConstruction<'_> {
    assert!(2 * k + 2 <= 32, "k too large for the component bit sets");
    MaxConstruction { aut, k, canonical: true }
}

impl<'a> MaxConstruction<'a> {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn width(&self) -> usize {
        2 * self.k + 2
    }

    /// Coordinates are interchangeable; by default successor states are
    /// relabelled to a canonical form. Disabling this keeps raw labels.
    pub fn with_symmetry_reduction(mut self, on: bool) -> Self {
        self.canonical = on;
        self
    }

    /// Operations that are structurally possible in `s` (the letter decides
    /// later whether the automaton can follow).
    pub fn operations(&self, s: &MaxState) -> Vec<Operation> {
        let mut ops = Vec::new();
        let inactive: Vec<usize> = (0..s.coords.len())
            .filter(|&j| s.coords[j] == MaxCoordinate::Inactive)
            .collect();
        for (j, c) in s.coords.iter().enumerate() {
            if let MaxCoordinate::Active { .. } = c {
                ops.push(Operation::None(j));
            }
        }
        for &l in &inactive {
            for &r in &inactive {
                if l != r {
                    ops.push(Operation::Activate { left: l, right: r });
                }
            }
        }
        for (l, cl) in s.coords.iter().enumerate() {
            for (r, cr) in s.coords.iter().enumerate() {
                if let (
                    MaxCoordinate::Active { dir: Direction::Left, component: sl, .. },
                    MaxCoordinate::Active { dir: Direction::Right, component: sr, .. },
                ) = (cl, cr)
                {
                    let pair = (1u32 << l) | (1u32 << r);
                    if !(*sl == pair && *sr == pair) {
                        ops.push(Operation::Deactivate { left: l, right: r });
                    }
                }
            }
        }
        ops
    }

    /// Successors of `s` on `sigma` under one operation (before
    /// canonicalisation).
    pub fn apply(&self, s: &MaxState, op: Operation, sigma: Letter) -> Vec<MaxState> {
        let mut base = s.clone();
        let touched: Vec<usize> = match op {
            Operation::None(j) => vec![j],
            Operation::Activate { left, right } | Operation::Deactivate { left, right } => vec![left, right],
        };
        // every coordinate not involved in this step waits one more step
        for (j, c) in base.coords.iter_mut().enumerate() {
            if touched.contains(&j) {
                continue;
            }
            if let MaxCoordinate::Active { t, .. } = c {
                if *t as usize >= self.k {
                    return Vec::new();
                }
                *t += 1;
            }
        }

        let mut out = Vec::new();
        match op {
            Operation::None(j) => {
                let MaxCoordinate::Active { dir, q, component, .. } = s.coords[j] else {
                    return out;
                };
                let moves = match dir {
                    Direction::Right => self.aut.successors(q, sigma),
                    Direction::Left => self.aut.predecessors(q, sigma),
                };
                for &q2 in moves {
                    let mut next = base.clone();
                    next.coords[j] = MaxCoordinate::Active { dir, q: q2, t: 0, component };
                    out.push(next);
                }
            }
            Operation::Activate { left, right } => {
                if s.coords[left] != MaxCoordinate::Inactive || s.coords[right] != MaxCoordinate::Inactive {
                    return out;
                }
                let pair = (1u32 << left) | (1u32 << right);
                for p in 0..self.aut.state_count() {
                    for &q in self.aut.successors(p, sigma) {
                        let mut next = base.clone();
                        next.coords[left] =
                            MaxCoordinate::Active { dir: Direction::Left, q: p, t: 0, component: pair };
                        next.coords[right] =
                            MaxCoordinate::Active { dir: Direction::Right, q, t: 0, component: pair };
                        out.push(next);
                    }
                }
            }
            Operation::Deactivate { left, right } => {
                let (
                    MaxCoordinate::Active { dir: Direction::Left, q: ql, component: sl, .. },
                    MaxCoordinate::Active { dir: Direction::Right, q: qr, component: sr, .. },
                ) = (s.coords[left], s.coords[right])
                else {
                    return out;
                };
                let pair = (1u32 << left) | (1u32 << right);
                if sl == pair && sr == pair {
                    return out;
                }
                if !self.aut.successors(qr, sigma).contains(&ql) {
                    return out;
                }
                let merged = (sl | sr) & !pair;
                let mut next = base;
                next.coords[left] = MaxCoordinate::Inactive;
                next.coords[right] = MaxCoordinate::Inactive;
                for j in 0..next.coords.len() {
                    if merged & (1 << j) != 0 {
                        if let MaxCoordinate::Active { component, .. } = &mut next.coords[j] {
                            *component = merged;
                        }
                    }
                }
                out.push(next);
            }
        }
        out
    }

    /// Relabels coordinates so that states differing only by a permutation
    /// of coordinate indices coincide.
    pub fn canonicalize(&self, s: &MaxState) -> MaxState {
        // group active coordinates by component
        let mut groups: Vec<(u32, Vec<(Direction, StateId, u8)>)> = Vec::new();
        for c in &s.coords {
            if let MaxCoordinate::Active { dir, q, t, component } = *c {
                match groups.iter_mut().find(|(m, _)| *m == component) {
                    Some((_, members)) => members.push((dir, q, t)),
                    None => groups.push((component, vec![(dir, q, t)])),
                }
            }
        }
        let mut groups: Vec<Vec<(Direction, StateId, u8)>> = groups
            .into_iter()
            .map(|(_, mut members)| {
                members.sort_unstable();
                members
            })
            .collect();
        groups.sort_unstable();
        let mut coords = vec![MaxCoordinate::Inactive; s.coords.len()];
        let mut next = 0;
        for members in groups {
            let mask = ((1u32 << members.len()) - 1) << next;
            for (dir, q, t) in members {
                coords[next] = MaxCoordinate::Active { dir, q, t, component: mask };
                next += 1;
            }
        }
        MaxState { coords }
    }
}

impl ImplicitAutomaton for MaxConstruction<'_> {
    type State = MaxState;

    fn alphabet(&self) -> &Alphabet {
        self.aut.alphabet()
    }

    fn initial_states(&self) -> Vec<MaxState> {
        self.aut
            .initial()
            .iter()
            .map(|&q| {
                let mut coords = vec![MaxCoordinate::Inactive; self.width()];
                coords[0] = MaxCoordinate::Active { dir: Direction::Right, q, t: 0, component: 1 };
                MaxState { coords }
            })
            .collect()
    }

    fn successors(&self, s: &MaxState, sigma: Letter) -> Vec<MaxState> {
        let mut out = Vec::new();
        for op in self.operations(s) {
            for next in self.apply(s, op, sigma) {
                out.push(if self.canonical { self.canonicalize(&next) } else { next });
            }
        }
        out
    }

    fn is_accepting(&self, s: &MaxState) -> bool {
        let mut active = s
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != MaxCoordinate::Inactive);
        match (active.next(), active.next()) {
            (Some((j, MaxCoordinate::Active { dir: Direction::Right, q, component, .. })), None) => {
                self.aut.is_accepting(*q) && *component == 1u32 << j
            }
            _ => false,
        }
    }
}
