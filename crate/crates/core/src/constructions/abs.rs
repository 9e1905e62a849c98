use crate::automata::{Alphabet, ImplicitAutomaton, Letter, Nfa, StateId};

/// Content of one window cell.
///
/// Cells left of the sequential position have been checked against the
/// input (`Consumed` or `Pending`); cells at or right of it have not
/// (`Unknown` or `Guessed`). A letter the jumping head reads ahead of the
/// sequential one is guessed and checked once the sequential head arrives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    /// Read by the jumping head (or before the start of the word).
    Consumed,
    /// Known letter, not yet read by the jumping head.
    Pending(Letter),
    /// Letter not yet seen by either head.
    Unknown,
    /// Read by the jumping head under a guessed letter.
    Guessed(Letter),
}

/// `cells[i]` holds offset `i - k` relative to the next sequential position.
/// `head` is the offset of the next position the jumping head reads and
/// `spent` the cost charged so far.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbsState {
    pub q: StateId,
    pub cells: Vec<Cell>,
    pub head: i16,
    pub spent: u16,
}

/// Accepts the words whose absolute-distance cost is at most `k`.
///
/// The sequential head walks the input; the simulated jumping head stays
/// within distance `k` of it, which is enough because a run of cost at most
/// `k` never visits position `j` further than `k` away from step `j`.
#[derive(Clone, Debug)]
pub struct AbsConstruction<'a> {
    aut: &'a Nfa,
    k: usize,
}

pub fn build_abs(aut: &Nfa, k: usize) -> AbsConstruction<'_> {
    assert!(k < i16::MAX as usize / 2, "k too large for the window encoding");
    AbsConstruction { aut, k }
}

impl AbsConstruction<'_> {
    pub fn k(&self) -> usize {
        self.k
    }

    fn idx(&self, offset: i16) -> usize {
        (offset + self.k as i16) as usize
    }
}

impl ImplicitAutomaton for AbsConstruction<'_> {
    type State = AbsState;

    fn alphabet(&self) -> &Alphabet {
        self.aut.alphabet()
    }

    fn initial_states(&self) -> Vec<AbsState> {
        let k = self.k as i16;
        let cells: Vec<Cell> = (-k..=k)
            .map(|o| if o < 0 { Cell::Consumed } else { Cell::Unknown })
            .collect();
        let mut out = Vec::new();
        for &q in self.aut.initial() {
            for h in 0..=k {
                out.push(AbsState { q, cells: cells.clone(), head: h, spent: h as u16 });
            }
        }
        out
    }

    fn successors(&self, s: &AbsState, sigma: Letter) -> Vec<AbsState> {
        let k = self.k as i16;
        let h = s.head;
        let reads: Vec<(Letter, Cell)> = match s.cells[self.idx(h)] {
            Cell::Pending(tau) => vec![(tau, Cell::Consumed)],
            Cell::Unknown if h == 0 => vec![(sigma, Cell::Guessed(sigma))],
            Cell::Unknown => self.aut.alphabet().letters().map(|t| (t, Cell::Guessed(t))).collect(),
            Cell::Consumed | Cell::Guessed(_) => return Vec::new(),
        };

        let mut out = Vec::new();
        for (tau, marked) in reads {
            let targets = self.aut.successors(s.q, tau);
            if targets.is_empty() {
                continue;
            }
            let mut cells = s.cells.clone();
            cells[self.idx(h)] = marked;
            // the sequential head checks the current cell
            let centre = self.idx(0);
            cells[centre] = match cells[centre] {
                Cell::Unknown => Cell::Pending(sigma),
                Cell::Guessed(g) if g == sigma => Cell::Consumed,
                _ => continue,
            };
            // the leftmost cell leaves the window and must have been read
            if cells[0] != Cell::Consumed {
                continue;
            }
            cells.remove(0);
            cells.push(Cell::Unknown);

            for h2 in -k..=k {
                if !matches!(cells[self.idx(h2)], Cell::Unknown | Cell::Pending(_)) {
                    continue;
                }
                // the old head sits at offset h - 1 after the shift
                let spent = s.spent as usize + ((h2 + 1 - h).unsigned_abs() as usize) - 1;
                if spent > self.k {
                    continue;
                }
                for &q in targets {
                    out.push(AbsState { q, cells: cells.clone(), head: h2, spent: spent as u16 });
                }
            }
        }
        out
    }

    fn is_accepting(&self, s: &AbsState) -> bool {
        let k = self.k as i16;
        self.aut.is_accepting(s.q)
            && s.head == 0
            && (-k..0).all(|o| s.cells[self.idx(o)] == Cell::Consumed)
            && (0..=k).all(|o| s.cells[self.idx(o)] == Cell::Unknown)
    }
}
