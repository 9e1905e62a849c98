use super::jump::JumpSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SweepKind {
    Right,
    Left,
}

/// Maximal monotone infix of a jump sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sweep {
    pub kind: SweepKind,
    /// Index into the position vector of the sweep's first entry.
    pub start: usize,
    pub positions: Vec<usize>,
}

impl Sweep {
    pub fn end(&self) -> usize {
        self.start + self.positions.len() - 1
    }
}

/// Splits a jump sequence into its sweeps. Each sweep ends at a turning
/// index (or at the final marker); directions alternate starting with
/// [`SweepKind::Right`].
pub fn sweeps(js: &JumpSequence) -> Vec<Sweep> {
    let a = js.positions();
    let turning = js.turning_indices();
    let mut out = Vec::new();
    let mut start = 0;
    let mut kind = SweepKind::Right;
    for end in 1..a.len() {
        if turning.contains(&end) || end == a.len() - 1 {
            out.push(Sweep { kind, start, positions: a[start..=end].to_vec() });
            start = end + 1;
            kind = match kind {
                SweepKind::Right => SweepKind::Left,
                SweepKind::Left => SweepKind::Right,
            };
        }
    }
    out
}

/// The tape interval spanned by a sweep, counted from where the head was
/// before the sweep started (from position 0 for the first sweep).
fn range(js: &JumpSequence, sweep: &Sweep) -> (usize, usize) {
    let a = js.positions();
    let last = a[sweep.end()];
    match sweep.kind {
        SweepKind::Right if sweep.start == 0 => (a[0], last),
        SweepKind::Right => (a[sweep.start - 1], last),
        SweepKind::Left => (last, a[sweep.start - 1]),
    }
}

/// Largest number of sweeps whose ranges share a single tape index.
pub fn max_simultaneous_sweeps(js: &JumpSequence) -> usize {
    let ranges: Vec<(usize, usize)> = sweeps(js).iter().map(|s| range(js, s)).collect();
    (0..=js.len() + 1)
        .map(|i| ranges.iter().filter(|&&(lo, hi)| lo <= i && i <= hi).count())
        .max()
        .unwrap_or(0)
}

/// Whether at every index at most `2 * max_cost + 2` sweep ranges overlap.
pub fn sweep_range_bound_holds(js: &JumpSequence) -> bool {
    max_simultaneous_sweeps(js) <= 2 * js.max_cost() + 2
}
