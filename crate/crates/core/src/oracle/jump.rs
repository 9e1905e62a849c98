use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Order in which the head visits positions: `(0, a_1, ..., a_n, n+1)` with
/// the middle entries a permutation of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JumpSequence {
    positions: Vec<usize>,
}

impl JumpSequence {
    /// Validates a full position vector including both end markers.
    pub fn new(positions: Vec<usize>) -> Result<Self> {
        if positions.len() < 2 {
            return Err(Error::InvalidJumpSequence("needs at least the two end markers".into()));
        }
        let n = positions.len() - 2;
        if positions[0] != 0 || positions[n + 1] != n + 1 {
            return Err(Error::InvalidJumpSequence(format!(
                "must start at 0 and end at {}",
                n + 1
            )));
        }
        let mut seen = vec![false; n + 1];
        for &p in &positions[1..=n] {
            if p == 0 || p > n || seen[p] {
                return Err(Error::InvalidJumpSequence(format!(
                    "middle entries must be a permutation of 1..={n}"
                )));
            }
            seen[p] = true;
        }
        Ok(JumpSequence { positions })
    }

    /// From the middle permutation `(a_1, ..., a_n)`.
    pub fn from_middle(middle: &[usize]) -> Result<Self> {
        let mut positions = Vec::with_capacity(middle.len() + 2);
        positions.push(0);
        positions.extend_from_slice(middle);
        positions.push(middle.len() + 1);
        Self::new(positions)
    }

    pub fn identity(n: usize) -> Self {
        JumpSequence { positions: (0..=n + 1).collect() }
    }

    /// Word length `n`.
    pub fn len(&self) -> usize {
        self.positions.len() - 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn middle(&self) -> &[usize] {
        &self.positions[1..self.positions.len() - 1]
    }

    /// Jump magnitudes minus one, one per step.
    fn step_costs(&self) -> impl Iterator<Item = usize> + '_ {
        self.positions.windows(2).map(|w| w[0].abs_diff(w[1]) - 1)
    }

    /// Sum of `|a_i - a_{i-1}| - 1` over all steps.
    pub fn abs_cost(&self) -> usize {
        self.step_costs().sum()
    }

    /// Largest `|a_i - a_{i-1}| - 1`.
    pub fn max_cost(&self) -> usize {
        self.step_costs().max().unwrap_or(0)
    }

    /// Indices `1..=n` at which the sequence has a strict local extremum.
    pub fn turning_indices(&self) -> BTreeSet<usize> {
        let a = &self.positions;
        (1..=self.len())
            .filter(|&i| (a[i] > a[i - 1]) == (a[i] > a[i + 1]))
            .collect()
    }

    pub fn rev_cost(&self) -> usize {
        self.turning_indices().len()
    }

    /// Applies the sequence to a word: `w_{a_1} w_{a_2} ... w_{a_n}`.
    pub fn apply<T: Copy>(&self, word: &[T]) -> Result<Vec<T>> {
        if word.len() != self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: word.len() });
        }
        Ok(self.middle().iter().map(|&p| word[p - 1]).collect())
    }

    /// Number of steps with one endpoint `<= m` and the other `> m`.
    pub fn crossings(&self, m: usize) -> Result<usize> {
        if m > self.len() {
            return Err(Error::CutOutOfRange { m, n: self.len() });
        }
        Ok(self
            .positions
            .windows(2)
            .filter(|w| (w[0] <= m) != (w[1] <= m))
            .count())
    }
}

impl fmt::Display for JumpSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.positions.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn apply_jump(word: &str, js: &JumpSequence) -> Result<String> {
    let chars: Vec<char> = word.chars().collect();
    Ok(js.apply(&chars)?.into_iter().collect())
}

pub fn abs_cost(js: &JumpSequence) -> usize {
    js.abs_cost()
}

pub fn rev_cost(js: &JumpSequence) -> usize {
    js.rev_cost()
}

pub fn max_cost(js: &JumpSequence) -> usize {
    js.max_cost()
}

pub fn turning_indices(js: &JumpSequence) -> BTreeSet<usize> {
    js.turning_indices()
}

pub fn crossings(js: &JumpSequence, m: usize) -> Result<usize> {
    js.crossings(m)
}

/// Number of differing positions between two permutations of the same word.
pub fn hamming_distance(x: &str, y: &str) -> Result<usize> {
    let xs: Vec<char> = x.chars().collect();
    let ys: Vec<char> = y.chars().collect();
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch { expected: xs.len(), found: ys.len() });
    }
    let (mut sx, mut sy) = (xs.clone(), ys.clone());
    sx.sort_unstable();
    sy.sort_unstable();
    if sx != sy {
        return Err(Error::NotPermutation);
    }
    Ok(xs.iter().zip(&ys).filter(|(a, b)| a != b).count())
}

/// Default maximal word length for exhaustive enumeration (9! sequences).
pub const DEFAULT_ENUMERATION_LIMIT: usize = 9;

/// All `n!` jump sequences of length `n`, middle permutations in
/// lexicographic order.
pub fn enumerate_jump_sequences(n: usize, limit: usize) -> Result<JumpSequences> {
    if n > limit {
        return Err(Error::EnumerationLimit { len: n, limit });
    }
    Ok(JumpSequences { next: Some((1..=n).collect()) })
}

pub struct JumpSequences {
    next: Option<Vec<usize>>,
}

impl Iterator for JumpSequences {
    type Item = JumpSequence;

    fn next(&mut self) -> Option<JumpSequence> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(JumpSequence::from_middle(&current).expect("permutation"))
    }
}

/// Rearranges into the lexicographically next permutation; false when `v` was
/// the last one. Equal elements are handled, so starting from a sorted vector
/// visits each distinct arrangement once.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn js(p: &[usize]) -> JumpSequence {
        JumpSequence::new(p.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(JumpSequence::new(vec![0, 1]).is_ok());
        assert!(JumpSequence::new(vec![0, 1, 1, 3]).is_err());
        assert!(JumpSequence::new(vec![1, 0]).is_err());
        assert!(JumpSequence::new(vec![0, 2, 1, 4]).is_err());
    }

    #[test]
    fn enumeration_order() {
        let all: Vec<_> = enumerate_jump_sequences(3, 9).unwrap().collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], js(&[0, 1, 2, 3, 4]));
        assert_eq!(all[5], js(&[0, 3, 2, 1, 4]));
        assert_eq!(enumerate_jump_sequences(0, 9).unwrap().collect::<Vec<_>>(), vec![js(&[0, 1])]);
        assert!(enumerate_jump_sequences(10, 9).is_err());
    }

    #[test]
    fn costs_of_small_sequences() {
        let a = js(&[0, 2, 1, 3]);
        assert_eq!(a.abs_cost(), 2);
        assert_eq!(a.turning_indices(), BTreeSet::from([1, 2]));
        assert_eq!(a.rev_cost(), 2);
        assert_eq!(js(&[0, 3, 1, 2, 4]).max_cost(), 2);
        assert_eq!(js(&[0, 2, 3, 5, 7, 4, 1, 6, 8]).turning_indices(), BTreeSet::from([4, 6]));
    }

    #[test]
    fn apply_and_hamming() {
        assert_eq!(apply_jump("abcd", &js(&[0, 3, 4, 2, 1, 5])).unwrap(), "cdba");
        assert!(apply_jump("abc", &js(&[0, 1, 2])).is_err());
        assert_eq!(hamming_distance("bbaa", "abab").unwrap(), 2);
        assert!(hamming_distance("ab", "aa").is_err());
        assert!(hamming_distance("ab", "a").is_err());
    }

    #[test]
    fn crossing_counts() {
        let a = js(&[0, 1, 2, 3, 4, 6, 5, 7, 8, 9]);
        assert_eq!(a.crossings(5).unwrap(), 3);
        assert_eq!(JumpSequence::identity(4).crossings(2).unwrap(), 1);
        assert!(a.crossings(9).is_err());
    }

    #[test]
    fn multiset_permutations_are_distinct() {
        let mut v = vec![0, 0, 1, 1];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 6);
    }
}
