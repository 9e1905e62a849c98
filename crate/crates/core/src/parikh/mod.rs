//! Parikh vectors, jumping membership, and Parikh-image intersection
//! emptiness.

mod flow;
mod lp;

use std::fmt;

use crate::automata::{Alphabet, Letter, Nfa};
use crate::error::{Error, Result};

pub use flow::{
    default_flow_bound, parikh_intersection_empty, parikh_intersection_empty_with, IntersectionConfig,
    IntersectionVerdict, DEFAULT_NODE_LIMIT,
};

/// Letter counts, indexed like the alphabet they were computed over.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParikhVector(pub Vec<usize>);

impl ParikhVector {
    pub fn zero(alphabet: &Alphabet) -> Self {
        ParikhVector(vec![0; alphabet.len()])
    }

    pub fn of_letters(word: &[Letter], alphabet: &Alphabet) -> Self {
        let mut counts = vec![0; alphabet.len()];
        for &l in word {
            counts[l] += 1;
        }
        ParikhVector(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `(a:2, b:1)` style rendering.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayVector(self, alphabet)
    }

    /// The letters sorted by alphabet order: `σ1^m1 σ2^m2 ...`.
    pub fn sorted_word(&self) -> Vec<Letter> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(l, &c)| std::iter::repeat_n(l, c))
            .collect()
    }
}

struct DisplayVector<'a>(&'a ParikhVector, &'a Alphabet);

impl fmt::Display for DisplayVector<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
             .0
            .iter()
            .enumerate()
            .map(|(l, c)| format!("{}:{}", self.1.symbol(l), c))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn parikh_vector(word: &str, alphabet: &Alphabet) -> Result<ParikhVector> {
    Ok(ParikhVector::of_letters(&alphabet.encode(word)?, alphabet))
}

/// Mixed-radix layout of all sub-vectors `u <= v`.
struct Lattice {
    bounds: Vec<usize>,
    strides: Vec<usize>,
    size: usize,
}

impl Lattice {
    fn new(v: &ParikhVector) -> Self {
        let mut strides = Vec::with_capacity(v.0.len());
        let mut size = 1usize;
        for &c in &v.0 {
            strides.push(size);
            size = size.checked_mul(c + 1).expect("Parikh lattice too large");
        }
        Lattice { bounds: v.0.clone(), strides, size }
    }

    fn coord(&self, idx: usize, l: Letter) -> usize {
        (idx / self.strides[l]) % (self.bounds[l] + 1)
    }
}

/// `reach[u][q]`: some word with Parikh vector `u` leads from an initial state
/// to `q`.
fn forward(aut: &Nfa, lat: &Lattice) -> Vec<Vec<bool>> {
    let n = aut.state_count();
    let mut reach = vec![vec![false; n]; lat.size];
    for &q in aut.initial() {
        reach[0][q] = true;
    }
    for idx in 0..lat.size {
        for p in 0..n {
            if !reach[idx][p] {
                continue;
            }
            for l in aut.alphabet().letters() {
                if lat.coord(idx, l) == lat.bounds[l] {
                    continue;
                }
                let next = idx + lat.strides[l];
                for &q in aut.successors(p, l) {
                    reach[next][q] = true;
                }
            }
        }
    }
    reach
}

/// Whether some word with Parikh vector `v` is accepted by `aut`.
pub fn parikh_member(v: &ParikhVector, aut: &Nfa) -> bool {
    if v.0.len() != aut.alphabet().len() {
        return false;
    }
    let lat = Lattice::new(v);
    let reach = forward(aut, &lat);
    aut.accepting().iter().any(|&q| reach[lat.size - 1][q])
}

/// Lexicographically least accepted word with Parikh vector `v`, if any.
pub fn word_with_vector(v: &ParikhVector, aut: &Nfa) -> Option<Vec<Letter>> {
    if v.0.len() != aut.alphabet().len() {
        return None;
    }
    let lat = Lattice::new(v);
    let n = aut.state_count();
    // good[u][q]: the remaining vector v - u can be read from q into F
    let mut good = vec![vec![false; n]; lat.size];
    for &q in aut.accepting() {
        good[lat.size - 1][q] = true;
    }
    for idx in (0..lat.size).rev() {
        for p in 0..n {
            if good[idx][p] {
                continue;
            }
            good[idx][p] = aut.alphabet().letters().any(|l| {
                lat.coord(idx, l) < lat.bounds[l]
                    && aut.successors(p, l).iter().any(|&q| good[idx + lat.strides[l]][q])
            });
        }
    }
    let mut current: Vec<usize> = aut.initial().iter().copied().filter(|&q| good[0][q]).collect();
    if current.is_empty() {
        return None;
    }
    let mut idx = 0;
    let mut word = Vec::with_capacity(v.total());
    while idx != lat.size - 1 {
        let mut advanced = false;
        for l in aut.alphabet().letters() {
            if lat.coord(idx, l) == lat.bounds[l] {
                continue;
            }
            let next = idx + lat.strides[l];
            let mut states: Vec<usize> = current
                .iter()
                .flat_map(|&p| aut.successors(p, l).iter().copied())
                .filter(|&q| good[next][q])
                .collect();
            if !states.is_empty() {
                states.sort_unstable();
                states.dedup();
                word.push(l);
                current = states;
                idx = next;
                advanced = true;
                break;
            }
        }
        debug_assert!(advanced);
        if !advanced {
            return None;
        }
    }
    Some(word)
}

/// Membership in the jumping language: some permutation of `word` is
/// accepted.
pub fn jumping_member(aut: &Nfa, word: &str) -> Result<bool> {
    let letters = aut.alphabet().encode(word)?;
    Ok(jumping_member_letters(aut, &letters))
}

pub fn jumping_member_letters(aut: &Nfa, word: &[Letter]) -> bool {
    parikh_member(&ParikhVector::of_letters(word, aut.alphabet()), aut)
}

/// Alphabets must agree symbol for symbol.
pub(crate) fn check_alphabets(a1: &Nfa, a2: &Nfa) -> Result<()> {
    if a1.alphabet() != a2.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    Ok(())
}
