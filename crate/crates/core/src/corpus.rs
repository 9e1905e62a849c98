//! Seeded random automata for differential testing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automata::{Alphabet, Nfa};

#[derive(Clone, Debug)]
pub struct CorpusConfig {
    pub max_states: usize,
    pub alphabet: String,
    /// Probability of each possible transition.
    pub density: f64,
    pub accepting_probability: f64,
    /// Probability of each state other than the first being initial.
    pub extra_initial_probability: f64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_states: 3,
            alphabet: "ab".into(),
            density: 0.35,
            accepting_probability: 0.4,
            extra_initial_probability: 0.15,
        }
    }
}

pub fn random_nfa(rng: &mut impl Rng, config: &CorpusConfig) -> Nfa {
    let alphabet = Alphabet::from_symbols(&config.alphabet).expect("valid corpus alphabet");
    let n = rng.gen_range(1..=config.max_states);
    let mut initial = vec![0];
    initial.extend((1..n).filter(|_| rng.gen_bool(config.extra_initial_probability)));
    let accepting: Vec<usize> = (0..n).filter(|_| rng.gen_bool(config.accepting_probability)).collect();
    let mut transitions = Vec::new();
    for p in 0..n {
        for l in alphabet.letters() {
            for q in 0..n {
                if rng.gen_bool(config.density) {
                    transitions.push((p, l, q));
                }
            }
        }
    }
    Nfa::with_default_names(alphabet, n, initial, accepting, transitions).expect("indices in range")
}

/// `count` automata drawn from a ChaCha stream seeded with `seed`.
pub fn random_corpus(seed: u64, count: usize) -> Vec<Nfa> {
    random_corpus_with(seed, count, &CorpusConfig::default())
}

pub fn random_corpus_with(seed: u64, count: usize, config: &CorpusConfig) -> Vec<Nfa> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_nfa(&mut rng, config)).collect()
}
