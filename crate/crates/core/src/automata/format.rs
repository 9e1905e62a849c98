//! Line-oriented text format:
//!
//! ```text
//! # comment
//! alphabet a b
//! state q0 initial accepting
//! state q1
//! trans q0 a q1
//! trans q1 b q0
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use super::alphabet::Alphabet;
use super::nfa::Nfa;
use crate::error::{Error, Result};

pub fn parse_automaton(text: &str) -> Result<Nfa> {
    let mut alphabet: Option<Alphabet> = None;
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut initial = Vec::new();
    let mut accepting = Vec::new();
    // (line, src, sym, dst) resolved once every state is known
    let mut pending: Vec<(usize, &str, &str, &str)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let syntax = |message: String| Error::Syntax { line, message };
        match tokens[0] {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(syntax("second `alphabet` line".into()));
                }
                let mut symbols = Vec::new();
                for tok in &tokens[1..] {
                    let mut chars = tok.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) => symbols.push(c),
                        _ => return Err(syntax(format!("symbol `{tok}` is not a single character"))),
                    }
                }
                alphabet = Some(Alphabet::new(symbols).map_err(|e| syntax(e.to_string()))?);
            }
            "state" => {
                let name = tokens
                    .get(1)
                    .ok_or_else(|| syntax("`state` needs a name".into()))?;
                if index.contains_key(*name) {
                    return Err(syntax(format!("state `{name}` declared twice")));
                }
                let id = names.len();
                for flag in &tokens[2..] {
                    match *flag {
                        "initial" => initial.push(id),
                        "accepting" => accepting.push(id),
                        other => return Err(syntax(format!("unknown state flag `{other}`"))),
                    }
                }
                index.insert(name.to_string(), id);
                names.push(name.to_string());
            }
            "trans" => {
                if tokens.len() != 4 {
                    return Err(syntax("expected `trans <src> <sym> <dst>`".into()));
                }
                pending.push((line, tokens[1], tokens[2], tokens[3]));
            }
            other => return Err(syntax(format!("unknown directive `{other}`"))),
        }
    }

    let mut transitions = Vec::with_capacity(pending.len());
    for (line, src, sym, dst) in pending {
        let state = |name: &str| {
            index.get(name).copied().ok_or_else(|| Error::UnknownState {
                line,
                name: name.to_string(),
            })
        };
        let p = state(src)?;
        let mut chars = sym.chars();
        let c = match (chars.next(), chars.next()) {
            (Some(c), None) => c,
            _ => {
                return Err(Error::Syntax {
                    line,
                    message: format!("symbol `{sym}` is not a single character"),
                })
            }
        };
        let l = alphabet
            .as_ref()
            .and_then(|a| a.letter(c))
            .ok_or(Error::UnknownSymbol { symbol: c, line: Some(line) })?;
        let q = state(dst)?;
        transitions.push((p, l, q));
    }

    let alphabet = alphabet.ok_or(Error::Syntax {
        line: text.lines().count().max(1),
        message: "missing `alphabet` line".into(),
    })?;
    if initial.is_empty() {
        return Err(Error::NoInitialState);
    }
    Nfa::new(alphabet, names, initial, accepting, transitions)
}

pub fn serialize_automaton(aut: &Nfa) -> String {
    let mut out = String::new();
    out.push_str("alphabet");
    for c in aut.alphabet().symbols() {
        let _ = write!(out, " {c}");
    }
    out.push('\n');
    for q in 0..aut.state_count() {
        let _ = write!(out, "state {}", aut.state_name(q));
        if aut.is_initial(q) {
            out.push_str(" initial");
        }
        if aut.is_accepting(q) {
            out.push_str(" accepting");
        }
        out.push('\n');
    }
    for (p, l, q) in aut.transitions() {
        let _ = writeln!(
            out,
            "trans {} {} {}",
            aut.state_name(p),
            aut.alphabet().symbol(l),
            aut.state_name(q)
        );
    }
    out
}

impl FromStr for Nfa {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_automaton(s)
    }
}

impl std::fmt::Display for Nfa {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&serialize_automaton(self))
    }
}
