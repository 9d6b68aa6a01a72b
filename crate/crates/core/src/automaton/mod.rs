//! Recognizers for the single-peg-reducible configurations, plus counting
//! and enumeration of them by peg count.
//!
//! The language is built once from its regular expression: regex tree,
//! Thompson NFA, epsilon elimination, then subset construction and
//! minimization for the DFA companion.

pub mod dfa;
pub mod nfa;
pub mod regex;

use std::sync::OnceLock;

use thiserror::Error;

pub use dfa::Dfa;
pub use nfa::{EpsNfa, Nfa, State};
pub use regex::Regex;

use crate::board::Configuration;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("peg count must be at least 1, got {0}")]
    ZeroPegs(usize),
}

/// Epsilon-free NFA and minimal DFA for `0* L 0*`.
#[derive(Clone, Debug)]
pub struct Recognizer {
    nfa: Nfa,
    dfa: Dfa,
}

impl Recognizer {
    pub fn build() -> Recognizer {
        let nfa = build_language_nfa();
        let dfa = Dfa::minimal(&nfa);
        Recognizer { nfa, dfa }
    }

    pub fn nfa(&self) -> &Nfa {
        &self.nfa
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    /// Whether `c` can be reduced to a single peg.
    pub fn accepts(&self, c: &Configuration) -> bool {
        self.dfa.accepts(c.symbols())
    }
}

/// Shared recognizer, built on first use.
pub fn recognizer() -> &'static Recognizer {
    static CELL: OnceLock<Recognizer> = OnceLock::new();
    CELL.get_or_init(Recognizer::build)
}

/// Epsilon-free NFA for `0* L 0*`.
pub fn build_language_nfa() -> Nfa {
    Nfa::from_regex(&regex::solvable_language())
}

pub fn determinize_minimize(nfa: &Nfa) -> Dfa {
    Dfa::minimal(nfa)
}

/// Anything that decides membership of a configuration.
pub trait Accepts {
    fn accepts_config(&self, c: &Configuration) -> bool;
}

impl Accepts for Nfa {
    fn accepts_config(&self, c: &Configuration) -> bool {
        self.accepts(c.symbols())
    }
}

impl Accepts for Dfa {
    fn accepts_config(&self, c: &Configuration) -> bool {
        self.accepts(c.symbols())
    }
}

pub fn accepts<A: Accepts + ?Sized>(automaton: &A, c: &Configuration) -> bool {
    automaton.accepts_config(c)
}

/// Shorthand for the shared recognizer.
pub fn is_solvable(c: &Configuration) -> bool {
    recognizer().accepts(c)
}

/// Closed form for the number of distinct solvable configurations with
/// `n` pegs: 1, 1, 2 for n = 1, 2, 3, then n^2 - 7n + 15 (even) or
/// n^2 - 7n + 16 (odd).
pub fn closed_form_count(n: usize) -> Result<u128, DomainError> {
    let n128 = n as u128;
    match n {
        0 => Err(DomainError::ZeroPegs(n)),
        1 | 2 => Ok(1),
        3 => Ok(2),
        _ if n.is_multiple_of(2) => Ok(n128 * n128 + 15 - 7 * n128),
        _ => Ok(n128 * n128 + 16 - 7 * n128),
    }
}

/// Length cap for trimmed solvable words with `n` pegs.
pub fn length_cap(n: usize) -> usize {
    2 * n + 2
}

/// Counts trimmed solvable words with `n` pegs by dynamic programming over
/// the minimal DFA. `011` and `110` are one class, represented by `11`.
pub fn count_solvable(n: usize) -> Result<u128, DomainError> {
    if n == 0 {
        return Err(DomainError::ZeroPegs(n));
    }
    if n == 2 {
        return Ok(1);
    }
    let dfa = recognizer().dfa();
    let dead = dfa.dead_states();
    let states = dfa.num_states();
    // ways[q][k]: words that start with a peg, end in state q, hold k pegs.
    let mut ways = vec![vec![0u128; n + 1]; states];
    let first = dfa.step(dfa.start(), 1);
    ways[first][1] = 1;
    // A word is counted when its n-th peg is read in an accepting state,
    // so every counted word ends with a peg.
    let mut total = if n == 1 && dfa.is_accepting(first) {
        1
    } else {
        0
    };
    for _ in 1..length_cap(n) {
        let mut next = vec![vec![0u128; n + 1]; states];
        for q in (0..states).filter(|&q| !dead[q]) {
            for k in 1..n {
                let w = ways[q][k];
                if w == 0 {
                    continue;
                }
                next[dfa.step(q, 0)][k] += w;
                let r = dfa.step(q, 1);
                next[r][k + 1] += w;
                if k + 1 == n && dfa.is_accepting(r) {
                    total += w;
                }
            }
        }
        ways = next;
    }
    Ok(total)
}

/// The distinct trimmed solvable words with `n` pegs, sorted. For `n = 2`
/// the single class is written `11`.
pub fn enumerate_solvable(n: usize) -> Result<Vec<Configuration>, DomainError> {
    if n == 0 {
        return Err(DomainError::ZeroPegs(n));
    }
    if n == 2 {
        return Ok(vec!["11".parse().unwrap()]);
    }
    let dfa = recognizer().dfa();
    let dead = dfa.dead_states();
    let cap = length_cap(n);
    let mut out = Vec::new();
    let mut word = vec![1u8];
    let q = dfa.step(dfa.start(), 1);
    walk(dfa, &dead, q, 1, n, cap, &mut word, &mut out);
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn walk(
    dfa: &Dfa,
    dead: &[bool],
    q: State,
    pegs: usize,
    n: usize,
    cap: usize,
    word: &mut Vec<u8>,
    out: &mut Vec<Configuration>,
) {
    if dead[q] {
        return;
    }
    if pegs == n {
        if word.last() == Some(&1) && dfa.is_accepting(q) {
            let text: String = word
                .iter()
                .map(|&b| if b == 1 { '1' } else { '0' })
                .collect();
            out.push(text.parse().unwrap());
        }
        return;
    }
    if word.len() == cap {
        return;
    }
    for sym in [0u8, 1] {
        word.push(sym);
        walk(
            dfa,
            dead,
            dfa.step(q, sym),
            pegs + sym as usize,
            n,
            cap,
            word,
            out,
        );
        word.pop();
    }
}

/// Shortest word on which the language and its mirror image disagree, or
/// `None` when the language is closed under reversal.
pub fn reversal_counterexample(nfa: &Nfa) -> Option<Vec<u8>> {
    let forward = Dfa::minimal(nfa);
    let backward = Dfa::minimal(&nfa.reversed());
    forward.distinguishing_word(&backward)
}

/// A trimmed accepted word that has two separate `00` runs or a run of
/// three or more holes, if any exists.
pub fn double_gap_witness(dfa: &Dfa) -> Option<Vec<u8>> {
    use Regex as R;
    let bit = || R::Union(vec![R::Sym(0), R::Sym(1)]);
    let bad = R::Concat(vec![
        R::Sym(1),
        bit().star(),
        R::Union(vec![
            R::word("000"),
            R::Concat(vec![
                R::word("00"),
                bit().star(),
                R::Sym(1),
                bit().star(),
                R::word("00"),
            ]),
        ]),
        bit().star(),
        R::Sym(1),
    ]);
    let bad = Dfa::minimal(&Nfa::from_regex(&bad));
    dfa.intersection_witness(&bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(s: &str) -> Configuration {
        s.parse().unwrap()
    }

    #[test]
    fn membership_examples() {
        let r = recognizer();
        let nfa = r.nfa();
        for yes in [
            "1011",
            "110010101011",
            "111111101111",
            "1",
            "011",
            "0000110000",
        ] {
            assert!(accepts(nfa, &cfg(yes)), "{yes}");
            assert!(accepts(r.dfa(), &cfg(yes)), "{yes}");
        }
        for no in ["11", "1111", "0", "11011"] {
            assert!(!accepts(nfa, &cfg(no)), "{no}");
            assert!(!r.accepts(&cfg(no)), "{no}");
        }
        assert!(!nfa.accepts(std::iter::empty()));
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(closed_form_count(1), Ok(1));
        assert_eq!(closed_form_count(4), Ok(3));
        assert_eq!(closed_form_count(5), Ok(6));
        assert_eq!(closed_form_count(7), Ok(16));
        assert_eq!(closed_form_count(0), Err(DomainError::ZeroPegs(0)));
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_solvable(1), Ok(1));
        assert_eq!(count_solvable(2), Ok(1));
        assert_eq!(count_solvable(3), Ok(2));
        assert_eq!(count_solvable(4), Ok(3));
        assert_eq!(count_solvable(7), Ok(16));
        assert!(count_solvable(0).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let words = |n| -> Vec<String> {
            enumerate_solvable(n)
                .unwrap()
                .iter()
                .map(|c| c.to_string())
                .collect()
        };
        assert_eq!(words(1), ["1"]);
        assert_eq!(words(2), ["11"]);
        assert_eq!(words(3), ["1011", "1101"]);
        assert_eq!(words(4), ["101011", "110011", "110101"]);
        assert!(enumerate_solvable(0).is_err());
    }

    #[test]
    fn language_is_mirror_closed() {
        assert_eq!(reversal_counterexample(recognizer().nfa()), None);
    }

    #[test]
    fn at_most_one_gap() {
        assert_eq!(double_gap_witness(recognizer().dfa()), None);
    }
}
