//! Thompson construction and epsilon elimination.

use std::collections::VecDeque;
use std::fmt::Write as _;

use super::regex::Regex;

pub type State = usize;

/// NFA with epsilon moves, produced by structural induction on a [`Regex`].
#[derive(Clone, Debug, Default)]
pub struct EpsNfa {
    eps: Vec<Vec<State>>,
    delta: Vec<[Vec<State>; 2]>,
    start: State,
    accept: State,
}

impl EpsNfa {
    pub fn from_regex(re: &Regex) -> EpsNfa {
        let mut nfa = EpsNfa::default();
        let (start, accept) = nfa.build(re);
        nfa.start = start;
        nfa.accept = accept;
        nfa
    }

    pub fn num_states(&self) -> usize {
        self.eps.len()
    }

    fn fresh(&mut self) -> State {
        self.eps.push(Vec::new());
        self.delta.push([Vec::new(), Vec::new()]);
        self.eps.len() - 1
    }

    // Returns (entry, exit) of the fragment for `re`.
    fn build(&mut self, re: &Regex) -> (State, State) {
        match re {
            Regex::Sym(s) => {
                let a = self.fresh();
                let b = self.fresh();
                self.delta[a][*s as usize].push(b);
                (a, b)
            }
            Regex::Concat(parts) => {
                let entry = self.fresh();
                let mut cur = entry;
                for p in parts {
                    let (a, b) = self.build(p);
                    self.eps[cur].push(a);
                    cur = b;
                }
                (entry, cur)
            }
            Regex::Union(alts) => {
                let entry = self.fresh();
                let exit = self.fresh();
                for alt in alts {
                    let (a, b) = self.build(alt);
                    self.eps[entry].push(a);
                    self.eps[b].push(exit);
                }
                (entry, exit)
            }
            Regex::Star(inner) => {
                let entry = self.fresh();
                let exit = self.fresh();
                let (a, b) = self.build(inner);
                self.eps[entry].push(a);
                self.eps[entry].push(exit);
                self.eps[b].push(a);
                self.eps[b].push(exit);
                (entry, exit)
            }
            Regex::Plus(inner) => {
                // w+ = w w*
                let (a1, b1) = self.build(inner);
                let (a2, b2) = self.build(&Regex::Star(inner.clone()));
                self.eps[b1].push(a2);
                (a1, b2)
            }
        }
    }

    fn closure(&self, from: State) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(q) = stack.pop() {
            for &r in &self.eps[q] {
                if !seen[r] {
                    seen[r] = true;
                    stack.push(r);
                }
            }
        }
        seen
    }

    /// Removes epsilon moves: `q -a-> r` whenever some state in the
    /// closure of `q` has an `a`-move to `r`. Only the start state and
    /// targets of symbol moves survive.
    pub fn remove_epsilons(&self) -> Nfa {
        let n = self.num_states();
        let mut index = vec![usize::MAX; n];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([self.start]);
        index[self.start] = 0;
        order.push(self.start);
        let mut delta: Vec<[Vec<State>; 2]> = Vec::new();
        let mut accepting = Vec::new();

        while let Some(q) = queue.pop_front() {
            let cl = self.closure(q);
            let mut row: [Vec<State>; 2] = [Vec::new(), Vec::new()];
            let mut acc = false;
            for p in (0..n).filter(|&p| cl[p]) {
                acc |= p == self.accept;
                for sym in 0..2 {
                    for &r in &self.delta[p][sym] {
                        if index[r] == usize::MAX {
                            index[r] = order.len();
                            order.push(r);
                            queue.push_back(r);
                        }
                        row[sym].push(index[r]);
                    }
                }
            }
            for targets in &mut row {
                targets.sort_unstable();
                targets.dedup();
            }
            delta.push(row);
            accepting.push(acc);
        }
        Nfa {
            delta,
            start: 0,
            accepting,
        }
        .trimmed()
    }
}

/// Epsilon-free NFA over {0, 1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    pub(crate) delta: Vec<[Vec<State>; 2]>,
    pub(crate) start: State,
    pub(crate) accepting: Vec<bool>,
}

impl Nfa {
    pub fn from_regex(re: &Regex) -> Nfa {
        EpsNfa::from_regex(re).remove_epsilons()
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn start(&self) -> State {
        self.start
    }

    pub fn is_accepting(&self, q: State) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = State> + '_ {
        (0..self.num_states()).filter(|&q| self.accepting[q])
    }

    pub fn successors(&self, q: State, sym: u8) -> &[State] {
        &self.delta[q][sym as usize]
    }

    pub fn num_transitions(&self) -> usize {
        self.delta
            .iter()
            .map(|row| row[0].len() + row[1].len())
            .sum()
    }

    /// Every transition consumes a symbol. Always true for this type; kept
    /// as a checkable property of the transition table.
    pub fn is_epsilon_free(&self) -> bool {
        self.delta
            .iter()
            .flatten()
            .flatten()
            .all(|&r| r < self.num_states())
    }

    pub fn accepts<I: IntoIterator<Item = u8>>(&self, word: I) -> bool {
        let mut cur = vec![false; self.num_states()];
        cur[self.start] = true;
        for sym in word {
            let mut next = vec![false; self.num_states()];
            let mut any = false;
            for q in (0..self.num_states()).filter(|&q| cur[q]) {
                for &r in self.successors(q, sym) {
                    next[r] = true;
                    any = true;
                }
            }
            if !any {
                return false;
            }
            cur = next;
        }
        (0..self.num_states()).any(|q| cur[q] && self.accepting[q])
    }

    /// NFA for the mirror-image language.
    pub fn reversed(&self) -> Nfa {
        // State 0 is a fresh start; old state q becomes q + 1.
        let n = self.num_states();
        let mut delta: Vec<[Vec<State>; 2]> = vec![[Vec::new(), Vec::new()]; n + 1];
        for p in 0..n {
            for sym in 0..2 {
                for &q in &self.delta[p][sym] {
                    delta[q + 1][sym].push(p + 1);
                    if self.accepting[q] {
                        delta[0][sym].push(p + 1);
                    }
                }
            }
        }
        for row in &mut delta {
            for targets in row.iter_mut() {
                targets.sort_unstable();
                targets.dedup();
            }
        }
        let mut accepting = vec![false; n + 1];
        accepting[self.start + 1] = true;
        accepting[0] = self.accepting[self.start];
        Nfa {
            delta,
            start: 0,
            accepting,
        }
        .trimmed()
    }

    // Drops states that are unreachable or cannot reach acceptance.
    fn trimmed(self) -> Nfa {
        let n = self.num_states();
        let mut fwd = vec![false; n];
        let mut stack = vec![self.start];
        fwd[self.start] = true;
        while let Some(q) = stack.pop() {
            for sym in 0..2 {
                for &r in &self.delta[q][sym] {
                    if !fwd[r] {
                        fwd[r] = true;
                        stack.push(r);
                    }
                }
            }
        }
        let mut rev: Vec<Vec<State>> = vec![Vec::new(); n];
        for q in 0..n {
            for sym in 0..2 {
                for &r in &self.delta[q][sym] {
                    rev[r].push(q);
                }
            }
        }
        let mut bwd = self.accepting.clone();
        let mut stack: Vec<State> = (0..n).filter(|&q| bwd[q]).collect();
        while let Some(q) = stack.pop() {
            for &p in &rev[q] {
                if !bwd[p] {
                    bwd[p] = true;
                    stack.push(p);
                }
            }
        }
        let keep: Vec<bool> = (0..n)
            .map(|q| fwd[q] && (bwd[q] || q == self.start))
            .collect();
        let mut index = vec![usize::MAX; n];
        let mut next = 0;
        for q in 0..n {
            if keep[q] {
                index[q] = next;
                next += 1;
            }
        }
        let delta = (0..n)
            .filter(|&q| keep[q])
            .map(|q| {
                let mut row: [Vec<State>; 2] = [Vec::new(), Vec::new()];
                for sym in 0..2 {
                    row[sym] = self.delta[q][sym]
                        .iter()
                        .filter(|&&r| keep[r])
                        .map(|&r| index[r])
                        .collect();
                }
                row
            })
            .collect();
        let accepting = (0..n)
            .filter(|&q| keep[q])
            .map(|q| self.accepting[q])
            .collect();
        Nfa {
            delta,
            start: index[self.start],
            accepting,
        }
    }

    /// Plain-text transition table: a `start` line, an `accept` line, then
    /// one `state symbol state` line per transition.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "start {}", self.start);
        let acc: Vec<String> = self.accepting_states().map(|q| q.to_string()).collect();
        let _ = writeln!(out, "accept {}", acc.join(" "));
        for q in 0..self.num_states() {
            for sym in 0..2u8 {
                for &r in self.successors(q, sym) {
                    let _ = writeln!(out, "{q} {sym} {r}");
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::regex::{solvable_language, Regex};

    fn bits(s: &str) -> Vec<u8> {
        s.bytes().map(|b| b - b'0').collect()
    }

    #[test]
    fn thompson_then_elimination_matches_regex() {
        let re = solvable_language();
        let nfa = Nfa::from_regex(&re);
        assert!(nfa.is_epsilon_free());
        for len in 0..=10 {
            for b in 0u64..(1 << len) {
                let w: Vec<u8> = (0..len).map(|i| (b >> i & 1) as u8).collect();
                assert_eq!(nfa.accepts(w.iter().copied()), re.matches(&w), "{w:?}");
            }
        }
    }

    #[test]
    fn small_language() {
        let re = Regex::Concat(vec![Regex::word("1"), Regex::word("01").plus()]);
        let nfa = Nfa::from_regex(&re);
        assert!(nfa.accepts(bits("101")));
        assert!(nfa.accepts(bits("10101")));
        assert!(!nfa.accepts(bits("1")));
        assert!(!nfa.accepts(bits("")));
        let asym = Nfa::from_regex(&Regex::Concat(vec![
            Regex::word("1"),
            Regex::word("0").plus(),
        ]));
        let rev = asym.reversed();
        assert!(rev.accepts(bits("01")));
        assert!(rev.accepts(bits("0001")));
        assert!(!rev.accepts(bits("10")));
        assert!(!rev.accepts(bits("1")));
    }

    #[test]
    fn table_lists_every_transition() {
        let nfa = Nfa::from_regex(&solvable_language());
        let table = nfa.to_table();
        let lines = table.lines().count();
        assert_eq!(lines, 2 + nfa.num_transitions());
        assert!(table.starts_with(&format!("start {}\naccept ", nfa.start())));
    }
}
