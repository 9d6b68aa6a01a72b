//! Subset construction and Hopcroft minimization.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use super::nfa::{Nfa, State};

/// Complete DFA over {0, 1}. Missing NFA moves go to an explicit dead
/// state when one is needed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    delta: Vec<[State; 2]>,
    start: State,
    accepting: Vec<bool>,
}

impl Dfa {
    pub fn determinize(nfa: &Nfa) -> Dfa {
        let n = nfa.num_states();
        let mut index: HashMap<Vec<bool>, State> = HashMap::new();
        let mut sets: Vec<Vec<bool>> = Vec::new();
        let mut delta: Vec<[State; 2]> = Vec::new();
        let mut accepting = Vec::new();

        let mut start = vec![false; n];
        start[nfa.start()] = true;
        index.insert(start.clone(), 0);
        sets.push(start);
        let mut queue = VecDeque::from([0]);

        while let Some(d) = queue.pop_front() {
            let set = sets[d].clone();
            accepting.push((0..n).any(|q| set[q] && nfa.is_accepting(q)));
            let mut row = [0; 2];
            for sym in 0..2u8 {
                let mut next = vec![false; n];
                for q in (0..n).filter(|&q| set[q]) {
                    for &r in nfa.successors(q, sym) {
                        next[r] = true;
                    }
                }
                row[sym as usize] = *index.entry(next.clone()).or_insert_with(|| {
                    sets.push(next);
                    queue.push_back(sets.len() - 1);
                    sets.len() - 1
                });
            }
            delta.push(row);
        }
        Dfa {
            delta,
            start: 0,
            accepting,
        }
    }

    /// Determinize, then merge equivalent states.
    pub fn minimal(nfa: &Nfa) -> Dfa {
        Dfa::determinize(nfa).minimize()
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn start(&self) -> State {
        self.start
    }

    pub fn step(&self, q: State, sym: u8) -> State {
        self.delta[q][sym as usize]
    }

    pub fn is_accepting(&self, q: State) -> bool {
        self.accepting[q]
    }

    pub fn run<I: IntoIterator<Item = u8>>(&self, word: I) -> State {
        word.into_iter()
            .fold(self.start, |q, sym| self.step(q, sym))
    }

    pub fn accepts<I: IntoIterator<Item = u8>>(&self, word: I) -> bool {
        self.accepting[self.run(word)]
    }

    /// States from which no accepting state is reachable.
    pub fn dead_states(&self) -> Vec<bool> {
        let n = self.num_states();
        let mut rev: Vec<Vec<State>> = vec![Vec::new(); n];
        for q in 0..n {
            for sym in 0..2 {
                rev[self.delta[q][sym]].push(q);
            }
        }
        let mut live = self.accepting.clone();
        let mut stack: Vec<State> = (0..n).filter(|&q| live[q]).collect();
        while let Some(q) = stack.pop() {
            for &p in &rev[q] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live.into_iter().map(|l| !l).collect()
    }

    /// Hopcroft partition refinement over the reachable part, then
    /// renumbered in breadth-first order so equal languages give equal
    /// values.
    pub fn minimize(&self) -> Dfa {
        let reach = self.reachable();
        let n = self.num_states();

        let mut preimage: Vec<[Vec<State>; 2]> = vec![[Vec::new(), Vec::new()]; n];
        for q in (0..n).filter(|&q| reach[q]) {
            for sym in 0..2 {
                preimage[self.delta[q][sym]][sym].push(q);
            }
        }

        let finals: Vec<State> = (0..n).filter(|&q| reach[q] && self.accepting[q]).collect();
        let others: Vec<State> = (0..n).filter(|&q| reach[q] && !self.accepting[q]).collect();
        let mut blocks: Vec<Vec<State>> = Vec::new();
        let mut block_of = vec![usize::MAX; n];
        for b in [finals, others] {
            if !b.is_empty() {
                for &q in &b {
                    block_of[q] = blocks.len();
                }
                blocks.push(b);
            }
        }

        let mut work: Vec<(usize, usize)> = Vec::new();
        let mut in_work: Vec<[bool; 2]> = Vec::new();
        in_work.resize(blocks.len(), [false; 2]);
        // Seeding with the smaller of the two initial blocks suffices.
        let seed = if blocks.len() == 2 && blocks[1].len() < blocks[0].len() {
            1
        } else {
            0
        };
        for sym in 0..2 {
            work.push((seed, sym));
            in_work[seed][sym] = true;
        }

        while let Some((splitter, sym)) = work.pop() {
            in_work[splitter][sym] = false;
            let mut hit: HashMap<usize, Vec<State>> = HashMap::new();
            for &t in &blocks[splitter] {
                for &p in &preimage[t][sym] {
                    hit.entry(block_of[p]).or_default().push(p);
                }
            }
            let mut touched: Vec<usize> = hit.keys().copied().collect();
            touched.sort_unstable();
            for b in touched {
                let mut inside = hit.remove(&b).unwrap();
                inside.sort_unstable();
                inside.dedup();
                if inside.len() == blocks[b].len() {
                    continue;
                }
                let outside: Vec<State> = blocks[b]
                    .iter()
                    .copied()
                    .filter(|q| inside.binary_search(q).is_err())
                    .collect();
                let (keep, split) = if inside.len() <= outside.len() {
                    (outside, inside)
                } else {
                    (inside, outside)
                };
                let nb = blocks.len();
                for &q in &split {
                    block_of[q] = nb;
                }
                blocks[b] = keep;
                blocks.push(split);
                in_work.push([false; 2]);
                for s in 0..2 {
                    if in_work[b][s] {
                        work.push((nb, s));
                        in_work[nb][s] = true;
                    } else {
                        let smaller = if blocks[nb].len() <= blocks[b].len() {
                            nb
                        } else {
                            b
                        };
                        work.push((smaller, s));
                        in_work[smaller][s] = true;
                    }
                }
            }
        }

        let quotient = Dfa {
            delta: blocks
                .iter()
                .map(|b| {
                    let q = b[0];
                    [block_of[self.delta[q][0]], block_of[self.delta[q][1]]]
                })
                .collect(),
            start: block_of[self.start],
            accepting: blocks.iter().map(|b| self.accepting[b[0]]).collect(),
        };
        quotient.canonical()
    }

    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut stack = vec![self.start];
        seen[self.start] = true;
        while let Some(q) = stack.pop() {
            for sym in 0..2 {
                let r = self.delta[q][sym];
                if !seen[r] {
                    seen[r] = true;
                    stack.push(r);
                }
            }
        }
        seen
    }

    // Breadth-first renumbering from the start state, symbol 0 first.
    fn canonical(&self) -> Dfa {
        let mut index = vec![usize::MAX; self.num_states()];
        let mut order = vec![self.start];
        index[self.start] = 0;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            for sym in 0..2 {
                let r = self.delta[q][sym];
                if index[r] == usize::MAX {
                    index[r] = order.len();
                    order.push(r);
                }
            }
            i += 1;
        }
        Dfa {
            delta: order
                .iter()
                .map(|&q| [index[self.delta[q][0]], index[self.delta[q][1]]])
                .collect(),
            start: 0,
            accepting: order.iter().map(|&q| self.accepting[q]).collect(),
        }
    }

    // Breadth-first search of the product automaton for the nearest pair
    // satisfying `hit`, returning the word that reaches it.
    fn product_search(&self, other: &Dfa, hit: impl Fn(State, State) -> bool) -> Option<Vec<u8>> {
        type Pair = (State, State);
        let root = (self.start, other.start);
        let mut parent: HashMap<Pair, Option<(Pair, u8)>> = HashMap::from([(root, None)]);
        let mut queue = VecDeque::from([root]);
        while let Some((p, q)) = queue.pop_front() {
            if hit(p, q) {
                let mut word = Vec::new();
                let mut cur = (p, q);
                while let Some(&Some((prev, sym))) = parent.get(&cur) {
                    word.push(sym);
                    cur = prev;
                }
                word.reverse();
                return Some(word);
            }
            for sym in 0..2u8 {
                let next = (self.step(p, sym), other.step(q, sym));
                if let Entry::Vacant(e) = parent.entry(next) {
                    e.insert(Some(((p, q), sym)));
                    queue.push_back(next);
                }
            }
        }
        None
    }

    /// Shortest word accepted by exactly one of the two automata, or
    /// `None` when the languages are equal.
    pub fn distinguishing_word(&self, other: &Dfa) -> Option<Vec<u8>> {
        self.product_search(other, |p, q| self.accepting[p] != other.accepting[q])
    }

    pub fn equivalent(&self, other: &Dfa) -> bool {
        self.distinguishing_word(other).is_none()
    }

    /// Shortest word accepted by both automata.
    pub fn intersection_witness(&self, other: &Dfa) -> Option<Vec<u8>> {
        self.product_search(other, |p, q| self.accepting[p] && other.accepting[q])
    }

    /// Same layout as [`Nfa::to_table`].
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "start {}", self.start);
        let acc: Vec<String> = (0..self.num_states())
            .filter(|&q| self.accepting[q])
            .map(|q| q.to_string())
            .collect();
        let _ = writeln!(out, "accept {}", acc.join(" "));
        for q in 0..self.num_states() {
            for sym in 0..2u8 {
                let _ = writeln!(out, "{q} {sym} {}", self.step(q, sym));
            }
        }
        out
    }
}
