//! Reduction of any board to its minimum peg count.
//!
//! [`min_peg_partition`] splits the board into groups (see [`groups`]) by a
//! shortest path through a layered DAG; each group ends as one peg, so the
//! number of restart arcs on the path is the minimum peg count `k` and the
//! path has length `n + k`. [`factor_partition`] runs the same search over
//! a plain automaton for `0* L 0*`, which factors the board into
//! independently solvable pieces. That count is only an upper bound: on
//! `01111` it gives 3 where 2 is reachable.

pub mod groups;
pub mod layered;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use groups::{GroupAutomaton, GroupKind};
pub use layered::{LayeredDag, Path, RestartArc, StateId};

use crate::automaton::Nfa;
use crate::board::{Configuration, Dir, Move};
use crate::solver::{self, Plan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MinPegsError {
    #[error("configuration has no pegs")]
    NoPegs,
}

/// Segment boundaries from a shortest path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub k: usize,
    pub path_length: usize,
    /// Half-open `[start, end)` ranges covering the board.
    pub bounds: Vec<(usize, usize)>,
    /// Group kinds, one per segment; empty for [`factor_partition`].
    pub kinds: Vec<GroupKind>,
}

fn group_automaton() -> &'static GroupAutomaton {
    static CELL: OnceLock<GroupAutomaton> = OnceLock::new();
    CELL.get_or_init(GroupAutomaton::build)
}

fn bounds_from(restarts: &[RestartArc], n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(restarts.len());
    let mut start = 0;
    for (j, r) in restarts.iter().enumerate() {
        let end = if j + 1 == restarts.len() {
            n
        } else {
            r.position
        };
        out.push((start, end));
        start = end;
    }
    out
}

/// Minimum-peg partition of `c` into groups.
pub fn min_peg_partition(c: &Configuration) -> Result<Partition, MinPegsError> {
    if c.peg_count() == 0 {
        return Err(MinPegsError::NoPegs);
    }
    let g = group_automaton();
    let input: Vec<u8> = c.symbols().collect();
    let path = g
        .dag()
        .shortest_path(&input)
        .expect("every board with pegs splits into single pegs");
    let kinds = path
        .restarts
        .iter()
        .map(|r| g.kind_of(r.from, r.to))
        .collect();
    Ok(Partition {
        k: path.restarts.len(),
        path_length: path.length,
        bounds: bounds_from(&path.restarts, input.len()),
        kinds,
    })
}

/// The layered DAG whose restart arcs lead from each accepting state of
/// `nfa` back to its start state.
pub fn factor_dag(nfa: &Nfa) -> LayeredDag {
    let n = nfa.num_states();
    let s = nfa.start();
    assert!(!nfa.is_accepting(s), "the start state must not accept");
    let symbol = (0..n).map(|q| [nfa.successors(q, 0).to_vec(), nfa.successors(q, 1).to_vec()]);
    let symbol = symbol
        .map(|row| row.map(|v| v.into_iter().map(|t| t as StateId).collect()))
        .collect();
    let restart = (0..n)
        .map(|q| {
            if nfa.is_accepting(q) {
                vec![s as StateId]
            } else {
                vec![]
            }
        })
        .collect();
    let order = (0..n)
        .filter(|&q| q != s)
        .chain([s])
        .map(|q| q as StateId)
        .collect();
    let finals = (0..n).map(|q| q == s).collect();
    LayeredDag::new(symbol, restart, order, s as StateId, finals)
}

/// Fewest factors of `c` from the language of `nfa`, which should be
/// `0* L 0*`.
pub fn factor_partition(c: &Configuration, nfa: &Nfa) -> Result<Partition, MinPegsError> {
    if c.peg_count() == 0 {
        return Err(MinPegsError::NoPegs);
    }
    let input: Vec<u8> = c.symbols().collect();
    let path = factor_dag(nfa)
        .shortest_path(&input)
        .expect("single pegs are always factors");
    Ok(Partition {
        k: path.restarts.len(),
        path_length: path.length,
        bounds: bounds_from(&path.restarts, input.len()),
        kinds: vec![],
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub start: usize,
    pub end: usize,
    pub kind: GroupKind,
    pub cells: Configuration,
    /// Board coordinates. A pair may land one cell outside its segment.
    pub moves: Vec<Move>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub k: usize,
    pub path_length: usize,
    pub segments: Vec<Segment>,
    pub combined: Plan,
}

impl SolveResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("results serialize")
    }
}

fn segment_moves(c: &Configuration, start: usize, end: usize, kind: GroupKind) -> Vec<Move> {
    let cells = c.slice(start, end);
    let lo = start + cells.first_peg().expect("segments hold pegs");
    let hi = start + cells.last_peg().expect("segments hold pegs");
    match kind {
        GroupKind::Single => vec![],
        GroupKind::PairLeft => vec![Move::new(lo + 1, Dir::Left)],
        GroupKind::PairRight => vec![Move::new(lo, Dir::Right)],
        GroupKind::Block => solver::single_peg_moves(&c.slice(lo, hi + 1))
            .expect("block windows are solvable")
            .into_iter()
            .map(|m| m.shifted(lo))
            .collect(),
    }
}

/// Reduces `c` to its minimum peg count. Blocks are played first, then
/// left-hopping pairs left to right, then right-hopping pairs right to left.
pub fn solve_min(c: &Configuration) -> SolveResult {
    let Ok(part) = min_peg_partition(c) else {
        return SolveResult {
            k: 0,
            path_length: c.len(),
            segments: vec![],
            combined: Plan {
                initial: c.clone(),
                final_pegs: 0,
                moves: vec![],
            },
        };
    };
    let segments: Vec<Segment> = part
        .bounds
        .iter()
        .zip(&part.kinds)
        .map(|(&(start, end), &kind)| Segment {
            start,
            end,
            kind,
            cells: c.slice(start, end),
            moves: segment_moves(c, start, end, kind),
        })
        .collect();
    let of_kind = |kind| segments.iter().filter(move |s| s.kind == kind);
    let moves = of_kind(GroupKind::Block)
        .chain(of_kind(GroupKind::PairLeft))
        .chain(of_kind(GroupKind::PairRight).rev())
        .flat_map(|s| s.moves.iter().copied())
        .collect();
    SolveResult {
        k: part.k,
        path_length: part.path_length,
        segments,
        combined: Plan {
            initial: c.clone(),
            final_pegs: part.k,
            moves,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::build_language_nfa;

    fn cfg(s: &str) -> Configuration {
        s.parse().unwrap()
    }

    fn pieces(c: &Configuration, p: &Partition) -> Vec<String> {
        p.bounds
            .iter()
            .map(|&(a, b)| c.slice(a, b).to_string())
            .collect()
    }

    #[test]
    fn partition_examples() {
        let c = cfg("11011");
        let p = min_peg_partition(&c).unwrap();
        assert_eq!((p.k, p.path_length), (2, 7));
        assert_eq!(pieces(&c, &p), ["1101", "1"]);
        assert_eq!(min_peg_partition(&cfg("1111")).unwrap().k, 4);
        assert_eq!(min_peg_partition(&cfg("1011")).unwrap().k, 1);
        assert_eq!(min_peg_partition(&cfg("000")), Err(MinPegsError::NoPegs));
    }

    #[test]
    fn factorization_overcounts() {
        let nfa = build_language_nfa();
        for (s, factors, true_min) in [("01111", 3, 2), ("0111111", 5, 3), ("11011", 2, 2)] {
            let c = cfg(s);
            assert_eq!(factor_partition(&c, &nfa).unwrap().k, factors, "{s}");
            assert_eq!(min_peg_partition(&c).unwrap().k, true_min, "{s}");
        }
    }

    #[test]
    fn solve_min_examples() {
        let r = solve_min(&cfg("0000"));
        assert_eq!(r.k, 0);
        assert!(r.combined.moves.is_empty());

        let r = solve_min(&cfg("11"));
        assert_eq!(r.k, 2);
        assert_eq!(r.segments.len(), 2);
        assert!(r.combined.moves.is_empty());

        let r = solve_min(&cfg("110010101011"));
        assert_eq!(r.k, 1);
        assert_eq!(r.combined.moves.len(), 6);
        assert_eq!(r.combined.validate().unwrap().peg_count(), 1);

        let r = solve_min(&cfg("0111111"));
        assert_eq!(r.k, 3);
        r.combined.validate().unwrap();
    }

    #[test]
    fn json_shape() {
        let v: serde_json::Value =
            serde_json::from_str(&solve_min(&cfg("11011")).to_json()).unwrap();
        assert_eq!(v["k"], 2);
        assert_eq!(v["segments"][0]["cells"], "1101");
        assert_eq!(v["segments"][1]["kind"], "single");
    }
}
