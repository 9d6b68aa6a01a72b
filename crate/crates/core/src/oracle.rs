//! Exhaustive ground truth: memoized search over every hop sequence.
//!
//! Boards are packed into a `u64` (bit `i` is cell `i`), so the hard
//! ceiling is 64 cells. The default guard is much lower because the search
//! is exponential.

use std::collections::HashMap;

use thiserror::Error;

use crate::board::{Configuration, Dir, Move};

pub const DEFAULT_MAX_LEN: usize = 24;
pub const HARD_MAX_LEN: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(
        "board of length {len} exceeds the search guard of {max}; raise it explicitly to proceed"
    )]
    TooLong { len: usize, max: usize },
    #[error("peg count must be at least 1")]
    ZeroPegs,
    #[error("maximum length {maxlen} is smaller than the peg count {n}")]
    MaxLenTooSmall { n: usize, maxlen: usize },
}

/// Packed board: cell bits plus length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Packed {
    bits: u64,
    len: u8,
}

impl Packed {
    fn of(c: &Configuration) -> Packed {
        let bits = c
            .cells()
            .iter()
            .enumerate()
            .filter(|(_, cell)| cell.is_peg())
            .fold(0u64, |b, (i, _)| b | 1 << i);
        Packed {
            bits,
            len: c.len() as u8,
        }
    }

    fn pegs(self) -> usize {
        self.bits.count_ones() as usize
    }

    // Successors in (from, dir) order.
    fn moves(self) -> impl Iterator<Item = (Move, Packed)> {
        let len = self.len as usize;
        let bits = self.bits;
        (0..len).flat_map(move |from| {
            [Dir::Left, Dir::Right].into_iter().filter_map(move |dir| {
                let (victim, landing) = match dir {
                    Dir::Left if from >= 2 => (from - 1, from - 2),
                    Dir::Right if from + 2 < len => (from + 1, from + 2),
                    _ => return None,
                };
                let peg = |i: usize| bits >> i & 1 == 1;
                if peg(from) && peg(victim) && !peg(landing) {
                    let next = bits & !(1 << from) & !(1 << victim) | 1 << landing;
                    Some((
                        Move { from, dir },
                        Packed {
                            bits: next,
                            len: self.len,
                        },
                    ))
                } else {
                    None
                }
            })
        })
    }
}

/// Memo from exact board (holes at the ends included) to the minimum
/// reachable peg count.
#[derive(Debug, Clone)]
pub struct Oracle {
    cache: HashMap<Packed, u8>,
    max_len: usize,
    memoize: bool,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new()
    }
}

impl Oracle {
    pub fn new() -> Oracle {
        Oracle {
            cache: HashMap::new(),
            max_len: DEFAULT_MAX_LEN,
            memoize: true,
        }
    }

    /// Raises the length guard, up to the 64-cell packing limit.
    pub fn with_max_len(mut self, max_len: usize) -> Oracle {
        self.max_len = max_len.min(HARD_MAX_LEN);
        self
    }

    /// Plain exhaustive search with no memo; only usable on small boards.
    pub fn without_cache(mut self) -> Oracle {
        self.memoize = false;
        self
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.len()
    }

    fn guard(&self, c: &Configuration) -> Result<Packed, OracleError> {
        if c.len() > self.max_len {
            return Err(OracleError::TooLong {
                len: c.len(),
                max: self.max_len,
            });
        }
        Ok(Packed::of(c))
    }

    /// Fewest pegs any hop sequence can leave.
    pub fn min_pegs(&mut self, c: &Configuration) -> Result<usize, OracleError> {
        let p = self.guard(c)?;
        Ok(self.search(p) as usize)
    }

    pub fn solvable(&mut self, c: &Configuration) -> Result<bool, OracleError> {
        Ok(self.min_pegs(c)? == 1)
    }

    /// One optimal hop sequence, found by following the memo downhill.
    pub fn best_moves(&mut self, c: &Configuration) -> Result<Vec<Move>, OracleError> {
        let mut p = self.guard(c)?;
        let target = self.search(p);
        let mut moves = Vec::new();
        while p.pegs() as u8 > target {
            let (m, next) = p
                .moves()
                .find(|&(_, next)| self.search(next) == target)
                .expect("memo promises a move towards the optimum");
            moves.push(m);
            p = next;
        }
        Ok(moves)
    }

    fn search(&mut self, p: Packed) -> u8 {
        if self.memoize {
            if let Some(&v) = self.cache.get(&p) {
                return v;
            }
        }
        let mut best = p.pegs() as u8;
        for (_, next) in p.moves() {
            if best <= 1 {
                break;
            }
            best = best.min(self.search(next));
        }
        if self.memoize {
            self.cache.insert(p, best);
        }
        best
    }

    /// Trimmed boards with `n` pegs and length at most `maxlen` that are
    /// solvable once given the holes they need next to them: `t`, `0t` or
    /// `t0` reduces to one peg. `011` and `110` count once, as `11`.
    pub fn count_classes(&mut self, n: usize, maxlen: usize) -> Result<usize, OracleError> {
        Ok(self.solvable_classes(n, maxlen)?.len())
    }

    pub fn solvable_classes(
        &mut self,
        n: usize,
        maxlen: usize,
    ) -> Result<Vec<Configuration>, OracleError> {
        if n == 0 {
            return Err(OracleError::ZeroPegs);
        }
        if maxlen < n {
            return Err(OracleError::MaxLenTooSmall { n, maxlen });
        }
        if maxlen + 1 > self.max_len {
            return Err(OracleError::TooLong {
                len: maxlen + 1,
                max: self.max_len,
            });
        }
        let mut out = Vec::new();
        for t in trimmed_boards(n, maxlen) {
            let padded_left: Configuration = format!("0{t}").parse().unwrap();
            let padded_right: Configuration = format!("{t}0").parse().unwrap();
            if self.solvable(&t)? || self.solvable(&padded_left)? || self.solvable(&padded_right)? {
                out.push(t);
            }
        }
        out.sort();
        Ok(out)
    }
}

/// Every board that starts and ends with a peg, holds `n` pegs and has
/// length at most `maxlen`.
pub fn trimmed_boards(n: usize, maxlen: usize) -> Vec<Configuration> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    if n == 1 {
        out.push(Configuration::single(1, 0));
        return out;
    }
    for len in n..=maxlen {
        let inner = len - 2;
        for mask in 0u64..(1u64 << inner) {
            if mask.count_ones() as usize == n - 2 {
                let bits = 1 | mask << 1 | 1 << (len - 1);
                out.push(Configuration::from_bits(bits, len));
            }
        }
    }
    out
}

/// Fresh-memo convenience wrapper.
pub fn oracle_min_pegs(c: &Configuration) -> Result<usize, OracleError> {
    Oracle::new().min_pegs(c)
}

pub fn oracle_solvable(c: &Configuration) -> Result<bool, OracleError> {
    Oracle::new().solvable(c)
}

pub fn oracle_count_classes(n: usize, maxlen: usize) -> Result<usize, OracleError> {
    Oracle::new().count_classes(n, maxlen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(s: &str) -> Configuration {
        s.parse().unwrap()
    }

    #[test]
    fn min_pegs_examples() {
        assert_eq!(oracle_min_pegs(&cfg("1011")), Ok(1));
        assert_eq!(oracle_min_pegs(&cfg("11011")), Ok(2));
        assert_eq!(oracle_min_pegs(&cfg("11")), Ok(2));
        assert_eq!(oracle_min_pegs(&cfg("0000")), Ok(0));
    }

    #[test]
    fn solvable_examples() {
        assert_eq!(oracle_solvable(&cfg("110011")), Ok(true));
        assert_eq!(oracle_solvable(&cfg("1111")), Ok(false));
        assert_eq!(oracle_solvable(&cfg("1")), Ok(true));
    }

    #[test]
    fn class_counts() {
        assert_eq!(oracle_count_classes(4, 10), Ok(3));
        assert_eq!(oracle_count_classes(1, 4), Ok(1));
        assert_eq!(oracle_count_classes(2, 6), Ok(1));
        assert_eq!(oracle_count_classes(6, 14), Ok(9));
        assert_eq!(oracle_count_classes(0, 4), Err(OracleError::ZeroPegs));
        assert_eq!(
            oracle_count_classes(5, 4),
            Err(OracleError::MaxLenTooSmall { n: 5, maxlen: 4 })
        );
    }

    #[test]
    fn guard_and_override() {
        let long = Configuration::single(30, 3);
        assert_eq!(
            oracle_min_pegs(&long),
            Err(OracleError::TooLong { len: 30, max: 24 })
        );
        assert_eq!(Oracle::new().with_max_len(40).min_pegs(&long), Ok(1));
    }

    #[test]
    fn cache_on_and_off_agree() {
        let mut memo = Oracle::new();
        let mut plain = Oracle::new().without_cache();
        for len in 1..=9 {
            for b in 0u64..(1 << len) {
                let c = Configuration::from_bits(b, len);
                assert_eq!(memo.min_pegs(&c), plain.min_pegs(&c), "{c}");
            }
        }
        assert_eq!(plain.cached_entries(), 0);
    }

    #[test]
    fn best_moves_reach_the_minimum() {
        let mut oracle = Oracle::new();
        for s in ["01111", "110010101011", "0111111", "11011"] {
            let c = cfg(s);
            let k = oracle.min_pegs(&c).unwrap();
            let mut cur = c.clone();
            for m in oracle.best_moves(&c).unwrap() {
                cur.play(m).unwrap();
            }
            assert_eq!(cur.peg_count(), k, "{s}");
        }
    }

    #[test]
    fn trimmed_board_shapes() {
        let boards: Vec<String> = trimmed_boards(3, 5).iter().map(|c| c.to_string()).collect();
        assert_eq!(boards, ["111", "1101", "1011", "11001", "10101", "10011"]);
    }
}
