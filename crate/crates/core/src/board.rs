//! Board representation and the hop / unhop primitives.
//!
//! A [`Configuration`] is the whole board: there are no cells beyond its
//! ends. Cells are indexed from 0; `Left` moves towards index 0.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One cell of the board.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Hole,
    Peg,
}

impl Cell {
    pub fn is_peg(self) -> bool {
        self == Cell::Peg
    }

    pub fn symbol(self) -> u8 {
        match self {
            Cell::Hole => 0,
            Cell::Peg => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Dir {
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R")]
    Right,
}

impl Dir {
    pub fn delta(self) -> isize {
        match self {
            Dir::Left => -1,
            Dir::Right => 1,
        }
    }

    pub fn flip(self) -> Dir {
        match self {
            Dir::Left => Dir::Right,
            Dir::Right => Dir::Left,
        }
    }

    fn letter(self) -> char {
        match self {
            Dir::Left => 'L',
            Dir::Right => 'R',
        }
    }
}

/// A hop: the peg at `from` jumps over its neighbour in direction `dir`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub from: usize,
    pub dir: Dir,
}

/// The reverse of a hop: the peg at `at` splits into the two cells on its
/// `dir` side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Unhop {
    pub at: usize,
    pub dir: Dir,
}

impl Move {
    pub fn new(from: usize, dir: Dir) -> Self {
        Move { from, dir }
    }

    /// Cell the jumper lands in. Only meaningful for in-bounds moves.
    pub fn landing(self) -> Option<usize> {
        offset(self.from, self.dir, 2)
    }

    /// The unhop that undoes this move.
    pub fn inverse(self) -> Option<Unhop> {
        self.landing().map(|at| Unhop {
            at,
            dir: self.dir.flip(),
        })
    }

    /// Index-mirrored image on a board of `len` cells.
    pub fn mirror(self, len: usize) -> Move {
        Move {
            from: len - 1 - self.from,
            dir: self.dir.flip(),
        }
    }

    pub fn shifted(self, by: usize) -> Move {
        Move {
            from: self.from + by,
            dir: self.dir,
        }
    }
}

impl Unhop {
    pub fn new(at: usize, dir: Dir) -> Self {
        Unhop { at, dir }
    }

    /// The hop that undoes this unhop.
    pub fn inverse(self) -> Option<Move> {
        offset(self.at, self.dir, 2).map(|from| Move {
            from,
            dir: self.dir.flip(),
        })
    }

    pub fn mirror(self, len: usize) -> Unhop {
        Unhop {
            at: len - 1 - self.at,
            dir: self.dir.flip(),
        }
    }

    pub fn shifted(self, by: usize) -> Unhop {
        Unhop {
            at: self.at + by,
            dir: self.dir,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.from, self.dir.letter())
    }
}

impl fmt::Display for Unhop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.at, self.dir.letter())
    }
}

impl FromStr for Move {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (digits, dir) = match s.as_bytes().last() {
            Some(b'L') => (&s[..s.len() - 1], Dir::Left),
            Some(b'R') => (&s[..s.len() - 1], Dir::Right),
            _ => return Err(ParseError::BadMove(s.to_string())),
        };
        let from = digits
            .parse()
            .map_err(|_| ParseError::BadMove(s.to_string()))?;
        Ok(Move { from, dir })
    }
}

fn offset(base: usize, dir: Dir, steps: usize) -> Option<usize> {
    match dir {
        Dir::Left => base.checked_sub(steps),
        Dir::Right => base.checked_add(steps),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty configuration")]
    Empty,
    #[error("invalid character {ch:?} at position {pos}; only '0' and '1' are allowed")]
    BadChar { ch: char, pos: usize },
    #[error("invalid move {0:?}; expected <index><L|R>")]
    BadMove(String),
}

/// Which legality clause a hop or unhop violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum IllegalMove {
    #[error("no peg at jumper cell {0}")]
    JumperMissing(usize),
    #[error("no peg to jump over at cell {0}")]
    VictimMissing(usize),
    #[error("landing cell {0} is occupied")]
    LandingOccupied(usize),
    #[error("move from {from} runs off the board of length {len}")]
    OutOfBounds { from: usize, len: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum IllegalUnhop {
    #[error("no peg at cell {0} to unhop")]
    PegMissing(usize),
    #[error("cell {0} must be a hole")]
    CellOccupied(usize),
    #[error("unhop at {at} runs off the board of length {len}")]
    OutOfBounds { at: usize, len: usize },
}

/// A full one-dimensional board.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Configuration {
    cells: Vec<Cell>,
}

impl Configuration {
    pub fn new(cells: Vec<Cell>) -> Self {
        Configuration { cells }
    }

    /// A board of `len` holes.
    pub fn empty(len: usize) -> Self {
        Configuration {
            cells: vec![Cell::Hole; len],
        }
    }

    /// A board of `len` cells with a single peg at `at`.
    pub fn single(len: usize, at: usize) -> Self {
        let mut c = Self::empty(len);
        c.cells[at] = Cell::Peg;
        c
    }

    /// Builds a board from the low `len` bits of `bits`, bit `i` giving cell `i`.
    pub fn from_bits(bits: u64, len: usize) -> Self {
        let cells = (0..len)
            .map(|i| {
                if bits >> i & 1 == 1 {
                    Cell::Peg
                } else {
                    Cell::Hole
                }
            })
            .collect();
        Configuration { cells }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        text.parse()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> Cell {
        self.cells[i]
    }

    pub fn is_peg(&self, i: usize) -> bool {
        self.cells.get(i).is_some_and(|c| c.is_peg())
    }

    fn is_hole(&self, i: usize) -> bool {
        self.cells.get(i).is_some_and(|c| !c.is_peg())
    }

    /// Cells as 0/1 symbols.
    pub fn symbols(&self) -> impl Iterator<Item = u8> + '_ {
        self.cells.iter().map(|c| c.symbol())
    }

    pub fn peg_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_peg()).count()
    }

    pub fn first_peg(&self) -> Option<usize> {
        self.cells.iter().position(|c| c.is_peg())
    }

    pub fn last_peg(&self) -> Option<usize> {
        self.cells.iter().rposition(|c| c.is_peg())
    }

    /// The window from the first peg to the last peg, and its offset.
    /// A board without pegs trims to the empty board at offset 0.
    pub fn trim(&self) -> (Configuration, usize) {
        match (self.first_peg(), self.last_peg()) {
            (Some(lo), Some(hi)) => (self.slice(lo, hi + 1), lo),
            _ => (Configuration::default(), 0),
        }
    }

    pub fn reverse(&self) -> Configuration {
        let mut cells = self.cells.clone();
        cells.reverse();
        Configuration { cells }
    }

    /// Cells `start..end` as a board of their own.
    pub fn slice(&self, start: usize, end: usize) -> Configuration {
        Configuration {
            cells: self.cells[start..end].to_vec(),
        }
    }

    /// Whether `m` is legal here, or the first clause it violates.
    pub fn check_move(&self, m: Move) -> Result<(), IllegalMove> {
        let len = self.len();
        let (victim, landing) = match (offset(m.from, m.dir, 1), offset(m.from, m.dir, 2)) {
            (Some(v), Some(l)) if m.from < len && l < len => (v, l),
            _ => return Err(IllegalMove::OutOfBounds { from: m.from, len }),
        };
        if !self.is_peg(m.from) {
            return Err(IllegalMove::JumperMissing(m.from));
        }
        if !self.is_peg(victim) {
            return Err(IllegalMove::VictimMissing(victim));
        }
        if !self.is_hole(landing) {
            return Err(IllegalMove::LandingOccupied(landing));
        }
        Ok(())
    }

    pub fn is_legal(&self, m: Move) -> bool {
        self.check_move(m).is_ok()
    }

    /// All legal hops, ordered by `(from, dir)`.
    pub fn legal_moves(&self) -> Vec<Move> {
        let mut out = Vec::new();
        for from in 0..self.len() {
            for dir in [Dir::Left, Dir::Right] {
                let m = Move { from, dir };
                if self.is_legal(m) {
                    out.push(m);
                }
            }
        }
        out
    }

    pub fn apply_move(&self, m: Move) -> Result<Configuration, IllegalMove> {
        let mut next = self.clone();
        next.play(m)?;
        Ok(next)
    }

    /// Applies `m` in place.
    pub fn play(&mut self, m: Move) -> Result<(), IllegalMove> {
        self.check_move(m)?;
        let d = m.dir.delta();
        let victim = m.from.wrapping_add_signed(d);
        let landing = victim.wrapping_add_signed(d);
        self.cells[m.from] = Cell::Hole;
        self.cells[victim] = Cell::Hole;
        self.cells[landing] = Cell::Peg;
        Ok(())
    }

    pub fn check_unhop(&self, u: Unhop) -> Result<(), IllegalUnhop> {
        let len = self.len();
        let (near, far) = match (offset(u.at, u.dir, 1), offset(u.at, u.dir, 2)) {
            (Some(n), Some(f)) if u.at < len && f < len => (n, f),
            _ => return Err(IllegalUnhop::OutOfBounds { at: u.at, len }),
        };
        if !self.is_peg(u.at) {
            return Err(IllegalUnhop::PegMissing(u.at));
        }
        if !self.is_hole(near) {
            return Err(IllegalUnhop::CellOccupied(near));
        }
        if !self.is_hole(far) {
            return Err(IllegalUnhop::CellOccupied(far));
        }
        Ok(())
    }

    pub fn apply_unhop(&self, u: Unhop) -> Result<Configuration, IllegalUnhop> {
        let mut next = self.clone();
        next.unplay(u)?;
        Ok(next)
    }

    /// Applies `u` in place.
    pub fn unplay(&mut self, u: Unhop) -> Result<(), IllegalUnhop> {
        self.check_unhop(u)?;
        let d = u.dir.delta();
        let near = u.at.wrapping_add_signed(d);
        let far = near.wrapping_add_signed(d);
        self.cells[u.at] = Cell::Hole;
        self.cells[near] = Cell::Peg;
        self.cells[far] = Cell::Peg;
        Ok(())
    }

    pub fn legal_unhops(&self) -> Vec<Unhop> {
        let mut out = Vec::new();
        for at in 0..self.len() {
            for dir in [Dir::Left, Dir::Right] {
                let u = Unhop { at, dir };
                if self.check_unhop(u).is_ok() {
                    out.push(u);
                }
            }
        }
        out
    }
}

impl FromStr for Configuration {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        if text.is_empty() {
            return Err(ParseError::Empty);
        }
        let cells = text
            .chars()
            .enumerate()
            .map(|(pos, ch)| match ch {
                '0' => Ok(Cell::Hole),
                '1' => Ok(Cell::Peg),
                _ => Err(ParseError::BadChar { ch, pos }),
            })
            .collect::<Result<_, _>>()?;
        Ok(Configuration { cells })
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .cells
            .iter()
            .map(|c| if c.is_peg() { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Configuration({self})")
    }
}

impl Serialize for Configuration {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Configuration {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
